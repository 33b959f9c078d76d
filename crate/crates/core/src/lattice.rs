//! Lattices carrying an integer action of a finite cyclic group.
//!
//! The action matrix uses the column convention: column `i` holds the
//! coordinates of `g·b_i` in the basis `b_1, …, b_m`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::IntPoly;
use crate::error::{out_of_range, Error, Result};
use crate::intmat::{char_poly, rational_row_reduce, IntMatrix};

/// A free abelian group of rank `m`, embedded in `Z^ambient` through its
/// basis rows, with a generator `g` of `Z/order` acting by `action`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LatticeRep {
    basis: IntMatrix,
    action: IntMatrix,
    order: u32,
}

impl LatticeRep {
    /// Validates `action^order = I` and the independence of the basis rows.
    pub fn new(basis: IntMatrix, action: IntMatrix, order: u32) -> Result<Self> {
        if order == 0 {
            return Err(out_of_range("order", 0, ">= 1"));
        }
        if !action.is_square() || action.rows() != basis.rows() {
            return Err(Error::Shape(format!(
                "action is {}x{} but the basis has {} rows",
                action.rows(),
                action.cols(),
                basis.rows()
            )));
        }
        if !action.pow(order as u64)?.is_identity() {
            return Err(Error::NotFiniteOrder { order });
        }
        if basis.rank() != basis.rows() {
            return Err(Error::DependentBasis);
        }
        Ok(LatticeRep {
            basis,
            action,
            order,
        })
    }

    /// A lattice given only by its action; the basis is the standard one.
    pub fn from_action(action: IntMatrix, order: u32) -> Result<Self> {
        let basis = IntMatrix::identity(action.rows());
        Self::new(basis, action, order)
    }

    /// Restricts an ambient action to the sublattice spanned by `basis`.
    ///
    /// Fails if the sublattice is not stable under `ambient`.
    pub fn from_ambient_action(basis: IntMatrix, ambient: &IntMatrix, order: u32) -> Result<Self> {
        if ambient.rows() != basis.cols() || !ambient.is_square() {
            return Err(Error::Shape(
                "ambient action does not match basis width".into(),
            ));
        }
        if basis.rank() != basis.rows() {
            return Err(Error::DependentBasis);
        }
        let m = basis.rows();
        let mut action = IntMatrix::zeros(m, m);
        for i in 0..m {
            let image = ambient.mul(&IntMatrix::from_row_major(
                basis.cols(),
                1,
                basis.row(i).to_vec(),
            )?)?;
            let image: Vec<i64> = (0..image.rows()).map(|r| image.get(r, 0)).collect();
            let coords = coordinates(&basis, &image)?;
            for (j, c) in coords.into_iter().enumerate() {
                action.set(j, i, c);
            }
        }
        Self::new(basis, action, order)
    }

    /// `A = {a ∈ Z^n : Σ a_i = 0}` with basis `e_i - e_{i+1}` and the n-cycle
    /// `e_i ↦ e_{i+1}` (indices mod n) as generator.
    pub fn standard_a(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(out_of_range("n", n as i64, ">= 2"));
        }
        let n = n as usize;
        let mut basis = IntMatrix::zeros(n - 1, n);
        for i in 0..n - 1 {
            basis.set(i, i, 1);
            basis.set(i, i + 1, -1);
        }
        Self::from_ambient_action(basis, &cycle_matrix(n), n as u32)
    }

    /// The same representation in the basis `rows(U · B)`; `U` must be unimodular.
    pub fn change_basis(&self, u: &IntMatrix) -> Result<Self> {
        let m = self.rank();
        if u.rows() != m || !u.is_square() {
            return Err(Error::Shape("basis change must be m x m".into()));
        }
        if u.det()?.abs() != BigInt::from(1) {
            return Err(Error::Invalid("basis change is not unimodular".into()));
        }
        let new_basis = u.mul(&self.basis)?;
        // ambient images of the old basis vectors: g·b_k = Σ_l action[l][k] b_l
        let images = self.action.transpose().mul(&self.basis)?;
        let mut action = IntMatrix::zeros(m, m);
        for i in 0..m {
            let mut v = vec![0i64; self.ambient_dim()];
            for k in 0..m {
                let c = u.get(i, k);
                for (dst, x) in v.iter_mut().zip(images.row(k)) {
                    *dst = c
                        .checked_mul(*x)
                        .and_then(|p| dst.checked_add(p))
                        .ok_or(Error::Overflow("basis change"))?;
                }
            }
            for (j, c) in coordinates(&new_basis, &v)?.into_iter().enumerate() {
                action.set(j, i, c);
            }
        }
        Self::new(new_basis, action, self.order)
    }

    pub fn rank(&self) -> usize {
        self.action.rows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn basis(&self) -> &IntMatrix {
        &self.basis
    }

    pub fn action(&self) -> &IntMatrix {
        &self.action
    }

    /// `action^k` with `k` reduced modulo the group order.
    pub fn action_power(&self, k: i64) -> IntMatrix {
        let e = k.rem_euclid(self.order as i64) as u64;
        self.action
            .pow(e)
            .expect("powers of a finite-order matrix stay bounded by its validated cycle")
    }

    /// Trace of `g^k`, i.e. the character of `L ⊗ C` at `g^k`.
    pub fn trace_power(&self, k: i64) -> i64 {
        self.action_power(k).trace()
    }

    /// The contragredient representation on `Hom(L, Z)`: the action becomes
    /// the inverse transpose. Basis rows are carried over unchanged as labels
    /// of the dual basis, so dualizing twice returns the original value.
    pub fn dual(&self) -> Self {
        let inverse = self.action_power(-1);
        LatticeRep {
            basis: self.basis.clone(),
            action: inverse.transpose(),
            order: self.order,
        }
    }

    pub fn characteristic_polynomial(&self) -> IntPoly {
        char_poly(&self.action)
    }

    /// The `{rank, order, action}` description used by the file format.
    pub fn to_spec(&self) -> LatticeSpec {
        LatticeSpec {
            rank: self.rank(),
            order: self.order,
            action: ActionEntries::Flat(self.action.to_rows().concat()),
        }
    }
}

/// Free function form of [`LatticeRep::standard_a`].
pub fn standard_a(n: u32) -> Result<LatticeRep> {
    LatticeRep::standard_a(n)
}

/// Free function form of [`LatticeRep::trace_power`].
pub fn trace_power(l: &LatticeRep, k: i64) -> i64 {
    l.trace_power(k)
}

/// Free function form of [`LatticeRep::dual`].
pub fn dual_action(l: &LatticeRep) -> LatticeRep {
    l.dual()
}

/// Permutation matrix of `e_i ↦ e_{i+1 mod n}`.
pub(crate) fn cycle_matrix(n: usize) -> IntMatrix {
    let mut p = IntMatrix::zeros(n, n);
    for i in 0..n {
        p.set((i + 1) % n, i, 1);
    }
    p
}

/// Integer coordinates of `v` with respect to the rows of `basis`.
fn coordinates(basis: &IntMatrix, v: &[i64]) -> Result<Vec<i64>> {
    let m = basis.rows();
    let dim = basis.cols();
    // solve Σ_j x_j b_j = v: rows are ambient coordinates, columns are x_j | v
    let mut rows: Vec<Vec<BigRational>> = (0..dim)
        .map(|c| {
            (0..m)
                .map(|j| basis.get(j, c))
                .chain(std::iter::once(v[c]))
                .map(|x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    let rank = rational_row_reduce(&mut rows, m + 1);
    // the augmented column is a pivot iff v is outside the span
    if rows[..rank]
        .iter()
        .any(|r| r[..m].iter().all(Zero::is_zero) && !r[m].is_zero())
    {
        return Err(Error::NotInLattice);
    }
    let mut x = vec![0i64; m];
    for row in &rows[..rank] {
        let Some(p) = row[..m].iter().position(|c| !c.is_zero()) else {
            continue;
        };
        let val = &row[m];
        if !val.is_integer() {
            return Err(Error::NotInLattice);
        }
        x[p] = val
            .to_integer()
            .to_i64()
            .ok_or(Error::Overflow("lattice coordinates"))?;
    }
    Ok(x)
}

/// Row-major matrix entries, accepted either flat or as nested rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ActionEntries {
    Flat(Vec<i64>),
    Nested(Vec<Vec<i64>>),
}

/// JSON description `{rank, order, action}` of a lattice with a cyclic action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeSpec {
    pub rank: usize,
    pub order: u32,
    pub action: ActionEntries,
}

impl LatticeSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::Invalid(format!("lattice file: {e}")))
    }

    /// Validates the description (shape and `action^order = I`).
    pub fn to_lattice(&self) -> Result<LatticeRep> {
        let action = match &self.action {
            ActionEntries::Flat(v) => IntMatrix::from_row_major(self.rank, self.rank, v.clone())?,
            ActionEntries::Nested(rows) => {
                if rows.len() != self.rank {
                    return Err(Error::Shape(format!(
                        "rank is {} but the action has {} rows",
                        self.rank,
                        rows.len()
                    )));
                }
                let m = IntMatrix::from_rows(rows)?;
                if rows.is_empty() {
                    IntMatrix::zeros(0, 0)
                } else if m.cols() != self.rank {
                    return Err(Error::Shape("action must be rank x rank".into()));
                } else {
                    m
                }
            }
        };
        LatticeRep::from_action(action, self.order)
    }
}
