//! Brute-force group cohomology.
//!
//! For a lattice `L ≅ Z^m` and a character `χ`, `H^*(L, χ)` is computed from
//! the Koszul cochain complex `Λ^0 → Λ^1 → … → Λ^m` of `C^m` whose
//! differential is `ω ↦ v ∧ ω` with `v_i = χ(b_i) - 1`.
//!
//! For `H = L ⋊ Z/n` and a character of `H` trivial on `L`,
//! `H^i(H, C_η) = H^i(L, C)^{[η]}`, which is read off as the rank of the
//! `η`-isotypic projector on `Λ^i` of the dual lattice.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::cyclotomic::{zeta_pow, CycMatrix, CycNum};
use crate::error::{out_of_range, Error, Result};
use crate::intmat::{binomial, lex_subsets, IntMatrix};
use crate::lattice::LatticeRep;

/// Cochain complex computing `H^*(Z^m, χ)`.
#[derive(Debug, Clone)]
pub struct KoszulComplex {
    order: u32,
    rank: usize,
    char_values: Vec<CycNum>,
    /// `differentials[r]` maps `Λ^r` to `Λ^{r+1}`, for `r = 0..m`.
    differentials: Vec<CycMatrix>,
}

impl KoszulComplex {
    /// Builds the complex for `χ(b_i) = char_values[i]`; every value must be
    /// a root of unity in `Q(ζ_order)`.
    pub fn new(order: u32, char_values: Vec<CycNum>) -> Result<Self> {
        for (index, v) in char_values.iter().enumerate() {
            if v.order() != order {
                return Err(Error::OrderMismatch {
                    left: order,
                    right: v.order(),
                });
            }
            if !v.is_root_of_unity() {
                return Err(Error::NotRootOfUnity { index });
            }
        }
        let rank = char_values.len();
        let one = CycNum::one(order);
        let v: Vec<CycNum> = char_values.iter().map(|c| c - &one).collect();
        let differentials = (0..rank)
            .map(|r| wedge_matrix(order, rank, r, &v))
            .collect();
        Ok(KoszulComplex {
            order,
            rank,
            char_values,
            differentials,
        })
    }

    /// `χ(b_i) = ζ_order^{exponents[i]}`.
    pub fn from_exponents(order: u32, exponents: &[i64]) -> Result<Self> {
        Self::new(
            order,
            exponents.iter().map(|&e| zeta_pow(order, e)).collect(),
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn char_values(&self) -> &[CycNum] {
        &self.char_values
    }

    /// The differential `Λ^r → Λ^{r+1}`, or `None` for `r >= m`.
    pub fn differential(&self, r: usize) -> Option<&CycMatrix> {
        self.differentials.get(r)
    }

    /// Checks `d_{r+1} ∘ d_r = 0` for every `r`.
    pub fn check_d_squared(&self) -> bool {
        self.differentials
            .windows(2)
            .all(|w| w[1].mul(&w[0]).map(|p| p.is_zero()).unwrap_or(false))
    }

    /// `dim H^r` for `r = 0..=m`.
    pub fn cohomology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self
            .differentials
            .iter()
            .map(CycMatrix::exact_rank)
            .collect();
        (0..=self.rank)
            .map(|r| {
                let dim = binomial(self.rank, r) as usize;
                let outgoing = ranks.get(r).copied().unwrap_or(0);
                let incoming = if r == 0 { 0 } else { ranks[r - 1] };
                dim - outgoing - incoming
            })
            .collect()
    }
}

/// Matrix of `ω ↦ v ∧ ω` from `Λ^r` to `Λ^{r+1}` in lexicographic wedge bases.
fn wedge_matrix(order: u32, m: usize, r: usize, v: &[CycNum]) -> CycMatrix {
    let src = lex_subsets(m, r);
    let dst = lex_subsets(m, r + 1);
    let mut out = CycMatrix::zeros(order, dst.len(), src.len());
    for (col, subset) in src.iter().enumerate() {
        for (i, vi) in v.iter().enumerate() {
            if subset.contains(&i) || vi.is_zero() {
                continue;
            }
            // moving e_i past the smaller indices of the subset
            let before = subset.iter().filter(|&&s| s < i).count();
            let mut target = subset.clone();
            target.insert(before, i);
            let row = dst.binary_search(&target).expect("target subset exists");
            let entry = if before % 2 == 0 { vi.clone() } else { -vi };
            out.set(row, col, entry);
        }
    }
    out
}

/// `dim H^i(L, χ)` for `i = 0..=rank(L)`, where `chi[i]` is the value of the
/// character on the `i`-th basis vector of `L`.
pub fn lattice_cohomology_dims(l: &LatticeRep, chi: &[CycNum]) -> Result<Vec<usize>> {
    if chi.len() != l.rank() {
        return Err(Error::Shape(format!(
            "character has {} values but the lattice has rank {}",
            chi.len(),
            l.rank()
        )));
    }
    let order = chi.first().map_or(l.order(), CycNum::order);
    Ok(KoszulComplex::new(order, chi.to_vec())?.cohomology_dims())
}

/// The projector `(1/n) Σ_k ζ_n^{-ηk} Λ^i(g^k)` on `Λ^i` of the dual of `L`,
/// where `n` is the group order of `L`.
pub fn isotypic_projector(l: &LatticeRep, eta: i64, i: usize) -> Result<CycMatrix> {
    if i > l.rank() {
        return Err(out_of_range("i", i as i64, format!("0..={}", l.rank())));
    }
    let n = l.order();
    let generator = l.dual().action().compound(i)?;
    let size = generator.rows();
    // weights[a][b][e] accumulates the coefficient of ζ^e in entry (a, b)
    let mut weights = vec![vec![BigInt::from(0); n as usize]; size * size];
    let mut power = IntMatrix::identity(size);
    for k in 0..n as i64 {
        let e = (-eta * k).rem_euclid(n as i64) as usize;
        for a in 0..size {
            for b in 0..size {
                let v = power.get(a, b);
                if v != 0 {
                    weights[a * size + b][e] += v;
                }
            }
        }
        power = power.mul(&generator)?;
    }
    let scale = BigRational::new(1.into(), BigInt::from(n));
    let mut p = CycMatrix::zeros(n, size, size);
    for a in 0..size {
        for b in 0..size {
            let w = &weights[a * size + b];
            if w.iter().any(|x| *x != BigInt::from(0)) {
                p.set(a, b, CycNum::from_power_weights(n, w).scale(&scale));
            }
        }
    }
    Ok(p)
}

/// `dim H^i(L ⋊ Z/n, C_η)` for the character of the semidirect product that
/// is trivial on `L` and sends the generator of `Z/n` to `ζ_n^η`.
///
/// Equal to the dimension of the `η`-isotypic component of `Λ^i(L^∨ ⊗ C)`,
/// computed as the exact rank of [`isotypic_projector`].
pub fn semidirect_cohomology_dim(l: &LatticeRep, eta: i64, i: usize) -> Result<usize> {
    Ok(isotypic_projector(l, eta, i)?.exact_rank())
}
