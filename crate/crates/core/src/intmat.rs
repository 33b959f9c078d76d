//! Small dense integer matrices: products, powers, minors and polynomial determinants.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::IntPoly;
use crate::error::{Error, Result};

/// Row-major integer matrix. Arithmetic is overflow-checked.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Result<Self> {
        let ncols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Shape("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols: ncols,
            data: rows.concat(),
        })
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<i64>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries cannot fill a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(IntMatrix { rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: i64) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[i64] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..rhs.cols {
                    let idx = i * out.cols + j;
                    out.data[idx] = a
                        .checked_mul(rhs.get(k, j))
                        .and_then(|p| out.data[idx].checked_add(p))
                        .ok_or(Error::Overflow("matrix product"))?;
                }
            }
        }
        Ok(out)
    }

    pub fn pow(&self, mut e: u64) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("power of a non-square matrix".into()));
        }
        let mut base = self.clone();
        let mut acc = Self::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn trace(&self) -> i64 {
        (0..self.rows.min(self.cols)).map(|i| self.get(i, i)).sum()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.rows) && self.is_square()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if !self.is_square() {
            return Err(Error::Shape("determinant of a non-square matrix".into()));
        }
        let polys: Vec<Vec<IntPoly>> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| IntPoly::constant(v.into()))
                    .collect()
            })
            .collect();
        Ok(poly_det(polys).coeff(0))
    }

    /// Rank over `Q`.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<Vec<BigRational>> = (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .map(|&v| BigRational::from_integer(v.into()))
                    .collect()
            })
            .collect();
        rational_row_reduce(&mut rows, self.cols)
    }

    /// The `r`-th compound matrix: entry `(I, J)` is the minor on rows `I`
    /// and columns `J`, with index sets in lexicographic order.
    ///
    /// This is the matrix of `Λ^r` of the linear map in the wedge basis
    /// `e_J = e_{j_1} ∧ … ∧ e_{j_r}`.
    pub fn compound(&self, r: usize) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::Shape("compound of a non-square matrix".into()));
        }
        let subsets = lex_subsets(self.rows, r);
        let size = subsets.len();
        let mut out = Self::zeros(size, size);
        for (a, rows_i) in subsets.iter().enumerate() {
            for (b, cols_j) in subsets.iter().enumerate() {
                let minor = IntMatrix {
                    rows: r,
                    cols: r,
                    data: rows_i
                        .iter()
                        .flat_map(|&i| cols_j.iter().map(move |&j| (i, j)))
                        .map(|(i, j)| self.get(i, j))
                        .collect(),
                };
                let d = minor.det()?;
                out.set(a, b, d.to_i64().ok_or(Error::Overflow("compound minor"))?);
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

/// All `r`-element subsets of `0..m`, each sorted, in lexicographic order.
pub(crate) fn lex_subsets(m: usize, r: usize) -> Vec<Vec<usize>> {
    (0..m).combinations(r).collect()
}

pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Reduces rows in place to echelon form over `Q` and returns the rank.
pub(crate) fn rational_row_reduce(rows: &mut [Vec<BigRational>], cols: usize) -> usize {
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].recip();
        for v in rows[rank].iter_mut() {
            *v *= &inv;
        }
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r == rank || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (dst, pv) in row.iter_mut().zip(&pivot) {
                *dst -= &f * pv;
            }
        }
        rank += 1;
    }
    rank
}

/// Determinant of a square matrix over `Z[t]` by Bareiss elimination.
///
/// Every division performed is exact in `Z[t]`; row swaps are used only when
/// a pivot vanishes.
pub(crate) fn poly_det(mut m: Vec<Vec<IntPoly>>) -> IntPoly {
    let n = m.len();
    if n == 0 {
        return IntPoly::one();
    }
    let mut sign = false;
    let mut prev = IntPoly::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign = !sign;
                }
                None => return IntPoly::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[i][j] * &m[k][k]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss quotients are exact");
            }
            m[i][k] = IntPoly::zero();
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign {
        -&d
    } else {
        d
    }
}

/// `det(I + t·M)` as a polynomial in `t`; its `t^r` coefficient is the
/// trace of `Λ^r M`.
pub(crate) fn det_one_plus_t(m: &IntMatrix) -> IntPoly {
    let n = m.rows();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    };
                    IntPoly::new(vec![diag, BigInt::from(m.get(i, j))])
                })
                .collect()
        })
        .collect();
    poly_det(entries)
}

/// `det(x·I - M)`.
pub(crate) fn char_poly(m: &IntMatrix) -> IntPoly {
    let n = m.rows();
    let entries = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let diag = if i == j {
                        BigInt::one()
                    } else {
                        BigInt::zero()
                    };
                    IntPoly::new(vec![BigInt::from(-m.get(i, j)), diag])
                })
                .collect()
        })
        .collect();
    poly_det(entries)
}
