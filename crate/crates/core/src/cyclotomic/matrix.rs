use std::fmt;

use num_rational::BigRational;

use super::field::CycNum;
use crate::error::{Error, Result};

/// Dense row-major matrix over a single cyclotomic field.
#[derive(Clone, PartialEq, Eq)]
pub struct CycMatrix {
    order: u32,
    rows: usize,
    cols: usize,
    entries: Vec<CycNum>,
}

impl CycMatrix {
    pub fn zeros(order: u32, rows: usize, cols: usize) -> Self {
        CycMatrix {
            order,
            rows,
            cols,
            entries: vec![CycNum::zero(order); rows * cols],
        }
    }

    pub fn identity(order: u32, size: usize) -> Self {
        let mut m = Self::zeros(order, size, size);
        for i in 0..size {
            m.entries[i * size + i] = CycNum::one(order);
        }
        m
    }

    /// Builds a matrix from rows; every entry must have the given order.
    pub fn from_rows(order: u32, rows: Vec<Vec<CycNum>>) -> Result<Self> {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(nrows * ncols);
        for row in rows {
            if row.len() != ncols {
                return Err(Error::Shape("ragged rows".into()));
            }
            for e in row {
                if e.order() != order {
                    return Err(Error::OrderMismatch {
                        left: order,
                        right: e.order(),
                    });
                }
                entries.push(e);
            }
        }
        Ok(CycMatrix {
            order,
            rows: nrows,
            cols: ncols,
            entries,
        })
    }

    pub fn from_int_rows(order: u32, rows: &[Vec<i64>]) -> Result<Self> {
        Self::from_rows(
            order,
            rows.iter()
                .map(|r| r.iter().map(|&v| CycNum::from_int(order, v)).collect())
                .collect(),
        )
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &CycNum {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: CycNum) {
        assert_eq!(v.order(), self.order, "cyclotomic order mismatch");
        self.entries[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycNum::is_zero)
    }

    pub fn mul(&self, rhs: &CycMatrix) -> Result<CycMatrix> {
        if self.order != rhs.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: rhs.order,
            });
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.order, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        let idx = i * out.cols + j;
                        out.entries[idx] = &out.entries[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn trace(&self) -> CycNum {
        (0..self.rows.min(self.cols)).fold(CycNum::zero(self.order), |acc, i| &acc + self.get(i, i))
    }

    pub fn scale(&self, s: &BigRational) -> CycMatrix {
        CycMatrix {
            order: self.order,
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().map(|e| e.scale(s)).collect(),
        }
    }

    /// Rank over `Q(ζ_n)` by Gaussian elimination.
    ///
    /// Pivots are the first nonzero entry of each column, scanning rows top to
    /// bottom, so the elimination order is fully deterministic.
    pub fn exact_rank(&self) -> usize {
        let mut rows: Vec<Vec<CycNum>> = self
            .entries
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[CycNum]>::to_vec)
            .collect();
        let mut rank = 0;
        for col in 0..self.cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = rows[rank][col].inv().expect("pivot is nonzero");
            let pivot_row: Vec<CycNum> = rows[rank][col..].iter().map(|e| e * &inv).collect();
            for row in rows.iter_mut().skip(rank + 1) {
                let f = row[col].clone();
                if f.is_zero() {
                    continue;
                }
                for (k, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        row[col + k] = &row[col + k] - &(&f * pv);
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }
}

impl fmt::Debug for CycMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "CycMatrix[{}] {}x{}", self.order, self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::zeta_pow;

    #[test]
    fn rank_examples() {
        assert_eq!(CycMatrix::zeros(5, 3, 4).exact_rank(), 0);
        assert_eq!(CycMatrix::zeros(5, 0, 0).exact_rank(), 0);
        for m in 0..6 {
            assert_eq!(CycMatrix::identity(7, m).exact_rank(), m);
        }
        let m = CycMatrix::from_rows(
            3,
            vec![
                vec![CycNum::one(3), zeta_pow(3, 1)],
                vec![zeta_pow(3, 2), CycNum::one(3)],
            ],
        )
        .unwrap();
        assert_eq!(m.exact_rank(), 1);
    }

    #[test]
    fn rank_needs_row_swap() {
        let m =
            CycMatrix::from_int_rows(4, &[vec![0, 1, 2], vec![1, 0, 0], vec![1, 1, 2]]).unwrap();
        assert_eq!(m.exact_rank(), 2);
    }

    #[test]
    fn rank_over_the_field_not_over_q() {
        // rows (1, ζ) and (ζ, ζ^2) are dependent over Q(ζ_5)
        let z = zeta_pow(5, 1);
        let m = CycMatrix::from_rows(
            5,
            vec![vec![CycNum::one(5), z.clone()], vec![z.clone(), &z * &z]],
        )
        .unwrap();
        assert_eq!(m.exact_rank(), 1);
    }

    #[test]
    fn from_rows_rejects_mixed_orders() {
        let r = CycMatrix::from_rows(3, vec![vec![CycNum::one(3), CycNum::one(4)]]);
        assert!(matches!(r, Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn product_and_trace() {
        let a = CycMatrix::from_int_rows(6, &[vec![1, 2], vec![3, 4]]).unwrap();
        let b = a.mul(&a).unwrap();
        assert_eq!(
            b,
            CycMatrix::from_int_rows(6, &[vec![7, 10], vec![15, 22]]).unwrap()
        );
        assert_eq!(b.trace(), CycNum::from_int(6, 29));
    }
}
