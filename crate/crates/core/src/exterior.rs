//! Characters of exterior powers of lattice representations and their
//! isotypic multiplicities.

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use crate::cyclotomic::{CycNum, IntPoly};
use crate::error::{out_of_range, Error, Result};
use crate::intmat::det_one_plus_t;
use crate::lattice::LatticeRep;

/// Multiplicities of the characters `j ∈ Z/n` in `Λ^r` of a representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicVector {
    pub n: u32,
    pub r: usize,
    pub mults: Vec<u64>,
}

impl IsotypicVector {
    pub fn total(&self) -> u64 {
        self.mults.iter().sum()
    }

    pub fn get(&self, j: i64) -> u64 {
        self.mults[j.rem_euclid(self.n as i64) as usize]
    }
}

fn check_degree(l: &LatticeRep, r: usize) -> Result<()> {
    if r > l.rank() {
        return Err(out_of_range("r", r as i64, format!("0..={}", l.rank())));
    }
    Ok(())
}

/// `det(I + t·g^k)`; the coefficient of `t^r` is the character of `Λ^r` at `g^k`.
fn exterior_generating_poly(l: &LatticeRep, k: i64) -> IntPoly {
    det_one_plus_t(&l.action_power(k))
}

/// Character of `Λ^r(L ⊗ C)` at `g^k`, i.e. the `r`-th elementary symmetric
/// function of the eigenvalues of `g^k`.
pub fn exterior_char(l: &LatticeRep, r: usize, k: i64) -> Result<CycNum> {
    check_degree(l, r)?;
    let value = exterior_generating_poly(l, k).coeff(r);
    Ok(CycNum::from_bigint(l.order(), value))
}

fn project(l: &LatticeRep, chars: &[BigInt], j: i64) -> Result<u64> {
    let n = l.order() as i64;
    let weight = |c: &BigInt| BigRational::new(c.clone(), BigInt::from(n));
    let sum = CycNum::from_exponent_terms(
        l.order(),
        chars
            .iter()
            .enumerate()
            .map(|(k, c)| (-j * k as i64, weight(c))),
    );
    let value = sum.to_integer().ok_or_else(|| {
        Error::Internal(format!(
            "isotypic projection for j = {j} is not an integer: {sum}"
        ))
    })?;
    if value.is_negative() {
        return Err(Error::Internal(format!(
            "isotypic projection for j = {j} is negative: {value}"
        )));
    }
    value.to_u64().ok_or(Error::Overflow("multiplicity"))
}

/// Multiplicity of the character `g ↦ ζ^j` in `Λ^r(L ⊗ C)`:
/// `(1/n) Σ_k χ_{Λ^r}(g^k) ζ^{-jk}`.
pub fn isotypic_mult(l: &LatticeRep, r: usize, j: i64) -> Result<u64> {
    check_degree(l, r)?;
    let chars: Vec<BigInt> = (0..l.order() as i64)
        .map(|k| exterior_generating_poly(l, k).coeff(r))
        .collect();
    project(l, &chars, j)
}

/// All multiplicities of `Λ^r(L ⊗ C)` at once.
pub fn isotypic_vector(l: &LatticeRep, r: usize) -> Result<IsotypicVector> {
    check_degree(l, r)?;
    let n = l.order();
    let chars: Vec<BigInt> = (0..n as i64)
        .map(|k| exterior_generating_poly(l, k).coeff(r))
        .collect();
    let mults = (0..n as i64)
        .map(|j| project(l, &chars, j))
        .collect::<Result<Vec<_>>>()?;
    Ok(IsotypicVector { n, r, mults })
}

/// `isotypic_vector(l, r)` for every `r = 0..=rank`, sharing the character
/// computation across degrees.
pub fn isotypic_table(l: &LatticeRep) -> Result<Vec<IsotypicVector>> {
    let n = l.order();
    let polys: Vec<IntPoly> = (0..n as i64)
        .map(|k| exterior_generating_poly(l, k))
        .collect();
    (0..=l.rank())
        .map(|r| {
            let chars: Vec<BigInt> = polys.iter().map(|p| p.coeff(r)).collect();
            let mults = (0..n as i64)
                .map(|j| project(l, &chars, j))
                .collect::<Result<Vec<_>>>()?;
            Ok(IsotypicVector { n, r, mults })
        })
        .collect()
}

/// Number of `r`-element subsets `S ⊆ {1, …, n-1}` with `Σ S ≡ j (mod n)`.
///
/// `Λ^r` of the sum of all nontrivial characters of `Z/n` decomposes into
/// the products of `r` distinct nontrivial characters, so this counts the
/// multiplicity of the character `j`.
pub fn subset_sum_mult(n: u32, r: usize, j: i64) -> Result<u64> {
    Ok(subset_sum_vector(n, r)?.get(j))
}

/// [`subset_sum_mult`] for every residue `j`.
pub fn subset_sum_vector(n: u32, r: usize) -> Result<IsotypicVector> {
    if n < 2 {
        return Err(out_of_range("n", n as i64, ">= 2"));
    }
    if r > n as usize - 1 {
        return Err(out_of_range("r", r as i64, format!("0..={}", n - 1)));
    }
    let mut mults = vec![0u64; n as usize];
    for subset in (1..n as u64).combinations(r) {
        let s: u64 = subset.iter().sum();
        mults[(s % n as u64) as usize] += 1;
    }
    Ok(IsotypicVector { n, r, mults })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclotomic::zeta_pow;
    use crate::intmat::{binomial, IntMatrix};
    use crate::lattice::standard_a;

    #[test]
    fn exterior_char_examples() {
        for n in 2..=6 {
            let a = standard_a(n).unwrap();
            for k in 0..n as i64 {
                assert!(exterior_char(&a, 0, k).unwrap().is_one());
            }
        }
        let a2 = standard_a(2).unwrap();
        assert_eq!(exterior_char(&a2, 1, 1).unwrap(), CycNum::from_int(2, -1));
        // both eigenvalues of the 3-cycle on A: ζ_3 · ζ_3^2 = 1
        let a3 = standard_a(3).unwrap();
        assert_eq!(
            exterior_char(&a3, 2, 1).unwrap(),
            &zeta_pow(3, 1) * &zeta_pow(3, 2)
        );
        assert!(matches!(
            exterior_char(&a3, 3, 0),
            Err(Error::OutOfRange { .. })
        ));
    }

    #[test]
    fn exterior_char_degree_one_is_trace() {
        for n in 2..=8 {
            let a = standard_a(n).unwrap();
            for k in 0..n as i64 {
                assert_eq!(
                    exterior_char(&a, 1, k).unwrap(),
                    CycNum::from_int(n, a.trace_power(k))
                );
            }
        }
    }

    #[test]
    fn isotypic_examples() {
        let a2 = standard_a(2).unwrap();
        assert_eq!(isotypic_mult(&a2, 1, 1).unwrap(), 1);
        assert_eq!(isotypic_mult(&a2, 1, 0).unwrap(), 0);
        let a4 = standard_a(4).unwrap();
        assert_eq!(isotypic_mult(&a4, 2, 2).unwrap(), 0);
        assert!(isotypic_mult(&a4, 4, 0).is_err());
    }

    #[test]
    fn subset_sum_examples() {
        assert_eq!(subset_sum_vector(4, 2).unwrap().mults, vec![1, 1, 0, 1]);
        assert_eq!(subset_sum_vector(3, 1).unwrap().mults, vec![0, 1, 1]);
        for n in 2..=9 {
            let v = subset_sum_vector(n, 0).unwrap();
            assert_eq!(v.mults[0], 1);
            assert_eq!(v.total(), 1);
        }
        assert!(subset_sum_mult(1, 0, 0).is_err());
        assert!(subset_sum_mult(4, 4, 0).is_err());
    }

    #[test]
    fn subset_sum_invariants() {
        for n in 2..=12u32 {
            for r in 0..n as usize {
                let v = subset_sum_vector(n, r).unwrap();
                assert_eq!(v.total(), binomial(n as usize - 1, r));
                for j in 0..n as i64 {
                    assert_eq!(v.get(j), v.get(n as i64 - j));
                }
            }
            let top = subset_sum_vector(n, n as usize - 1).unwrap();
            let s = (n as i64 * (n as i64 - 1) / 2).rem_euclid(n as i64);
            for j in 0..n as i64 {
                assert_eq!(top.get(j), u64::from(j == s));
            }
        }
    }

    #[test]
    fn isotypic_agrees_with_subset_sums() {
        for n in 2..=10u32 {
            let a = standard_a(n).unwrap();
            let table = isotypic_table(&a).unwrap();
            assert_eq!(table.len(), n as usize);
            for (r, row) in table.iter().enumerate() {
                assert_eq!(row, &subset_sum_vector(n, r).unwrap(), "n = {n}, r = {r}");
                assert_eq!(&isotypic_vector(&a, r).unwrap(), row);
            }
        }
    }

    #[test]
    fn isotypic_vector_rejects_bad_degree() {
        let a = standard_a(3).unwrap();
        assert!(isotypic_vector(&a, 3).is_err());
    }

    #[test]
    fn invariant_under_unimodular_basis_change() {
        let u = IntMatrix::from_rows(&[
            vec![1, 2, 0, 0],
            vec![0, 1, 0, 0],
            vec![0, 0, 1, -1],
            vec![3, 0, 0, 1],
        ])
        .unwrap();
        assert_eq!(u.det().unwrap().abs(), BigInt::from(1));
        let a = standard_a(5).unwrap();
        let b = a.change_basis(&u).unwrap();
        assert_ne!(a.action(), b.action());
        assert_eq!(isotypic_table(&a).unwrap(), isotypic_table(&b).unwrap());
    }

    #[test]
    fn generic_lattices() {
        let sign = LatticeRep::from_action(IntMatrix::from_rows(&[vec![-1]]).unwrap(), 2).unwrap();
        assert_eq!(isotypic_vector(&sign, 1).unwrap().mults, vec![0, 1]);
        let trivial = LatticeRep::from_action(IntMatrix::identity(2), 1).unwrap();
        let t = isotypic_table(&trivial).unwrap();
        assert_eq!(
            t.iter().map(|v| v.mults[0]).collect::<Vec<_>>(),
            vec![1, 2, 1]
        );
    }
}
