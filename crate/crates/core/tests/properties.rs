use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use sln_ext::clifford::{conjugation_twist, ext_transfer};
use sln_ext::cyclotomic::totient;
use sln_ext::exterior::{isotypic_table, subset_sum_vector};
use sln_ext::koszul::KoszulComplex;
use sln_ext::lattice::standard_a;
use sln_ext::tables::{euler_poincare, ramanujan_sum, theorem2_table, CaseTag};
use sln_ext::{zeta_pow, CycNum, IntMatrix, IntPoly};

fn cyc(n: u32, coeffs: &[(i64, i64)]) -> CycNum {
    let d = totient(n) as usize;
    let c = (0..d)
        .map(|i| {
            let (a, b) = coeffs[i % coeffs.len()];
            BigRational::new(BigInt::from(a), BigInt::from(b))
        })
        .collect();
    CycNum::from_coeffs(n, c).unwrap()
}

fn coeff_strategy() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 1..8)
}

/// Product of elementary matrices `I + c·E_{ij}` and sign flips.
fn unimodular(m: usize, ops: &[(usize, usize, i64)]) -> IntMatrix {
    let mut u = IntMatrix::identity(m);
    for &(i, j, c) in ops {
        let (i, j) = (i % m, j % m);
        let mut e = IntMatrix::identity(m);
        if i == j {
            e.set(i, i, -1);
        } else {
            e.set(i, j, c);
        }
        u = u.mul(&e).unwrap();
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inverse_is_two_sided(n in 1u32..=12, c in coeff_strategy()) {
        let a = cyc(n, &c);
        prop_assume!(!a.is_zero());
        let inv = a.inv().unwrap();
        prop_assert!((&a * &inv).is_one());
        prop_assert!((&inv * &a).is_one());
    }

    #[test]
    fn zeta_powers_multiply(n in 1u32..=12, k in -30i64..30, l in -30i64..30) {
        prop_assert_eq!(&zeta_pow(n, k) * &zeta_pow(n, l), zeta_pow(n, k + l));
        prop_assert_eq!(zeta_pow(n, k).pow(n as u64), CycNum::one(n));
    }

    #[test]
    fn ring_axioms(n in 1u32..=12, a in coeff_strategy(), b in coeff_strategy(), c in coeff_strategy()) {
        let (a, b, c) = (cyc(n, &a), cyc(n, &b), cyc(n, &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn galois_is_multiplicative(n in 2u32..=12, t in 1u32..12, a in coeff_strategy(), b in coeff_strategy()) {
        prop_assume!(num_integer::gcd(t, n) == 1);
        let (a, b) = (cyc(n, &a), cyc(n, &b));
        prop_assert_eq!((&a * &b).galois(t), &a.galois(t) * &b.galois(t));
        prop_assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn poly_exact_division(a in prop::collection::vec(-20i64..20, 1..6), b in prop::collection::vec(-20i64..20, 1..6)) {
        let (pa, pb) = (IntPoly::from_i64s(&a), IntPoly::from_i64s(&b));
        prop_assume!(!pb.is_zero());
        prop_assert_eq!((&pa * &pb).exact_div(&pb), Some(pa));
    }

    #[test]
    fn isotypic_table_is_basis_independent(
        n in 2u32..=7,
        ops in prop::collection::vec((0usize..6, 0usize..6, -2i64..=2), 0..6),
    ) {
        let a = standard_a(n).unwrap();
        let u = unimodular(a.rank(), &ops);
        let b = a.change_basis(&u).unwrap();
        prop_assert_eq!(isotypic_table(&a).unwrap(), isotypic_table(&b).unwrap());
        prop_assert_eq!(b.dual().dual(), b);
    }

    #[test]
    fn koszul_d_squared(n in 2u32..=8, exps in prop::collection::vec(0i64..8, 1..5)) {
        let k = KoszulComplex::from_exponents(n, &exps).unwrap();
        prop_assert!(k.check_d_squared());
        let euler: i64 = k.cohomology_dims().iter().enumerate()
            .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
            .sum();
        prop_assert_eq!(euler, 0);
    }
}

#[test]
fn roots_of_unity_sum_to_zero() {
    for n in 2..=16u32 {
        let s = (0..n as i64).fold(CycNum::zero(n), |acc, k| &acc + &zeta_pow(n, k));
        assert!(s.is_zero(), "n = {n}");
    }
}

#[test]
fn subset_sums_are_symmetric() {
    for n in 2..=14u32 {
        for r in 0..n as usize {
            let v = subset_sum_vector(n, r).unwrap();
            for j in 0..n as i64 {
                assert_eq!(v.get(j), v.get(-j));
            }
        }
    }
}

#[test]
fn ep_matches_ramanujan_and_is_symmetric() {
    for n in 2..=16u32 {
        let t = theorem2_table(n, CaseTag::Unramified).unwrap();
        for j in 0..n as i64 {
            assert_eq!(euler_poincare(&t, j), ramanujan_sum(n, j).unwrap());
            assert_eq!(euler_poincare(&t, j), euler_poincare(&t, n as i64 - j));
        }
        assert_eq!(t.ep_vector().iter().sum::<i64>(), 0);
    }
}

#[test]
fn transfer_depends_on_difference_only() {
    for n in 2..=6u32 {
        let t = sln_ext::clifford::CliffordTransfer::new(n).unwrap();
        for a in 0..n as i64 {
            for b in 0..n as i64 {
                assert_eq!(t.ext_dims(a, b).unwrap(), t.ext_dims(0, b - a).unwrap());
            }
        }
    }
    assert_eq!(
        ext_transfer(4, 1, 3).unwrap(),
        ext_transfer(4, 0, 2).unwrap()
    );
}

#[test]
fn twist_is_additive() {
    for n in 2..=8u32 {
        for d in -10..10i64 {
            for e in -10..10i64 {
                let lhs = conjugation_twist(n, d + e).unwrap();
                let rhs = (conjugation_twist(n, d).unwrap() + conjugation_twist(n, e).unwrap()) % n;
                assert_eq!(lhs, rhs);
            }
        }
    }
}

#[test]
fn projector_dims_agree_for_lattice_and_dual() {
    use sln_ext::koszul::semidirect_cohomology_dim;
    for n in 2..=6u32 {
        let a = standard_a(n).unwrap();
        let d = a.dual();
        for i in 0..n as usize {
            for eta in 0..n as i64 {
                assert_eq!(
                    semidirect_cohomology_dim(&a, eta, i).unwrap(),
                    semidirect_cohomology_dim(&d, eta, i).unwrap()
                );
            }
        }
    }
}

#[test]
fn transfer_matches_table_at_largest_brute_force_size() {
    let n = sln_ext::clifford::MAX_BRUTE_FORCE_N;
    let table = theorem2_table(n, CaseTag::Ramified).unwrap();
    let t = sln_ext::clifford::CliffordTransfer::new(n).unwrap();
    assert!(t.nontrivial_dims().iter().all(|&d| d == 0));
    for j in 0..n as i64 {
        let got: Vec<u64> = t
            .ext_dims(0, j)
            .unwrap()
            .into_iter()
            .map(|d| d as u64)
            .collect();
        assert_eq!(got, table.column(j), "j = {j}");
    }
}
