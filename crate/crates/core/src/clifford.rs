//! Characters of `A = {a ∈ Z^n : Σ a_i = 0}` under the symmetric group.
//!
//! A character of `A` with values in the n-th roots of unity is written
//! `a ↦ ω^{Σ c_i a_i}` for an exponent vector `c ∈ (Z/n)^n`; two vectors give
//! the same character on `A` iff they differ by a constant, so vectors are
//! stored shifted to `c_1 = 0`.

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::cyclotomic::zeta_pow;
use crate::error::{out_of_range, Error, Result};
use crate::koszul::{lattice_cohomology_dims, semidirect_cohomology_dim};
use crate::lattice::{standard_a, LatticeRep};

/// Largest `n` for which `S_n` is enumerated exhaustively.
pub const MAX_BRUTE_FORCE_N: u32 = 7;

/// A permutation of `0..n`, stored as its images.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &i in &images {
            if i >= images.len() || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Invalid(format!("{images:?} is not a permutation")));
            }
        }
        Ok(Permutation(images))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((0..n).collect())
    }

    /// The n-cycle `i ↦ i + 1 (mod n)`, i.e. `(1 2 … n)`.
    pub fn cycle(n: usize) -> Self {
        Permutation((0..n).map(|i| (i + 1) % n).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s] = i;
        }
        Permutation(inv)
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &s)| i == s)
    }

    pub fn pow(&self, k: usize) -> Permutation {
        (0..k).fold(Self::identity(self.degree()), |acc, _| acc.compose(self))
    }

    pub fn order(&self) -> usize {
        let mut p = self.clone();
        let mut k = 1;
        while !p.is_identity() {
            p = p.compose(self);
            k += 1;
        }
        k
    }

    /// Every permutation of `0..n`, in lexicographic order of image vectors.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        (0..n).permutations(n).map(Permutation)
    }

    /// Disjoint-cycle notation with 1-based points, e.g. `(1 2 3)`.
    pub fn cycle_notation(&self) -> String {
        let mut seen = vec![false; self.0.len()];
        let mut out = String::new();
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            let mut cyc = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cyc.push((i + 1).to_string());
                i = self.0[i];
            }
            out.push_str(&format!("({})", cyc.join(" ")));
        }
        if out.is_empty() {
            out.push_str("()");
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation())
    }
}

/// A character of `A ⊂ Z^n` with values in the n-th roots of unity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ACharacter {
    n: u32,
    exponents: Vec<u32>,
}

impl ACharacter {
    pub fn new(n: u32, exponents: &[i64]) -> Result<Self> {
        if n == 0 {
            return Err(out_of_range("n", 0, ">= 1"));
        }
        if exponents.len() != n as usize {
            return Err(Error::Shape(format!(
                "expected {n} exponents, got {}",
                exponents.len()
            )));
        }
        let shift = exponents[0];
        let exponents = exponents
            .iter()
            .map(|&c| (c - shift).rem_euclid(n as i64) as u32)
            .collect();
        Ok(ACharacter { n, exponents })
    }

    /// `φ(k) = ω^{k_1} ω^{2k_2} ⋯ ω^{n k_n}`.
    pub fn phi(n: u32) -> Self {
        let exps: Vec<i64> = (1..=n as i64).collect();
        Self::new(n, &exps).expect("length matches")
    }

    pub fn trivial(n: u32) -> Self {
        Self::new(n, &vec![0; n as usize]).expect("length matches")
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Canonical exponents (first entry zero).
    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_trivial(&self) -> bool {
        self.exponents.iter().all(|&c| c == 0)
    }

    /// `(σ·χ)(a) = χ(σ^{-1} a)`, where `σ` moves coordinate `i` to `σ(i)`.
    pub fn permuted(&self, sigma: &Permutation) -> Self {
        assert_eq!(
            sigma.degree(),
            self.n as usize,
            "permutation degree mismatch"
        );
        let mut c = vec![0i64; self.n as usize];
        for (i, &e) in self.exponents.iter().enumerate() {
            c[sigma.apply(i)] = e as i64;
        }
        Self::new(self.n, &c).expect("length matches")
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "character degree mismatch");
        let c: Vec<i64> = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(&a, &b)| a as i64 + b as i64)
            .collect();
        Self::new(self.n, &c).expect("length matches")
    }

    pub fn inverse(&self) -> Self {
        let c: Vec<i64> = self.exponents.iter().map(|&a| -(a as i64)).collect();
        Self::new(self.n, &c).expect("length matches")
    }

    /// Exponent `e` with `χ(a) = ω^e`, for `a ∈ A`.
    pub fn eval(&self, a: &[i64]) -> Result<u32> {
        if a.len() != self.n as usize || a.iter().sum::<i64>() != 0 {
            return Err(Error::Invalid(format!("{a:?} is not an element of A")));
        }
        let s: i64 = self
            .exponents
            .iter()
            .zip(a)
            .map(|(&c, &x)| c as i64 * x)
            .sum();
        Ok(s.rem_euclid(self.n as i64) as u32)
    }

    /// Exponents of the values on the basis `e_i - e_{i+1}` of [`standard_a`].
    pub fn basis_exponents(&self) -> Vec<i64> {
        self.exponents
            .windows(2)
            .map(|w| w[0] as i64 - w[1] as i64)
            .collect()
    }

    pub fn is_cyclic_invariant(&self) -> bool {
        self.permuted(&Permutation::cycle(self.n as usize)) == *self
    }
}

/// A character of `A ⋊ Z/n` extending a cyclic-invariant character of `A`:
/// `(a, g^k) ↦ φ(a) · ω^{η k}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct ExtendedCharacter {
    base: ACharacter,
    eta: u32,
}

impl ExtendedCharacter {
    pub fn new(base: ACharacter, eta: i64) -> Result<Self> {
        if !base.is_cyclic_invariant() {
            return Err(Error::NotCyclicInvariant);
        }
        let eta = eta.rem_euclid(base.n as i64) as u32;
        Ok(ExtendedCharacter { base, eta })
    }

    pub fn base(&self) -> &ACharacter {
        &self.base
    }

    pub fn eta(&self) -> u32 {
        self.eta
    }

    /// Exponent of the value at `(a, g^k)`; requires `a ∈ A`.
    pub fn eval(&self, elem: &AffineElem) -> Result<u32> {
        let n = self.base.n as i64;
        let base = self.base.eval(&elem.shift)? as i64;
        Ok((base + self.eta as i64 * elem.rot as i64).rem_euclid(n) as u32)
    }
}

/// An element `(v, g^k)` of `Z^n ⋊ Z/n`, where `g` is the n-cycle acting by
/// `e_i ↦ e_{i+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineElem {
    pub shift: Vec<i64>,
    pub rot: usize,
}

impl AffineElem {
    pub fn new(shift: Vec<i64>, rot: i64) -> Self {
        let n = shift.len() as i64;
        AffineElem {
            shift,
            rot: rot.rem_euclid(n.max(1)) as usize,
        }
    }

    fn rotate(&self, v: &[i64]) -> Vec<i64> {
        let n = v.len();
        let mut out = vec![0; n];
        for (i, &x) in v.iter().enumerate() {
            out[(i + self.rot) % n] = x;
        }
        out
    }

    /// `(u, s)(v, t) = (u + s·v, st)`.
    pub fn mul(&self, other: &AffineElem) -> AffineElem {
        let moved = self.rotate(&other.shift);
        let shift = self.shift.iter().zip(moved).map(|(a, b)| a + b).collect();
        AffineElem::new(shift, (self.rot + other.rot) as i64)
    }

    pub fn inverse(&self) -> AffineElem {
        let n = self.shift.len();
        let back = AffineElem::new(vec![0; n], -(self.rot as i64));
        let shift = back.rotate(&self.shift).into_iter().map(|x| -x).collect();
        AffineElem::new(shift, -(self.rot as i64))
    }

    pub fn in_a_rtimes_cyclic(&self) -> bool {
        self.shift.iter().sum::<i64>() == 0
    }
}

fn check_brute_force(n: u32) -> Result<()> {
    if n < 2 {
        return Err(out_of_range("n", n as i64, ">= 2"));
    }
    if n > MAX_BRUTE_FORCE_N {
        return Err(Error::CostGuard {
            what: "symmetric group enumeration",
            n,
            limit: MAX_BRUTE_FORCE_N,
        });
    }
    Ok(())
}

/// Result of enumerating `S_n` acting on `φ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitStabilizer {
    pub n: u32,
    pub orbit_size: usize,
    /// All stabilizing permutations, in lexicographic order.
    pub stabilizer: Vec<Permutation>,
    /// A generator of the (cyclic) stabilizer: the n-cycle `(1 2 … n)`.
    pub generator: Permutation,
}

/// Orbit size and stabilizer of `φ` under `S_n`, by full enumeration.
///
/// Fails with [`Error::Internal`] unless the orbit has `(n-1)!` elements and
/// the stabilizer is the cyclic group generated by `(1 2 … n)`.
pub fn orbit_stabilizer(n: u32) -> Result<OrbitStabilizer> {
    check_brute_force(n)?;
    let phi = ACharacter::phi(n);
    let mut orbit = std::collections::BTreeSet::new();
    let mut stabilizer = Vec::new();
    for sigma in Permutation::all(n as usize) {
        let image = phi.permuted(&sigma);
        if image == phi {
            stabilizer.push(sigma);
        }
        orbit.insert(image);
    }
    let factorial: usize = (1..=n as usize).product();
    if orbit.len() * stabilizer.len() != factorial {
        return Err(Error::Internal("orbit-stabilizer count mismatch".into()));
    }
    if orbit.len() != factorial / n as usize {
        return Err(Error::Internal(format!(
            "orbit of φ has {} elements, expected (n-1)!",
            orbit.len()
        )));
    }
    let generator = Permutation::cycle(n as usize);
    let mut cyclic: Vec<Permutation> = (0..n as usize).map(|k| generator.pow(k)).collect();
    cyclic.sort();
    if cyclic != stabilizer {
        return Err(Error::Internal("stabilizer of φ is not ⟨(1 2 … n)⟩".into()));
    }
    Ok(OrbitStabilizer {
        n,
        orbit_size: orbit.len(),
        stabilizer,
        generator,
    })
}

/// Restriction to `A` of `Ind_{A⋊Z/n}^{A⋊S_n} χ` for an extension `χ` of `φ`,
/// as a multiset of characters of `A`.
///
/// By Mackey, the restriction is `⊕_{σ ∈ S_n / (Z/n)} σ·φ`; summing over all
/// of `S_n` counts each coset `n` times.
pub fn restriction_to_a(n: u32) -> Result<BTreeMap<ACharacter, usize>> {
    check_brute_force(n)?;
    let phi = ACharacter::phi(n);
    let mut counts: BTreeMap<ACharacter, usize> = BTreeMap::new();
    for sigma in Permutation::all(n as usize) {
        *counts.entry(phi.permuted(&sigma)).or_default() += 1;
    }
    for c in counts.values_mut() {
        if *c % n as usize != 0 {
            return Err(Error::Internal("coset count not divisible by n".into()));
        }
        *c /= n as usize;
    }
    Ok(counts)
}

/// Precomputed data for `Ext^*_{A⋊S_n}(M_1, M_2)` with `M_i` induced from
/// extensions of `φ` to `A ⋊ Z/n`.
#[derive(Debug, Clone)]
pub struct CliffordTransfer {
    n: u32,
    lattice: LatticeRep,
    /// Multiplicity of the trivial character of `A` in `φ^{-1} ⊗ M_2|_A`.
    trivial_multiplicity: usize,
    /// Summed `dim H^i(A, ψ)` over the nontrivial constituents `ψ`.
    nontrivial_dims: Vec<usize>,
    /// `semidirect[η][i] = dim H^i(A ⋊ Z/n, C_η)`.
    semidirect: Vec<Vec<usize>>,
}

impl CliffordTransfer {
    pub fn new(n: u32) -> Result<Self> {
        let constituents = restriction_to_a(n)?;
        let lattice = standard_a(n)?;
        let rank = lattice.rank();
        let phi_inv = ACharacter::phi(n).inverse();
        let mut trivial_multiplicity = 0;
        let mut nontrivial_dims = vec![0; rank + 1];
        for (psi, mult) in constituents {
            let twisted = phi_inv.mul(&psi);
            if twisted.is_trivial() {
                trivial_multiplicity += mult;
                continue;
            }
            let values: Vec<_> = twisted
                .basis_exponents()
                .into_iter()
                .map(|e| zeta_pow(n, e))
                .collect();
            let dims = lattice_cohomology_dims(&lattice, &values)?;
            for (acc, d) in nontrivial_dims.iter_mut().zip(dims) {
                *acc += d * mult;
            }
        }
        if trivial_multiplicity != 1 {
            return Err(Error::Internal(format!(
                "A-trivial part of φ^-1 ⊗ M_2 has multiplicity {trivial_multiplicity}"
            )));
        }
        let semidirect = (0..n as i64)
            .map(|eta| {
                (0..=rank)
                    .map(|i| semidirect_cohomology_dim(&lattice, eta, i))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(CliffordTransfer {
            n,
            lattice,
            trivial_multiplicity,
            nontrivial_dims,
            semidirect,
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn lattice(&self) -> &LatticeRep {
        &self.lattice
    }

    /// `Σ_ψ dim H^i(A, ψ)` over nontrivial constituents (all zero when the
    /// scalar-vanishing argument applies).
    pub fn nontrivial_dims(&self) -> &[usize] {
        &self.nontrivial_dims
    }

    /// `dim Ext^i(M_1, M_2)` for `i = 0..n-1`, where `M_j` is induced from
    /// the extension of `φ` with `Z/n` acting by `ω^{eta_j}`.
    ///
    /// Computed as `H^i(A⋊Z/n, χ_1^{-1} ⊗ M_2|_H)`: constituents on which `A`
    /// acts nontrivially contribute `H^i(A, ψ)^{Z/n}`, bounded by the Koszul
    /// dimensions (which must vanish); the `A`-trivial line contributes
    /// `H^i(A⋊Z/n, χ_1^{-1}χ_2)`.
    pub fn ext_dims(&self, eta1: i64, eta2: i64) -> Result<Vec<usize>> {
        if self.nontrivial_dims.iter().any(|&d| d != 0) {
            return Err(Error::Internal(format!(
                "nontrivial A-constituents have cohomology {:?}",
                self.nontrivial_dims
            )));
        }
        let eta = (eta2 - eta1).rem_euclid(self.n as i64) as usize;
        Ok(self.semidirect[eta]
            .iter()
            .map(|d| d * self.trivial_multiplicity)
            .collect())
    }
}

/// `dim Ext^i_{A⋊S_n}(Ind χ_1, Ind χ_2)` for `i = 0..n-1`; see [`CliffordTransfer`].
pub fn ext_transfer(n: u32, eta1: i64, eta2: i64) -> Result<Vec<usize>> {
    CliffordTransfer::new(n)?.ext_dims(eta1, eta2)
}

/// Shift in `η` produced by conjugating an extended character of
/// `A ⋊ Z/n` by `x = (d·e_1, 1) ∈ Z^n ⋊ Z/n`.
///
/// The conjugate is `χ'(h) = χ(x h x^{-1})`. It agrees with `χ` on `A` and
/// sends the generator `(0, g)` to `ω^{η'}`; the returned residue is
/// `η' - η (mod n)`, which is checked to be independent of `η`.
pub fn conjugation_twist(n: u32, d: i64) -> Result<u32> {
    if n < 2 {
        return Err(out_of_range("n", n as i64, ">= 2"));
    }
    let len = n as usize;
    let phi = ACharacter::phi(n);
    let mut x_shift = vec![0i64; len];
    x_shift[0] = d;
    let x = AffineElem::new(x_shift, 0);
    let x_inv = x.inverse();
    let conjugate = |h: &AffineElem| -> Result<AffineElem> {
        let c = x.mul(h).mul(&x_inv);
        if !c.in_a_rtimes_cyclic() {
            return Err(Error::Internal("conjugate left A ⋊ Z/n".into()));
        }
        Ok(c)
    };
    let generator = AffineElem::new(vec![0; len], 1);
    let basis: Vec<AffineElem> = (0..len - 1)
        .map(|i| {
            let mut v = vec![0i64; len];
            v[i] = 1;
            v[i + 1] = -1;
            AffineElem::new(v, 0)
        })
        .collect();

    let mut shift = None;
    for eta in 0..n as i64 {
        let chi = ExtendedCharacter::new(phi.clone(), eta)?;
        for b in &basis {
            if chi.eval(&conjugate(b)?)? != chi.eval(b)? {
                return Err(Error::Internal(
                    "conjugation changed the restriction to A".into(),
                ));
            }
        }
        let new_eta = chi.eval(&conjugate(&generator)?)? as i64;
        // consistency on the powers of the generator
        for k in 0..n as i64 {
            let gk = AffineElem::new(vec![0; len], k);
            if chi.eval(&conjugate(&gk)?)? as i64 != (new_eta * k).rem_euclid(n as i64) {
                return Err(Error::Internal("conjugate is not a character".into()));
            }
        }
        let s = (new_eta - eta).rem_euclid(n as i64) as u32;
        match shift {
            None => shift = Some(s),
            Some(prev) if prev != s => {
                return Err(Error::Internal("twist depends on η".into()));
            }
            Some(_) => {}
        }
    }
    Ok(shift.expect("n >= 2"))
}

/// The exponent `s` with `conjugation_twist(n, d) = s·d (mod n)` for all `d`.
pub fn twist_unit(n: u32) -> Result<u32> {
    let s = conjugation_twist(n, 1)?;
    for d in 0..=n as i64 {
        if conjugation_twist(n, d)? as i64 != (s as i64 * d).rem_euclid(n as i64) {
            return Err(Error::Internal(
                "conjugation twist is not linear in d".into(),
            ));
        }
    }
    Ok(s)
}
