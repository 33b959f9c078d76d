//! Elements of the n-th cyclotomic field `Q(ζ_n)` in canonical power-basis form.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::poly::cyclotomic_poly;
use crate::error::{Error, Result};

/// Per-order data shared by every element of `Q(ζ_n)`.
///
/// `powers[k]` holds the canonical coordinates of `ζ^k` for `0 <= k < n`;
/// they are integers because `Φ_n` is monic.
#[derive(Debug)]
struct FieldData {
    order: u32,
    degree: usize,
    powers: Vec<Vec<BigInt>>,
}

impl FieldData {
    fn build(order: u32) -> Self {
        let phi = cyclotomic_poly(order);
        let degree = phi.degree().expect("cyclotomic polynomials are nonzero");
        let n = order as usize;
        let mut powers = Vec::with_capacity(n);
        let mut cur = vec![BigInt::zero(); degree];
        cur[0] = BigInt::one();
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce with x^d = -(Φ_n - x^d)
            let carry = cur[degree - 1].clone();
            for j in (1..degree).rev() {
                cur[j] = cur[j - 1].clone();
            }
            cur[0] = BigInt::zero();
            if !carry.is_zero() {
                for (j, c) in phi.coeffs()[..degree].iter().enumerate() {
                    cur[j] -= &carry * c;
                }
            }
        }
        FieldData {
            order,
            degree,
            powers,
        }
    }
}

fn field(order: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().unwrap_or_else(|e| e.into_inner());
    guard
        .entry(order)
        .or_insert_with(|| Arc::new(FieldData::build(order)))
        .clone()
}

/// An element of `Q(ζ_n)`.
///
/// Stored as `φ(n)` rational coordinates in the basis `1, ζ, …, ζ^{φ(n)-1}`,
/// i.e. a residue modulo `Φ_n`. Two elements are equal iff their orders and
/// coordinates agree.
#[derive(Clone)]
pub struct CycNum {
    field: Arc<FieldData>,
    coeffs: Vec<BigRational>,
}

impl PartialEq for CycNum {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycNum {}

fn check_order(n: u32) {
    assert!(n >= 1, "cyclotomic order must be positive");
}

impl CycNum {
    pub fn zero(n: u32) -> Self {
        check_order(n);
        let field = field(n);
        let coeffs = vec![BigRational::zero(); field.degree];
        CycNum { field, coeffs }
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    pub fn from_int(n: u32, value: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(value.into()))
    }

    pub fn from_bigint(n: u32, value: BigInt) -> Self {
        Self::from_rational(n, BigRational::from_integer(value))
    }

    pub fn from_rational(n: u32, value: BigRational) -> Self {
        let mut z = Self::zero(n);
        z.coeffs[0] = value;
        z
    }

    /// Builds an element from canonical coordinates; the length must be `φ(n)`.
    pub fn from_coeffs(n: u32, coeffs: Vec<BigRational>) -> Result<Self> {
        let mut z = Self::zero(n);
        if coeffs.len() != z.coeffs.len() {
            return Err(Error::Shape(format!(
                "expected {} coordinates for order {n}, got {}",
                z.coeffs.len(),
                coeffs.len()
            )));
        }
        z.coeffs = coeffs;
        Ok(z)
    }

    /// `Σ_k c_k ζ^k` for arbitrary integer exponents.
    pub fn from_exponent_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, BigRational)>,
    {
        let mut z = Self::zero(n);
        for (k, c) in terms {
            z.add_scaled_power(k, &c);
        }
        z
    }

    /// `Σ_{k=0}^{n-1} c_k ζ^k` for integer weights indexed by exponent.
    pub(crate) fn from_power_weights(n: u32, weights: &[BigInt]) -> Self {
        let mut z = Self::zero(n);
        let field = z.field.clone();
        for (k, w) in weights.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            for (dst, p) in z
                .coeffs
                .iter_mut()
                .zip(&field.powers[k % field.order as usize])
            {
                if !p.is_zero() {
                    *dst += BigRational::from_integer(w * p);
                }
            }
        }
        z
    }

    fn add_scaled_power(&mut self, k: i64, c: &BigRational) {
        if c.is_zero() {
            return;
        }
        let n = self.field.order as i64;
        let idx = k.rem_euclid(n) as usize;
        let field = self.field.clone();
        for (dst, p) in self.coeffs.iter_mut().zip(&field.powers[idx]) {
            if !p.is_zero() {
                *dst += c * BigRational::from_integer(p.clone());
            }
        }
    }

    pub fn order(&self) -> u32 {
        self.field.order
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// The rational value, if the element lies in `Q`.
    pub fn to_rational(&self) -> Option<BigRational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| self.coeffs[0].clone())
    }

    /// The integer value, if the element lies in `Z`.
    pub fn to_integer(&self) -> Option<BigInt> {
        self.to_rational()
            .filter(BigRational::is_integer)
            .map(|r| r.to_integer())
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.field.order != other.field.order {
            return Err(Error::OrderMismatch {
                left: self.field.order,
                right: other.field.order,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(CycNum {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(CycNum {
            field: self.field.clone(),
            coeffs,
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let d = self.field.degree;
        let mut conv = vec![BigRational::zero(); 2 * d - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    conv[i + j] += a * b;
                }
            }
        }
        let mut out = Self::zero(self.field.order);
        for (k, c) in conv.into_iter().enumerate() {
            if k < d {
                out.coeffs[k] += c;
            } else {
                out.add_scaled_power(k as i64, &c);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse.
    ///
    /// Uses `a^{-1} = (Π_{σ≠1} σ(a)) / N(a)` over the Galois automorphisms
    /// `σ_t: ζ ↦ ζ^t`, `gcd(t, n) = 1`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.field.order;
        let mut cofactor = Self::one(n);
        for t in 2..n.max(2) {
            if t.gcd(&n) == 1 {
                cofactor = &cofactor * &self.galois(t);
            }
        }
        let norm = (self * &cofactor)
            .to_rational()
            .ok_or_else(|| Error::Internal("field norm is not rational".into()))?;
        Ok(cofactor.scale(&norm.recip()))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        self.try_mul(&other.inv()?)
    }

    /// The automorphism `ζ ↦ ζ^t`; `t` must be a unit mod `n`.
    pub fn galois(&self, t: u32) -> Self {
        let n = self.field.order;
        debug_assert_eq!(t.gcd(&n), 1);
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_scaled_power(i as i64 * t as i64, c);
        }
        out
    }

    /// Complex conjugation, `ζ ↦ ζ^{-1}`.
    pub fn conj(&self) -> Self {
        let n = self.field.order;
        let mut out = Self::zero(n);
        for (i, c) in self.coeffs.iter().enumerate() {
            out.add_scaled_power(-(i as i64), c);
        }
        out
    }

    pub fn scale(&self, s: &BigRational) -> Self {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| c * s).collect(),
        }
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.field.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// True iff the element has finite multiplicative order.
    ///
    /// The roots of unity in `Q(ζ_n)` are exactly the `lcm(2, n)`-th roots of unity.
    pub fn is_root_of_unity(&self) -> bool {
        let n = self.field.order as u64;
        !self.is_zero() && self.pow(n.lcm(&2)).is_one()
    }
}

/// `ζ_n^k`, with `k` taken modulo `n`.
pub fn zeta_pow(n: u32, k: i64) -> CycNum {
    CycNum::from_exponent_terms(n, [(k, BigRational::one())])
}

macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        /// Panics on mismatched orders; use the `try_` method to get an error instead.
        impl $tr for &CycNum {
            type Output = CycNum;
            fn $m(self, rhs: &CycNum) -> CycNum {
                self.$checked(rhs).expect("cyclotomic order mismatch")
            }
        }

        impl $tr for CycNum {
            type Output = CycNum;
            fn $m(self, rhs: CycNum) -> CycNum {
                (&self).$m(&rhs)
            }
        }
    };
}
binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

impl Neg for &CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        CycNum {
            field: self.field.clone(),
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for CycNum {
    type Output = CycNum;
    fn neg(self) -> CycNum {
        -&self
    }
}

impl fmt::Display for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            match (first, c.is_negative()) {
                (true, true) => write!(f, "-")?,
                (true, false) => {}
                (false, true) => write!(f, " - ")?,
                (false, false) => write!(f, " + ")?,
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "z")?,
                (1, false) => write!(f, "{mag}*z")?,
                (_, true) => write!(f, "z^{k}")?,
                (_, false) => write!(f, "{mag}*z^{k}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CycNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycNum[{}]({})", self.field.order, self)
    }
}
