//! Dense univariate polynomials with arbitrary-precision integer coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Integer polynomial, coefficients stored from the constant term upward.
///
/// The coefficient vector never carries trailing zeros, so the zero
/// polynomial is the empty vector and structural equality is polynomial
/// equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPoly { coeffs };
        p.trim();
        p
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c * x^k`.
    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        Self::monomial(BigInt::one(), n) - Self::one()
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact division in `Z[x]`.
    ///
    /// Returns `None` if `divisor` is zero or does not divide `self` with an
    /// integral quotient and zero remainder.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let dd = divisor.degree()?;
        let lead = divisor.leading()?;
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let mut rem = self.coeffs.clone();
        if rem.len() < divisor.coeffs.len() {
            return None;
        }
        let qlen = rem.len() - dd;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(IntPoly::new(quot))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            match (k, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{k}")?,
                (_, false) => write!(f, "{mag}x^{k}")?,
            }
        }
        Ok(())
    }
}

pub(crate) fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n.is_multiple_of(*d)).collect();
    out.sort_unstable();
    out
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    (1..=n).filter(|k| k.gcd(&n) == 1).count() as u32
}

/// The n-th cyclotomic polynomial `Φ_n`.
///
/// Computed as `x^n - 1` divided exactly by `Φ_d` for every proper divisor
/// `d` of `n`.
///
/// # Panics
///
/// Panics if `n == 0`.
pub fn cyclotomic_poly(n: u32) -> IntPoly {
    assert!(n >= 1, "cyclotomic_poly: n must be positive");
    if n == 1 {
        return IntPoly::from_i64s(&[-1, 1]);
    }
    let mut acc = IntPoly::x_pow_minus_one(n as usize);
    for d in divisors(n).into_iter().filter(|&d| d < n) {
        acc = acc
            .exact_div(&cyclotomic_poly(d))
            .expect("Φ_d divides x^n - 1 for d | n");
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic_poly(1), IntPoly::from_i64s(&[-1, 1]));
        assert_eq!(cyclotomic_poly(2), IntPoly::from_i64s(&[1, 1]));
        assert_eq!(cyclotomic_poly(3), IntPoly::from_i64s(&[1, 1, 1]));
        assert_eq!(cyclotomic_poly(4), IntPoly::from_i64s(&[1, 0, 1]));
        assert_eq!(cyclotomic_poly(6), IntPoly::from_i64s(&[1, -1, 1]));
        assert_eq!(cyclotomic_poly(12), IntPoly::from_i64s(&[1, 0, -1, 0, 1]));
    }

    #[test]
    fn degree_is_totient_and_monic() {
        for n in 1..=30 {
            let p = cyclotomic_poly(n);
            assert_eq!(p.degree(), Some(totient(n) as usize), "n = {n}");
            assert!(p.leading().unwrap().is_one());
        }
    }

    #[test]
    fn product_over_divisors_is_x_n_minus_one() {
        for n in 1..=24 {
            let prod = divisors(n)
                .into_iter()
                .fold(IntPoly::one(), |acc, d| &acc * &cyclotomic_poly(d));
            assert_eq!(prod, IntPoly::x_pow_minus_one(n as usize));
        }
    }

    #[test]
    fn exact_div_rejects_remainder() {
        let p = IntPoly::from_i64s(&[1, 0, 1]);
        let q = IntPoly::from_i64s(&[1, 1]);
        assert!(p.exact_div(&q).is_none());
        assert!(p.exact_div(&IntPoly::zero()).is_none());
        assert_eq!(p.exact_div(&p), Some(IntPoly::one()));
    }

    #[test]
    fn display() {
        assert_eq!(cyclotomic_poly(6).to_string(), "x^2 - x + 1");
        assert_eq!(cyclotomic_poly(1).to_string(), "x - 1");
        assert_eq!(IntPoly::from_i64s(&[0, -3, 0, 2]).to_string(), "2x^3 - 3x");
    }
}
