//! Exact rational scalars and the small combinatorial helpers used throughout.
//!
//! All computation in this crate happens over the rationals. `Rational` is an
//! arbitrary-precision fraction kept in lowest terms with a positive
//! denominator, so equality is literal equality and there is no epsilon
//! anywhere.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision integer.
pub type Integer = BigInt;

/// Arbitrary-precision rational number, always in lowest terms, denominator > 0.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued `Rational`.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction `p/q`. Panics if `q == 0`.
pub fn frac(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses an exact rational written as `p` or `p/q`, e.g. `"-2/3"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let t = s.trim();
    if let Some((num, den)) = t.split_once('/') {
        let n = BigInt::from_str(num.trim())
            .map_err(|e| Error::syntax(0, format!("bad numerator {num:?}: {e}")))?;
        let d = BigInt::from_str(den.trim())
            .map_err(|e| Error::syntax(0, format!("bad denominator {den:?}: {e}")))?;
        if d.is_zero() {
            return Err(Error::syntax(0, "zero denominator"));
        }
        Ok(Rational::new(n, d))
    } else {
        let n = BigInt::from_str(t)
            .map_err(|e| Error::syntax(0, format!("bad rational {t:?}: {e}")))?;
        Ok(Rational::from_integer(n))
    }
}

pub fn factorial(n: usize) -> Integer {
    let mut acc = Integer::one();
    for k in 2..=n {
        acc *= Integer::from(k);
    }
    acc
}

/// Binomial coefficient `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 0..k {
        acc = acc * Integer::from(n - i) / Integer::from(i + 1);
    }
    acc
}

/// Sign of the permutation sorting `indices`, or 0 if two entries coincide.
///
/// This is the Levi-Civita symbol evaluated on the sequence: the orientation
/// scalar of `e_{i_1} ∧ ... ∧ e_{i_k}` relative to the sorted basis wedge.
pub fn perm_sign(indices: &[u8]) -> i32 {
    let mut sign = 1;
    for (a, &x) in indices.iter().enumerate() {
        for &y in &indices[a + 1..] {
            if x == y {
                return 0;
            }
            if x > y {
                sign = -sign;
            }
        }
    }
    sign
}

/// Coefficient ring abstraction: the matrices and forms in this crate carry
/// either `Rational` entries or polynomial entries ([`crate::poly::Poly`]).
pub trait Ring:
    Clone
    + PartialEq
    + std::fmt::Debug
    + std::fmt::Display
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + Zero
    + One
{
    fn from_rational(q: &Rational) -> Self;
}

impl Ring for Rational {
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// True when the reduced fraction is an integer with absolute value one.
pub fn is_pm_one(q: &Rational) -> bool {
    q.denom().is_one() && q.numer().abs().is_one()
}

/// The exact rational cube root of `r`, if one exists.
///
/// Because `r` is in lowest terms, `r` is a rational cube iff its numerator
/// and denominator are integer cubes (the sign rides on the numerator).
pub fn cube_root(r: &Rational) -> Option<Rational> {
    if r.is_zero() {
        return Some(Rational::zero());
    }
    // `cbrt` truncates toward zero, so verify by cubing.
    let n = r.numer().cbrt();
    let d = r.denom().cbrt();
    if &(&n * &n * &n) == r.numer() && &(&d * &d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_is_reduced_with_positive_denom() {
        let q = frac(4, -6);
        assert_eq!(q, frac(-2, 3));
        assert_eq!(q.numer(), &BigInt::from(-2));
        assert_eq!(q.denom(), &BigInt::from(3));
    }

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["0", "7", "-2/3", "1/2"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("4/6").unwrap().to_string(), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), Integer::from(10));
        assert_eq!(binomial(3, 0), Integer::one());
        assert_eq!(binomial(2, 5), Integer::zero());
    }

    #[test]
    fn cube_roots() {
        assert_eq!(cube_root(&frac(-8, 27)), Some(frac(-2, 3)));
        assert_eq!(cube_root(&rat(0)), Some(rat(0)));
        assert_eq!(cube_root(&rat(2)), None);
        assert_eq!(cube_root(&rat(27)), Some(rat(3)));
        assert_eq!(cube_root(&frac(1, 9)), None);
        // A cube large enough to exceed machine integers.
        let big = frac(10_000_019, 3) * frac(10_000_019, 3) * frac(10_000_019, 3);
        assert_eq!(cube_root(&big), Some(frac(10_000_019, 3)));
    }

    #[test]
    fn permutation_signs() {
        assert_eq!(perm_sign(&[0, 1, 2]), 1);
        assert_eq!(perm_sign(&[1, 0, 2]), -1);
        assert_eq!(perm_sign(&[2, 0, 1]), 1);
        assert_eq!(perm_sign(&[0, 0, 1]), 0);
        assert_eq!(perm_sign(&[4, 0, 1, 2, 3]), 1);
    }
}
