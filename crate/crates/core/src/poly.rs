//! Sparse multivariate polynomials with exact rational coefficients.
//!
//! A monomial is stored as the sorted multiset of its variable indices, so
//! `x0^2*x2` is the key `[0, 0, 2]`. This makes the ring arity-free (zero and
//! one need no variable count) and matches how forms index their coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::rational::{Rational, Ring};

/// Polynomial in variables `x0, x1, x2, ...` over the rationals.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    /// Monomial multiset (sorted variable indices) -> nonzero coefficient.
    terms: BTreeMap<Vec<u8>, Rational>,
}

impl Poly {
    /// The variable `x_i` as a polynomial.
    pub fn var(i: u8) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![i], Rational::one());
        Poly { terms }
    }

    /// Constant polynomial.
    pub fn constant(q: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !q.is_zero() {
            terms.insert(Vec::new(), q);
        }
        Poly { terms }
    }

    /// Adds `c * x^mono` in place; removes the term if it cancels to zero.
    pub fn add_term(&mut self, mono: &[u8], c: &Rational) {
        if c.is_zero() {
            return;
        }
        debug_assert!(mono.windows(2).all(|w| w[0] <= w[1]), "unsorted monomial");
        let entry = self.terms.entry(mono.to_vec()).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(mono);
        }
    }

    /// Coefficient of the monomial with the given sorted index multiset.
    pub fn coeff(&self, mono: &[u8]) -> Rational {
        self.terms.get(mono).cloned().unwrap_or_else(Rational::zero)
    }

    /// Total degree; zero for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// True if every monomial has the same total degree `d` (or the poly is 0).
    pub fn is_homogeneous(&self, d: usize) -> bool {
        self.terms.keys().all(|m| m.len() == d)
    }

    /// Iterates over `(monomial, coefficient)` pairs in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u8], &Rational)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    /// Substitutes the given values for `x0, x1, ...`.
    ///
    /// Panics if a variable index is out of range of `values`.
    pub fn eval(&self, values: &[Rational]) -> Rational {
        let mut acc = Rational::zero();
        for (mono, c) in &self.terms {
            let mut term = c.clone();
            for &i in mono {
                term *= &values[i as usize];
            }
            acc += term;
        }
        acc
    }
}

impl Zero for Poly {
    fn zero() -> Self {
        Poly::default()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for Poly {
    fn one() -> Self {
        Poly::constant(Rational::one())
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(mut self, rhs: Poly) -> Poly {
        for (m, c) in rhs.terms {
            self.add_term(&m, &c);
        }
        self
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        self + (-rhs)
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(mut self) -> Poly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        let mut out = Poly::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let mut mono = Vec::with_capacity(ma.len() + mb.len());
                mono.extend_from_slice(ma);
                mono.extend_from_slice(mb);
                mono.sort_unstable();
                out.add_term(&mono, &(ca * cb));
            }
        }
        out
    }
}

impl Ring for Poly {
    fn from_rational(q: &Rational) -> Self {
        Poly::constant(q.clone())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (mono, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mag = if neg { -c.clone() } else { c.clone() };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                let mut first = true;
                let mut i = 0;
                while i < mono.len() {
                    let v = mono[i];
                    let mut e = 0;
                    while i < mono.len() && mono[i] == v {
                        e += 1;
                        i += 1;
                    }
                    if !first {
                        write!(f, "*")?;
                    }
                    first = false;
                    if e == 1 {
                        write!(f, "x{v}")?;
                    } else {
                        write!(f, "x{v}^{e}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
