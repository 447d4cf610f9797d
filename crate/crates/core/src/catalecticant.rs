//! The middle catalecticant of quartics, Clebsch detection, and the Segre
//! degree formula for secant varieties of quadrics.
//!
//! A quartic `f` in `n + 1` variables contracts pairs of degree-2
//! differential operators: in the basis of degree-2 multi-indexes the
//! resulting symmetric matrix `C_f` has entry `f_{α∪β}` at `(α, β)`. Its
//! determinant vanishes exactly on the closure of sums of `size - 1` fourth
//! powers; for ternary quartics (`n = 2`, size 6) that locus is the Clebsch
//! quartics, the sums of five fourth powers.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::forms::{Form, MultiIndex};
use crate::matrix::Matrix;
use crate::rational::{binomial, Integer, Rational};

/// The degree-2 basis in the fixed order: sorted by maximal index, then
/// lexicographically — `00, 01, 11, 02, 12, 22, 03, ...`.
pub fn degree_two_basis(nvars: u8) -> Vec<MultiIndex> {
    let mut basis = Vec::new();
    for m in 0..nvars {
        for i in 0..=m {
            basis.push(MultiIndex::from_ids(&[i, m]));
        }
    }
    basis
}

/// The catalecticant matrix of a quartic, with its basis bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalecticantMatrix {
    /// `n` where the quartic lives in `n + 1` variables.
    pub n: usize,
    /// Matrix order, `binomial(n + 2, 2)`.
    pub size: usize,
    /// The symmetric `size x size` matrix.
    pub matrix: Matrix<Rational>,
    /// Row/column labels: degree-2 multi-indexes in the fixed order.
    pub basis: Vec<MultiIndex>,
}

/// Builds the catalecticant `C_f` of a quartic in any number of variables.
pub fn build_c(f: &Form) -> Result<CatalecticantMatrix> {
    if f.degree() != 4 {
        return Err(Error::shape(format!(
            "catalecticant requires degree 4, got degree {}",
            f.degree()
        )));
    }
    if f.nvars() == 0 {
        return Err(Error::shape("catalecticant requires at least one variable"));
    }
    let basis = degree_two_basis(f.nvars());
    let size = basis.len();
    let mut matrix = Matrix::zeros(size, size);
    for (i, alpha) in basis.iter().enumerate() {
        for (j, beta) in basis.iter().enumerate() {
            matrix.set(i, j, f.coeff(&alpha.union(beta)));
        }
    }
    Ok(CatalecticantMatrix {
        n: f.nvars() as usize - 1,
        size,
        matrix,
        basis,
    })
}

/// Clebsch-quartic decision for ternary quartics.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClebschProfile {
    /// True iff `det C_f = 0`, i.e. `f` is a sum of five fourth powers
    /// (possibly degenerately).
    pub clebsch: bool,
    pub det: Rational,
    pub rank: usize,
}

/// Decides whether a ternary quartic is Clebsch.
pub fn is_clebsch(f: &Form) -> Result<ClebschProfile> {
    if f.nvars() != 3 {
        return Err(Error::shape(format!(
            "Clebsch detection is for ternary quartics, got {} variables",
            f.nvars()
        )));
    }
    let c = build_c(f)?;
    let det = c.matrix.det()?;
    let rank = c.matrix.rank();
    Ok(ClebschProfile {
        clebsch: det.is_zero(),
        det,
        rank,
    })
}

/// Degree of the `k`-th secant variety of the quadric Veronese of P^n:
/// `prod_{i=0}^{n-k} binomial(n+1+i, n+1-k-i) / binomial(2i+1, i)`.
///
/// The partial products are exact rationals; the final value must be an
/// integer (it is a projective degree), which is verified.
pub fn segre_degree(n: u64, k: u64) -> Result<Integer> {
    if k < 1 || k > n {
        return Err(Error::shape(format!(
            "segre_degree requires 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    let mut acc = Rational::one();
    for i in 0..=(n - k) {
        let num = binomial(n + 1 + i, n + 1 - k - i);
        let den = binomial(2 * i + 1, i);
        acc *= Rational::new(num, den);
    }
    if !acc.denom().is_one() || !acc.numer().is_positive() {
        return Err(Error::Inconsistency(format!(
            "Segre degree ({n}, {k}) evaluated to the non-integral or non-positive value {acc}"
        )));
    }
    Ok(acc.numer().clone())
}
