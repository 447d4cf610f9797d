//! The Aronhold invariant of ternary cubics as a Pfaffian.
//!
//! A cubic `f` in three variables induces a skew pairing on the 9-dimensional
//! space spanned by `(w_a ∧ w_b) w_c`, realized as endomorphisms
//! `M_{(a,b),c}: w -> (e_a ∧ e_b ∧ w) e_c` (orientation `e0∧e1∧e2 -> 1`).
//! In the basis ordered `(w0∧w1)w0, (w0∧w1)w1, (w0∧w1)w2, (w0∧w2)w0, ...,
//! (w1∧w2)w2` the matrix `A'_f` has entries `±v_{ijk}`; its three middle
//! basis vectors satisfy one trace relation, and deleting the third row and
//! column leaves a skew 8x8 matrix `A_f` whose Pfaffian is the Aronhold
//! invariant: degree 4 in the coefficients, vanishing exactly on sums of
//! three cubes (the closure of the Fermat orbit).
//!
//! Two independent constructions ship and are reconciled on every call: a
//! contraction formula over ordered index triples, and a hard-coded golden
//! entry table. A mismatch aborts with an internal-consistency error.

use crate::error::{Error, Result};
use crate::forms::GForm;
use crate::matrix::Matrix;
use crate::rational::{perm_sign, Rational, Ring};

/// Basis pairs `(a, b)` in order; the basis element `3 * p + c` is
/// `(w_a ∧ w_b) w_c` for `(a, b) = PAIRS[p]`.
pub const PAIRS: [(u8, u8); 3] = [(0, 1), (0, 2), (1, 2)];
/// Orientation sign `ε(a, b, complement)` of each pair.
const PAIR_SIGN: [i8; 3] = [1, -1, 1];
/// The index missing from each pair.
const PAIR_COMPLEMENT: [u8; 3] = [2, 1, 0];

/// Golden 9x9 entry table: `(sign, indices)` meaning `sign * v_{indices}`,
/// sign 0 for structural zeros. Row-major, basis as in the module docs.
#[rustfmt::skip]
const GOLDEN: [[(i8, [u8; 3]); 9]; 9] = [
    [(0,[0,0,0]), ( 1,[2,2,2]), (-1,[1,2,2]), (0,[0,0,0]), (-1,[1,2,2]), ( 1,[1,1,2]), (0,[0,0,0]), ( 1,[0,2,2]), (-1,[0,1,2])],
    [(-1,[2,2,2]), (0,[0,0,0]), ( 1,[0,2,2]), ( 1,[1,2,2]), (0,[0,0,0]), (-1,[0,1,2]), (-1,[0,2,2]), (0,[0,0,0]), ( 1,[0,0,2])],
    [( 1,[1,2,2]), (-1,[0,2,2]), (0,[0,0,0]), (-1,[1,1,2]), ( 1,[0,1,2]), (0,[0,0,0]), ( 1,[0,1,2]), (-1,[0,0,2]), (0,[0,0,0])],
    [(0,[0,0,0]), (-1,[1,2,2]), ( 1,[1,1,2]), (0,[0,0,0]), ( 1,[1,1,2]), (-1,[1,1,1]), (0,[0,0,0]), (-1,[0,1,2]), ( 1,[0,1,1])],
    [( 1,[1,2,2]), (0,[0,0,0]), (-1,[0,1,2]), (-1,[1,1,2]), (0,[0,0,0]), ( 1,[0,1,1]), ( 1,[0,1,2]), (0,[0,0,0]), (-1,[0,0,1])],
    [(-1,[1,1,2]), ( 1,[0,1,2]), (0,[0,0,0]), ( 1,[1,1,1]), (-1,[0,1,1]), (0,[0,0,0]), (-1,[0,1,1]), ( 1,[0,0,1]), (0,[0,0,0])],
    [(0,[0,0,0]), ( 1,[0,2,2]), (-1,[0,1,2]), (0,[0,0,0]), (-1,[0,1,2]), ( 1,[0,1,1]), (0,[0,0,0]), ( 1,[0,0,2]), (-1,[0,0,1])],
    [(-1,[0,2,2]), (0,[0,0,0]), ( 1,[0,0,2]), ( 1,[0,1,2]), (0,[0,0,0]), (-1,[0,0,1]), (-1,[0,0,2]), (0,[0,0,0]), ( 1,[0,0,0])],
    [( 1,[0,1,2]), (-1,[0,0,2]), (0,[0,0,0]), (-1,[0,1,1]), ( 1,[0,0,1]), (0,[0,0,0]), ( 1,[0,0,1]), (-1,[0,0,0]), (0,[0,0,0])],
];

fn check_shape<R: Ring>(f: &GForm<R>) -> Result<()> {
    if f.nvars() != 3 || f.degree() != 3 {
        return Err(Error::shape(format!(
            "Aronhold matrices require a ternary cubic, got {} variables, degree {}",
            f.nvars(),
            f.degree()
        )));
    }
    Ok(())
}

/// Decomposes basis position `i` (0-based) into (pair index, output index).
fn basis(i: usize) -> (usize, u8) {
    (i / 3, (i % 3) as u8)
}

/// Contraction-formula entry `(i, j)` (0-based): with `k` the complement of
/// the pair and `c` the output index of each basis element,
/// `s_i s_j * sum_q v_{k_j, q, k_i} * ε(c_j, q, c_i)`.
fn contraction_entry<R: Ring>(f: &GForm<R>, i: usize, j: usize) -> R {
    let (pi, ci) = basis(i);
    let (pj, cj) = basis(j);
    let ki = PAIR_COMPLEMENT[pi];
    let kj = PAIR_COMPLEMENT[pj];
    let mut acc = R::zero();
    for q in 0..3u8 {
        let eps = perm_sign(&[cj, q, ci]);
        if eps == 0 {
            continue;
        }
        let v = f.coeff_ids(&[kj, q, ki]);
        if v.is_zero() {
            continue;
        }
        acc = if eps > 0 { acc + v } else { acc - v };
    }
    if PAIR_SIGN[pi] * PAIR_SIGN[pj] > 0 {
        acc
    } else {
        -acc
    }
}

/// Builds the 9x9 matrix `A'_f` over any coefficient ring.
///
/// Every entry is produced by the contraction formula and checked against
/// the golden table; the two independent paths must agree exactly.
pub fn build_aprime<R: Ring>(f: &GForm<R>) -> Result<Matrix<R>> {
    check_shape(f)?;
    let mut m = Matrix::zeros(9, 9);
    for (i, golden_row) in GOLDEN.iter().enumerate() {
        for (j, &(sign, ids)) in golden_row.iter().enumerate() {
            let computed = contraction_entry(f, i, j);
            let expected = match sign {
                0 => R::zero(),
                1 => f.coeff_ids(&ids),
                _ => -f.coeff_ids(&ids),
            };
            if computed != expected {
                return Err(Error::Inconsistency(format!(
                    "A' entry ({}, {}): contraction formula disagrees with golden table",
                    i + 1,
                    j + 1
                )));
            }
            m.set(i, j, computed);
        }
    }
    Ok(m)
}

/// The rows (1-based: 3, 5, 7) any one of which may be deleted; their
/// alternating sum is the trace relation.
pub const DELETABLE: [usize; 3] = [3, 5, 7];

/// `A'_f` with one legal row/column pair removed (1-based index 3, 5 or 7).
pub fn build_a_deleting<R: Ring>(f: &GForm<R>, one_based: usize) -> Result<Matrix<R>> {
    if !DELETABLE.contains(&one_based) {
        return Err(Error::shape(format!(
            "deletable indices are 3, 5, 7 (got {one_based})"
        )));
    }
    Ok(build_aprime(f)?.delete_rows_cols(&[one_based - 1]))
}

/// The skew 8x8 matrix `A_f` (fixed deletion at index 3), over any ring.
pub fn build_a_matrix<R: Ring>(f: &GForm<R>) -> Result<Matrix<R>> {
    build_a_deleting(f, 3)
}

/// The 9x9 and 8x8 Aronhold matrices of a rational ternary cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AronholdMatrices {
    /// 9x9 skew matrix `A'_f`.
    pub aprime: Matrix<Rational>,
    /// 8x8 skew matrix `A_f`.
    pub a: Matrix<Rational>,
    /// The deleted row/column (1-based); always 3.
    pub deleted_index: usize,
}

/// Builds both Aronhold matrices with the fixed deletion.
pub fn build_a(f: &GForm<Rational>) -> Result<AronholdMatrices> {
    let aprime = build_aprime(f)?;
    let a = aprime.delete_rows_cols(&[2]);
    Ok(AronholdMatrices {
        aprime,
        a,
        deleted_index: 3,
    })
}

/// The Aronhold invariant: the Pfaffian of `A_f`. Degree 4 in the
/// coefficients; vanishes exactly when `f` is a sum of three cubes (or a
/// degeneration of one).
pub fn aronhold_invariant(f: &GForm<Rational>) -> Result<Rational> {
    build_a(f)?.a.pfaffian()
}

/// Rank of `A_f` and the secant-variety membership bits it decides.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlaneRankProfile {
    /// Rank of the 8x8 matrix `A_f`.
    pub rank_a: usize,
    /// `in_sigma[k-1]` = "f lies in the k-th secant variety", decided by
    /// `rank_a <= 2k`.
    pub in_sigma: [bool; 3],
}

impl PlaneRankProfile {
    pub fn in_sigma_k(&self, k: usize) -> bool {
        self.in_sigma[k - 1]
    }
}

/// Computes the rank profile of a ternary cubic.
///
/// For `k = 2` the equivalent subpfaffian criterion (all 6x6 principal
/// subpfaffians vanish) is evaluated independently and must agree with the
/// rank threshold.
pub fn plane_rank_profile(f: &GForm<Rational>) -> Result<PlaneRankProfile> {
    let a = build_a(f)?.a;
    let rank_a = a.rank();
    let in_sigma = [rank_a <= 2, rank_a <= 4, rank_a <= 6];
    let sub6_vanish = a
        .principal_subpfaffians(6)?
        .iter()
        .all(num_traits::Zero::is_zero);
    if sub6_vanish != in_sigma[1] {
        return Err(Error::Inconsistency(format!(
            "sigma_2 criteria disagree: rank {rank_a} vs 6x6 subpfaffians all zero = {sub6_vanish}"
        )));
    }
    Ok(PlaneRankProfile { rank_a, in_sigma })
}
