//! The 45x45 symmetric matrix of a quinary cubic and the degree-15 invariant
//! `P` cutting out the seventh secant variety of the cubic Veronese of P^4.
//!
//! A cubic `f` in five variables induces a symmetric pairing `B'_f` on the
//! 50-dimensional space `Λ⁴V ⊗ Λ²V` with basis `(e_s∧e_t) ⊗ (4-subset)`:
//! blocks ordered lexicographically by the pair `(s,t)`, inner basis
//! lexicographic on 4-subsets. The block at row-pair `{s,t}`, column-pair
//! `{u,v}` vanishes unless the pairs are disjoint, in which case it equals
//! `ε · A_m` where `m` completes `{s,t,u,v}` to `{0,...,4}` and `ε` is the
//! sign of the permutation `(s,t,u,v,m)`. The building blocks `A_i` are the
//! symmetric 5x5 matrices with `(−1)^{s+t} v_{ist}` at entry `(5−s, 5−t)`
//! (1-based). `B'_f` has a 5-dimensional kernel independent of `f`; deleting
//! rows and columns 5, 10, 15, 16, 20 (1-based) produces the 45x45 matrix
//! `B_f` with `det B_f = 2 P(f)³`, and `P = 0` is exactly the condition for
//! `f` to be a sum of seven cubes.
//!
//! As in the Aronhold module, two independent constructions (block sign rule
//! and direct contraction) are reconciled on every call.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::forms::Form;
use crate::matrix::Matrix;
use crate::rational::{cube_root, perm_sign, Rational};

/// The ten index pairs in lexicographic order (block order of `B'`).
pub const PAIRS: [(u8, u8); 10] = [
    (0, 1),
    (0, 2),
    (0, 3),
    (0, 4),
    (1, 2),
    (1, 3),
    (1, 4),
    (2, 3),
    (2, 4),
    (3, 4),
];

/// The five 4-subsets in lexicographic order (inner basis of each block).
/// `QUADS[t]` is missing the index `4 - t`.
pub const QUADS: [[u8; 4]; 5] = [
    [0, 1, 2, 3],
    [0, 1, 2, 4],
    [0, 1, 3, 4],
    [0, 2, 3, 4],
    [1, 2, 3, 4],
];

/// 1-based positions of the rows/columns deleted from `B'` to form `B`.
pub const DELETED_INDICES: [usize; 5] = [5, 10, 15, 16, 20];

fn check_shape(f: &Form) -> Result<()> {
    if f.nvars() != 5 || f.degree() != 3 {
        return Err(Error::shape(format!(
            "the seven-secant matrices require a quinary cubic, got {} variables, degree {}",
            f.nvars(),
            f.degree()
        )));
    }
    Ok(())
}

/// The symmetric 5x5 block `A_i`: entry `(5−s, 5−t)` (1-based) is
/// `(−1)^{s+t} v_{ist}`, i.e. 0-based entry `(r, c) = (−1)^{r+c} v_{i,4−r,4−c}`.
pub fn build_block(f: &Form, i: usize) -> Result<Matrix<Rational>> {
    check_shape(f)?;
    if i > 4 {
        return Err(Error::shape(format!("block index {i} out of range 0..=4")));
    }
    let mut m = Matrix::zeros(5, 5);
    for r in 0..5usize {
        for c in 0..5usize {
            let s = (4 - r) as u8;
            let t = (4 - c) as u8;
            let v = f.coeff_ids(&[i as u8, s, t]);
            m.set(r, c, if (s + t).is_multiple_of(2) { v } else { -v });
        }
    }
    Ok(m)
}

/// Direct contraction entry of `B'_f` at basis positions `bi, bj`
/// (each `5 * pair_index + quad_index`), the second, independent path.
fn contraction_entry(f: &Form, bi: usize, bj: usize) -> Rational {
    let (pi, qi) = (bi / 5, bi % 5);
    let (pj, qj) = (bj / 5, bj % 5);
    let xi = PAIRS[pi];
    let xj = PAIRS[pj];
    // The column quad fixes the first tensor slot, the row quad the third;
    // the middle slot must complete the two pairs to all five indices.
    let p = (4 - qj) as u8;
    let r = (4 - qi) as u8;
    let mut used = [false; 5];
    for idx in [xi.0, xi.1, xj.0, xj.1] {
        if used[idx as usize] {
            return Rational::zero();
        }
        used[idx as usize] = true;
    }
    let q = (0..5u8).find(|&k| !used[k as usize]).expect("four used");
    let s1 = perm_sign(&[QUADS[qj][0], QUADS[qj][1], QUADS[qj][2], QUADS[qj][3], p]);
    let s2 = perm_sign(&[xj.0, xj.1, q, xi.0, xi.1]);
    let s3 = perm_sign(&[r, QUADS[qi][0], QUADS[qi][1], QUADS[qi][2], QUADS[qi][3]]);
    let v = f.coeff_ids(&[p, q, r]);
    if s1 * s2 * s3 >= 0 {
        v
    } else {
        -v
    }
}

/// Builds the 50x50 symmetric matrix `B'_f`.
///
/// Constructed from the block sign rule, then every entry is re-derived by
/// the direct contraction; any disagreement is an internal error.
pub fn build_bprime(f: &Form) -> Result<Matrix<Rational>> {
    check_shape(f)?;
    let blocks: Vec<Matrix<Rational>> = (0..5).map(|i| build_block(f, i)).collect::<Result<_>>()?;
    let mut m = Matrix::zeros(50, 50);
    for (pi, &(s, t)) in PAIRS.iter().enumerate() {
        for (pj, &(u, v)) in PAIRS.iter().enumerate() {
            if s == u || s == v || t == u || t == v {
                continue; // overlapping pairs: zero block
            }
            let mm = (0u8..5).find(|k| ![s, t, u, v].contains(k)).expect("disjoint");
            let eps = perm_sign(&[s, t, u, v, mm]);
            let block = &blocks[mm as usize];
            for qi in 0..5 {
                for qj in 0..5 {
                    let val = block.get(qi, qj).clone();
                    m.set(5 * pi + qi, 5 * pj + qj, if eps > 0 { val } else { -val });
                }
            }
        }
    }
    for bi in 0..50 {
        for bj in 0..50 {
            if m.get(bi, bj) != &contraction_entry(f, bi, bj) {
                return Err(Error::Inconsistency(format!(
                    "B' entry ({}, {}): block rule disagrees with contraction formula",
                    bi + 1,
                    bj + 1
                )));
            }
        }
    }
    Ok(m)
}

/// The block, 50x50 and 45x45 matrices of a quinary cubic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SevenSecantMatrices {
    /// The five symmetric 5x5 blocks `A_0..A_4`.
    pub blocks: Vec<Matrix<Rational>>,
    /// The 50x50 symmetric matrix `B'_f`.
    pub bprime: Matrix<Rational>,
    /// The 45x45 symmetric matrix `B_f`.
    pub b: Matrix<Rational>,
    /// 1-based positions removed from `B'` (always 5, 10, 15, 16, 20).
    pub deleted_indices: [usize; 5],
}

/// Builds all the matrices, deleting the five fixed rows/columns.
pub fn build_b(f: &Form) -> Result<SevenSecantMatrices> {
    let blocks: Vec<Matrix<Rational>> = (0..5).map(|i| build_block(f, i)).collect::<Result<_>>()?;
    let bprime = build_bprime(f)?;
    let zero_based: Vec<usize> = DELETED_INDICES.iter().map(|i| i - 1).collect();
    let b = bprime.delete_rows_cols(&zero_based);
    Ok(SevenSecantMatrices {
        blocks,
        bprime,
        b,
        deleted_indices: DELETED_INDICES,
    })
}

/// `det B_f`, a degree-45 polynomial in the coefficients, equal to `2 P(f)³`.
pub fn det_b(f: &Form) -> Result<Rational> {
    build_b(f)?.b.det()
}

/// The degree-15 invariant `P(f)`, recovered as the exact cube root of
/// `det B_f / 2`. The cube root must exist for rational input; its absence
/// would falsify the determinant identity and is reported as an internal
/// error, never approximated.
pub fn p_invariant(f: &Form) -> Result<Rational> {
    let det = det_b(f)?;
    let half = det / Rational::from_integer(2.into());
    cube_root(&half).ok_or_else(|| {
        Error::Inconsistency("det B_f / 2 is not the cube of a rational".to_string())
    })
}

/// Membership in the seventh secant variety (sums of seven cubes), decided
/// exactly by `det B_f = 0`; the rank is reported alongside.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Sigma7Profile {
    pub member: bool,
    pub rank_b: usize,
}

/// Decides membership of `f` in the closure of sums of seven cubes.
///
/// For members the rank bound `rank B_f <= 42` (the rank drops by at least
/// three on the hypersurface) is asserted as a consistency check.
pub fn in_sigma7(f: &Form) -> Result<Sigma7Profile> {
    let b = build_b(f)?.b;
    let det = b.det()?;
    let rank_b = b.rank();
    let member = det.is_zero();
    if member && rank_b > 42 {
        return Err(Error::Inconsistency(format!(
            "det B_f = 0 but rank B_f = {rank_b} > 42"
        )));
    }
    Ok(Sigma7Profile { member, rank_b })
}
