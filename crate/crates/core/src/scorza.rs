//! The Scorza map: plane quartics to plane quartics through the Pfaffian
//! representation of the Aronhold invariant.
//!
//! For a quartic `F` and a symbolic point `x`, the polar cubic `P_x F` has
//! tensor coordinates `sum_i x_i f_{i jkl}`, linear in `x`. Feeding it to the
//! Aronhold construction gives an 8x8 skew matrix of linear forms (a pencil);
//! its Pfaffian is a quartic in `x` — the Scorza quartic `S(F)`. `S(F)(x)`
//! vanishes exactly when the polar cubic at `x` is a sum of three cubes.

use num_traits::Zero;

use crate::aronhold::build_a_matrix;
use crate::error::{Error, Result};
use crate::forms::{polar_contract, symbolic_vector, Form, MultiIndex};
use crate::matrix::Matrix;
use crate::poly::Poly;

/// Skew 8x8 matrix whose entries are linear forms in `x0, x1, x2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkewPencil {
    pub matrix: Matrix<Poly>,
}

fn check_shape(f: &Form) -> Result<()> {
    if f.nvars() != 3 || f.degree() != 4 {
        return Err(Error::shape(format!(
            "the Scorza map requires a ternary quartic, got {} variables, degree {}",
            f.nvars(),
            f.degree()
        )));
    }
    Ok(())
}

/// The Aronhold matrix of the symbolic polar cubic of `F`.
pub fn scorza_matrix(f: &Form) -> Result<SkewPencil> {
    check_shape(f)?;
    let polar = polar_contract(f, &symbolic_vector(3))?;
    let matrix = build_a_matrix(&polar)?;
    for i in 0..8 {
        for j in 0..8 {
            let e = matrix.get(i, j);
            if !e.is_homogeneous(1) {
                return Err(Error::Inconsistency(format!(
                    "pencil entry ({i}, {j}) is not linear in x: {e}"
                )));
            }
        }
    }
    Ok(SkewPencil { matrix })
}

/// The Scorza quartic `S(F)`: the Pfaffian of the pencil, re-encoded in
/// tensor coordinates.
pub fn scorza_map(f: &Form) -> Result<Form> {
    let pencil = scorza_matrix(f)?;
    let pf = pencil.matrix.pfaffian_expansion()?;
    let mut out = Form::zero_form(3, 4);
    if pf.is_zero() {
        return Ok(out);
    }
    if !pf.is_homogeneous(4) {
        return Err(Error::Inconsistency(format!(
            "Scorza Pfaffian is not homogeneous of degree 4: {pf}"
        )));
    }
    for (mono, c) in pf.iter() {
        out.add_monomial(MultiIndex::from_ids(mono), c)?;
    }
    Ok(out)
}
