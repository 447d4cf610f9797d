//! Exact-arithmetic invariants deciding when a form is a sum of powers of
//! linear forms.
//!
//! Everything is computed over arbitrary-precision rationals — no floats,
//! no epsilons. The library provides:
//!
//! * [`forms`]: homogeneous forms in tensor coordinates, parsing/printing,
//!   powers of linear forms, linear substitution, polarization, seeded
//!   sampling ([`sample`]).
//! * [`matrix`]: dense exact linear algebra — fraction-free (Bareiss)
//!   determinants and ranks, Pfaffians by skew elimination and by the
//!   perfect-matchings expansion, principal subpfaffians.
//! * [`aronhold`]: the 9x9/8x8 skew matrices of a ternary cubic whose
//!   Pfaffian is the Aronhold invariant (vanishing on sums of three cubes),
//!   with rank profiles for the smaller secant varieties.
//! * [`secant7`]: the 50x50/45x45 symmetric matrices of a quinary cubic;
//!   `det B = 2P³` recovers the degree-15 invariant `P` whose vanishing is
//!   exactly "sum of seven cubes".
//! * [`catalecticant`]: the middle catalecticant of quartics, Clebsch
//!   detection, and the Segre degree formula.
//! * [`scorza`]: the Scorza map of plane quartics via the symbolic Pfaffian.
//!
//! The invariant matrices are constructed by two independent paths (a
//! contraction formula and a golden table / sign rule) that are reconciled
//! on every call; a disagreement surfaces as [`Error::Inconsistency`].

pub mod aronhold;
pub mod catalecticant;
pub mod error;
pub mod forms;
pub mod matrix;
pub mod parser;
pub mod poly;
pub mod rational;
pub mod sample;
pub mod scorza;
pub mod secant7;

pub use error::{Error, Result};
pub use forms::{act, polar_contract, symbolic_vector, Form, GForm, LinearChange, MultiIndex};
pub use matrix::Matrix;
pub use parser::{parse_form, print_form};
pub use poly::Poly;
pub use rational::{cube_root, Integer, Rational, Ring};

pub use aronhold::{
    aronhold_invariant, build_a, build_a_deleting, build_a_matrix, build_aprime,
    plane_rank_profile, AronholdMatrices, PlaneRankProfile,
};
pub use catalecticant::{
    build_c, degree_two_basis, is_clebsch, segre_degree, CatalecticantMatrix, ClebschProfile,
};
pub use sample::{random_form, random_linear, random_powers_sum, random_sl};
pub use scorza::{scorza_map, scorza_matrix, SkewPencil};
pub use secant7::{
    build_b, build_block, build_bprime, det_b, in_sigma7, p_invariant, SevenSecantMatrices,
    Sigma7Profile,
};
