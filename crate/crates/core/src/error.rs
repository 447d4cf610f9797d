use thiserror::Error;

/// Errors raised by parsing, shape checks and exact linear algebra.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    /// Malformed textual or JSON input. `pos` is a byte offset into the input.
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    /// A parsed term is not homogeneous of the expected degree.
    #[error("degree mismatch at byte {pos}: term has degree {found}, expected {expected}")]
    DegreeMismatch {
        pos: usize,
        found: usize,
        expected: usize,
    },

    /// A parsed variable index is not below the declared number of variables.
    #[error("variable x{var} out of range at byte {pos}: form has {nvars} variables")]
    VarOutOfRange { pos: usize, var: u32, nvars: u8 },

    /// An argument had the wrong arity, degree or dimensions.
    #[error("shape error: {0}")]
    Shape(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("pfaffian requires even order, got {0}")]
    OddOrder(usize),

    #[error("pfaffian requires an antisymmetric matrix")]
    NotAntisymmetric,

    /// A mathematical identity the implementation relies on failed to hold.
    /// Signals a bug, never bad user input.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax {
            pos,
            msg: msg.into(),
        }
    }

    pub(crate) fn shape(msg: impl Into<String>) -> Self {
        Error::Shape(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
