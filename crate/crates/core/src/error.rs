use thiserror::Error;

/// Errors raised by constructors and operators in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a composition needs at least one part")]
    EmptyComposition,

    #[error("filling has {found} rows but its shape has {expected}")]
    RowCountMismatch { expected: usize, found: usize },

    #[error("row {row} holds {found} entries but the shape asks for {expected}")]
    RowLengthMismatch {
        row: usize,
        expected: usize,
        found: usize,
    },

    #[error("entry at ({row},{col}) must be a positive integer")]
    NonPositiveEntry { row: usize, col: usize },

    #[error("filling is not semistandard: {0}")]
    NotSemistandard(String),

    #[error("filling has shape {found} but {expected} was required")]
    ShapeMismatch { expected: String, found: String },

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("composition {0} is a partition and has no ascent")]
    IsPartition(String),

    #[error("composition {0} is not weakly increasing")]
    NotWeaklyIncreasing(String),

    #[error("polynomials have arities {0} and {1}")]
    ArityMismatch(usize, usize),

    #[error("division by x{0} - x{1} left a nonzero remainder")]
    InexactDivision(usize, usize),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
