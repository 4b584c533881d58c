use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("invalid flag type: {0}")]
    InvalidFlag(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("{perm} is not a minimal representative for flag type {flag}")]
    NotMinimalRepresentative { perm: String, flag: String },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("index {index} out of range (valid: {valid})")]
    IndexOutOfRange { index: usize, valid: String },

    #[error("codimensions sum to {found}, expected {expected}")]
    CodimensionMismatch { expected: usize, found: usize },

    #[error("tuple is not Levi-movable: {0}")]
    NotLeviMovable(String),

    #[error("division by x{0} - x{1} left a nonzero remainder")]
    InexactDivision(usize, usize),

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
