use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible algebras: level {left} vs level {right}")]
    LevelMismatch { left: u32, right: u32 },

    #[error("index {index} out of range (must be < {bound})")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("not a signed permutation: {0}")]
    NotASignedPermutation(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("dimension overflow while building a {0} matrix")]
    Overflow(&'static str),

    #[error("dense oracle limited to dimension {bound}, got {dim}")]
    OracleBound { dim: usize, bound: usize },

    #[error("normal vector must be nonzero")]
    ZeroVector,

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
