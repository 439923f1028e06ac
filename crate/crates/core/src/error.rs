use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("invalid subalgebra: {0}")]
    InvalidSubalgebra(String),

    #[error("module is over a different algebra: {0}")]
    AlgebraMismatch(String),

    #[error("extension is not Galois")]
    NotGalois,

    #[error("entwining axioms fail: {0}")]
    NotEntwining(String),

    #[error("internal consistency check failed: {0}")]
    Consistency(String),

    #[error("invalid complex: {0}")]
    InvalidComplex(String),

    #[error("unsupported characteristic {0}")]
    UnsupportedCharacteristic(u64),

    #[error("resource cap exceeded in degree {degree}: dimension {dim} > cap {cap}")]
    ResourceCap { degree: usize, dim: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
