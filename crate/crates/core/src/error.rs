use thiserror::Error;

/// Errors raised by the symbolic algebra and everything layered on it.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("ambient generator counts differ: {left} vs {right}")]
    AmbientMismatch { left: usize, right: usize },

    #[error("generator index {index} out of range for ambient {ambient}")]
    IndexOutOfRange { index: usize, ambient: usize },

    #[error("duplicate generator index {0}")]
    DuplicateIndex(usize),

    #[error("ambient {0} exceeds the supported maximum of {max}", max = crate::clifford::MAX_GENERATORS)]
    AmbientTooLarge(usize),

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("invalid generator set: {0}")]
    InvalidGenerators(String),

    #[error("{target} is not in the closure (closure dimension {dimension})")]
    NotInClosure { target: String, dimension: usize },

    #[error("universality needs an even ambient generator count, got {0}")]
    OddAmbient(usize),

    #[error("matrix is not Hermitian (max deviation {0:e})")]
    NotHermitian(f64),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("labels commute, so their commutator vanishes and the commutator gate is the identity")]
    TrivialCommutator,

    #[error("search cap of {0} exceeded")]
    CapExceeded(u64),

    #[error("precondition failed: {0}")]
    Precondition(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
