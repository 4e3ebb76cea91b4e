use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector must have at least one coordinate")]
    EmptyVector,

    #[error("vector has a non-finite coordinate at index {0}")]
    NonFinite(usize),

    #[error("{0} must be non-zero")]
    ZeroVector(&'static str),

    #[error("epsilon must lie in [0, 1), got {0}")]
    InvalidEpsilon(f64),

    #[error("invalid norm: {0}")]
    InvalidNorm(String),

    #[error("operation requires a two-dimensional space, got dimension {0}")]
    NotPlanar(usize),

    #[error("x must be a unit vector, got norm {0}")]
    NonUnit(f64),

    #[error("vectors are linearly dependent")]
    LinearlyDependent,

    #[error("point is not smooth: one-sided derivative gap {gap:e} exceeds {tol:e}")]
    NonSmooth { gap: f64, tol: f64 },

    #[error("invalid cone: {0}")]
    InvalidCone(String),

    #[error("search did not converge: {0}")]
    NotConverged(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("could not parse norm description: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
