use thiserror::Error;

/// Errors shared by the kernel, the valuations and the harness.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("ambient dimension must be at least 2, got {0}")]
    AmbientTooSmall(usize),

    #[error("operation undefined on the empty polytope")]
    EmptyPolytope,

    #[error("linear map is singular")]
    SingularMap,

    #[error("linear map is not unimodular")]
    NotUnimodular,

    #[error("zero vector not allowed here")]
    ZeroVector,

    #[error("evaluation point is the origin (strict mode rejects x = o)")]
    OriginArgument,

    #[error("polytope does not contain the origin")]
    OriginOutside,

    #[error("function is not exactly evaluable (float-only variant)")]
    NotExact,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("valuation is not classifiable: {0}")]
    NotClassifiable(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn parse(msg: impl Into<String>) -> Self {
        Error::Parse(msg.into())
    }

    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
