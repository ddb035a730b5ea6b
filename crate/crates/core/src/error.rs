use thiserror::Error;

/// Errors produced by the combinatorial, complex, and homology routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("{upper} is not an elementary cover of {lower}")]
    InvalidCover { lower: String, upper: String },

    #[error("unsupported size: n = {n} exceeds the maximum of {max}")]
    UnsupportedSize { n: usize, max: usize },

    #[error("invalid complex: composite of differentials is nonzero at degree {degree}")]
    InvalidComplex { degree: usize },

    #[error("resource limit: {0}")]
    Resource(String),

    #[error("verification mismatch: {0}")]
    Mismatch(String),

    #[error("decomposition mismatch at {lower} -> {upper}: {reason}")]
    DecompositionMismatch {
        lower: String,
        upper: String,
        reason: String,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
