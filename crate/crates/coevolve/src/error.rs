use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("grid mismatch: {0}")]
    GridMismatch(String),
    #[error("no solution: {0}")]
    NoSolution(String),
    #[error("degenerate template: {0}")]
    DegenerateTemplate(String),
    #[error("unsupported configuration: {0}")]
    UnsupportedConfiguration(String),
    #[error("estimation failed: {0}")]
    EstimationFailed(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("internal invariant violation: {0}")]
    Internal(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }
}
