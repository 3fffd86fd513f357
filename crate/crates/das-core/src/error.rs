use thiserror::Error;

/// Errors produced by generators, selection operators and the experiment harness.
#[derive(Debug, Error)]
pub enum DasError {
    /// An argument violates an operation precondition.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configuration field is missing or holds an unusable value.
    #[error("invalid config field `{field}`: {reason}")]
    Config { field: String, reason: String },

    /// Vector/matrix shapes do not line up.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, DasError>;

impl DasError {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        DasError::InvalidArgument(msg.into())
    }

    pub(crate) fn config(field: impl Into<String>, reason: impl Into<String>) -> Self {
        DasError::Config {
            field: field.into(),
            reason: reason.into(),
        }
    }
}
