use thiserror::Error;

/// Errors produced by configuration handling and numeric domain checks.
#[derive(Debug, Error)]
pub enum Error {
    /// A value fell outside its physical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// A config file line failed to parse or validate.
    #[error("config error (line {line}): {message}")]
    Config { line: usize, message: String },

    /// A structurally invalid request (unknown preset, malformed sweep).
    #[error("invalid request: {0}")]
    Invalid(String),

    /// An internal consistency check failed on caller-provided data.
    #[error("integrity error: {0}")]
    Integrity(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
