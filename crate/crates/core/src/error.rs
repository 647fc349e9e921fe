//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by code construction, parsing, estimation and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// Parameters that can never describe a valid object (bad degrees,
    /// divisibility violations, inconsistent simulation configs, ...).
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    /// A randomized construction exhausted its retry budget.
    #[error("construction failed: {0}")]
    ConstructionFailed(String),

    /// Malformed alist text. `line` is 1-based.
    #[error("alist parse error at line {line}: {msg}")]
    AlistParse { line: usize, msg: String },

    /// Vector/matrix dimensions do not match.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// A quantity diverges at the requested parameter point.
    #[error("divergent value: {0}")]
    Divergence(String),

    /// Argument outside the mathematical domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn config(msg: impl Into<String>) -> Self {
        Error::InvalidConfig(msg.into())
    }
}
