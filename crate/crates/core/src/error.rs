use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    /// An enumeration would exceed the configured size limit.
    #[error("enumeration cap exceeded: {what} needs 2^{needed}, cap is 2^{cap}")]
    CapExceeded {
        what: &'static str,
        needed: u64,
        cap: u32,
    },

    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(u32, u32),

    /// A division that must be exact left a remainder.
    #[error("inexact division: {0}")]
    Inexact(String),

    /// Input distributions or profiles that cannot come from a real code.
    #[error("inconsistent input: {0}")]
    Inconsistent(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("coset representative lies in the code")]
    RepInCode,

    #[error("hypothesis not met: {0}")]
    Hypothesis(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
