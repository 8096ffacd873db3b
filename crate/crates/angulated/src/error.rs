//! Crate-wide error type.
//!
//! Errors split into two kinds so callers (in particular the CLI) can map
//! them to distinct exit codes: [`ErrorKind::Input`] for malformed or
//! out-of-contract input, [`ErrorKind::CheckFailure`] for well-formed input
//! that fails a mathematical check.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Coarse classification used for process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or out-of-contract input (CLI exit code 2).
    Input,
    /// Valid input that fails a mathematical check (CLI exit code 1).
    CheckFailure,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown indecomposable '{0}'")]
    UnknownIndec(String),

    #[error("invalid skeleton: {0}")]
    InvalidSkeleton(String),

    #[error("negative value {value} for '{label}': rank functions are nonnegative")]
    NegativeValue { label: String, value: String },

    #[error(
        "d = {0} is even: the morphism/object correspondence assumes the odd-d hypothesis \
         (alternating half-sums are only well defined for odd d)"
    )]
    EvenD(u32),

    #[error(
        "psi is negative ({value}) on the marked angle {angle}: \
         the input violates the nonnegative-defect axiom"
    )]
    NegativePsi { value: String, angle: String },

    #[error("rank axioms fail: {0}")]
    AxiomsFail(String),

    #[error("unsupported periodicity: {0}")]
    UnsupportedPeriodicity(String),

    #[error("unsupported syzygy: {0}")]
    UnsupportedSyzygy(String),

    #[error("cone dimension {dim} exceeds the configured bound {bound} (set {env} to raise it)")]
    DimensionBound {
        dim: usize,
        bound: usize,
        env: &'static str,
    },

    #[error("enumeration bound exceeded: {0}")]
    EnumerationBound(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("parse error at {location}: {message}")]
    Parse { location: String, message: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::NegativePsi { .. } | Error::AxiomsFail(_) => ErrorKind::CheckFailure,
            _ => ErrorKind::Input,
        }
    }

    /// Shorthand for an [`Error::InvalidInput`] with the given message.
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
