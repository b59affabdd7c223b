//! Error types shared across the crate.

use thiserror::Error;

/// Errors produced by construction, validation, and consistency checks.
#[derive(Debug, Error)]
pub enum Error {
    /// A Hilbert-space or matrix dimension is out of range.
    #[error("invalid dimension: {0}")]
    InvalidDimension(String),

    /// Two objects that must share a shape do not.
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    /// A generator specification violates its invariants (e.g. non-Hermitian
    /// Hamiltonian beyond tolerance, negative rate).
    #[error("invalid spec: {0}")]
    InvalidSpec(String),

    /// An operator basis fails the orthogonality/Hermiticity requirements.
    #[error("inconsistent basis: {0}")]
    InconsistentBasis(String),

    /// Two algebraically equivalent routes disagreed beyond tolerance.
    /// Signals a bug or a numerically pathological input, never user error.
    #[error("internal consistency check failed: {0}")]
    InternalConsistency(String),

    /// A computed quantity violates a physical invariant it was required
    /// to satisfy (trace preservation, positivity along a trajectory).
    #[error("invariant violation: {0}")]
    InvariantViolation(String),

    /// An argument is outside the mathematical domain of the operation
    /// (e.g. negative evolution time).
    #[error("domain error: {0}")]
    Domain(String),

    /// Input file could not be parsed into a valid object. `field` is the
    /// path of the offending field.
    #[error("parse error at `{field}`: {message}")]
    Parse { field: String, message: String },

    /// The dense linear-algebra backend reported a failure.
    #[error("linear algebra backend error: {0}")]
    Backend(String),
}

impl Error {
    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            field: field.into(),
            message: message.into(),
        }
    }
}

impl From<ndarray_linalg::error::LinalgError> for Error {
    fn from(e: ndarray_linalg::error::LinalgError) -> Self {
        Error::Backend(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
