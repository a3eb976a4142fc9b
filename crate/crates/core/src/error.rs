//! Shared error type for every failure the library reports to callers.
//!
//! Contract violations (e.g. mismatched ranks passed to internal helpers) panic;
//! everything a caller can plausibly trigger with well-typed input is an `Error`.

use thiserror::Error;

/// Every recoverable failure in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Exact polynomial division was requested but the divisor does not divide.
    #[error("polynomial division is not exact")]
    NotDivisible,

    /// The target vector lies outside the span of the given columns.
    #[error("target vector is not in the span of the given columns")]
    NotInSpan,

    /// The target is in the span over the fraction field, but some coordinate
    /// is not integral over the coefficient ring.
    #[error("solution exists over the fraction field but is not integral")]
    NotIntegral,

    /// A decoration bit was set on an empty block (alpha_k = 1 while lambda_k = 0).
    #[error("decoration bit set on an empty block")]
    BadDecoration,

    /// The permutation is not a minimal-length double coset representative.
    #[error("permutation is not a minimal double-coset representative")]
    NotMinimalRep,

    /// q is not invertible in the chosen coefficient ring (needed by the
    /// signed symmetrizer y_lambda).
    #[error("q is not invertible in this coefficient ring")]
    RingNotInvertible,

    /// An element failed a module membership precondition.
    #[error("element is not in the required module: {0}")]
    NotInModule(String),

    /// An index or parameter was outside its documented range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    /// A computation was refused because it exceeds the configured size guard.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// The Schur-side rank n is too small for the requested construction
    /// (the distinguished idempotent needs n >= r).
    #[error("rank too small: the construction needs n >= r (n = {n}, r = {r})")]
    RankTooSmall { n: usize, r: usize },

    /// Element text failed to parse; byte offset of the failure included.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },
}

/// Convenience alias used across the crate.
pub type Result<T> = std::result::Result<T, Error>;
