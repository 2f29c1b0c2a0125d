//! Error type shared across the crate.

use std::fmt;

use crate::arthur::ValidationReport;

/// Errors produced by the library.
///
/// Constraint violations found by parameter validation are *not* errors
/// (they are data, see [`crate::arthur::ValidationReport`]); an error is
/// raised only when an operation is invoked outside its domain.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Input outside the mathematical domain of the operation.
    Domain(String),
    /// Vector or multiset dimension mismatch.
    Dimension { expected: usize, got: usize },
    /// Character exponents with `p - q` not an integer.
    MalformedCharacter(String),
    /// Langlands data requested for a ramified inducing character (`p = q`).
    Ramified,
    /// Operation requires a parameter that passes validation.
    RejectedParameter(ValidationReport),
    /// Parameter shape the admissibility analysis proves impossible.
    Inconsistency(String),
    /// Tempered bound for this degree is neither built in nor injected.
    UnresolvedBound { degree: u32 },
    /// Enumeration would exceed the configured ceiling.
    CeilingExceeded { limit: u64 },
    /// Malformed configuration or input file.
    Config(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Dimension { expected, got } => {
                write!(f, "dimension error: expected {expected}, got {got}")
            }
            Error::MalformedCharacter(msg) => write!(f, "malformed character: {msg}"),
            Error::Ramified => write!(f, "ramified inducing character (p = q)"),
            Error::RejectedParameter(report) => {
                write!(f, "rejected parameter: {report}")
            }
            Error::Inconsistency(msg) => write!(f, "inconsistent parameter: {msg}"),
            Error::UnresolvedBound { degree } => {
                write!(f, "tempered bound for degree {degree} is not known; inject it via config")
            }
            Error::CeilingExceeded { limit } => {
                write!(f, "enumeration ceiling of {limit} nodes exceeded")
            }
            Error::Config(msg) => write!(f, "config error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
