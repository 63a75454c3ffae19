use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{what} = {value} exceeds the configured bound {limit}")]
    BoundExceeded {
        what: &'static str,
        value: u64,
        limit: u64,
    },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: u64, found: u64 },

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("malformed partition {text:?}: {reason}")]
    MalformedPartition { text: String, reason: String },

    #[error("parts are not weakly decreasing: {0:?}")]
    NotDecreasing(Vec<u32>),

    #[error("inner shape {inner:?} does not fit inside {outer:?}")]
    NotContained { outer: Vec<u32>, inner: Vec<u32> },

    #[error("skew shape {outer:?}/{inner:?} has no cells")]
    EmptySkewShape { outer: Vec<u32>, inner: Vec<u32> },

    #[error("{q} does not divide {size}")]
    NotDivisible { q: u64, size: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An exact division that must hold did not; this always means a bug.
    #[error("inexact division: {numerator} is not divisible by {denominator}")]
    Inexact {
        numerator: String,
        denominator: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
