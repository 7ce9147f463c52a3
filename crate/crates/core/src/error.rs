use thiserror::Error;

/// Errors raised by the exact-arithmetic and qudit constructors.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("zero denominator in rational {0}/0")]
    ZeroDenominator(String),

    #[error("dimension must be at least 1")]
    ZeroDimension,

    #[error("{what} = {value} is out of range (expected 0 <= {what} < {bound})")]
    OutOfRange {
        what: &'static str,
        value: usize,
        bound: usize,
    },

    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("{what} = {value} is not a bit (expected 0 or 1)")]
    NotABit { what: &'static str, value: u64 },

    #[error("cannot parse {kind} literal {input:?}: {reason}")]
    Parse {
        kind: &'static str,
        input: String,
        reason: String,
    },

    #[error("max d = {requested} exceeds the configured cap of {cap}")]
    CapExceeded { requested: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
