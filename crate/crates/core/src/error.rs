use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: String, m: String },

    #[error("invalid modulus {0}: must be at least 2")]
    InvalidModulus(String),

    #[error("matrix is singular")]
    Singular,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid characteristic exponents: {0}")]
    InvalidExponents(String),

    #[error("type matrix does not have a primitive first edge (entry (1,1) = {0})")]
    NotPrimitiveEdge(String),

    #[error("smooth type (n = 1) has no Hirzebruch-Jung string")]
    NoString,

    #[error("enumeration of {order} elements exceeds the bound {bound}")]
    EnumerationBound { order: String, bound: u64 },

    #[error("dimension {0} too large for this operation")]
    DimensionTooLarge(usize),

    #[error("parse error: {0}")]
    Parse(String),

    /// An identity that must hold for every valid input failed.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
