//! Error type shared by every module in the crate.

use thiserror::Error;

/// Everything that can go wrong when building contexts, parsing text,
/// doing arithmetic, or running theorem checkers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A context spec violates one of its invariants.
    #[error("REJECT_SPEC: {reason}")]
    RejectSpec { reason: String },

    /// A literal used a symbol the context does not define.
    #[error("UNKNOWN_SYMBOL: `{symbol}` at offset {position}")]
    UnknownSymbol { symbol: String, position: usize },

    #[error("DIVISION_BY_ZERO")]
    DivisionByZero,

    /// Division left the representable coefficient set (only possible in
    /// the polynomial host `Q[t]`, where `t` has no inverse).
    #[error("NOT_DIVISIBLE: quotient is not representable in this context")]
    NotDivisible,

    /// Two values from different contexts were mixed in one operation.
    #[error("CONTEXT_MISMATCH")]
    ContextMismatch,

    /// The zero polynomial has no degree and no deficit.
    #[error("ZERO_POLYNOMIAL")]
    ZeroPolynomial,

    /// A result would need more coefficients than the configured cap.
    #[error("DEGREE_OVERFLOW: result needs {needed} coefficients, cap is {cap}")]
    DegreeOverflow { needed: usize, cap: usize },

    /// A generator was asked for something its pool cannot produce.
    #[error("UNSATISFIABLE_CONSTRAINTS: {reason}")]
    UnsatisfiableConstraints { reason: String },

    #[error("SYNTAX_ERROR at offset {position}: {message}")]
    SyntaxError { position: usize, message: String },

    /// A variable outside the requested arity appeared in a polynomial.
    #[error("ARITY_VIOLATION: `{symbol}` at offset {position}")]
    ArityViolation { symbol: String, position: usize },

    /// Theorem inputs do not match the shape the theorem requires.
    #[error("ARITY_MISMATCH: {reason}")]
    ArityMismatch { reason: String },

    /// The context kind is not admissible for the requested theorem.
    #[error("INADMISSIBLE_CONTEXT: {reason}")]
    InadmissibleContext { reason: String },

    /// Degrees passed to the decomposition checker are incompatible.
    #[error(
        "DEGREE_INCOMPATIBLE: deg(q) = {inner} does not divide deg(r) = {outer}, or deg(q) < 2"
    )]
    DegreeIncompatible { outer: usize, inner: usize },
}

impl Error {
    /// Stable machine-readable code, used in CLI output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::RejectSpec { .. } => "REJECT_SPEC",
            Error::UnknownSymbol { .. } => "UNKNOWN_SYMBOL",
            Error::DivisionByZero => "DIVISION_BY_ZERO",
            Error::NotDivisible => "NOT_DIVISIBLE",
            Error::ContextMismatch => "CONTEXT_MISMATCH",
            Error::ZeroPolynomial => "ZERO_POLYNOMIAL",
            Error::DegreeOverflow { .. } => "DEGREE_OVERFLOW",
            Error::UnsatisfiableConstraints { .. } => "UNSATISFIABLE_CONSTRAINTS",
            Error::SyntaxError { .. } => "SYNTAX_ERROR",
            Error::ArityViolation { .. } => "ARITY_VIOLATION",
            Error::ArityMismatch { .. } => "ARITY_MISMATCH",
            Error::InadmissibleContext { .. } => "INADMISSIBLE_CONTEXT",
            Error::DegreeIncompatible { .. } => "DEGREE_INCOMPATIBLE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
