//! Error type shared by the algebra modules.

use thiserror::Error;

/// Errors raised by polynomial, ideal and module computations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("exponent vector has length {found}, ring has {expected} variables")]
    LengthMismatch { expected: usize, found: usize },
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    #[error("unknown variable `{name}` at offset {offset}")]
    UnknownVariable { name: String, offset: usize },
    #[error("malformed exponent at offset {offset}: {message}")]
    BadExponent { offset: usize, message: String },
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("free module rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },
    #[error("image generator {0} is not contained in the kernel submodule")]
    ImageNotContained(usize),
    #[error("module is zero; depth and dimension are undefined")]
    ZeroModule,
    #[error("prime is not in the support of the module")]
    NotInSupport,
    #[error("ideal is not a monomial ideal")]
    NonMonomial,
    #[error("not a prime ideal: {0}")]
    NotPrime(String),
    #[error("reduction budget of {0} steps exceeded")]
    BudgetExceeded(u64),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T, E = AlgebraError> = std::result::Result<T, E>;
