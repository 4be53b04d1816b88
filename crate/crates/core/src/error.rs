use thiserror::Error;

/// Everything that can go wrong in the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("field of order {p}^{s} exceeds the 2^16 cap")]
    FieldTooLarge { p: u32, s: u32 },
    #[error("zero has no inverse")]
    DivisionByZero,
    #[error("field order {0} is not a perfect square")]
    NotSquareOrder(u64),
    #[error("element {value} is not in a field of order {q}")]
    InvalidElement { value: u64, q: u64 },
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("index {index} outside [1, {m}]")]
    IndexOutOfRange { index: usize, m: usize },
    #[error("a complex needs at least one maximal element")]
    EmptyFamily,
    #[error("ambient dimension {0} is not supported (1..=32)")]
    BadDimension(usize),
    #[error("budget exceeded: needs {needed} units, limit {limit}")]
    BudgetExceeded { needed: u128, limit: u128 },
    #[error("message fibers are not uniform: kernel {kernel} does not divide {count}")]
    NonUniformFibers { kernel: u64, count: u64 },
    #[error("character sum did not reduce to a rational integer")]
    NonIntegerCharacterSum,
    #[error("{theorem} clause {clause}: {condition}")]
    Hypothesis {
        theorem: &'static str,
        clause: &'static str,
        condition: String,
    },
    #[error("Gray image is not F_q-linear: {0}")]
    Nonlinear(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
    #[error("inexact division in {0}")]
    Inexact(&'static str),
    #[error("Hermitian inner product needs q = 4, got q = {0}")]
    HermitianNeedsQ4(u64),
    #[error("distribution has no nonzero weight")]
    EmptySupport,
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn hypothesis(theorem: &'static str, clause: &'static str, condition: impl Into<String>) -> Error {
    Error::Hypothesis {
        theorem,
        clause,
        condition: condition.into(),
    }
}
