use thiserror::Error;

/// Errors raised by the arithmetic, operator and sequence layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("substitution pole: {0}")]
    SubstitutionPole(String),
    #[error("pole at s = 1: {0}")]
    PoleAtS1(String),
    #[error("closure degenerate at step {step}: {equation}")]
    ClosureDegenerate { step: usize, equation: String },
    #[error("sequence undefined at {0:?}")]
    OutOfDomain(Vec<i64>),
    #[error("colors must be ≥ 1 (got m={m}, n={n})")]
    InvalidColor { m: i64, n: i64 },
    #[error("negative-argument quantum factorial in a numerator: {{{0}}}!")]
    NegativeFactorialUse(i64),
    #[error("unknown name: {0}")]
    UnknownName(String),
    #[error("degree mismatch for {what}: expected {expected}, got {got}")]
    DegreeMismatch { what: String, expected: i64, got: i64 },
    #[error("operand mismatch: {0}")]
    Shape(String),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
