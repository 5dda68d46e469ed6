use thiserror::Error;

/// Errors raised across generation, transforms and certification.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("unknown triangle `{0}`")]
    UnknownTriangle(String),
    #[error("unknown polynomial family `{0}`")]
    UnknownFamily(String),
    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),
    #[error("unknown conjecture `{0}`")]
    UnknownConjecture(String),
    #[error("leading coefficient a_n vanishes at n = {0}")]
    ZeroLeadingCoefficient(usize),
    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },
    #[error("offset mismatch: {left} vs {right}")]
    OffsetMismatch { left: usize, right: usize },
    #[error("sequence too short: need at least {needed} terms, have {have}")]
    TooShort { needed: usize, have: usize },
    #[error("term at index {0} is zero")]
    ZeroTerm(usize),
    #[error("term at index {0} is negative")]
    NegativeTerm(usize),
    #[error("coefficient {which} is not positive at n = {n}")]
    NonPositiveCoefficient { which: &'static str, n: usize },
    #[error("mu is not positive at n = {0}")]
    NonPositiveMu(usize),
    #[error("recurrence coefficients must have degree at most 1 in n")]
    NonlinearCoefficients,
    #[error("recurrence coefficients must be constant in n")]
    NonConstantCoefficients,
    #[error("inadmissible triangle recurrence: {0}")]
    InadmissibleRecurrence(String),
    #[error("index out of range: {0}")]
    RangeError(String),
    #[error("recurrence has the wrong sign convention for this criterion (expected {expected})")]
    WrongSign { expected: &'static str },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("validation error in field `{field}`: {message}")]
    Validation { field: String, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
