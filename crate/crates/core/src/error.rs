use thiserror::Error;

/// Errors raised anywhere in the invariant pipeline.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("inexact division: remainder is nonzero")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },
    #[error("braid word contains the negative letter {letter}")]
    NotPositive { letter: i32 },
    #[error("cannot normalize Alexander polynomial: value at t = 1 is {value}")]
    NormalizationFailure { value: String },
    #[error("not an L-space knot polynomial: {0}")]
    NotLSpaceForm(String),
    #[error("staircase ended at ({x}, {y}) instead of ({g}, {})", 2 * g)]
    MalformedStaircase { x: i64, y: i64, g: i64 },
    #[error("no sign change of gamma_{n} found on the scan interval")]
    NoSignChangeFound { n: i64 },
    #[error("argument {0} outside the domain (0, pi)")]
    DomainError(f64),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("line {line}: {message}")]
    ParseAt { line: u64, message: String },
    #[error("file not found: {0}")]
    FileNotFound(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures that indicate a broken internal invariant rather
    /// than bad user input.
    pub fn is_contract_violation(&self) -> bool {
        matches!(
            self,
            Error::MalformedStaircase { .. } | Error::NoSignChangeFound { .. } | Error::NormalizationFailure { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;
