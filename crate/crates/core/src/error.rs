use thiserror::Error;

use crate::monoid::Violation;

/// Errors raised by the core constructions and operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("table has inconsistent dimensions: {0}")]
    Dimension(String),
    #[error("element index {index} out of range for carrier of size {size}")]
    OutOfRange { index: usize, size: usize },
    #[error("monoid law violated: {0}")]
    Invalid(Violation),
    #[error("element {0} is not idempotent")]
    NotIdempotent(String),
    #[error("subset is not closed: {0}")]
    NotClosed(String),
    #[error("subset has no identity element")]
    NoIdentity,
    #[error("index set must be non-empty")]
    EmptyIndexSet,
    #[error("sandwich matrix has a zero entry at ({row},{col}) but zero is not adjoined")]
    UnexpectedZero { row: usize, col: usize },
    #[error("map is not an endomorphism: {0}")]
    NotEndomorphism(String),
    #[error("set is not a subact: {0}")]
    NotSubact(String),
    #[error("relation is not a congruence: {0}")]
    NotCongruence(String),
    #[error("element {element} lies outside ball({radius})")]
    OutsideBall { element: String, radius: usize },
    #[error("carrier of {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("unknown element label `{0}`")]
    UnknownLabel(String),
    #[error("act law violated: {0}")]
    InvalidAct(String),
}

pub type Result<T> = std::result::Result<T, Error>;
