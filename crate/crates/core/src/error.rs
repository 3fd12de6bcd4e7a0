use thiserror::Error;

use crate::class::ClassVector;

/// Domain errors. Every variant is a precondition violation or malformed
/// input; the CLI maps all of them to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero: {0}")]
    DivisionByZero(&'static str),
    #[error("parameter alpha must be nonnegative, got {0}")]
    NegativeAlpha(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("region threshold undefined: {0}")]
    UndefinedThreshold(String),
    #[error("no admissible t exists: {0}")]
    NoWindow(String),
    #[error("incompatible parameters: {0}")]
    Incompatible(String),
    #[error("inconsistent input: {0}")]
    Inconsistent(String),
    #[error("zero central charge has no phase")]
    ZeroCharge,
    #[error("class {0} has zero imaginary part; its tilted slope is infinite")]
    InfiniteSlope(ClassVector),
    #[error("classes {0} and {1} are parallel")]
    ParallelClasses(ClassVector, ClassVector),
    #[error("empty range: {0}")]
    EmptyRange(String),
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
