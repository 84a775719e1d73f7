use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("negative degree {0}")]
    NegativeDegree(i64),
    #[error("point counts differ: {left} vs {right}")]
    PointCountMismatch { left: usize, right: usize },
    #[error("curve carries line-incidence data; use the full transform")]
    IncidencePresent,
    #[error("point indices must be distinct, got {0:?}")]
    RepeatedIndex(Vec<usize>),
    #[error("point index {index} out of range for {points} points")]
    IndexOutOfRange { index: usize, points: usize },
    #[error("line excess t = {0} is below 2")]
    LineExcessTooSmall(i64),
    #[error("quadric test needs at least nine points, got {0}")]
    TooFewPointsForQuadric(usize),
    #[error("incidence pair ({0}, {1}) is not among the first four points")]
    BadIncidencePair(usize, usize),
    #[error("cannot parse token `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("empty literal")]
    EmptyLiteral,
    #[error("points {0} and {1} coincide")]
    CoincidentPoints(usize, usize),
    #[error("prime {prime} must exceed the degree {degree} and be at least 3")]
    PrimeTooSmall { prime: u64, degree: i64 },
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("expected {expected} points, got {got}")]
    WrongPointCount { expected: usize, got: usize },
    #[error("at least one seed is required")]
    NoSeeds,
}

pub type Result<T> = std::result::Result<T, Error>;
