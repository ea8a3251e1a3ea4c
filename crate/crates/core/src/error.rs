use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SurdError {
    #[error("denominator must be nonzero")]
    ZeroDenominator,
    #[error("radicand must be positive, got {0}")]
    NonPositiveRadicand(BigInt),
    #[error("radicand {0} is a perfect square, so the value is rational")]
    PerfectSquareRadicand(BigInt),
    #[error("{0} does not lie strictly between 0 and 1")]
    OutsideUnitInterval(String),
    #[error("value {0} is rational")]
    Rational(String),
    #[error("partial quotient {0} does not fit in 64 bits")]
    QuotientOverflow(BigInt),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("the period of a continued fraction cannot be empty")]
    EmptyPeriod,
    #[error("partial quotients must be positive")]
    ZeroQuotient,
    #[error("index out of range: {0}")]
    IndexRange(String),
    #[error(transparent)]
    Surd(#[from] SurdError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("inverse of the zero rational function")]
    ZeroInverse,
    #[error("series has a pole at the origin")]
    PoleAtOrigin,
    #[error("exponential needs a series with zero constant term")]
    NonzeroConstantTerm,
    #[error("logarithm needs a series with constant term 1")]
    LogConstantTerm,
    #[error("matrix is singular")]
    Singular,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusError {
    #[error("matrix must be 2x2")]
    NotTwoByTwo,
    #[error("determinant must be +1 or -1, got {0}")]
    NotUnimodular(BigInt),
    #[error("matrix is not hyperbolic (trace {trace}, determinant {det})")]
    NotHyperbolic { trace: BigInt, det: BigInt },
    #[error("{count} fixed points exceed the enumeration guard of {limit}")]
    GuardExceeded { count: BigInt, limit: u64 },
    #[error("iterate must be at least 1")]
    ZeroIterate,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LevyError {
    #[error("depth must be at least {min}, got {got}")]
    DepthTooSmall { min: usize, got: usize },
    #[error("need at least one sample")]
    NoSamples,
    #[error("{digits}-digit denominators are too short for depth {depth} (need more than {needed:.1})")]
    DenominatorTooShort { digits: usize, depth: usize, needed: f64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenFunError {
    #[error("level r must lie in 1..={max}, got {got}")]
    LevelOutOfRange { got: usize, max: usize },
    #[error("index s = {s} exceeds level r = {r}")]
    IndexAboveLevel { s: usize, r: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Cf(#[from] CfError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}
