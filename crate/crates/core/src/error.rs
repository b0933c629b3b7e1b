use thiserror::Error;

use crate::algebra::TwistedElement;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AlgebraError {
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("star series does not terminate: {0}")]
    NonTerminating(String),
    #[error("mixed root-two scalings cannot be added ({0} vs {1})")]
    MixedScaling(i32, i32),
    #[error("gaussian weights differ between operands")]
    GaussianMismatch,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StateError {
    #[error("level {level} exceeds the configured maximum {max}")]
    LevelTooLarge { level: u32, max: u32 },
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("no pointwise eigenvalue exists; residual {}", .residual)]
    NotProportional { residual: Box<TwistedElement> },
    #[error("prefactor must be independent of a and abar")]
    NonScalarPrefactor,
    #[error("no rewrite rule for {0}")]
    NoRewrite(String),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("negative power of a variable that vanishes at the evaluation point")]
    DivisionAtPole,
    #[error("factor has a term without gaussian weight; the integral diverges")]
    NonIntegrable,
    #[error("quadrature node hits a pole of the integrand")]
    PoleOnGrid,
    #[error("invalid numeric configuration: {0}")]
    BadConfig(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("bad coefficient `{0}`")]
    BadCoefficient(String),
    #[error("bad factor `{0}`")]
    BadFactor(String),
    #[error("unexpected token `{0}`")]
    Unexpected(String),
    #[error("empty expression")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ReportError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("bad configuration: {0}")]
    BadConfig(String),
    #[error(transparent)]
    State(#[from] StateError),
}
