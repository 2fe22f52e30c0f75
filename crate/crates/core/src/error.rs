use thiserror::Error;

use crate::exact_series::Variable;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("series variable mismatch: {0} vs {1}")]
    VariableMismatch(Variable, Variable),
    #[error("division by a series with zero constant term")]
    NonInvertible,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid rational literal `{0}`")]
    ParseRational(String),
    #[error("dimension mismatch: bundle rank {rank} but base dimension {dimension}")]
    DimensionMismatch { rank: usize, dimension: usize },
    #[error("ambient mismatch: Gr({0}, {1}) vs Gr({2}, {3})")]
    AmbientMismatch(usize, usize, usize, usize),
    #[error("origin is not an interior point of the polytope")]
    OriginNotInterior,
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("grading rule violated: {0}")]
    Grading(String),
    #[error("coefficient ring cannot represent {0}")]
    Policy(String),
    #[error("curve class {0:?} is not primitive")]
    NotPrimitive(Vec<i64>),
    #[error("point is not a regular singular point: {0}")]
    IrregularPoint(String),
    #[error("indicial polynomial has non-rational roots")]
    IrrationalExponents,
    #[error("invariant failed: {0}")]
    Invariant(String),
    #[error("verification failed: {0}")]
    Verification(String),
}

pub(crate) fn precondition<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
