use thiserror::Error;

use crate::interlace::RelationReport;
use crate::scalar::Field;

#[derive(Debug, Error)]
pub enum Error {
    #[error("mixed scalar fields: {0} and {1}")]
    MixedField(Field, Field),

    #[error("division by zero")]
    DivisionByZero,

    #[error("diagonal entry {index} is not real")]
    NonRealDiagonal { index: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },

    #[error("empty index selection")]
    EmptySelection,

    #[error("index {index} out of range for dimension {n}")]
    BadIndex { index: usize, n: usize },

    #[error("field mismatch: {0}")]
    FieldMismatch(String),

    #[error("eigenvalue iteration did not converge within {sweeps} sweeps")]
    ConvergenceFailure { sweeps: usize },

    #[error("matrix is not positive definite (pivot {pivot} = {value:e})")]
    NotPositiveDefinite { pivot: usize, value: f64 },

    #[error("spectral and inertia methods disagree")]
    MethodDisagreement {
        spectral: Box<RelationReport>,
        inertia: Box<RelationReport>,
    },

    #[error("operator {operator} cannot be built from this graph: {reason}")]
    IncompatibleOperator { operator: String, reason: String },

    #[error("not a generalized Laplacian: row {row}")]
    NotGeneralizedLaplacian { row: usize },

    #[error("matrix difference is not a rank-two edge block: {0}")]
    UnexpectedDifferenceShape(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("inputs do not satisfy the hypotheses: {0}")]
    ShapeMismatch(String),

    #[error("could not reach spectral gap {gap:e} after {attempts} resamples")]
    GapUnreachable { gap: f64, attempts: usize },

    #[error("line {line}: bad token `{token}`: {message}")]
    Parse {
        line: usize,
        token: String,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, token: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            token: token.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
