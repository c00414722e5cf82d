use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LabError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("quotient requested for non-nested subspaces")]
    NotNested,

    #[error("intertwining condition A(BA)^2 = ABACA = ACABA = (AC)^2A does not hold")]
    ConditionNotSatisfied,

    #[error("lambda must be nonzero")]
    ZeroLambda,

    #[error("shift polynomial order must be at least 1")]
    ZeroShiftOrder,

    #[error("P is not idempotent")]
    NotIdempotent,

    #[error("P is a trivial idempotent (0 or I)")]
    TrivialIdempotent,

    #[error("invalid generator spec: {0}")]
    InvalidSpec(String),

    #[error("generator failed: {0}")]
    Generator(String),

    #[error("regularity index {0} is outside 1..=19")]
    RegularityIndex(usize),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("postcondition failed: {0}")]
    Postcondition(String),
}

pub type Result<T> = std::result::Result<T, LabError>;
