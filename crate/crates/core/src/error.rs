use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid prime {0}: {1}")]
    InvalidPrime(u64, &'static str),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("entry is not homogeneous of the required degree: {0}")]
    NotHomogeneous(String),
    #[error("subspace is not elementary: {0}")]
    NotElementary(String),
    #[error("matrix of a point does not have full column rank")]
    RankDeficient,
    #[error("element is not p-nilpotent: {0}")]
    NotNilpotent(String),
    #[error("index out of range: {0}")]
    OutOfRange(String),
    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("polynomial division is not exact")]
    InexactDivision,
    #[error("Hilbert function did not stabilize: {0}")]
    NoStableWindow(String),
    #[error("point is outside the chart: {0}")]
    OutsideChart(String),
    #[error("parametrization does not land in E(r, g): {0}")]
    NotInVariety(String),
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("decomposition did not converge: {0}")]
    DecompositionFailed(String),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("empty point set")]
    EmptyPointSet,
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
