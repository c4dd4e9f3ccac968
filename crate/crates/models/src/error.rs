use gjms_exact::ExactError;
use gjms_series::SeriesError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ModelError {
    #[error("division by (n/2 - {order}) is not exact")]
    InexactDivision { order: u32 },
    #[error("the Schouten matrix must be square and symmetric")]
    NotSymmetric,
    #[error("the Schouten matrix is empty")]
    EmptyMatrix,
    #[error("order must be at least {min}, got {got}")]
    OrderTooSmall { min: u32, got: u32 },
    #[error(transparent)]
    Series(#[from] SeriesError),
    #[error(transparent)]
    Exact(#[from] ExactError),
}
