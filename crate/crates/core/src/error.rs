use thiserror::Error;

/// Crate-wide error type. Search exhaustion is deliberately *not* an error;
/// operations that can exhaust a bound return a dedicated outcome enum.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is degenerate: {0}")]
    Degenerate(String),
    #[error("quadratic form is not positive definite: {0}")]
    NotPositiveDefinite(String),
    #[error("{0} is not squarefree")]
    NotSquarefree(i64),
    #[error("desk-scale bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("prime ideal is ramified: {0}")]
    Ramified(String),
    #[error("{0} is not prime")]
    NotPrime(i64),
    #[error("element is not totally positive: {0}")]
    NotTotallyPositive(String),
    #[error("field is degenerate for this operation: {0}")]
    DegenerateField(String),
    #[error("strict class number of the real field is not one (d = {0})")]
    StrictClassNumber(i64),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("structural invariant violated: {0}")]
    Invariant(String),
    #[error("exact square root does not exist: {0}")]
    NotASquare(String),
    #[error("certificate is malformed: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
