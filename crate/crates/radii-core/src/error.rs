use thiserror::Error;

/// Errors raised by geometry, LP and search routines.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("input vectors are linearly dependent (smallest singular value below tolerance)")]
    DependentInput,
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("vector is not unit length")]
    NotUnit,
    #[error("unsupported dimension {0} (must be between 1 and 5)")]
    BadDimension(usize),
    #[error("polytope is not full-dimensional")]
    NotFullDimensional,
    #[error("random body generation stayed degenerate after {0} retries")]
    DegenerateAfterRetries(usize),
    #[error("linear program is infeasible")]
    Infeasible,
    #[error("linear program is unbounded")]
    Unbounded,
    #[error("body (or section) is empty")]
    EmptyBody,
    #[error("need at least two points")]
    TooFewPoints,
    #[error("ellipsoid must be centered at the origin")]
    NotCentered,
    #[error("operation not supported in this dimension/index combination")]
    UnsupportedDimension,
    #[error("projection does not contain the required disc")]
    DiscNotContained,
    #[error("body is not centrally symmetric")]
    NotSymmetric,
    #[error("invalid (R, D, r) triple: {0}")]
    InvalidTriple(String),
    #[error("internal certificate failed: {0}")]
    CertificateFailed(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
