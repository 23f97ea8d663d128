use thiserror::Error;

/// Errors raised by the validated constructors and the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is not Hermitian: max |m_ij - conj(m_ji)| = {deviation:e}")]
    NotHermitian { deviation: f64 },

    #[error("not a density matrix: {0}")]
    NotAState(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("unsupported dimension {0}")]
    UnsupportedDimension(usize),

    #[error("Kraus operators are not complete: ||sum K^dag K - I||_F = {deviation:e}")]
    Incomplete { deviation: f64 },

    #[error("invalid Kraus set: {0}")]
    InvalidKraus(String),

    #[error("invalid channel parameters: {0}")]
    InvalidParams(String),

    #[error("domain error: {0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
