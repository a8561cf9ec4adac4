use thiserror::Error;

/// Errors produced anywhere in the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimMismatch(String),
    #[error("matrix is not Hermitian: max |H - H†| = {residual:.3e} exceeds {tol:.1e}")]
    NotHermitian { residual: f64, tol: f64 },
    #[error("matrix is not positive semidefinite: eigenvalue {eigenvalue:.3e} below clamp threshold")]
    NotPsd { eigenvalue: f64 },
    #[error("non-finite entry encountered at ({row}, {col})")]
    NonFinite { row: usize, col: usize },
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error("state is not a valid density matrix: {0}")]
    InvalidState(String),
    #[error("channel is not trace-preserving: completeness residual {residual:.3e} exceeds {tol:.1e}")]
    NotTracePreserving { residual: f64, tol: f64 },
    #[error("parameter out of range: {0}")]
    InvalidParameter(String),
    #[error("ensemble is not a Schatten decomposition: {0}")]
    NotSchatten(String),
    #[error("composite dimension {dim} exceeds cap {cap}")]
    DimensionCap { dim: usize, cap: usize },
    #[error("scenario parse error: {0}")]
    Parse(String),
    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
