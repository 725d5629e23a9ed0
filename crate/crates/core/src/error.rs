use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("matrix is not Hermitian (max asymmetry {0:e})")]
    NotHermitian(f64),

    #[error("trace is {0}, expected 1")]
    NotNormalized(f64),

    #[error("matrix has eigenvalue {0:e} below the positivity tolerance")]
    NotPositive(f64),

    #[error("value {value} is outside [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    #[error("invalid spin label 2j = {0}; need 2j >= 1")]
    InvalidSpin(u32),

    #[error("magnetic number 2m = {two_m} is out of range for this multiplet")]
    InvalidMagnetic { two_m: i64 },

    #[error("(t, y) is not normalized: t^2 + |y|^2 = {0}")]
    NotUnitary(f64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
