use thiserror::Error;

/// Errors raised by the exact and numeric layers.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected} variables, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("pole: {0}")]
    Pole(String),

    #[error("compositions of unequal weight {0} and {1} are not comparable")]
    UnequalWeight(u32, u32),

    #[error("unsupported parameter: {0}")]
    UnsupportedParameter(String),

    #[error("parameter singularity at eta = {eta:?}: {reason}")]
    ParameterSingularity { eta: Vec<u32>, reason: String },

    #[error("polynomial is not homogeneous")]
    NonHomogeneous,

    #[error("exact division left a nonzero remainder ({0})")]
    Remainder(String),

    #[error("linear system is singular")]
    Singular,

    #[error("expansion left a residual outside the basis: {0}")]
    Residual(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("quadrature did not converge: {0}")]
    Precision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
