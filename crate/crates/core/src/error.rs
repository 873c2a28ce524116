use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u32),

    #[error("prime mismatch: {left} vs {right}")]
    PrimeMismatch { left: u32, right: u32 },

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: String, right: String },

    #[error("division leaves a nonzero remainder")]
    InexactDivision,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("window too small: {0}")]
    WindowTooSmall(String),

    #[error("differential is not homogeneous of degree 2 at basis vector {0}")]
    Inhomogeneous(String),

    #[error("differential is not p-nilpotent at basis vector {0}")]
    NotNilpotent(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    #[error("not a ring homomorphism: {0}")]
    NotAHomomorphism(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
