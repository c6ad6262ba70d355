use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("monomial has {found} exponents but the ring has {expected} variables")]
    VariableCount { expected: usize, found: usize },

    #[error("operands belong to different rings")]
    RingMismatch,

    #[error("coefficient fields differ")]
    FieldMismatch,

    #[error("{0} is undefined for the zero polynomial")]
    ZeroPolynomial(&'static str),

    #[error("invalid variable list: {0}")]
    InvalidVariables(String),

    #[error("modulus {0} is not an odd prime")]
    InvalidModulus(u64),

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("the ordering must be a local degree ordering")]
    NotLocalOrdering,

    #[error("the ideal contains a unit (not a proper ideal at the origin)")]
    UnitIdeal,

    #[error("expected homogeneous polynomials")]
    NotHomogeneous,

    #[error("empty ideal")]
    EmptyIdeal,

    #[error("invalid cover: {0}")]
    InvalidCover(String),

    #[error("invalid range {lo}..{hi}")]
    InvalidRange { lo: u32, hi: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;
