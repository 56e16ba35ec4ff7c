use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("cannot join rings: variable `{0}` occurs on both sides")]
    JoinOverlap(String),

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("containment error: {0}")]
    Containment(String),

    #[error("exponent overflow")]
    Overflow,

    #[error("size guard exceeded: {what} is {actual}, limit {limit}")]
    Size {
        what: String,
        actual: u64,
        limit: u64,
    },

    #[error("degree {degree} exceeds truncation degree {limit}")]
    Truncation { degree: u32, limit: u32 },

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("parse error at line {line}, column {col}: expected {expected}, found {found}")]
    Parse {
        line: usize,
        col: usize,
        expected: String,
        found: String,
    },

    #[error("unknown name `{0}`")]
    UnknownName(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

impl Error {
    pub(crate) fn size(what: impl Into<String>, actual: u64, limit: u64) -> Self {
        Error::Size {
            what: what.into(),
            actual,
            limit,
        }
    }
}
