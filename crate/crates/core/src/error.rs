use thiserror::Error;

/// Errors raised by constructions, decision procedures and descriptor parsing.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("operation `{0}` is undefined for the zero element")]
    ZeroElement(&'static str),

    #[error("trial division bound {bound} exceeded while factoring {value}")]
    FactorBound { value: String, bound: u64 },

    #[error("invalid group: {0}")]
    InvalidGroup(String),

    #[error("invalid element {element} for group with orders {orders:?}")]
    InvalidElement { element: String, orders: Vec<u64> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("field does not support this operation: {0}")]
    Unsupported(String),

    #[error("malformed descriptor: {0}")]
    Descriptor(String),

    #[error("structure constants are not normalized: {0}")]
    Unnormalized(String),

    #[error("undecided: {0}")]
    Undecided(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Descriptor(e.to_string())
    }
}
