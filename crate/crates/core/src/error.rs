use thiserror::Error;

/// Errors raised while building rings or operating on their elements and ideals.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("bad modulus: {0}")]
    BadModulus(String),
    #[error("polynomial modulus is not monic: {0}")]
    NonMonic(String),
    #[error("tables do not define a commutative unital ring: {0}")]
    NotARing(String),
    #[error("not an ideal: {0}")]
    NotAnIdeal(String),
    #[error("ideal is not maximal: {0}")]
    NotMaximal(String),
    #[error("ideal is not prime: {0}")]
    NotPrime(String),
    #[error("the construction yields the zero ring")]
    ZeroRing,
    #[error("element {index} does not belong to a ring of order {order}")]
    ForeignElement { index: u64, order: usize },
    #[error("ideals belong to different rings")]
    RingMismatch,
    #[error("{what}: ring order {order} exceeds the bound {bound}")]
    OrderTooLarge {
        what: &'static str,
        order: usize,
        bound: usize,
    },
    #[error("table file, line {line}: {message}")]
    TableFormat { line: usize, message: String },
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

/// Errors from polynomial arithmetic over prime fields.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("characteristic mismatch: {0} vs {1}")]
    CharMismatch(u64, u64),
    #[error("variable lists differ: {0:?} vs {1:?}")]
    ArityMismatch(Vec<char>, Vec<char>),
    #[error("{0} is not a prime below 2^31")]
    BadPrime(u64),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A syntax error with the byte offset where it was detected.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at position {position}: {message}")]
pub struct ParseError {
    pub position: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(position: usize, message: impl Into<String>) -> Self {
        Self {
            position,
            message: message.into(),
        }
    }
}

pub type Result<T, E = RingError> = std::result::Result<T, E>;
