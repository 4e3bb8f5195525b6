use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("{0} is not a face of the complex")]
    NotAFace(String),

    #[error("vertex sets are not disjoint (shared vertex {0})")]
    NotDisjoint(String),

    #[error("complex is not pure")]
    NotPure,

    #[error("{0} is not an edge of the complex")]
    NotAnEdge(String),

    #[error("capacity exceeded: {what} = {requested} (limit {limit})")]
    Capacity {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("cannot reverse a polynomial of degree {degree} with respect to {n}")]
    ReverseDegree { degree: usize, n: usize },

    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("no carrier recorded for vertex {0}")]
    MissingCarrier(String),

    #[error("triangulation is not uniform: {0}")]
    NonUniform(String),

    #[error("polynomial is not symmetric with respect to {0}")]
    NotSymmetric(usize),

    #[error("polynomial {0} is not real-rooted")]
    NotRealRooted(String),

    #[error("integrity check failed: {0}")]
    Integrity(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub fn is_capacity(&self) -> bool {
        matches!(self, Error::Capacity { .. })
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
