use thiserror::Error;

/// Errors raised by the library.
///
/// `Internal` signals that a computed object contradicts a proven structural
/// fact (a singular basis matrix, a deficient eigenspace, a zero-norm vector).
/// It is never expected in practice and indicates an implementation bug.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid bidegree ({d}, {len}): requires d >= len >= 1")]
    InvalidBidegree { d: usize, len: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("inadmissible hook/increment sequence: {0}")]
    Inadmissible(String),

    #[error("polynomial is not homogeneous of bidegree ({d}, {len})")]
    NotHomogeneous { d: usize, len: usize },

    #[error("invalid g-factor g({d}, {len}): {reason}")]
    InvalidFactor {
        d: usize,
        len: usize,
        reason: &'static str,
    },

    #[error("parameter out of range: {0}")]
    Domain(String),

    #[error("dimension {dim} of F({d}, {len}) exceeds the limit {limit}")]
    TooLarge {
        d: usize,
        len: usize,
        dim: usize,
        limit: usize,
    },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
