use thiserror::Error;

/// Errors raised by topology queries and the embedding algorithm.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("not an edge: {0}")]
    NotAnEdge(String),
    #[error("length {0} not guaranteed: only even lengths from 6 are supported")]
    UnsupportedLength(usize),
    #[error("guarantee void: {0}")]
    GuaranteeVoid(String),
    #[error("no cycle found: {0}")]
    NotFound(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// True for errors that signal a broken implementation rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
