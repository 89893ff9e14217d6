use thiserror::Error;

/// Errors raised by the library.
///
/// `Consistency` marks an internal invariant that failed; every other
/// variant describes bad input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid fraction {p}/{q}: {msg}")]
    InvalidFraction { p: i64, q: i64, msg: String },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("DT code is not realizable as a planar diagram: {0}")]
    NotRealizable(String),

    #[error("diagram has {crossings} crossings, more than the configured cap of {cap}")]
    TooLarge { crossings: usize, cap: usize },

    #[error("parameter out of range: {0}")]
    Parameter(String),

    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// True for failures that indicate a bug rather than bad input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
