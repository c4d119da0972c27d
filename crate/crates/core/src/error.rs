use thiserror::Error;

use crate::lattice::Point;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("first lattice is not a subset of the second")]
    SubsetViolation,

    #[error("lattice row {row} has non-contiguous support; cannot cut into bands")]
    NotDecomposable { row: i64 },

    #[error("symbol {symbol} is outside the alphabet 0..{alphabet}")]
    SymbolOutOfRange { symbol: u32, alphabet: u32 },

    #[error("budget exceeded: {what} needs {needed}, budget is {budget}")]
    BudgetExceeded {
        what: &'static str,
        needed: u64,
        budget: u64,
    },

    #[error("forbidden pattern does not fit in a 2x2 window; the profile engine cannot run")]
    UnsupportedForbiddenShape,

    #[error("vector {0} is zero or not primitive")]
    NonPrimitiveVector(Point),

    #[error("stick overlaps the square at {0}")]
    Overlap(Point),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
