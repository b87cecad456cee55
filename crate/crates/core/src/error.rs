use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("insufficient precision: requested order {requested}, only {available} available")]
    InsufficientPrecision { requested: usize, available: usize },

    #[error("variable mismatch: `{left}` vs `{right}`")]
    VariableMismatch { left: String, right: String },

    #[error("series is not invertible: constant term {0} is not a unit")]
    NotInvertible(String),

    #[error("composition requires an inner series with zero constant term, found {0}")]
    CompositionDomain(String),

    #[error("not an iterable series: expected f(t) = t + O(t^2), got {0}")]
    NotIterable(String),

    #[error("unknown indeterminate `{0}`")]
    UnknownVariable(String),

    #[error("duplicate interpolation node {0}")]
    DuplicateNode(String),

    #[error("sequence too short: need {needed} entries, got {got}")]
    InsufficientLength { needed: usize, got: usize },

    #[error("matrix is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare {
        row: usize,
        len: usize,
        expected: usize,
    },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("budget exceeded: {what} {requested} > cap {cap}; lower nmax or raise the cap")]
    Budget {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
