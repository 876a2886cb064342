use crate::Fragment;

/// Errors reported by index construction and queries.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("text must contain at least one letter")]
    EmptyText,
    #[error("position {pos} is outside the text (n = {n})")]
    PositionOutOfRange { pos: usize, n: usize },
    #[error("fragment [{start}..{end}] is not a valid fragment of a text of length {n}")]
    InvalidFragment { start: usize, end: usize, n: usize },
    #[error("patterns must be non-empty")]
    EmptyPattern,
    #[error("operation requires a non-empty fragment")]
    EmptyFragment,
    #[error("fragment {0} is not periodic")]
    Aperiodic(Fragment),
    #[error("fragments {0} and {1} do not share a Lyndon root")]
    RootMismatch(Fragment, Fragment),
    #[error("depth {depth} exceeds the node weight {weight}")]
    DepthTooLarge { depth: usize, weight: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dictionary has {count} occurrences, above the limit of {limit}")]
    TooManyOccurrences { count: usize, limit: usize },
    #[error("point ({0}, {1}) is not in the set")]
    AbsentPoint(i64, i64),
    #[error("pattern {0} is not in the current dictionary")]
    NotInDictionary(Fragment),
    #[error("oracle input of length {n} exceeds the limit of {limit}")]
    OracleTooLarge { n: usize, limit: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
