use thiserror::Error;

/// Errors raised while ingesting input or building an index.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("input is empty")]
    EmptyInput,
    #[error("declared alphabet size {declared} is smaller than the {distinct} distinct symbols in the input")]
    AlphabetTooSmall { declared: usize, distinct: usize },
    #[error("interval [{i}, {j}] is outside 1..={n}")]
    BadInterval { i: usize, j: usize, n: usize },
    #[error("text is not terminated by a unique symbol at both ends")]
    NotDoublyTerminated,
    #[error("input length {n} exceeds the oracle cap {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("adjacency of node {node} is not sorted")]
    NotSorted { node: u32 },
    #[error("structure corrupt: {0}")]
    StructureCorrupt(String),
}

pub type Result<T> = std::result::Result<T, Error>;

macro_rules! corrupt {
    ($($arg:tt)*) => {
        $crate::error::Error::StructureCorrupt(format!($($arg)*))
    };
}
pub(crate) use corrupt;
