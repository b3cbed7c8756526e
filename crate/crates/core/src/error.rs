use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// A line that could not be decoded at all (bad JSON, broken CSV quoting).
    #[error("line {line}: parse error: {message}")]
    Parse { line: usize, message: String },

    #[error("line {line}: missing required field `{field}`")]
    Schema { line: usize, field: &'static str },

    #[error("line {line}: {message}")]
    Validation { line: usize, message: String },

    /// Structural problem with a whole input, e.g. an unexpected CSV header.
    #[error("format error: {0}")]
    Format(String),

    #[error("corpus is empty")]
    EmptyCorpus,

    #[error("shape mismatch: expected {expected}, found {found}")]
    Shape { expected: String, found: String },

    #[error("not found: {0}")]
    NotFound(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("statistics undefined for a graph with {nodes} node(s); at least 2 are required")]
    StatisticsUndefined { nodes: usize },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}
