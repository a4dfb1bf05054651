use thiserror::Error;

/// Errors raised by the toolkit.
///
/// Vertex numbers carried in error payloads are 1-based, matching the text
/// format and the reports.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range 1..={n}")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop at vertex {0}")]
    Loop(usize),

    #[error("parallel edge between {0} and {1}")]
    ParallelEdge(usize, usize),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("not a closed walk: {0}")]
    NotAWalk(String),

    #[error("underlying graphs differ")]
    UnderlyingGraphsDiffer,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error("invalid mapping: {0}")]
    InvalidMapping(String),

    #[error("list assignment does not match the target: {0}")]
    ListMismatch(String),

    #[error("target needs a color algebra: {0}")]
    NotADsgTarget(String),

    #[error("target too large: {0} vertices (limit 64)")]
    TargetTooLarge(usize),

    #[error("search budget of {budget} nodes exceeded; result is indeterminate")]
    BudgetExceeded { budget: u64 },

    #[error("unknown identifier: {0}")]
    Unknown(String),

    #[error("empty graph")]
    EmptyGraph,

    #[error("invariant violated: {0}")]
    Invariant(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
