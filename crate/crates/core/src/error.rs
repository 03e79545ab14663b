use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("graphs must have at least one vertex")]
    NullGraph,
    #[error("invalid edge ({u}, {v}) for a graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("vertex set is empty")]
    EmptySet,
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("{0}")]
    InvalidArgument(String),
    #[error("{what}: size {actual} exceeds the limit of {limit}")]
    SizeLimit {
        what: &'static str,
        limit: usize,
        actual: usize,
    },
    #[error("sets do not partition the vertex set: {0}")]
    NotAPartition(String),
    #[error("not an induced 7-hole: {0}")]
    InvalidHole(String),
    #[error("not an induced T0 embedding: {0}")]
    InvalidEmbedding(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("malformed expression at {path}: {message}")]
    MalformedExpression { path: String, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    pub(crate) fn size(what: &'static str, limit: usize, actual: usize) -> Self {
        Error::SizeLimit { what, limit, actual }
    }
}
