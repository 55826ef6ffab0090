use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("invalid edge {0}-{1}")]
    InvalidEdge(usize, usize),
    #[error("graph is disconnected: {0}")]
    Disconnected(&'static str),
    #[error("graph has no edges")]
    Edgeless,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unknown catalog graph '{0}'")]
    UnknownGraph(String),
    #[error("invalid parameters for {name}: {reason}")]
    InvalidParams { name: String, reason: String },
    #[error("inconsistent LCF jump list: {0}")]
    Lcf(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("data file {path}: {reason}")]
    Data { path: String, reason: String },
    #[error("unknown theorem '{0}'")]
    UnknownTheorem(String),
}

pub type Result<T> = std::result::Result<T, Error>;
