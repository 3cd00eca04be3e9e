use thiserror::Error;

/// Errors shared by the library surface.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("graph is not a tree")]
    NotATree,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("size limit exceeded: order {order} > limit {limit}")]
    SizeLimit { order: usize, limit: usize },

    #[error("no feasible labeling exists")]
    Infeasible,

    #[error("mapping is not a bijection between vertex sets of equal order")]
    BadMapping,

    #[error("invalid family parameters: {0}")]
    BadFamilyParameters(String),

    #[error("operation precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
