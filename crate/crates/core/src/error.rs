use thiserror::Error;

/// Errors raised by graph construction, operator evaluation and searches.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex {vertex} out of range for graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("graph is disconnected: vertex {0} is unreachable from vertex 0")]
    Disconnected(usize),
    #[error("function has {got} values but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("empty vertex subset")]
    EmptySubset,
    #[error("function is identically zero")]
    ZeroFunction,
    #[error("function is constant, so its variation vanishes")]
    ConstantFunction,
    #[error("non-finite or negative value at index {0}")]
    BadValue(usize),
    #[error("budget exceeded: {0}")]
    Budget(String),
    #[error("series diverges: {0}")]
    Divergent(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

pub(crate) fn check_p(p: f64) -> Result<()> {
    if p.is_finite() && p > 0.0 {
        Ok(())
    } else {
        Err(invalid(format!("p must be positive and finite, got {p}")))
    }
}
