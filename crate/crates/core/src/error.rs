use thiserror::Error;

/// Errors raised by hypergraph construction, evaluation and verification.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("uniformity mismatch: expected r = {expected}, found r = {found}")]
    UniformityMismatch { expected: usize, found: usize },

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("invalid r-set {elements:?}: {reason}")]
    InvalidRSet {
        elements: Vec<u32>,
        reason: &'static str,
    },

    #[error("vertex {vertex} is outside the vertex set [1, {n}]")]
    VertexOutOfRange { vertex: u32, n: usize },

    #[error("dimension mismatch: graph has {expected} vertices, weighting has {found} entries")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("invalid weighting: {0}")]
    InvalidWeighting(String),

    #[error("weighting has zero value on this graph")]
    ZeroValue,

    #[error("every weight lies below the support threshold {threshold:e}")]
    DegenerateWeighting { threshold: f64 },

    #[error("resource limit exceeded: {limit} is {requested}, allowed at most {allowed}")]
    ResourceLimit {
        limit: &'static str,
        requested: usize,
        allowed: usize,
    },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
