use crate::search::SearchParameter;

/// Errors shared across the crate. Domain violations carry the violated bound
/// in the message; structural errors carry the offending indices.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A parameter is outside its documented range.
    #[error("{0}")]
    Domain(String),

    /// A vertex index does not exist in the graph at hand.
    #[error("vertex index {index} out of range 1..={vertex_count}")]
    VertexOutOfRange { index: usize, vertex_count: usize },

    /// A vertex set was given the same vertex twice.
    #[error("duplicate vertex x{index} in set")]
    DuplicateVertex { index: usize },

    /// The edge list does not describe a connected graph.
    #[error("graph is disconnected: no path from x{from} to x{to}")]
    Disconnected { from: usize, to: usize },

    /// Two structures that must cover the same vertex set do not.
    #[error("vertex count mismatch: {left} vs {right}")]
    VertexCountMismatch { left: usize, right: usize },

    /// An exact search exhausted every candidate set up to the size cap.
    #[error("no {parameter} set of size <= {cap} (searched {subsets_examined} candidate sets)")]
    CapExhausted {
        parameter: SearchParameter,
        cap: usize,
        subsets_examined: u64,
    },

    /// A constructed witness failed the arithmetic identity it must satisfy.
    #[error("witness verification failed: {0}")]
    VerificationFailed(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
