use thiserror::Error;

/// Errors raised by the library. Every variant is an input or contract
/// violation; none of them signals an internal failure.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} exceeds the supported maximum of {max}", max = crate::graph::MAX_ORDER)]
    OrderTooLarge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    MultiEdge(usize, usize),
    #[error("vertex sets overlap")]
    OverlappingSets,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex set must be nonempty")]
    EmptySet,
    #[error("vertex set must be a proper subset of V(G)")]
    NotProperSubset,
    #[error("weight function has length {got}, graph has order {expected}")]
    WeightLength { expected: usize, got: usize },
    #[error("weight of vertex {0} is negative")]
    NegativeWeight(usize),
    #[error("invalid rational {0:?}")]
    InvalidRational(String),
    #[error("graph of order {order} exceeds the solver limit of {limit}")]
    SolverLimit { order: usize, limit: usize },
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph is not chordal")]
    NotChordal,
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("pattern mismatch: expected {expected}, got {got}")]
    PatternMismatch { expected: String, got: String },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid witness parameters: {0}")]
    InvalidParams(String),
    #[error("order {0} outside the supported enumeration range 1..=8")]
    EnumerationOrder(usize),
    #[error("certificate rejected: {0}")]
    CertificateRejected(String),
    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
