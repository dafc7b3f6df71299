use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("vertex id {id} out of range for a graph of order {n}")]
    InvalidVertexId { id: VertexId, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("invalid order {n} for {what}")]
    InvalidOrder { what: &'static str, n: usize },
    #[error("landmark set is empty")]
    EmptyLandmarkSet,
    #[error("at least {needed} landmarks are required, got {got}")]
    TooFewLandmarks { needed: usize, got: usize },
    #[error("operation needs a graph with at least two vertices")]
    TrivialGraph,
    #[error("ray attachment {id} is not a core vertex (core order {n})")]
    InvalidAttachment { id: VertexId, n: usize },
    #[error("invalid vertex: {0}")]
    InvalidVertex(String),
    #[error("operation needs at least two rays, got {0}")]
    TooFewRays(usize),
    #[error("graph is not a tree")]
    NotATree,
    #[error("negative level {0} in a one-way tail product")]
    NegativeLevel(i64),
    #[error("unsupported family: {0}")]
    UnsupportedFamily(String),
    #[error("configuration outside the refuter's scope: {0}")]
    OutOfScopeConfiguration(String),
    #[error("internal verification failure: {0}")]
    InternalVerificationFailure(String),
    #[error("precondition not certified: {0}")]
    PreconditionNotCertified(String),
    #[error("finite factor must have at least two vertices")]
    TrivialFactor,
    #[error("window {requested} is below the sound bound {required}")]
    WindowTooSmall { requested: u64, required: u64 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
