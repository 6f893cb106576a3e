use thiserror::Error;

/// Errors produced while decoding graph6 bytes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6ErrorKind {
    #[error("empty input")]
    Empty,
    #[error("malformed header")]
    BadHeader,
    #[error("graphs of order above 258047 are not supported")]
    UnsupportedOrder,
    #[error("byte {0:#04x} outside the printable graph6 range 63..=126")]
    ByteOutOfRange(u8),
    #[error("input ends early: expected {expected} body bytes, got {got}")]
    Truncated { expected: usize, got: usize },
    #[error("trailing bytes after the encoded adjacency")]
    TrailingGarbage,
    #[error("nonzero padding bits")]
    BadPadding,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("vertex set over universe {set} used with graph of order {order}")]
    UniverseMismatch { set: usize, order: usize },
    #[error("graph6 parse error at byte {offset}: {kind}")]
    Graph6 { offset: usize, kind: Graph6ErrorKind },
    #[error("edge list parse error at line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),
    #[error("invalid parameters for family {family}: {message}")]
    InvalidFamilyParams { family: String, message: String },
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph is disconnected")]
    DisconnectedGraph,
    #[error("operation needs at least {need} vertices, graph has {have}")]
    TooFewVertices { need: usize, have: usize },
    #[error("endpoints must be distinct")]
    IdenticalEndpoints,
    #[error("vertex set must not be empty")]
    EmptyVertexSet,
    #[error("vertex set must be a proper subset of the vertices")]
    SetNotProper,
    #[error("the two vertex sets must differ")]
    SetsEqual,
    #[error("the two vertex sets must be disjoint")]
    SetsOverlap,
    #[error("graph is not {k}-connected (connectivity {kappa})")]
    NotKConnected { k: usize, kappa: usize },
    #[error("graph contains no cycle")]
    NoCycle,
    #[error("negative value not allowed here")]
    NegativeValue,
    #[error("value must be positive")]
    NotPositive,
    #[error("probability must lie in [0, 1]")]
    InvalidProbability,
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("invalid cycle: {0}")]
    InvalidCycle(String),
    #[error("cycle already spans the graph")]
    SpanningCycle,
    #[error("induced subgraph is not hamiltonian-connected")]
    NotHamiltonianConnected,
    #[error("induced subgraphs must be complete or hamiltonian-connected")]
    ComponentNotTraversable,
    #[error("vertex {0} must not belong to the target set")]
    VertexInsideSet(usize),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("exhaustive enumeration supports order up to {limit}, requested {requested}")]
    EnumerationTooLarge { limit: usize, requested: usize },
    #[error("could not route {k} disjoint paths (flow stopped at {found})")]
    FlowDeficit { k: usize, found: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
