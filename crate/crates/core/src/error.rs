use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph with {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("edge {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: usize, m: usize },
    #[error("graph has {m} edges; edge sets are limited to {max}")]
    TooManyEdges { m: usize, max: usize },
    #[error("a graph needs at least one vertex")]
    NoVertices,
    #[error("operation requires a connected graph")]
    Disconnected,
    #[error("{what}: search budget exceeded ({size} > {limit})")]
    BudgetExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("edge set is not a cycle vector")]
    NotACycle,
    #[error("structure is not a strip (boundary has {components} components)")]
    NotAStrip { components: usize },
    #[error("cannot contract loop edge {0}")]
    LoopContraction(usize),
    #[error("invariant violated: {0}")]
    Invariant(String),
    #[error("invalid construction input: {0}")]
    Construction(String),
    #[error("{0}")]
    Io(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
