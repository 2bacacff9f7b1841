use thiserror::Error;

/// Errors shared across the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("vertex index {index} out of range for tree on {n} vertices")]
    VertexOutOfRange { index: usize, n: usize },

    #[error("not a tree: expected {expected} edges for {n} vertices, got {got}")]
    EdgeCountMismatch { n: usize, expected: usize, got: usize },

    #[error("not a tree: self-loop at vertex {0}")]
    SelfLoop(usize),

    #[error("not a tree: duplicate edge {{{u}, {v}}}")]
    DuplicateEdge { u: usize, v: usize },

    #[error("not a tree: graph is disconnected")]
    Disconnected,

    #[error("vertex {0} is not a leaf")]
    NotALeaf(usize),

    #[error("{{{u}, {v}}} is not an edge")]
    NotAnEdge { u: usize, v: usize },

    #[error("subtree order {k} exceeds the enumeration limit {limit}")]
    EnumerationLimit { k: usize, limit: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("profile is undefined: tree has no subtree of the requested order (z = 0)")]
    EmptyProfile,

    #[error("facet is degenerate: the two profiles do not determine a unique line")]
    DegenerateFacet,

    #[error("per-period increments did not stabilize for pendant sequence {0:?}")]
    UnstablePeriod(Vec<u64>),

    #[error("parse error: {0}")]
    Parse(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
