use std::path::PathBuf;

use thiserror::Error;

/// Errors raised when constructing or editing a [`Graph`](crate::Graph).
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph order {0} exceeds the 64-vertex limit")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0} is not allowed in a simple graph")]
    Loop(usize),
    #[error("cannot {action}: {reason}")]
    InvalidEdit { action: String, reason: String },
}

/// A malformed graph6 line. `offset` is the byte position of the problem.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("graph6 parse error at byte {offset}: {reason}")]
pub struct Graph6Error {
    pub offset: usize,
    pub reason: String,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MatroidError {
    #[error("unsupported field order {0}; only GF(2) and GF(3) are available")]
    UnsupportedField(u8),
    #[error("rank {rank} is over the cap {cap} for GF({q})")]
    RankOverCap { q: u8, rank: usize, cap: usize },
    #[error("point index {index} out of range for PG({dim},{q}) with {points} points")]
    PointOutOfRange {
        index: usize,
        dim: usize,
        q: u8,
        points: usize,
    },
    #[error("ground set of rank {found} does not span PG({dim},{q})")]
    NotFullRank { found: usize, dim: usize, q: u8 },
    #[error("malformed matroid text {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error("{path}:{line}: {source}")]
    Graph6Line {
        path: PathBuf,
        line: usize,
        #[source]
        source: Graph6Error,
    },
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
    #[error("order {requested} exceeds the exhaustive generation cap {cap}; supply graphs as a graph6 file instead")]
    OverCap { requested: usize, cap: usize },
    #[error("invalid class spec {spec:?}: {reason}")]
    BadClassSpec { spec: String, reason: String },
    #[error("class {0} is not closed under complementation")]
    NotComplementClosed(String),
    #[error("class {class} is not hereditary: {witness} is a member but deleting vertex {vertex} leaves a non-member")]
    NonHereditary {
        class: String,
        witness: String,
        vertex: usize,
    },
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
