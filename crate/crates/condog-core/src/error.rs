use core::fmt;

use crate::bits::VertexId;

/// Errors produced by graph construction and solver entry points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A game-value entry point was called on a disconnected graph.
    Disconnected,
    /// The move is not legal in the current state.
    IllegalMove(VertexId),
    /// A vertex index is out of range for the graph.
    VertexOutOfRange(VertexId),
    /// A seed set was empty where a nonempty one is required.
    EmptySeed,
    /// A seed set does not induce a connected subgraph.
    SeedDisconnected,
    /// The start vertex of a legal ordering is not in the seed set.
    SeedMissingStart(VertexId),
    /// Family parameters are out of range.
    BadFamilyParams(&'static str),
    /// The input graph is not a tree.
    NotATree,
    /// The graph does not fit into the configured bitset width.
    TooManyVertices { n: usize, cap: usize },
    /// An adjacency list is not symmetric or contains a self-loop.
    BadAdjacency,
    /// A label is duplicated or refers to a vertex outside the graph.
    BadLabel,
    /// The solver expanded more nodes than its budget allows.
    BudgetExceeded,
    /// A strategy returned an illegal move during a playout.
    StrategyIllegalMove(VertexId),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Disconnected => write!(f, "graph is not connected"),
            Error::IllegalMove(v) => write!(f, "illegal move {v:?}"),
            Error::VertexOutOfRange(v) => write!(f, "vertex {v:?} out of range"),
            Error::EmptySeed => write!(f, "seed set is empty"),
            Error::SeedDisconnected => write!(f, "seed set does not induce a connected subgraph"),
            Error::SeedMissingStart(v) => write!(f, "start vertex {v:?} not in seed set"),
            Error::BadFamilyParams(msg) => write!(f, "bad family parameters: {msg}"),
            Error::NotATree => write!(f, "graph is not a tree"),
            Error::TooManyVertices { n, cap } => {
                write!(f, "graph order {n} exceeds bitset capacity {cap}")
            }
            Error::BadAdjacency => write!(f, "adjacency is not symmetric or has self-loops"),
            Error::BadLabel => write!(f, "duplicate label or label out of range"),
            Error::BudgetExceeded => write!(f, "solver node budget exceeded"),
            Error::StrategyIllegalMove(v) => write!(f, "strategy returned illegal move {v:?}"),
        }
    }
}

impl core::error::Error for Error {}
