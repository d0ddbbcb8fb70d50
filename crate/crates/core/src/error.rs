use thiserror::Error;

use crate::cotree::NodeId;

/// Errors produced by graph parsing, cotree construction and the decision procedures.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("vertex {0} is listed more than once")]
    DuplicateVertex(usize),

    #[error("vertices {0} and {1} are adjacent, the set is not independent")]
    NotIndependent(usize, usize),

    #[error("the independent set is not maximal")]
    NotMaximal,

    #[error("graph is not a cograph: induced P4 {} {} {} {}", .witness[0], .witness[1], .witness[2], .witness[3])]
    NotACograph { witness: [usize; 4] },

    #[error("the empty graph has no cotree")]
    EmptyGraph,

    #[error("node {0} is not a join node")]
    NotAJoinNode(NodeId),

    #[error("no maximal independent set of size {0} exists in the requested subgraph")]
    SizeNotRealizable(usize),

    #[error("independent set has size {size}, below the threshold {k}")]
    SizeBelowThreshold { size: usize, k: usize },

    #[error("graph has {n} vertices, above the brute-force limit of {limit}")]
    TooLarge { n: usize, limit: usize },

    #[error("set is not a state of the reconfiguration graph")]
    StateAbsent,

    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),

    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(usize, usize),

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
