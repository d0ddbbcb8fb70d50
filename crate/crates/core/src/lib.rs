//! Token addition/removal reconfiguration of independent sets on cographs.
//!
//! For a graph `G` and a threshold `k`, `TAR_k(G)` is the graph whose vertices are
//! the independent sets of `G` with at least `k` vertices, two sets being adjacent
//! when they differ in exactly one vertex. On cographs this crate decides
//!
//! * whether `TAR_k(G)` is connected ([`is_tar_connected`]), producing two sets in
//!   different components when it is not, in cubic time;
//! * whether two given sets are in the same component ([`same_component`]), producing
//!   a reconfiguration sequence when they are, in linear time for the decision.
//!
//! Both procedures work on the cotree of the cograph ([`build_cotree`]). The
//! [`oracle`] module builds `TAR_k(G)` explicitly for small graphs and serves as
//! the reference the fast procedures are tested against.
//!
//! ```
//! use cotar::{is_tar_connected, same_component, Graph, IndependentSet};
//!
//! // the path 0 - 1 - 2
//! let g = Graph::from_edges(3, [(0, 1), (1, 2)])?;
//! // {1} cannot move without dropping below one token
//! assert!(!is_tar_connected(&g, 1)?.is_connected());
//! assert!(is_tar_connected(&g, 2)?.is_connected());
//!
//! let from = IndependentSet::new(&g, [0])?;
//! let to = IndependentSet::new(&g, [2])?;
//! assert!(same_component(&g, 1, &from, &to)?.is_reachable());
//! # Ok::<(), cotar::Error>(())
//! ```

pub mod cli;
pub mod connectivity;
pub mod cotree;
mod error;
pub mod graph;
pub mod oracle;
pub mod reachability;
pub mod sizes;

pub use connectivity::{is_tar_connected, Connectivity, DisconnectWitness, PruneStep, PruneTrace};
pub use cotree::{build_cotree, random_cotree, Cotree, CotreeBuilder, NodeId, NodeKind, StableSearch};
pub use error::{Error, Result};
pub use graph::{
    is_independent, is_maximal_independent, validate_sequence, Graph, IndependentSet, ReconfigSequence,
    ReconfigStep, StepKind,
};
pub use reachability::{same_component, Reachability};
pub use sizes::{compute_size_lists, SizeList, SizeTable};
