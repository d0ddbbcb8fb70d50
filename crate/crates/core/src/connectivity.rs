//! Connectivity of the token addition/removal graph `TAR_k(G)` of a cograph.
//!
//! The cotree is pruned one join node at a time. At each step the join node whose
//! bad side `B` has the smallest `alpha` is examined: if the graph left after
//! deleting `B` and its neighborhood has a maximal independent set whose size lies
//! in `[k - alpha(B), k - 1]`, that set together with a maximum independent set of
//! `B` is a `k`-independent set that can never leave `B`, and the answer is
//! negative. Otherwise deleting `B` yields an equivalent instance. When no join node
//! is left the graph is edgeless and `TAR_k` is connected.

use crate::cotree::{build_cotree, Cotree, NodeId};
use crate::error::{Error, Result};
use crate::graph::{Graph, IndependentSet};
use crate::sizes::{compute_size_lists, SizeList, SizeTable};

/// One executed pruning step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PruneStep {
    /// Id of the pruned join node in the cotree as it was before this step.
    pub node: NodeId,
    pub bad_alpha: usize,
    /// Size list of the remainder, none of whose sizes fell in the forbidden interval.
    pub remainder: SizeList,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PruneTrace {
    pub steps: Vec<PruneStep>,
}

/// Two `k`-independent sets of the reduced cograph lying in different components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisconnectWitness {
    pub stuck_set: IndependentSet,
    pub good_set: IndependentSet,
    /// The cotree after all executed prunes; vertex labels are those of the input.
    pub reduced_cotree: Cotree,
    pub trace: PruneTrace,
    /// The join node (in `reduced_cotree`) whose bad side traps `stuck_set`.
    pub join_node: NodeId,
    /// Size of the part of `stuck_set` outside the bad side.
    pub beta: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity {
    Connected,
    /// No independent set of size `k` exists, so `TAR_k` has no vertices.
    TriviallyConnected,
    Disconnected(Box<DisconnectWitness>),
}

impl Connectivity {
    /// True for both connected verdicts.
    pub fn is_connected(&self) -> bool {
        !matches!(self, Connectivity::Disconnected(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Connectivity::Connected => "CONNECTED",
            Connectivity::TriviallyConnected => "TRIVIALLY_CONNECTED",
            Connectivity::Disconnected(_) => "DISCONNECTED",
        }
    }
}

/// Decides whether `TAR_k(g)` is connected. Fails if `g` is not a cograph.
pub fn is_tar_connected(g: &Graph, k: usize) -> Result<Connectivity> {
    if g.n() == 0 {
        // the only independent set is the empty one
        return Ok(if k == 0 {
            Connectivity::Connected
        } else {
            Connectivity::TriviallyConnected
        });
    }
    Ok(is_tar_connected_cotree(&build_cotree(g)?, k))
}

/// [`is_tar_connected`] on an already built cotree.
pub fn is_tar_connected_cotree(t: &Cotree, k: usize) -> Connectivity {
    decide_observed(t, k, |_, _, _| {})
}

/// Runs the pruning loop, calling `on_prune(before, step, after)` after every prune.
pub fn decide_observed<F>(t: &Cotree, k: usize, mut on_prune: F) -> Connectivity
where
    F: FnMut(&Cotree, &PruneStep, &Cotree),
{
    if k == 0 {
        return Connectivity::Connected;
    }
    if k > t.alpha(t.root()) {
        return Connectivity::TriviallyConnected;
    }
    let mut current = t.clone();
    let mut trace = PruneTrace::default();
    while let Some(join) = select_prune_candidate(&current) {
        let table = compute_size_lists(&current);
        let remainder = table.remainder(&current, join).expect("candidate is a join node");
        let bad_alpha = current.alpha(current.bad_child(join).unwrap());
        if let Some(beta) = remainder.first_in(k.saturating_sub(bad_alpha), k - 1) {
            let mut witness = witness_from_table(&current, &table, join, beta, k)
                .expect("beta was read from the remainder list");
            witness.trace = trace;
            return Connectivity::Disconnected(Box::new(witness));
        }
        let step = PruneStep {
            node: join,
            bad_alpha,
            remainder,
        };
        let next = prune(&current, join).expect("candidate is a join node");
        on_prune(&current, &step, &next);
        trace.steps.push(step);
        current = next;
    }
    Connectivity::Connected
}

/// The join node whose bad side has the smallest `alpha`, ties to the smaller id.
/// `None` when the cotree has no join node.
///
/// Every join node is a candidate, not only the bottom-most ones: a join high in
/// the tree can have a bad side smaller than any bad side below it, and the
/// trapping argument needs the globally smallest one.
pub fn select_prune_candidate(t: &Cotree) -> Option<NodeId> {
    t.join_nodes()
        .min_by_key(|&x| (t.alpha(t.bad_child(x).unwrap()), x))
}

/// Deletes the bad side of `join` and contracts `join` into its good child.
pub fn prune(t: &Cotree, join: NodeId) -> Result<Cotree> {
    if !t.is_join(join) {
        return Err(Error::NotAJoinNode(join));
    }
    Ok(t.contract_into_child(join, t.good_child(join).unwrap()))
}

/// Builds the disconnection witness for `join` and a remainder size `beta` taken
/// from `[k - alpha(bad side), k - 1]`. The trace is left empty.
pub fn extract_witness(t: &Cotree, join: NodeId, beta: usize, k: usize) -> Result<DisconnectWitness> {
    witness_from_table(t, &compute_size_lists(t), join, beta, k)
}

fn witness_from_table(
    t: &Cotree,
    table: &SizeTable,
    join: NodeId,
    beta: usize,
    k: usize,
) -> Result<DisconnectWitness> {
    let mut stuck = table.realize_remainder(t, join, beta)?;
    let bad = t.bad_child(join).ok_or(Error::NotAJoinNode(join))?;
    t.collect_all_good(bad, &mut stuck);
    let stuck_set = IndependentSet::from_unchecked(stuck);
    let good_set = t.all_good_set(t.root());
    debug_assert!(stuck_set.len() >= k && good_set.len() >= k);
    Ok(DisconnectWitness {
        stuck_set,
        good_set,
        reduced_cotree: t.clone(),
        trace: PruneTrace::default(),
        join_node: join,
        beta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tree(s: &str) -> Cotree {
        s.parse().unwrap()
    }

    fn witness(c: Connectivity) -> DisconnectWitness {
        match c {
            Connectivity::Disconnected(w) => *w,
            other => panic!("expected a disconnection, got {other:?}"),
        }
    }

    #[test]
    fn k2() {
        let g = Graph::from_edges(2, [(0, 1)]).unwrap();
        let w = witness(is_tar_connected(&g, 1).unwrap());
        assert_eq!(w.stuck_set.vertices(), &[1]);
        assert_eq!(w.good_set.vertices(), &[0]);
        assert_eq!(w.beta, 0);
        assert!(w.trace.steps.is_empty());
    }

    #[test]
    fn p3() {
        let g = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(is_tar_connected(&g, 2).unwrap(), Connectivity::Connected);
        let w = witness(is_tar_connected(&g, 1).unwrap());
        assert_eq!(w.stuck_set.vertices(), &[1]);
        assert_eq!(w.good_set.vertices(), &[0, 2]);
        assert_eq!(is_tar_connected(&g, 3).unwrap(), Connectivity::TriviallyConnected);
        assert_eq!(is_tar_connected(&g, 0).unwrap(), Connectivity::Connected);
    }

    #[test]
    fn two_k2() {
        let t = tree("(U (J 0 1) (J 2 3))");
        assert!(!is_tar_connected_cotree(&t, 2).is_connected());
        assert_eq!(select_prune_candidate(&t), Some(1));
    }

    #[test]
    fn edgeless_graphs_are_connected() {
        for n in 1..6 {
            for k in 0..=n {
                assert!(is_tar_connected(&Graph::new(n), k).unwrap().is_connected());
            }
        }
        assert_eq!(
            is_tar_connected(&Graph::new(0), 0).unwrap(),
            Connectivity::Connected
        );
        assert_eq!(
            is_tar_connected(&Graph::new(0), 1).unwrap(),
            Connectivity::TriviallyConnected
        );
    }

    #[test]
    fn candidates() {
        assert_eq!(select_prune_candidate(&tree("(U 0 (U 1 2))")), None);
        assert_eq!(select_prune_candidate(&tree("(J 1 (U 0 2))")), Some(0));
    }

    #[test]
    fn prune_examples() {
        let p3 = tree("(J 1 (U 0 2))");
        let pruned = prune(&p3, 0).unwrap();
        assert_eq!(pruned.to_string(), "(U 0 2)");
        assert_eq!(prune(&tree("(J 0 1)"), 0).unwrap().to_string(), "0");
        assert_eq!(
            prune(&tree("(U (J 0 1) (J 2 3))"), 1).unwrap().to_string(),
            "(U 0 (J 2 3))"
        );
        assert_eq!(prune(&p3, 2), Err(Error::NotAJoinNode(2)));
    }

    #[test]
    fn witness_examples() {
        let w = extract_witness(&tree("(J 0 1)"), 0, 0, 1).unwrap();
        assert_eq!(
            (w.stuck_set.vertices(), w.good_set.vertices()),
            (&[1][..], &[0][..])
        );
        let w = extract_witness(&tree("(J 1 (U 0 2))"), 0, 0, 1).unwrap();
        assert_eq!(
            (w.stuck_set.vertices(), w.good_set.vertices()),
            (&[1][..], &[0, 2][..])
        );
        let w = extract_witness(&tree("(U (J 0 1) (J 2 3))"), 1, 1, 2).unwrap();
        assert_eq!(w.stuck_set.vertices(), &[1, 2]);
        assert_eq!(w.good_set.vertices(), &[0, 2]);
        assert_eq!(
            extract_witness(&tree("(J 0 1)"), 0, 1, 1).unwrap_err(),
            Error::SizeNotRealizable(1)
        );
    }

    #[test]
    fn small_bad_side_above_the_bottom_joins() {
        // {0} is joined to a large cograph, next to a component whose bottom join
        // has a bad side of size 2; TAR_2 is connected
        let t = tree("(U (J 0 (J (U 1 (U 2 3)) (U 4 (U 5 6)))) (J (U 7 8) (U 9 10)))");
        assert_eq!(t.alpha(t.bad_child(1).unwrap()), 1);
        assert_eq!(is_tar_connected_cotree(&t, 2), Connectivity::Connected);
        assert!(!is_tar_connected_cotree(&t, 3).is_connected());
    }

    #[test]
    fn trace_records_prunes() {
        let t = tree("(J 1 (U 0 2))");
        let mut seen = Vec::new();
        let verdict = decide_observed(&t, 2, |before, step, after| {
            seen.push((before.to_string(), step.node, after.to_string()));
        });
        assert!(verdict.is_connected());
        assert_eq!(seen, vec![("(J 1 (U 0 2))".into(), 0, "(U 0 2)".into())]);
    }
}
