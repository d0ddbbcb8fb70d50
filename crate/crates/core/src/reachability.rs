//! Whether two `k`-independent sets of a cograph lie in the same component of
//! `TAR_k(G)`, with an explicit reconfiguration sequence when they do.
//!
//! Each endpoint is completed to a maximal independent set and then climbed: its bad
//! choices are replaced by the good side's maximum independent set, smallest bad
//! side first, as long as emptying the bad side keeps at least `k` tokens. The two
//! endpoints are connected iff both climbs end at the same set.

use crate::cotree::{build_cotree, stable, Cotree, NodeId, NodeKind, StableSearch};
use crate::error::{Error, Result};
use crate::graph::{Graph, IndependentSet, ReconfigSequence, ReconfigStep};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Reachability {
    Reachable(ReconfigSequence),
    Unreachable,
}

impl Reachability {
    pub fn is_reachable(&self) -> bool {
        matches!(self, Reachability::Reachable(_))
    }

    pub fn verdict(&self) -> &'static str {
        match self {
            Reachability::Reachable(_) => "REACHABLE",
            Reachability::Unreachable => "UNREACHABLE",
        }
    }
}

/// Join nodes where a maximal independent set takes the bad side, bucketed by the
/// bad side's `alpha`. Inside a bucket deeper nodes come first, then smaller ids.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BadNodeAgenda {
    buckets: Vec<Vec<NodeId>>,
}

impl BadNodeAgenda {
    /// Linear-time construction by two stable counting sorts.
    pub fn new(t: &Cotree, search: &StableSearch) -> Self {
        let bad: Vec<NodeId> = t
            .join_nodes()
            .filter(|&x| search.contains(x) && search.contains(t.bad_child(x).unwrap()))
            .collect();
        let max_depth = bad.iter().map(|&x| t.depth(x)).max().unwrap_or(0);
        let mut by_depth: Vec<Vec<NodeId>> = vec![Vec::new(); max_depth + 1];
        for &x in &bad {
            by_depth[max_depth - t.depth(x)].push(x);
        }
        let mut buckets: Vec<Vec<NodeId>> = vec![Vec::new(); t.alpha(t.root()) + 1];
        for x in by_depth.into_iter().flatten() {
            buckets[t.alpha(t.bad_child(x).unwrap())].push(x);
        }
        BadNodeAgenda { buckets }
    }

    /// Nodes in processing order.
    pub fn order(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.buckets.iter().flatten().copied()
    }

    pub fn bucket(&self, bad_alpha: usize) -> &[NodeId] {
        self.buckets.get(bad_alpha).map_or(&[], Vec::as_slice)
    }

    pub fn is_empty(&self) -> bool {
        self.buckets.iter().all(Vec::is_empty)
    }

    /// Tracks sizes only: returns the prefix of the order that can be processed
    /// starting from a set of `size` tokens with threshold `k`.
    pub fn run(&self, t: &Cotree, mut size: usize, k: usize) -> Vec<NodeId> {
        let mut done = Vec::new();
        for x in self.order() {
            let bad = t.alpha(t.bad_child(x).unwrap());
            if size < k + bad {
                break;
            }
            size = size - bad + t.alpha(t.good_child(x).unwrap());
            done.push(x);
        }
        done
    }
}

/// Extends an independent set to a maximal one: at each join of its stable-search
/// where neither side holds a vertex of `set`, the good side is taken. Returns the
/// maximal set, its stable-search and the additions leading to it (ascending).
pub fn complete_to_maximal(
    t: &Cotree,
    set: &[usize],
) -> Result<(IndependentSet, StableSearch, ReconfigSequence)> {
    let marked = stable::mark_ancestors(t, set)?;
    let mut member = vec![false; t.len()];
    member[Cotree::ROOT] = true;
    for x in 0..t.len() {
        if !member[x] {
            continue;
        }
        match (t.kind(x), t.children(x)) {
            (NodeKind::Union, Some([l, r])) => {
                member[l] = true;
                member[r] = true;
            }
            (NodeKind::Join, Some([l, r])) => {
                let chosen = if marked[l] {
                    l
                } else if marked[r] {
                    r
                } else {
                    t.good_child(x).unwrap()
                };
                member[chosen] = true;
            }
            _ => {}
        }
    }
    let search = StableSearch::from_members(member);
    let maximal = crate::cotree::leaves_of(t, &search);
    let start = IndependentSet::from_unchecked(set.to_vec());
    let steps = maximal
        .vertices()
        .iter()
        .filter(|&&v| !start.contains(v))
        .map(|&v| ReconfigStep::add(v))
        .collect();
    let seq = ReconfigSequence {
        threshold: start.len(),
        start,
        steps,
    };
    Ok((maximal, search, seq))
}

/// Climbs a maximal independent set of size at least `k` as high as it goes and
/// returns the final set with the walk to it.
pub fn highest_maximal(
    t: &Cotree,
    set: &IndependentSet,
    k: usize,
) -> Result<(IndependentSet, ReconfigSequence)> {
    if set.len() < k {
        return Err(Error::SizeBelowThreshold { size: set.len(), k });
    }
    let search = crate::cotree::stable_search_of(t, set.vertices())?;
    let processed = BadNodeAgenda::new(t, &search).run(t, set.len(), k);
    let steps = emit_climb(t, set, &processed);
    let seq = ReconfigSequence {
        start: set.clone(),
        steps,
        threshold: k,
    };
    let top = seq.end();
    Ok((top, seq))
}

fn emit_climb(t: &Cotree, set: &IndependentSet, processed: &[NodeId]) -> Vec<ReconfigStep> {
    let mut current = vec![false; t.universe()];
    for &v in set.vertices() {
        current[v] = true;
    }
    let mut steps = Vec::new();
    let mut added = Vec::new();
    for &x in processed {
        let bad = t.bad_child(x).unwrap();
        let mut removed: Vec<usize> = t.leaves_under(bad).filter(|&v| current[v]).collect();
        removed.sort_unstable();
        // every bad choice inside `bad` has already been replaced
        assert_eq!(
            removed.len(),
            t.alpha(bad),
            "bad side of node {x} not at its maximum"
        );
        for v in removed {
            current[v] = false;
            steps.push(ReconfigStep::remove(v));
        }
        added.clear();
        t.collect_all_good(t.good_child(x).unwrap(), &mut added);
        added.sort_unstable();
        for &v in &added {
            current[v] = true;
            steps.push(ReconfigStep::add(v));
        }
    }
    steps
}

/// The final set of a climb, rebuilt top-down in linear time from the starting
/// stable-search and the processed nodes.
fn climb_top(t: &Cotree, search: &StableSearch, processed: &[NodeId]) -> Vec<bool> {
    let mut flipped = vec![false; t.len()];
    for &x in processed {
        flipped[x] = true;
    }
    let mut member = vec![false; t.len()];
    let mut top = vec![false; t.universe()];
    member[Cotree::ROOT] = true;
    for x in 0..t.len() {
        if !member[x] {
            continue;
        }
        match (t.kind(x), t.children(x)) {
            (NodeKind::Leaf(v), _) => top[v] = true,
            (NodeKind::Union, Some([l, r])) => {
                member[l] = true;
                member[r] = true;
            }
            (_, Some([l, r])) => {
                let chosen = if flipped[x] {
                    t.good_child(x).unwrap()
                } else if search.contains(l) {
                    l
                } else if search.contains(r) {
                    r
                } else {
                    t.good_child(x).unwrap()
                };
                member[chosen] = true;
            }
            _ => unreachable!(),
        }
    }
    top
}

struct Climb {
    completion: ReconfigSequence,
    maximal: IndependentSet,
    search: StableSearch,
    processed: Vec<NodeId>,
}

fn climb(t: &Cotree, set: &[usize], k: usize) -> Result<Climb> {
    if set.len() < k {
        return Err(Error::SizeBelowThreshold { size: set.len(), k });
    }
    let (maximal, search, completion) = complete_to_maximal(t, set)?;
    let processed = BadNodeAgenda::new(t, &search).run(t, maximal.len(), k);
    Ok(Climb {
        completion,
        maximal,
        search,
        processed,
    })
}

/// Decision only, in linear time: are `from` and `to` in the same component of
/// `TAR_k` of the cograph of `t`?
pub fn same_component_decision(t: &Cotree, k: usize, from: &[usize], to: &[usize]) -> Result<bool> {
    let a = climb(t, from, k)?;
    let b = climb(t, to, k)?;
    Ok(climb_top(t, &a.search, &a.processed) == climb_top(t, &b.search, &b.processed))
}

/// Like [`same_component`], on an already built cotree.
pub fn same_component_cotree(t: &Cotree, k: usize, from: &[usize], to: &[usize]) -> Result<Reachability> {
    let a = climb(t, from, k)?;
    let b = climb(t, to, k)?;
    if climb_top(t, &a.search, &a.processed) != climb_top(t, &b.search, &b.processed) {
        return Ok(Reachability::Unreachable);
    }
    let mut steps = a.completion.steps;
    steps.extend(emit_climb(t, &a.maximal, &a.processed));
    let mut back = b.completion.steps;
    back.extend(emit_climb(t, &b.maximal, &b.processed));
    steps.extend(back.into_iter().rev().map(ReconfigStep::inverse));
    Ok(Reachability::Reachable(ReconfigSequence {
        start: a.completion.start,
        steps,
        threshold: k,
    }))
}

/// Decides whether `from` and `to` are connected in `TAR_k(g)`; on success the
/// sequence walks from `from` through both climbs' common top to `to`.
pub fn same_component(
    g: &Graph,
    k: usize,
    from: &IndependentSet,
    to: &IndependentSet,
) -> Result<Reachability> {
    for set in [from, to] {
        if set.len() < k {
            return Err(Error::SizeBelowThreshold { size: set.len(), k });
        }
        if let Some(&v) = set.vertices().iter().find(|&&v| v >= g.n()) {
            return Err(Error::InvalidVertex { vertex: v, n: g.n() });
        }
    }
    if g.n() == 0 {
        return Ok(Reachability::Reachable(ReconfigSequence::empty(from.clone(), k)));
    }
    let t = build_cotree(g)?;
    same_component_cotree(&t, k, from.vertices(), to.vertices())
}
