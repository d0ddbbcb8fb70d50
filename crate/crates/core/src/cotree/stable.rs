//! Stable-searches: root-containing subtrees that keep both children at unions and
//! exactly one child at joins. They correspond one-to-one with maximal independent
//! sets of the cograph.

use super::{Cotree, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::graph::IndependentSet;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StableSearch {
    member: Vec<bool>,
}

impl StableSearch {
    pub(crate) fn from_members(member: Vec<bool>) -> Self {
        StableSearch { member }
    }

    pub fn contains(&self, node: NodeId) -> bool {
        self.member[node]
    }

    pub fn members(&self) -> impl Iterator<Item = NodeId> + '_ {
        self.member
            .iter()
            .enumerate()
            .filter_map(|(x, &m)| m.then_some(x))
    }

    /// Checks the structural invariants against `t`.
    pub fn is_valid(&self, t: &Cotree) -> bool {
        if self.member.len() != t.len() || !self.member[Cotree::ROOT] {
            return false;
        }
        (0..t.len()).all(|x| {
            let inside = |c: NodeId| self.member[c];
            match (t.kind(x), t.children(x)) {
                (_, None) => true,
                (NodeKind::Union, Some([l, r])) => !self.member[x] || (inside(l) && inside(r)),
                (_, Some([l, r])) => {
                    let chosen = inside(l) as u8 + inside(r) as u8;
                    if self.member[x] {
                        chosen == 1
                    } else {
                        chosen == 0
                    }
                }
            }
        })
    }
}

/// Marks every node that has a vertex of `set` below it. Each node is visited once.
/// Fails if `set` has a vertex outside `t` or two vertices on both sides of a join.
pub(crate) fn mark_ancestors(t: &Cotree, set: &[usize]) -> Result<Vec<bool>> {
    let mut marked = vec![false; t.len()];
    for &v in set {
        let leaf = t.leaf_of(v).ok_or(Error::InvalidVertex {
            vertex: v,
            n: t.universe(),
        })?;
        let mut x = leaf;
        loop {
            if std::mem::replace(&mut marked[x], true) {
                break;
            }
            match t.parent(x) {
                Some(p) => x = p,
                None => break,
            }
        }
    }
    for x in t.join_nodes() {
        let [l, r] = t.children(x).unwrap();
        if marked[l] && marked[r] {
            let u = t.leaves_under(l).find(|&v| set.contains(&v)).unwrap();
            let w = t.leaves_under(r).find(|&v| set.contains(&v)).unwrap();
            return Err(Error::NotIndependent(u.min(w), u.max(w)));
        }
    }
    Ok(marked)
}

/// The stable-search of a maximal independent set: its leaves closed upward.
pub fn stable_search_of(t: &Cotree, set: &[usize]) -> Result<StableSearch> {
    let marked = mark_ancestors(t, set)?;
    let search = StableSearch::from_members(marked);
    if search.is_valid(t) {
        Ok(search)
    } else {
        Err(Error::NotMaximal)
    }
}

/// The member leaves of a stable-search, ascending.
pub fn leaves_of(t: &Cotree, search: &StableSearch) -> IndependentSet {
    let vertices = search
        .members()
        .filter_map(|x| match t.kind(x) {
            NodeKind::Leaf(v) => Some(v),
            _ => None,
        })
        .collect();
    IndependentSet::from_unchecked(vertices)
}
