//! Brute-force ground truth on small graphs.
//!
//! `TAR_k(G)` is built explicitly: every independent set of size at least `k` is a
//! state, stored as a vertex bitmask. States differing in one vertex are adjacent;
//! components are found with a union-find over the add edges.

use petgraph::unionfind::UnionFind;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default cap on the number of vertices the oracle accepts.
pub const DEFAULT_LIMIT: usize = 20;
/// Hard cap from the bitmask width.
pub const MAX_LIMIT: usize = 63;

type Mask = u64;

/// Explicit token addition/removal graph.
#[derive(Debug, Clone)]
pub struct TarGraph {
    n: usize,
    k: usize,
    /// States sorted ascending as masks.
    states: Vec<Mask>,
    component: Vec<usize>,
    component_count: usize,
}

fn neighbor_masks(g: &Graph) -> Vec<Mask> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0, |m, &w| m | (1 << w)))
        .collect()
}

fn check_limit(g: &Graph, limit: usize) -> Result<()> {
    let limit = limit.min(MAX_LIMIT);
    if g.n() > limit {
        Err(Error::TooLarge { n: g.n(), limit })
    } else {
        Ok(())
    }
}

/// Every independent set of `g` as a mask, via include/exclude recursion over the
/// vertices in order.
pub fn independent_masks(g: &Graph) -> Vec<Mask> {
    let adj = neighbor_masks(g);
    let n = g.n();
    let mut out = Vec::new();
    // (next vertex, chosen, blocked)
    let mut stack = vec![(0usize, 0 as Mask, 0 as Mask)];
    while let Some((v, chosen, blocked)) = stack.pop() {
        if v == n {
            out.push(chosen);
            continue;
        }
        stack.push((v + 1, chosen, blocked));
        if blocked & (1 << v) == 0 {
            stack.push((v + 1, chosen | (1 << v), blocked | adj[v]));
        }
    }
    out.sort_unstable();
    out
}

pub fn mask_of(set: &[usize]) -> Mask {
    set.iter().fold(0, |m, &v| m | (1 << v))
}

pub fn set_of(mask: Mask) -> Vec<usize> {
    (0..Mask::BITS as usize).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Builds `TAR_k(g)`; fails when `g` has more than `limit` vertices.
pub fn build_tar(g: &Graph, k: usize, limit: usize) -> Result<TarGraph> {
    check_limit(g, limit)?;
    let states: Vec<Mask> = independent_masks(g)
        .into_iter()
        .filter(|m| m.count_ones() as usize >= k)
        .collect();
    let mut uf = UnionFind::<usize>::new(states.len());
    for (i, &s) in states.iter().enumerate() {
        if (s.count_ones() as usize) <= k {
            continue;
        }
        let mut rest = s;
        while rest != 0 {
            let bit = rest & rest.wrapping_neg();
            rest ^= bit;
            if let Ok(j) = states.binary_search(&(s ^ bit)) {
                uf.union(i, j);
            }
        }
    }
    // component ids numbered by first appearance
    let mut label = vec![usize::MAX; states.len()];
    let mut component = Vec::with_capacity(states.len());
    let mut count = 0;
    for i in 0..states.len() {
        let r = uf.find(i);
        if label[r] == usize::MAX {
            label[r] = count;
            count += 1;
        }
        component.push(label[r]);
    }
    Ok(TarGraph {
        n: g.n(),
        k,
        states,
        component,
        component_count: count,
    })
}

impl TarGraph {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn state_count(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[Mask] {
        &self.states
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn component_of_index(&self, i: usize) -> usize {
        self.component[i]
    }

    pub fn index_of(&self, set: &[usize]) -> Option<usize> {
        if set.iter().any(|&v| v >= self.n) {
            return None;
        }
        self.states.binary_search(&mask_of(set)).ok()
    }

    pub fn component_of(&self, set: &[usize]) -> Option<usize> {
        self.index_of(set).map(|i| self.component[i])
    }

    /// Adjacent state indices, computed on demand.
    pub fn neighbors(&self, i: usize) -> Vec<usize> {
        let s = self.states[i];
        (0..self.n)
            .filter_map(|v| self.states.binary_search(&(s ^ (1 << v))).ok())
            .collect()
    }

    /// Edges `(i, j)` with `i < j`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.states.len()).flat_map(move |i| {
            self.neighbors(i)
                .into_iter()
                .filter(move |&j| i < j)
                .map(move |j| (i, j))
        })
    }

    /// Empty `TAR_k` counts as connected.
    pub fn is_connected(&self) -> bool {
        self.component_count <= 1
    }
}

pub fn oracle_connected(g: &Graph, k: usize) -> Result<bool> {
    oracle_connected_with_limit(g, k, DEFAULT_LIMIT)
}

pub fn oracle_connected_with_limit(g: &Graph, k: usize, limit: usize) -> Result<bool> {
    Ok(build_tar(g, k, limit)?.is_connected())
}

pub fn oracle_same_component(g: &Graph, k: usize, from: &[usize], to: &[usize]) -> Result<bool> {
    oracle_same_component_with_limit(g, k, from, to, DEFAULT_LIMIT)
}

pub fn oracle_same_component_with_limit(
    g: &Graph,
    k: usize,
    from: &[usize],
    to: &[usize],
    limit: usize,
) -> Result<bool> {
    let tar = build_tar(g, k, limit)?;
    let a = tar.component_of(from).ok_or(Error::StateAbsent)?;
    let b = tar.component_of(to).ok_or(Error::StateAbsent)?;
    Ok(a == b)
}

/// All inclusion-maximal independent sets, as masks.
pub fn maximal_independent_masks(g: &Graph) -> Result<Vec<Mask>> {
    check_limit(g, DEFAULT_LIMIT)?;
    let adj = neighbor_masks(g);
    let all: Mask = if g.n() == 0 {
        0
    } else {
        Mask::MAX >> (Mask::BITS as usize - g.n())
    };
    Ok(independent_masks(g)
        .into_iter()
        .filter(|&s| {
            let dominated = set_of(s).into_iter().fold(s, |m, v| m | adj[v]);
            dominated == all
        })
        .collect())
}

/// Sizes of all maximal independent sets; `{0}` for the empty graph.
pub fn enumerate_maximal_sizes(g: &Graph) -> Result<Vec<usize>> {
    let mut sizes: Vec<usize> = maximal_independent_masks(g)?
        .into_iter()
        .map(|m| m.count_ones() as usize)
        .collect();
    sizes.sort_unstable();
    sizes.dedup();
    Ok(sizes)
}

pub fn maximum_independent_size(g: &Graph) -> Result<usize> {
    check_limit(g, DEFAULT_LIMIT)?;
    Ok(independent_masks(g)
        .into_iter()
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

/// Any induced path on four vertices, by exhaustive search.
pub fn find_induced_p4(g: &Graph) -> Option<[usize; 4]> {
    let n = g.n();
    for b in 0..n {
        for &c in g.neighbors(b) {
            for &a in g.neighbors(b) {
                if a == c || g.has_edge(a, c) {
                    continue;
                }
                for &d in g.neighbors(c) {
                    if d != b && !g.has_edge(b, d) && !g.has_edge(a, d) && d != a {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}
