//! Brute-force reference computations, written independently of the library.
#![allow(dead_code)]

use std::collections::{HashMap, VecDeque};

use cotar::{Cotree, Graph};

pub fn adjacency_masks(g: &Graph) -> Vec<u32> {
    (0..g.n())
        .map(|v| g.neighbors(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

pub fn is_independent_mask(adj: &[u32], s: u32) -> bool {
    (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0)
}

/// Every independent set, by filtering all subsets.
pub fn independent_sets(g: &Graph) -> Vec<u32> {
    let adj = adjacency_masks(g);
    (0u32..1 << g.n())
        .filter(|&s| is_independent_mask(&adj, s))
        .collect()
}

pub fn maximal_sets_within(g: &Graph, allowed: u32) -> Vec<u32> {
    let adj = adjacency_masks(g);
    let mut out = Vec::new();
    let mut s = allowed;
    loop {
        if is_independent_mask(&adj, s)
            && (0..g.n()).all(|v| allowed >> v & 1 == 0 || s >> v & 1 == 1 || adj[v] & s != 0)
        {
            out.push(s);
        }
        if s == 0 {
            break;
        }
        s = (s - 1) & allowed;
    }
    out
}

pub fn maximal_sets(g: &Graph) -> Vec<u32> {
    maximal_sets_within(g, full(g.n()))
}

pub fn full(n: usize) -> u32 {
    if n == 0 {
        0
    } else {
        u32::MAX >> (32 - n)
    }
}

pub fn mask(set: &[usize]) -> u32 {
    set.iter().fold(0, |m, &v| m | 1 << v)
}

pub fn members(m: u32) -> Vec<usize> {
    (0..32).filter(|&v| m >> v & 1 == 1).collect()
}

/// Component label of every `k`-independent set, by breadth-first search over
/// single-vertex additions and removals.
pub fn tar_components(g: &Graph, k: usize) -> HashMap<u32, usize> {
    let adj = adjacency_masks(g);
    let states: Vec<u32> = independent_sets(g)
        .into_iter()
        .filter(|s| s.count_ones() as usize >= k)
        .collect();
    let mut label: HashMap<u32, usize> = HashMap::with_capacity(states.len());
    let mut next = 0;
    for &s in &states {
        if label.contains_key(&s) {
            continue;
        }
        label.insert(s, next);
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for (v, &around) in adj.iter().enumerate() {
                let y = x ^ 1 << v;
                let ok = (y.count_ones() as usize) >= k && (y < x || around & x == 0);
                if ok && !label.contains_key(&y) {
                    label.insert(y, next);
                    queue.push_back(y);
                }
            }
        }
        next += 1;
    }
    label
}

pub fn component_count(labels: &HashMap<u32, usize>) -> usize {
    labels.values().max().map_or(0, |&m| m + 1)
}

/// True iff the four vertices induce a path.
pub fn induces_p4(g: &Graph, q: [usize; 4]) -> bool {
    let mut deg = [0; 4];
    let mut edges = 0;
    for i in 0..4 {
        for j in i + 1..4 {
            if q[i] == q[j] {
                return false;
            }
            if g.has_edge(q[i], q[j]) {
                deg[i] += 1;
                deg[j] += 1;
                edges += 1;
            }
        }
    }
    deg.sort_unstable();
    edges == 3 && deg == [1, 1, 2, 2]
}

/// True iff the witness is a path in the listed order.
pub fn is_p4_path(g: &Graph, q: [usize; 4]) -> bool {
    induces_p4(g, q) && g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3])
}

pub fn has_induced_p4(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                for d in c + 1..n {
                    if induces_p4(g, [a, b, c, d]) {
                        return true;
                    }
                }
            }
        }
    }
    false
}

/// Leaf sets of all stable-searches, by choosing one child at every reached join.
pub fn stable_search_leaf_sets(t: &Cotree) -> Vec<u32> {
    fn go(t: &Cotree, x: usize) -> Vec<u32> {
        match (t.kind(x), t.children(x)) {
            (cotar::NodeKind::Leaf(v), _) => vec![1 << v],
            (cotar::NodeKind::Union, Some([l, r])) => {
                let (a, b) = (go(t, l), go(t, r));
                a.iter().flat_map(|&p| b.iter().map(move |&q| p | q)).collect()
            }
            (_, Some([l, r])) => {
                let mut a = go(t, l);
                a.extend(go(t, r));
                a
            }
            _ => unreachable!(),
        }
    }
    go(t, t.root())
}

/// `(n, join_prob, seed)` triples of the acceptance corpus.
pub fn corpus(count: u64, max_n: usize) -> impl Iterator<Item = (usize, f64, u64)> {
    (0..count).map(move |seed| {
        let n = 1 + (seed as usize % max_n);
        let p = [0.2, 0.5, 0.8][(seed as usize / max_n) % 3];
        (n, p, seed)
    })
}

/// A uniformly chosen child at every join reached from the root: the leaves form
/// a maximal independent set.
pub fn random_maximal<R: rand::Rng>(t: &Cotree, rng: &mut R) -> Vec<usize> {
    let mut out = Vec::new();
    let mut stack = vec![t.root()];
    while let Some(x) = stack.pop() {
        match (t.kind(x), t.children(x)) {
            (cotar::NodeKind::Leaf(v), _) => out.push(v),
            (cotar::NodeKind::Union, Some([l, r])) => stack.extend([l, r]),
            (_, Some([l, r])) => stack.push(if rng.random_bool(0.5) { l } else { r }),
            _ => unreachable!(),
        }
    }
    out.sort_unstable();
    out
}
