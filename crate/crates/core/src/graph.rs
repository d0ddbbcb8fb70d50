//! Undirected simple graphs, independent sets and token addition/removal sequences.
//!
//! Vertices are dense integers `0..n`. Every set produced by this crate is kept in
//! ascending vertex order.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Undirected simple graph with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            edge_count: 0,
        }
    }

    /// Builds a graph from an edge list. Self-loops, repeated edges and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::InvalidVertex { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph {
            adjacency,
            edge_count,
        })
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && v < self.n() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n() {
            Ok(())
        } else {
            Err(Error::InvalidVertex {
                vertex: v,
                n: self.n(),
            })
        }
    }

    /// Subgraph induced by `vertices`, relabelled densely in ascending order of the
    /// original ids. The second component maps new ids back to the original ones.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let mut kept: Vec<usize> = vertices.to_vec();
        kept.sort_unstable();
        kept.dedup();
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in kept.iter().enumerate() {
            self.check_vertex(v)?;
            new_id[v] = i;
        }
        let mut sub = Graph::new(kept.len());
        for (i, &v) in kept.iter().enumerate() {
            sub.adjacency[i] = self.adjacency[v]
                .iter()
                .filter_map(|&w| (new_id[w] != usize::MAX).then_some(new_id[w]))
                .collect();
            sub.edge_count += sub.adjacency[i].iter().filter(|&&w| w > i).count();
        }
        Ok((sub, kept))
    }

    /// Applies the vertex permutation `perm` (vertex `v` becomes `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        assert_eq!(perm.len(), self.n(), "permutation length mismatch");
        Graph::from_edges(self.n(), self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    /// Serializes to the edge-list file format: `n m` then one `u v` line per edge.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    /// Parses the edge-list file format. Lines starting with `#` and blank lines are skipped.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(0, "missing `n m` header"))?;
        let [n, m] = parse_pair(header_line, header)?;

        let mut edges = Vec::with_capacity(m);
        for (line, content) in lines {
            if edges.len() == m {
                return Err(Error::parse(line, format!("more than {m} edge lines")));
            }
            let [u, v] = parse_pair(line, content)?;
            if u >= n || v >= n {
                return Err(Error::parse(line, format!("endpoint out of range 0..{n}")));
            }
            edges.push((u, v));
        }
        if edges.len() != m {
            return Err(Error::parse(
                0,
                format!("expected {m} edge lines, found {}", edges.len()),
            ));
        }
        Graph::from_edges(n, edges)
    }
}

fn parse_pair(line: usize, content: &str) -> Result<[usize; 2]> {
    let fields: Vec<&str> = content.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(Error::parse(line, "expected exactly two integers"));
    }
    let mut out = [0; 2];
    for (slot, field) in out.iter_mut().zip(&fields) {
        *slot = field
            .parse()
            .map_err(|_| Error::parse(line, format!("`{field}` is not a non-negative integer")))?;
    }
    Ok(out)
}

/// Parses a set file: one line of whitespace-separated vertex ids, possibly empty.
/// Duplicates are rejected; the result is sorted.
pub fn parse_vertex_set(text: &str) -> Result<Vec<usize>> {
    let mut set = Vec::new();
    for field in text.split_whitespace() {
        let v: usize = field
            .parse()
            .map_err(|_| Error::parse(1, format!("`{field}` is not a vertex id")))?;
        set.push(v);
    }
    set.sort_unstable();
    if let Some(w) = set.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateVertex(w[0]));
    }
    Ok(set)
}

/// True iff `set` induces no edge of `g`.
pub fn is_independent(g: &Graph, set: &[usize]) -> Result<bool> {
    Ok(first_conflict(g, set)?.is_none())
}

fn first_conflict(g: &Graph, set: &[usize]) -> Result<Option<(usize, usize)>> {
    let mut member = vec![false; g.n()];
    for &v in set {
        g.check_vertex(v)?;
        member[v] = true;
    }
    for &u in set {
        if let Some(&v) = g.neighbors(u).iter().find(|&&v| member[v]) {
            return Ok(Some((u.min(v), u.max(v))));
        }
    }
    Ok(None)
}

/// True iff `set` is independent and no vertex outside it can be added.
pub fn is_maximal_independent(g: &Graph, set: &[usize]) -> Result<bool> {
    if let Some((u, v)) = first_conflict(g, set)? {
        return Err(Error::NotIndependent(u, v));
    }
    let mut dominated = vec![false; g.n()];
    for &u in set {
        dominated[u] = true;
        for &v in g.neighbors(u) {
            dominated[v] = true;
        }
    }
    Ok(dominated.into_iter().all(|d| d))
}

/// A set of pairwise non-adjacent vertices, stored in ascending order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct IndependentSet(Vec<usize>);

impl IndependentSet {
    /// Validates `vertices` against `g`.
    pub fn new(g: &Graph, vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut vs: Vec<usize> = vertices.into_iter().collect();
        vs.sort_unstable();
        if let Some(w) = vs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        if let Some((u, v)) = first_conflict(g, &vs)? {
            return Err(Error::NotIndependent(u, v));
        }
        Ok(IndependentSet(vs))
    }

    /// Wraps vertices already known to be independent; sorts them.
    pub(crate) fn from_unchecked(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        IndependentSet(vertices)
    }

    pub fn empty() -> Self {
        IndependentSet(Vec::new())
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }
}

impl fmt::Display for IndependentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    Add,
    Remove,
}

/// One token addition or removal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ReconfigStep {
    pub kind: StepKind,
    pub vertex: usize,
}

impl ReconfigStep {
    pub fn add(vertex: usize) -> Self {
        ReconfigStep {
            kind: StepKind::Add,
            vertex,
        }
    }

    pub fn remove(vertex: usize) -> Self {
        ReconfigStep {
            kind: StepKind::Remove,
            vertex,
        }
    }

    /// The step undoing this one.
    pub fn inverse(self) -> Self {
        match self.kind {
            StepKind::Add => ReconfigStep::remove(self.vertex),
            StepKind::Remove => ReconfigStep::add(self.vertex),
        }
    }
}

impl fmt::Display for ReconfigStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Add => write!(f, "+{}", self.vertex),
            StepKind::Remove => write!(f, "-{}", self.vertex),
        }
    }
}

impl FromStr for ReconfigStep {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.as_bytes().first() {
            Some(b'+') => (StepKind::Add, &s[1..]),
            Some(b'-') => (StepKind::Remove, &s[1..]),
            _ => return Err(Error::parse(1, format!("`{s}` is not a step"))),
        };
        let vertex = rest
            .parse()
            .map_err(|_| Error::parse(1, format!("`{s}` is not a step")))?;
        Ok(ReconfigStep { kind, vertex })
    }
}

/// An ordered walk in the token addition/removal graph with threshold `threshold`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReconfigSequence {
    pub start: IndependentSet,
    pub steps: Vec<ReconfigStep>,
    pub threshold: usize,
}

impl ReconfigSequence {
    pub fn empty(start: IndependentSet, threshold: usize) -> Self {
        ReconfigSequence {
            start,
            steps: Vec::new(),
            threshold,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// The set reached after all steps, without any validity checks.
    pub fn end(&self) -> IndependentSet {
        let mut set: std::collections::BTreeSet<usize> = self.start.vertices().iter().copied().collect();
        for step in &self.steps {
            match step.kind {
                StepKind::Add => set.insert(step.vertex),
                StepKind::Remove => set.remove(&step.vertex),
            };
        }
        IndependentSet::from_unchecked(set.into_iter().collect())
    }
}

/// Why [`validate_sequence`] rejected a sequence. `step` is the index of the first
/// offending step, `None` when the problem is with the start or final state.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceViolation {
    pub step: Option<usize>,
    pub reason: ViolationKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ViolationKind {
    StartNotIndependent,
    StartBelowThreshold,
    VertexOutOfRange,
    AddPresent,
    RemoveAbsent,
    NotIndependent,
    BelowThreshold,
    WrongTarget,
}

impl fmt::Display for SequenceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.step {
            Some(i) => write!(f, "step {i}: {:?}", self.reason),
            None => write!(f, "{:?}", self.reason),
        }
    }
}

/// Replays `seq` on `g` and checks that every state is an independent set of size
/// at least `seq.threshold` and that the walk ends at `target`.
pub fn validate_sequence(
    g: &Graph,
    seq: &ReconfigSequence,
    target: &IndependentSet,
) -> Result<(), SequenceViolation> {
    let fail = |step, reason| Err(SequenceViolation { step, reason });
    let n = g.n();
    let mut member = vec![false; n];
    // number of members adjacent to each vertex
    let mut blocked = vec![0usize; n];
    for &v in seq.start.vertices() {
        if v >= n {
            return fail(None, ViolationKind::StartNotIndependent);
        }
        member[v] = true;
    }
    for &v in seq.start.vertices() {
        for &w in g.neighbors(v) {
            if member[w] {
                return fail(None, ViolationKind::StartNotIndependent);
            }
            blocked[w] += 1;
        }
    }
    let mut size = seq.start.len();
    if size < seq.threshold {
        return fail(None, ViolationKind::StartBelowThreshold);
    }

    for (i, step) in seq.steps.iter().enumerate() {
        let v = step.vertex;
        if v >= n {
            return fail(Some(i), ViolationKind::VertexOutOfRange);
        }
        match step.kind {
            StepKind::Add => {
                if member[v] {
                    return fail(Some(i), ViolationKind::AddPresent);
                }
                if blocked[v] > 0 {
                    return fail(Some(i), ViolationKind::NotIndependent);
                }
                member[v] = true;
                size += 1;
                for &w in g.neighbors(v) {
                    blocked[w] += 1;
                }
            }
            StepKind::Remove => {
                if !member[v] {
                    return fail(Some(i), ViolationKind::RemoveAbsent);
                }
                if size - 1 < seq.threshold {
                    return fail(Some(i), ViolationKind::BelowThreshold);
                }
                member[v] = false;
                size -= 1;
                for &w in g.neighbors(v) {
                    blocked[w] -= 1;
                }
            }
        }
    }

    let reached = member.iter().filter(|&&m| m).count() == target.len()
        && target.vertices().iter().all(|&v| v < n && member[v]);
    if reached {
        Ok(())
    } else {
        fail(None, ViolationKind::WrongTarget)
    }
}
