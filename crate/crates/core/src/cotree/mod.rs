//! Binary cotrees: structure, annotation, stable-searches and generation.
//!
//! Nodes are stored in preorder, so the root is node `0` and the subtree of node `x`
//! occupies the id range `x..x + subtree_len`. Vertex labels on leaves are kept as
//! given, which lets a pruned cotree keep referring to the vertices of the graph it
//! was derived from.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::{Graph, IndependentSet};

mod random;
mod recognize;
pub(crate) mod stable;
mod text;

pub use random::random_cotree;
pub use recognize::build_cotree;
pub use stable::{leaves_of, stable_search_of, StableSearch};

pub type NodeId = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    Leaf(usize),
    Union,
    Join,
}

/// One cotree node together with its annotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CotreeNode {
    pub kind: NodeKind,
    pub children: Option<[NodeId; 2]>,
    pub parent: Option<NodeId>,
    /// Maximum independent set size of the induced cograph.
    pub alpha: usize,
    /// Child with the larger `alpha`; ties go to the smaller `subtree_min_vertex`.
    /// Only set on join nodes.
    pub good_child: Option<NodeId>,
    pub depth: usize,
    pub subtree_min_vertex: usize,
    /// Number of nodes in the subtree, this node included.
    pub subtree_len: usize,
    pub leaf_count: usize,
}

/// An annotated binary cotree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cotree {
    nodes: Vec<CotreeNode>,
    leaf_of_vertex: Vec<Option<NodeId>>,
}

impl Cotree {
    pub const ROOT: NodeId = 0;

    pub fn root(&self) -> NodeId {
        Self::ROOT
    }

    /// Number of nodes.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    /// Always false: a cotree has at least one leaf.
    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn node(&self, id: NodeId) -> &CotreeNode {
        &self.nodes[id]
    }

    pub fn nodes(&self) -> &[CotreeNode] {
        &self.nodes
    }

    pub fn kind(&self, id: NodeId) -> NodeKind {
        self.nodes[id].kind
    }

    pub fn is_join(&self, id: NodeId) -> bool {
        self.nodes[id].kind == NodeKind::Join
    }

    pub fn is_union(&self, id: NodeId) -> bool {
        self.nodes[id].kind == NodeKind::Union
    }

    pub fn children(&self, id: NodeId) -> Option<[NodeId; 2]> {
        self.nodes[id].children
    }

    pub fn parent(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].parent
    }

    pub fn alpha(&self, id: NodeId) -> usize {
        self.nodes[id].alpha
    }

    pub fn depth(&self, id: NodeId) -> usize {
        self.nodes[id].depth
    }

    pub fn good_child(&self, id: NodeId) -> Option<NodeId> {
        self.nodes[id].good_child
    }

    pub fn bad_child(&self, id: NodeId) -> Option<NodeId> {
        let good = self.nodes[id].good_child?;
        let [l, r] = self.nodes[id].children?;
        Some(if good == l { r } else { l })
    }

    /// The sibling of a non-root node.
    pub fn sibling(&self, id: NodeId) -> Option<NodeId> {
        let [l, r] = self.nodes[self.nodes[id].parent?].children?;
        Some(if l == id { r } else { l })
    }

    /// True iff `descendant` lies in the subtree of `ancestor` (inclusive).
    pub fn is_in_subtree(&self, ancestor: NodeId, descendant: NodeId) -> bool {
        (ancestor..ancestor + self.nodes[ancestor].subtree_len).contains(&descendant)
    }

    pub fn leaf_count(&self) -> usize {
        self.nodes[Self::ROOT].leaf_count
    }

    /// One more than the largest vertex label.
    pub fn universe(&self) -> usize {
        self.leaf_of_vertex.len()
    }

    pub fn leaf_of(&self, vertex: usize) -> Option<NodeId> {
        self.leaf_of_vertex.get(vertex).copied().flatten()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.leaf_of_vertex
            .iter()
            .enumerate()
            .filter_map(|(v, leaf)| leaf.map(|_| v))
    }

    pub fn join_nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        (0..self.len()).filter(|&x| self.is_join(x))
    }

    /// Vertices below `id`, in preorder.
    pub fn leaves_under(&self, id: NodeId) -> impl Iterator<Item = usize> + '_ {
        self.nodes[id..id + self.nodes[id].subtree_len]
            .iter()
            .filter_map(|node| match node.kind {
                NodeKind::Leaf(v) => Some(v),
                _ => None,
            })
    }

    /// The maximal independent set of the subtree at `id` that takes both children
    /// at unions and the good child at joins. Its size is `alpha(id)`.
    pub fn all_good_set(&self, id: NodeId) -> IndependentSet {
        let mut out = Vec::with_capacity(self.alpha(id));
        self.collect_all_good(id, &mut out);
        IndependentSet::from_unchecked(out)
    }

    pub(crate) fn collect_all_good(&self, id: NodeId, out: &mut Vec<usize>) {
        let mut stack = vec![id];
        while let Some(x) = stack.pop() {
            let node = &self.nodes[x];
            match node.kind {
                NodeKind::Leaf(v) => out.push(v),
                NodeKind::Union => stack.extend(node.children.unwrap()),
                NodeKind::Join => stack.push(node.good_child.unwrap()),
            }
        }
    }

    /// Expands the cotree into its cograph on `universe()` vertices: every join node
    /// contributes the complete bipartite graph between its children's leaves.
    /// Labels missing from the tree become isolated vertices; use [`Cotree::compact`]
    /// first on pruned trees.
    pub fn to_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for x in self.join_nodes() {
            let [l, r] = self.nodes[x].children.unwrap();
            let right: Vec<usize> = self.leaves_under(r).collect();
            for u in self.leaves_under(l) {
                edges.extend(right.iter().map(|&v| (u, v)));
            }
        }
        Graph::from_edges(self.universe(), edges).expect("cotree expansion is a simple graph")
    }

    /// Relabels the leaves densely (preserving label order). Returns the relabelled
    /// tree and the map from new labels to old ones.
    pub fn compact(&self) -> (Cotree, Vec<usize>) {
        let old: Vec<usize> = self.vertices().collect();
        let mut new_label = vec![usize::MAX; self.universe()];
        for (i, &v) in old.iter().enumerate() {
            new_label[v] = i;
        }
        let mut nodes = self.nodes.clone();
        for node in &mut nodes {
            if let NodeKind::Leaf(v) = node.kind {
                node.kind = NodeKind::Leaf(new_label[v]);
                node.subtree_min_vertex = new_label[v];
            }
        }
        let tree = CotreeBuilder::from_nodes(&nodes)
            .finish(Self::ROOT)
            .expect("relabelling keeps the tree valid");
        (tree, old)
    }

    /// Rebuilds the tree with `node` replaced by its child `keep`, dropping the other
    /// child's subtree. Ids are reassigned and the whole tree is re-annotated.
    pub(crate) fn contract_into_child(&self, node: NodeId, keep: NodeId) -> Cotree {
        debug_assert_eq!(self.parent(keep), Some(node));
        let mut b = CotreeBuilder::new();
        // postorder over the old tree, substituting `keep` for `node`
        let mut mapped = vec![usize::MAX; self.len()];
        let start = if node == Self::ROOT { keep } else { Self::ROOT };
        let mut stack = vec![(start, false)];
        while let Some((x, expanded)) = stack.pop() {
            let x = if x == node { keep } else { x };
            let n = &self.nodes[x];
            match (n.kind, expanded) {
                (NodeKind::Leaf(v), _) => mapped[x] = b.leaf(v),
                (_, false) => {
                    let [l, r] = n.children.unwrap();
                    stack.push((x, true));
                    stack.push((r, false));
                    stack.push((l, false));
                }
                (kind, true) => {
                    let [l, r] = n.children.unwrap();
                    let (l, r) = (resolve(l, node, keep), resolve(r, node, keep));
                    mapped[x] = b.internal(kind, mapped[l], mapped[r]);
                }
            }
        }
        let root = mapped[resolve(start, node, keep)];
        b.finish(root).expect("contraction keeps the tree valid")
    }

    /// Fills `alpha`, `good_child`, `leaf_count`, `subtree_min_vertex` bottom-up with a
    /// worklist of nodes whose children are all treated, then `depth` top-down.
    pub fn annotate(&mut self) {
        let mut treated_children = vec![0u8; self.len()];
        let mut ready: VecDeque<NodeId> = (0..self.len())
            .filter(|&x| matches!(self.nodes[x].kind, NodeKind::Leaf(_)))
            .collect();
        while let Some(x) = ready.pop_front() {
            match self.nodes[x].kind {
                NodeKind::Leaf(v) => {
                    let node = &mut self.nodes[x];
                    node.alpha = 1;
                    node.leaf_count = 1;
                    node.subtree_min_vertex = v;
                    node.good_child = None;
                }
                kind => {
                    let [l, r] = self.nodes[x].children.unwrap();
                    let (a, b) = (&self.nodes[l], &self.nodes[r]);
                    let alpha = if kind == NodeKind::Union {
                        a.alpha + b.alpha
                    } else {
                        a.alpha.max(b.alpha)
                    };
                    let left_is_good = a.alpha > b.alpha
                        || (a.alpha == b.alpha && a.subtree_min_vertex < b.subtree_min_vertex);
                    let good = (kind == NodeKind::Join).then_some(if left_is_good { l } else { r });
                    let leaf_count = a.leaf_count + b.leaf_count;
                    let min_vertex = a.subtree_min_vertex.min(b.subtree_min_vertex);
                    let node = &mut self.nodes[x];
                    node.alpha = alpha;
                    node.good_child = good;
                    node.leaf_count = leaf_count;
                    node.subtree_min_vertex = min_vertex;
                }
            }
            if let Some(p) = self.nodes[x].parent {
                treated_children[p] += 1;
                if treated_children[p] == 2 {
                    ready.push_back(p);
                }
            }
        }
        // preorder: parents precede children
        for x in 0..self.len() {
            self.nodes[x].depth = self.nodes[x].parent.map_or(0, |p| self.nodes[p].depth + 1);
        }
    }
}

fn resolve(x: NodeId, node: NodeId, keep: NodeId) -> NodeId {
    if x == node {
        keep
    } else {
        x
    }
}

/// Incremental constructor for cotrees. Node handles are only meaningful to the
/// builder; [`CotreeBuilder::finish`] renumbers everything in preorder.
#[derive(Debug, Clone, Default)]
pub struct CotreeBuilder {
    kinds: Vec<NodeKind>,
    children: Vec<Option<[usize; 2]>>,
}

impl CotreeBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    fn from_nodes(nodes: &[CotreeNode]) -> Self {
        CotreeBuilder {
            kinds: nodes.iter().map(|n| n.kind).collect(),
            children: nodes.iter().map(|n| n.children).collect(),
        }
    }

    pub fn leaf(&mut self, vertex: usize) -> usize {
        self.kinds.push(NodeKind::Leaf(vertex));
        self.children.push(None);
        self.kinds.len() - 1
    }

    pub fn union(&mut self, left: usize, right: usize) -> usize {
        self.internal(NodeKind::Union, left, right)
    }

    pub fn join(&mut self, left: usize, right: usize) -> usize {
        self.internal(NodeKind::Join, left, right)
    }

    pub(crate) fn internal(&mut self, kind: NodeKind, left: usize, right: usize) -> usize {
        debug_assert!(!matches!(kind, NodeKind::Leaf(_)));
        self.kinds.push(kind);
        self.children.push(Some([left, right]));
        self.kinds.len() - 1
    }

    /// Left-leaning chain `(op (op (op a b) c) d)` over `parts`.
    pub(crate) fn chain(&mut self, kind: NodeKind, parts: &[usize]) -> usize {
        let mut acc = parts[0];
        for &p in &parts[1..] {
            acc = self.internal(kind, acc, p);
        }
        acc
    }

    /// Renumbers the tree hanging from `root` in preorder and annotates it.
    /// Fails if a handle is used twice or a vertex label repeats.
    pub fn finish(self, root: usize) -> Result<Cotree> {
        let mut nodes: Vec<CotreeNode> = Vec::with_capacity(self.kinds.len());
        let mut seen = vec![false; self.kinds.len()];
        let mut leaf_of_vertex: Vec<Option<NodeId>> = Vec::new();
        let mut stack: Vec<(usize, Option<(NodeId, usize)>)> = vec![(root, None)];
        while let Some((h, parent)) = stack.pop() {
            if std::mem::replace(&mut seen[h], true) {
                return Err(Error::parse(0, format!("cotree node {h} has two parents")));
            }
            let id = nodes.len();
            let kind = self.kinds[h];
            if let NodeKind::Leaf(v) = kind {
                if leaf_of_vertex.len() <= v {
                    leaf_of_vertex.resize(v + 1, None);
                }
                if leaf_of_vertex[v].replace(id).is_some() {
                    return Err(Error::DuplicateVertex(v));
                }
            }
            nodes.push(CotreeNode {
                kind,
                children: self.children[h].map(|_| [usize::MAX; 2]),
                parent: parent.map(|(p, _)| p),
                alpha: 0,
                good_child: None,
                depth: 0,
                subtree_min_vertex: usize::MAX,
                subtree_len: 1,
                leaf_count: 0,
            });
            if let Some((p, slot)) = parent {
                nodes[p].children.as_mut().unwrap()[slot] = id;
            }
            if let Some([l, r]) = self.children[h] {
                stack.push((r, Some((id, 1))));
                stack.push((l, Some((id, 0))));
            }
        }
        for x in (0..nodes.len()).rev() {
            if let Some([l, r]) = nodes[x].children {
                nodes[x].subtree_len = 1 + nodes[l].subtree_len + nodes[r].subtree_len;
            }
        }
        let mut tree = Cotree {
            nodes,
            leaf_of_vertex,
        };
        tree.annotate();
        Ok(tree)
    }
}
