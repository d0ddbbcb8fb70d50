//! Sets of achievable maximal-independent-set sizes per cotree node.
//!
//! A leaf admits only size 1. A join node admits the sizes of either child, a union
//! node every sum of one size from each child. Lists are kept sorted by marking a
//! presence bit array and reading it back, so the whole table costs O(n^2).

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::cotree::{Cotree, NodeId, NodeKind};
use crate::error::{Error, Result};

/// Set of sizes, stored both as presence bits and as an ascending list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeList {
    present: FixedBitSet,
    sizes: Vec<usize>,
}

impl SizeList {
    /// `{0}`: the empty graph has exactly one maximal independent set, the empty one.
    pub fn empty_graph() -> Self {
        Self::from_sizes(0, [0])
    }

    pub fn leaf() -> Self {
        Self::from_sizes(1, [1])
    }

    /// Bucket-sorts `sizes`, all at most `max`.
    pub fn from_sizes(max: usize, sizes: impl IntoIterator<Item = usize>) -> Self {
        let mut present = FixedBitSet::with_capacity(max + 1);
        present.extend(sizes);
        let sizes = present.ones().collect();
        SizeList { present, sizes }
    }

    /// Sizes for the disjoint union of two graphs: all pairwise sums.
    pub fn sum(&self, other: &SizeList) -> SizeList {
        let max = self.max() + other.max();
        let mut present = FixedBitSet::with_capacity(max + 1);
        for &a in &self.sizes {
            for &b in &other.sizes {
                present.insert(a + b);
            }
        }
        let sizes = present.ones().collect();
        SizeList { present, sizes }
    }

    /// Sizes for the join of two graphs: a maximal set lives on one side only.
    pub fn merge(&self, other: &SizeList) -> SizeList {
        let max = self.max().max(other.max());
        Self::from_sizes(max, self.sizes.iter().chain(&other.sizes).copied())
    }

    pub fn contains(&self, size: usize) -> bool {
        self.present.contains(size)
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.sizes
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.sizes.iter().copied()
    }

    pub fn min(&self) -> usize {
        self.sizes[0]
    }

    pub fn max(&self) -> usize {
        *self.sizes.last().expect("size lists are never empty")
    }

    pub fn len(&self) -> usize {
        self.sizes.len()
    }

    /// Always false: every graph has at least one maximal independent set.
    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    /// Smallest member of `lo..=hi`, scanning the presence bits.
    pub fn first_in(&self, lo: usize, hi: usize) -> Option<usize> {
        (lo..=hi.min(self.max())).find(|&s| self.contains(s))
    }
}

impl fmt::Display for SizeList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// Size lists for every node of one cotree, indexed by node id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SizeTable {
    lists: Vec<SizeList>,
}

/// Computes the size list of every node, children before parents.
pub fn compute_size_lists(t: &Cotree) -> SizeTable {
    let mut lists: Vec<Option<SizeList>> = vec![None; t.len()];
    // preorder ids: children always have larger ids than their parent
    for x in (0..t.len()).rev() {
        let list = match (t.kind(x), t.children(x)) {
            (NodeKind::Leaf(_), _) => SizeList::leaf(),
            (kind, Some([l, r])) => {
                let (a, b) = (lists[l].as_ref().unwrap(), lists[r].as_ref().unwrap());
                if kind == NodeKind::Union {
                    a.sum(b)
                } else {
                    a.merge(b)
                }
            }
            (_, None) => unreachable!("internal nodes have two children"),
        };
        lists[x] = Some(list);
    }
    SizeTable {
        lists: lists.into_iter().map(Option::unwrap).collect(),
    }
}

impl SizeTable {
    pub fn get(&self, node: NodeId) -> &SizeList {
        &self.lists[node]
    }

    pub fn iter(&self) -> impl Iterator<Item = (NodeId, &SizeList)> {
        self.lists.iter().enumerate()
    }

    /// The subtrees whose disjoint union is `G - (B + N(B))` for the bad side `B` of
    /// `join`: siblings met at union ancestors on the way to the root. A join
    /// ancestor's other side is adjacent to `B` and contributes nothing.
    pub fn remainder_parts(t: &Cotree, join: NodeId) -> Result<Vec<NodeId>> {
        if !t.is_join(join) {
            return Err(Error::NotAJoinNode(join));
        }
        let mut parts = Vec::new();
        let mut x = join;
        while let Some(p) = t.parent(x) {
            if t.is_union(p) {
                parts.push(t.sibling(x).unwrap());
            }
            x = p;
        }
        Ok(parts)
    }

    /// Size list of the cograph left after deleting the bad side of `join` and its
    /// neighborhood. `{0}` when nothing is left.
    pub fn remainder(&self, t: &Cotree, join: NodeId) -> Result<SizeList> {
        let parts = Self::remainder_parts(t, join)?;
        Ok(parts
            .iter()
            .fold(SizeList::empty_graph(), |acc, &part| acc.sum(self.get(part))))
    }

    /// A maximal independent set of the subtree at `node` with exactly `size`
    /// vertices. Joins prefer the good child; unions take the smallest feasible
    /// size on the left.
    pub fn realize(&self, t: &Cotree, node: NodeId, size: usize) -> Result<Vec<usize>> {
        if !self.get(node).contains(size) {
            return Err(Error::SizeNotRealizable(size));
        }
        let mut out = Vec::with_capacity(size);
        let mut stack = vec![(node, size)];
        while let Some((x, want)) = stack.pop() {
            match (t.kind(x), t.children(x)) {
                (NodeKind::Leaf(v), _) => out.push(v),
                (NodeKind::Join, _) => {
                    let good = t.good_child(x).unwrap();
                    let bad = t.bad_child(x).unwrap();
                    let side = if self.get(good).contains(want) { good } else { bad };
                    stack.push((side, want));
                }
                (_, Some([l, r])) => {
                    let left = self
                        .get(l)
                        .iter()
                        .find(|&a| a <= want && self.get(r).contains(want - a))
                        .expect("union sizes decompose");
                    stack.push((l, left));
                    stack.push((r, want - left));
                }
                (_, None) => unreachable!(),
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// A maximal independent set of size `size` of the remainder of `join`
    /// (see [`SizeTable::remainder`]).
    pub fn realize_remainder(&self, t: &Cotree, join: NodeId, size: usize) -> Result<Vec<usize>> {
        let parts = Self::remainder_parts(t, join)?;
        // prefix[i]: sizes achievable by parts[..i]
        let mut prefix = vec![SizeList::empty_graph()];
        for &part in &parts {
            let next = prefix.last().unwrap().sum(self.get(part));
            prefix.push(next);
        }
        if !prefix.last().unwrap().contains(size) {
            return Err(Error::SizeNotRealizable(size));
        }
        let mut out = Vec::with_capacity(size);
        let mut want = size;
        for (i, &part) in parts.iter().enumerate().rev() {
            let before = &prefix[i];
            let here = self
                .get(part)
                .iter()
                .filter(|&s| s <= want && before.contains(want - s))
                .max()
                .expect("prefix sizes decompose");
            out.extend(self.realize(t, part, here)?);
            want -= here;
        }
        debug_assert_eq!(want, 0);
        out.sort_unstable();
        Ok(out)
    }
}

/// Convenience wrapper computing the table on the fly.
pub fn remainder_size_list(t: &Cotree, join: NodeId) -> Result<SizeList> {
    compute_size_lists(t).remainder(t, join)
}
