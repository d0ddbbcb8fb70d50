use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Cotree, CotreeBuilder, NodeKind};

/// Random cotree on `n` leaves labelled `0..n`.
///
/// The shape is a uniformly random binary tree (Rémy's insertion growth, linear
/// time); each internal node is independently a join with probability `join_prob`.
/// The result depends only on `(n, join_prob, seed)`.
pub fn random_cotree(n: usize, join_prob: f64, seed: u64) -> Cotree {
    assert!(n >= 1, "a cotree needs at least one leaf");
    assert!((0.0..=1.0).contains(&join_prob), "join_prob must lie in [0, 1]");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    // grow a shape: node i < n is leaf i, later nodes are internal
    let total = 2 * n - 1;
    let mut parent = vec![usize::MAX; total];
    let mut children = vec![[usize::MAX; 2]; total];
    let mut present = vec![0usize];
    let mut root = 0;
    for leaf in 1..n {
        let target = present[rng.random_range(0..present.len())];
        let internal = n + leaf - 1;
        let pair = if rng.random_bool(0.5) {
            [target, leaf]
        } else {
            [leaf, target]
        };
        let above = parent[target];
        if above == usize::MAX {
            root = internal;
        } else {
            let slot = children[above].iter().position(|&c| c == target).unwrap();
            children[above][slot] = internal;
        }
        parent[internal] = above;
        children[internal] = pair;
        parent[target] = internal;
        parent[leaf] = internal;
        present.push(leaf);
        present.push(internal);
    }

    let mut b = CotreeBuilder::new();
    let mut handle: Vec<usize> = (0..n).map(|v| b.leaf(v)).collect();
    handle.resize(total, usize::MAX);
    // postorder: an internal node may sit above internal nodes created after it
    let mut stack = vec![(root, false)];
    while let Some((x, expanded)) = stack.pop() {
        if x < n {
            continue;
        }
        if expanded {
            let kind = if rng.random_bool(join_prob) {
                NodeKind::Join
            } else {
                NodeKind::Union
            };
            let [l, r] = children[x];
            handle[x] = b.internal(kind, handle[l], handle[r]);
        } else {
            stack.push((x, true));
            stack.extend(children[x].iter().map(|&c| (c, false)));
        }
    }
    b.finish(handle[root]).expect("generated shape is a tree")
}
