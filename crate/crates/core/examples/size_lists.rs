//! Per-node sizes of maximal independent sets, and the remainder list that the
//! connectivity test consults at each join node.
//!
//! ```bash
//! cargo run --example size_lists
//! ```

use cotar::sizes::SizeTable;
use cotar::{compute_size_lists, Cotree};

fn main() {
    let t: Cotree = "(U (J (U 0 1) 2) (J 3 (U 4 (U 5 6))))".parse().unwrap();
    let table = compute_size_lists(&t);
    println!("{t}");
    for (x, list) in table.iter() {
        println!("  node {x:>2}  alpha={}  sizes {{{list}}}", t.alpha(x));
    }
    for join in t.join_nodes() {
        let bad = t.bad_child(join).unwrap();
        let rest = table.remainder(&t, join).unwrap();
        println!(
            "  join {join}: bad side alpha {}, remainder sizes {{{rest}}}, parts {:?}",
            t.alpha(bad),
            SizeTable::remainder_parts(&t, join).unwrap()
        );
    }
}
