//! Decide connectivity of `TAR_k` for a few small cographs and print the
//! disconnection witness when there is one.
//!
//! ```bash
//! cargo run --example check_connectivity
//! ```

use cotar::{is_tar_connected, Connectivity, Graph};

fn main() -> cotar::Result<()> {
    let graphs = [
        ("K2", Graph::from_edges(2, [(0, 1)])?),
        ("P3", Graph::from_edges(3, [(0, 1), (1, 2)])?),
        ("2K2", Graph::from_edges(4, [(0, 1), (2, 3)])?),
        ("C4", Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?),
    ];
    for (name, g) in &graphs {
        for k in 0..=g.n() + 1 {
            let verdict = is_tar_connected(g, k)?;
            print!("{name:<4} k={k}  {}", verdict.verdict());
            if let Connectivity::Disconnected(w) = &verdict {
                print!("  good {}  stuck {}", w.good_set, w.stuck_set);
            }
            println!();
        }
    }
    Ok(())
}
