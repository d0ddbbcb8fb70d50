//! Recognize cographs: build the cotree, or report an induced P4.
//!
//! ```bash
//! cargo run --example build_cotree
//! ```

use cotar::{build_cotree, Error, Graph};

fn main() -> cotar::Result<()> {
    let inputs = [
        ("C4", Graph::from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])?),
        ("K3 + K1", Graph::from_edges(4, [(0, 1), (0, 2), (1, 2)])?),
        ("P4", Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)])?),
        (
            "bull",
            Graph::from_edges(5, [(0, 1), (1, 2), (0, 2), (1, 3), (2, 4)])?,
        ),
    ];
    for (name, g) in &inputs {
        match build_cotree(g) {
            Ok(t) => {
                println!("{name}: {t}");
                for x in 0..t.len() {
                    println!("    node {x:>2} {:?} alpha={}", t.kind(x), t.alpha(x));
                }
                assert_eq!(&t.to_graph(), g);
            }
            Err(Error::NotACograph { witness }) => println!("{name}: induced P4 {witness:?}"),
            Err(e) => return Err(e),
        }
    }
    Ok(())
}
