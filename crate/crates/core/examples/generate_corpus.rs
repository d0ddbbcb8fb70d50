//! Write a seeded corpus of random cographs in the edge-list format, one
//! `.graph` and one `.cotree` file per instance.
//!
//! ```bash
//! cargo run --example generate_corpus -- /tmp/corpus 20
//! ```

use std::fs;
use std::path::PathBuf;

use cotar::random_cotree;

fn main() -> std::io::Result<()> {
    let mut args = std::env::args().skip(1);
    let dir = PathBuf::from(args.next().unwrap_or_else(|| "corpus".into()));
    let count: u64 = args.next().and_then(|a| a.parse().ok()).unwrap_or(10);
    fs::create_dir_all(&dir)?;
    for seed in 0..count {
        let n = 4 + (seed as usize * 7) % 29;
        let join_prob = [0.2, 0.5, 0.8][seed as usize % 3];
        let t = random_cotree(n, join_prob, seed);
        let stem = format!("cograph_n{n}_p{}_s{seed}", (join_prob * 10.0) as u32);
        fs::write(dir.join(format!("{stem}.graph")), t.to_graph().to_file_string())?;
        fs::write(dir.join(format!("{stem}.cotree")), format!("{t}\n"))?;
        println!(
            "{stem}: {} edges, alpha {}",
            t.to_graph().edge_count(),
            t.alpha(t.root())
        );
    }
    Ok(())
}
