//! Compare the cotree algorithms with brute force on random small cographs.
//!
//! ```bash
//! cargo run --release --example oracle_crosscheck -- 300
//! ```

use cotar::oracle::{build_tar, set_of, DEFAULT_LIMIT};
use cotar::reachability::same_component_cotree;
use cotar::{connectivity::is_tar_connected_cotree, random_cotree};

fn main() {
    let instances: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(200);
    let (mut checks, mut mismatches) = (0usize, 0usize);
    for seed in 0..instances {
        let n = 1 + (seed % 12) as usize;
        let t = random_cotree(n, [0.2, 0.5, 0.8][seed as usize % 3], seed);
        let g = t.to_graph();
        for k in 0..=n + 1 {
            let tar = build_tar(&g, k, DEFAULT_LIMIT).unwrap();
            checks += 1;
            if is_tar_connected_cotree(&t, k).is_connected() != tar.is_connected() {
                mismatches += 1;
                println!("connectivity mismatch: {t} k={k}");
            }
            let states = tar.states();
            for i in (0..states.len()).step_by(7) {
                let j = (i * 31 + 3) % states.len();
                let (a, b) = (set_of(states[i]), set_of(states[j]));
                let ours = same_component_cotree(&t, k, &a, &b).unwrap().is_reachable();
                checks += 1;
                if ours != (tar.component_of_index(i) == tar.component_of_index(j)) {
                    mismatches += 1;
                    println!("reachability mismatch: {t} k={k} {a:?} {b:?}");
                }
            }
        }
    }
    println!("{checks} checks, {mismatches} mismatches");
}
