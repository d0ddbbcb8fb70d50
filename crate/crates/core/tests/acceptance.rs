//! Acceptance suite: one pass/fail line per criterion. Run with
//! `cargo test --test acceptance -- --nocapture` or plainly as part of the workspace.

mod common;

use std::time::{Duration, Instant};

use rand::seq::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use cotar::connectivity::{decide_observed, is_tar_connected_cotree};
use cotar::cotree::{leaves_of, stable_search_of};
use cotar::reachability::{same_component_cotree, same_component_decision};
use cotar::{
    build_cotree, compute_size_lists, random_cotree, validate_sequence, Error, Graph, IndependentSet,
    Reachability,
};

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn connectivity_equivalence() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut mismatches, mut instances) = (0, 0, 0);
    for (n, p, seed) in corpus(600, 14) {
        let t = random_cotree(n, p, seed);
        let g = t.to_graph();
        instances += 1;
        for k in 0..=n + 1 {
            let expected = component_count(&tar_components(&g, k)) <= 1;
            checked += 1;
            if is_tar_connected_cotree(&t, k).is_connected() != expected {
                mismatches += 1;
                eprintln!("  connectivity mismatch: {t} k={k} expected {expected}");
            }
        }
    }
    let elapsed = start.elapsed();
    outcome(
        mismatches == 0 && elapsed < Duration::from_secs(300),
        format!("{instances} cotrees, {checked} (instance, k) pairs, {mismatches} mismatches, {elapsed:.1?}"),
    )
}

fn reachability_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut pairs, mut mismatches, mut bad_sequences) = (0, 0, 0);
    for (n, p, seed) in corpus(600, 12) {
        let t = random_cotree(n, p, seed);
        let g = t.to_graph();
        for k in 0..=t.alpha(t.root()) {
            let labels = tar_components(&g, k);
            let states: Vec<u32> = labels.keys().copied().collect();
            for _ in 0..10 {
                let (a, b) = (
                    *states.choose(&mut rng).unwrap(),
                    *states.choose(&mut rng).unwrap(),
                );
                let expected = labels[&a] == labels[&b];
                let (from, to) = (members(a), members(b));
                let verdict = same_component_cotree(&t, k, &from, &to).unwrap();
                pairs += 1;
                if verdict.is_reachable() != expected {
                    mismatches += 1;
                    eprintln!("  reachability mismatch: {t} k={k} {from:?} {to:?}");
                }
                if let Reachability::Reachable(seq) = verdict {
                    let target = IndependentSet::new(&g, to.clone()).unwrap();
                    if seq.start.vertices() != from.as_slice()
                        || validate_sequence(&g, &seq, &target).is_err()
                    {
                        bad_sequences += 1;
                        eprintln!("  invalid sequence: {t} k={k} {from:?} {to:?}");
                    }
                }
            }
        }
    }
    outcome(
        mismatches == 0 && bad_sequences == 0,
        format!("{pairs} pairs, {mismatches} mismatches, {bad_sequences} invalid sequences"),
    )
}

fn dp_correctness() -> Outcome {
    let (mut nodes, mut failures) = (0, 0);
    for (n, p, seed) in corpus(600, 14) {
        let t = random_cotree(n, p, seed);
        let g = t.to_graph();
        let table = compute_size_lists(&t);
        for x in 0..t.len() {
            let below = mask(&t.leaves_under(x).collect::<Vec<_>>());
            let mut sizes: Vec<usize> = maximal_sets_within(&g, below)
                .into_iter()
                .map(|s| s.count_ones() as usize)
                .collect();
            sizes.sort_unstable();
            sizes.dedup();
            nodes += 1;
            if t.alpha(x) != *sizes.last().unwrap() || table.get(x).as_slice() != sizes.as_slice() {
                failures += 1;
                eprintln!("  DP mismatch: {t} node {x}");
            }
        }
    }
    outcome(failures == 0, format!("{nodes} nodes, {failures} mismatches"))
}

fn bijection() -> Outcome {
    let (mut instances, mut failures) = (0, 0);
    for (n, p, seed) in corpus(600, 10) {
        let t = random_cotree(n, p, seed);
        let g = t.to_graph();
        let mut searched = stable_search_leaf_sets(&t);
        let count = searched.len();
        searched.sort_unstable();
        searched.dedup();
        let mut brute = maximal_sets(&g);
        brute.sort_unstable();
        let round_trip = brute.iter().all(|&m| {
            let set = members(m);
            stable_search_of(&t, &set)
                .map(|s| s.is_valid(&t) && leaves_of(&t, &s).vertices() == set.as_slice())
                .unwrap_or(false)
        });
        instances += 1;
        if count != brute.len() || searched != brute || !round_trip {
            failures += 1;
            eprintln!("  bijection failure: {t}");
        }
    }
    outcome(failures == 0, format!("{instances} cotrees, {failures} failures"))
}

fn pruning_equivalence() -> Outcome {
    let (mut prunes, mut failures) = (0, 0);
    for (n, p, seed) in corpus(600, 12) {
        let t = random_cotree(n, p, seed);
        for k in 1..=t.alpha(t.root()) {
            decide_observed(&t, k, |before, _, after| {
                let connected =
                    |c: &cotar::Cotree| component_count(&tar_components(&c.compact().0.to_graph(), k)) <= 1;
                prunes += 1;
                if connected(before) != connected(after) {
                    failures += 1;
                    eprintln!("  prune changed connectivity: {before} -> {after} k={k}");
                }
            });
        }
    }
    outcome(
        failures == 0 && prunes > 0,
        format!("{prunes} prune steps, {failures} disagreements"),
    )
}

fn recognition() -> Outcome {
    let (mut graphs, mut failures) = (0u64, 0u64);
    for n in 1..=7usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        for bits in 0u64..1 << pairs.len() {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| bits >> i & 1 == 1)
                .map(|(_, &e)| e);
            let g = Graph::from_edges(n, edges).unwrap();
            graphs += 1;
            let ok = match build_cotree(&g) {
                Ok(t) => !has_induced_p4(&g) && t.to_graph() == g,
                Err(Error::NotACograph { witness }) => is_p4_path(&g, witness),
                Err(_) => false,
            };
            if !ok {
                failures += 1;
                if failures < 5 {
                    eprintln!("  recognition failure: {}", g.to_file_string().replace('\n', " "));
                }
            }
        }
    }
    outcome(
        failures == 0,
        format!("{graphs} labelled graphs with n <= 7, {failures} failures"),
    )
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Median time over several cotrees of the connectivity verdict, summed over a
/// spread of thresholds.
fn time_connectivity(n: usize) -> Duration {
    let samples = (0..5)
        .map(|seed| {
            let t = random_cotree(n, 0.5, 1000 + seed);
            let a = t.alpha(t.root());
            let start = Instant::now();
            for k in [1, a / 4, a / 2, 3 * a / 4, a] {
                std::hint::black_box(is_tar_connected_cotree(&t, k));
            }
            start.elapsed()
        })
        .collect();
    median(samples)
}

/// Best of seven decision runs per cotree, summed over a dozen cotrees.
fn time_reachability(n: usize) -> Duration {
    let mut rng = ChaCha8Rng::seed_from_u64(n as u64);
    (0..12)
        .map(|seed| {
            let t = random_cotree(n, 0.5, 2000 + seed);
            let (a, b) = (random_maximal(&t, &mut rng), random_maximal(&t, &mut rng));
            let k = a.len().min(b.len()) / 2;
            (0..7)
                .map(|_| {
                    let start = Instant::now();
                    std::hint::black_box(same_component_decision(&t, k, &a, &b).unwrap());
                    start.elapsed()
                })
                .min()
                .unwrap()
        })
        .sum()
}

fn performance() -> Outcome {
    let t = random_cotree(500, 0.5, 99);
    let a = t.alpha(t.root());
    let start = Instant::now();
    for k in 0..=a + 1 {
        std::hint::black_box(is_tar_connected_cotree(&t, k));
    }
    let per_verdict = start.elapsed() / (a as u32 + 2);
    let slowest_connectivity = {
        let mut worst = Duration::ZERO;
        for k in 0..=a + 1 {
            let s = Instant::now();
            std::hint::black_box(is_tar_connected_cotree(&t, k));
            worst = worst.max(s.elapsed());
        }
        worst
    };

    let big = random_cotree(100_000, 0.5, 99);
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let (x, y) = (random_maximal(&big, &mut rng), random_maximal(&big, &mut rng));
    let k = x.len().min(y.len()) / 2;
    let s = Instant::now();
    std::hint::black_box(same_component_decision(&big, k, &x, &y).unwrap());
    let reach = s.elapsed();

    let (c1, c2) = (time_connectivity(250), time_connectivity(500));
    let (r1, r2) = (time_reachability(100_000), time_reachability(200_000));
    let conn_ratio = c2.as_secs_f64() / c1.as_secs_f64();
    let reach_ratio = r2.as_secs_f64() / r1.as_secs_f64();
    let passed = slowest_connectivity < Duration::from_secs(5)
        && reach < Duration::from_secs(2)
        && conn_ratio <= 12.0
        && reach_ratio <= 3.0;
    outcome(
        passed,
        format!(
            "connectivity n=500: slowest {slowest_connectivity:.2?} (mean {per_verdict:.2?}); \
             reachability n=100000: {reach:.2?}; doubling ratios: connectivity {conn_ratio:.2}, reachability {reach_ratio:.2}"
        ),
    )
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("connectivity matches brute force", connectivity_equivalence),
        ("reachability matches brute force", reachability_equivalence),
        ("alpha and size lists match brute force", dp_correctness),
        ("stable-searches biject with maximal independent sets", bijection),
        ("every prune preserves connectivity", pruning_equivalence),
        ("recognition accepts exactly the P4-free graphs", recognition),
        ("performance smoke", performance),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let result = check();
        println!(
            "[{}] {name}: {}",
            if result.passed { "PASS" } else { "FAIL" },
            result.detail
        );
        failed += usize::from(!result.passed);
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
