//! Find a token addition/removal walk between two independent sets of a cograph,
//! replay it and check every intermediate set.
//!
//! ```bash
//! cargo run --example reconfigure
//! ```

use cotar::{same_component, validate_sequence, Graph, IndependentSet, Reachability};

fn main() -> cotar::Result<()> {
    // (0 | 1 | 2) joined with (3 | 4): the complete bipartite graph K_{3,2}
    let g = Graph::from_edges(5, [(0, 3), (0, 4), (1, 3), (1, 4), (2, 3), (2, 4)])?;
    let from = IndependentSet::new(&g, [3, 4])?;
    let to = IndependentSet::new(&g, [0, 1])?;

    for k in 0..=2 {
        match same_component(&g, k, &from, &to)? {
            Reachability::Reachable(seq) => {
                let steps: Vec<String> = seq.steps.iter().map(ToString::to_string).collect();
                println!("k={k}: {from} -> {to} via {}", steps.join(" "));
                validate_sequence(&g, &seq, &to).expect("walk stays independent and above k");
                let mut current = seq.start.clone();
                for step in &seq.steps {
                    let mut next: Vec<usize> = current.vertices().to_vec();
                    match step.kind {
                        cotar::StepKind::Add => next.push(step.vertex),
                        cotar::StepKind::Remove => next.retain(|&v| v != step.vertex),
                    }
                    current = IndependentSet::new(&g, next)?;
                    println!("    {:>3}  {current}", step.to_string());
                }
            }
            Reachability::Unreachable => println!("k={k}: {from} and {to} are not connected"),
        }
    }
    Ok(())
}
