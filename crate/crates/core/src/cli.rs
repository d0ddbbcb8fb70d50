//! Command-line front end.
//!
//! The first line of output is always the verdict (`CONNECTED`,
//! `TRIVIALLY_CONNECTED`, `DISCONNECTED`, `REACHABLE`, `UNREACHABLE` or
//! `NOT_A_COGRAPH a b c d`); detail blocks follow. Exit codes: 0 for a positive
//! verdict, 1 for a negative one, 2 for usage, parse and structural errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::connectivity::{is_tar_connected_cotree, Connectivity};
use crate::cotree::{build_cotree, random_cotree, Cotree};
use crate::error::Error;
use crate::graph::{parse_vertex_set, Graph, IndependentSet};
use crate::oracle::{self, DEFAULT_LIMIT};
use crate::reachability::{same_component, Reachability};
use crate::sizes::compute_size_lists;

pub const EXIT_POSITIVE: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_ERROR: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "cotar",
    version,
    about = "Token addition/removal reconfiguration on cographs"
)]
pub struct Invocation {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether TAR_k(G) is connected.
    Check {
        graph: PathBuf,
        #[arg(short, value_name = "K")]
        k: usize,
        /// Print two sets in different components and the prune trace.
        #[arg(long)]
        witness: bool,
        /// Print the maximal-independent-set size list of every cotree node.
        #[arg(long)]
        dump_sizes: bool,
    },
    /// Decide whether two independent sets are in the same component of TAR_k(G).
    Reach {
        graph: PathBuf,
        #[arg(short, value_name = "K")]
        k: usize,
        #[arg(long, value_name = "SET_FILE")]
        from: PathBuf,
        #[arg(long, value_name = "SET_FILE")]
        to: PathBuf,
        /// Print the reconfiguration sequence, one `+v` / `-v` step per line.
        #[arg(long)]
        sequence: bool,
    },
    /// Write a random cograph (`<out>.graph`) and its cotree (`<out>.cotree`).
    Gen {
        #[arg(short, long)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        join_prob: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_name = "PREFIX")]
        out: PathBuf,
    },
    /// Print the cotree of a cograph.
    Cotree {
        graph: PathBuf,
        #[arg(long)]
        dump_sizes: bool,
    },
    /// Brute-force reference answers on small graphs.
    Oracle {
        #[command(subcommand)]
        command: OracleCommand,
    },
}

#[derive(Debug, Subcommand)]
pub enum OracleCommand {
    Check {
        graph: PathBuf,
        #[arg(short, value_name = "K")]
        k: usize,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
    Reach {
        graph: PathBuf,
        #[arg(short, value_name = "K")]
        k: usize,
        #[arg(long, value_name = "SET_FILE")]
        from: PathBuf,
        #[arg(long, value_name = "SET_FILE")]
        to: PathBuf,
        #[arg(long, default_value_t = DEFAULT_LIMIT)]
        limit: usize,
    },
}

#[derive(Debug)]
enum Failure {
    Lib(Error),
    Io(PathBuf, std::io::Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type Outcome = Result<i32, Failure>;

/// Parses `args` (program name first) and executes the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let invocation = match Invocation::try_parse_from(args) {
        Ok(inv) => inv,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_POSITIVE };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(text.as_bytes())
            } else {
                out.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(invocation.command, out, err) {
        Ok(code) => code,
        Err(Failure::Lib(Error::NotACograph {
            witness: [a, b, c, d],
        })) => {
            let _ = writeln!(out, "NOT_A_COGRAPH {a} {b} {c} {d}");
            EXIT_ERROR
        }
        Err(Failure::Lib(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
        Err(Failure::Io(path, e)) => {
            let _ = writeln!(err, "error: {}: {e}", path.display());
            EXIT_ERROR
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Io(path.to_path_buf(), e))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Ok(read(path)?.parse()?)
}

fn read_set(path: &Path, g: &Graph) -> Result<IndependentSet, Failure> {
    let vertices = parse_vertex_set(&read(path)?)?;
    Ok(IndependentSet::new(g, vertices)?)
}

fn io(e: std::io::Error) -> Failure {
    Failure::Io(PathBuf::from("<stdout>"), e)
}

fn dump_sizes(t: &Cotree, out: &mut dyn Write) -> Result<(), Failure> {
    for (node, list) in compute_size_lists(t).iter() {
        writeln!(out, "{node}: {list}").map_err(io)?;
    }
    Ok(())
}

fn execute(command: Command, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        Command::Check {
            graph,
            k,
            witness,
            dump_sizes: dump,
        } => {
            let g = read_graph(&graph)?;
            let tree = if g.n() == 0 { None } else { Some(build_cotree(&g)?) };
            let verdict = match &tree {
                Some(t) => is_tar_connected_cotree(t, k),
                None => crate::connectivity::is_tar_connected(&g, k)?,
            };
            writeln!(out, "{}", verdict.verdict()).map_err(io)?;
            if let (true, Connectivity::Disconnected(w)) = (witness, &verdict) {
                writeln!(out, "good {}", w.good_set).map_err(io)?;
                writeln!(out, "stuck {}", w.stuck_set).map_err(io)?;
                let mut line = String::from("trace");
                for step in &w.trace.steps {
                    line.push_str(&format!(
                        " [node={} bad_alpha={} remainder={{{}}}]",
                        step.node,
                        step.bad_alpha,
                        step.remainder.to_string().replace(' ', ",")
                    ));
                }
                writeln!(out, "{line}").map_err(io)?;
            }
            if let (true, Some(t)) = (dump, &tree) {
                dump_sizes(t, out)?;
            }
            Ok(if verdict.is_connected() {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Reach {
            graph,
            k,
            from,
            to,
            sequence,
        } => {
            let g = read_graph(&graph)?;
            let (from, to) = (read_set(&from, &g)?, read_set(&to, &g)?);
            let verdict = same_component(&g, k, &from, &to)?;
            writeln!(out, "{}", verdict.verdict()).map_err(io)?;
            match verdict {
                Reachability::Reachable(seq) => {
                    if sequence {
                        for step in &seq.steps {
                            writeln!(out, "{step}").map_err(io)?;
                        }
                    }
                    Ok(EXIT_POSITIVE)
                }
                Reachability::Unreachable => Ok(EXIT_NEGATIVE),
            }
        }
        Command::Gen {
            n,
            join_prob,
            seed,
            out: prefix,
        } => {
            if n == 0 {
                return Err(Failure::Usage("-n must be at least 1".into()));
            }
            if !(0.0..=1.0).contains(&join_prob) {
                return Err(Failure::Usage("--join-prob must lie in [0, 1]".into()));
            }
            let t = random_cotree(n, join_prob, seed);
            let graph_path = with_extension(&prefix, "graph");
            let cotree_path = with_extension(&prefix, "cotree");
            fs::write(&graph_path, t.to_graph().to_file_string())
                .map_err(|e| Failure::Io(graph_path.clone(), e))?;
            fs::write(&cotree_path, format!("{t}\n")).map_err(|e| Failure::Io(cotree_path.clone(), e))?;
            writeln!(out, "{}", graph_path.display()).map_err(io)?;
            writeln!(out, "{}", cotree_path.display()).map_err(io)?;
            Ok(EXIT_POSITIVE)
        }
        Command::Cotree {
            graph,
            dump_sizes: dump,
        } => {
            let t = build_cotree(&read_graph(&graph)?)?;
            writeln!(out, "{t}").map_err(io)?;
            if dump {
                dump_sizes(&t, out)?;
            }
            Ok(EXIT_POSITIVE)
        }
        Command::Oracle { command } => execute_oracle(command, out, err),
    }
}

fn with_extension(prefix: &Path, ext: &str) -> PathBuf {
    let mut name = prefix.as_os_str().to_owned();
    name.push(".");
    name.push(ext);
    PathBuf::from(name)
}

fn warn_limit(limit: usize, err: &mut dyn Write) {
    if limit > DEFAULT_LIMIT {
        let _ = writeln!(
            err,
            "warning: --limit {limit} above {DEFAULT_LIMIT}; the state space can need 2^{limit} entries"
        );
    }
}

fn execute_oracle(command: OracleCommand, out: &mut dyn Write, err: &mut dyn Write) -> Outcome {
    match command {
        OracleCommand::Check { graph, k, limit } => {
            warn_limit(limit, err);
            let g = read_graph(&graph)?;
            let tar = oracle::build_tar(&g, k, limit)?;
            let verdict = if tar.state_count() == 0 {
                "TRIVIALLY_CONNECTED"
            } else if tar.is_connected() {
                "CONNECTED"
            } else {
                "DISCONNECTED"
            };
            writeln!(out, "{verdict}").map_err(io)?;
            Ok(if tar.is_connected() {
                EXIT_POSITIVE
            } else {
                EXIT_NEGATIVE
            })
        }
        OracleCommand::Reach {
            graph,
            k,
            from,
            to,
            limit,
        } => {
            warn_limit(limit, err);
            let g = read_graph(&graph)?;
            let (from, to) = (read_set(&from, &g)?, read_set(&to, &g)?);
            for set in [&from, &to] {
                if set.len() < k {
                    return Err(Error::SizeBelowThreshold { size: set.len(), k }.into());
                }
            }
            let same =
                oracle::oracle_same_component_with_limit(&g, k, from.vertices(), to.vertices(), limit)?;
            writeln!(out, "{}", if same { "REACHABLE" } else { "UNREACHABLE" }).map_err(io)?;
            Ok(if same { EXIT_POSITIVE } else { EXIT_NEGATIVE })
        }
    }
}
