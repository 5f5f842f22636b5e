//! Command-line front end.
//!
//! Exit codes: 0 success / Found / true, 1 ProvenNone / false / theorem
//! violation, 2 budget exhausted, 3 usage or input error, 4 internal
//! invariant failure.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::connectivity::{blocks, vertex_connectivity};
use crate::constructive::{
    extend_leaves, extend_subtree_with, grow_path, ConstructError, EmbeddingMap, ExtensionMode, GrowVariant,
};
use crate::graph::Graph;
use crate::harness::{gen_instance, sweep_theorem, tightness_report, Generator, InstanceSpec, SweepConfig, Theorem};
use crate::keeper::{find_keeper, verify_certificate, KeeperCertificate, SearchStrategy, Verdict, DEFAULT_BUDGET};
use crate::tree_shapes::{TreeShape, TreeSpec};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_INTERNAL: i32 = 4;

#[derive(Debug, Parser)]
#[command(name = "connkeeper", version, about = "Connectivity-keeping trees in bipartite graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Records,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum StrategyArg {
    /// Guided search, then brute force if it finds nothing.
    Auto,
    Guided,
    BruteForce,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Vertex connectivity of a graph, with a minimum separator.
    Kappa {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Blocks and cut vertices.
    Blocks {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Greedy long path in a bipartite graph.
    GrowPath {
        graph: PathBuf,
        #[arg(long)]
        m: usize,
        #[arg(long, default_value = "i")]
        variant: GrowVariant,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Extend a partial embedding of a tree to the whole tree.
    Extend {
        graph: PathBuf,
        #[arg(long)]
        tree: String,
        /// `tree:graph` pairs, e.g. `0:3,1:4`.
        #[arg(long)]
        embedding: String,
        /// Leaves to attach (the embedding must cover everything else).
        #[arg(long, value_delimiter = ',')]
        leaves: Option<Vec<usize>>,
        /// Degree threshold |V(T)| - 1 for hosts that are not bipartite.
        #[arg(long)]
        general: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search for a copy of the tree whose removal keeps k-connectivity.
    FindKeeper {
        graph: PathBuf,
        #[arg(long)]
        tree: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Auto)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Re-check a keeper certificate from scratch.
    Verify {
        graph: PathBuf,
        #[arg(long)]
        certificate: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Random instances for one theorem, each of which must have a keeper.
    Sweep {
        #[arg(long)]
        theorem: Theorem,
        #[arg(long, default_value_t = 50)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = crate::harness::DEFAULT_MAX_SIDE)]
        max_side: usize,
        #[arg(long, default_value_t = crate::harness::DEFAULT_MAX_TREE)]
        max_tree: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        /// Override the theorem's k; k >= 4 is exploratory.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check that K_{k+t-1,k+t-1} has no keeper for the tree.
    Tightness {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tree: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Generate an instance and print it as an edge list.
    Gen {
        #[arg(long, default_value = "random-regularish")]
        generator: Generator,
        #[arg(long)]
        nx: usize,
        #[arg(long)]
        ny: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        tree: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

/// Failure carrying its exit code.
struct Failure(i32, String);

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure(EXIT_USAGE, e.to_string())
}

/// Runs the CLI on `argv` (including the program name), printing to the
/// process's stdout and stderr.
pub fn run_cli<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_cli_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_cli_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            return code;
        }
    };
    match dispatch(cli.command, out) {
        Ok(code) => code,
        Err(Failure(code, message)) => {
            let _ = writeln!(err, "error: {message}");
            code
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Result<i32, Failure> {
    match command {
        Command::Kappa { graph, format } => {
            let g = read_graph(&graph)?;
            let c = vertex_connectivity(&g);
            match format {
                Format::Text => {
                    emit(out, &format!("{}\n", c.kappa))?;
                    emit(out, &format!("separator {}\n", join(&c.separator.vertices)))?;
                }
                Format::Records => emit_json(out, &c)?,
            }
            Ok(EXIT_OK)
        }
        Command::Blocks { graph, format } => {
            let g = read_graph(&graph)?;
            let d = blocks(&g);
            match format {
                Format::Text => {
                    for b in &d.blocks {
                        emit(out, &format!("block {}\n", join(&b.vertices)))?;
                    }
                    emit(out, &format!("cut-vertices {}\n", join(&d.cut_vertices)))?;
                }
                Format::Records => emit_json(out, &d)?,
            }
            Ok(EXIT_OK)
        }
        Command::GrowPath {
            graph,
            m,
            variant,
            format,
        } => {
            let g = read_graph(&graph)?;
            let p = grow_path(&g, m, variant).map_err(construct_failure)?;
            match format {
                Format::Text => emit(out, &format!("order {}\npath {}\n", p.order(), join(p.vertices())))?,
                Format::Records => emit_json(out, &p)?,
            }
            Ok(EXIT_OK)
        }
        Command::Extend {
            graph,
            tree,
            embedding,
            leaves,
            general,
            format,
        } => {
            let g = read_graph(&graph)?;
            let shape = read_tree(&tree)?;
            let emb: EmbeddingMap = embedding.parse().map_err(usage)?;
            let result = match leaves {
                Some(l) => extend_leaves(&g, &shape, &l, &emb),
                None => {
                    let mode = if general {
                        ExtensionMode::General
                    } else {
                        ExtensionMode::Bipartite
                    };
                    extend_subtree_with(&g, &shape, &emb, mode)
                }
            }
            .map_err(construct_failure)?;
            match format {
                Format::Text => emit(out, &format!("{result}\n"))?,
                Format::Records => emit_json(out, &result)?,
            }
            Ok(EXIT_OK)
        }
        Command::FindKeeper {
            graph,
            tree,
            k,
            strategy,
            budget,
            out: path,
            format,
        } => {
            let g = read_graph(&graph)?;
            let shape = read_tree(&tree)?;
            let search = |s| find_keeper(&g, &shape, k, s, budget).map_err(usage);
            let outcome = match strategy {
                StrategyArg::Guided => search(SearchStrategy::Guided)?,
                StrategyArg::BruteForce => search(SearchStrategy::BruteForce)?,
                StrategyArg::Auto => {
                    let guided = search(SearchStrategy::Guided)?;
                    if guided.is_found() {
                        guided
                    } else {
                        search(SearchStrategy::BruteForce)?
                    }
                }
            };
            if let Some(cert) = outcome.verdict.certificate() {
                if !verify_certificate(&g, k, cert) {
                    return Err(Failure(EXIT_INTERNAL, "search returned an invalid certificate".into()));
                }
            }
            let text = match format {
                Format::Text => {
                    let mut s = format!(
                        "{} after {} embeddings\n",
                        outcome.verdict.label(),
                        outcome.embeddings_examined
                    );
                    if let Some(c) = outcome.verdict.certificate() {
                        s.push_str(&format!("embedding {}\nresidual-kappa {}\n", c.embedding, c.residual_kappa));
                    }
                    s
                }
                Format::Records => json(&outcome)?,
            };
            write_or_print(out, path.as_deref(), &text)?;
            if let (Some(p), Some(c)) = (&path, outcome.verdict.certificate()) {
                // A certificate file next to the report can be replayed with `verify`.
                if format == Format::Text {
                    let cert_path = p.with_extension("certificate.json");
                    write_file(&cert_path, &json(c)?)?;
                }
            }
            Ok(match outcome.verdict {
                Verdict::Found(_) => EXIT_OK,
                Verdict::ProvenNone => EXIT_FALSE,
                Verdict::BudgetExhausted => EXIT_BUDGET,
            })
        }
        Command::Verify { graph, certificate, k } => {
            let g = read_graph(&graph)?;
            let text = read_file(&certificate)?;
            let cert: KeeperCertificate = serde_json::from_str(&text).map_err(usage)?;
            let ok = verify_certificate(&g, k, &cert);
            emit(out, &format!("{ok}\n"))?;
            Ok(if ok { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Sweep {
            theorem,
            count,
            seed,
            max_side,
            max_tree,
            budget,
            k,
            out: path,
            format,
        } => {
            let config = SweepConfig {
                max_side,
                max_tree,
                budget,
                k_override: k,
                ..SweepConfig::new(theorem, count, seed)
            };
            let report = sweep_theorem(&config);
            let text = match format {
                Format::Text => report.to_text(),
                Format::Records => report.to_records(),
            };
            match &path {
                Some(p) => {
                    write_file(p, &text)?;
                    let t = &report.totals;
                    emit(
                        out,
                        &format!(
                            "theorem {} instances {} found {} violations {} -> {}\n",
                            theorem,
                            t.instances,
                            t.found,
                            t.violations,
                            p.display()
                        ),
                    )?;
                }
                None => emit(out, &text)?,
            }
            Ok(if report.totals.violations > 0 {
                EXIT_FALSE
            } else if report.totals.generation_errors > 0 {
                EXIT_USAGE
            } else {
                EXIT_OK
            })
        }
        Command::Tightness { k, tree, format } => {
            let shape = read_tree(&tree)?;
            let report = tightness_report(k, &shape).map_err(usage)?;
            match format {
                Format::Text => {
                    let line = if report.holds() {
                        "ProvenNone as expected".to_string()
                    } else {
                        format!("unexpected verdict {}", report.outcome.verdict.label())
                    };
                    emit(
                        out,
                        &format!(
                            "K_{{{s},{s}}} k={k} tree {}: {line} ({} embeddings)\n",
                            report.tree,
                            report.outcome.embeddings_examined,
                            s = report.side
                        ),
                    )?;
                }
                Format::Records => emit_json(out, &report)?,
            }
            Ok(if report.holds() { EXIT_OK } else { EXIT_FALSE })
        }
        Command::Gen {
            generator,
            nx,
            ny,
            k,
            tree,
            seed,
            out: path,
        } => {
            let tree: TreeSpec = tree.parse().map_err(usage)?;
            let spec = InstanceSpec {
                generator,
                n_x: nx,
                n_y: ny,
                k,
                tree,
                seed,
            };
            let (g, _) = gen_instance(&spec).map_err(usage)?;
            write_or_print(out, path.as_deref(), &g.to_edge_list())?;
            Ok(EXIT_OK)
        }
    }
}

fn construct_failure(e: ConstructError) -> Failure {
    let code = if e.is_internal() { EXIT_INTERNAL } else { EXIT_USAGE };
    Failure(code, e.to_string())
}

fn read_file(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    std::fs::write(path, text).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::from_edge_list(&read_file(path)?).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// `file:<path>` reads an edge list; anything else is a tree spec string.
fn read_tree(arg: &str) -> Result<TreeShape, Failure> {
    match arg.strip_prefix("file:") {
        Some(p) => TreeShape::from_tree(read_graph(Path::new(p))?).map_err(usage),
        None => {
            let spec: TreeSpec = arg.parse().map_err(usage)?;
            TreeShape::from_spec(&spec).map_err(usage)
        }
    }
}

fn json<T: Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string_pretty(value)
        .map(|mut s| {
            s.push('\n');
            s
        })
        .map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure(EXIT_INTERNAL, e.to_string()))
}

fn emit_json<T: Serialize>(out: &mut dyn Write, value: &T) -> Result<(), Failure> {
    emit(out, &json(value)?)
}

fn write_or_print(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), Failure> {
    match path {
        Some(p) => write_file(p, text),
        None => emit(out, text),
    }
}

fn join(vs: &[usize]) -> String {
    vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}
