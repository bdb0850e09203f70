//! Command-line surface for the cluster-tube library.
//!
//! Exit codes: 0 on success, 2 for usage errors, 3 when a library invariant
//! fails (which would disprove something the computations rely on), 1 for
//! plain I/O trouble.

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use cluster_tube::derived::{cartan_determinant, cartan_matrix, count_3_cycles, derived_classes};
use cluster_tube::json::{ClassesJson, ExchangeGraphJson, QuiverJson};
use cluster_tube::quiver::node_quivers;
use cluster_tube::render::{exchange_graph_dot, pr_grid, quivers_dot};
use cluster_tube::{ClusterTube, ExchangeGraph};

const DEFAULT_MAX_RANK: usize = 12;

#[derive(Parser)]
#[command(
    name = "cluster-tube",
    version,
    about = "Maximal rigid objects in cluster tubes: enumeration, mutation, quivers, derived invariants"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List all basic maximal rigid objects
    Enumerate(CommonArgs),
    /// Exchange graph of maximal rigid objects
    Graph(CommonArgs),
    /// Quivers of the endomorphism algebras, one per object
    Quivers(CommonArgs),
    /// Derived-equivalence classes keyed by the 3-cycle count
    Classes(CommonArgs),
    /// Grid of the objects presented by a wing's standard object
    Pr(PrArgs),
    /// Cartan matrices and determinants for all quivers
    Cartan(CommonArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Tube rank (at least 2)
    #[arg(short = 'n', long)]
    rank: usize,
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct PrArgs {
    /// Tube rank (at least 2)
    #[arg(short = 'n', long)]
    rank: usize,
    /// Apex of the wing whose standard object presents the region
    #[arg(long, default_value_t = 1)]
    apex: usize,
    /// Write to this file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

enum CliError {
    Usage(String),
    Io(String),
    Internal(cluster_tube::Error),
}

impl From<cluster_tube::Error> for CliError {
    fn from(e: cluster_tube::Error) -> CliError {
        CliError::Internal(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Internal(e)) => {
            eprintln!("internal invariant violation: {e}");
            ExitCode::from(3)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Enumerate(args) => {
            let tube = checked_tube(args.rank)?;
            let out = match args.format {
                Format::Text => enumerate_text(&tube),
                Format::Json => enumerate_json(&tube)?,
                Format::Dot => {
                    return Err(CliError::Usage(
                        "enumerate supports --format text or json".into(),
                    ))
                }
            };
            emit(args.out.as_deref(), &out)
        }
        Command::Graph(args) => {
            let tube = checked_tube(args.rank)?;
            let graph = ExchangeGraph::build(&tube)?;
            let out = match args.format {
                Format::Text => graph_text(&graph),
                Format::Dot => exchange_graph_dot(&graph),
                Format::Json => pretty(&ExchangeGraphJson::from(&graph))?,
            };
            emit(args.out.as_deref(), &out)
        }
        Command::Quivers(args) => {
            let tube = checked_tube(args.rank)?;
            let graph = ExchangeGraph::build(&tube)?;
            let quivers = node_quivers(&tube, &graph)?;
            let out = match args.format {
                Format::Text => {
                    let mut s = String::new();
                    for (node, qt) in graph.nodes().iter().zip(&quivers) {
                        s.push_str(&format!("{node}: {qt}\n"));
                    }
                    s
                }
                Format::Dot => {
                    let named: Vec<(String, &cluster_tube::quiver::QTilde)> = quivers
                        .iter()
                        .enumerate()
                        .map(|(i, qt)| (format!("quiver_{i}"), qt))
                        .collect();
                    quivers_dot(&named)
                }
                Format::Json => {
                    let items: Vec<QuiverJson> = quivers.iter().map(QuiverJson::from).collect();
                    pretty(&items)?
                }
            };
            emit(args.out.as_deref(), &out)
        }
        Command::Classes(args) => {
            let tube = checked_tube(args.rank)?;
            let graph = ExchangeGraph::build(&tube)?;
            let classes = derived_classes(&tube, &graph)?;
            let out = match args.format {
                Format::Text => {
                    let mut s = format!(
                        "rank {}: {} derived-equivalence class{}\n",
                        tube.rank(),
                        classes.len(),
                        if classes.len() == 1 { "" } else { "es" }
                    );
                    for class in &classes {
                        let det = cartan_determinant(&cartan_matrix(&class.representative)?);
                        s.push_str(&format!(
                            "t={}: size {}, cartan det {}\n",
                            class.three_cycles,
                            class.members.len(),
                            det
                        ));
                    }
                    s
                }
                Format::Json => pretty(&ClassesJson::build(tube.rank(), &classes)?)?,
                Format::Dot => {
                    return Err(CliError::Usage(
                        "classes supports --format text or json".into(),
                    ))
                }
            };
            emit(args.out.as_deref(), &out)
        }
        Command::Pr(args) => {
            let tube = checked_tube(args.rank)?;
            if args.apex < 1 || args.apex > tube.rank() {
                return Err(CliError::Usage(format!(
                    "apex must lie in 1..={}, got {}",
                    tube.rank(),
                    args.apex
                )));
            }
            let out = pr_grid(&tube, args.apex);
            emit(args.out.as_deref(), &out)
        }
        Command::Cartan(args) => {
            let tube = checked_tube(args.rank)?;
            let graph = ExchangeGraph::build(&tube)?;
            let quivers = node_quivers(&tube, &graph)?;
            let out = match args.format {
                Format::Text => {
                    let mut s = String::new();
                    for (node, qt) in graph.nodes().iter().zip(&quivers) {
                        let c = cartan_matrix(qt)?;
                        s.push_str(&format!(
                            "{node} (t={}, det={})\n{c}",
                            count_3_cycles(qt),
                            cartan_determinant(&c)
                        ));
                    }
                    s
                }
                Format::Json => {
                    let items: Vec<CartanJson> = graph
                        .nodes()
                        .iter()
                        .zip(&quivers)
                        .map(|(node, qt)| {
                            let c = cartan_matrix(qt)?;
                            Ok(CartanJson {
                                object: node.to_string(),
                                three_cycles: count_3_cycles(qt),
                                determinant: cartan_determinant(&c) as i64,
                                matrix: c.entries,
                            })
                        })
                        .collect::<Result<_, cluster_tube::Error>>()?;
                    pretty(&items)?
                }
                Format::Dot => {
                    return Err(CliError::Usage(
                        "cartan supports --format text or json".into(),
                    ))
                }
            };
            emit(args.out.as_deref(), &out)
        }
    }
}

#[derive(Serialize)]
struct CartanJson {
    object: String,
    three_cycles: usize,
    determinant: i64,
    matrix: Vec<Vec<u64>>,
}

#[derive(Serialize)]
struct EnumerateJson {
    rank: usize,
    count: usize,
    objects: Vec<EnumerateItem>,
}

#[derive(Serialize)]
struct EnumerateItem {
    summands: Vec<String>,
    apex: usize,
}

fn graph_text(graph: &ExchangeGraph) -> String {
    let mut s = format!(
        "exchange graph, rank {}: nodes {}, edges {}\n",
        graph.rank(),
        graph.nodes().len(),
        graph.edges().len()
    );
    for (i, node) in graph.nodes().iter().enumerate() {
        s.push_str(&format!("node {i}: {node} (apex {})\n", node.apex()));
    }
    for e in graph.edges() {
        s.push_str(&format!(
            "edge {} -- {}: exchange {} for {} ({})\n",
            e.source,
            e.target,
            e.removed,
            e.added,
            if e.simple { "simple" } else { "non-simple" }
        ));
    }
    s
}

fn enumerate_text(tube: &ClusterTube) -> String {
    let objects = cluster_tube::enumerate_maximal_rigid(tube);
    let mut s = String::new();
    for obj in &objects {
        s.push_str(&format!("{obj} (apex {})\n", obj.apex()));
    }
    s.push_str(&format!("count: {}\n", objects.len()));
    s
}

fn enumerate_json(tube: &ClusterTube) -> Result<String, CliError> {
    let objects = cluster_tube::enumerate_maximal_rigid(tube);
    let payload = EnumerateJson {
        rank: tube.rank(),
        count: objects.len(),
        objects: objects
            .iter()
            .map(|obj| EnumerateItem {
                summands: obj.summands().iter().map(|x| x.to_string()).collect(),
                apex: obj.apex(),
            })
            .collect(),
    };
    pretty(&payload)
}

fn checked_tube(rank: usize) -> Result<ClusterTube, CliError> {
    let max_rank = match std::env::var("CT_MAX_RANK") {
        Ok(v) => v
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("CT_MAX_RANK must be an integer, got `{v}`")))?,
        Err(_) => DEFAULT_MAX_RANK,
    };
    if rank < 2 {
        return Err(CliError::Usage(format!(
            "rank must be at least 2, got {rank}"
        )));
    }
    if rank > max_rank {
        return Err(CliError::Usage(format!(
            "rank {rank} exceeds the guard CT_MAX_RANK={max_rank}"
        )));
    }
    ClusterTube::new(rank).map_err(CliError::Internal)
}

fn pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Io(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn emit(path: Option<&std::path::Path>, content: &str) -> Result<(), CliError> {
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(content.as_bytes())
                .map_err(|e| CliError::Io(format!("writing stdout: {e}")))
        }
        Some(p) => {
            fs::write(p, content).map_err(|e| CliError::Io(format!("writing {}: {e}", p.display())))
        }
    }
}
