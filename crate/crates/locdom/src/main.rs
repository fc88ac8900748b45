use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use locdom::checker::{self, CodeKind};
use locdom::construct;
use locdom::format::write_edge_list;
use locdom::formulas;
use locdom::graph::{Graph, GraphFamily};
use locdom::set::VertexSet;
use locdom::solver::{self, SolveOutcome, DEFAULT_NODE_BUDGET};
use locdom::sweep::{
    self, find_tightness_example, ReportFormat, SearchSpace, SweepConfig, SweepError,
    TightnessRelation,
};

#[derive(Parser)]
#[command(
    name = "locdom",
    version,
    about = "Locating-domination codes (LD, LTD, OLD) on Mycielski graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a family graph and print it in edge-list format
    Gen {
        /// path, cycle, star or circulant
        family: GraphFamily,
        /// order (stars: number of leaves)
        n: usize,
        /// apply the Mycielski operator to the generated graph
        #[arg(long)]
        mycielski: bool,
        /// write to a file instead of stdout
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check whether a vertex set is a code of the given kind
    Check {
        /// edge-list file
        graph: PathBuf,
        /// comma-separated 0-based vertex indices, e.g. 0,2,5
        set: String,
        /// dom, tdom, ld, ltd or old
        kind: CodeKind,
    },
    /// Compute the exact code number of a graph
    Solve {
        /// edge-list file
        graph: PathBuf,
        /// dom, tdom, ld, ltd or old
        kind: CodeKind,
        /// search-node budget
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
    /// Build a constructive witness set
    Construct {
        /// old-cycle, ld-mycielski-path or ltd-mycielski-cycle
        name: String,
        n: usize,
    },
    /// Evaluate a closed-form value
    Formula {
        /// old-cycle, old-path, ld-path-cycle, ltd-path-cycle, star,
        /// star-mycielski, ub-ld-mycielski-{path,cycle},
        /// ub-ltd-mycielski-{path,cycle} or aux-cover
        name: String,
        n: usize,
    },
    /// Run the sweep described by a key=value config file
    Sweep { config: PathBuf },
    /// Search a space for instances attaining the +1 lower bound
    Tightness {
        kind: CodeKind,
        /// lower-plus-one or old-plus-one
        relation: TightnessRelation,
        /// paths:LO..HI, cycles:LO..HI, stars:LO..HI, connected:MAX or
        /// random:MAX,COUNT,SEED
        space: SearchSpace,
        #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
        budget: u64,
    },
}

struct CliError {
    code: i32,
    message: String,
}

impl CliError {
    fn io(message: impl ToString) -> Self {
        CliError {
            code: 1,
            message: message.to_string(),
        }
    }
}

impl From<SweepError> for CliError {
    fn from(e: SweepError) -> Self {
        let code = match e {
            SweepError::IntervalViolation { .. } => 2,
            _ => 1,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => {}
        Err(e) => {
            eprintln!("error: {}", e.message);
            std::process::exit(e.code);
        }
    }
}

fn load(path: &PathBuf) -> Result<Graph, CliError> {
    let parsed = sweep::load_graph(path)?;
    for w in &parsed.warnings {
        eprintln!("warning: {w}");
    }
    Ok(parsed.graph)
}

fn parse_vertex_list(text: &str, n: usize) -> Result<VertexSet, CliError> {
    if text.trim().is_empty() {
        return Ok(VertexSet::empty(n));
    }
    let indices: Result<Vec<usize>, _> =
        text.split(',').map(|t| t.trim().parse::<usize>()).collect();
    let indices = indices.map_err(|e| CliError::io(format!("bad vertex list {text:?}: {e}")))?;
    VertexSet::from_indices(n, indices).map_err(CliError::io)
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Gen {
            family,
            n,
            mycielski,
            out,
        } => {
            let base = match family {
                GraphFamily::Path => Graph::path(n),
                GraphFamily::Cycle => Graph::cycle(n),
                GraphFamily::Star => Graph::star(n),
                GraphFamily::Circulant => Graph::aux_circulant(n),
                GraphFamily::Generic => {
                    return Err(CliError::io("gen needs a concrete family"));
                }
            }
            .map_err(CliError::io)?;
            let g = if mycielski {
                base.mycielski().map_err(CliError::io)?
            } else {
                base
            };
            let text = write_edge_list(&g);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| CliError::io(format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
            Ok(())
        }
        Command::Check { graph, set, kind } => {
            let g = load(&graph)?;
            let c = parse_vertex_list(&set, g.n())?;
            let verdict = checker::is_code(&g, &c, kind).map_err(CliError::io)?;
            let payload = json!({
                "kind": kind.name(),
                "set": c,
                "ok": verdict.ok(),
                "failure": verdict.failure().map(|f| f.to_string()),
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).map_err(CliError::io)?
            );
            Ok(())
        }
        Command::Solve {
            graph,
            kind,
            budget,
        } => {
            let g = load(&graph)?;
            let started = Instant::now();
            let result = solver::gamma_budgeted(&g, kind, budget);
            let elapsed = started.elapsed().as_millis() as u64;
            let payload = match result.outcome {
                SolveOutcome::Solved { value, witness } => json!({
                    "kind": kind.name(),
                    "value": value,
                    "witness": witness,
                    "nodes": result.nodes_explored,
                    "wall_time_ms": elapsed,
                }),
                SolveOutcome::Inadmissible(reason) => json!({
                    "kind": kind.name(),
                    "value": "inadmissible",
                    "reason": reason.to_string(),
                    "nodes": result.nodes_explored,
                    "wall_time_ms": elapsed,
                }),
                SolveOutcome::BudgetExhausted => json!({
                    "kind": kind.name(),
                    "value": "budget",
                    "nodes": result.nodes_explored,
                    "wall_time_ms": elapsed,
                }),
            };
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).map_err(CliError::io)?
            );
            Ok(())
        }
        Command::Construct { name, n } => {
            let outcome = match name.as_str() {
                "old-cycle" => construct::old_set_cycle(n),
                "ld-mycielski-path" => construct::ld_set_mycielski_path(n),
                "ltd-mycielski-cycle" => construct::ltd_set_mycielski_cycle(n),
                other => {
                    return Err(CliError::io(format!(
                        "unknown construction {other:?} (expected old-cycle, ld-mycielski-path or ltd-mycielski-cycle)"
                    )));
                }
            }
            .map_err(CliError::io)?;
            let payload = json!({
                "set": outcome.set,
                "size": outcome.set.len(),
                "kind": outcome.kind.name(),
                "graph": outcome.graph.label(),
                "validated": outcome.validated,
                "citation": outcome.citation,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).map_err(CliError::io)?
            );
            Ok(())
        }
        Command::Formula { name, n } => {
            let result = match name.as_str() {
                "old-cycle" => formulas::old_cycle(n),
                "old-path" => formulas::old_path(n),
                "ld-path-cycle" => formulas::ld_path_cycle(n),
                "ltd-path-cycle" => formulas::ltd_path_cycle(n),
                "star" => formulas::star_numbers(n, CodeKind::Ld).map(|(base, _)| base),
                "star-mycielski" => formulas::star_numbers(n, CodeKind::Ld).map(|(_, m)| m),
                "ub-ld-mycielski-path" => formulas::ub_ld_mycielski(n, GraphFamily::Path),
                "ub-ld-mycielski-cycle" => formulas::ub_ld_mycielski(n, GraphFamily::Cycle),
                "ub-ltd-mycielski-path" => formulas::ub_ltd_mycielski(n, GraphFamily::Path),
                "ub-ltd-mycielski-cycle" => formulas::ub_ltd_mycielski(n, GraphFamily::Cycle),
                "aux-cover" => formulas::aux_vertex_cover_size(n),
                other => {
                    return Err(CliError::io(format!("unknown formula {other:?}")));
                }
            }
            .map_err(CliError::io)?;
            let payload = json!({
                "name": name,
                "n": n,
                "value": result.value,
                "source": result.source,
            });
            println!(
                "{}",
                serde_json::to_string_pretty(&payload).map_err(CliError::io)?
            );
            Ok(())
        }
        Command::Sweep { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| CliError::io(format!("{}: {e}", config.display())))?;
            let cfg = SweepConfig::parse(&text).map_err(SweepError::from)?;
            let report = sweep::run_sweep(&cfg)?;
            match &cfg.out {
                Some(path) => {
                    sweep::save_report(&report, path, cfg.format)?;
                    println!("{} rows -> {}", report.rows.len(), path);
                }
                None => match cfg.format {
                    ReportFormat::Csv => print!("{}", report.to_csv()),
                    ReportFormat::Json => println!("{}", report.to_json()?),
                },
            }
            Ok(())
        }
        Command::Tightness {
            kind,
            relation,
            space,
            budget,
        } => {
            let report = find_tightness_example(kind, relation, &space, budget)?;
            println!(
                "{}",
                serde_json::to_string_pretty(&report).map_err(CliError::io)?
            );
            Ok(())
        }
    }
}
