use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use condog::formats::{
    emit_edgelist, emit_graph6, load_corpus, parse_auto, AnyLabeledGraph,
};
use condog::report::{turn_name, JsonValue, ResultRecord};
use condog::verify::{run_suite, sharpness_census, Suite};
use condog::{memo_capacity_from_env, with_graph};
use condog_core::{
    x_isolation_line, x_isolation_winner, IsolationConvention, SolveContext, Turn, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "condog",
    about = "Exact solver for the connected domination game with predominated vertices",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, ValueEnum)]
enum FirstPlayer {
    Dominator,
    Staller,
}

impl From<FirstPlayer> for Turn {
    fn from(f: FirstPlayer) -> Turn {
        match f {
            FirstPlayer::Dominator => Turn::Dominator,
            FirstPlayer::Staller => Turn::Staller,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum Convention {
    Plain,
    Predominated,
}

impl From<Convention> for IsolationConvention {
    fn from(c: Convention) -> IsolationConvention {
        match c {
            Convention::Plain => IsolationConvention::Plain,
            Convention::Predominated => IsolationConvention::Predominated,
        }
    }
}

#[derive(Copy, Clone, ValueEnum)]
enum EmitFormat {
    Edgelist,
    Graph6,
}

/// Where the graph comes from: a file (edge list or graph6) or a family
/// spec such as `H:6` or `C2:1,3`.
#[derive(Args)]
struct GraphSource {
    /// Graph file, edge list or graph6
    #[arg(long, conflicts_with = "family")]
    graph: Option<PathBuf>,
    /// Family spec NAME:PARAMS
    #[arg(long, required_unless_present = "graph")]
    family: Option<String>,
}

impl GraphSource {
    fn load(&self) -> Result<(String, AnyLabeledGraph), String> {
        if let Some(path) = &self.graph {
            let text = std::fs::read_to_string(path)
                .map_err(|e| format!("{}: {e}", path.display()))?;
            let g = parse_auto(&text).map_err(|e| format!("{}: {e}", path.display()))?;
            Ok((path.display().to_string(), g))
        } else {
            let spec = self.family.as_deref().unwrap();
            let parsed = condog_core::FamilySpec::parse(spec).map_err(|e| e.to_string())?;
            let g = match parsed.build::<u64>() {
                Ok(g) => AnyLabeledGraph::Small(g),
                Err(condog_core::Error::TooManyVertices { .. }) => {
                    AnyLabeledGraph::Large(parsed.build::<u128>().map_err(|e| e.to_string())?)
                }
                Err(e) => return Err(e.to_string()),
            };
            Ok((spec.to_string(), g))
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Compute the game value of a position
    Solve {
        #[command(flatten)]
        source: GraphSource,
        /// Comma-separated labels of predominated vertices
        #[arg(long, value_delimiter = ',')]
        predominate: Vec<String>,
        #[arg(long, value_enum, default_value = "dominator")]
        first: FirstPlayer,
        /// Abort after expanding this many search nodes
        #[arg(long)]
        budget: Option<u64>,
        /// Disable dominated-move pruning
        #[arg(long)]
        no_prune: bool,
    },
    /// Emit a family graph
    Family {
        spec: String,
        #[arg(long, value_enum, default_value = "edgelist")]
        format: EmitFormat,
    },
    /// Compute the connected domination number
    GammaC {
        #[command(flatten)]
        source: GraphSource,
        #[arg(long, value_delimiter = ',')]
        predominate: Vec<String>,
    },
    /// Decide the x-isolation game around a vertex
    Isolate {
        #[command(flatten)]
        source: GraphSource,
        /// Label of the vertex to isolate
        #[arg(long)]
        x: String,
        /// Who moves first
        #[arg(long, value_enum, default_value = "staller")]
        first: FirstPlayer,
        /// Whose isolation strategy is asked for
        #[arg(long, value_enum, default_value = "staller")]
        player: FirstPlayer,
        #[arg(long, value_enum, default_value = "plain")]
        convention: Convention,
    },
    /// Run a verification suite
    Verify {
        /// Suite name, or "all"
        #[arg(long)]
        suite: String,
        /// graph6 corpus file (required for corpus suites)
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Worker threads, default: available parallelism
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
    /// Tabulate plain vs. predominated game values over a corpus
    Census {
        #[arg(long)]
        corpus: PathBuf,
        #[arg(long)]
        jobs: Option<usize>,
        #[arg(long)]
        budget: Option<u64>,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn resolve_set<W: condog_core::Word>(
    g: &condog_core::LabeledGraph<W>,
    labels: &[String],
) -> Result<VertexSet<W>, String> {
    let mut s = VertexSet::empty();
    for l in labels {
        match g.vertex(l) {
            Some(v) => s.insert(v),
            None => return Err(format!("unknown vertex {l:?}")),
        }
    }
    Ok(s)
}

fn configure_jobs(jobs: Option<usize>) {
    if let Some(j) = jobs {
        let _ = rayon::ThreadPoolBuilder::new().num_threads(j).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Solve { source, predominate, first, budget, no_prune } => {
            let (id, any) = match source.load() {
                Ok(x) => x,
                Err(e) => return usage_error(&e),
            };
            with_graph!(&any, g => {
                let pred = match resolve_set(g, &predominate) {
                    Ok(p) => p,
                    Err(e) => return usage_error(&e),
                };
                let mut ctx = SolveContext::new(&g.graph, pred).with_pruning(!no_prune);
                if let Some(b) = budget {
                    ctx = ctx.with_budget(b);
                }
                if let Some(cap) = memo_capacity_from_env() {
                    ctx = ctx.with_memo_capacity(cap);
                }
                let start = Instant::now();
                let solved = ctx.game_value(first.into());
                let mut record = ResultRecord {
                    graph: id,
                    predominated: predominate.clone(),
                    first: turn_name(first.into()),
                    value: None,
                    error: None,
                    nodes: ctx.nodes_expanded(),
                    elapsed_ms: start.elapsed().as_millis() as u64,
                };
                match solved {
                    Ok(v) => {
                        record.value = Some(JsonValue(v));
                        println!("{}", serde_json::to_string(&record).unwrap());
                        ExitCode::SUCCESS
                    }
                    Err(condog_core::Error::BudgetExceeded) => {
                        record.error = Some("budget exceeded".to_string());
                        println!("{}", serde_json::to_string(&record).unwrap());
                        ExitCode::from(3)
                    }
                    Err(e) => usage_error(&e.to_string()),
                }
            })
        }
        Command::Family { spec, format } => {
            let source = GraphSource { graph: None, family: Some(spec) };
            let (_, any) = match source.load() {
                Ok(x) => x,
                Err(e) => return usage_error(&e),
            };
            with_graph!(&any, g => match format {
                EmitFormat::Edgelist => print!("{}", emit_edgelist(g)),
                EmitFormat::Graph6 => println!("{}", emit_graph6(&g.graph)),
            });
            ExitCode::SUCCESS
        }
        Command::GammaC { source, predominate } => {
            let (id, any) = match source.load() {
                Ok(x) => x,
                Err(e) => return usage_error(&e),
            };
            with_graph!(&any, g => {
                let pred = match resolve_set(g, &predominate) {
                    Ok(p) => p,
                    Err(e) => return usage_error(&e),
                };
                match condog_core::connected_domination_number(&g.graph, pred) {
                    Ok(k) => {
                        println!(
                            "{}",
                            serde_json::json!({
                                "graph": id,
                                "predominated": predominate,
                                "gamma_c": k,
                            })
                        );
                        ExitCode::SUCCESS
                    }
                    Err(e) => usage_error(&e.to_string()),
                }
            })
        }
        Command::Isolate { source, x, first, player, convention } => {
            let (id, any) = match source.load() {
                Ok(x) => x,
                Err(e) => return usage_error(&e),
            };
            with_graph!(&any, g => {
                let Some(xv) = g.vertex(&x) else {
                    return usage_error(&format!("unknown vertex {x:?}"));
                };
                let winner = x_isolation_winner(
                    &g.graph,
                    xv,
                    first.into(),
                    player.into(),
                    convention.into(),
                );
                let line = x_isolation_line(
                    &g.graph,
                    xv,
                    first.into(),
                    player.into(),
                    convention.into(),
                )
                .map(|moves| {
                    moves
                        .iter()
                        .map(|&v| {
                            g.label_of(v).map(str::to_string).unwrap_or_else(|| v.0.to_string())
                        })
                        .collect::<Vec<_>>()
                });
                println!(
                    "{}",
                    serde_json::json!({
                        "graph": id,
                        "x": x,
                        "first": turn_name(first.into()),
                        "player": turn_name(player.into()),
                        "winner": winner,
                        "line": line,
                    })
                );
                ExitCode::SUCCESS
            })
        }
        Command::Verify { suite, corpus, jobs, budget } => {
            configure_jobs(jobs);
            let suites: Vec<Suite> = if suite == "all" {
                Suite::ALL.to_vec()
            } else {
                match Suite::parse(&suite) {
                    Some(s) => vec![s],
                    None => {
                        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
                        return usage_error(&format!(
                            "unknown suite {suite:?}; known: all, {}",
                            names.join(", ")
                        ));
                    }
                }
            };
            let graphs = if let Some(path) = &corpus {
                match load_corpus(path) {
                    Ok(g) => g,
                    Err(e) => return usage_error(&e.to_string()),
                }
            } else if suites.iter().any(|s| !s.is_family_sweep()) {
                return usage_error("--corpus is required for corpus suites");
            } else {
                Vec::new()
            };
            let reports: Vec<_> = suites.iter().map(|&s| run_suite(s, &graphs, budget)).collect();
            let failed = reports.iter().any(|r| !r.passed());
            if reports.len() == 1 {
                println!("{}", serde_json::to_string_pretty(&reports[0]).unwrap());
            } else {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            }
            if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Command::Census { corpus, jobs, budget } => {
            configure_jobs(jobs);
            let graphs = match load_corpus(&corpus) {
                Ok(g) => g,
                Err(e) => return usage_error(&e.to_string()),
            };
            print!("{}", sharpness_census(&graphs, budget));
            ExitCode::SUCCESS
        }
    }
}
