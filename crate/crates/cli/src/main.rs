use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{Context, Result};
use burnkit::bench::{run_bench, BenchError, BenchSpec};
use burnkit::burning::DEFAULT_EXACT_LIMIT;
use burnkit::generate::Family;
use burnkit::spanning::{
    burning_number_via_spanning_trees, find_hist, hist_bound, SpanningConfig, SpanningError,
    DEFAULT_HIST_LIMIT, DEFAULT_TREE_LIMIT,
};
use burnkit::{
    hit_schedule, modified_burning_number_exact_with, simulate_modified,
    tree_schedule_via_augmentation, BurnError, ExactConfig, Graph, HitError, ModifiedSchedule,
    Tree, Vertex,
};
use clap::{Parser, Subcommand};
use serde::{Deserialize, Serialize};

/// Graph burning: simulation, exact burning numbers and certified schedules.
///
/// Graphs are read as edge lists: a header line `n m`, then `m` lines `u v`
/// with 0-based vertex ids. Pass `-` to read from stdin.
///
/// Exit status: 0 on success, 1 when a schedule or plan fails verification,
/// 2 on bad input.
#[derive(Parser)]
#[command(name = "burnkit", version)]
struct Cli {
    /// Largest graph order handed to the exact solver.
    #[arg(long, global = true, value_name = "N")]
    limit_exact: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a schedule and print the burn round of every vertex as JSON.
    Burn {
        graph: PathBuf,
        /// Source for each round, comma separated.
        #[arg(long, value_delimiter = ',', required = true, num_args = 1..)]
        sources: Vec<Vertex>,
        /// Vertices burned together with the first source.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        preburn: Vec<Vertex>,
    },
    /// Exact burning number and the lexicographically first optimal schedule.
    Solve {
        graph: PathBuf,
        /// Fixed pre-burned set; solves the modified problem.
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        preburn: Vec<Vertex>,
    },
    /// Certified plan within ceil(sqrt n) rounds for a tree without degree-2 vertices.
    HitPlan { tree: PathBuf },
    /// Certified plan within ceil(sqrt(n + d)) rounds for any tree with d degree-2 vertices.
    TreePlan { tree: PathBuf },
    /// Search for a spanning tree without degree-2 vertices and print it as an edge list.
    Hist {
        graph: PathBuf,
        /// Print a certified plan built from the spanning tree instead.
        #[arg(long)]
        plan: bool,
        /// Largest graph order the search accepts.
        #[arg(long, default_value_t = DEFAULT_HIST_LIMIT)]
        max_order: usize,
    },
    /// Minimum exact burning number over all spanning trees.
    SpanningMin {
        graph: PathBuf,
        /// Refuse graphs with more spanning trees than this.
        #[arg(long, default_value_t = DEFAULT_TREE_LIMIT)]
        tree_limit: u64,
    },
    /// Generate a graph from a named family and print it as an edge list.
    ///
    /// Families: path N, cycle N, star N, complete N, spider L1 L2 ...,
    /// petersen, random_tree N, random_hit N, random_connected N P.
    Gen {
        family: String,
        params: Vec<String>,
        #[arg(long, env = "BURNKIT_SEED", default_value_t = 0)]
        seed: u64,
        /// Write to a file instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Check a schedule or certified plan (JSON) against a graph.
    Verify { graph: PathBuf, plan: PathBuf },
    /// Run a benchmark spec (JSON). CSV rows go to stdout unless --csv is given.
    Bench {
        spec: PathBuf,
        /// Write CSV rows here; the summary table then goes to stdout.
        #[arg(long, value_name = "PATH")]
        csv: Option<PathBuf>,
    },
}

/// A schedule or plan that ran but did not hold up.
#[derive(Debug)]
struct VerifyFailed(String);

impl std::fmt::Display for VerifyFailed {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerifyFailed {}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    fn hit_failed(e: &HitError) -> bool {
        matches!(
            e,
            HitError::LiftVerificationFailed(_)
                | HitError::ProjectionVerificationFailed(_)
                | HitError::Invariant(_)
                | HitError::Burn(BurnError::WitnessRejected(_))
        )
    }
    for cause in err.chain() {
        let failed = cause.is::<VerifyFailed>()
            || cause
                .downcast_ref::<BurnError>()
                .is_some_and(|e| matches!(e, BurnError::WitnessRejected(_)))
            || cause.downcast_ref::<HitError>().is_some_and(hit_failed)
            || cause.downcast_ref::<SpanningError>().is_some_and(|e| match e {
                SpanningError::HostVerificationFailed(_) => true,
                SpanningError::Hit(h) => hit_failed(h),
                SpanningError::Burn(b) => matches!(b, BurnError::WitnessRejected(_)),
                _ => false,
            })
            || cause
                .downcast_ref::<BenchError>()
                .is_some_and(|e| matches!(e, BenchError::Violation { .. }));
        if failed {
            return 1;
        }
    }
    2
}

fn read_text(path: &Path) -> Result<String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).context("reading stdin")?;
        Ok(s)
    } else {
        fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
    }
}

fn read_graph(path: &Path) -> Result<Graph> {
    Graph::parse_edge_list(&read_text(path)?).with_context(|| format!("parsing {}", path.display()))
}

fn read_tree(path: &Path) -> Result<Tree> {
    Tree::new(read_graph(path)?).with_context(|| format!("{} is not a tree", path.display()))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string(value)?);
    Ok(())
}

#[derive(Serialize)]
struct Solved<'a> {
    k: usize,
    #[serde(skip_serializing_if = "<[_]>::is_empty")]
    preburn: &'a [Vertex],
    sources: &'a [Vertex],
    nodes: u64,
}

#[derive(Serialize)]
struct SpanningOut<'a> {
    k: usize,
    sources: &'a [Vertex],
    tree_index: usize,
    trees_examined: usize,
    tree: Vec<(Vertex, Vertex)>,
}

/// Anything with `sources`: a bare schedule, or a certified plan whose bound,
/// rounds and completion are checked as well.
#[derive(Deserialize)]
struct PlanFile {
    #[serde(default)]
    preburn: Vec<Vertex>,
    sources: Vec<Vertex>,
    bound: Option<usize>,
    rounds: Option<Vec<usize>>,
    completion: Option<usize>,
}

fn run(cli: Cli) -> Result<()> {
    let exact = ExactConfig {
        max_order: cli.limit_exact.unwrap_or(DEFAULT_EXACT_LIMIT),
    };
    match cli.command {
        Command::Burn {
            graph,
            sources,
            preburn,
        } => {
            let g = read_graph(&graph)?;
            let m = ModifiedSchedule::new(preburn, sources)?;
            print_json(&simulate_modified(&g, &m)?)
        }
        Command::Solve { graph, preburn } => {
            let g = read_graph(&graph)?;
            let sol = modified_burning_number_exact_with(&g, &preburn, &exact)?;
            print_json(&Solved {
                k: sol.k,
                preburn: sol.witness.preburn(),
                sources: sol.witness.sources(),
                nodes: sol.nodes,
            })
        }
        Command::HitPlan { tree } => print_json(&hit_schedule(&read_tree(&tree)?)?),
        Command::TreePlan { tree } => print_json(&tree_schedule_via_augmentation(&read_tree(&tree)?)?),
        Command::Hist {
            graph,
            plan,
            max_order,
        } => {
            let g = read_graph(&graph)?;
            if plan {
                match hist_bound(&g, max_order)? {
                    Some(p) => print_json(&p)?,
                    None => eprintln!("no spanning tree without degree-2 vertices"),
                }
            } else {
                let res = find_hist(&g, max_order)?;
                match res.tree {
                    Some(t) => print!("{}", t.graph().to_edge_list()),
                    None => eprintln!("no spanning tree without degree-2 vertices ({} nodes searched)", res.nodes),
                }
            }
            Ok(())
        }
        Command::SpanningMin { graph, tree_limit } => {
            let g = read_graph(&graph)?;
            let cfg = SpanningConfig { tree_limit, exact };
            let best = burning_number_via_spanning_trees(&g, &cfg)?;
            print_json(&SpanningOut {
                k: best.k,
                sources: best.schedule.sources(),
                tree_index: best.tree_index,
                trees_examined: best.trees_examined,
                tree: best.tree.graph().edges().collect(),
            })
        }
        Command::Gen {
            family,
            params,
            seed,
            output,
        } => {
            let g = Family::parse(&family, &params, seed)?.generate()?;
            let text = g.to_edge_list();
            match output {
                Some(path) => fs::write(&path, text).with_context(|| format!("writing {}", path.display())),
                None => {
                    io::stdout().write_all(text.as_bytes())?;
                    Ok(())
                }
            }
        }
        Command::Verify { graph, plan } => {
            let g = read_graph(&graph)?;
            let file: PlanFile = serde_json::from_str(&read_text(&plan)?)
                .with_context(|| format!("parsing {}", plan.display()))?;
            let m = ModifiedSchedule::new(file.preburn, file.sources)?;
            let bm = simulate_modified(&g, &m)?;
            print_json(&bm)?;
            let Some(completion) = bm.completion() else {
                return Err(VerifyFailed("schedule leaves vertices unburned".into()).into());
            };
            if let Some(bound) = file.bound {
                if m.len() > bound {
                    return Err(VerifyFailed(format!("{} rounds exceed the bound {bound}", m.len())).into());
                }
            }
            if let Some(rounds) = file.rounds {
                let simulated: Vec<usize> = bm.rounds().iter().map(|r| r.unwrap_or(0)).collect();
                if rounds != simulated {
                    return Err(VerifyFailed("recorded rounds differ from simulation".into()).into());
                }
            }
            if file.completion.is_some_and(|c| c != completion) {
                return Err(VerifyFailed(format!("simulation completes in round {completion}")).into());
            }
            Ok(())
        }
        Command::Bench { spec, csv } => {
            let mut spec: BenchSpec = serde_json::from_str(&read_text(&spec)?)
                .with_context(|| format!("parsing {}", spec.display()))?;
            if let Some(limit) = cli.limit_exact {
                spec.exact_limit = limit;
            }
            let report = run_bench(&spec)?;
            match csv {
                Some(path) if path.as_os_str() != "-" => {
                    let file = fs::File::create(&path).with_context(|| format!("creating {}", path.display()))?;
                    report.write_csv(file)?;
                    print!("{report}");
                }
                _ => {
                    report.write_csv(io::stdout().lock())?;
                    eprint!("{report}");
                }
            }
            Ok(())
        }
    }
}
