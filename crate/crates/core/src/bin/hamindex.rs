//! Command-line front end: parse `.gr`/`.td` files, dispatch the solvers,
//! print results as text or JSON.
//!
//! Exit codes: 0 = ran (answer in output), 2 = bad input, 3 = resource
//! budget exceeded, 4 = crosscheck mismatch.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use hamindex::dp::{self, Problem, SolveConfig, SolveError, SolveStats};
use hamindex::graph::{Graph, VertexId};
use hamindex::hindex::{hamiltonian_index, HindexError, HindexOutcome};
use hamindex::io;
use hamindex::oracle::{self, OracleBudget};
use hamindex::treedec::{heuristic_decompose, TreeDecomposition};

#[derive(Parser)]
#[command(name = "hamindex", version, about = "Eulerian subgraph and Hamiltonian index solvers for bounded treewidth")]
struct Cli {
    /// Emit a JSON result record instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads for per-state table reduction (default 1).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(clap::Args)]
struct GraphArgs {
    /// Input graph in .gr format.
    #[arg(long)]
    graph: PathBuf,
    /// Optional tree decomposition in .td format; derived heuristically
    /// when absent.
    #[arg(long)]
    td: Option<PathBuf>,
    /// Also report a solution subgraph.
    #[arg(long)]
    witness: bool,
}

#[derive(Subcommand)]
enum Cmd {
    /// Eulerian subgraph containing a given terminal set.
    Ess {
        #[command(flatten)]
        common: GraphArgs,
        /// Comma-separated 1-indexed terminals, e.g. 1,4,7.
        #[arg(long, value_delimiter = ',')]
        terminals: Vec<usize>,
        /// Terminals from a .t file instead.
        #[arg(long, conflicts_with = "terminals")]
        terminals_file: Option<PathBuf>,
    },
    /// Spanning Eulerian subgraph (supereulerian test).
    Ses {
        #[command(flatten)]
        common: GraphArgs,
    },
    /// Dominating Eulerian subgraph.
    Des {
        #[command(flatten)]
        common: GraphArgs,
    },
    /// Hamiltonian cycle.
    Hc {
        #[command(flatten)]
        common: GraphArgs,
    },
    /// The Hamiltonian index h(G), or the decision h(G) <= R.
    Hindex {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: Option<PathBuf>,
        /// Decide h(G) <= R instead of computing the exact value.
        #[arg(long)]
        max_r: Option<usize>,
    },
    /// Iterated line graph, printed in .gr format.
    Linegraph {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        iterations: usize,
        /// Abort when an intermediate graph exceeds this many edges.
        #[arg(long, default_value_t = 1_000_000)]
        cap: usize,
    },
    /// Heuristic tree decomposition, printed in .td format.
    Decompose {
        #[arg(long)]
        graph: PathBuf,
    },
    /// Validate a decomposition against a graph and print its width.
    ValidateTd {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        td: PathBuf,
    },
    /// Cross-check the solvers against brute-force oracles.
    Crosscheck {
        /// Largest vertex count to enumerate exhaustively.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

const EXIT_BAD_INPUT: u8 = 2;
const EXIT_RESOURCE: u8 = 3;
const EXIT_MISMATCH: u8 = 4;

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn bad(message: impl Into<String>) -> Self {
        Failure { code: EXIT_BAD_INPUT, message: message.into() }
    }
    fn resource(message: impl Into<String>) -> Self {
        Failure { code: EXIT_RESOURCE, message: message.into() }
    }
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::bad(e.to_string())
    }
}

impl From<SolveError> for Failure {
    fn from(e: SolveError) -> Self {
        if e.is_resource() {
            Failure::resource(e.to_string())
        } else {
            Failure::bad(e.to_string())
        }
    }
}

impl From<HindexError> for Failure {
    fn from(e: HindexError) -> Self {
        match e {
            HindexError::Solve(s) => s.into(),
            HindexError::Stuck => Failure::resource(e.to_string()),
            _ => Failure::bad(e.to_string()),
        }
    }
}

fn read_file(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::bad(format!("{}: {e}", path.display())))
}

fn load_graph(path: &PathBuf) -> Result<Graph, Failure> {
    Ok(io::parse_gr(&read_file(path)?)?)
}

fn load_td(g: &Graph, td: &Option<PathBuf>) -> Result<TreeDecomposition, Failure> {
    match td {
        Some(p) => {
            let td = io::parse_td(&read_file(p)?)?;
            td.validate(g).map_err(|e| Failure::bad(e.to_string()))?;
            Ok(td)
        }
        None => Ok(heuristic_decompose(g)),
    }
}

fn stats_json(stats: &SolveStats, wall_ms: u128) -> serde_json::Value {
    json!({
        "width": stats.width,
        "nodes": stats.nodes,
        "max_table_size": stats.max_table_size,
        "wall_ms": wall_ms,
    })
}

struct Report {
    command: &'static str,
    answer: String,
    value: Option<i64>,
    witness: Option<(Vec<usize>, Vec<(usize, usize)>)>,
    stats: Option<(SolveStats, u128)>,
}

fn emit(json_mode: bool, r: &Report) {
    if json_mode {
        let mut obj = json!({
            "command": r.command,
            "answer": r.answer,
        });
        let map = obj.as_object_mut().unwrap();
        if let Some(v) = r.value {
            map.insert("value".into(), json!(v));
        }
        if let Some((verts, edges)) = &r.witness {
            map.insert(
                "witness".into(),
                json!({
                    "vertices": verts,
                    "edges": edges.iter().map(|&(u, v)| vec![u, v]).collect::<Vec<_>>(),
                }),
            );
        }
        if let Some((stats, ms)) = &r.stats {
            map.insert("stats".into(), stats_json(stats, *ms));
        }
        println!("{obj}");
    } else {
        println!("answer: {}", r.answer);
        if let Some(v) = r.value {
            println!("value: {v}");
        }
        if let Some((verts, edges)) = &r.witness {
            println!(
                "witness vertices: {}",
                verts.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
            );
            println!(
                "witness edges: {}",
                edges
                    .iter()
                    .map(|(u, v)| format!("{u}-{v}"))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
        }
        if let Some((stats, ms)) = &r.stats {
            println!(
                "stats: width={} nodes={} max_table_size={} wall_ms={ms}",
                stats.width, stats.nodes, stats.max_table_size
            );
        }
    }
}

fn run_decision(
    command: &'static str,
    common: &GraphArgs,
    problem_of: impl FnOnce(&Graph) -> Result<Problem, Failure>,
    json_mode: bool,
    cfg: &SolveConfig,
) -> Result<(), Failure> {
    let g = load_graph(&common.graph)?;
    let td = load_td(&g, &common.td)?;
    let problem = problem_of(&g)?;
    let start = Instant::now();
    let (answer, witness, stats) = if common.witness {
        let (w, stats) = dp::extract_witness(&g, &problem, &td, cfg)?;
        let yes = w.is_some();
        let w = w.map(|w| {
            (
                w.vertices.iter().map(|v| v.0 + 1).collect::<Vec<_>>(),
                w.edges
                    .iter()
                    .map(|&e| {
                        let (u, v) = g.endpoints(e);
                        (u.0 + 1, v.0 + 1)
                    })
                    .collect::<Vec<_>>(),
            )
        });
        (yes, w, stats)
    } else {
        let (yes, stats) = match &problem {
            Problem::Ess(k) => dp::solve_ess(&g, k, &td, cfg)?,
            Problem::Ses => dp::solve_ses(&g, &td, cfg)?,
            Problem::Des => dp::solve_des(&g, &td, cfg)?,
            Problem::Hc => dp::solve_hc(&g, &td, cfg)?,
        };
        (yes, None, stats)
    };
    let ms = start.elapsed().as_millis();
    emit(
        json_mode,
        &Report {
            command,
            answer: if answer { "yes" } else { "no" }.into(),
            value: None,
            witness,
            stats: Some((stats, ms)),
        },
    );
    Ok(())
}

fn parse_terminal_args(
    g: &Graph,
    terminals: &[usize],
    file: &Option<PathBuf>,
) -> Result<Vec<VertexId>, Failure> {
    let ids: Vec<VertexId> = match file {
        Some(p) => io::parse_terminals(&read_file(p)?)?,
        None => terminals
            .iter()
            .map(|&t| {
                if t == 0 {
                    Err(Failure::bad("terminals are 1-indexed"))
                } else {
                    Ok(VertexId(t - 1))
                }
            })
            .collect::<Result<_, _>>()?,
    };
    for &t in &ids {
        if !g.has_vertex(t) {
            return Err(Failure::bad(format!("terminal {} is not a vertex", t.0 + 1)));
        }
    }
    Ok(ids)
}

fn run_hindex(
    graph: &PathBuf,
    td: &Option<PathBuf>,
    max_r: Option<usize>,
    json_mode: bool,
    cfg: &SolveConfig,
) -> Result<(), Failure> {
    let g = load_graph(graph)?;
    let td = load_td(&g, td)?;
    let start = Instant::now();
    let (out, stats) = hamiltonian_index(&g, Some(&td), max_r, cfg)?;
    let ms = start.elapsed().as_millis();
    let (answer, value) = match (out, max_r) {
        (HindexOutcome::Exact(h), None) => (format!("{h}"), Some(h as i64)),
        (HindexOutcome::Exact(h), Some(r)) => (format!("yes: h = {h} <= {r}"), Some(h as i64)),
        (HindexOutcome::AtMostCap, Some(r)) => (format!("yes: h <= {r}"), None),
        (HindexOutcome::AboveCap, Some(r)) => (format!("no: h > {r}"), None),
        (HindexOutcome::AtMostCap | HindexOutcome::AboveCap, None) => unreachable!(),
    };
    emit(
        json_mode,
        &Report {
            command: "hindex",
            answer,
            value,
            witness: None,
            stats: Some((stats, ms)),
        },
    );
    Ok(())
}

fn run_crosscheck(max_n: usize, json_mode: bool, cfg: &SolveConfig) -> Result<(), Failure> {
    let budget = OracleBudget::default();
    let mut checked = 0usize;
    for n in 1..=max_n {
        for g in oracle::connected_graphs(n) {
            let td = heuristic_decompose(&g);
            let mismatch = |what: &str, got: bool, want: bool| {
                Failure {
                    code: EXIT_MISMATCH,
                    message: format!("{what} mismatch on {g:?}: solver {got}, oracle {want}"),
                }
            };
            let (hc, _) = dp::solve_hc(&g, &td, cfg)?;
            let hc_want = oracle::brute_hamiltonian(&g, &budget)
                .map_err(|e| Failure::resource(e.to_string()))?;
            if hc != hc_want {
                return Err(mismatch("hc", hc, hc_want));
            }
            let (des, _) = dp::solve_des(&g, &td, cfg)?;
            let des_want = oracle::brute_des(&g, &budget)
                .map_err(|e| Failure::resource(e.to_string()))?;
            if des != des_want {
                return Err(mismatch("des", des, des_want));
            }
            let (ses, _) = dp::solve_ses(&g, &td, cfg)?;
            let ses_want = oracle::brute_ses(&g, &budget)
                .map_err(|e| Failure::resource(e.to_string()))?;
            if ses != ses_want {
                return Err(mismatch("ses", ses, ses_want));
            }
            // Every terminal subset for the Steiner variant.
            let verts = g.vertices().to_vec();
            for mask in 0u32..(1 << n) {
                let k: Vec<VertexId> = verts
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let (ess, _) = dp::solve_ess(&g, &k, &td, cfg)?;
                let want = oracle::brute_eulerian_steiner(&g, &k, &budget)
                    .map_err(|e| Failure::resource(e.to_string()))?;
                if ess != want {
                    return Err(Failure {
                        code: EXIT_MISMATCH,
                        message: format!("ess mismatch on {g:?} K={k:?}: solver {ess}, oracle {want}"),
                    });
                }
            }
            if !g.is_path() {
                if let Ok(want) = oracle::brute_hindex(&g, &budget) {
                    let (out, _) = hamiltonian_index(&g, Some(&td), None, cfg)?;
                    if out != HindexOutcome::Exact(want) {
                        return Err(Failure {
                            code: EXIT_MISMATCH,
                            message: format!("hindex mismatch on {g:?}: solver {out:?}, oracle {want}"),
                        });
                    }
                }
            }
            checked += 1;
        }
    }
    emit(
        json_mode,
        &Report {
            command: "crosscheck",
            answer: "ok".into(),
            value: Some(checked as i64),
            witness: None,
            stats: None,
        },
    );
    Ok(())
}

fn run(cli: Cli) -> Result<(), Failure> {
    let mut cfg = SolveConfig::default();
    if let Some(t) = cli.threads {
        if t == 0 {
            return Err(Failure::bad("--threads must be at least 1"));
        }
        if t > 1 {
            cfg.parallel = true;
            rayon::ThreadPoolBuilder::new()
                .num_threads(t)
                .build_global()
                .map_err(|e| Failure::bad(e.to_string()))?;
        }
    }
    let json_mode = cli.json;
    match cli.cmd {
        Cmd::Ess { common, terminals, terminals_file } => run_decision(
            "ess",
            &common,
            |g| Ok(Problem::Ess(parse_terminal_args(g, &terminals, &terminals_file)?)),
            json_mode,
            &cfg,
        ),
        Cmd::Ses { common } => run_decision("ses", &common, |_| Ok(Problem::Ses), json_mode, &cfg),
        Cmd::Des { common } => run_decision("des", &common, |_| Ok(Problem::Des), json_mode, &cfg),
        Cmd::Hc { common } => run_decision("hc", &common, |_| Ok(Problem::Hc), json_mode, &cfg),
        Cmd::Hindex { graph, td, max_r } => run_hindex(&graph, &td, max_r, json_mode, &cfg),
        Cmd::Linegraph { graph, iterations, cap } => {
            let g = load_graph(&graph)?;
            let out = g
                .iterated_line_graph(iterations, cap)
                .map_err(|e| Failure::resource(e.to_string()))?;
            print!("{}", io::write_gr(&out));
            Ok(())
        }
        Cmd::Decompose { graph } => {
            let g = load_graph(&graph)?;
            let td = heuristic_decompose(&g);
            print!("{}", io::write_td(&td, g.num_vertices()));
            Ok(())
        }
        Cmd::ValidateTd { graph, td } => {
            let g = load_graph(&graph)?;
            let td = io::parse_td(&read_file(&td)?)?;
            let width = td.validate(&g).map_err(|e| Failure::bad(e.to_string()))?;
            emit(
                json_mode,
                &Report {
                    command: "validate-td",
                    answer: "valid".into(),
                    value: Some(width as i64),
                    witness: None,
                    stats: None,
                },
            );
            Ok(())
        }
        Cmd::Crosscheck { max_n } => run_crosscheck(max_n, json_mode, &cfg),
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
