//! `toughham`: exact toughness, hamiltonicity and structure analysis over
//! graph6 or edge-list inputs.
//!
//! Exit codes: 0 success (and no claim failures), 1 a claim check failed
//! (counterexample found), 2 usage, input or parse errors.

use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use toughham_core::claims::ClaimId;
use toughham_core::enumerate::{EnumerationSpec, SOFT_ORDER_LIMIT};
use toughham_core::stream::{verify_lines, StreamRecord, StreamSummary};
use toughham_core::toughness::ToughnessValue;
use toughham_core::{
    disjoint_paths, encode_graph6, enumerate_graphs, extend_to_fixpoint, find_induced,
    hamiltonian_cycle, independence_number, is_free, longest_cycle, parse_edge_list, parse_graph6,
    random_graph, toughness_exact, vertex_connectivity, ExtensionStep, Graph, OrientedCycle,
    Pattern, Rational, VertexSet,
};

#[derive(Parser)]
#[command(name = "toughham", version, about = "Exact graph toughness and hamiltonicity toolkit")]
struct Cli {
    /// Output format for analysis commands.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Args)]
struct InputArg {
    /// Graph input: a file path, or `-` / absent for standard input.
    /// graph6 and edge-list text are auto-detected by the first byte.
    input: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Toughness, independence number, connectivity, minimum degree and
    /// pattern-freeness flags in one report.
    Analyze(InputArg),
    /// Exact toughness with a witness cut set.
    Toughness(InputArg),
    /// Exact independence number with a witness set.
    Alpha(InputArg),
    /// Induced-pattern freeness; reports an embedding when one exists.
    Free {
        /// One of: k2u3k1, k2u2k1, k2uk1, p4, k1up3.
        #[arg(long)]
        pattern: String,
        #[command(flatten)]
        input: InputArg,
    },
    /// Exact hamiltonicity with a cycle when one exists.
    Hamilton(InputArg),
    /// Exact longest cycle.
    LongestCycle(InputArg),
    /// K internally disjoint paths between two vertex sets.
    Menger {
        /// Comma-separated vertex list, e.g. 0,1,2.
        #[arg(long)]
        x1: String,
        #[arg(long)]
        x2: String,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        input: InputArg,
    },
    /// Applies the cycle-extension rules to a given cycle until they stall,
    /// emitting the step trace.
    Extend {
        /// Comma-separated cycle vertices, e.g. 0,1,2,3.
        #[arg(long)]
        cycle: String,
        #[command(flatten)]
        input: InputArg,
    },
    /// Runs claim checks over a graph6 stream (or an internal enumeration)
    /// and prints JSON-lines reports plus a summary.
    Verify {
        /// Comma-separated claim ids (THM1, L1.5, L2.2, L2.3, L2.5, L2.6,
        /// L2.7, C2a, C2b, C2c, C2d, C3, C4a, C4b) or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker count; defaults to TOUGHHAM_WORKERS or the number of CPUs.
        #[arg(long)]
        workers: Option<usize>,
        /// Verify every enumerated graph on 1..=N vertices instead of
        /// reading input.
        #[arg(long, conflicts_with = "input")]
        n_max: Option<usize>,
        /// Restrict the internal enumeration to connected graphs.
        #[arg(long, requires = "n_max")]
        connected: bool,
        #[command(flatten)]
        input: InputArg,
    },
    /// Streams one graph6 line per isomorphism class on N vertices.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        connected: bool,
    },
    /// One seeded Erdős–Rényi graph as a graph6 line.
    Random {
        #[arg(long)]
        n: usize,
        /// Edge probability as a fraction or decimal, e.g. 1/2 or 0.5.
        #[arg(long)]
        p: String,
        #[arg(long)]
        seed: u64,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: 2, message: message.into() }
    }
}

impl<E: std::error::Error> From<E> for Failure {
    fn from(err: E) -> Self {
        Failure { code: 2, message: err.to_string() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("toughham: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    let format = cli.format;
    match cli.command {
        Command::Analyze(input) => {
            let loaded = load_single(&input)?;
            analyze(&loaded, format);
            Ok(0)
        }
        Command::Toughness(input) => {
            let loaded = load_single(&input)?;
            warn_size(loaded.graph.order(), 20, "toughness");
            let result = toughness_exact(&loaded.graph);
            #[derive(Serialize)]
            struct Out {
                toughness: ToughnessValue,
                witness: Option<VertexSet>,
            }
            let out = Out { toughness: result.value, witness: result.witness };
            emit(format, &out, |t| {
                t.push(("toughness", out.toughness.to_string()));
                t.push(("witness", render_opt_set(&out.witness)));
            });
            Ok(0)
        }
        Command::Alpha(input) => {
            let loaded = load_single(&input)?;
            let result = independence_number(&loaded.graph);
            #[derive(Serialize)]
            struct Out {
                alpha: usize,
                witness: VertexSet,
            }
            let out = Out { alpha: result.size, witness: result.witness };
            emit(format, &out, |t| {
                t.push(("alpha", out.alpha.to_string()));
                t.push(("witness", render_set(&out.witness)));
            });
            Ok(0)
        }
        Command::Free { pattern, input } => {
            let loaded = load_single(&input)?;
            let pattern: Pattern = pattern.parse()?;
            let embedding = find_induced(&pattern.graph(), &loaded.graph);
            #[derive(Serialize)]
            struct Out {
                pattern: String,
                free: bool,
                embedding: Option<Vec<usize>>,
            }
            let out = Out {
                pattern: pattern.name().to_owned(),
                free: embedding.is_none(),
                embedding: embedding.map(|e| e.mapping().to_vec()),
            };
            emit(format, &out, |t| {
                t.push(("pattern", out.pattern.clone()));
                t.push(("free", out.free.to_string()));
                if let Some(e) = &out.embedding {
                    t.push(("embedding", render_list(e)));
                }
            });
            Ok(0)
        }
        Command::Hamilton(input) => {
            let loaded = load_single(&input)?;
            warn_size(loaded.graph.order(), 24, "hamiltonicity");
            let cycle = hamiltonian_cycle(&loaded.graph);
            #[derive(Serialize)]
            struct Out {
                hamiltonian: bool,
                cycle: Option<OrientedCycle>,
            }
            let out = Out { hamiltonian: cycle.is_some(), cycle };
            emit(format, &out, |t| {
                t.push(("hamiltonian", out.hamiltonian.to_string()));
                if let Some(c) = &out.cycle {
                    t.push(("cycle", render_list(c.vertices())));
                }
            });
            Ok(0)
        }
        Command::LongestCycle(input) => {
            let loaded = load_single(&input)?;
            warn_size(loaded.graph.order(), 16, "longest-cycle");
            let result = longest_cycle(&loaded.graph)?;
            #[derive(Serialize)]
            struct Out {
                circumference: usize,
                cycle: OrientedCycle,
                exact: bool,
            }
            let out = Out {
                circumference: result.circumference,
                cycle: result.cycle,
                exact: result.exact,
            };
            emit(format, &out, |t| {
                t.push(("circumference", out.circumference.to_string()));
                t.push(("cycle", render_list(out.cycle.vertices())));
                t.push(("exact", out.exact.to_string()));
            });
            Ok(0)
        }
        Command::Menger { x1, x2, k, input } => {
            let loaded = load_single(&input)?;
            let n = loaded.graph.order();
            let x1 = VertexSet::from_members(n, parse_vertex_list(&x1)?)?;
            let x2 = VertexSet::from_members(n, parse_vertex_list(&x2)?)?;
            let result = disjoint_paths(&loaded.graph, &x1, &x2, k)?;
            #[derive(Serialize)]
            struct Out {
                k: usize,
                paths: Vec<Vec<usize>>,
                endpoints: Vec<(usize, usize)>,
            }
            let out = Out {
                k,
                paths: result.paths.iter().map(|p| p.vertices().to_vec()).collect(),
                endpoints: result.endpoints,
            };
            emit(format, &out, |t| {
                t.push(("k", out.k.to_string()));
                for path in &out.paths {
                    t.push(("path", render_list(path)));
                }
            });
            Ok(0)
        }
        Command::Extend { cycle, input } => {
            let loaded = load_single(&input)?;
            let vertices = parse_vertex_list(&cycle)?;
            let start = OrientedCycle::new(&loaded.graph, vertices)?;
            let (cycle, steps) = extend_to_fixpoint(&loaded.graph, &start)?;
            #[derive(Serialize)]
            struct Out {
                steps: Vec<ExtensionStep>,
                cycle: OrientedCycle,
                hamiltonian: bool,
            }
            let hamiltonian = cycle.len() == loaded.graph.order();
            let out = Out { steps, cycle, hamiltonian };
            emit(format, &out, |t| {
                for step in &out.steps {
                    t.push(("step", format!("{} {} -> {}", step.rule, step.old_len, step.new_len)));
                }
                t.push(("cycle", render_list(out.cycle.vertices())));
                t.push(("hamiltonian", out.hamiltonian.to_string()));
            });
            Ok(0)
        }
        Command::Verify { checks, workers, n_max, connected, input } => {
            let checks = parse_checks(&checks)?;
            let workers = workers
                .or_else(|| {
                    std::env::var("TOUGHHAM_WORKERS").ok().and_then(|v| v.parse().ok())
                })
                .unwrap_or_else(|| {
                    std::thread::available_parallelism().map(|n| n.get()).unwrap_or(1)
                });
            let lines = match n_max {
                Some(n_max) => {
                    if n_max > SOFT_ORDER_LIMIT {
                        eprintln!(
                            "toughham: warning: enumeration above order {SOFT_ORDER_LIMIT} is exact but slow"
                        );
                    }
                    let mut lines = Vec::new();
                    for n in 1..=n_max {
                        let spec = EnumerationSpec { n, connected_only: connected, filters: vec![] };
                        for g in enumerate_graphs(&spec)? {
                            lines.push((lines.len() + 1, encode_graph6(&g)));
                        }
                    }
                    lines
                }
                None => stream_lines(&input)?,
            };
            let (records, summary) = verify_lines(&lines, &checks, workers);
            match format {
                Format::Json => {
                    for record in &records {
                        println!("{}", serde_json::to_string(record).expect("serializable"));
                    }
                    #[derive(Serialize)]
                    struct SummaryLine<'a> {
                        summary: &'a StreamSummary,
                    }
                    println!(
                        "{}",
                        serde_json::to_string(&SummaryLine { summary: &summary })
                            .expect("serializable")
                    );
                }
                Format::Table => {
                    for record in &records {
                        match record {
                            StreamRecord::Report { index, graph6, reports } => {
                                let cells: Vec<String> = reports
                                    .iter()
                                    .map(|r| format!("{}={:?}", r.claim, r.verdict))
                                    .collect();
                                println!("{index}\t{graph6}\t{}", cells.join(" "));
                            }
                            StreamRecord::ParseError { index, line, error } => {
                                println!("{index}\tparse error at line {line}: {error}");
                            }
                        }
                    }
                    println!("graphs\t{}", summary.graphs);
                    println!("parse_errors\t{}", summary.parse_errors);
                    for (claim, counts) in &summary.claims {
                        println!(
                            "{claim}\tpass={} fail={} hypotheses-not-met={}",
                            counts.pass, counts.fail, counts.hypotheses_not_met
                        );
                    }
                }
            }
            if summary.any_fail() {
                Ok(1)
            } else if summary.parse_errors > 0 {
                Ok(2)
            } else {
                Ok(0)
            }
        }
        Command::Enumerate { n, connected } => {
            if n > SOFT_ORDER_LIMIT {
                eprintln!(
                    "toughham: warning: enumeration above order {SOFT_ORDER_LIMIT} is exact but slow"
                );
            }
            let spec = EnumerationSpec { n, connected_only: connected, filters: vec![] };
            for g in enumerate_graphs(&spec)? {
                println!("{}", encode_graph6(&g));
            }
            Ok(0)
        }
        Command::Random { n, p, seed } => {
            let p = Rational::from_str(&p)?;
            let g = random_graph(n, p, seed)?;
            println!("{}", encode_graph6(&g));
            Ok(0)
        }
    }
}

fn analyze(loaded: &LoadedGraph, format: Format) {
    let g = &loaded.graph;
    warn_size(g.order(), 20, "analyze");
    #[derive(Serialize)]
    struct Out {
        n: usize,
        m: usize,
        delta: Option<usize>,
        toughness: ToughnessValue,
        alpha: usize,
        kappa: usize,
        k2u3k1_free: bool,
        k2u2k1_free: bool,
        k2uk1_free: bool,
        p4_free: bool,
        k1up3_free: bool,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<u64>>,
    }
    let out = Out {
        n: g.order(),
        m: g.edge_count(),
        delta: g.min_degree(),
        toughness: toughness_exact(g).value,
        alpha: independence_number(g).size,
        kappa: vertex_connectivity(g),
        k2u3k1_free: is_free(g, &Pattern::K2U3K1.graph()),
        k2u2k1_free: is_free(g, &Pattern::K2U2K1.graph()),
        k2uk1_free: is_free(g, &Pattern::K2UK1.graph()),
        p4_free: is_free(g, &Pattern::P4.graph()),
        k1up3_free: is_free(g, &Pattern::K1UP3.graph()),
        labels: loaded.labels.clone(),
    };
    emit(format, &out, |t| {
        t.push(("n", out.n.to_string()));
        t.push(("m", out.m.to_string()));
        t.push(("delta", out.delta.map_or("-".into(), |d| d.to_string())));
        t.push(("toughness", out.toughness.to_string()));
        t.push(("alpha", out.alpha.to_string()));
        t.push(("kappa", out.kappa.to_string()));
        t.push(("k2u3k1_free", out.k2u3k1_free.to_string()));
        t.push(("k2u2k1_free", out.k2u2k1_free.to_string()));
        t.push(("k2uk1_free", out.k2uk1_free.to_string()));
        t.push(("p4_free", out.p4_free.to_string()));
        t.push(("k1up3_free", out.k1up3_free.to_string()));
    });
}

struct LoadedGraph {
    graph: Graph,
    labels: Option<Vec<u64>>,
}

fn read_input(input: &InputArg) -> Result<String, Failure> {
    match &input.input {
        Some(path) if path.as_os_str() != "-" => std::fs::read_to_string(path)
            .map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display()))),
        _ => {
            let mut text = String::new();
            std::io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| Failure::usage(format!("cannot read standard input: {e}")))?;
            Ok(text)
        }
    }
}

/// Edge lists start with a decimal vertex label; everything in the graph6
/// printable range starts at `?` (63), so the first byte settles the format.
fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .find(|l| !l.trim().is_empty())
        .is_some_and(|l| l.trim_start().starts_with(|c: char| c.is_ascii_digit()))
}

fn load_single(input: &InputArg) -> Result<LoadedGraph, Failure> {
    let text = read_input(input)?;
    if looks_like_edge_list(&text) {
        let parsed = parse_edge_list(&text)?;
        if let Some(labels) = &parsed.labels {
            eprintln!(
                "toughham: note: sparse labels re-indexed; vertex i corresponds to input label {:?}",
                labels
            );
        }
        Ok(LoadedGraph { graph: parsed.graph, labels: parsed.labels })
    } else {
        let line = text
            .lines()
            .find(|l| !l.trim().is_empty())
            .ok_or_else(|| Failure::usage("empty input"))?;
        Ok(LoadedGraph { graph: parse_graph6(line.trim())?, labels: None })
    }
}

/// A graph6 stream with 1-based line numbers; edge-list input becomes a
/// single-graph stream.
fn stream_lines(input: &InputArg) -> Result<Vec<(usize, String)>, Failure> {
    let text = read_input(input)?;
    if looks_like_edge_list(&text) {
        let parsed = parse_edge_list(&text)?;
        return Ok(vec![(1, encode_graph6(&parsed.graph))]);
    }
    Ok(text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l.trim().to_owned()))
        .collect())
}

fn parse_vertex_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Failure::usage(format!("invalid vertex {tok:?}")))
        })
        .collect()
}

fn parse_checks(text: &str) -> Result<Vec<ClaimId>, Failure> {
    if text.eq_ignore_ascii_case("all") {
        return Ok(ClaimId::REGISTRY.to_vec());
    }
    text.split(',')
        .map(|tok| tok.trim().parse::<ClaimId>().map_err(Failure::from))
        .collect()
}

fn warn_size(n: usize, comfort: usize, what: &str) {
    if n > comfort {
        eprintln!(
            "toughham: warning: {what} is exact but exponential; order {n} exceeds the comfortable limit {comfort}"
        );
    }
}

type TableRows = Vec<(&'static str, String)>;

fn emit<T: Serialize>(format: Format, value: &T, table: impl FnOnce(&mut TableRows)) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(value).expect("serializable")),
        Format::Table => {
            let mut rows = TableRows::new();
            table(&mut rows);
            for (key, val) in rows {
                println!("{key}\t{val}");
            }
        }
    }
}

fn render_list(values: &[usize]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

fn render_set(set: &VertexSet) -> String {
    render_list(&set.to_vec())
}

fn render_opt_set(set: &Option<VertexSet>) -> String {
    set.as_ref().map_or("-".into(), render_set)
}
