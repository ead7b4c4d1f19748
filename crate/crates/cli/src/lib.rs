//! Command-line front end. Every subcommand prints one JSON envelope
//! `{status, payload, elapsed_ms}` on stdout (or plain text with
//! `--format text`); diagnostics go to stderr.

use std::fs;
use std::io::Read;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use hereditary::format::{encode_graph6, parse_graph, parse_graph6};
use hereditary::oracle::{enumerate_all_graphs, generate, GeneratorSpec, GraphClass};
use hereditary::properties::{builtin_descriptors, lookup};
use hereditary::ramsey::{fpt_size_cutoff, ramsey_upper_bound};
use hereditary::reductions::{reduce, verify_reduction_equivalence, ReductionKind};
use hereditary::solver::solve_via_sgi;
use hereditary::{solve, Graph, ProblemInstance};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MODULE_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "hereditary", version, about = "Induced subgraphs with hereditary properties")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = OutputFormat::Json, global = true)]
    format: OutputFormat,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum KindArg {
    Strong,
    Join,
}

impl From<KindArg> for ReductionKind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Strong => ReductionKind::StrongProduct,
            KindArg::Join => ReductionKind::Join,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Decide whether the graph has k vertices inducing a member of --pi.
    Solve {
        /// Class the input graph is promised to lie in.
        #[arg(long)]
        pig: String,
        /// Property the induced subgraph must have.
        #[arg(long)]
        pi: String,
        #[arg(short)]
        k: usize,
        /// Search by induced subgraph isomorphism against every k-vertex pattern.
        #[arg(long)]
        via_sgi: bool,
        /// Skip testing the input against --pig.
        #[arg(long)]
        no_check_class: bool,
        /// graph6 or edge-list file; `-` reads stdin.
        graph: String,
    },
    /// Print a property descriptor.
    Classify {
        #[arg(long)]
        pi: String,
    },
    /// Reduce independent set on the graph to the problem for --pi.
    Reduce {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        pi: String,
        #[arg(short)]
        k: usize,
        /// Write PREFIX.g6 and PREFIX.json instead of inlining the graph.
        #[arg(long)]
        out: Option<String>,
        graph: String,
    },
    /// Check the reduction equivalence by exact oracles.
    VerifyReduction {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        pi: String,
        /// Parameter; every k in 1..=n when omitted.
        #[arg(short)]
        k: Option<usize>,
        /// Check every labeled graph on this many vertices.
        #[arg(long, conflicts_with = "graph")]
        all_graphs: Option<usize>,
        /// Write one CSV row per instance to this path.
        #[arg(long)]
        csv: Option<String>,
        /// graph6 file with one graph per line, or one edge-list graph.
        #[arg(required_unless_present = "all_graphs")]
        graph: Option<String>,
    },
    /// Generate a seeded random graph.
    Gen {
        #[arg(long)]
        class: String,
        #[arg(short)]
        n: usize,
        /// Edge density (every class except unit-disk).
        #[arg(long, conflicts_with = "radius")]
        density: Option<f64>,
        /// Disk radius in unit-square coordinates (unit-disk only).
        #[arg(long)]
        radius: Option<f64>,
        #[arg(long)]
        seed: u64,
        /// Write PREFIX.g6 (and PREFIX.points for unit-disk).
        #[arg(long)]
        out: Option<String>,
    },
    /// Binomial Ramsey bound C(r+s-2, r-1) and the size cutoff C(k+t-2, k-1) with k = r, t = s.
    Bound { r: u64, s: u64 },
    /// List the built-in property names.
    Props,
}

/// What one invocation produced.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Envelope<'a> {
    status: &'a str,
    payload: &'a Value,
    elapsed_ms: u64,
}

/// A failure with its stable kind string.
#[derive(Debug)]
struct Failure {
    kind: String,
    message: String,
    exit_code: i32,
}

impl From<hereditary::Error> for Failure {
    fn from(e: hereditary::Error) -> Self {
        Failure { kind: e.kind().to_string(), message: e.to_string(), exit_code: EXIT_MODULE_ERROR }
    }
}

fn io_failure(path: &str, e: std::io::Error) -> Failure {
    Failure { kind: "IoError".into(), message: format!("{path}: {e}"), exit_code: EXIT_MODULE_ERROR }
}

fn invalid(message: impl Into<String>) -> Failure {
    hereditary::Error::InvalidArgument(message.into()).into()
}

/// Runs one command line; `args[0]` is the program name.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let start = Instant::now();
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Outcome { exit_code: EXIT_OK, stdout: e.to_string(), stderr: String::new() };
            }
            let failure = Failure { kind: "UsageError".into(), message: e.to_string(), exit_code: EXIT_USAGE };
            return render(OutputFormat::Json, Err(failure), start);
        }
    };
    let result = execute(cli.command);
    render(cli.format, result, start)
}

fn render(format: OutputFormat, result: Result<Value, Failure>, start: Instant) -> Outcome {
    let elapsed_ms = start.elapsed().as_millis() as u64;
    let (status, payload, exit_code, stderr) = match result {
        Ok(payload) => ("ok", payload, EXIT_OK, String::new()),
        Err(f) => {
            let stderr = format!("error [{}]: {}\n", f.kind, f.message);
            ("error", json!({ "kind": f.kind, "message": f.message }), f.exit_code, stderr)
        }
    };
    let stdout = match format {
        OutputFormat::Json => {
            let env = Envelope { status, payload: &payload, elapsed_ms };
            serde_json::to_string(&env).expect("JSON values always serialize") + "\n"
        }
        OutputFormat::Text => text_lines(status, &payload),
    };
    Outcome { exit_code, stdout, stderr }
}

fn text_lines(status: &str, payload: &Value) -> String {
    let mut out = format!("status: {status}\n");
    if let Value::Object(map) = payload {
        for (key, value) in map {
            match value {
                Value::String(s) => out.push_str(&format!("{key}: {s}\n")),
                other => out.push_str(&format!("{key}: {other}\n")),
            }
        }
    }
    out
}

fn read_input(path: &str) -> Result<String, Failure> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin().read_to_string(&mut text).map_err(|e| io_failure(path, e))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| io_failure(path, e))
    }
}

fn write_output(path: &str, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| io_failure(path, e))
}

fn big(x: &impl std::fmt::Display) -> Value {
    serde_json::from_str(&x.to_string()).expect("decimal digits parse as a JSON number")
}

/// One graph6 graph per non-empty line, or a single edge-list graph.
fn read_graphs(text: &str) -> Result<Vec<Graph>, Failure> {
    let first = text.lines().find(|l| !l.trim().is_empty()).unwrap_or("");
    if first.split_whitespace().count() > 1 {
        return Ok(vec![parse_graph(text)?]);
    }
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph6(l.trim()).map_err(Failure::from))
        .collect()
}

fn execute(command: Command) -> Result<Value, Failure> {
    match command {
        Command::Solve { pig, pi, k, via_sgi, no_check_class, graph } => {
            let g = parse_graph(&read_input(&graph)?)?;
            let (pi_g, pi) = (lookup(&pig)?, lookup(&pi)?);
            let inst = ProblemInstance { g: &g, pi_g: &pi_g, pi: &pi, k };
            let out = if via_sgi { solve_via_sgi(&inst, !no_check_class)? } else { solve(&inst, !no_check_class)? };
            Ok(serde_json::to_value(&out).expect("outcome serializes"))
        }
        Command::Classify { pi } => {
            let d = lookup(&pi)?;
            let mut v = serde_json::to_value(&d).expect("descriptor serializes");
            v["has_recognizer"] = json!(d.has_recognizer());
            Ok(v)
        }
        Command::Reduce { kind, pi, k, out, graph } => {
            let g = parse_graph(&read_input(&graph)?)?;
            let red = reduce(&g, &lookup(&pi)?, k, kind.into())?;
            let graph6 = encode_graph6(&red.g_prime);
            let sidecar = json!({
                "kind": red.kind,
                "chi": red.chi,
                "r": red.r,
                "c": red.c,
                "k_prime": red.k_prime,
                "map": red.coordinate_map,
            });
            let mut payload = sidecar.clone();
            payload["n_prime"] = json!(red.g_prime.n());
            match out {
                Some(prefix) => {
                    let (g6_path, json_path) = (format!("{prefix}.g6"), format!("{prefix}.json"));
                    write_output(&g6_path, &format!("{graph6}\n"))?;
                    write_output(&json_path, &(serde_json::to_string_pretty(&sidecar).expect("sidecar") + "\n"))?;
                    payload["graph_file"] = json!(g6_path);
                    payload["sidecar_file"] = json!(json_path);
                }
                None => payload["graph6"] = json!(graph6),
            }
            Ok(payload)
        }
        Command::VerifyReduction { kind, pi, k, all_graphs, csv, graph } => {
            let pi = lookup(&pi)?;
            let graphs: Vec<Graph> = match (all_graphs, graph) {
                (Some(n), _) => enumerate_all_graphs(n)?.collect(),
                (None, Some(path)) => read_graphs(&read_input(&path)?)?,
                (None, None) => return Err(invalid("give a graph file or --all-graphs")),
            };
            let kind: ReductionKind = kind.into();
            let mut instances = Vec::new();
            let mut rows = String::from("graph6,n,k,kind,pass\n");
            let mut passed = 0usize;
            for g in &graphs {
                let ks: Vec<usize> = match k {
                    Some(k) => vec![k],
                    None => (1..=g.n()).collect(),
                };
                for k in ks {
                    let pass = verify_reduction_equivalence(g, &pi, k, kind)?;
                    passed += pass as usize;
                    let g6 = encode_graph6(g);
                    let kind_name = json!(kind);
                    rows.push_str(&format!("{g6},{},{k},{},{pass}\n", g.n(), kind_name.as_str().unwrap_or("")));
                    instances.push(json!({ "graph6": g6, "n": g.n(), "k": k, "pass": pass }));
                }
            }
            if let Some(path) = csv {
                write_output(&path, &rows)?;
            }
            let total = instances.len();
            Ok(json!({
                "kind": kind,
                "pi": pi.name,
                "total": total,
                "passed": passed,
                "failed": total - passed,
                "instances": instances,
            }))
        }
        Command::Gen { class, n, density, radius, seed, out } => {
            let class: GraphClass = class.parse()?;
            let param = match (class, density, radius) {
                (GraphClass::UnitDisk, None, r) => r.unwrap_or(0.25),
                (GraphClass::UnitDisk, Some(_), _) => return Err(invalid("unit-disk takes --radius, not --density")),
                (_, _, Some(_)) => return Err(invalid(format!("{class} takes --density, not --radius"))),
                (_, d, None) => d.unwrap_or(0.5),
            };
            let generated = generate(&GeneratorSpec { class, n, param, seed })?;
            let graph6 = encode_graph6(&generated.graph);
            let mut payload = json!({
                "class": class.name(),
                "n": n,
                "param": param,
                "seed": seed,
                "edges": generated.graph.edge_count(),
            });
            let points_text = generated.points.as_ref().map(|pts| {
                pts.iter().map(|(x, y)| format!("{x} {y}\n")).collect::<String>()
            });
            match out {
                Some(prefix) => {
                    let g6_path = format!("{prefix}.g6");
                    write_output(&g6_path, &format!("{graph6}\n"))?;
                    payload["graph_file"] = json!(g6_path);
                    if let Some(text) = &points_text {
                        let points_path = format!("{prefix}.points");
                        write_output(&points_path, text)?;
                        payload["points_file"] = json!(points_path);
                    }
                }
                None => {
                    payload["graph6"] = json!(graph6);
                    if let Some(points) = &generated.points {
                        payload["points"] = json!(points.iter().map(|&(x, y)| [x, y]).collect::<Vec<_>>());
                    }
                }
            }
            Ok(payload)
        }
        Command::Bound { r, s } => Ok(json!({
            "r": r,
            "s": s,
            "ramsey_upper_bound": big(&ramsey_upper_bound(r, s)?),
            "fpt_size_cutoff": big(&fpt_size_cutoff(r, s)?),
        })),
        Command::Props => {
            let names: Vec<String> = builtin_descriptors().into_iter().map(|d| d.name).collect();
            Ok(json!({ "properties": names }))
        }
    }
}
