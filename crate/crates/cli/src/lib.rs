//! Command-line front end for `metricdim`.
//!
//! Every command reads a graph JSON file and prints a JSON report with the
//! keys `command`, `input_digest` (SHA-256 of the input bytes), `result` and
//! `status`. Exit codes: 0 ok, 1 refuted or failing verdict, 2 usage or
//! input error, 3 internal verification failure.

mod input;
mod tables;

use std::ffi::OsString;
use std::fmt::Display;
use std::path::PathBuf;

use clap::{ArgAction, Parser, Subcommand};
use metricdim::rayed::{comb_refute, Certificate};
use metricdim::resolver::{doubly_resolves, is_resolving, metric_dimension, psi};
use metricdim::tail::TailCertificate;
use metricdim::trees::{BranchRoot, TreeView};
use metricdim::{Error, Verdict, VertexPair};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

pub use input::{parse_graph, parse_set, Graph, GraphSpec, VertexSet};

#[derive(Debug, Parser)]
#[command(name = "metricdim", version, about = "Metric dimension and resolving sets")]
struct Cli {
    /// Worker threads for the exact searches (0: one per core).
    #[arg(long, global = true, default_value_t = 0)]
    threads: usize,
    /// Emit the JSON report; `--json false` prints a short text summary.
    #[arg(long, global = true, default_value_t = true, action = ArgAction::Set)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Metric dimension and the lexicographically first basis of a finite graph.
    Dim { file: PathBuf },
    /// Doubly resolving number of a finite graph.
    Psi { file: PathBuf },
    /// Check whether a set resolves a finite graph.
    Verify {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Check whether a set doubly resolves a finite graph.
    Double {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Certify a set on a rayed graph or a tail product.
    Certify {
        file: PathBuf,
        #[arg(long)]
        set: String,
        /// Scan margin; refused when below the sound bound.
        #[arg(long)]
        window: Option<u64>,
    },
    /// Produce a pair that a small set cannot resolve.
    Refute {
        file: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Dimension of a finite or rayed tree from its branch paths.
    TreeDim { file: PathBuf },
    /// A basis of a finite or rayed tree.
    TreeBasis { file: PathBuf },
    /// Dimension bounds for a tail product.
    Bounds { file: PathBuf },
    /// Recompute the family tables and compare with the expected values.
    Tables {
        #[arg(long, default_value_t = 8)]
        max_n: usize,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Dim { .. } => "dim",
            Command::Psi { .. } => "psi",
            Command::Verify { .. } => "verify",
            Command::Double { .. } => "double",
            Command::Certify { .. } => "certify",
            Command::Refute { .. } => "refute",
            Command::TreeDim { .. } => "tree-dim",
            Command::TreeBasis { .. } => "tree-basis",
            Command::Bounds { .. } => "bounds",
            Command::Tables { .. } => "tables",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Refuted,
    Error,
}

impl Status {
    fn name(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Refuted => "refuted",
            Status::Error => "error",
        }
    }
}

/// What a run produced: exit code plus the text for each stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

enum Failure {
    Usage(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InternalVerificationFailure(_) => Failure::Internal(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

type Outcome = Result<(Status, Value), Failure>;

fn tokens<T: Display>(items: &[T]) -> Value {
    items.iter().map(|v| Value::String(v.to_string())).collect()
}

fn pair_tokens<T: Display>(pair: &VertexPair<T>) -> Value {
    json!([pair.u.to_string(), pair.v.to_string()])
}

fn verdict_json<T: Display>(verdict: &Verdict<T>) -> (Status, Value) {
    match verdict {
        Verdict::Pass => (Status::Ok, json!({ "verdict": "PASS" })),
        Verdict::Unresolved(pair) => (
            Status::Refuted,
            json!({ "verdict": "FAIL", "witness": pair_tokens(pair) }),
        ),
    }
}

fn finite_verdict_json(verdict: &Verdict) -> (Status, Value) {
    match verdict {
        Verdict::Pass => (Status::Ok, json!({ "verdict": "PASS" })),
        Verdict::Unresolved(p) => (
            Status::Refuted,
            json!({ "verdict": "FAIL", "witness": [p.u, p.v] }),
        ),
    }
}

fn rayed_certificate(cert: &Certificate) -> (Status, Value) {
    let (status, mut value) = verdict_json(&cert.verdict);
    value["window"] = json!(cert.window);
    value["required_window"] = json!(cert.required_window);
    value["bases"] = cert
        .bases
        .iter()
        .map(|b| json!({ "ray": b.ray, "index": b.index, "base": b.base }))
        .collect();
    (status, value)
}

fn tail_certificate(cert: &TailCertificate) -> (Status, Value) {
    let (status, mut value) = verdict_json(&cert.verdict);
    value["window"] = json!(cert.window);
    value["required_window"] = json!(cert.required_window);
    value["levels"] = json!([cert.levels.0, cert.levels.1]);
    value["upward"] = json!({ "anchor": cert.upward.anchor, "bases": cert.upward.bases });
    value["downward"] = match &cert.downward {
        Some(d) => json!({ "anchor": d.anchor, "bases": d.bases }),
        None => Value::Null,
    };
    (status, value)
}

fn load(file: &PathBuf) -> Result<(Vec<u8>, Graph), Failure> {
    let bytes = std::fs::read(file).map_err(|e| format!("cannot read {}: {e}", file.display()))?;
    let text = std::str::from_utf8(&bytes).map_err(|_| "input is not UTF-8".to_string())?;
    let graph = parse_graph(text)?;
    Ok((bytes, graph))
}

fn tree_view(graph: &Graph) -> Result<TreeView, Failure> {
    Ok(match graph {
        Graph::Finite(g) => TreeView::from_finite(g)?,
        Graph::Rayed(g) => TreeView::from_rayed(g)?,
        _ => return Err(Error::NotATree.into()),
    })
}

fn execute(command: &Command, graph: &Graph) -> Outcome {
    let wrong = |what: &str| Failure::Usage(format!("{} needs {what}", command.name()));
    match command {
        Command::Dim { .. } => match graph {
            Graph::Finite(g) => {
                let (beta, basis) = metric_dimension(g);
                Ok((Status::Ok, json!({ "beta": beta, "basis": basis })))
            }
            Graph::Comb => Ok((
                Status::Ok,
                json!({ "beta": "infinite", "reason": "the comb has infinitely many vertices of degree three" }),
            )),
            Graph::Unbounded(reason) => Ok((Status::Ok, json!({ "beta": "infinite", "reason": reason }))),
            _ => Err(wrong(
                "a finite graph; use tree-dim or bounds for infinite inputs",
            )),
        },
        Command::Psi { .. } => match graph {
            Graph::Finite(g) => {
                let (value, set) = psi(g)?;
                Ok((Status::Ok, json!({ "psi": value, "set": set })))
            }
            _ => Err(wrong("a finite graph")),
        },
        Command::Verify { set, .. } => match (graph, parse_set(graph, set)?) {
            (Graph::Finite(g), VertexSet::Finite(s)) => Ok(finite_verdict_json(&is_resolving(g, &s)?)),
            _ => Err(wrong("a finite graph")),
        },
        Command::Double { set, .. } => match (graph, parse_set(graph, set)?) {
            (Graph::Finite(g), VertexSet::Finite(s)) => {
                let all: Vec<_> = (0..g.order()).collect();
                Ok(finite_verdict_json(&doubly_resolves(g, &s, &all)?))
            }
            _ => Err(wrong("a finite graph")),
        },
        Command::Certify { set, window, .. } => match (graph, parse_set(graph, set)?) {
            (Graph::Rayed(g), VertexSet::Rayed(s)) => {
                Ok(rayed_certificate(&g.certify_resolving_with_window(&s, *window)?))
            }
            (Graph::Tail(t), VertexSet::Tail(s)) => {
                Ok(tail_certificate(&t.certify_resolving_with_window(&s, *window)?))
            }
            _ => Err(wrong("a rayed graph or a tail product")),
        },
        Command::Refute { set, .. } => match (graph, parse_set(graph, set)?) {
            (Graph::Comb, VertexSet::Comb(s)) => {
                let pair = comb_refute(&s)?;
                Ok((Status::Refuted, json!({ "witness": pair_tokens(&pair) })))
            }
            (Graph::Tail(t), VertexSet::Tail(s)) => {
                let pair = t.refute_small_set(&s)?;
                Ok((Status::Refuted, json!({ "witness": pair_tokens(&pair) })))
            }
            _ => Err(wrong("the comb or a tail product")),
        },
        Command::TreeDim { .. } => {
            let t = tree_view(graph)?;
            let report = t.branch_paths();
            let entries: Vec<Value> = report
                .entries
                .iter()
                .map(|e| {
                    let roots: Vec<String> = e
                        .paths
                        .iter()
                        .map(|p| match p.root {
                            BranchRoot::Core(w) => format!("c:{w}"),
                            BranchRoot::Ray(r) => format!("r:{r}:1"),
                        })
                        .collect();
                    json!({ "vertex": e.vertex, "degree": e.degree, "branch_paths": e.path_count(), "roots": roots })
                })
                .collect();
            Ok((
                Status::Ok,
                json!({ "dimension": t.dimension(), "branching": entries }),
            ))
        }
        Command::TreeBasis { .. } => {
            let t = tree_view(graph)?;
            let basis = t.basis();
            let value = match graph {
                Graph::Finite(_) => json!(basis
                    .iter()
                    .map(|v| match v {
                        metricdim::rayed::RayedVertex::Core(id) => json!(id),
                        other => json!(other.to_string()),
                    })
                    .collect::<Vec<_>>()),
                _ => tokens(&basis),
            };
            Ok((Status::Ok, json!({ "dimension": t.dimension(), "basis": value })))
        }
        Command::Bounds { .. } => match graph {
            Graph::Tail(t) => {
                let b = t.dimension_bounds()?;
                Ok((
                    Status::Ok,
                    json!({
                        "lower": b.lower,
                        "upper": b.upper,
                        "exact": b.exact(),
                        "basis": b.basis.as_deref().map(tokens),
                        "evidence": b.evidence,
                    }),
                ))
            }
            Graph::Unbounded(reason) => Ok((Status::Ok, json!({ "exact": "infinite", "reason": reason }))),
            _ => Err(wrong("a tail product")),
        },
        Command::Tables { .. } => unreachable!("tables takes no input file"),
    }
}

fn file_of(command: &Command) -> Option<&PathBuf> {
    match command {
        Command::Dim { file }
        | Command::Psi { file }
        | Command::Verify { file, .. }
        | Command::Double { file, .. }
        | Command::Certify { file, .. }
        | Command::Refute { file, .. }
        | Command::TreeDim { file }
        | Command::TreeBasis { file }
        | Command::Bounds { file } => Some(file),
        Command::Tables { .. } => None,
    }
}

fn dispatch(command: &Command) -> (String, Outcome) {
    if let Command::Tables { max_n } = command {
        let digest = hex::encode(Sha256::digest(format!("tables --max-n {max_n}")));
        return (digest, tables::run(*max_n).map_err(Failure::from));
    }
    let file = file_of(command).expect("every other command reads a file");
    match load(file) {
        Ok((bytes, graph)) => (hex::encode(Sha256::digest(&bytes)), execute(command, &graph)),
        Err(f) => (String::new(), Err(f)),
    }
}

#[cfg(feature = "parallel")]
fn with_threads<R: Send>(threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, String> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| format!("cannot start {threads} workers: {e}"))?;
    Ok(pool.install(f))
}

#[cfg(not(feature = "parallel"))]
fn with_threads<R: Send>(_threads: usize, f: impl FnOnce() -> R + Send) -> Result<R, String> {
    Ok(f())
}

fn render(json_out: bool, report: &Value) -> String {
    if json_out {
        let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
        s.push('\n');
        s
    } else {
        let field = |k: &str| match &report[k] {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        format!("{} {}: {}\n", field("command"), field("status"), field("result"))
    }
}

/// Parses `argv` (program name first) and runs the command.
pub fn run<I, T>(argv: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let (stdout, stderr) = if code == 0 {
                (text, String::new())
            } else {
                (String::new(), text)
            };
            return Output { code, stdout, stderr };
        }
    };
    let (digest, outcome) = match with_threads(cli.threads, || dispatch(&cli.command)) {
        Ok(r) => r,
        Err(msg) => (String::new(), Err(Failure::Usage(msg))),
    };
    let (code, status, result, stderr) = match outcome {
        Ok((status, result)) => (u8::from(status == Status::Refuted), status, result, String::new()),
        Err(Failure::Usage(msg)) => (
            2,
            Status::Error,
            json!({ "error": msg }),
            format!("error: {msg}\n"),
        ),
        Err(Failure::Internal(msg)) => (
            3,
            Status::Error,
            json!({ "error": msg }),
            format!("error: {msg}\n"),
        ),
    };
    let report = json!({
        "command": cli.command.name(),
        "input_digest": digest,
        "result": result,
        "status": status.name(),
    });
    Output {
        code,
        stdout: render(cli.json, &report),
        stderr,
    }
}
