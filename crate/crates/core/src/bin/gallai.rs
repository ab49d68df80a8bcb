use std::fs;
use std::io::{self, BufWriter, Read, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use gallai::decomposition::{gallai_status, PathDecomposition};
use gallai::generators::{
    clique_minus_matching, embed_as_even_subgraph, enumerate_connected, figure1_family_with_stubs,
    random_set_graph, Figure1Kind, DEFAULT_STUBS,
};
use gallai::graph::{even_subgraph, SimpleGraph};
use gallai::harness::{classify_all, exit_code, run_suite, ClassifyBudget, Suite, SuiteParams};
use gallai::io::{emit_graph6, parse_edge_lists, parse_graph6};
use gallai::solver::{pn_exact, DEFAULT_TIMEOUT_MS};
use gallai::transforms::{apply_addible, verify_transformation, Direction, TransformationCertificate};

#[derive(Parser)]
#[command(name = "gallai", version, about = "Exact path decompositions and Gallai-bound checks")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Common {
    /// Input format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Per-graph search limit.
    #[arg(long, global = true, default_value_t = DEFAULT_TIMEOUT_MS)]
    timeout_ms: u64,
    /// Omit timings so output is byte-stable.
    #[arg(long, global = true)]
    deterministic: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Subcommand)]
enum Cmd {
    /// Path number of each input graph.
    Pn { input: String },
    /// Minimum path decomposition of each input graph.
    Decompose { input: String },
    /// E-subgraph report of each input graph.
    Ev { input: String },
    /// Classification records (JSON lines).
    Classify { input: String },
    /// Emit graph6 lines for a generated family.
    Generate(GenerateArgs),
    /// Apply or verify a transformation given as JSON.
    Transform {
        /// JSON file, or `-` for stdin.
        input: String,
        /// Treat the input as a certificate and only verify it.
        #[arg(long)]
        verify: bool,
    },
    /// Run a verification suite.
    Check {
        #[arg(long)]
        suite: Suite,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Multiplier on randomized instance counts.
        #[arg(long, default_value_t = 1)]
        scale: usize,
        /// Number of 11-vertex SET graphs for set-strong-check.
        #[arg(long, default_value_t = 0)]
        n11: usize,
    },
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(value_enum)]
    family: Family,
    /// `k` for cliques minus a matching, `t` for the triangle patterns.
    #[arg(long, default_value_t = 2)]
    size: usize,
    #[arg(long, default_value_t = DEFAULT_STUBS)]
    stubs: usize,
    #[arg(long, default_value_t = 2)]
    n_odd: usize,
    #[arg(long, default_value_t = 0)]
    extra: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of consecutive seeds for random-set.
    #[arg(long, default_value_t = 1)]
    count: u64,
    /// Largest order for `connected`.
    #[arg(long, default_value_t = 4)]
    max_n: usize,
    /// Emit the host graph whose E-subgraph is the generated graph.
    #[arg(long)]
    embed: bool,
    /// Emit the completed supergraph of a triangle pattern instead.
    #[arg(long)]
    completed: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    CliqueMinusMatching,
    Chain,
    Necklace,
    RandomSet,
    Connected,
}

type Fallible<T> = Result<T, Box<dyn std::error::Error>>;

fn read_input(path: &str) -> Fallible<String> {
    if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        Ok(s)
    } else {
        Ok(fs::read_to_string(path)?)
    }
}

fn read_graphs(path: &str, format: Format) -> Fallible<Vec<SimpleGraph>> {
    let text = read_input(path)?;
    Ok(match format {
        Format::Graph6 => text
            .lines()
            .filter(|l| !l.trim().is_empty())
            .map(parse_graph6)
            .collect::<Result<_, _>>()?,
        Format::Edgelist => parse_edge_lists(&text)?,
    })
}

fn generate(a: &GenerateArgs) -> Fallible<Vec<SimpleGraph>> {
    let mut out = Vec::new();
    match a.family {
        Family::CliqueMinusMatching => out.push(clique_minus_matching(a.size)?),
        Family::Chain | Family::Necklace => {
            let kind = if matches!(a.family, Family::Chain) {
                Figure1Kind::Chain
            } else {
                Figure1Kind::Necklace
            };
            let (pattern, w) = figure1_family_with_stubs(kind, a.size, a.stubs)?;
            out.push(if a.completed { w.supergraph } else { pattern });
        }
        Family::RandomSet => {
            for s in a.seed..a.seed + a.count {
                out.push(random_set_graph(a.n_odd, a.extra, s)?);
            }
        }
        Family::Connected => {
            for n in 1..=a.max_n {
                out.extend(enumerate_connected(n)?);
            }
        }
    }
    if a.embed {
        out = out.iter().map(embed_as_even_subgraph).collect::<Result<_, _>>()?;
    }
    Ok(out)
}

fn transform(text: &str, verify_only: bool, timeout_ms: u64) -> Fallible<(serde_json::Value, bool)> {
    if verify_only {
        let c = TransformationCertificate::from_json(text)?;
        return Ok(match verify_transformation(&c) {
            Ok(()) => (json!({"valid": true}), true),
            Err(v) => {
                let clauses: Vec<&str> = v.iter().map(|x| x.clause()).collect();
                (json!({"valid": false, "clauses": clauses, "violations": v}), false)
            }
        });
    }
    // {"graph": g6, "decomposition": {...}, "edges": [[u, x], ...], "pivot": u, "direction": "towards"}
    let req: serde_json::Value = serde_json::from_str(text)?;
    let field = |k: &str| req.get(k).ok_or_else(|| format!("missing field {k:?}"));
    let g = parse_graph6(field("graph")?.as_str().ok_or("graph must be a graph6 string")?)?;
    let d = PathDecomposition::from_json_value(g.n(), field("decomposition")?)?;
    let edges: Vec<(usize, usize)> = serde_json::from_value(field("edges")?.clone())?;
    let pivot: usize = serde_json::from_value(field("pivot")?.clone())?;
    let dir: Direction = serde_json::from_value(field("direction")?.clone())?;
    Ok(match apply_addible(&g, &d, &edges, pivot, dir, timeout_ms)?.certificate() {
        Some(c) => (serde_json::from_str(&c.to_json())?, true),
        None => (json!({"addible": false}), false),
    })
}

fn run(cli: Cli) -> Fallible<i32> {
    let c = &cli.common;
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let mut code = 0;
    match &cli.cmd {
        Cmd::Pn { input } | Cmd::Decompose { input } => {
            let decompose = matches!(cli.cmd, Cmd::Decompose { .. });
            let mut timeouts = 0;
            for g in read_graphs(input, c.format)? {
                let r = pn_exact(&g, c.timeout_ms);
                timeouts += usize::from(!r.is_exact());
                let mut line = json!({
                    "graph6": emit_graph6(&g)?,
                    "pn": r.pn,
                    "exact": r.is_exact(),
                    "lower_bound": r.best_lower_bound,
                    "gallai_status": gallai_status(g.n(), r.pn),
                });
                if decompose {
                    line["paths"] = r.witness.to_json_value()["paths"].clone();
                }
                writeln!(out, "{line}")?;
            }
            code = exit_code(0, timeouts);
        }
        Cmd::Ev { input } => {
            for g in read_graphs(input, c.format)? {
                let ev = even_subgraph(&g);
                let line = json!({
                    "graph6": emit_graph6(&g)?,
                    "even_vertices": ev.even_vertices,
                    "ev_graph6": emit_graph6(&ev.ev_graph)?,
                    "ev_edges": ev.host_edges(),
                    "max_e_degree": ev.max_e_degree,
                    "components": ev.component_summaries,
                });
                writeln!(out, "{line}")?;
            }
        }
        Cmd::Classify { input } => {
            let budget = ClassifyBudget {
                timeout_ms: c.timeout_ms,
                deterministic: c.deterministic,
                ..ClassifyBudget::default()
            };
            let records = classify_all(&read_graphs(input, c.format)?, &budget);
            for r in &records {
                writeln!(out, "{}", r.to_json_line())?;
            }
            let violations = records.iter().filter(|r| r.is_violation()).count();
            let timeouts = records.iter().filter(|r| !r.pn_exact).count();
            code = exit_code(violations, timeouts);
        }
        Cmd::Generate(a) => {
            for g in generate(a)? {
                writeln!(out, "{}", emit_graph6(&g)?)?;
            }
        }
        Cmd::Transform { input, verify } => {
            let (value, ok) = transform(&read_input(input)?, *verify, c.timeout_ms)?;
            writeln!(out, "{value}")?;
            code = if ok { 0 } else { 2 };
        }
        Cmd::Check {
            suite,
            max_n,
            seed,
            scale,
            n11,
        } => {
            let params = SuiteParams {
                max_n: *max_n,
                seed: *seed,
                timeout_ms: c.timeout_ms,
                deterministic: c.deterministic,
                scale: *scale,
                n11_instances: *n11,
                ..SuiteParams::default()
            };
            let outcome = run_suite(*suite, &params)?;
            for line in &outcome.lines {
                writeln!(out, "{line}")?;
            }
            eprintln!("{}", serde_json::to_string(&outcome.summary)?);
            code = outcome.summary.exit_code();
        }
    }
    out.flush()?;
    Ok(code)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
