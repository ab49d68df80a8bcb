use std::fmt;
use std::str::FromStr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use super::instances::{run_contract, ContractKind, ContractRecord, ContractVerdict};
use super::{classify, exit_code, ClassificationRecord, ClassifyBudget, REPORT_VERSION};
use crate::generators::{
    clique_minus_matching, embed_as_even_subgraph, enumerate_connected, figure1_family,
    figure1_family_with_stubs, random_set_graph, Figure1Kind, MAX_ENUMERATION_N,
};
use crate::graph::SimpleGraph;
use crate::io::emit_graph6;
use crate::solver::{brute_force_pn, pn_exact, BRUTE_FORCE_MAX_EDGES, DEFAULT_TIMEOUT_MS};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    /// Connected graphs with E-subgraph degree at most 3 are Gallai or SET.
    Theorem31Sweep,
    /// Hosts whose E-subgraph completes into the family, including the
    /// triangle-chain and triangle-necklace patterns.
    Theorem41Families,
    /// SET graphs are Gallai or odd semi-cliques with `pn = ceil(n/2)`.
    SetStrongCheck,
    /// The exact solver agrees with the brute-force oracle.
    OracleEq,
    /// Randomized transformation contracts.
    TransformContracts,
}

impl Suite {
    pub const ALL: [Suite; 5] = [
        Suite::Theorem31Sweep,
        Suite::Theorem41Families,
        Suite::SetStrongCheck,
        Suite::OracleEq,
        Suite::TransformContracts,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Theorem31Sweep => "theorem31-sweep",
            Suite::Theorem41Families => "theorem41-families",
            Suite::SetStrongCheck => "set-strong-check",
            Suite::OracleEq => "oracle-eq",
            Suite::TransformContracts => "transform-contracts",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s)
            .ok_or_else(|| {
                let names: Vec<&str> = Suite::ALL.iter().map(|x| x.name()).collect();
                format!("unknown suite {s:?}, expected one of {}", names.join(", "))
            })
    }
}

#[derive(Debug, Clone)]
pub struct SuiteParams {
    /// Largest order for exhaustive sweeps; suite-specific default when unset.
    pub max_n: Option<usize>,
    pub seed: u64,
    pub timeout_ms: u64,
    pub deterministic: bool,
    /// Multiplies the instance counts of the randomized suites.
    pub scale: usize,
    /// Number of 11-vertex SET graphs for the strong check.
    pub n11_instances: usize,
    pub n11_timeout_ms: u64,
}

impl Default for SuiteParams {
    fn default() -> Self {
        SuiteParams {
            max_n: None,
            seed: 0,
            timeout_ms: DEFAULT_TIMEOUT_MS,
            deterministic: true,
            scale: 1,
            n11_instances: 0,
            n11_timeout_ms: 60_000,
        }
    }
}

impl SuiteParams {
    fn budget(&self) -> ClassifyBudget {
        ClassifyBudget {
            timeout_ms: self.timeout_ms,
            deterministic: self.deterministic,
            ..ClassifyBudget::default()
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub v: u32,
    pub suite: String,
    pub processed: usize,
    pub violations: usize,
    pub timeouts: usize,
    pub skipped: usize,
}

impl SuiteSummary {
    pub fn exit_code(&self) -> i32 {
        exit_code(self.violations, self.timeouts)
    }
}

pub struct SuiteOutcome {
    pub summary: SuiteSummary,
    /// One JSON line per processed item, in generation order.
    pub lines: Vec<String>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mark {
    Ok,
    Violation,
    Timeout,
    Skipped,
}

fn finish(suite: Suite, items: Vec<(Value, Mark)>) -> SuiteOutcome {
    let mut s = SuiteSummary {
        v: REPORT_VERSION,
        suite: suite.name().into(),
        ..SuiteSummary::default()
    };
    let mut lines = Vec::with_capacity(items.len());
    for (value, mark) in items {
        match mark {
            Mark::Ok => {}
            Mark::Violation => s.violations += 1,
            Mark::Timeout => s.timeouts += 1,
            Mark::Skipped => s.skipped += 1,
        }
        if mark != Mark::Skipped {
            s.processed += 1;
        }
        lines.push(value.to_string());
    }
    SuiteOutcome { summary: s, lines }
}

fn record_value(r: &ClassificationRecord, suite: Suite, ok: Option<bool>) -> Value {
    let mut v = serde_json::to_value(r).expect("record serializes");
    v["suite"] = json!(suite.name());
    v["ok"] = json!(ok);
    v
}

pub fn run_suite(suite: Suite, params: &SuiteParams) -> Result<SuiteOutcome, String> {
    let items = match suite {
        Suite::Theorem31Sweep => theorem31_sweep(params)?,
        Suite::Theorem41Families => theorem41_families(params)?,
        Suite::SetStrongCheck => set_strong_check(params)?,
        Suite::OracleEq => oracle_eq(params)?,
        Suite::TransformContracts => transform_contracts(params),
    };
    Ok(finish(suite, items))
}

fn connected_up_to(max_n: usize) -> Result<Vec<SimpleGraph>, String> {
    if max_n > MAX_ENUMERATION_N {
        return Err(format!("max-n {max_n} exceeds {MAX_ENUMERATION_N}"));
    }
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(enumerate_connected(n).map_err(|e| e.to_string())?);
    }
    Ok(out)
}

fn classify_marked(
    graphs: Vec<(Option<String>, SimpleGraph)>,
    suite: Suite,
    budget: &ClassifyBudget,
    judge: impl Fn(&ClassificationRecord) -> Option<bool> + Sync,
) -> Vec<(Value, Mark)> {
    graphs
        .into_par_iter()
        .map(|(label, g)| {
            let mut r = classify(&g, budget);
            r.label = label;
            let ok = judge(&r);
            let mark = match ok {
                Some(true) => Mark::Ok,
                Some(false) => Mark::Violation,
                None => Mark::Timeout,
            };
            if ok == Some(false) && r.witness.is_none() {
                r.witness = Some(pn_exact(&g, budget.timeout_ms).witness.to_json_value());
            }
            (record_value(&r, suite, ok), mark)
        })
        .collect()
}

fn theorem31_sweep(p: &SuiteParams) -> Result<Vec<(Value, Mark)>, String> {
    let graphs: Vec<(Option<String>, SimpleGraph)> = connected_up_to(p.max_n.unwrap_or(6))?
        .into_iter()
        .filter(|g| crate::graph::even_subgraph(g).max_e_degree <= 3)
        .map(|g| (None, g))
        .collect();
    Ok(classify_marked(graphs, Suite::Theorem31Sweep, &p.budget(), |r| {
        if !r.theorem31_applicable {
            return Some(false);
        }
        r.theorem_holds
    }))
}

/// The triangle-chain and triangle-necklace hosts for `t <= 4`.
pub(crate) fn figure1_hosts() -> Vec<(String, SimpleGraph)> {
    let mut out = Vec::new();
    for (kind, ts, name) in [
        (Figure1Kind::Chain, 2..=4, "chain"),
        (Figure1Kind::Necklace, 3..=4, "necklace"),
    ] {
        for t in ts {
            let (pattern, _) = figure1_family(kind, t).expect("parameters in range");
            let host = embed_as_even_subgraph(&pattern).expect("patterns are connected");
            out.push((format!("{name}-{t}"), host));
        }
    }
    out
}

fn theorem41_families(p: &SuiteParams) -> Result<Vec<(Value, Mark)>, String> {
    let mut graphs: Vec<(Option<String>, SimpleGraph)> =
        figure1_hosts().into_iter().map(|(l, g)| (Some(l), g)).collect();
    for h in connected_up_to(p.max_n.unwrap_or(5))? {
        let host = embed_as_even_subgraph(&h).expect("connected");
        graphs.push((Some("embedded".into()), host));
    }
    Ok(classify_marked(graphs, Suite::Theorem41Families, &p.budget(), |r| {
        let figure = r.label.as_deref() != Some("embedded");
        if figure && !r.theorem41_applicable {
            return Some(false);
        }
        if !r.theorem41_applicable {
            return Some(true);
        }
        r.theorem_holds
    }))
}

/// `count` random SET graphs on exactly `n` vertices, drawn from
/// consecutive seeds starting at `seed`.
pub fn random_set_graphs_of_order(n: usize, count: usize, seed: u64) -> Vec<(u64, SimpleGraph)> {
    let mut out = Vec::with_capacity(count);
    let mut s = seed;
    let mut attempts = 0;
    while out.len() < count && attempts < 200 * count.max(1) {
        let n_odd = n.saturating_sub(3 + (s % 3) as usize);
        let extra = (s / 3 % 5) as usize;
        if let Ok(g) = random_set_graph(n_odd, extra, s) {
            if g.n() == n {
                out.push((s, g));
            }
        }
        s = s.wrapping_add(1);
        attempts += 1;
    }
    out
}

/// Either Gallai, or an odd semi-clique with exactly `ceil(n/2)` paths.
pub fn strong_set_property(r: &ClassificationRecord) -> Option<bool> {
    let n = r.n;
    if r.pn <= n / 2 {
        return Some(true);
    }
    if !r.pn_exact {
        return None;
    }
    Some(r.is_odd_semi_clique && r.pn == n.div_ceil(2))
}

fn set_strong_check(p: &SuiteParams) -> Result<Vec<(Value, Mark)>, String> {
    let per_n = 170 * p.scale;
    let mut graphs: Vec<(Option<String>, SimpleGraph)> = Vec::new();
    for k in 1..=4 {
        let g = clique_minus_matching(k).map_err(|e| e.to_string())?;
        graphs.push((Some(format!("clique-minus-matching-{k}")), g));
    }
    for n in [3, 5, 7, 9] {
        for (s, g) in random_set_graphs_of_order(n, per_n, p.seed) {
            graphs.push((Some(format!("random-set-n{n}-seed{s}")), g));
        }
    }
    let mut items = classify_marked(graphs, Suite::SetStrongCheck, &p.budget(), strong_set_property);
    if p.n11_instances > 0 {
        let big: Vec<(Option<String>, SimpleGraph)> =
            random_set_graphs_of_order(11, p.n11_instances, p.seed)
                .into_iter()
                .map(|(s, g)| (Some(format!("random-set-n11-seed{s}")), g))
                .collect();
        let budget = ClassifyBudget {
            timeout_ms: p.n11_timeout_ms,
            ..p.budget()
        };
        items.extend(classify_marked(big, Suite::SetStrongCheck, &budget, strong_set_property));
    }
    Ok(items)
}

/// Small members of every generated family, capped at `max_edges`.
pub fn family_instances(max_edges: usize, seed: u64) -> Vec<(String, SimpleGraph)> {
    let mut out: Vec<(String, SimpleGraph)> = Vec::new();
    for k in 1..=4 {
        let g = clique_minus_matching(k).expect("k in range");
        out.push((format!("clique-minus-matching-{k}"), g));
    }
    for (kind, ts, name) in [
        (Figure1Kind::Chain, 2..=4, "chain"),
        (Figure1Kind::Necklace, 3..=4, "necklace"),
    ] {
        for t in ts {
            for stubs in 0..=3 {
                let (pattern, w) = figure1_family_with_stubs(kind, t, stubs).expect("in range");
                out.push((format!("{name}-{t}-stubs{stubs}"), pattern.clone()));
                out.push((format!("{name}-{t}-stubs{stubs}-completed"), w.supergraph));
                if let Ok(host) = embed_as_even_subgraph(&pattern) {
                    out.push((format!("{name}-{t}-stubs{stubs}-host"), host));
                }
            }
        }
    }
    for n in [3, 5, 7] {
        for (s, g) in random_set_graphs_of_order(n, 40, seed) {
            out.push((format!("random-set-n{n}-seed{s}"), g));
        }
    }
    for n in 2..=5 {
        for (i, h) in enumerate_connected(n).expect("n in range").into_iter().enumerate() {
            out.push((format!("embedded-n{n}-{i}"), embed_as_even_subgraph(&h).expect("connected")));
        }
    }
    out.retain(|(_, g)| g.m() <= max_edges);
    out
}

fn oracle_eq(p: &SuiteParams) -> Result<Vec<(Value, Mark)>, String> {
    let mut graphs: Vec<(String, SimpleGraph)> = connected_up_to(p.max_n.unwrap_or(6))?
        .into_iter()
        .map(|g| ("connected".to_string(), g))
        .collect();
    graphs.extend(family_instances(10, p.seed));
    graphs.retain(|(_, g)| g.m() <= BRUTE_FORCE_MAX_EDGES);
    Ok(graphs
        .into_par_iter()
        .map(|(label, g)| {
            let exact = pn_exact(&g, p.timeout_ms);
            let brute = brute_force_pn(&g).expect("edge count filtered");
            let mark = if !exact.is_exact() {
                Mark::Timeout
            } else if exact.pn == brute {
                Mark::Ok
            } else {
                Mark::Violation
            };
            let mut v = json!({
                "v": REPORT_VERSION,
                "suite": Suite::OracleEq.name(),
                "label": label,
                "graph6": emit_graph6(&g).unwrap_or_default(),
                "n": g.n(),
                "m": g.m(),
                "pn_exact": exact.pn,
                "pn_brute": brute,
                "ok": mark == Mark::Ok,
            });
            if mark == Mark::Violation {
                v["witness"] = exact.witness.to_json_value();
            }
            (v, mark)
        })
        .collect())
}

fn transform_contracts(p: &SuiteParams) -> Vec<(Value, Mark)> {
    let mut jobs: Vec<(ContractKind, usize)> = Vec::new();
    for (kind, count) in [
        (ContractKind::Fan2, 1000),
        (ContractKind::Fan4, 300),
        (ContractKind::InducedMatching, 300),
    ] {
        jobs.extend((0..count * p.scale).map(|i| (kind, i)));
    }
    jobs.into_par_iter()
        .map(|(kind, i)| {
            let stream = kind as u64;
            let mut rng = ChaCha8Rng::seed_from_u64(p.seed);
            rng.set_stream(stream * 1_000_003 + i as u64);
            let (graph6, verdict) = run_contract(kind, &mut rng, p.timeout_ms);
            let mark = match verdict {
                ContractVerdict::Passed => Mark::Ok,
                ContractVerdict::Failed(_) => Mark::Violation,
                ContractVerdict::TimedOut => Mark::Timeout,
                ContractVerdict::Skipped => Mark::Skipped,
            };
            let rec = ContractRecord {
                v: REPORT_VERSION,
                suite: Suite::TransformContracts.name(),
                kind,
                instance: i,
                graph6,
                verdict,
            };
            (serde_json::to_value(rec).expect("record serializes"), mark)
        })
        .collect()
}
