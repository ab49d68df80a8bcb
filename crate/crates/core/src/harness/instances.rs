//! Random graphs, random decompositions and the three randomized
//! transformation contracts.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::Serialize;

use crate::decomposition::{passing_neighbors, validate, PathDecomposition};
use crate::graph::{Edge, SimpleGraph, Vertex};
use crate::io::emit_graph6;
use crate::transforms::{
    addible_half_fan4, addible_single_fan2, lift_induced_matching, verify_transformation, Fan2Outcome,
    TransformError,
};

/// `G(n, p)` on `n` vertices.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let edges: Vec<Edge> = (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    SimpleGraph::from_edges(n, &edges).expect("pairs in range")
}

/// Peels random walks off `g`: each starts at a random non-isolated vertex
/// and stops at a dead end or with probability `stop` after every step.
pub fn random_decomposition<R: Rng>(g: &SimpleGraph, stop: f64, rng: &mut R) -> PathDecomposition {
    let mut rest = g.clone();
    let mut paths = Vec::new();
    while rest.m() > 0 {
        let live: Vec<Vertex> = (0..rest.n()).filter(|&v| rest.degree(v) > 0).collect();
        let mut path = vec![*live.choose(rng).unwrap()];
        loop {
            let last = *path.last().unwrap();
            let next: Vec<Vertex> = rest.neighbors(last).filter(|w| !path.contains(w)).collect();
            if next.is_empty() || (path.len() >= 2 && rng.gen_bool(stop)) {
                break;
            }
            let w = *next.choose(rng).unwrap();
            rest.remove_edge(last, w);
            path.push(w);
        }
        paths.push(path);
    }
    PathDecomposition::from_vertex_lists(g.n(), paths).expect("walks are simple")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContractKind {
    Fan2,
    Fan4,
    InducedMatching,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ContractVerdict {
    Passed,
    /// A guarantee failed; the instance is a counterexample.
    Failed(String),
    TimedOut,
    /// No instance meeting the precondition was drawn.
    Skipped,
}

#[derive(Debug, Clone, Serialize)]
pub struct ContractRecord {
    pub v: u32,
    pub suite: &'static str,
    pub kind: ContractKind,
    pub instance: usize,
    pub graph6: String,
    pub verdict: ContractVerdict,
}

const ATTEMPTS: usize = 400;

fn draw_graph<R: Rng>(rng: &mut R) -> SimpleGraph {
    let n = rng.gen_range(4..=8);
    let p = rng.gen_range(0.3..0.7);
    random_graph(n, p, rng)
}

fn verdict_of(e: TransformError) -> ContractVerdict {
    match e {
        TransformError::Timeout => ContractVerdict::TimedOut,
        other => ContractVerdict::Failed(other.to_string()),
    }
}

/// Draws until the precondition holds and checks the contract once.
pub(crate) fn run_contract<R: Rng>(
    kind: ContractKind,
    rng: &mut R,
    timeout_ms: u64,
) -> (String, ContractVerdict) {
    for _ in 0..ATTEMPTS {
        let g = draw_graph(rng);
        let g6 = emit_graph6(&g).expect("small graph");
        let outcome = match kind {
            ContractKind::Fan2 => fan2_instance(&g, rng, timeout_ms),
            ContractKind::Fan4 => fan4_instance(&g, rng, timeout_ms),
            ContractKind::InducedMatching => matching_instance(&g, rng, timeout_ms),
        };
        if let Some(v) = outcome {
            return (g6, v);
        }
    }
    (String::new(), ContractVerdict::Skipped)
}

fn fan2_instance<R: Rng>(g: &SimpleGraph, rng: &mut R, timeout_ms: u64) -> Option<ContractVerdict> {
    let edges = g.edges();
    let &(a, b) = edges.choose(rng)?;
    let (u, v) = if rng.gen_bool(0.5) { (a, b) } else { (b, a) };
    let g_prime = g.without_edges(&[(u, v)]);
    let d = random_decomposition(&g_prime, rng.gen_range(0.2..0.8), rng);
    let passing = passing_neighbors(&g_prime, &d, u).ok()?.len();
    if d.endpoint_counts()[v] <= passing {
        return None;
    }
    Some(match addible_single_fan2(g, (u, v), &d, timeout_ms) {
        Ok(Fan2Outcome::Certificate(c)) => match verify_transformation(&c) {
            Ok(()) => ContractVerdict::Passed,
            Err(v) => ContractVerdict::Failed(format!("certificate rejected: {v:?}")),
        },
        Ok(Fan2Outcome::NotApplicable { .. }) => ContractVerdict::Failed("precondition not recognised".into()),
        Err(e) => verdict_of(e),
    })
}

fn fan4_instance<R: Rng>(g: &SimpleGraph, rng: &mut R, timeout_ms: u64) -> Option<ContractVerdict> {
    let pivots: Vec<Vertex> = (0..g.n()).filter(|&v| g.degree(v) >= 2).collect();
    let &u = pivots.choose(rng)?;
    let mut at_u: Vec<Edge> = g.neighbors(u).map(|w| (u.min(w), u.max(w))).collect();
    at_u.shuffle(rng);
    let h_len = rng.gen_range(2..=at_u.len());
    let h = &at_u[..h_len];
    let x = h[0];
    let d = random_decomposition(&g.without_edges(h), rng.gen_range(0.3..0.9), rng);
    if g.neighbors(u).any(|w| d.endpoint_counts()[w] == 0) {
        return None;
    }
    Some(match addible_half_fan4(g, u, h, x, &d, timeout_ms) {
        Ok((a, c)) => {
            if !a.contains(&x) || a.len() < h_len.div_ceil(2) {
                ContractVerdict::Failed(format!("returned set {a:?} too small or missing {x:?}"))
            } else if let Err(v) = verify_transformation(&c) {
                ContractVerdict::Failed(format!("certificate rejected: {v:?}"))
            } else {
                ContractVerdict::Passed
            }
        }
        Err(e) => verdict_of(e),
    })
}

/// Greedy random induced matching of one to three edges, randomly oriented.
fn random_induced_matching<R: Rng>(g: &SimpleGraph, rng: &mut R) -> Vec<Edge> {
    let mut edges = g.edges();
    edges.shuffle(rng);
    let want = rng.gen_range(1..=3);
    let mut ends: Vec<Vertex> = Vec::new();
    let mut out = Vec::new();
    for (a, b) in edges {
        if out.len() == want {
            break;
        }
        let clash = ends.iter().any(|&e| e == a || e == b || g.has_edge(e, a) || g.has_edge(e, b));
        if !clash {
            ends.extend([a, b]);
            out.push(if rng.gen_bool(0.5) { (a, b) } else { (b, a) });
        }
    }
    out
}

fn matching_instance<R: Rng>(g: &SimpleGraph, rng: &mut R, timeout_ms: u64) -> Option<ContractVerdict> {
    let m = random_induced_matching(g, rng);
    if m.is_empty() {
        return None;
    }
    let g_prime = g.without_edges(&m);
    let d = random_decomposition(&g_prime, rng.gen_range(0.3..0.9), rng);
    for &(u, v) in &m {
        if d.endpoint_counts()[v] == 0 || !passing_neighbors(&g_prime, &d, u).ok()?.is_empty() {
            return None;
        }
    }
    Some(match lift_induced_matching(g, &m, &d, timeout_ms) {
        Ok(after) => {
            let deltas_ok = (0..g.n()).all(|w| {
                let before = d.endpoint_counts()[w] as i64;
                let shift = m.iter().filter(|e| e.0 == w).count() as i64
                    - m.iter().filter(|e| e.1 == w).count() as i64;
                after.endpoint_counts()[w] as i64 == before + shift
            });
            if validate(g, &after).is_err() || after.len() != d.len() || !deltas_ok {
                ContractVerdict::Failed("lifted decomposition has wrong endpoint counts".into())
            } else {
                ContractVerdict::Passed
            }
        }
        Err(e) => verdict_of(e),
    })
}
