use crate::decomposition::{passing_neighbors, validate, PathDecomposition};
use crate::graph::{Edge, SimpleGraph, Vertex};

use super::{apply_addible, norm, AddibleOutcome, Direction, TransformError, TransformationCertificate};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Fan2Outcome {
    Certificate(TransformationCertificate),
    /// `D'(v)` does not exceed the number of passing neighbours of `u`, so
    /// nothing is guaranteed. This says nothing about addibility itself.
    NotApplicable {
        endpoints_at_v: usize,
        passing_neighbors: usize,
    },
}

impl Fan2Outcome {
    pub fn certificate(self) -> Option<TransformationCertificate> {
        match self {
            Fan2Outcome::Certificate(c) => Some(c),
            Fan2Outcome::NotApplicable { .. } => None,
        }
    }
}

fn precondition(msg: impl Into<String>) -> TransformError {
    TransformError::Precondition(msg.into())
}

/// Adds `uv = (u, v)` back towards `u` when `D'(v)` exceeds the number of
/// passing neighbours of `u` in `G - uv`, a case in which the addition is
/// guaranteed to succeed.
pub fn addible_single_fan2(
    g: &SimpleGraph,
    uv: Edge,
    d_prime: &PathDecomposition,
    timeout_ms: u64,
) -> Result<Fan2Outcome, TransformError> {
    let (u, v) = uv;
    if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
        return Err(precondition(format!("{uv:?} is not an edge of the graph")));
    }
    let g_prime = g.without_edges(&[uv]);
    if let Err(e) = validate(&g_prime, d_prime) {
        return Err(precondition(format!("decomposition does not fit G - uv: {e:?}")));
    }
    let endpoints_at_v = d_prime.endpoint_counts()[v];
    let passing = passing_neighbors(&g_prime, d_prime, u)
        .map_err(|e| precondition(e.to_string()))?
        .len();
    if endpoints_at_v <= passing {
        return Ok(Fan2Outcome::NotApplicable {
            endpoints_at_v,
            passing_neighbors: passing,
        });
    }
    match apply_addible(&g_prime, d_prime, &[uv], u, Direction::Towards, timeout_ms)? {
        AddibleOutcome::Certificate(c) => Ok(Fan2Outcome::Certificate(c)),
        AddibleOutcome::NotAddible => Err(TransformError::LemmaFailure(format!(
            "{uv:?} not addible towards {u} although D'(v) = {endpoints_at_v} > {passing}"
        ))),
    }
}

/// Lexicographic `k`-subsets of `0..n`.
fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// Given removed edges `h_edges` at `u` and a decomposition `d_prime` of
/// `G - h_edges` in which every neighbour of `u` is an end of some path,
/// finds an addible-towards-`u` set `A` containing `x` with
/// `|A| >= ceil(h/2)`. Smaller sets are tried first.
pub fn addible_half_fan4(
    g: &SimpleGraph,
    u: Vertex,
    h_edges: &[Edge],
    x: Edge,
    d_prime: &PathDecomposition,
    timeout_ms: u64,
) -> Result<(Vec<Edge>, TransformationCertificate), TransformError> {
    if u >= g.n() {
        return Err(precondition(format!("pivot {u} out of range")));
    }
    let mut h: Vec<Edge> = h_edges.iter().map(|&e| norm(e)).collect();
    h.sort_unstable();
    h.dedup();
    if h.is_empty() {
        return Err(precondition("no removed edges"));
    }
    for &(a, b) in &h {
        if (a != u && b != u) || !g.has_edge(a, b) {
            return Err(precondition(format!("({a}, {b}) is not an edge at {u}")));
        }
    }
    let x = norm(x);
    if !h.contains(&x) {
        return Err(precondition(format!("{x:?} is not among the removed edges")));
    }
    let g_prime = g.without_edges(&h);
    if let Err(e) = validate(&g_prime, d_prime) {
        return Err(precondition(format!("decomposition does not fit G - H: {e:?}")));
    }
    if let Some(w) = g.neighbors(u).find(|&w| d_prime.endpoint_counts()[w] == 0) {
        return Err(precondition(format!("neighbour {w} of {u} is passing")));
    }
    let others: Vec<Edge> = h.iter().copied().filter(|&e| e != x).collect();
    let min_size = h.len().div_ceil(2);
    for size in min_size..=h.len() {
        for pick in combinations(others.len(), size - 1) {
            let mut a = vec![x];
            a.extend(pick.iter().map(|&i| others[i]));
            match apply_addible(&g_prime, d_prime, &a, u, Direction::Towards, timeout_ms)? {
                AddibleOutcome::Certificate(c) => return Ok((a, c)),
                AddibleOutcome::NotAddible => {}
            }
        }
    }
    Err(TransformError::LemmaFailure(format!(
        "no addible set of size >= {min_size} containing {x:?}"
    )))
}

/// Re-inserts an induced matching `m = [(u_i, v_i)]` one edge at a time,
/// each towards `u_i`, keeping the number of paths. Requires that no `u_i`
/// has a passing neighbour in `d_prime` and that every `v_i` ends a path.
pub fn lift_induced_matching(
    g: &SimpleGraph,
    m: &[Edge],
    d_prime: &PathDecomposition,
    timeout_ms: u64,
) -> Result<PathDecomposition, TransformError> {
    let mut ends: Vec<Vertex> = Vec::with_capacity(2 * m.len());
    for &(u, v) in m {
        if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
            return Err(precondition(format!("({u}, {v}) is not an edge")));
        }
        ends.push(u);
        ends.push(v);
    }
    let mut sorted = ends.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != ends.len() {
        return Err(precondition("edges share an end"));
    }
    for (i, &a) in ends.iter().enumerate() {
        for &b in &ends[i + 1..] {
            let matched = m.iter().any(|&(u, v)| (u == a && v == b) || (u == b && v == a));
            if g.has_edge(a, b) && !matched {
                return Err(precondition(format!("({a}, {b}) joins two matching edges")));
            }
        }
    }
    let mut cur_g = g.without_edges(m);
    if let Err(e) = validate(&cur_g, d_prime) {
        return Err(precondition(format!("decomposition does not fit G - M: {e:?}")));
    }
    for &(u, v) in m {
        let passing = passing_neighbors(&cur_g, d_prime, u).map_err(|e| precondition(e.to_string()))?;
        if !passing.is_empty() {
            return Err(precondition(format!("{u} has passing neighbours {passing:?}")));
        }
        if d_prime.endpoint_counts()[v] == 0 {
            return Err(precondition(format!("{v} ends no path")));
        }
    }

    let mut cur_d = d_prime.clone();
    for &(u, v) in m {
        let next_g = cur_g
            .with_edges_added(&[(u, v)])
            .map_err(|e| precondition(e.to_string()))?;
        match addible_single_fan2(&next_g, (u, v), &cur_d, timeout_ms)? {
            Fan2Outcome::Certificate(c) => cur_d = c.after,
            Fan2Outcome::NotApplicable { .. } => {
                return Err(TransformError::LemmaFailure(format!(
                    "({u}, {v}) lost its guarantee during the lift"
                )))
            }
        }
        cur_g = next_g;
    }

    for w in 0..g.n() {
        let before = d_prime.endpoint_counts()[w] as i64;
        let expected = if m.iter().any(|&(u, _)| u == w) {
            before + 1
        } else if m.iter().any(|&(_, v)| v == w) {
            before - 1
        } else {
            before
        };
        if cur_d.endpoint_counts()[w] as i64 != expected {
            return Err(TransformError::LemmaFailure(format!(
                "endpoint count at {w} is {} instead of {expected}",
                cur_d.endpoint_counts()[w]
            )));
        }
    }
    crate::decomposition::audit(g, &cur_d);
    Ok(cur_d)
}

/// The inequality `d2_u > |B| - |A1| - |A2|` that a genuine chain (towards
/// `u` by `A1`, then outwards `u` by `A2`, with `|A1| >= ceil(|B|/2)`) must
/// satisfy at an odd vertex `u`.
pub fn extra_edges_bound(b: usize, a1: usize, a2: usize, d2_u: usize) -> Result<bool, TransformError> {
    if a1 < b.div_ceil(2) {
        return Err(precondition(format!("|A1| = {a1} < ceil({b}/2)")));
    }
    if a1 + a2 > b {
        return Err(precondition(format!("|A1| + |A2| = {} > |B| = {b}", a1 + a2)));
    }
    Ok(d2_u > b - a1 - a2)
}
