//! Addible edge sets and transformations of path decompositions.
//!
//! A set `A` of edges at a pivot `u` is addible towards `u` (outwards `u`)
//! with respect to a decomposition `D'` of `G'` when `G' + A` has a
//! decomposition `D` with the same number of paths in which `u` gains
//! (loses) `|A|` endpoints, every other end `x` of an edge of `A` loses
//! (gains) one, and every remaining vertex keeps its count. Transformations
//! are found by exact search with those counts pinned, and returned as
//! certificates that can be re-checked independently.

mod fan;
mod fan_subgraph;

pub use fan::{
    addible_half_fan4, addible_single_fan2, extra_edges_bound, lift_induced_matching, Fan2Outcome,
};
pub use fan_subgraph::{recognize_fan_subgraph, FanSubgraphReport, StarComponent};

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::decomposition::{validate, PathDecomposition, Violation};
use crate::graph::{Edge, SimpleGraph, Vertex};
use crate::io::{emit_graph6, parse_graph6};
use crate::solver::{constrained_decompose, ConstrainedOutcome, EndpointConstraint, SolverError};

pub const DEFAULT_TRANSFORM_TIMEOUT_MS: u64 = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Towards,
    Outwards,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransformError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("search timed out")]
    Timeout,
    /// A guaranteed transformation was not found. Always a bug.
    #[error("lemma guarantee failed: {0}")]
    LemmaFailure(String),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("malformed certificate: {0}")]
    Malformed(String),
}

/// Evidence that `after` is an `A`-transformation of `before`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformationCertificate {
    pub base_graph: SimpleGraph,
    pub added_edges: Vec<Edge>,
    pub pivot: Vertex,
    pub direction: Direction,
    pub before: PathDecomposition,
    pub after: PathDecomposition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TransformViolation {
    EdgeNotAtPivot { edge: Edge },
    EdgeAlreadyPresent { edge: Edge },
    BeforeInvalid { violations: Vec<Violation> },
    AfterInvalid { violations: Vec<Violation> },
    /// The number of paths changed.
    SizeChanged { before: usize, after: usize },
    /// Wrong endpoint count at the pivot or at a far end of an added edge.
    ShiftMismatch { vertex: Vertex, expected: i64, found: usize },
    /// A vertex away from the added edges changed its endpoint count.
    UntouchedChanged { vertex: Vertex, before: usize, after: usize },
}

impl TransformViolation {
    /// Which part of the contract failed: `"input"`, `"size"`, `"shift"` or
    /// `"untouched"`.
    pub fn clause(&self) -> &'static str {
        match self {
            TransformViolation::EdgeNotAtPivot { .. }
            | TransformViolation::EdgeAlreadyPresent { .. }
            | TransformViolation::BeforeInvalid { .. }
            | TransformViolation::AfterInvalid { .. } => "input",
            TransformViolation::SizeChanged { .. } => "size",
            TransformViolation::ShiftMismatch { .. } => "shift",
            TransformViolation::UntouchedChanged { .. } => "untouched",
        }
    }
}

fn norm(e: Edge) -> Edge {
    (e.0.min(e.1), e.0.max(e.1))
}

fn far_end(e: Edge, u: Vertex) -> Option<Vertex> {
    if e.0 == u {
        Some(e.1)
    } else if e.1 == u {
        Some(e.0)
    } else {
        None
    }
}

/// Endpoint counts the transformation must produce (possibly negative).
fn target_counts(
    before: &PathDecomposition,
    a: &[Edge],
    u: Vertex,
    dir: Direction,
) -> Vec<i64> {
    let mut t: Vec<i64> = before.endpoint_counts().iter().map(|&c| c as i64).collect();
    let (at_u, at_x) = match dir {
        Direction::Towards => (1, -1),
        Direction::Outwards => (-1, 1),
    };
    for &e in a {
        if let Some(x) = far_end(e, u) {
            t[u] += at_u;
            t[x] += at_x;
        }
    }
    t
}

pub fn verify_transformation(c: &TransformationCertificate) -> Result<(), Vec<TransformViolation>> {
    let mut out = Vec::new();
    let u = c.pivot;
    for &e in &c.added_edges {
        if far_end(e, u).is_none() || e.0 == e.1 {
            out.push(TransformViolation::EdgeNotAtPivot { edge: e });
        } else if c.base_graph.has_edge(e.0, e.1) {
            out.push(TransformViolation::EdgeAlreadyPresent { edge: norm(e) });
        }
    }
    if !out.is_empty() {
        return Err(out);
    }
    if let Err(v) = validate(&c.base_graph, &c.before) {
        out.push(TransformViolation::BeforeInvalid { violations: v });
    }
    let enlarged = match c.base_graph.with_edges_added(&c.added_edges) {
        Ok(g) => g,
        Err(_) => {
            out.push(TransformViolation::EdgeNotAtPivot {
                edge: c.added_edges[0],
            });
            return Err(out);
        }
    };
    if let Err(v) = validate(&enlarged, &c.after) {
        out.push(TransformViolation::AfterInvalid { violations: v });
    }
    if !out.is_empty() {
        return Err(out);
    }
    if c.before.len() != c.after.len() {
        out.push(TransformViolation::SizeChanged {
            before: c.before.len(),
            after: c.after.len(),
        });
    }
    let target = target_counts(&c.before, &c.added_edges, u, c.direction);
    for v in 0..c.base_graph.n() {
        let found = c.after.endpoint_counts()[v];
        let was = c.before.endpoint_counts()[v];
        let touched = v == u || c.added_edges.iter().any(|&e| far_end(e, u) == Some(v));
        if touched {
            if target[v] != found as i64 {
                out.push(TransformViolation::ShiftMismatch {
                    vertex: v,
                    expected: target[v],
                    found,
                });
            }
        } else if was != found {
            out.push(TransformViolation::UntouchedChanged {
                vertex: v,
                before: was,
                after: found,
            });
        }
    }
    if out.is_empty() {
        Ok(())
    } else {
        Err(out)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AddibleOutcome {
    Certificate(TransformationCertificate),
    /// The search completed without a transformation: `A` is not addible
    /// with respect to the given decomposition.
    NotAddible,
}

impl AddibleOutcome {
    pub fn certificate(self) -> Option<TransformationCertificate> {
        match self {
            AddibleOutcome::Certificate(c) => Some(c),
            AddibleOutcome::NotAddible => None,
        }
    }
}

/// Looks for an `A`-transformation of `d_prime` in direction `dir` at `u`.
pub fn apply_addible(
    g_prime: &SimpleGraph,
    d_prime: &PathDecomposition,
    a: &[Edge],
    u: Vertex,
    dir: Direction,
    timeout_ms: u64,
) -> Result<AddibleOutcome, TransformError> {
    if u >= g_prime.n() {
        return Err(TransformError::Precondition(format!("pivot {u} out of range")));
    }
    let a: Vec<Edge> = a.iter().map(|&e| norm(e)).collect();
    for (i, &e) in a.iter().enumerate() {
        if far_end(e, u).is_none() || e.0 == e.1 {
            return Err(TransformError::Precondition(format!("edge {e:?} does not meet pivot {u}")));
        }
        if g_prime.has_edge(e.0, e.1) || a[..i].contains(&e) {
            return Err(TransformError::Precondition(format!("edge {e:?} already present")));
        }
    }
    if let Err(v) = validate(g_prime, d_prime) {
        return Err(TransformError::Precondition(format!(
            "decomposition does not fit the base graph: {v:?}"
        )));
    }
    let g = g_prime
        .with_edges_added(&a)
        .map_err(|e| TransformError::Precondition(e.to_string()))?;
    let target = target_counts(d_prime, &a, u, dir);
    if target.iter().any(|&t| t < 0) {
        return Ok(AddibleOutcome::NotAddible);
    }
    let constraint = EndpointConstraint {
        targets: target.iter().map(|&t| Some(t as usize)).collect(),
        total: d_prime.len(),
    };
    match constrained_decompose(&g, &constraint, timeout_ms)? {
        ConstrainedOutcome::Found(after) => Ok(AddibleOutcome::Certificate(
            TransformationCertificate {
                base_graph: g_prime.clone(),
                added_edges: a,
                pivot: u,
                direction: dir,
                before: d_prime.clone(),
                after,
            },
        )),
        ConstrainedOutcome::Infeasible => Ok(AddibleOutcome::NotAddible),
        ConstrainedOutcome::TimedOut => Err(TransformError::Timeout),
    }
}

impl TransformationCertificate {
    /// Chains `self` with a certificate `next` that starts from
    /// `self.after`, giving one certificate for the union of both sets.
    pub fn concatenate(&self, next: &TransformationCertificate) -> Result<Self, TransformError> {
        if next.pivot != self.pivot
            || next.direction != self.direction
            || next.before != self.after
            || next.base_graph != self.enlarged_graph()
        {
            return Err(TransformError::Precondition(
                "certificates do not chain".to_string(),
            ));
        }
        let mut added = self.added_edges.clone();
        added.extend(next.added_edges.iter().copied());
        Ok(TransformationCertificate {
            base_graph: self.base_graph.clone(),
            added_edges: added,
            pivot: self.pivot,
            direction: self.direction,
            before: self.before.clone(),
            after: next.after.clone(),
        })
    }

    /// `G' + A`.
    pub fn enlarged_graph(&self) -> SimpleGraph {
        self.base_graph
            .with_edges_added(&self.added_edges)
            .expect("certificate edges fit the base graph")
    }

    pub fn to_json(&self) -> String {
        json!({
            "base_graph": emit_graph6(&self.base_graph).expect("small graph"),
            "added_edges": self.added_edges.iter().map(|&(a, b)| [a, b]).collect::<Vec<_>>(),
            "pivot": self.pivot,
            "direction": self.direction,
            "before": self.before.to_json_value(),
            "after": self.after.to_json_value(),
        })
        .to_string()
    }

    pub fn from_json(text: &str) -> Result<Self, TransformError> {
        #[derive(Deserialize)]
        struct Raw {
            base_graph: String,
            added_edges: Vec<[Vertex; 2]>,
            pivot: Vertex,
            direction: Direction,
            before: serde_json::Value,
            after: serde_json::Value,
        }
        let bad = |e: String| TransformError::Malformed(e);
        let raw: Raw = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        let base_graph = parse_graph6(&raw.base_graph).map_err(|e| bad(e.to_string()))?;
        let n = base_graph.n();
        Ok(TransformationCertificate {
            before: PathDecomposition::from_json_value(n, &raw.before)
                .map_err(|e| bad(e.to_string()))?,
            after: PathDecomposition::from_json_value(n, &raw.after)
                .map_err(|e| bad(e.to_string()))?,
            base_graph,
            added_edges: raw.added_edges.iter().map(|e| (e[0], e[1])).collect(),
            pivot: raw.pivot,
            direction: raw.direction,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dec(n: usize, lists: Vec<Vec<usize>>) -> PathDecomposition {
        PathDecomposition::from_vertex_lists(n, lists).unwrap()
    }

    fn edge_plus_isolated() -> SimpleGraph {
        SimpleGraph::from_edges(3, &[(0, 1)]).unwrap()
    }

    #[test]
    fn single_extension_verifies() {
        let c = TransformationCertificate {
            base_graph: edge_plus_isolated(),
            added_edges: vec![(1, 2)],
            pivot: 2,
            direction: Direction::Towards,
            before: dec(3, vec![vec![0, 1]]),
            after: dec(3, vec![vec![0, 1, 2]]),
        };
        assert_eq!(verify_transformation(&c), Ok(()));
    }

    #[test]
    fn split_path_breaks_the_size_clause() {
        let c = TransformationCertificate {
            base_graph: edge_plus_isolated(),
            added_edges: vec![(1, 2)],
            pivot: 2,
            direction: Direction::Towards,
            before: dec(3, vec![vec![0, 1]]),
            after: dec(3, vec![vec![0, 1], vec![1, 2]]),
        };
        let err = verify_transformation(&c).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, TransformViolation::SizeChanged { before: 1, after: 2 })));
        assert!(err.iter().all(|v| v.clause() != "input"));
    }

    #[test]
    fn closing_a_triangle_is_not_addible() {
        let p3 = SimpleGraph::path(3);
        let before = dec(3, vec![vec![0, 1, 2]]);
        let out = apply_addible(&p3, &before, &[(0, 2)], 0, Direction::Towards, 1000).unwrap();
        assert_eq!(out, AddibleOutcome::NotAddible);

        let fabricated = TransformationCertificate {
            base_graph: p3,
            added_edges: vec![(0, 2)],
            pivot: 0,
            direction: Direction::Towards,
            before,
            after: dec(3, vec![vec![0, 1, 2], vec![2, 0]]),
        };
        let err = verify_transformation(&fabricated).unwrap_err();
        assert!(err.iter().any(|v| v.clause() == "size"));
    }

    #[test]
    fn empty_set_is_identity() {
        let g = SimpleGraph::path(3);
        let d = dec(3, vec![vec![0, 1, 2]]);
        let c = apply_addible(&g, &d, &[], 1, Direction::Towards, 1000)
            .unwrap()
            .certificate()
            .unwrap();
        assert_eq!(c.after, c.before);
        assert_eq!(verify_transformation(&c), Ok(()));
    }

    #[test]
    fn outwards_direction() {
        // u = 1 sits at the end of [0, 1]; adding 1-2 outwards moves that end to 2
        let g = edge_plus_isolated();
        let c = apply_addible(&g, &dec(3, vec![vec![0, 1]]), &[(1, 2)], 1, Direction::Outwards, 1000)
            .unwrap()
            .certificate()
            .unwrap();
        assert_eq!(c.after, dec(3, vec![vec![0, 1, 2]]));
        assert_eq!(verify_transformation(&c), Ok(()));
    }

    #[test]
    fn rejects_bad_input() {
        let g = SimpleGraph::path(3);
        let d = dec(3, vec![vec![0, 1, 2]]);
        assert!(matches!(
            apply_addible(&g, &d, &[(0, 1)], 0, Direction::Towards, 1000),
            Err(TransformError::Precondition(_))
        ));
        assert!(matches!(
            apply_addible(&g, &d, &[(0, 2)], 1, Direction::Towards, 1000),
            Err(TransformError::Precondition(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let c = TransformationCertificate {
            base_graph: edge_plus_isolated(),
            added_edges: vec![(1, 2)],
            pivot: 2,
            direction: Direction::Towards,
            before: dec(3, vec![vec![0, 1]]),
            after: dec(3, vec![vec![0, 1, 2]]),
        };
        let text = c.to_json();
        assert_eq!(
            text,
            r#"{"added_edges":[[1,2]],"after":{"paths":[[0,1,2]]},"base_graph":"B_","before":{"paths":[[0,1]]},"direction":"towards","pivot":2}"#
        );
        assert_eq!(TransformationCertificate::from_json(&text).unwrap(), c);
    }
}
