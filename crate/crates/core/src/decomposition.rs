//! Path decompositions: edge-disjoint paths covering every edge of a host.

use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Edge, SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecompositionError {
    #[error("a path needs at least two vertices, got {0:?}")]
    TooShort(Vec<Vertex>),
    #[error("path {0:?} repeats vertex {1}")]
    RepeatedVertex(Vec<Vertex>, Vertex),
    #[error("vertex {vertex} out of range for {n} vertices")]
    UnknownVertex { vertex: Vertex, n: usize },
    #[error("malformed decomposition JSON: {0}")]
    Json(String),
}

/// A path `v0 v1 ... vl` of distinct vertices with `l >= 1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PathSeq(Vec<Vertex>);

impl PathSeq {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self, DecompositionError> {
        if vertices.len() < 2 {
            return Err(DecompositionError::TooShort(vertices));
        }
        for (i, v) in vertices.iter().enumerate() {
            if vertices[..i].contains(v) {
                let v = *v;
                return Err(DecompositionError::RepeatedVertex(vertices, v));
            }
        }
        Ok(PathSeq(vertices))
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.0
    }

    pub fn into_vertices(self) -> Vec<Vertex> {
        self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.len() - 1
    }

    pub fn start(&self) -> Vertex {
        self.0[0]
    }

    pub fn end(&self) -> Vertex {
        *self.0.last().unwrap()
    }

    pub fn has_end(&self, v: Vertex) -> bool {
        self.start() == v || self.end() == v
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0.contains(&v)
    }

    /// Edges as `(min, max)` pairs in walking order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.0.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1])))
    }

    pub fn reversed(&self) -> PathSeq {
        let mut v = self.0.clone();
        v.reverse();
        PathSeq(v)
    }

    /// Orientation with the smaller end vertex first.
    pub fn canonical(&self) -> PathSeq {
        if self.start() <= self.end() {
            self.clone()
        } else {
            self.reversed()
        }
    }

    /// Same path oriented so that it ends at `v`; `None` if `v` is not an end.
    pub fn ending_at(&self, v: Vertex) -> Option<PathSeq> {
        if self.end() == v {
            Some(self.clone())
        } else if self.start() == v {
            Some(self.reversed())
        } else {
            None
        }
    }

    /// Same path oriented so that it starts at `v`.
    pub fn starting_at(&self, v: Vertex) -> Option<PathSeq> {
        self.ending_at(v).map(|p| p.reversed())
    }
}

impl fmt::Debug for PathSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Collection of paths over the vertex set `0..n` of some host graph, with
/// cached endpoint counts. Paths are stored canonically oriented and
/// sorted, so two decompositions with the same paths compare equal.
#[derive(Clone, PartialEq, Eq)]
pub struct PathDecomposition {
    n: usize,
    paths: Vec<PathSeq>,
    endpoint_counts: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct DecompositionJson {
    paths: Vec<Vec<Vertex>>,
}

impl PathDecomposition {
    pub fn new(n: usize, paths: Vec<PathSeq>) -> Result<Self, DecompositionError> {
        let mut endpoint_counts = vec![0; n];
        for p in &paths {
            for &v in p.vertices() {
                if v >= n {
                    return Err(DecompositionError::UnknownVertex { vertex: v, n });
                }
            }
            endpoint_counts[p.start()] += 1;
            endpoint_counts[p.end()] += 1;
        }
        let mut paths: Vec<PathSeq> = paths.iter().map(PathSeq::canonical).collect();
        paths.sort();
        Ok(PathDecomposition {
            n,
            paths,
            endpoint_counts,
        })
    }

    /// Builds from raw vertex sequences.
    pub fn from_vertex_lists(n: usize, lists: Vec<Vec<Vertex>>) -> Result<Self, DecompositionError> {
        let paths = lists
            .into_iter()
            .map(PathSeq::new)
            .collect::<Result<Vec<_>, _>>()?;
        PathDecomposition::new(n, paths)
    }

    pub fn empty(n: usize) -> Self {
        PathDecomposition {
            n,
            paths: Vec::new(),
            endpoint_counts: vec![0; n],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn paths(&self) -> &[PathSeq] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    /// `D(u)`: number of paths having `u` as an end vertex.
    pub fn endpoint_count(&self, u: Vertex) -> Result<usize, DecompositionError> {
        self.endpoint_counts
            .get(u)
            .copied()
            .ok_or(DecompositionError::UnknownVertex { vertex: u, n: self.n })
    }

    pub fn endpoint_counts(&self) -> &[usize] {
        &self.endpoint_counts
    }

    /// Same paths over a larger vertex range.
    pub fn widened(&self, n: usize) -> Self {
        assert!(n >= self.n);
        let mut d = self.clone();
        d.n = n;
        d.endpoint_counts.resize(n, 0);
        d
    }

    /// Relabels every vertex through `map` onto `0..n`.
    pub fn mapped(&self, n: usize, map: &[Vertex]) -> Result<Self, DecompositionError> {
        let paths = self
            .paths
            .iter()
            .map(|p| PathSeq::new(p.vertices().iter().map(|&v| map[v]).collect()))
            .collect::<Result<Vec<_>, _>>()?;
        PathDecomposition::new(n, paths)
    }

    pub fn into_paths(self) -> Vec<PathSeq> {
        self.paths
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(DecompositionJson {
            paths: self.paths.iter().map(|p| p.vertices().to_vec()).collect(),
        })
        .expect("plain data")
    }

    /// `{"paths": [[v, ...], ...]}` in canonical order.
    pub fn to_json(&self) -> String {
        self.to_json_value().to_string()
    }

    pub fn from_json(n: usize, text: &str) -> Result<Self, DecompositionError> {
        let raw: DecompositionJson =
            serde_json::from_str(text).map_err(|e| DecompositionError::Json(e.to_string()))?;
        PathDecomposition::from_vertex_lists(n, raw.paths)
    }

    pub fn from_json_value(n: usize, value: &serde_json::Value) -> Result<Self, DecompositionError> {
        let raw: DecompositionJson = serde_json::from_value(value.clone())
            .map_err(|e| DecompositionError::Json(e.to_string()))?;
        PathDecomposition::from_vertex_lists(n, raw.paths)
    }
}

impl fmt::Debug for PathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PathDecomposition(n={}, {:?})", self.n, self.paths)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    HostSizeMismatch { host: usize, decomposition: usize },
    NotAnEdge { path: usize, edge: Edge },
    DuplicateEdge { path: usize, first_path: usize, edge: Edge },
    UncoveredEdge { edge: Edge },
}

/// Checks that `d` is a path decomposition of `g`. Violations name the
/// offending path index (in `d.paths()` order).
pub fn validate(g: &SimpleGraph, d: &PathDecomposition) -> Result<(), Vec<Violation>> {
    let mut out = Vec::new();
    if g.n() != d.n() {
        out.push(Violation::HostSizeMismatch {
            host: g.n(),
            decomposition: d.n(),
        });
        return Err(out);
    }
    let n = g.n();
    let mut owner = vec![usize::MAX; n * n];
    for (i, p) in d.paths().iter().enumerate() {
        for (u, v) in p.edges() {
            if !g.has_edge(u, v) {
                out.push(Violation::NotAnEdge {
                    path: i,
                    edge: (u, v),
                });
                continue;
            }
            let slot = &mut owner[u * n + v];
            if *slot != usize::MAX {
                out.push(Violation::DuplicateEdge {
                    path: i,
                    first_path: *slot,
                    edge: (u, v),
                });
            } else {
                *slot = i;
            }
        }
    }
    for (u, v) in g.edges() {
        if owner[u * n + v] == usize::MAX {
            out.push(Violation::UncoveredEdge { edge: (u, v) });
        }
    }
    if out.is_empty() {
        debug_assert!((0..n).all(|v| d.endpoint_counts()[v] % 2 == g.degree(v) % 2));
        Ok(())
    } else {
        Err(out)
    }
}

static AUDITED: AtomicU64 = AtomicU64::new(0);
static AUDIT_FAILURES: AtomicU64 = AtomicU64::new(0);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AuditCounts {
    pub checked: u64,
    pub failed: u64,
}

/// Process-wide tally of [`audit`] calls.
pub fn audit_counts() -> AuditCounts {
    AuditCounts {
        checked: AUDITED.load(Ordering::Relaxed),
        failed: AUDIT_FAILURES.load(Ordering::Relaxed),
    }
}

/// Validates `d` against `g` and checks `D(u) = d(u) (mod 2)` at every
/// vertex. Every decomposition the library hands out passes through here;
/// a failure panics in debug builds and is counted otherwise.
pub fn audit(g: &SimpleGraph, d: &PathDecomposition) -> bool {
    AUDITED.fetch_add(1, Ordering::Relaxed);
    let ok = validate(g, d).is_ok()
        && (0..g.n()).all(|v| d.endpoint_counts()[v] % 2 == g.degree(v) % 2);
    if !ok {
        AUDIT_FAILURES.fetch_add(1, Ordering::Relaxed);
    }
    debug_assert!(ok, "emitted decomposition fails validation: {d:?}");
    ok
}

/// Convenience wrapper returning `D(u)`.
pub fn endpoint_count(d: &PathDecomposition, u: Vertex) -> Result<usize, DecompositionError> {
    d.endpoint_count(u)
}

/// Neighbours `v` of `u` in `g` with `D(v) = 0`.
pub fn passing_neighbors(
    g: &SimpleGraph,
    d: &PathDecomposition,
    u: Vertex,
) -> Result<Vec<Vertex>, DecompositionError> {
    if u >= g.n() || u >= d.n() {
        return Err(DecompositionError::UnknownVertex { vertex: u, n: g.n() });
    }
    Ok(g.neighbors(u)
        .filter(|&v| d.endpoint_counts().get(v).copied().unwrap_or(0) == 0)
        .collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GallaiStatus {
    /// `pn <= floor(n/2)`.
    Gallai,
    /// `pn = ceil(n/2)` with `n` odd.
    CeilingOnly,
    /// `pn > ceil(n/2)`.
    Violation,
}

pub fn gallai_status(n: usize, pn: usize) -> GallaiStatus {
    if pn <= n / 2 {
        GallaiStatus::Gallai
    } else if pn <= n.div_ceil(2) {
        GallaiStatus::CeilingOnly
    } else {
        GallaiStatus::Violation
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const A: Vertex = 0;
    const B: Vertex = 1;
    const C: Vertex = 2;

    fn dec(n: usize, lists: Vec<Vec<Vertex>>) -> PathDecomposition {
        PathDecomposition::from_vertex_lists(n, lists).unwrap()
    }

    #[test]
    fn single_path_on_p3() {
        let d = dec(3, vec![vec![A, B, C]]);
        assert_eq!(validate(&SimpleGraph::path(3), &d), Ok(()));
        assert_eq!(endpoint_count(&d, B).unwrap(), 0);
        assert_eq!(passing_neighbors(&SimpleGraph::path(3), &d, A).unwrap(), vec![B]);
        assert!(passing_neighbors(&SimpleGraph::path(3), &d, B).unwrap().is_empty());
    }

    #[test]
    fn triangle_needs_the_closing_edge() {
        let k3 = SimpleGraph::complete(3);
        let err = validate(&k3, &dec(3, vec![vec![A, B, C]])).unwrap_err();
        assert_eq!(err, vec![Violation::UncoveredEdge { edge: (0, 2) }]);

        let d = dec(3, vec![vec![A, B, C], vec![C, A]]);
        assert_eq!(validate(&k3, &d), Ok(()));
        assert_eq!(d.endpoint_counts(), &[2, 0, 2]);
        assert_eq!(passing_neighbors(&k3, &d, A).unwrap(), vec![B]);
    }

    #[test]
    fn endpoint_count_basics() {
        assert_eq!(endpoint_count(&dec(2, vec![vec![A, B]]), A).unwrap(), 1);
        assert!(endpoint_count(&dec(2, vec![vec![A, B]]), 5).is_err());
    }

    #[test]
    fn duplicate_and_foreign_edges() {
        let p3 = SimpleGraph::path(3);
        let err = validate(&p3, &dec(3, vec![vec![A, B], vec![B, A, C]])).unwrap_err();
        assert!(err.iter().any(|v| matches!(v, Violation::DuplicateEdge { .. })));
        assert!(err.iter().any(|v| matches!(v, Violation::NotAnEdge { edge: (0, 2), .. })));
    }

    #[test]
    fn path_seq_rules() {
        assert!(PathSeq::new(vec![1]).is_err());
        assert!(PathSeq::new(vec![1, 2, 1]).is_err());
        let p = PathSeq::new(vec![3, 1, 0]).unwrap();
        assert_eq!(p.canonical().vertices(), &[0, 1, 3]);
        assert_eq!(p.ending_at(3).unwrap().vertices(), &[0, 1, 3]);
    }

    #[test]
    fn reversal_is_identified() {
        assert_eq!(dec(3, vec![vec![C, B, A]]), dec(3, vec![vec![A, B, C]]));
    }

    #[test]
    fn json_is_canonical() {
        let d = dec(3, vec![vec![C, A], vec![C, B, A]]);
        assert_eq!(d.to_json(), r#"{"paths":[[0,1,2],[0,2]]}"#);
        assert_eq!(PathDecomposition::from_json(3, &d.to_json()).unwrap(), d);
    }

    #[test]
    fn gallai_classes() {
        assert_eq!(gallai_status(5, 2), GallaiStatus::Gallai);
        assert_eq!(gallai_status(5, 3), GallaiStatus::CeilingOnly);
        assert_eq!(gallai_status(4, 3), GallaiStatus::Violation);
        assert_eq!(gallai_status(4, 2), GallaiStatus::Gallai);
    }
}
