//! Exact path numbers by branch-and-bound, an independent brute-force
//! oracle, lower bounds, and decompositions with pinned endpoint counts.
//!
//! The exact search works one connected component at a time. It always
//! branches on the lowest-numbered uncovered edge, trying every path
//! through it, and memoises proven bounds per residual edge set.

mod brute;
mod constrained;
mod engine;
mod exact;

pub use brute::{brute_force_pn, BRUTE_FORCE_MAX_EDGES};
pub use constrained::{constrained_decompose, ConstrainedOutcome, EndpointConstraint};

use thiserror::Error;

use crate::decomposition::PathDecomposition;
use crate::graph::SimpleGraph;

use engine::{component_bound, deadline_after, greedy, EdgeIndex};
use exact::Exact;

pub const DEFAULT_TIMEOUT_MS: u64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("{m} edges exceed the oracle limit of {limit}")]
    TooManyEdgesForOracle { m: usize, limit: usize },
    #[error("{m} edges exceed the search limit of 128")]
    TooManyEdges { m: usize },
    #[error("constraint lists {got} targets for a graph on {n} vertices")]
    ConstraintSize { n: usize, got: usize },
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    /// Exact path number unless `timed_out`; otherwise the size of the
    /// best decomposition found.
    pub pn: usize,
    pub witness: PathDecomposition,
    pub nodes_explored: u64,
    pub timed_out: bool,
    pub best_lower_bound: usize,
}

impl SolveResult {
    pub fn is_exact(&self) -> bool {
        !self.timed_out
    }
}

/// `max(ceil(odd/2), ceil(m/(n-1)), ceil(n/2) if m > floor(n/2)(n-1))`
/// over the whole graph.
pub fn pn_lower_bound(g: &SimpleGraph) -> usize {
    let n = g.n();
    let m = g.m();
    let mut lb = g.odd_vertices().len().div_ceil(2);
    if n >= 2 {
        lb = lb.max(m.div_ceil(n - 1));
    }
    if g.is_odd_semi_clique() {
        lb = lb.max(n.div_ceil(2));
    }
    lb
}

/// Minimum path decomposition of `g`, component by component.
pub fn pn_exact(g: &SimpleGraph, timeout_ms: u64) -> SolveResult {
    let deadline = deadline_after(timeout_ms);
    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut nodes = 0;
    let mut timed_out = false;
    let mut lower = 0;
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        let (h, back) = g.induced(&comp);
        let out = solve_connected(&h, deadline);
        nodes += out.nodes;
        timed_out |= !out.exact;
        lower += out.lower as usize;
        paths.extend(
            out.paths
                .into_iter()
                .map(|p| p.into_iter().map(|v| back[v as usize]).collect()),
        );
    }
    let witness =
        PathDecomposition::from_vertex_lists(g.n(), paths).expect("solver paths are simple");
    crate::decomposition::audit(g, &witness);
    let pn = witness.len();
    SolveResult {
        pn,
        witness,
        nodes_explored: nodes,
        timed_out,
        best_lower_bound: if timed_out { lower } else { pn },
    }
}

struct ComponentSolve {
    paths: Vec<Vec<u8>>,
    exact: bool,
    lower: u32,
    nodes: u64,
}

fn solve_connected(h: &SimpleGraph, deadline: Option<std::time::Instant>) -> ComponentSolve {
    let lb = component_bound(
        h.n() as u32,
        h.m() as u32,
        h.odd_vertices().len() as u32,
    );
    let Some(ix) = EdgeIndex::new(h) else {
        return ComponentSolve {
            paths: large_greedy(h),
            exact: false,
            lower: lb,
            nodes: 0,
        };
    };
    let all = ix.all();
    let upper = greedy(&ix, all, 24 + 2 * h.m(), 0x5eed ^ h.m() as u64);
    if upper.len() as u32 == lb {
        return ComponentSolve {
            paths: upper,
            exact: true,
            lower: lb,
            nodes: 0,
        };
    }
    let mut search = Exact::new(&ix, deadline);
    for t in lb..upper.len() as u32 {
        if let Some(s) = search.solve(all, t) {
            return ComponentSolve {
                paths: s.to_vec(),
                exact: true,
                lower: s.len() as u32,
                nodes: search.clock.nodes,
            };
        }
        if search.clock.expired {
            return ComponentSolve {
                paths: upper,
                exact: false,
                lower: t,
                nodes: search.clock.nodes,
            };
        }
    }
    ComponentSolve {
        lower: upper.len() as u32,
        paths: upper,
        exact: true,
        nodes: search.clock.nodes,
    }
}

/// Fallback for components beyond the edge-mask width: peel greedy paths
/// off a mutable copy.
fn large_greedy(h: &SimpleGraph) -> Vec<Vec<u8>> {
    let mut g = h.clone();
    let mut out = Vec::new();
    while g.m() > 0 {
        let start = (0..g.n())
            .find(|&v| g.degree(v) % 2 == 1)
            .or_else(|| (0..g.n()).find(|&v| g.degree(v) > 0))
            .unwrap();
        let mut path = vec![start];
        while let Some(w) = g
            .neighbors(*path.last().unwrap())
            .find(|w| !path.contains(w))
        {
            g.remove_edge(*path.last().unwrap(), w);
            path.push(w);
        }
        out.push(path.into_iter().map(|v| v as u8).collect());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::validate;

    fn k5_minus_e() -> SimpleGraph {
        SimpleGraph::complete(5).without_edges(&[(0, 1)])
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(pn_lower_bound(&SimpleGraph::complete(5)), 3);
        assert_eq!(pn_lower_bound(&SimpleGraph::star(3)), 2);
        assert_eq!(pn_lower_bound(&SimpleGraph::path(5)), 1);
        assert_eq!(pn_lower_bound(&SimpleGraph::new(1).unwrap()), 0);
    }

    #[test]
    fn small_exact_values() {
        for (g, pn) in [
            (SimpleGraph::complete(3), 2),
            (SimpleGraph::path(5), 1),
            (k5_minus_e(), 3),
            (SimpleGraph::complete(5), 3),
            (SimpleGraph::cycle(6), 2),
            (SimpleGraph::new(3).unwrap(), 0),
        ] {
            let r = pn_exact(&g, 5_000);
            assert!(r.is_exact());
            assert_eq!(r.pn, pn, "{g:?}");
            assert_eq!(validate(&g, &r.witness), Ok(()));
            assert_eq!(r.pn, brute_force_pn(&g).unwrap());
        }
    }

    #[test]
    fn additive_over_components() {
        let g = SimpleGraph::complete(3)
            .disjoint_union(&SimpleGraph::star(3))
            .unwrap();
        assert_eq!(pn_exact(&g, 5_000).pn, 4);
    }

    #[test]
    fn larger_cliques() {
        for n in [7, 8, 9] {
            let g = SimpleGraph::complete(n);
            let r = pn_exact(&g, 30_000);
            assert!(r.is_exact(), "K{n} timed out");
            assert_eq!(r.pn, n.div_ceil(2));
            assert_eq!(validate(&g, &r.witness), Ok(()));
        }
    }
}
