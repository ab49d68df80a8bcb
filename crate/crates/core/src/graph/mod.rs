//! Immutable simple graphs over vertices `0..n` and the structural
//! analyses built on them.
//!
//! Adjacency is one `u64` bitset per vertex, so a graph holds at most
//! [`MAX_VERTICES`] vertices. Everything in this crate works on graphs far
//! below that limit.

mod blocks;
mod canon;
mod even;
mod family;

pub use blocks::{blocks, BlockDecomposition};
pub use canon::{canonical_form, degree_signature, MAX_CANON_VERTICES};
pub use even::{even_subgraph, ComponentSummary, ESubgraphReport};
pub use family::{
    complete_to_family_g, complete_to_family_g_with, family_g_check, in_family_g,
    verify_family_g_witness, CompletionBudget, CompletionOutcome, FamilyGCheck, FamilyGWitness,
    WitnessFailure,
};

use std::fmt;

use thiserror::Error;

pub type Vertex = usize;
pub type Edge = (Vertex, Vertex);

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: Vertex, n: usize },
    #[error("loop at vertex {0}")]
    Loop(Vertex),
    #[error("canonical form needs n <= {limit}, got {n}")]
    CanonTooLarge { n: usize, limit: usize },
    #[error("permutation of length {got} does not match {n} vertices")]
    BadPermutation { n: usize, got: usize },
}

/// A finite simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
    m: usize,
}

pub(crate) fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let v = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(v)
        }
    })
}

#[inline]
pub(crate) fn bit(v: usize) -> u64 {
    1u64 << v
}

impl SimpleGraph {
    /// The empty graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(SimpleGraph {
            n,
            adj: vec![0; n],
            m: 0,
        })
    }

    /// Builds a graph from an edge list. Repeated edges collapse into one.
    pub fn from_edges(n: usize, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = SimpleGraph::new(n)?;
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = SimpleGraph::new(n).expect("size");
        for u in 0..n {
            for v in u + 1..n {
                g.insert_edge(u, v).unwrap();
            }
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        let edges: Vec<Edge> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    /// Path on `n` vertices `0 - 1 - ... - n-1`.
    pub fn path(n: usize) -> Self {
        let edges: Vec<Edge> = (1..n).map(|i| (i - 1, i)).collect();
        SimpleGraph::from_edges(n, &edges).unwrap()
    }

    /// `K_{1,k}` with center `0`.
    pub fn star(k: usize) -> Self {
        let edges: Vec<Edge> = (1..=k).map(|i| (0, i)).collect();
        SimpleGraph::from_edges(k + 1, &edges).unwrap()
    }

    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> Result<bool, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(GraphError::Loop(u));
        }
        if self.adj[u] & bit(v) != 0 {
            return Ok(false);
        }
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
        self.m += 1;
        Ok(true)
    }

    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if u >= self.n || v >= self.n || self.adj[u] & bit(v) == 0 {
            return false;
        }
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
        self.m -= 1;
        true
    }

    pub(crate) fn check_vertex(&self, v: Vertex) -> Result<(), GraphError> {
        if v < self.n {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    #[inline]
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.adj[v]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        bits(self.adj[v])
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_even(&self, v: Vertex) -> bool {
        self.degree(v).is_multiple_of(2)
    }

    pub fn even_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| self.is_even(v)).collect()
    }

    pub fn odd_vertices(&self) -> Vec<Vertex> {
        (0..self.n).filter(|&v| !self.is_even(v)).collect()
    }

    pub fn vertex_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in bits(self.adj[u] & !((bit(u) << 1).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn with_edges_added(&self, edges: &[Edge]) -> Result<Self, GraphError> {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        Ok(g)
    }

    /// Copy of the graph with the given edges removed; absent edges are ignored.
    pub fn without_edges(&self, edges: &[Edge]) -> Self {
        let mut g = self.clone();
        for &(u, v) in edges {
            g.remove_edge(u, v);
        }
        g
    }

    /// Appends `k` isolated vertices labelled `n..n+k`.
    pub fn with_new_vertices(&self, k: usize) -> Result<Self, GraphError> {
        if self.n + k > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(self.n + k));
        }
        let mut g = self.clone();
        g.n += k;
        g.adj.resize(g.n, 0);
        Ok(g)
    }

    /// Subgraph induced by `vertices`, relabelled `0..k` in the given order.
    /// The returned vector maps new labels back to host labels.
    pub fn induced(&self, vertices: &[Vertex]) -> (SimpleGraph, Vec<Vertex>) {
        let mut pos = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SimpleGraph::new(vertices.len()).expect("subset of a valid graph");
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                let j = pos[w];
                if j != usize::MAX && i < j {
                    g.insert_edge(i, j).unwrap();
                }
            }
        }
        (g, vertices.to_vec())
    }

    /// The graph with vertex `v` deleted; labels above `v` shift down by one.
    pub fn remove_vertex(&self, v: Vertex) -> (SimpleGraph, Vec<Vertex>) {
        let keep: Vec<Vertex> = (0..self.n).filter(|&w| w != v).collect();
        self.induced(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[Vertex]) -> Result<Self, GraphError> {
        if perm.len() != self.n {
            return Err(GraphError::BadPermutation {
                n: self.n,
                got: perm.len(),
            });
        }
        let mut seen = 0u64;
        for &p in perm {
            if p >= self.n || seen & bit(p) != 0 {
                return Err(GraphError::BadPermutation {
                    n: self.n,
                    got: perm.len(),
                });
            }
            seen |= bit(p);
        }
        let mut g = SimpleGraph::new(self.n)?;
        for (u, v) in self.edges() {
            g.insert_edge(perm[u], perm[v])?;
        }
        Ok(g)
    }

    /// `self` on `0..n` followed by `other` shifted to `n..n+other.n`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> Result<Self, GraphError> {
        let mut g = self.with_new_vertices(other.n)?;
        for (u, v) in other.edges() {
            g.insert_edge(u + self.n, v + self.n)?;
        }
        Ok(g)
    }

    /// Connected components (isolated vertices included), each sorted,
    /// ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen & bit(s) != 0 {
                continue;
            }
            let comp = self.reach(s);
            seen |= comp;
            out.push(bits(comp).collect());
        }
        out
    }

    /// Bitmask of vertices reachable from `s`.
    pub fn reach(&self, s: Vertex) -> u64 {
        let mut comp = bit(s);
        let mut frontier = bit(s);
        while frontier != 0 {
            let mut next = 0u64;
            for v in bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !comp;
            comp |= next;
        }
        comp
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.reach(0) == self.vertex_mask()
    }

    /// Maximum degree among the vertices in `mask`.
    pub fn max_degree_in(&self, mask: u64) -> usize {
        bits(mask).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// True iff `|E| > floor(n/2) * (n - 1)`.
    pub fn is_odd_semi_clique(&self) -> bool {
        let n = self.n;
        if n == 0 {
            return false;
        }
        let semi = self.m > (n / 2) * (n - 1);
        debug_assert!(!semi || n % 2 == 1, "odd semi-clique with even order");
        semi
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// Free-function form of [`SimpleGraph::components`].
pub fn components(g: &SimpleGraph) -> Vec<Vec<Vertex>> {
    g.components()
}

/// Free-function form of [`SimpleGraph::is_odd_semi_clique`].
pub fn is_odd_semi_clique(g: &SimpleGraph) -> bool {
    g.is_odd_semi_clique()
}

/// Two triangles sharing vertex `0`.
pub fn bowtie() -> SimpleGraph {
    SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (1, 0)]).unwrap();
        assert_eq!(g.m(), 4);
        assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.m());
        assert_eq!(g.edges(), vec![(0, 1), (0, 2), (1, 2), (2, 3)]);
    }

    #[test]
    fn rejects_loops_and_out_of_range() {
        assert_eq!(
            SimpleGraph::from_edges(3, &[(1, 1)]),
            Err(GraphError::Loop(1))
        );
        assert!(matches!(
            SimpleGraph::from_edges(3, &[(0, 3)]),
            Err(GraphError::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(SimpleGraph::new(65).is_err());
    }

    #[test]
    fn components_examples() {
        let two_edges = SimpleGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(components(&two_edges).len(), 2);
        assert_eq!(components(&SimpleGraph::cycle(5)).len(), 1);
        let empty = SimpleGraph::new(3).unwrap();
        assert_eq!(components(&empty), vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn odd_semi_cliques() {
        assert!(SimpleGraph::complete(3).is_odd_semi_clique());
        assert!(SimpleGraph::complete(5).is_odd_semi_clique());
        let k5e = SimpleGraph::complete(5).without_edges(&[(0, 1)]);
        assert!(k5e.is_odd_semi_clique());
        assert!(!SimpleGraph::path(3).is_odd_semi_clique());
        assert!(!SimpleGraph::complete(4).is_odd_semi_clique());
    }

    #[test]
    fn induced_and_remove_vertex() {
        let g = SimpleGraph::complete(4);
        let (h, back) = g.remove_vertex(1);
        assert_eq!(back, vec![0, 2, 3]);
        assert_eq!(h, SimpleGraph::complete(3));
    }

    #[test]
    fn permute_preserves_degree_multiset() {
        let g = SimpleGraph::star(3);
        let p = g.permute(&[3, 2, 1, 0]).unwrap();
        assert_eq!(p.degree(3), 3);
        assert!(g.permute(&[0, 0, 1, 2]).is_err());
    }
}
