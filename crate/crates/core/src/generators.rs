//! Deterministic constructors: cliques minus a matching, the two
//! triangle-block patterns (a ring of triangles and a central triangle with
//! satellites) that need a few extra edges to enter the family, random SET
//! graphs, an embedding that realises a graph as an E-subgraph, and
//! exhaustive enumeration of small connected graphs.

use std::collections::BTreeMap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{canonical_form, Edge, FamilyGWitness, GraphError, SimpleGraph, Vertex, MAX_VERTICES};
use crate::set_eset::is_set;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("parity repair failed for seed {seed}")]
    RepairFailed { seed: u64 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Figure1Kind {
    Chain,
    Necklace,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum GenSpec {
    CliqueMinusMatching(usize),
    Figure1Chain(usize),
    Figure1Necklace(usize),
    RandomSet { n_odd: usize, extra: usize, seed: u64 },
    Enumerate(usize),
}

impl GenSpec {
    /// All graphs this value describes, in a fixed order.
    pub fn generate(&self) -> Result<Vec<SimpleGraph>, GenError> {
        Ok(match *self {
            GenSpec::CliqueMinusMatching(k) => vec![clique_minus_matching(k)?],
            GenSpec::Figure1Chain(t) => vec![figure1_family(Figure1Kind::Chain, t)?.0],
            GenSpec::Figure1Necklace(t) => vec![figure1_family(Figure1Kind::Necklace, t)?.0],
            GenSpec::RandomSet { n_odd, extra, seed } => vec![random_set_graph(n_odd, extra, seed)?],
            GenSpec::Enumerate(n) => enumerate_connected(n)?,
        })
    }
}

/// `K_{2k+1}` minus the matching `(0,1), (2,3), ...` of size `k - 1`.
pub fn clique_minus_matching(k: usize) -> Result<SimpleGraph, GenError> {
    if k == 0 || 2 * k + 1 > MAX_VERTICES {
        return Err(GenError::OutOfRange(format!("k = {k}")));
    }
    let matching: Vec<Edge> = (0..k - 1).map(|i| (2 * i, 2 * i + 1)).collect();
    let g = SimpleGraph::complete(2 * k + 1).without_edges(&matching);
    assert!(is_set(&g) && g.is_odd_semi_clique());
    Ok(g)
}

pub const DEFAULT_STUBS: usize = 3;

pub fn figure1_family(kind: Figure1Kind, t: usize) -> Result<(SimpleGraph, FamilyGWitness), GenError> {
    figure1_family_with_stubs(kind, t, DEFAULT_STUBS)
}

/// The pattern and its completion into the family.
///
/// Chain: triangles `3i, 3i+1, 3i+2` joined in a row by edges
/// `(3i+1, 3i+5)`; each `3i` carries `stubs` pendant edges, and the
/// completion closes the row into a ring with `(3t-2, 2)`.
///
/// Necklace: a central triangle `0, 1, 2` and `t - 1` satellites
/// `3+3i, 4+3i, 5+3i` with `3+3i` joined to central vertex `i`; each
/// `5+3i` carries the stubs, and the completion joins `4+3i` to the stub
/// vertex of the next satellite, cyclically.
///
/// Stub leaves come after the triangle vertices.
pub fn figure1_family_with_stubs(
    kind: Figure1Kind,
    t: usize,
    stubs: usize,
) -> Result<(SimpleGraph, FamilyGWitness), GenError> {
    let (tri, links, dotted, centres): (usize, Vec<Edge>, Vec<Edge>, Vec<Vertex>) = match kind {
        Figure1Kind::Chain => {
            if t < 2 {
                return Err(GenError::OutOfRange(format!("chain needs t >= 2, got {t}")));
            }
            let links = (0..t - 1).map(|i| (3 * i + 1, 3 * i + 5)).collect();
            (t, links, vec![(2, 3 * t - 2)], (0..t).map(|i| 3 * i).collect())
        }
        Figure1Kind::Necklace => {
            if !(3..=4).contains(&t) {
                return Err(GenError::OutOfRange(format!("necklace needs t in 3..=4, got {t}")));
            }
            let s = t - 1;
            let links = (0..s).map(|i| (i, 3 + 3 * i)).collect();
            let dotted = (0..s).map(|i| (4 + 3 * i, 5 + 3 * ((i + 1) % s))).collect();
            (t, links, dotted, (0..s).map(|i| 5 + 3 * i).collect())
        }
    };
    let n = 3 * tri + stubs * centres.len();
    if n > MAX_VERTICES {
        return Err(GenError::OutOfRange(format!("{n} vertices")));
    }
    let mut edges: Vec<Edge> = Vec::new();
    for i in 0..tri {
        edges.extend([(3 * i, 3 * i + 1), (3 * i + 1, 3 * i + 2), (3 * i, 3 * i + 2)]);
    }
    edges.extend(links);
    for (j, &c) in centres.iter().enumerate() {
        edges.extend((0..stubs).map(|s| (c, 3 * tri + j * stubs + s)));
    }
    let pattern = SimpleGraph::from_edges(n, &edges)?;
    let supergraph = pattern.with_edges_added(&dotted)?;
    Ok((
        pattern,
        FamilyGWitness {
            supergraph,
            injection: (0..n).collect(),
        },
    ))
}

/// `h` plus a pendant leaf on each odd vertex, so that exactly the
/// original vertices are even and induce `h`. Leaves are numbered from
/// `h.n()` in vertex order.
pub fn embed_as_even_subgraph(h: &SimpleGraph) -> Result<SimpleGraph, GenError> {
    if !h.is_connected() {
        return Err(GenError::Disconnected);
    }
    let odd = h.odd_vertices();
    let n = h.n();
    let leaves: Vec<Edge> = odd.iter().enumerate().map(|(i, &v)| (v, n + i)).collect();
    Ok(h.with_new_vertices(odd.len())?.with_edges_added(&leaves)?)
}

/// Triangle `0, 1, 2`, then `n_odd` vertices each joined to two or three
/// triangle vertices, then up to `extra` random edges among those, then a
/// parity repair that may add vertices.
pub fn random_set_graph(n_odd: usize, extra: usize, seed: u64) -> Result<SimpleGraph, GenError> {
    // repair adds at most one vertex per odd-side vertex plus three
    if 3 + 2 * n_odd + 3 > MAX_VERTICES {
        return Err(GenError::OutOfRange(format!("n_odd = {n_odd}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = SimpleGraph::from_edges(3 + n_odd, &[(0, 1), (1, 2), (0, 2)])?;
    for w in 3..3 + n_odd {
        let mut tri = [0, 1, 2];
        tri.shuffle(&mut rng);
        let k = if rng.gen_bool(0.5) { 2 } else { 3 };
        for &t in &tri[..k] {
            g.insert_edge(w, t)?;
        }
    }
    let mut pairs: Vec<Edge> = (3..3 + n_odd)
        .flat_map(|a| (a + 1..3 + n_odd).map(move |b| (a, b)))
        .collect();
    pairs.shuffle(&mut rng);
    for &(a, b) in pairs.iter().take(extra) {
        g.insert_edge(a, b)?;
    }

    repair_parity(&mut g)?;
    if !is_set(&g) {
        return Err(GenError::RepairFailed { seed });
    }
    Ok(g)
}

fn add_vertex(g: &mut SimpleGraph, nbrs: &[Vertex]) -> Result<Vertex, GenError> {
    let v = g.n();
    *g = g.with_new_vertices(1)?;
    for &w in nbrs {
        g.insert_edge(v, w)?;
    }
    Ok(v)
}

fn repair_parity(g: &mut SimpleGraph) -> Result<(), GenError> {
    // odd side: pair up even-degree vertices by new edges where possible
    let mut bad: Vec<Vertex> = (3..g.n()).filter(|&v| g.is_even(v)).collect();
    while let Some(a) = bad.pop() {
        if let Some(i) = bad.iter().position(|&b| !g.has_edge(a, b)) {
            let b = bad.remove(i);
            g.insert_edge(a, b)?;
        } else {
            add_vertex(g, &[a, 0, 1])?;
        }
    }
    // triangle side: a new vertex on all three flips all three, a joined
    // pair on {t1, t3} and {t2, t3} flips t1 and t2 only
    let mut odd_tri: Vec<Vertex> = (0..3).filter(|&t| !g.is_even(t)).collect();
    if odd_tri.len() % 2 == 1 {
        add_vertex(g, &[0, 1, 2])?;
        odd_tri = (0..3).filter(|&t| !g.is_even(t)).collect();
    }
    if let [t1, t2] = odd_tri[..] {
        let t3 = 3 - t1 - t2;
        let p = add_vertex(g, &[t1, t3])?;
        add_vertex(g, &[t2, t3, p])?;
    }
    Ok(())
}

pub const MAX_ENUMERATION_N: usize = 7;

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, ordered by canonical form. Built by adding a vertex with every
/// nonempty neighbourhood to each class on `n - 1` vertices: every connected
/// graph has a vertex whose removal leaves it connected.
pub fn enumerate_connected(n: usize) -> Result<Vec<SimpleGraph>, GenError> {
    if n > MAX_ENUMERATION_N {
        return Err(GenError::OutOfRange(format!("n = {n} exceeds {MAX_ENUMERATION_N}")));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut level = vec![SimpleGraph::new(1)?];
    for k in 2..=n {
        let mut seen: BTreeMap<Vec<u8>, Vec<Edge>> = BTreeMap::new();
        for g in &level {
            let base = g.with_new_vertices(1)?;
            for mask in 1u64..(1 << (k - 1)) {
                let mut h = base.clone();
                for v in 0..k - 1 {
                    if mask >> v & 1 == 1 {
                        h.insert_edge(v, k - 1)?;
                    }
                }
                seen.entry(canonical_form(&h)?).or_insert_with(|| h.edges());
            }
        }
        level = seen
            .into_values()
            .map(|e| SimpleGraph::from_edges(k, &e))
            .collect::<Result<_, _>>()?;
    }
    Ok(level)
}
