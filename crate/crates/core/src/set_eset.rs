//! SET and ESET graphs: recognition, connection vertices, the special
//! decompositions with two paths ending at a connection vertex, and the
//! constructions that absorb a path or a hanging ESET subgraph.
//!
//! A SET graph has exactly three even vertices, which form a triangle, and
//! every odd vertex has at least two even neighbours. An ESET graph is a
//! SET graph (every vertex is a connection vertex) or a SET graph plus one
//! new vertex `z` joined to one odd and one even vertex (every such `z`
//! is a connection vertex).

use serde::Serialize;
use thiserror::Error;

use crate::decomposition::{audit, validate, PathDecomposition, PathSeq};
use crate::graph::{bit, even_subgraph, SimpleGraph, Vertex};
use crate::solver::pn_exact;
use crate::transforms::{addible_half_fan4, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SetError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("exact sub-solve timed out")]
    Timeout,
    #[error(transparent)]
    Transform(#[from] TransformError),
    /// A construction produced a decomposition outside its guaranteed
    /// bound. Always a bug.
    #[error("construction exceeded its bound: {0}")]
    BoundFailed(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SetClassification {
    pub is_set: bool,
    /// Present iff the even vertices form exactly a triangle.
    pub triangle_vertices: Option<[Vertex; 3]>,
    pub odd_vertices: Vec<Vertex>,
    /// `(odd vertex, number of even neighbours)`.
    pub even_neighbor_counts: Vec<(Vertex, usize)>,
}

pub fn classify_set(g: &SimpleGraph) -> SetClassification {
    let ev = even_subgraph(g);
    let triangle_vertices = ev
        .is_single_triangle()
        .then(|| [ev.back_map[0], ev.back_map[1], ev.back_map[2]]);
    let even_mask = ev.even_vertices.iter().fold(0u64, |acc, &v| acc | bit(v));
    let odd_vertices = g.odd_vertices();
    let even_neighbor_counts: Vec<(Vertex, usize)> = odd_vertices
        .iter()
        .map(|&v| (v, (g.neighbor_mask(v) & even_mask).count_ones() as usize))
        .collect();
    let is_set = triangle_vertices.is_some() && even_neighbor_counts.iter().all(|&(_, c)| c >= 2);
    if is_set {
        assert!(g.n() % 2 == 1, "a SET graph has odd order");
    }
    SetClassification {
        is_set,
        triangle_vertices,
        odd_vertices,
        even_neighbor_counts,
    }
}

pub fn is_set(g: &SimpleGraph) -> bool {
    classify_set(g).is_set
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EsetKind {
    TypeSet,
    TypeAugmented,
    NotEset,
}

/// For an augmented ESET: the added vertex and its two neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Augmentation {
    pub z: Vertex,
    /// Neighbour of `z` that is odd in `g - z`.
    pub odd_neighbor: Vertex,
    /// Neighbour of `z` that is even in `g - z`.
    pub even_neighbor: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EsetClassification {
    pub kind: EsetKind,
    pub connection_vertices: Vec<Vertex>,
    /// Every qualifying augmentation, by increasing `z`. Empty unless
    /// `TypeAugmented`.
    pub augmentations: Vec<Augmentation>,
}

impl EsetClassification {
    /// The augmentation with the smallest `z`.
    pub fn augmentation(&self) -> Option<&Augmentation> {
        self.augmentations.first()
    }

    /// `g - z` for the smallest `z`, with its map back to `g`'s labels.
    pub fn base_set_graph(&self, g: &SimpleGraph) -> Option<(SimpleGraph, Vec<Vertex>)> {
        self.augmentation().map(|a| g.remove_vertex(a.z))
    }

    pub fn is_connection_vertex(&self, u: Vertex) -> bool {
        self.connection_vertices.contains(&u)
    }
}

pub fn classify_eset(g: &SimpleGraph) -> EsetClassification {
    if is_set(g) {
        return EsetClassification {
            kind: EsetKind::TypeSet,
            connection_vertices: (0..g.n()).collect(),
            augmentations: Vec::new(),
        };
    }
    let mut found: Vec<Augmentation> = Vec::new();
    for z in 0..g.n() {
        if g.degree(z) != 2 {
            continue;
        }
        let (base, back) = g.remove_vertex(z);
        if !is_set(&base) {
            continue;
        }
        let local = |v: Vertex| back.iter().position(|&b| b == v).unwrap();
        let nb: Vec<Vertex> = g.neighbors(z).collect();
        let even: Vec<bool> = nb.iter().map(|&v| base.is_even(local(v))).collect();
        if even[0] != even[1] {
            let (odd_neighbor, even_neighbor) = if even[0] { (nb[1], nb[0]) } else { (nb[0], nb[1]) };
            found.push(Augmentation {
                z,
                odd_neighbor,
                even_neighbor,
            });
        }
    }
    EsetClassification {
        kind: if found.is_empty() { EsetKind::NotEset } else { EsetKind::TypeAugmented },
        connection_vertices: found.iter().map(|a| a.z).collect(),
        augmentations: found,
    }
}

fn paths_of(d: &PathDecomposition) -> Vec<Vec<Vertex>> {
    d.paths().iter().map(|p| p.vertices().to_vec()).collect()
}

/// Decomposition of the ESET graph `k` into at most `ceil(n/2)` paths, at
/// least two of which end at the connection vertex `u`.
pub fn eset_decompose(k: &SimpleGraph, u: Vertex, timeout_ms: u64) -> Result<PathDecomposition, SetError> {
    let class = classify_eset(k);
    if class.kind == EsetKind::NotEset {
        return Err(SetError::Precondition("not an ESET graph".into()));
    }
    if !class.is_connection_vertex(u) {
        return Err(SetError::Precondition(format!("{u} is not a connection vertex")));
    }
    let d = match class.augmentations.iter().find(|a| a.z == u) {
        None => decompose_set(k, u, timeout_ms)?,
        Some(a) => decompose_augmented(k, a, timeout_ms)?,
    };
    let n = k.n();
    audit(k, &d);
    if d.endpoint_counts()[u] < 2 || d.len() > n.div_ceil(2) {
        return Err(SetError::BoundFailed(format!(
            "D(u) = {}, {} paths for n = {n}",
            d.endpoint_counts()[u],
            d.len()
        )));
    }
    Ok(d)
}

fn decompose_set(k: &SimpleGraph, u: Vertex, timeout_ms: u64) -> Result<PathDecomposition, SetError> {
    let s: Vec<(Vertex, Vertex)> = k
        .neighbors(u)
        .filter(|&v| k.is_even(v))
        .map(|v| (u.min(v), u.max(v)))
        .collect();
    let k_prime = k.without_edges(&s);
    let solved = pn_exact(&k_prime, timeout_ms);
    if solved.timed_out {
        return Err(SetError::Timeout);
    }
    let (b, cert) = addible_half_fan4(k, u, &s, s[0], &solved.witness, timeout_ms)?;
    let mut paths = paths_of(&cert.after);
    for &(a, c) in s.iter().filter(|e| !b.contains(e)) {
        paths.push(vec![a, c]);
    }
    Ok(PathDecomposition::from_vertex_lists(k.n(), paths).expect("paths of k"))
}

fn decompose_augmented(
    k: &SimpleGraph,
    a: &Augmentation,
    timeout_ms: u64,
) -> Result<PathDecomposition, SetError> {
    let (base, back) = k.remove_vertex(a.z);
    let local = |v: Vertex| back.iter().position(|&b| b == v).unwrap();
    let (x, y) = (local(a.odd_neighbor), local(a.even_neighbor));
    let inner = eset_decompose(&base, y, timeout_ms)?;
    let paths = inner.paths();
    let px = paths
        .iter()
        .position(|p| p.has_end(x))
        .ok_or_else(|| SetError::BoundFailed(format!("odd vertex {x} ends no path")))?;
    let py = paths
        .iter()
        .enumerate()
        .position(|(i, p)| i != px && p.has_end(y))
        .ok_or_else(|| SetError::BoundFailed(format!("{y} ends fewer than two paths")))?;
    let mut out = Vec::with_capacity(paths.len());
    for (i, p) in paths.iter().enumerate() {
        let mut verts: Vec<Vertex> = if i == px {
            p.ending_at(x).unwrap().into_vertices()
        } else if i == py {
            p.ending_at(y).unwrap().into_vertices()
        } else {
            p.vertices().to_vec()
        };
        verts.iter_mut().for_each(|v| *v = back[*v]);
        if i == px || i == py {
            verts.push(a.z);
        }
        out.push(verts);
    }
    Ok(PathDecomposition::from_vertex_lists(k.n(), out).expect("paths of k"))
}

/// Decomposes `k` plus a path `p` that meets `k` only at the connection
/// vertex `u` into at most `ceil(|V(k)|/2)` paths. Vertices of `p` other
/// than `u` must be labelled `k.n()` or above; the result lives on
/// `max(k.n(), largest label of p + 1)` vertices.
pub fn absorb_path(
    k: &SimpleGraph,
    u: Vertex,
    p: &PathSeq,
    timeout_ms: u64,
) -> Result<PathDecomposition, SetError> {
    let Some(pos) = p.vertices().iter().position(|&v| v == u) else {
        return Err(SetError::Precondition(format!("path does not pass through {u}")));
    };
    if let Some(&w) = p.vertices().iter().find(|&&w| w != u && w < k.n()) {
        return Err(SetError::Precondition(format!("path meets the ESET graph at {w}")));
    }
    let dk = eset_decompose(k, u, timeout_ms)?;
    let total_n = p.vertices().iter().max().map_or(k.n(), |&m| k.n().max(m + 1));

    let verts = p.vertices();
    let halves: Vec<Vec<Vertex>> = [
        verts[..=pos].iter().rev().copied().collect::<Vec<_>>(),
        verts[pos..].to_vec(),
    ]
    .into_iter()
    .filter(|h| h.len() >= 2)
    .collect();

    let ends_at_u: Vec<usize> = (0..dk.len()).filter(|&i| dk.paths()[i].has_end(u)).take(2).collect();
    let mut out = Vec::with_capacity(dk.len());
    for (i, q) in dk.paths().iter().enumerate() {
        match ends_at_u.iter().position(|&j| j == i) {
            Some(slot) if slot < halves.len() => {
                let mut r = q.ending_at(u).unwrap().into_vertices();
                r.extend_from_slice(&halves[slot][1..]);
                out.push(r);
            }
            _ => out.push(q.vertices().to_vec()),
        }
    }
    let d = PathDecomposition::from_vertex_lists(total_n, out).expect("glued paths are simple");
    let host = k
        .with_new_vertices(total_n - k.n())
        .and_then(|h| h.with_edges_added(&p.edges().collect::<Vec<_>>()))
        .expect("path lives on the widened host");
    audit(&host, &d);
    if d.len() > k.n().div_ceil(2) {
        return Err(SetError::BoundFailed(format!("{} paths", d.len())));
    }
    Ok(d)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HangingEset {
    /// Vertex set of the ESET subgraph, sorted, in host labels.
    pub vertices: Vec<Vertex>,
    /// The single vertex with neighbours outside.
    pub attachment: Vertex,
    pub classification: EsetClassification,
}

/// Components of `g - u` that hold a neighbour of `u`, capped to keep the
/// subset enumeration small.
const MAX_BRANCHES: usize = 12;

/// Every induced ESET subgraph that meets the rest of `g` in a single
/// connection vertex. Candidates are unions of branches at a cut vertex.
pub fn find_hanging_eset(g: &SimpleGraph) -> Vec<HangingEset> {
    let blocks = crate::graph::blocks(g);
    let mut out = Vec::new();
    for &u in &blocks.cut_vertices {
        let (rest, back) = g.remove_vertex(u);
        let branches: Vec<Vec<Vertex>> = rest
            .components()
            .into_iter()
            .map(|c| c.into_iter().map(|v| back[v]).collect::<Vec<_>>())
            .filter(|c| c.iter().any(|&v| g.has_edge(u, v)))
            .collect();
        let b = branches.len();
        if !(2..=MAX_BRANCHES).contains(&b) {
            continue;
        }
        for pick in 1..(1u32 << b) - 1 {
            let mut vertices = vec![u];
            for (i, br) in branches.iter().enumerate() {
                if pick & (1 << i) != 0 {
                    vertices.extend_from_slice(br);
                }
            }
            vertices.sort_unstable();
            let (kg, kback) = g.induced(&vertices);
            let class = classify_eset(&kg);
            if class.kind == EsetKind::NotEset {
                continue;
            }
            let local_u = kback.iter().position(|&v| v == u).unwrap();
            if !class.is_connection_vertex(local_u) {
                continue;
            }
            let classification = EsetClassification {
                connection_vertices: class.connection_vertices.iter().map(|&v| kback[v]).collect(),
                augmentations: class
                    .augmentations
                    .iter()
                    .map(|a| Augmentation {
                        z: kback[a.z],
                        odd_neighbor: kback[a.odd_neighbor],
                        even_neighbor: kback[a.even_neighbor],
                    })
                    .collect(),
                kind: class.kind,
            };
            out.push(HangingEset {
                vertices,
                attachment: u,
                classification,
            });
        }
    }
    out.sort_by(|a, b| (a.attachment, &a.vertices).cmp(&(b.attachment, &b.vertices)));
    out
}

/// Rebuilds a decomposition of `g` from one of `g'` (the graph `g` with the
/// edges inside `k` removed) by absorbing the hanging ESET on `k` into the
/// first path of `rest` through `u`. The result has at most
/// `ceil(|k|/2) + |rest| - 1` paths. When no path of `rest` passes through
/// `u`, the special decomposition of `k` is appended to `rest` unchanged,
/// giving at most `ceil(|k|/2) + |rest|`.
pub fn absorb_hanging(
    g: &SimpleGraph,
    k: &[Vertex],
    u: Vertex,
    rest: &PathDecomposition,
    timeout_ms: u64,
) -> Result<PathDecomposition, SetError> {
    let mut kv = k.to_vec();
    kv.sort_unstable();
    kv.dedup();
    let Ok(local_u) = kv.binary_search(&u) else {
        return Err(SetError::Precondition(format!("{u} is not in the ESET vertex set")));
    };
    let (kg, kback) = g.induced(&kv);
    let inside: Vec<(Vertex, Vertex)> = kg.edges().iter().map(|&(a, b)| (kback[a], kback[b])).collect();
    let g_prime = g.without_edges(&inside);
    if let Err(v) = validate(&g_prime, rest) {
        return Err(SetError::Precondition(format!("rest does not fit g': {v:?}")));
    }
    for &v in &kv {
        if v != u && g_prime.degree(v) > 0 {
            return Err(SetError::Precondition(format!("{v} has neighbours outside the ESET")));
        }
    }
    let class = classify_eset(&kg);
    if class.kind == EsetKind::NotEset || !class.is_connection_vertex(local_u) {
        return Err(SetError::Precondition("not a hanging ESET at u".into()));
    }

    let through = rest.paths().iter().position(|p| p.contains(u));
    let Some(pi) = through else {
        let dk = eset_decompose(&kg, local_u, timeout_ms)?;
        let mut paths = paths_of(rest);
        paths.extend(
            dk.paths()
                .iter()
                .map(|p| p.vertices().iter().map(|&v| kback[v]).collect()),
        );
        let d = PathDecomposition::from_vertex_lists(g.n(), paths).expect("disjoint parts");
        audit(g, &d);
        return Ok(d);
    };

    // relabel: ESET vertices first, then the other vertices of the path
    let p = &rest.paths()[pi];
    let mut to_local = vec![usize::MAX; g.n()];
    for (i, &v) in kback.iter().enumerate() {
        to_local[v] = i;
    }
    let mut from_local = kback.clone();
    for &v in p.vertices() {
        if to_local[v] == usize::MAX {
            to_local[v] = from_local.len();
            from_local.push(v);
        }
    }
    let p_local = PathSeq::new(p.vertices().iter().map(|&v| to_local[v]).collect())
        .expect("relabelled path is simple");
    let h = absorb_path(&kg, local_u, &p_local, timeout_ms)?;

    let mut paths: Vec<Vec<Vertex>> = rest
        .paths()
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pi)
        .map(|(_, q)| q.vertices().to_vec())
        .collect();
    paths.extend(
        h.paths()
            .iter()
            .map(|q| q.vertices().iter().map(|&v| from_local[v]).collect()),
    );
    let d = PathDecomposition::from_vertex_lists(g.n(), paths).expect("disjoint parts");
    audit(g, &d);
    let bound = kv.len().div_ceil(2) + rest.len() - 1;
    if d.len() > bound {
        return Err(SetError::BoundFailed(format!("{} paths, bound {bound}", d.len())));
    }
    Ok(d)
}
