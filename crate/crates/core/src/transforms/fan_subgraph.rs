use serde::Serialize;

use crate::graph::{even_subgraph, Edge, SimpleGraph, Vertex};

use super::{norm, TransformError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StarComponent {
    pub center: Vertex,
    /// `leaves[0]` is the leaf allowed to be odd.
    pub leaves: Vec<Vertex>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FanSubgraphReport {
    pub star_component: Option<StarComponent>,
    pub single_edge_components: Vec<Edge>,
    /// Every component other than the star is one edge between even vertices.
    pub singles_even: bool,
    /// `[shape, center, odd leaf]`: the star has at least two leaves and all
    /// but the first are even; the center has no even neighbour once `F` is
    /// removed; an odd first leaf forces an odd center and an E-subgraph made
    /// of triangles. All true when there is no star.
    pub clause_results: [bool; 3],
    pub is_fan: bool,
}

/// Decides whether the edge set `f_edges` of `g` forms a Fan subgraph. The
/// star component, if any, is the unique component that is not a single
/// edge between even vertices; its odd leaf (if one) is taken as the first
/// leaf.
pub fn recognize_fan_subgraph(
    g: &SimpleGraph,
    f_edges: &[Edge],
) -> Result<FanSubgraphReport, TransformError> {
    let mut f: Vec<Edge> = f_edges.iter().map(|&e| norm(e)).collect();
    f.sort_unstable();
    f.dedup();
    if f.is_empty() {
        return Err(TransformError::Precondition("empty edge set".into()));
    }
    for &(a, b) in &f {
        if b >= g.n() || !g.has_edge(a, b) {
            return Err(TransformError::Precondition(format!("({a}, {b}) is not an edge")));
        }
    }
    let fg = SimpleGraph::from_edges(g.n(), &f).expect("edges checked");
    let mut singles = Vec::new();
    let mut others: Vec<Vec<Edge>> = Vec::new();
    for comp in fg.components() {
        if comp.len() < 2 {
            continue;
        }
        let edges: Vec<Edge> = f
            .iter()
            .copied()
            .filter(|&(a, _)| comp.binary_search(&a).is_ok())
            .collect();
        if edges.len() == 1 && g.is_even(edges[0].0) && g.is_even(edges[0].1) {
            singles.push(edges[0]);
        } else {
            others.push(edges);
        }
    }

    let mut report = FanSubgraphReport {
        star_component: None,
        single_edge_components: singles,
        singles_even: others.len() <= 1,
        clause_results: [true; 3],
        is_fan: false,
    };
    match others.len() {
        0 => {
            report.is_fan = true;
            return Ok(report);
        }
        1 => {}
        _ => {
            report.clause_results = [false; 3];
            return Ok(report);
        }
    }

    let star = &others[0];
    let center = star_center(star);
    let Some(u) = center else {
        report.clause_results = [false; 3];
        return Ok(report);
    };
    let mut leaves: Vec<Vertex> = star
        .iter()
        .map(|&(a, b)| if a == u { b } else { a })
        .collect();
    let odd_leaves: Vec<Vertex> = leaves.iter().copied().filter(|&v| !g.is_even(v)).collect();
    if let Some(&v1) = odd_leaves.first() {
        leaves.retain(|&v| v != v1);
        leaves.insert(0, v1);
    }
    let shape = leaves.len() >= 2 && odd_leaves.len() <= 1;

    let rest = g.without_edges(&f);
    let center_ok = rest.neighbors(u).all(|w| !rest.is_even(w));

    let v1 = leaves[0];
    let odd_leaf_ok = g.is_even(v1) || (!g.is_even(u) && even_subgraph(g).all_components_triangles());

    report.clause_results = [shape, center_ok, odd_leaf_ok];
    report.is_fan = shape && center_ok && odd_leaf_ok;
    report.star_component = Some(StarComponent { center: u, leaves });
    Ok(report)
}

fn star_center(edges: &[Edge]) -> Option<Vertex> {
    let (a, b) = edges[0];
    if edges.len() == 1 {
        return Some(a);
    }
    [a, b]
        .into_iter()
        .find(|&c| edges.iter().all(|&(x, y)| x == c || y == c))
}
