use serde::Serialize;

use super::{blocks, SimpleGraph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComponentSummary {
    pub vertex_count: usize,
    pub block_count: usize,
    pub triangle_block_count: usize,
    pub max_degree: usize,
}

/// The E-subgraph of a host graph: the subgraph induced by its even-degree
/// vertices, relabelled to `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ESubgraphReport {
    pub even_vertices: Vec<Vertex>,
    pub ev_graph: SimpleGraph,
    /// `back_map[i]` is the host label of E-subgraph vertex `i`.
    pub back_map: Vec<Vertex>,
    pub max_e_degree: usize,
    pub component_summaries: Vec<ComponentSummary>,
}

impl ESubgraphReport {
    /// Edges of the E-subgraph in host labels.
    pub fn host_edges(&self) -> Vec<(Vertex, Vertex)> {
        self.ev_graph
            .edges()
            .into_iter()
            .map(|(a, b)| (self.back_map[a], self.back_map[b]))
            .collect()
    }

    /// True iff every component of the E-subgraph is a triangle.
    pub fn all_components_triangles(&self) -> bool {
        let g = &self.ev_graph;
        g.n() > 0
            && g.components()
                .iter()
                .all(|c| c.len() == 3 && c.iter().all(|&v| g.degree(v) == 2))
    }

    pub fn is_single_triangle(&self) -> bool {
        self.ev_graph.n() == 3 && self.ev_graph.m() == 3
    }
}

pub fn even_subgraph(g: &SimpleGraph) -> ESubgraphReport {
    let even_vertices = g.even_vertices();
    let (ev_graph, back_map) = g.induced(&even_vertices);
    let b = blocks(&ev_graph);
    let component_summaries = ev_graph
        .components()
        .into_iter()
        .map(|comp| {
            let in_comp: Vec<usize> = (0..b.blocks.len())
                .filter(|&i| comp.binary_search(&b.blocks[i][0]).is_ok())
                .collect();
            ComponentSummary {
                vertex_count: comp.len(),
                block_count: in_comp.len(),
                triangle_block_count: in_comp
                    .iter()
                    .filter(|&&i| b.block_has_triangle(&ev_graph, i))
                    .count(),
                max_degree: comp.iter().map(|&v| ev_graph.degree(v)).max().unwrap_or(0),
            }
        })
        .collect();
    ESubgraphReport {
        max_e_degree: ev_graph.max_degree(),
        even_vertices,
        ev_graph,
        back_map,
        component_summaries,
    }
}
