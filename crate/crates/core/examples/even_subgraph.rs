// The subgraph induced by even-degree vertices, and a host realising a
// given graph as that subgraph.

use gallai::generators::embed_as_even_subgraph;
use gallai::graph::{bowtie, even_subgraph, SimpleGraph};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // triangle 0, 1, 2 with 3 and 4 each on 0, 1 and on each other
    let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 0), (4, 1), (3, 4)])?;
    let ev = even_subgraph(&g);
    println!("even vertices {:?}, E-degree {}", ev.even_vertices, ev.max_e_degree);
    println!("components {:?}", ev.component_summaries);

    let h = bowtie();
    let host = embed_as_even_subgraph(&h)?;
    let back = even_subgraph(&host);
    println!("bowtie host: n={} m={}", host.n(), host.m());
    assert_eq!(back.ev_graph, h);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
