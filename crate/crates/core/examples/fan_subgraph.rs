// Recognising Fan subgraphs: even-even single edges plus at most one star.

use gallai::graph::SimpleGraph;
use gallai::transforms::recognize_fan_subgraph;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // triangle 0, 1, 2; vertex 3 on 0, 1 and a leaf 4; vertex 5 on 0, 1 and a leaf 6
    let g = SimpleGraph::from_edges(
        7,
        &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (3, 4), (5, 0), (5, 1), (5, 6)],
    )?;
    let r = recognize_fan_subgraph(&g, &[(3, 4), (3, 0), (1, 2)])?;
    println!("star {:?}", r.star_component);
    println!("singles {:?}", r.single_edge_components);
    println!("clauses {:?} -> fan {}", r.clause_results, r.is_fan);

    let r = recognize_fan_subgraph(&SimpleGraph::cycle(4), &[(0, 1)])?;
    println!("C4 single edge: fan {}", r.is_fan);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
