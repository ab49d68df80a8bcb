// A witness decomposition, its endpoint counts and its JSON form.

use gallai::decomposition::{passing_neighbors, validate, PathDecomposition};
use gallai::graph::SimpleGraph;
use gallai::solver::pn_exact;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // the Petersen graph
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((i + 5, (i + 2) % 5 + 5));
    }
    let g = SimpleGraph::from_edges(10, &edges)?;
    let r = pn_exact(&g, 10_000);
    println!("pn(Petersen) = {}", r.pn);
    for p in r.witness.paths() {
        println!("  {:?}", p.vertices());
    }
    validate(&g, &r.witness).map_err(|v| format!("{v:?}"))?;
    println!("D(u) = {:?}", r.witness.endpoint_counts());
    println!("passing neighbours of 0: {:?}", passing_neighbors(&g, &r.witness, 0)?);

    let json = r.witness.to_json();
    let back = PathDecomposition::from_json(g.n(), &json)?;
    assert_eq!(back, r.witness);
    println!("{json}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
