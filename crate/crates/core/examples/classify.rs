// Classification records for a few graphs, as JSON lines.

use gallai::generators::{embed_as_even_subgraph, figure1_family, Figure1Kind};
use gallai::graph::SimpleGraph;
use gallai::harness::{classify_all, ClassifyBudget};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (chain, _) = figure1_family(Figure1Kind::Chain, 2)?;
    let graphs = vec![
        SimpleGraph::complete(5).without_edges(&[(0, 1)]),
        SimpleGraph::cycle(4),
        embed_as_even_subgraph(&chain)?,
    ];
    for r in classify_all(&graphs, &ClassifyBudget::default()) {
        println!("{}", r.to_json_line());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
