// Decompositions with prescribed endpoint counts.

use gallai::graph::SimpleGraph;
use gallai::solver::{constrained_decompose, EndpointConstraint};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let k4 = SimpleGraph::complete(4);
    // three paths, all three ending at vertex 0
    let mut c = EndpointConstraint::unconstrained(4, 3);
    c.targets = vec![Some(3), Some(1), Some(1), Some(1)];
    println!("{:?}", constrained_decompose(&k4, &c, 5_000)?);

    // two paths cannot end at four odd vertices and leave one of them free
    c.total = 2;
    c.targets = vec![Some(3), None, None, None];
    println!("{:?}", constrained_decompose(&k4, &c, 5_000)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
