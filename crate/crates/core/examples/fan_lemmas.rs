// The guaranteed cases: one edge towards a pivot, half of a removed fan,
// and an induced matching lifted edge by edge.

use gallai::decomposition::PathDecomposition;
use gallai::graph::SimpleGraph;
use gallai::transforms::{addible_half_fan4, addible_single_fan2, extra_edges_bound, lift_induced_matching};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let p3 = SimpleGraph::path(3);
    let d = PathDecomposition::from_vertex_lists(3, vec![vec![0, 1]])?;
    let c = addible_single_fan2(&p3, (2, 1), &d, 5_000)?.certificate().ok_or("no guarantee")?;
    println!("fan2: {:?} -> {:?}", c.before.paths(), c.after.paths());

    let spider = SimpleGraph::from_edges(7, &[(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])?;
    let d = PathDecomposition::from_vertex_lists(7, vec![vec![4, 1], vec![5, 2], vec![6, 3]])?;
    let (a, c) = addible_half_fan4(&spider, 0, &[(0, 1), (0, 2), (0, 3)], (0, 1), &d, 5_000)?;
    println!("fan4: A = {a:?}, D(0) = {}", c.after.endpoint_counts()[0]);

    let two = SimpleGraph::path(3).disjoint_union(&SimpleGraph::path(3))?;
    let d = PathDecomposition::from_vertex_lists(6, vec![vec![1, 2], vec![4, 5]])?;
    let lifted = lift_induced_matching(&two, &[(0, 1), (3, 4)], &d, 5_000)?;
    println!("matching: {:?}", lifted.paths());

    println!("extra edges bound (|B|=4, |A1|=2, |A2|=1, d2=2): {}", extra_edges_bound(4, 2, 1, 2)?);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
