// Adding edges back at a pivot while keeping the number of paths, with a
// certificate that is checked independently.

use gallai::decomposition::PathDecomposition;
use gallai::graph::SimpleGraph;
use gallai::transforms::{apply_addible, verify_transformation, Direction, TransformationCertificate};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // star at 0 with leaves 1..=3 hanging off a path 4-1, 5-2, 6-3
    let g = SimpleGraph::from_edges(7, &[(1, 4), (2, 5), (3, 6)])?;
    let d = PathDecomposition::from_vertex_lists(7, vec![vec![4, 1], vec![5, 2], vec![6, 3]])?;
    let a = [(0, 1), (0, 2)];
    let cert = apply_addible(&g, &d, &a, 0, Direction::Towards, 5_000)?
        .certificate()
        .ok_or("not addible")?;
    println!("before {:?}", cert.before.paths());
    println!("after  {:?}", cert.after.paths());
    verify_transformation(&cert).map_err(|v| format!("{v:?}"))?;

    let json = cert.to_json();
    assert_eq!(TransformationCertificate::from_json(&json)?, cert);
    println!("{json}");

    let out = apply_addible(&g, &d, &[(0, 1)], 0, Direction::Outwards, 5_000)?;
    println!("outwards from a vertex with no ends: {}", out.certificate().is_some());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
