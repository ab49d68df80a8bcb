// SET and ESET graphs, decompositions with two paths ending at a
// connection vertex, and absorbing a hanging ESET.

use gallai::decomposition::{PathDecomposition, PathSeq};
use gallai::graph::SimpleGraph;
use gallai::set_eset::{absorb_hanging, absorb_path, classify_eset, classify_set, eset_decompose, find_hanging_eset};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let set = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 0), (4, 1), (3, 4)])?;
    println!("{:?}", classify_set(&set));
    for u in 0..5 {
        let d = eset_decompose(&set, u, 5_000)?;
        println!("u={u}: {:?}", d.paths());
    }

    let aug = set.with_new_vertices(1)?.with_edges_added(&[(5, 3), (5, 0)])?;
    let c = classify_eset(&aug);
    println!("augmented: {:?}, connection vertices {:?}", c.kind, c.connection_vertices);
    println!("  {:?}", eset_decompose(&aug, 5, 5_000)?.paths());

    let k3 = SimpleGraph::complete(3);
    let d = absorb_path(&k3, 0, &PathSeq::new(vec![3, 0, 4])?, 5_000)?;
    println!("K3 plus a path through 0: {:?}", d.paths());

    let g = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4)])?;
    for h in find_hanging_eset(&g) {
        println!("hanging {:?} at {}", h.vertices, h.attachment);
        let rest = PathDecomposition::from_vertex_lists(5, vec![vec![2, 3, 4]])?;
        let d = absorb_hanging(&g, &h.vertices, h.attachment, &rest, 5_000)?;
        println!("  {:?}", d.paths());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
