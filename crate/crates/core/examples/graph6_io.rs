// graph6 and edge-list conversion.

use gallai::graph::SimpleGraph;
use gallai::io::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for g in [SimpleGraph::complete(4), SimpleGraph::cycle(5), SimpleGraph::path(2)] {
        let line = emit_graph6(&g)?;
        assert_eq!(parse_graph6(&line)?, g);
        println!("{line:8} {:?}", g.edges());
    }
    let g = parse_edge_list("4 4\n0 1\n1 2\n2 3\n3 0\n")?;
    println!("{}", emit_graph6(&g)?);
    print!("{}", emit_edge_list(&g));
    match parse_graph6("D?") {
        Err(e) => println!("truncated line rejected: {e}"),
        Ok(_) => unreachable!(),
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
