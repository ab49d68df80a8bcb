// Exact path numbers, lower bounds and the brute-force oracle.

use gallai::decomposition::gallai_status;
use gallai::graph::SimpleGraph;
use gallai::solver::{brute_force_pn, pn_exact, pn_lower_bound};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let graphs = [
        ("K5", SimpleGraph::complete(5)),
        ("K5 - e", SimpleGraph::complete(5).without_edges(&[(0, 1)])),
        ("C6", SimpleGraph::cycle(6)),
        ("star K1,4", SimpleGraph::star(4)),
        ("K8", SimpleGraph::complete(8)),
    ];
    for (name, g) in &graphs {
        let r = pn_exact(g, 10_000);
        let oracle = if g.m() <= 12 {
            brute_force_pn(g)?.to_string()
        } else {
            "-".into()
        };
        println!(
            "{name:10} n={} m={:2} lb={} pn={} oracle={oracle} status={:?} nodes={}",
            g.n(),
            g.m(),
            pn_lower_bound(g),
            r.pn,
            gallai_status(g.n(), r.pn),
            r.nodes_explored,
        );
        assert!(r.is_exact());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
