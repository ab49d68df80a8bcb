// The graph families: cliques minus a matching, triangle chains and
// necklaces, random SET graphs and small connected graphs.

use gallai::generators::{
    clique_minus_matching, enumerate_connected, figure1_family, random_set_graph, Figure1Kind,
};
use gallai::io::emit_graph6;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for k in 1..=4 {
        let g = clique_minus_matching(k)?;
        println!("K{} minus {} edges: {}", 2 * k + 1, k - 1, emit_graph6(&g)?);
    }
    for (kind, t) in [(Figure1Kind::Chain, 4), (Figure1Kind::Necklace, 4)] {
        let (p, w) = figure1_family(kind, t)?;
        println!("{kind:?} t={t}: n={} m={}, completion adds {}", p.n(), p.m(), w.supergraph.m() - p.m());
    }
    for seed in 0..3 {
        let g = random_set_graph(4, 2, seed)?;
        println!("random SET seed {seed}: {}", emit_graph6(&g)?);
    }
    let counts: Vec<usize> = (1..=6).map(|n| enumerate_connected(n).map(|v| v.len())).collect::<Result<_, _>>()?;
    println!("connected graphs by order: {counts:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<(), Box<dyn std::error::Error>> {
    run()
}
