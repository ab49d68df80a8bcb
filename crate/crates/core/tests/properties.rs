use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gallai::decomposition::{audit, audit_counts, validate};
use gallai::generators::{embed_as_even_subgraph, random_set_graph};
use gallai::graph::{canonical_form, even_subgraph, SimpleGraph};
use gallai::harness::random_decomposition;
use gallai::io::{emit_graph6, parse_graph6};
use gallai::set_eset::{eset_decompose, is_set};
use gallai::solver::{brute_force_pn, pn_exact};
use gallai::transforms::{apply_addible, verify_transformation, Direction};

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            SimpleGraph::from_edges(n, &edges).unwrap()
        })
    })
}

fn permutation(n: usize, seed: u64) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witnesses_validate_with_parity(g in graph(8)) {
        let r = pn_exact(&g, 10_000);
        prop_assert!(r.is_exact());
        prop_assert!(audit(&g, &r.witness));
        prop_assert!(r.best_lower_bound <= r.pn);
        for v in 0..g.n() {
            prop_assert_eq!(r.witness.endpoint_counts()[v] % 2, g.degree(v) % 2);
        }
    }

    #[test]
    fn exact_matches_oracle(g in graph(7).prop_filter("oracle size", |g| g.m() <= 12)) {
        prop_assert_eq!(pn_exact(&g, 10_000).pn, brute_force_pn(&g).unwrap());
    }

    #[test]
    fn path_number_is_additive(g in graph(5), h in graph(5)) {
        let both = g.disjoint_union(&h).unwrap();
        prop_assert_eq!(
            pn_exact(&both, 10_000).pn,
            pn_exact(&g, 10_000).pn + pn_exact(&h, 10_000).pn
        );
    }

    #[test]
    fn relabelling_changes_nothing(g in graph(7), seed in any::<u64>()) {
        let h = g.permute(&permutation(g.n(), seed)).unwrap();
        prop_assert_eq!(canonical_form(&g).unwrap(), canonical_form(&h).unwrap());
        prop_assert_eq!(pn_exact(&g, 10_000).pn, pn_exact(&h, 10_000).pn);
    }

    #[test]
    fn graph6_round_trips(g in graph(12)) {
        let line = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&line).unwrap(), g.clone());
        prop_assert_eq!(emit_graph6(&parse_graph6(&line).unwrap()).unwrap(), line);
    }

    #[test]
    fn embedding_inverts_even_subgraph(g in graph(7).prop_filter("connected", |g| g.is_connected())) {
        let host = embed_as_even_subgraph(&g).unwrap();
        let ev = even_subgraph(&host);
        prop_assert_eq!(ev.back_map, (0..g.n()).collect::<Vec<_>>());
        prop_assert_eq!(ev.ev_graph, g);
    }

    #[test]
    fn connected_small_graphs_meet_the_ceiling(g in graph(7).prop_filter("connected", |g| g.is_connected())) {
        prop_assert!(pn_exact(&g, 10_000).pn <= g.n().div_ceil(2));
    }

    #[test]
    fn random_set_graphs_decompose_at_every_vertex(n_odd in 0usize..5, extra in 0usize..4, seed in any::<u64>()) {
        let g = random_set_graph(n_odd, extra, seed).unwrap();
        prop_assert!(is_set(&g));
        if g.n() <= 9 {
            for u in 0..g.n() {
                let d = eset_decompose(&g, u, 10_000).unwrap();
                prop_assert!(validate(&g, &d).is_ok());
                prop_assert!(d.endpoint_counts()[u] >= 2);
                prop_assert!(d.len() <= g.n().div_ceil(2));
            }
        }
    }

    #[test]
    fn chained_certificates_verify(g in graph(7), seed in any::<u64>()) {
        // take two edges at a pivot out, add them back one at a time, and
        // compare the chained certificate with the original graph
        let Some(u) = (0..g.n()).find(|&v| g.degree(v) >= 2) else { return Ok(()); };
        let nb: Vec<usize> = g.neighbors(u).take(2).collect();
        let (e1, e2) = ((u.min(nb[0]), u.max(nb[0])), (u.min(nb[1]), u.max(nb[1])));
        let base = g.without_edges(&[e1, e2]);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let d = random_decomposition(&base, 0.5, &mut rng);
        let Some(c1) = apply_addible(&base, &d, &[e1], u, Direction::Towards, 10_000).unwrap().certificate() else {
            return Ok(());
        };
        let mid = c1.enlarged_graph();
        let Some(c2) = apply_addible(&mid, &c1.after, &[e2], u, Direction::Towards, 10_000).unwrap().certificate() else {
            return Ok(());
        };
        let both = c1.concatenate(&c2).unwrap();
        prop_assert_eq!(both.enlarged_graph(), g);
        prop_assert!(verify_transformation(&both).is_ok());
        prop_assert!(c2.concatenate(&c1).is_err());
    }
}

#[test]
fn audit_hook_has_seen_no_failures() {
    let g = SimpleGraph::complete(6);
    pn_exact(&g, 10_000);
    let c = audit_counts();
    assert!(c.checked > 0);
    assert_eq!(c.failed, 0);
}
