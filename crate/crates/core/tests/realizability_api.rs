use clstrata::multigraph::{connected_multigraphs, named};
use clstrata::realizability::{decide, oracle, realizable, KnownBad};
use clstrata::{Multigraph, Verdict};
use proptest::prelude::*;

fn arb_connected(max_n: usize, max_extra: usize) -> impl Strategy<Value = Multigraph> {
    (1..=max_n, 0..=max_extra).prop_flat_map(|(n, extra)| {
        let tree = proptest::collection::vec(any::<prop::sample::Index>(), n - 1);
        let more = proptest::collection::vec((0..n, 0..n), extra);
        (tree, more).prop_map(move |(ps, more)| {
            let mut edges: Vec<(usize, usize)> = ps.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
            edges.extend(more);
            Multigraph::new(n, &edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn decider_agrees_with_oracle_and_witnesses_are_sound(g in arb_connected(6, 5)) {
        let kb = KnownBad::seeded();
        let truth = oracle(&g).unwrap();
        if let Some(w) = &truth.witness {
            prop_assert!(w.is_strip() && w.is_orientable());
            prop_assert_eq!(&w.graph, &g);
        }
        let d = decide(&g, &kb).unwrap();
        if d.verdict != Verdict::Unknown {
            prop_assert_eq!(d.verdict, truth.verdict);
        }
        let full = realizable(&g, &kb, true).unwrap();
        prop_assert_eq!(full.verdict, truth.verdict);
    }
}

#[test]
fn recorded_failures_feed_the_bridge_screen() {
    let dir = tempfile::tempdir().unwrap();
    let mut kb = KnownBad::load_dir(dir.path()).unwrap();
    let k4 = named::complete(4);
    assert_eq!(oracle(&k4).unwrap().verdict, Verdict::No);
    kb.record(dir.path(), &k4).unwrap();
    // K4 with a pendant triangle hanging off a bridge
    let mut edges = k4.edge_list();
    edges.extend([(0, 4), (4, 5), (5, 6), (6, 4)]);
    let g = Multigraph::new(7, &edges).unwrap();
    let reloaded = KnownBad::load_dir(dir.path()).unwrap();
    let r = decide(&g, &reloaded).unwrap();
    assert_eq!(r.verdict, Verdict::No);
}

#[test]
fn oracle_is_deterministic_across_thread_counts() {
    let graphs: Vec<Multigraph> = connected_multigraphs(5).into_iter().filter(|g| g.m() == 5).collect();
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| graphs.iter().map(|g| oracle(g).unwrap()).collect::<Vec<_>>())
    };
    assert_eq!(run(1), run(3));
}
