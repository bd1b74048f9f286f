use super::*;
use crate::cl_structures::catalog_entry;
use crate::multigraph::{connected_multigraphs, named::*};
use crate::Error;

fn g(n: usize, edges: &[(usize, usize)]) -> Multigraph {
    Multigraph::new(n, edges).unwrap()
}

fn witness_ok(r: &RealizabilityReport, graph: &Multigraph) {
    let w = r.witness.as_ref().expect("YES carries a witness");
    assert_eq!(&w.graph, graph);
    assert!(w.is_strip() && w.is_orientable(), "{w:?}");
}

fn disc(t: &Multigraph) -> RibbonStructure {
    RibbonStructure::with_default_rotation(t.clone(), EdgeSet::EMPTY).unwrap()
}

fn entry(name: &str) -> RibbonStructure {
    catalog_entry(name).unwrap().structure
}

/// Xuong: a one-face orientable embedding exists iff some spanning tree leaves a
/// cotree whose edge-components all have an even number of edges.
fn xuong_realizable(h: &Multigraph) -> bool {
    let (n, m) = (h.n(), h.m());
    (0u64..1 << m)
        .filter(|t| t.count_ones() as usize + 1 == n)
        .map(EdgeSet)
        .filter(|&t| h.is_forest(t))
        .any(|t| {
            let co = EdgeSet(h.all_edges().0 & !t.0);
            let labels = h.component_labels(co);
            let mut count = vec![0usize; n];
            for e in co.iter() {
                count[labels[h.edge_ends(e).0]] += 1;
            }
            count.iter().all(|c| c % 2 == 0)
        })
}

#[test]
fn verdict_display() {
    assert_eq!(Verdict::Yes.to_string(), "YES");
    assert_eq!(Verdict::Unknown.to_string(), "UNKNOWN");
}

#[test]
fn screens() {
    assert_eq!(screen_odd_q(&cycle(3)).unwrap().unwrap().verdict, Verdict::No);
    assert!(screen_odd_q(&theta()).unwrap().is_none());
    assert!(screen_odd_q(&petersen()).unwrap().is_none());

    let chain = g(4, &[(0, 0), (0, 1), (1, 2), (2, 3), (3, 1)]);
    assert_eq!(screen_loop_deg3(&chain).unwrap().unwrap().criterion, LOOP_AT_3);
    assert!(screen_loop_deg3(&bouquet(2)).unwrap().is_none());
    assert!(screen_loop_deg3(&complete(4)).unwrap().is_none());
    // degree 4 in the graph, 3 once the pendant edge is pruned
    let pendant = g(3, &[(0, 0), (0, 1), (1, 1), (0, 2)]);
    assert!(screen_loop_deg3(&handcuff()).unwrap().is_some());
    assert!(screen_loop_deg3(&pendant).unwrap().is_some());
    assert!(screen_loop_deg3(&g(2, &[(0, 0), (0, 0), (0, 1)])).unwrap().is_none());
}

#[test]
fn bridge_screen() {
    let kb = KnownBad::seeded();
    let bad = entry("cubic4-three-digons").graph;
    let mut edges = bad.edge_list();
    edges.extend([(0, 6), (6, 7), (7, 8), (8, 6)]);
    let joined = g(9, &edges);
    assert_eq!(screen_bridge_nonrealizable(&joined, &kb).unwrap().unwrap().verdict, Verdict::No);
    assert!(screen_bridge_nonrealizable(&petersen(), &kb).unwrap().is_none());
    let thetas = g(4, &[(0, 1), (0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (2, 3)]);
    assert!(screen_bridge_nonrealizable(&thetas, &kb).unwrap().is_none());
    assert_eq!(decide(&thetas, &kb).unwrap().criterion, BRIDGE_JOIN);
}

#[test]
fn oracle_examples() {
    let p = oracle(&petersen()).unwrap();
    assert_eq!(p.verdict, Verdict::Yes);
    witness_ok(&p, &petersen());
    assert_eq!(oracle(&handcuff()).unwrap().verdict, Verdict::No);
    let triangles = g(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]);
    assert_eq!(oracle(&triangles).unwrap().verdict, Verdict::No);
    assert_eq!(oracle(&bouquet(2)).unwrap().verdict, Verdict::Yes);
    assert_eq!(oracle(&entry("cubic4-three-digons").graph).unwrap().verdict, Verdict::No);
    assert_eq!(oracle(&path(4)).unwrap().verdict, Verdict::Yes);
    assert!(matches!(oracle(&complete(8)), Err(Error::BudgetExceeded { .. })));
}

#[test]
fn witnesses_lift_through_pendants_and_subdivisions() {
    // theta with one edge subdivided twice, a pendant path and a pendant star
    let h = g(8, &[(0, 2), (2, 3), (3, 1), (0, 1), (1, 0), (1, 4), (4, 5), (0, 6), (0, 7)]);
    let r = oracle(&h).unwrap();
    witness_ok(&r, &h);
    let d = decide(&h, &KnownBad::new()).unwrap();
    witness_ok(&d, &h);
    let tree = g(4, &[(0, 1), (1, 2), (1, 3)]);
    witness_ok(&decide(&tree, &KnownBad::new()).unwrap(), &tree);
}

#[test]
fn xuong_agrees_with_oracle() {
    for h in connected_multigraphs(6) {
        let want = xuong_realizable(&h);
        let got = oracle(&h).unwrap();
        assert_eq!(got.verdict == Verdict::Yes, want, "{:?}", h.edge_list());
        if want {
            witness_ok(&got, &h);
        }
    }
}

#[test]
fn decider_never_contradicts_oracle() {
    let kb = KnownBad::seeded();
    let mut decided = 0;
    for h in connected_multigraphs(6) {
        let d = decide(&h, &kb).unwrap();
        if d.verdict == Verdict::Unknown {
            continue;
        }
        decided += 1;
        assert_eq!(d.verdict, oracle(&h).unwrap().verdict, "{} on {:?}", d.criterion, h.edge_list());
        if d.verdict == Verdict::Yes {
            witness_ok(&d, &h);
        }
    }
    assert!(decided > 0);
}

#[test]
fn loop_at_degree_three_is_never_realizable() {
    for h in connected_multigraphs(6) {
        if screen_loop_deg3(&h).unwrap().is_some() {
            assert_eq!(oracle(&h).unwrap().verdict, Verdict::No);
        }
    }
}

#[test]
fn petersen_by_criteria() {
    let kb = KnownBad::seeded();
    let d = decide(&petersen(), &kb).unwrap();
    assert_eq!(d.verdict, Verdict::Yes);
    witness_ok(&d, &petersen());
    let r = three_links(&petersen(), &kb).unwrap().unwrap();
    assert_eq!(r.criterion, THREE_LINKS);
    witness_ok(&r, &petersen());
}

#[test]
fn compose_tree_examples() {
    let t = entry("theta-orientable");
    let two = g(3, &[(0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2)]);
    let parts = [
        Part { structure: t.clone(), vertices: vec![0, 1], edges: vec![0, 1, 2] },
        Part { structure: t.clone(), vertices: vec![1, 2], edges: vec![3, 4, 5] },
    ];
    let r = compose_tree(&two, &parts).unwrap();
    assert!(r.is_strip() && r.is_orientable());
    assert_eq!(two.cycle_rank(), Ok(4));

    let single = compose_tree(&t.graph, &[Part { structure: t.clone(), vertices: vec![0, 1], edges: vec![0, 1, 2] }]).unwrap();
    assert_eq!(single, t);

    let tri = cycle(3);
    let edge = disc(&path(2));
    let parts: Vec<Part> = (0..3)
        .map(|i| Part { structure: edge.clone(), vertices: vec![i, (i + 1) % 3], edges: vec![i] })
        .collect();
    // the last edge runs 2 -> 0, so its part is stated with that orientation
    assert!(matches!(compose_tree(&tri, &parts), Err(Error::Construction(_))));

    let overlap = [
        Part { structure: t.clone(), vertices: vec![0, 1], edges: vec![0, 1, 2] },
        Part { structure: t, vertices: vec![1, 2], edges: vec![2, 4, 5] },
    ];
    assert!(compose_tree(&two, &overlap).is_err());
}

#[test]
fn connect_two_examples() {
    let pt = disc(&path(1));
    let theta_join = connect_two(&pt, &pt, &[(0, 0), (0, 0), (0, 0)]).unwrap();
    assert_eq!(theta_join.twists, EdgeSet::full(3));
    assert!(theta_join.is_strip() && theta_join.is_orientable());

    let torus = entry("torus-bouquet");
    let r = connect_two(&torus, &torus, &[(0, 0)]).unwrap();
    assert!(r.is_strip() && r.is_orientable());
    assert_eq!(r.graph.cycle_rank(), Ok(4));

    let t = entry("theta-orientable");
    assert!(matches!(connect_two(&t, &t, &[(0, 0), (1, 1)]), Err(Error::NotAStrip { components }) if components >= 2));
    assert!(matches!(connect_two(&t, &t, &[(0, 0); 4]), Err(Error::Construction(_))));
    assert!(connect_two(&t, &entry("theta-nonorientable"), &[(0, 0)]).is_err());

    // three links with every parity pattern
    let prism = oracle(&entry("cubic4-prism").graph).unwrap().witness.unwrap();
    for links in [[(0, 0), (1, 1), (2, 2)], [(0, 1), (1, 0), (5, 2)], [(0, 0), (0, 1), (0, 2)], [(1, 3), (2, 3), (4, 3)]] {
        let r = connect_two(&prism, &t, &links.map(|(u, v)| (u, v % 2))).unwrap();
        assert!(r.is_strip() && r.is_orientable());
        let r = connect_two(&prism, &prism, &links).unwrap();
        assert!(r.is_strip() && r.is_orientable());
    }
}

#[test]
fn k2_catalog_join_is_not_a_strip() {
    let j = entry("k2-join");
    assert!(j.is_orientable());
    assert!(j.boundary_count() >= 2);
    assert_eq!(j.graph.cycle_rank(), Ok(5));
}

#[test]
fn join_trees_examples() {
    let pt = path(1);
    let th = join_trees(&pt, &pt, &[(0, 0); 3]).unwrap();
    assert_eq!(th.twists, EdgeSet::full(3));
    let five = join_trees(&pt, &pt, &[(0, 0); 5]).unwrap();
    assert!(five.is_strip() && five.is_orientable());
    assert_eq!(five.graph.cycle_rank(), Ok(4));
    let one = join_trees(&path(3), &path(2), &[(1, 0)]).unwrap();
    assert!(one.is_strip() && one.is_orientable());
    assert_eq!(one.graph.cycle_rank(), Ok(0));
    assert!(join_trees(&pt, &pt, &[(0, 0); 2]).is_err());
    assert!(join_trees(&cycle(3), &pt, &[(0, 0)]).is_err());
}

#[test]
fn known_bad_persists() {
    let dir = tempfile::tempdir().unwrap();
    let mut kb = KnownBad::load_dir(&dir.path().join("missing")).unwrap();
    assert_eq!(kb, KnownBad::seeded());
    assert!(kb.contains(&entry("cubic4-three-digons").graph).unwrap());
    let hc = handcuff();
    let path = kb.record(dir.path(), &hc).unwrap().unwrap();
    assert!(path.exists());
    assert_eq!(kb.record(dir.path(), &hc).unwrap(), None);
    let back = KnownBad::load_dir(dir.path()).unwrap();
    assert!(back.contains(&hc).unwrap());
    assert_eq!(back.len(), 2);
}

mod props {
    use super::*;
    use proptest::prelude::*;

    fn arb_tree(max: usize) -> impl Strategy<Value = Multigraph> {
        (1..=max).prop_flat_map(|n| {
            proptest::collection::vec(any::<prop::sample::Index>(), n - 1).prop_map(move |ps| {
                let edges: Vec<_> = ps.iter().enumerate().map(|(i, p)| (p.index(i + 1), i + 1)).collect();
                Multigraph::new(n, &edges).unwrap()
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn join_trees_is_sound(
            t1 in arb_tree(4),
            t2 in arb_tree(4),
            k in 0usize..3,
            picks in proptest::collection::vec(any::<(prop::sample::Index, prop::sample::Index)>(), 5),
        ) {
            let k = 2 * k + 1;
            let links: Vec<_> = picks[..k].iter().map(|(a, b)| (a.index(t1.n()), b.index(t2.n()))).collect();
            let r = join_trees(&t1, &t2, &links).unwrap();
            prop_assert!(r.is_strip() && r.is_orientable());
        }
    }
}
