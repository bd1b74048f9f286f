use super::*;
use crate::multigraph::{are_isomorphic, enumerate_cubic_q4, named::*};

fn entry(name: &str) -> RibbonStructure {
    catalog_entry(name).unwrap().structure
}

fn counts(name: &str, gens: Generators) -> (usize, usize, usize) {
    let r = entry(name);
    let rep = classify(name, &r.graph, &r.rotation, gens).unwrap();
    (rep.raw_strips, rep.orientable_raw, rep.class_count())
}

const FLIPS_AUTOS: Generators = Generators { complement: false, flips: true, automorphisms: true };

#[test]
fn catalog_shapes() {
    let cat = catalog();
    assert_eq!(cat.iter().filter(|e| e.has_tag("q4-cubic")).count(), 6);
    for e in &cat {
        let r = &e.structure;
        assert!(r.graph.is_connected(), "{}", e.name);
        assert!(!e.description.is_empty());
        if e.has_tag("q4-cubic") {
            assert!(r.graph.is_cubic() && r.graph.is_loopless());
            assert_eq!(r.graph.cycle_rank(), Ok(4));
        }
        if e.has_tag("planar") {
            let flat = boundary_count(&r.rotation, EdgeSet::EMPTY);
            assert_eq!(flat + r.graph.n(), r.graph.m() + 2, "{} is not stored planar", e.name);
        }
    }
    let t = entry("torus-bouquet");
    assert_eq!((t.graph.n(), t.graph.m()), (1, 2));
    assert!(t.is_strip() && t.is_orientable());
    let p = entry("petersen");
    assert!(are_isomorphic(&p.graph, &petersen()).unwrap());
    assert_eq!(boundary_count(&p.rotation, EdgeSet::EMPTY), 3);
    let to = entry("theta-orientable");
    assert!(to.is_strip() && to.is_orientable());
    let tn = entry("theta-nonorientable");
    assert!(tn.is_strip() && !tn.is_orientable());
    let k2 = entry("k2-join");
    assert!(k2.is_orientable());
    assert!(k2.boundary_count() >= 2);
    assert_eq!(entry("cubic4-k33").graph.bridges(), EdgeSet::EMPTY);
}

#[test]
fn census_matches_catalog() {
    let cat: Vec<_> = catalog().into_iter().filter(|e| e.has_tag("q4-cubic")).collect();
    for g in enumerate_cubic_q4() {
        let hits = cat
            .iter()
            .filter(|e| are_isomorphic(&g, &e.structure.graph).unwrap())
            .count();
        assert_eq!(hits, 1);
    }
}

#[test]
fn strip_enumeration_examples() {
    let loop1 = bouquet(1);
    let rot = RotationSystem::default_for(&loop1);
    assert_eq!(enumerate_strips(&loop1, &rot).unwrap(), vec![EdgeSet::singleton(0)]);
    let t = entry("theta-orientable");
    let strips = enumerate_strips(&t.graph, &t.rotation).unwrap();
    assert!(strips.contains(&EdgeSet::full(3)));
    assert!(strips.windows(2).all(|w| w[0] < w[1]));
    let nk = entry("cubic4-three-digons");
    let strips = enumerate_strips(&nk.graph, &nk.rotation).unwrap();
    let digons = EdgeSet::from_edges([0, 1, 4, 5, 6, 7]);
    assert!(!strips.contains(&digons));
    assert_eq!(boundary_count(&nk.rotation, digons), 3);
    let big = Multigraph::new(1, &vec![(0, 0); 25]).unwrap();
    assert!(matches!(
        enumerate_strips(&big, &RotationSystem::default_for(&big)),
        Err(Error::BudgetExceeded { .. })
    ));
}

#[test]
fn orbit_examples() {
    let t = entry("theta-orientable");
    let orbit = equivalence_orbit(&t, Generators::ALL).unwrap();
    let flipped = t.vertex_flip(0).unwrap();
    assert!(orbit.contains(&flipped));
    assert_eq!(flipped.twists, EdgeSet::EMPTY);
    // closure
    let set: BTreeSet<_> = orbit.iter().map(|r| (r.rotation.clone(), r.twists)).collect();
    let autos = automorphisms(&t.graph).unwrap();
    for r in &orbit {
        for v in 0..2 {
            let f = r.vertex_flip(v).unwrap();
            assert!(set.contains(&(f.rotation.clone(), f.twists)));
        }
        for a in &autos {
            let s = r.relabel(a);
            assert!(set.contains(&(s.rotation.clone(), s.twists)));
        }
        let c = r.twists.xor(EdgeSet::full(3));
        assert!(set.contains(&(r.rotation.clone(), c)));
    }
}

/// Slice orbits computed from stabiliser maps agree with full orbits cut down to the slice.
#[test]
fn slice_orbits_match_full_orbits() {
    for name in ["theta-orientable", "cubic4-prism", "cubic4-bridge", "cubic4-two-digons", "torus-bouquet"] {
        let r = entry(name);
        for gens in Generators::all_regimes() {
            let maps = slice_maps(&r.graph, &r.rotation, gens).unwrap();
            let strips = enumerate_strips(&r.graph, &r.rotation).unwrap();
            for &t in strips.iter().take(12) {
                let s = RibbonStructure { twists: t, ..r.clone() };
                let full: BTreeSet<EdgeSet> = equivalence_orbit(&s, gens)
                    .unwrap()
                    .into_iter()
                    .filter(|x| x.rotation == r.rotation)
                    .map(|x| x.twists)
                    .collect();
                let mut slice = BTreeSet::from([t]);
                let mut queue = vec![t];
                while let Some(x) = queue.pop() {
                    for m in &maps {
                        let y = m.apply(x);
                        if slice.insert(y) {
                            queue.push(y);
                        }
                    }
                }
                assert_eq!(slice, full, "{name} {gens}");
            }
        }
    }
}

#[test]
fn raw_counts_on_stored_rotations() {
    let expect = [
        ("cubic4-bridge", 128, 8),
        ("cubic4-two-digons", 160, 8),
        ("cubic4-three-digons", 128, 0),
        ("cubic4-one-digon", 176, 8),
        ("cubic4-prism", 208, 12),
        ("cubic4-k33", 216, 12),
    ];
    for (name, raw, or) in expect {
        let (r, o, _) = counts(name, Generators::NONE);
        assert_eq!((r, o), (raw, or), "{name}");
    }
}

#[test]
fn class_counts_per_regime() {
    let names = ["cubic4-bridge", "cubic4-two-digons", "cubic4-three-digons", "cubic4-one-digon", "cubic4-prism", "cubic4-k33"];
    let got = |gens| names.map(|n| counts(n, gens).2);
    assert_eq!(got(FLIPS_AUTOS), [1, 2, 0, 2, 2, 1]);
    assert_eq!(got(Generators::ALL), [1, 2, 0, 2, 2, 1]);
    assert_eq!(got(Generators { complement: false, flips: false, automorphisms: true }), [6, 6, 0, 6, 4, 6]);
    assert_eq!(got(Generators::NONE), [8, 8, 0, 8, 12, 12]);
}

#[test]
fn classes_have_genus_two_and_respect_two_and_three_cycles() {
    for e in catalog().into_iter().filter(|e| e.has_tag("q4-cubic")) {
        let r = &e.structure;
        for gens in [FLIPS_AUTOS, Generators::ALL, Generators::NONE] {
            let rep = classify(e.name, &r.graph, &r.rotation, gens).unwrap();
            for c in &rep.orientable_classes {
                assert_eq!(c.surface.genus(), Some(2));
                assert_eq!(c.surface.euler_characteristic, -2);
                if !gens.complement {
                    assert!(c.uniform);
                }
            }
            if e.has_tag("planar") {
                assert!(verify_cor_2v(&rep), "{}", e.name);
            }
        }
        for t in enumerate_strips(&r.graph, &r.rotation).unwrap() {
            let s = RibbonStructure { twists: t, ..r.clone() };
            if !s.is_orientable() {
                assert_eq!(s.closed_euler().unwrap().crosscaps(), Some(4));
            }
        }
    }
}

#[test]
fn counts_invariant_under_flipped_rotation() {
    let r = entry("cubic4-one-digon");
    let base = classify("a", &r.graph, &r.rotation, FLIPS_AUTOS).unwrap();
    for v in [0, 3, 5] {
        let f = r.vertex_flip(v).unwrap();
        let rep = classify("b", &f.graph, &f.rotation, FLIPS_AUTOS).unwrap();
        assert_eq!(
            (rep.raw_strips, rep.orientable_raw, rep.class_count()),
            (base.raw_strips, base.orientable_raw, base.class_count())
        );
    }
}

#[test]
fn classify_is_deterministic_across_thread_counts() {
    let r = entry("cubic4-prism");
    let run = |threads| {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap()
            .install(|| classify("prism", &r.graph, &r.rotation, Generators::ALL).unwrap())
    };
    let a = run(1);
    assert_eq!(a, run(4));
    assert_eq!(a.to_json(), run(3).to_json());
}

#[test]
fn small_anchors() {
    let t = entry("torus-bouquet");
    let rep = classify("torus", &t.graph, &t.rotation, Generators::ALL).unwrap();
    assert_eq!(rep.class_count(), 1);
    assert_eq!(rep.orientable_classes[0].surface.genus(), Some(1));
    let nk = entry("cubic4-three-digons");
    let rep = classify("necklace", &nk.graph, &nk.rotation, Generators::ALL).unwrap();
    assert!(rep.orientable_classes.is_empty());
    assert!(rep.to_json().contains("\"orientable_classes\": []"));
}

#[test]
fn petersen_has_two_orientable_classes() {
    let p = entry("petersen");
    let rep = classify("petersen", &p.graph, &p.rotation, Generators::ALL).unwrap();
    assert!(rep.class_count() >= 2, "{rep}");
    assert!(rep.orientable_classes.iter().all(|c| c.surface.genus() == Some(3)));
}

#[test]
fn bridge_graph_class_has_one_plain_edge_per_triangle() {
    let r = entry("cubic4-bridge");
    let rep = classify("a", &r.graph, &r.rotation, Generators::ALL).unwrap();
    let t = rep.orientable_classes[0].representative.twists;
    for tri in simple_cycles(&r.graph).unwrap().into_iter().filter(|c| c.len() == 3) {
        assert_eq!(tri.len() - tri.intersection(t).len(), 1);
    }
}

#[test]
fn generator_parsing() {
    assert_eq!(Generators::parse("flips,auto,complement").unwrap(), Generators::ALL);
    assert_eq!(Generators::parse("none").unwrap(), Generators::NONE);
    assert_eq!(Generators::parse("flips").unwrap().to_string(), "flips");
    assert!(Generators::parse("foo").is_err());
}
