use super::*;
use crate::multigraph::{automorphisms, named::*};
use crate::ribbon::{strip_profile, RotationReduction, RotationSpace};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rs(g: Multigraph, cycles: &[&[usize]], twists: &[usize]) -> RibbonStructure {
    let rot = RotationSystem::new(&g, cycles.iter().map(|c| c.to_vec()).collect()).unwrap();
    RibbonStructure::new(g, rot, EdgeSet::from_edges(twists.iter().copied())).unwrap()
}

fn planar_theta(twists: &[usize]) -> RibbonStructure {
    rs(theta(), &[&[0, 2, 4], &[1, 5, 3]], twists)
}

fn torus() -> RibbonStructure {
    rs(bouquet(2), &[&[0, 2, 1, 3]], &[])
}

#[test]
fn annulus_and_mobius() {
    let annulus = rs(bouquet(1), &[&[0, 1]], &[]);
    let mobius = rs(bouquet(1), &[&[0, 1]], &[0]);
    assert_eq!(annulus.boundary_count(), 2);
    assert_eq!(mobius.boundary_count(), 1);
    assert!(!annulus.is_strip());
    assert!(mobius.is_strip());
    assert!(annulus.is_orientable());
    assert!(!mobius.is_orientable());
    assert_eq!(mobius.same_direction_edges(), Ok(EdgeSet::singleton(0)));
    assert_eq!(annulus.same_direction_edges(), Err(Error::NotAStrip { components: 2 }));
    let s = mobius.closed_euler().unwrap();
    assert_eq!((s.euler_characteristic, s.crosscaps()), (1, Some(1)));
    assert_eq!(mobius.cycle_parity(EdgeSet::singleton(0)), Ok(true));
}

#[test]
fn torus_bouquet() {
    let t = torus();
    assert!(t.is_strip());
    assert!(t.is_orientable());
    assert!(t.same_direction_edges().unwrap().is_empty());
    let s = t.closed_euler().unwrap();
    assert_eq!((s.euler_characteristic, s.genus()), (0, Some(1)));
    // the non-interleaved order is planar: three boundary circles
    assert_eq!(rs(bouquet(2), &[&[0, 1, 2, 3]], &[]).boundary_count(), 3);
}

#[test]
fn edgeless_graph_is_a_disc() {
    let r = RibbonStructure::with_default_rotation(Multigraph::new(1, &[]).unwrap(), EdgeSet::EMPTY)
        .unwrap();
    assert!(r.is_strip());
    assert!(r.same_direction_edges().unwrap().is_empty());
    assert_eq!(r.closed_euler().unwrap().genus(), Some(0));
    // two discs
    let two = RibbonStructure::with_default_rotation(Multigraph::new(2, &[]).unwrap(), EdgeSet::EMPTY)
        .unwrap();
    assert_eq!(two.boundary_count(), 2);
}

#[test]
fn theta_structures() {
    assert_eq!(planar_theta(&[]).boundary_count(), 3);
    let t = planar_theta(&[0, 1, 2]);
    assert!(t.is_strip());
    assert!(t.is_orientable());
    assert_eq!(t.closed_euler().unwrap().genus(), Some(1));
    let f = t.vertex_flip(0).unwrap();
    assert_eq!(f.twists, EdgeSet::EMPTY);
    assert_eq!(f.rotation.cycle(0), &[0, 4, 2]);
    assert_eq!(f.rotation.cycle(1), t.rotation.cycle(1));
    assert!(f.is_strip());
    // one twisted edge: odd parity on two cycles
    let n = planar_theta(&[0]);
    assert!(!n.is_orientable());
    assert!(!n.is_orientable_by_parity());
}

#[test]
fn necklace_with_twisted_digons_has_three_boundaries() {
    let g = Multigraph::new(
        6,
        &[(0, 1), (0, 1), (0, 2), (1, 3), (2, 4), (2, 4), (3, 5), (3, 5), (4, 5)],
    )
    .unwrap();
    let cycles: &[&[usize]] = &[&[0, 2, 4], &[1, 6, 3], &[5, 8, 10], &[7, 12, 14], &[9, 16, 11], &[13, 17, 15]];
    assert_eq!(rs(g.clone(), cycles, &[]).boundary_count(), 5);
    assert_eq!(rs(g, cycles, &[0, 1, 4, 5, 6, 7]).boundary_count(), 3);
}

#[test]
fn flip_examples() {
    let t = planar_theta(&[0, 1, 2]);
    let back = t.vertex_flip(1).unwrap().vertex_flip(1).unwrap();
    assert_eq!(back, t);
    let all = t.flip_set(0b11);
    assert_eq!(all.twists, t.twists);
    assert_eq!(all, t.mirror());
    assert!(t.vertex_flip(2).is_err());
    // loops are untouched by flips
    let h = rs(handcuff(), &[&[0, 1, 2], &[3, 4, 5]], &[0, 1]);
    assert_eq!(h.vertex_flip(0).unwrap().twists, EdgeSet::singleton(0));
}

#[test]
fn contraction_examples() {
    let t = planar_theta(&[0, 1, 2]);
    let c = t.contract_edge_strip(0).unwrap();
    assert_eq!((c.graph.n(), c.graph.m()), (1, 2));
    assert!(c.graph.is_loop(0) && c.graph.is_loop(1));
    assert!(c.is_strip());
    assert!(c.is_orientable());
    assert_eq!(c.closed_euler().unwrap().genus(), Some(1));
    assert_eq!(c.rotation.cycle(0).len(), 4);
    assert_eq!(torus().contract_edge_strip(0), Err(Error::LoopContraction(0)));
    // contracting the bridge of a dumbbell keeps the boundary
    let d = rs(handcuff(), &[&[0, 1, 2], &[3, 4, 5]], &[0, 2]);
    let dc = d.contract_edge_strip(1).unwrap();
    assert_eq!(dc.boundary_count(), d.boundary_count());
    assert_eq!(dc.is_orientable(), d.is_orientable());
}

#[test]
fn rotation_validation() {
    let g = theta();
    assert!(RotationSystem::new(&g, vec![vec![0, 2, 4], vec![1, 3]]).is_err());
    assert!(RotationSystem::new(&g, vec![vec![0, 2, 1], vec![4, 3, 5]]).is_err());
    assert!(RotationSystem::new(&g, vec![vec![0, 2, 4]]).is_err());
    let a = RotationSystem::new(&g, vec![vec![2, 4, 0], vec![1, 3, 5]]).unwrap();
    let b = RotationSystem::new(&g, vec![vec![0, 2, 4], vec![5, 1, 3]]).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.succ(4), 0);
    assert_eq!(a.pred(0), 4);
}

#[test]
fn cycle_parity_is_linear() {
    let t = planar_theta(&[0]);
    let c1 = EdgeSet::from_edges([0, 1]);
    let c2 = EdgeSet::from_edges([0, 2]);
    let p = |c| t.cycle_parity(c).unwrap();
    assert_eq!(p(c1.xor(c2)), p(c1) ^ p(c2));
    assert_eq!(t.cycle_parity(EdgeSet::singleton(0)), Err(Error::NotACycle));
    assert_eq!(planar_theta(&[]).cycle_parity(c1), Ok(false));
}

/// Small graphs for exhaustive checks: every structure over every rotation.
fn small_graphs() -> Vec<Multigraph> {
    vec![
        theta(),
        handcuff(),
        bouquet(2),
        dipole(4),
        complete(4),
        path(3),
        cycle(3),
        Multigraph::new(3, &[(0, 1), (0, 1), (1, 2), (2, 2)]).unwrap(),
        Multigraph::new(2, &[(0, 0), (0, 1), (1, 1), (0, 1)]).unwrap(),
    ]
}

#[test]
fn exhaustive_small_invariants() {
    for g in small_graphs() {
        let bridges = g.bridges();
        for rot in RotationSpace::new(&g, RotationReduction::NONE).iter() {
            for t in 0..1u64 << g.m() {
                let r = RibbonStructure::new(g.clone(), rot.clone(), EdgeSet(t)).unwrap();
                let rep = r.boundary();
                assert_eq!(rep.components(), r.boundary_count());
                assert_eq!(rep.walks.len(), 2 * rep.representatives.len());
                let or = r.is_orientable();
                assert_eq!(or, r.is_orientable_by_parity());
                let s = r.closed_euler().unwrap();
                assert!(s.euler_characteristic <= 2);
                if r.is_strip() {
                    let same = r.same_direction_edges().unwrap();
                    assert_eq!(same.is_empty(), or, "{r:?}");
                    assert!(same.intersection(bridges).is_empty());
                    assert_eq!(strip_profile(&r.rotation, r.twists), (1, Some(same)));
                    let q = g.cycle_rank().unwrap();
                    assert_eq!(s.genus_or_crosscap, if or { q / 2 } else { q });
                }
                for v in 0..g.n() {
                    let f = r.vertex_flip(v).unwrap();
                    assert_eq!(f.boundary_count(), r.boundary_count());
                    assert_eq!(f.is_orientable(), or);
                }
                for e in (0..g.m()).filter(|&e| !g.is_loop(e)) {
                    let c = r.contract_edge_strip(e).unwrap();
                    assert_eq!(c.boundary_count(), r.boundary_count());
                    assert_eq!(c.is_orientable(), or);
                }
            }
        }
    }
}

#[test]
fn relabel_preserves_boundary() {
    let g = complete(4);
    let autos = automorphisms(&g).unwrap();
    for rot in RotationSpace::new(&g, RotationReduction::NONE).iter().take(4) {
        for t in [0u64, 0b101, 0b111111, 0b010011] {
            let r = RibbonStructure::new(g.clone(), rot.clone(), EdgeSet(t)).unwrap();
            for a in &autos {
                let s = r.relabel(a);
                assert!(RotationSystem::new(&g, s.rotation.cycles().to_vec()).is_ok());
                assert_eq!(s.boundary_count(), r.boundary_count());
                assert_eq!(s.is_orientable(), r.is_orientable());
            }
        }
    }
}

fn arb_structure() -> impl Strategy<Value = RibbonStructure> {
    (1usize..5, prop::collection::vec((0usize..5, 0usize..5), 1..8), any::<u64>(), any::<u64>()).prop_filter_map(
        "connected",
        |(n, raw, tw, pick)| {
            let pairs: Vec<(usize, usize)> = raw.into_iter().map(|(a, b)| (a % n, b % n)).collect();
            let g = Multigraph::new(n, &pairs).ok()?;
            if !g.is_connected() {
                return None;
            }
            let mut rng = ChaCha8Rng::seed_from_u64(pick);
            let cycles = (0..n)
                .map(|v| {
                    let mut ds: Vec<usize> = g.darts_at(v).into_iter().map(|d| d.0).collect();
                    ds.shuffle(&mut rng);
                    ds
                })
                .collect();
            let rot = RotationSystem::new(&g, cycles).ok()?;
            RibbonStructure::new(g.clone(), rot, EdgeSet(tw).intersection(g.all_edges())).ok()
        },
    )
}

proptest! {
    #[test]
    fn flip_is_an_involution(r in arb_structure(), v in 0usize..5) {
        let v = v % r.graph.n();
        prop_assert_eq!(r.vertex_flip(v).unwrap().vertex_flip(v).unwrap(), r);
    }

    #[test]
    fn euler_bookkeeping(r in arb_structure()) {
        let s = r.closed_euler().unwrap();
        prop_assert_eq!(
            s.euler_characteristic,
            r.graph.n() as i64 - r.graph.m() as i64 + r.boundary_count() as i64
        );
        prop_assert!(s.euler_characteristic <= 2);
        if s.orientable {
            prop_assert_eq!(s.euler_characteristic % 2, 0);
        }
    }

    #[test]
    fn orientability_routes_agree(r in arb_structure()) {
        prop_assert_eq!(r.is_orientable(), r.is_orientable_by_parity());
        if r.is_strip() {
            prop_assert_eq!(r.same_direction_edges().unwrap().is_empty(), r.is_orientable());
        }
    }

    #[test]
    fn contraction_preserves_topology(r in arb_structure(), e in 0usize..8) {
        let e = e % r.graph.m();
        prop_assume!(!r.graph.is_loop(e));
        let c = r.contract_edge_strip(e).unwrap();
        prop_assert_eq!(c.boundary_count(), r.boundary_count());
        prop_assert_eq!(c.is_orientable(), r.is_orientable());
    }
}

#[test]
fn flip_at_isolated_vertex_is_identity() {
    let r = RibbonStructure::with_default_rotation(Multigraph::new(2, &[]).unwrap(), EdgeSet::EMPTY).unwrap();
    assert_eq!(r.vertex_flip(1).unwrap(), r);
}
