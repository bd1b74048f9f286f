use super::{canonical_form, CanonicalForm, Multigraph};
use std::collections::BTreeSet;

/// All connected loopless cubic multigraphs on six vertices (nine edges, cycle rank 4),
/// one per isomorphism class, ordered by canonical form.
///
/// Exhaustive over multisets of endpoint pairs with degree vector `(3, ..., 3)`.
pub fn enumerate_cubic_q4() -> Vec<Multigraph> {
    const N: usize = 6;
    let pairs: Vec<(usize, usize)> = (0..N)
        .flat_map(|u| (u + 1..N).map(move |v| (u, v)))
        .collect();
    let mut found: BTreeSet<CanonicalForm> = BTreeSet::new();
    let mut chosen = Vec::new();
    let mut deg = [0usize; N];

    fn rec(
        start: usize,
        pairs: &[(usize, usize)],
        deg: &mut [usize; 6],
        chosen: &mut Vec<(usize, usize)>,
        found: &mut BTreeSet<CanonicalForm>,
    ) {
        if chosen.len() == 9 {
            let g = Multigraph::new(6, chosen).unwrap();
            if g.is_connected() {
                found.insert(canonical_form(&g).expect("six vertices is within budget"));
            }
            return;
        }
        for (i, &(u, v)) in pairs.iter().enumerate().skip(start) {
            if deg[u] < 3 && deg[v] < 3 {
                deg[u] += 1;
                deg[v] += 1;
                chosen.push((u, v));
                rec(i, pairs, deg, chosen, found);
                chosen.pop();
                deg[u] -= 1;
                deg[v] -= 1;
            }
        }
    }
    rec(0, &pairs, &mut deg, &mut chosen, &mut found);
    found.iter().map(CanonicalForm::to_graph).collect()
}

/// Connected multigraphs (loops allowed) with minimum degree at least 3 and
/// `1 <= m <= max_edges`, one per isomorphism class, ordered by `(m, n, canonical form)`.
pub fn cyclic_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let mut out = Vec::new();
    for m in 1..=max_edges {
        for n in 1..=(2 * m / 3) {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|u| (u..n).map(move |v| (u, v)))
                .collect();
            let mut found: BTreeSet<CanonicalForm> = BTreeSet::new();
            let mut deg = vec![0usize; n];
            let mut chosen = Vec::new();
            cyclic_rec(0, m, n, &pairs, &mut deg, &mut chosen, &mut found);
            out.extend(found.iter().map(CanonicalForm::to_graph));
        }
    }
    out
}

fn cyclic_rec(
    start: usize,
    m: usize,
    n: usize,
    pairs: &[(usize, usize)],
    deg: &mut Vec<usize>,
    chosen: &mut Vec<(usize, usize)>,
    found: &mut BTreeSet<CanonicalForm>,
) {
    let remaining = m - chosen.len();
    let deficit: usize = deg.iter().map(|&d| 3usize.saturating_sub(d)).sum();
    if deficit > 2 * remaining {
        return;
    }
    if remaining == 0 {
        let g = Multigraph::new(n, chosen).unwrap();
        if g.is_connected() {
            found.insert(canonical_form(&g).expect("small graph within budget"));
        }
        return;
    }
    for (i, &(u, v)) in pairs.iter().enumerate().skip(start) {
        deg[u] += 1;
        deg[v] += 1;
        chosen.push((u, v));
        cyclic_rec(i, m, n, pairs, deg, chosen, found);
        chosen.pop();
        deg[u] -= 1;
        deg[v] -= 1;
    }
}

/// All connected multigraphs (loops and parallel edges allowed) with at most
/// `max_edges` edges, one per isomorphism class, including the single vertex.
/// Ordered by `(m, canonical form)`.
///
/// Grown level by level: every connected graph with `m` edges arises from one with
/// `m - 1` edges by adding an edge between existing vertices or a pendant edge.
pub fn connected_multigraphs(max_edges: usize) -> Vec<Multigraph> {
    let single = canonical_form(&Multigraph::new(1, &[]).unwrap()).unwrap();
    let mut level: BTreeSet<CanonicalForm> = BTreeSet::from([single]);
    let mut out: Vec<Multigraph> = level.iter().map(CanonicalForm::to_graph).collect();
    for _ in 0..max_edges {
        let next: BTreeSet<CanonicalForm> = {
            use rayon::prelude::*;
            let parents: Vec<&CanonicalForm> = level.iter().collect();
            let children: Vec<Vec<CanonicalForm>> = parents
                .par_iter()
                .map(|cf| {
                    let g = cf.to_graph();
                    let n = g.n();
                    let mut kids = Vec::new();
                    for u in 0..n {
                        for v in u..n {
                            let h = g.with_edges(&[(u, v)]).unwrap();
                            kids.push(canonical_form(&h).unwrap());
                        }
                        let mut pairs = g.edge_list();
                        pairs.push((u, n));
                        let h = Multigraph::new(n + 1, &pairs).unwrap();
                        kids.push(canonical_form(&h).unwrap());
                    }
                    kids
                })
                .collect();
            children.into_iter().flatten().collect()
        };
        out.extend(next.iter().map(CanonicalForm::to_graph));
        level = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::{are_isomorphic, named};

    #[test]
    fn cubic_q4_census_is_six() {
        let gs = enumerate_cubic_q4();
        // known count of connected loopless cubic multigraphs on 6 vertices
        assert_eq!(gs.len(), 6);
        for (i, g) in gs.iter().enumerate() {
            assert!(g.is_cubic() && g.is_loopless() && g.is_connected());
            assert_eq!(g.cycle_rank(), Ok(4));
            for h in &gs[i + 1..] {
                assert!(!are_isomorphic(g, h).unwrap());
            }
        }
        assert_eq!(gs.iter().filter(|g| g.bridges().len() == 1).count(), 1);
        assert!(gs.iter().all(|g| g.bridges().len() <= 1));
    }

    #[test]
    fn connected_counts_small() {
        // m = 0: K1; m = 1: loop, K2; m = 2: two loops, digon, edge plus loop, path
        let gs = connected_multigraphs(2);
        let by_m = |k: usize| gs.iter().filter(|g| g.m() == k).count();
        assert_eq!((by_m(0), by_m(1), by_m(2)), (1, 2, 4));
        for (i, g) in gs.iter().enumerate() {
            for h in &gs[i + 1..] {
                assert!(!are_isomorphic(g, h).unwrap());
            }
        }
    }

    #[test]
    fn cyclic_graphs_include_anchors() {
        let gs = cyclic_multigraphs(3);
        assert!(gs.iter().all(|g| g.degrees().iter().all(|&d| d >= 3)));
        for anchor in [named::theta(), named::handcuff(), named::bouquet(2)] {
            assert!(gs.iter().any(|g| are_isomorphic(g, &anchor).unwrap()));
        }
    }
}
