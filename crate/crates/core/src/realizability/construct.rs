//! Gluing orientable strips into larger orientable strips.

use crate::multigraph::Subgraph;
use crate::ribbon::{boundary_count, sign_assignment};
use crate::{EdgeSet, Error, Multigraph, Result, RibbonStructure, RotationSystem};

/// A witness on a piece of a larger graph, with the maps from piece indices to
/// indices of the larger graph.
#[derive(Clone, Debug)]
pub struct Part {
    pub structure: RibbonStructure,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Part {
    pub fn from_subgraph(sub: &Subgraph, structure: RibbonStructure) -> Part {
        Part { structure, vertices: sub.vertices.clone(), edges: sub.edges.clone() }
    }
}

fn require_witness(r: &RibbonStructure, what: &str) -> Result<()> {
    if !r.is_strip() || !r.is_orientable() {
        return Err(Error::Construction(format!("{what} is not an orientable strip")));
    }
    Ok(())
}

fn check_output(r: RibbonStructure, what: &str) -> Result<RibbonStructure> {
    if !r.is_strip() || !r.is_orientable() {
        return Err(Error::Invariant(format!("{what} produced a structure that is not an orientable strip")));
    }
    Ok(r)
}

fn map_dart(h: &Multigraph, target: &Multigraph, vmap: &[usize], emap: &[usize], d: usize) -> Result<usize> {
    let j = d >> 1;
    let (a, b) = h.edge_ends(j);
    let e = emap[j];
    let (x, y) = target.edge_ends(e);
    let (a, b) = (vmap[a], vmap[b]);
    let flip = if (a, b) == (x, y) {
        false
    } else if (b, a) == (x, y) {
        true
    } else {
        return Err(Error::Construction(format!("edge {j} does not map onto edge {e}")));
    };
    Ok(2 * e + ((d & 1) ^ flip as usize))
}

/// Carries a structure on `r.graph` over to `target` along vertex and edge bijections.
pub(crate) fn transport(r: &RibbonStructure, target: &Multigraph, vmap: &[usize], emap: &[usize]) -> Result<RibbonStructure> {
    let h = &r.graph;
    if vmap.len() != h.n() || emap.len() != h.m() || h.n() != target.n() || h.m() != target.m() {
        return Err(Error::Construction("maps are not bijections onto the target".into()));
    }
    let mut cycles = vec![Vec::new(); target.n()];
    for v in 0..h.n() {
        cycles[vmap[v]] = r
            .rotation
            .cycle(v)
            .iter()
            .map(|&d| map_dart(h, target, vmap, emap, d))
            .collect::<Result<_>>()?;
    }
    let twists = EdgeSet::from_edges(r.twists.iter().map(|e| emap[e]));
    RibbonStructure::new(target.clone(), RotationSystem::new(target, cycles)?, twists)
}

/// One-point unions of orientable strips along a tree of shared vertices.
///
/// The incidence graph has a node per part and per vertex lying in two or more parts,
/// with a part joined to each shared vertex it contains. It must be a tree. At a shared
/// vertex the rotations of the parts are concatenated in part order.
pub fn compose_tree(g: &Multigraph, parts: &[Part]) -> Result<RibbonStructure> {
    if parts.is_empty() {
        return Err(Error::Construction("no parts".into()));
    }
    let mut edge_owner = vec![usize::MAX; g.m()];
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, p) in parts.iter().enumerate() {
        require_witness(&p.structure, &format!("part {i}"))?;
        let h = &p.structure.graph;
        if p.vertices.len() != h.n() || p.edges.len() != h.m() {
            return Err(Error::Construction(format!("part {i}: maps do not match its graph")));
        }
        for &e in &p.edges {
            if e >= g.m() || edge_owner[e] != usize::MAX {
                return Err(Error::Construction(format!("edge {e} is claimed twice or out of range")));
            }
            edge_owner[e] = i;
        }
        for &v in &p.vertices {
            if v >= g.n() || holders[v].contains(&i) {
                return Err(Error::Construction(format!("part {i}: bad vertex map")));
            }
            holders[v].push(i);
        }
    }
    if edge_owner.contains(&usize::MAX) || holders.iter().any(Vec::is_empty) {
        return Err(Error::Construction("parts do not cover the graph".into()));
    }

    // incidence tree test: connected via shared vertices, and links = nodes - 1
    let mut parent: Vec<usize> = (0..parts.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let (mut nodes, mut links) = (parts.len(), 0);
    for hs in holders.iter().filter(|hs| hs.len() > 1) {
        nodes += 1;
        links += hs.len();
        for w in hs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    let connected = (0..parts.len()).all(|i| find(&mut parent, i) == root);
    if !connected || links + 1 != nodes {
        return Err(Error::Construction("incidence graph of the parts is not a tree".into()));
    }

    let mut cycles = vec![Vec::new(); g.n()];
    let mut twists = EdgeSet::EMPTY;
    for p in parts {
        let h = &p.structure.graph;
        for v in 0..h.n() {
            for &d in p.structure.rotation.cycle(v) {
                cycles[p.vertices[v]].push(map_dart(h, g, &p.vertices, &p.edges, d)?);
            }
        }
        for e in p.structure.twists.iter() {
            twists.insert(p.edges[e]);
        }
    }
    let r = RibbonStructure::new(g.clone(), RotationSystem::new(g, cycles)?, twists)?;
    check_output(r, "compose_tree")
}

/// Twist parity of any path between `x` and `y` in an orientable structure.
fn path_parity(r: &RibbonStructure, x: usize, y: usize) -> Result<bool> {
    let sign = sign_assignment(&r.graph, r.twists)
        .ok_or_else(|| Error::Construction("witness is not orientable".into()))?;
    Ok(sign[x] ^ sign[y])
}

/// Joins `a` and `b` by `links` (vertex of `a`, vertex of `b`) carrying the given twists.
/// The link darts are placed by depth-first search over insertion points; the first
/// strip found wins, otherwise the structure with fewest boundary circles is returned.
/// In the result, `b`'s vertices and edges follow `a`'s and the links come last.
pub(crate) fn link_search(a: &RibbonStructure, b: &RibbonStructure, links: &[(usize, usize)], link_twists: &[bool]) -> Result<RibbonStructure> {
    let (na, ma) = (a.graph.n(), a.graph.m());
    for &(u, v) in links {
        if u >= na || v >= b.graph.n() {
            return Err(Error::Construction(format!("link ({u}, {v}) out of range")));
        }
    }
    let base = a.graph.disjoint_union(&b.graph)?;
    let m0 = base.m();
    let pairs: Vec<(usize, usize)> = links.iter().map(|&(u, v)| (u, v + na)).collect();
    let full = base.with_edges(&pairs)?;
    let mut cycles: Vec<Vec<usize>> = a.rotation.cycles().to_vec();
    cycles.extend(b.rotation.cycles().iter().map(|c| c.iter().map(|d| d + 2 * ma).collect()));
    let mut twists = EdgeSet(a.twists.0 | b.twists.0 << ma);
    for (i, &t) in link_twists.iter().enumerate() {
        if t {
            twists.insert(m0 + i);
        }
    }

    struct Search<'a> {
        pairs: &'a [(usize, usize)],
        m0: usize,
        twists: EdgeSet,
        best: Option<(usize, Vec<Vec<usize>>)>,
    }
    impl Search<'_> {
        // true once a strip is found
        fn go(&mut self, i: usize, cycles: &mut Vec<Vec<usize>>) -> bool {
            let k = self.pairs.len();
            let (u, v) = self.pairs[i];
            let e = self.m0 + i;
            let mask = EdgeSet(self.twists.0 & EdgeSet::full(e + 1).0);
            for pu in 0..cycles[u].len().max(1) {
                for pv in 0..cycles[v].len().max(1) {
                    let at_u = (pu + 1).min(cycles[u].len());
                    let at_v = (pv + 1).min(cycles[v].len());
                    cycles[u].insert(at_u, 2 * e);
                    cycles[v].insert(at_v, 2 * e + 1);
                    let bc = boundary_count(&RotationSystem::from_cycles_unchecked(cycles.clone()), mask);
                    let done = if i + 1 == k {
                        if self.best.as_ref().is_none_or(|(b, _)| bc < *b) {
                            self.best = Some((bc, cycles.clone()));
                        }
                        bc == 1
                    } else {
                        bc - 1 <= k - i - 1 && self.go(i + 1, cycles)
                    };
                    cycles[u].remove(at_u);
                    cycles[v].remove(at_v);
                    if done {
                        return true;
                    }
                }
            }
            false
        }
    }
    let best = if links.is_empty() {
        cycles
    } else {
        let mut s = Search { pairs: &pairs, m0, twists, best: None };
        s.go(0, &mut cycles);
        s.best.expect("at least one placement").1
    };
    RibbonStructure::new(full.clone(), RotationSystem::new(&full, best)?, twists)
}

/// Twists for three links from the parities of the cycles through links (1, 2) and (2, 3).
fn three_link_twists(eps: bool, eps2: bool) -> [bool; 3] {
    match (eps, eps2) {
        (false, false) => [true, true, true],
        (false, true) => [true, true, false],
        (true, false) => [false, true, true],
        (true, true) => [true, false, true],
    }
}

/// Joins two orientable strips on disjoint graphs by one or three links.
///
/// With two links the join always has an odd cycle rank, so an orientable result has an
/// even number of boundary circles; the best placement is reported through
/// [`Error::NotAStrip`].
pub fn connect_two(a: &RibbonStructure, b: &RibbonStructure, links: &[(usize, usize)]) -> Result<RibbonStructure> {
    require_witness(a, "first witness")?;
    require_witness(b, "second witness")?;
    let eps = |i: usize, j: usize| -> Result<bool> {
        let (ui, vi) = links[i];
        let (uj, vj) = links[j];
        Ok(path_parity(a, ui, uj)? ^ path_parity(b, vi, vj)?)
    };
    match links.len() {
        1 => check_output(link_search(a, b, links, &[false])?, "connect_two"),
        2 => {
            let tw = if eps(0, 1)? { [true, false] } else { [true, true] };
            let r = link_search(a, b, links, &tw)?;
            let bc = r.boundary_count();
            if bc == 1 || !r.is_orientable() {
                return Err(Error::Invariant("two-link join has the wrong parity".into()));
            }
            Err(Error::NotAStrip { components: bc })
        }
        3 => {
            let tw = three_link_twists(eps(0, 1)?, eps(1, 2)?);
            check_output(link_search(a, b, links, &tw)?, "connect_two")
        }
        k => Err(Error::Construction(format!("connect_two takes 1 or 3 links, got {k}"))),
    }
}

fn require_tree(t: &Multigraph, what: &str) -> Result<()> {
    if !t.is_connected() || t.m() + 1 != t.n() || !t.is_forest(t.all_edges()) {
        return Err(Error::Construction(format!("{what} is not a tree")));
    }
    Ok(())
}

/// Two trees joined by an odd number of twisted links.
pub fn join_trees(t1: &Multigraph, t2: &Multigraph, links: &[(usize, usize)]) -> Result<RibbonStructure> {
    require_tree(t1, "first graph")?;
    require_tree(t2, "second graph")?;
    if links.len() % 2 == 0 {
        return Err(Error::Construction(format!("join_trees needs an odd number of links, got {}", links.len())));
    }
    let a = RibbonStructure::with_default_rotation(t1.clone(), EdgeSet::EMPTY)?;
    let b = RibbonStructure::with_default_rotation(t2.clone(), EdgeSet::EMPTY)?;
    let tw = vec![true; links.len()];
    check_output(link_search(&a, &b, links, &tw)?, "join_trees")
}
