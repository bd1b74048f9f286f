//! GF(2) cycle space and cut space of a multigraph.
//!
//! Vectors are [`EdgeSet`]s; addition is symmetric difference.

use crate::{EdgeSet, Error, Multigraph, Result};
use std::collections::VecDeque;

/// An edge set in which every vertex meets an even number of darts (loops count twice).
#[derive(Copy, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct CycleVector(EdgeSet);

impl CycleVector {
    pub fn new(g: &Multigraph, s: EdgeSet) -> Result<CycleVector> {
        if is_cycle_vector(g, s) {
            Ok(CycleVector(s))
        } else {
            Err(Error::NotACycle)
        }
    }

    pub fn edges(self) -> EdgeSet {
        self.0
    }

    pub fn sym_diff(self, other: CycleVector) -> CycleVector {
        CycleVector(self.0.xor(other.0))
    }
}

pub fn sym_diff(a: CycleVector, b: CycleVector) -> CycleVector {
    a.sym_diff(b)
}

/// Spanning tree plus one fundamental cycle per co-tree edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycleBasis {
    pub tree: EdgeSet,
    /// Fundamental cycles in increasing order of their co-tree edge.
    pub cycles: Vec<CycleVector>,
}

impl CycleBasis {
    pub fn dimension(&self) -> usize {
        self.cycles.len()
    }

    /// Whether `s` lies in the span of the basis.
    pub fn spans(&self, s: EdgeSet) -> bool {
        // each fundamental cycle owns exactly one co-tree edge, so the coordinates are
        // read off the co-tree part of s
        let mut acc = EdgeSet::EMPTY;
        for c in &self.cycles {
            let own = c.edges().intersection(self.co_tree_mask());
            if !own.intersection(s).is_empty() {
                acc = acc.xor(c.edges());
            }
        }
        acc == s
    }

    fn co_tree_mask(&self) -> EdgeSet {
        self.cycles
            .iter()
            .fold(EdgeSet::EMPTY, |m, c| m.union(c.edges()))
            .intersection(EdgeSet(!self.tree.0))
    }

    /// Every member of the spanned space (`2^dimension` vectors), in Gray-code order.
    pub fn span(&self) -> Vec<CycleVector> {
        let q = self.cycles.len();
        assert!(q < 32, "span enumeration limited to dimension < 32");
        let mut out = Vec::with_capacity(1 << q);
        let mut cur = EdgeSet::EMPTY;
        out.push(CycleVector(cur));
        for i in 1u64..(1 << q) {
            let bit = i.trailing_zeros() as usize;
            cur = cur.xor(self.cycles[bit].edges());
            out.push(CycleVector(cur));
        }
        out
    }
}

/// Breadth-first spanning tree from vertex 0, darts taken in increasing order.
/// Returns the tree edges and, for each vertex, its parent edge.
pub(crate) fn bfs_tree(g: &Multigraph) -> (EdgeSet, Vec<Option<usize>>) {
    let mut parent_edge = vec![None; g.n()];
    let mut seen = vec![false; g.n()];
    let mut tree = EdgeSet::EMPTY;
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let darts_at: Vec<_> = (0..g.n()).map(|v| g.darts_at(v)).collect();
    while let Some(v) = queue.pop_front() {
        for &d in &darts_at[v] {
            let w = g.endpoint(d.mate());
            if !seen[w] {
                seen[w] = true;
                parent_edge[w] = Some(d.edge());
                tree.insert(d.edge());
                queue.push_back(w);
            }
        }
    }
    (tree, parent_edge)
}

pub fn fundamental_basis(g: &Multigraph) -> Result<CycleBasis> {
    g.require_connected()?;
    let (tree, parent_edge) = bfs_tree(g);
    // root path of each vertex as an edge set
    let mut root_path = vec![EdgeSet::EMPTY; g.n()];
    let mut order: Vec<usize> = (0..g.n()).collect();
    let depth = |mut v: usize| {
        let mut k = 0;
        while let Some(e) = parent_edge[v] {
            let (a, b) = g.edge_ends(e);
            v = if a == v { b } else { a };
            k += 1;
        }
        k
    };
    order.sort_by_key(|&v| depth(v));
    for v in order {
        if let Some(e) = parent_edge[v] {
            let (a, b) = g.edge_ends(e);
            let p = if a == v { b } else { a };
            let mut path = root_path[p];
            path.toggle(e);
            root_path[v] = path;
        }
    }
    let cycles = (0..g.m())
        .filter(|&e| !tree.contains(e))
        .map(|e| {
            let (u, v) = g.edge_ends(e);
            let mut s = root_path[u].xor(root_path[v]);
            s.toggle(e);
            CycleVector(s)
        })
        .collect();
    Ok(CycleBasis { tree, cycles })
}

pub fn is_cycle_vector(g: &Multigraph, s: EdgeSet) -> bool {
    let mut odd = vec![false; g.n()];
    for e in s.iter() {
        if e >= g.m() {
            return false;
        }
        let (u, v) = g.edge_ends(e);
        odd[u] ^= true;
        odd[v] ^= true;
    }
    odd.iter().all(|&o| !o)
}

/// Edges with exactly one endpoint in `vs`.
pub fn vertex_cut(g: &Multigraph, vs: &[usize]) -> EdgeSet {
    let mut inside = vec![false; g.n()];
    for &v in vs {
        inside[v] = true;
    }
    EdgeSet::from_edges((0..g.m()).filter(|&e| {
        let (u, v) = g.edge_ends(e);
        inside[u] != inside[v]
    }))
}

/// Cut generated by a vertex subset given as a bitmask over vertices.
pub fn vertex_cut_mask(g: &Multigraph, mask: u64) -> EdgeSet {
    EdgeSet::from_edges((0..g.m()).filter(|&e| {
        let (u, v) = g.edge_ends(e);
        ((mask >> u) ^ (mask >> v)) & 1 == 1
    }))
}

/// Rank over GF(2) of a family of edge sets.
pub fn gf2_rank(vectors: &[EdgeSet]) -> usize {
    let mut pivots: Vec<u64> = Vec::new();
    for v in vectors {
        let mut x = v.0;
        for &p in &pivots {
            x = x.min(x ^ p);
        }
        if x != 0 {
            pivots.push(x);
            pivots.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    pivots.len()
}

/// Simple cycles (connected, every vertex of degree 0 or 2 within the set); loops
/// count as 1-edge cycles. Enumerated through the cycle space, so only for small rank.
pub fn simple_cycles(g: &Multigraph) -> Result<Vec<EdgeSet>> {
    let basis = fundamental_basis(g)?;
    let mut out: Vec<EdgeSet> = basis
        .span()
        .into_iter()
        .map(CycleVector::edges)
        .filter(|&s| !s.is_empty() && is_simple_cycle(g, s))
        .collect();
    out.sort();
    Ok(out)
}

fn is_simple_cycle(g: &Multigraph, s: EdgeSet) -> bool {
    let mut deg = vec![0usize; g.n()];
    for e in s.iter() {
        let (u, v) = g.edge_ends(e);
        deg[u] += 1;
        deg[v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    let touched = deg.iter().filter(|&&d| d > 0).count();
    let labels = g.component_labels(s);
    let first = deg.iter().position(|&d| d > 0).unwrap();
    (0..g.n())
        .filter(|&v| deg[v] > 0)
        .all(|v| labels[v] == labels[first])
        && touched >= 1
}
