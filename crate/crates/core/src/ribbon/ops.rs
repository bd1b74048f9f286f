use super::{RibbonStructure, RotationSystem};
use crate::{Automorphism, Dart, EdgeSet, Error, Multigraph, Result};

impl RibbonStructure {
    /// Reverse the rotation at `v` and toggle the twist of every non-loop edge at `v`.
    pub fn vertex_flip(&self, v: usize) -> Result<RibbonStructure> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        Ok(RibbonStructure {
            graph: self.graph.clone(),
            rotation: self.rotation.reversed_at(v),
            twists: self.twists.xor(flip_mask(&self.graph, v)),
        })
    }

    /// Flip every vertex in `vs` (given as a vertex bitmask).
    pub fn flip_set(&self, vs: u64) -> RibbonStructure {
        let mut cycles = self.rotation.cycles().to_vec();
        let mut tw = self.twists;
        for v in 0..self.graph.n() {
            if vs >> v & 1 == 1 {
                cycles[v][1..].reverse();
                tw = tw.xor(flip_mask(&self.graph, v));
            }
        }
        RibbonStructure {
            graph: self.graph.clone(),
            rotation: RotationSystem::from_cycles_unchecked(cycles),
            twists: tw,
        }
    }

    /// Every rotation reversed; twists unchanged.
    pub fn mirror(&self) -> RibbonStructure {
        self.flip_set(u64::MAX)
    }

    /// Image under a graph automorphism.
    pub fn relabel(&self, a: &Automorphism) -> RibbonStructure {
        let mut cycles = vec![Vec::new(); self.graph.n()];
        for v in 0..self.graph.n() {
            cycles[a.vertices[v]] = self.rotation.cycle(v).iter().map(|&d| a.darts[d]).collect();
        }
        RibbonStructure {
            graph: self.graph.clone(),
            rotation: RotationSystem::from_cycles_unchecked(cycles),
            twists: EdgeSet::from_edges(self.twists.iter().map(|e| a.edges[e])),
        }
    }

    /// Contract the non-loop edge `e`. A twisted `e` is first untwisted by flipping its
    /// smaller endpoint. The merged vertex takes the smaller index; at it the darts
    /// following `e` around the first endpoint are followed by those around the second.
    pub fn contract_edge_strip(&self, e: usize) -> Result<RibbonStructure> {
        let g = &self.graph;
        if e >= g.m() {
            return Err(Error::EdgeOutOfRange { edge: e, m: g.m() });
        }
        if g.is_loop(e) {
            return Err(Error::LoopContraction(e));
        }
        let (x, y) = g.edge_ends(e);
        let r = if self.twist(e) { self.vertex_flip(x.min(y))? } else { self.clone() };
        let (keep, gone) = (x.min(y), x.max(y));
        let dart_at = |v: usize| if x == v { Dart::of(e, 0).0 } else { Dart::of(e, 1).0 };
        let around = |v: usize| {
            let start = dart_at(v);
            let mut out = Vec::new();
            let mut d = r.rotation.succ(start);
            while d != start {
                out.push(d);
                d = r.rotation.succ(d);
            }
            out
        };
        let mut merged = around(x);
        merged.extend(around(y));

        let vmap = |v: usize| {
            if v == gone {
                keep
            } else if v > gone {
                v - 1
            } else {
                v
            }
        };
        let emap = |f: usize| if f > e { f - 1 } else { f };
        let dmap = |d: usize| 2 * emap(d >> 1) + (d & 1);

        let pairs: Vec<(usize, usize)> = (0..g.m())
            .filter(|&f| f != e)
            .map(|f| {
                let (a, b) = g.edge_ends(f);
                (vmap(a), vmap(b))
            })
            .collect();
        let graph = Multigraph::new(g.n() - 1, &pairs)?;
        let mut cycles = vec![Vec::new(); g.n() - 1];
        for v in 0..g.n() {
            if v == x || v == y {
                continue;
            }
            cycles[vmap(v)] = r.rotation.cycle(v).iter().map(|&d| dmap(d)).collect();
        }
        cycles[keep] = merged.into_iter().map(dmap).collect();
        let twists = EdgeSet::from_edges(r.twists.iter().filter(|&f| f != e).map(emap));
        let rotation = RotationSystem::new(&graph, cycles)?;
        RibbonStructure::new(graph, rotation, twists)
    }
}

/// Non-loop edges at `v`.
pub(crate) fn flip_mask(g: &Multigraph, v: usize) -> EdgeSet {
    EdgeSet::from_edges((0..g.m()).filter(|&e| {
        let (a, b) = g.edge_ends(e);
        (a == v) != (b == v)
    }))
}
