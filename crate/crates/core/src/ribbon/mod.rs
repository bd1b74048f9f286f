//! Twisted ribbon structures: a multigraph, a rotation system and one twist bit per edge.
//!
//! Thickening every vertex to a disc and every edge to a band (half-twisted when its bit
//! is set) gives a surface with boundary. This module traces that boundary, decides
//! orientability and keeps the Euler bookkeeping of the closed-up surface.

mod boundary;
mod ops;
mod rotations;

pub use boundary::{boundary_count, strip_profile, BoundaryReport, Direction, Side};
pub use rotations::{RotationReduction, RotationSpace};
pub(crate) use ops::flip_mask;

use crate::cycle_space::{fundamental_basis, is_cycle_vector};
use crate::{Dart, EdgeSet, Error, Multigraph, Result};
use std::fmt;

/// Cyclic order of the darts at every vertex.
///
/// Each cycle is stored rotated so that its smallest dart comes first, which makes
/// equality and ordering agree with cyclic equality.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RotationSystem {
    cycles: Vec<Vec<usize>>,
    succ: Vec<usize>,
    pred: Vec<usize>,
    /// `turn[2d]` is the successor of `d`, `turn[2d + 1]` its predecessor.
    turn: Vec<usize>,
}

impl RotationSystem {
    /// Validates that every dart of `g` appears exactly once, in the cycle of its endpoint.
    pub fn new(g: &Multigraph, cycles: Vec<Vec<usize>>) -> Result<RotationSystem> {
        if cycles.len() != g.n() {
            return Err(Error::InvalidRotation(format!(
                "expected {} vertex cycles, got {}",
                g.n(),
                cycles.len()
            )));
        }
        let mut seen = vec![false; 2 * g.m()];
        for (v, cyc) in cycles.iter().enumerate() {
            for &d in cyc {
                if d >= seen.len() {
                    return Err(Error::InvalidRotation(format!("dart {d} out of range")));
                }
                if seen[d] {
                    return Err(Error::InvalidRotation(format!("dart {d} repeated")));
                }
                if g.endpoint(Dart(d)) != v {
                    return Err(Error::InvalidRotation(format!(
                        "dart {d} listed at vertex {v} but belongs to vertex {}",
                        g.endpoint(Dart(d))
                    )));
                }
                seen[d] = true;
            }
        }
        if let Some(d) = seen.iter().position(|&s| !s) {
            return Err(Error::InvalidRotation(format!("dart {d} missing")));
        }
        Ok(Self::from_cycles_unchecked(cycles))
    }

    pub(crate) fn from_cycles_unchecked(mut cycles: Vec<Vec<usize>>) -> RotationSystem {
        let darts: usize = cycles.iter().map(Vec::len).sum();
        let mut succ = vec![0; darts];
        let mut pred = vec![0; darts];
        for cyc in &mut cycles {
            if let Some(k) = cyc.iter().enumerate().min_by_key(|&(_, d)| *d).map(|(i, _)| i) {
                cyc.rotate_left(k);
            }
            let len = cyc.len();
            for i in 0..len {
                succ[cyc[i]] = cyc[(i + 1) % len];
                pred[cyc[(i + 1) % len]] = cyc[i];
            }
        }
        let turn = (0..darts).flat_map(|d| [succ[d], pred[d]]).collect();
        RotationSystem { cycles, succ, pred, turn }
    }

    /// Darts at each vertex in increasing order.
    pub fn default_for(g: &Multigraph) -> RotationSystem {
        Self::from_cycles_unchecked(
            (0..g.n())
                .map(|v| g.darts_at(v).into_iter().map(|d| d.0).collect())
                .collect(),
        )
    }

    pub fn n(&self) -> usize {
        self.cycles.len()
    }

    pub fn cycle(&self, v: usize) -> &[usize] {
        &self.cycles[v]
    }

    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    #[inline]
    pub fn succ(&self, d: usize) -> usize {
        self.succ[d]
    }

    #[inline]
    pub fn pred(&self, d: usize) -> usize {
        self.pred[d]
    }

    pub(crate) fn succ_table(&self) -> &[usize] {
        &self.succ
    }

    pub(crate) fn turn_table(&self) -> &[usize] {
        &self.turn
    }

    pub(crate) fn pred_table(&self) -> &[usize] {
        &self.pred
    }

    pub fn reversed_at(&self, v: usize) -> RotationSystem {
        let mut cycles = self.cycles.clone();
        if let Some(tail) = cycles[v].get_mut(1..) {
            tail.reverse();
        }
        Self::from_cycles_unchecked(cycles)
    }

    /// Flattened encoding used for ordering: cycles in vertex order, each led by its
    /// smallest dart.
    pub fn encoding(&self) -> Vec<usize> {
        self.cycles.iter().flatten().copied().collect()
    }
}

impl fmt::Debug for RotationSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cyc in &self.cycles {
            write!(f, "(")?;
            for (i, d) in cyc.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{d}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Closed surface obtained by capping every boundary circle with a disc.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct ClosedSurface {
    pub euler_characteristic: i64,
    pub orientable: bool,
    /// Genus when orientable, crosscap number otherwise.
    pub genus_or_crosscap: usize,
}

impl ClosedSurface {
    pub fn genus(&self) -> Option<usize> {
        self.orientable.then_some(self.genus_or_crosscap)
    }

    pub fn crosscaps(&self) -> Option<usize> {
        (!self.orientable).then_some(self.genus_or_crosscap)
    }
}

impl fmt::Display for ClosedSurface {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.orientable {
            write!(f, "orientable, chi = {}, genus {}", self.euler_characteristic, self.genus_or_crosscap)
        } else {
            write!(
                f,
                "non-orientable, chi = {}, crosscap number {}",
                self.euler_characteristic, self.genus_or_crosscap
            )
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RibbonStructure {
    pub graph: Multigraph,
    pub rotation: RotationSystem,
    pub twists: EdgeSet,
}

impl RibbonStructure {
    pub fn new(graph: Multigraph, rotation: RotationSystem, twists: EdgeSet) -> Result<Self> {
        if rotation.n() != graph.n() || rotation.succ.len() != 2 * graph.m() {
            return Err(Error::InvalidRotation("rotation does not match graph".into()));
        }
        if !twists.intersection(EdgeSet(!EdgeSet::full(graph.m()).0)).is_empty() {
            return Err(Error::EdgeOutOfRange {
                edge: 63 - twists.0.leading_zeros() as usize,
                m: graph.m(),
            });
        }
        Ok(RibbonStructure { graph, rotation, twists })
    }

    /// Default rotation (darts in increasing order at every vertex).
    pub fn with_default_rotation(graph: Multigraph, twists: EdgeSet) -> Result<Self> {
        let rotation = RotationSystem::default_for(&graph);
        Self::new(graph, rotation, twists)
    }

    #[inline]
    pub fn twist(&self, e: usize) -> bool {
        self.twists.contains(e)
    }

    pub fn boundary_count(&self) -> usize {
        boundary_count(&self.rotation, self.twists)
    }

    pub fn is_strip(&self) -> bool {
        self.boundary_count() == 1
    }

    /// Orientability via a vertex sign assignment `o` with `twist(e) = o(u) + o(v)`.
    pub fn is_orientable(&self) -> bool {
        sign_assignment(&self.graph, self.twists).is_some()
    }

    /// Orientability via the parity of every fundamental cycle.
    pub fn is_orientable_by_parity(&self) -> bool {
        match fundamental_basis(&self.graph) {
            Ok(b) => b.cycles.iter().all(|c| !c.edges().intersection(self.twists).parity()),
            // per component: fall back to the sign assignment, which handles forests of components
            Err(_) => self.is_orientable(),
        }
    }

    /// XOR of the twist bits over `c`.
    pub fn cycle_parity(&self, c: EdgeSet) -> Result<bool> {
        if !is_cycle_vector(&self.graph, c) {
            return Err(Error::NotACycle);
        }
        Ok(c.intersection(self.twists).parity())
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.graph.n() as i64 - self.graph.m() as i64 + self.boundary_count() as i64
    }

    pub fn closed_euler(&self) -> Result<ClosedSurface> {
        self.graph.require_connected()?;
        let chi = self.euler_characteristic();
        let orientable = self.is_orientable();
        if chi > 2 {
            return Err(Error::Invariant(format!("euler characteristic {chi} exceeds 2")));
        }
        let genus_or_crosscap = if orientable {
            if chi % 2 != 0 {
                return Err(Error::Invariant(format!(
                    "orientable surface with odd euler characteristic {chi}"
                )));
            }
            ((2 - chi) / 2) as usize
        } else {
            if chi == 2 {
                return Err(Error::Invariant("non-orientable sphere".into()));
            }
            (2 - chi) as usize
        };
        Ok(ClosedSurface { euler_characteristic: chi, orientable, genus_or_crosscap })
    }
}

/// A vertex labelling `o` with `twist(e) = o(u) xor o(v)` for every edge, if one exists.
/// Loops force their own twist to zero. Each component is rooted at its smallest vertex
/// with sign 0.
pub fn sign_assignment(g: &Multigraph, twists: EdgeSet) -> Option<Vec<bool>> {
    let adj = g.adjacency(g.all_edges());
    let mut sign: Vec<Option<bool>> = vec![None; g.n()];
    let mut stack = Vec::new();
    for root in 0..g.n() {
        if sign[root].is_some() {
            continue;
        }
        sign[root] = Some(false);
        stack.push(root);
        while let Some(v) = stack.pop() {
            let sv = sign[v].unwrap();
            for &(w, e) in &adj[v] {
                let want = sv ^ twists.contains(e);
                match sign[w] {
                    None => {
                        sign[w] = Some(want);
                        stack.push(w);
                    }
                    Some(sw) if sw != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(sign.into_iter().map(Option::unwrap).collect())
}

#[cfg(test)]
mod tests;
