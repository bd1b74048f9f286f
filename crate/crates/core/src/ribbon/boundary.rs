//! Boundary tracing on signed darts.
//!
//! A state `(d, side)` stands on the band side `side` and leaves the vertex through
//! dart `d`. Crossing the band lands on `mate(d)`, switching sides if the band is
//! twisted, and the walk continues to the rotation successor (side `+`) or
//! predecessor (side `-`). The `4m` states split into orbits that pair up under
//! reversal; each pair is one boundary circle.

use super::{RibbonStructure, RotationSystem};
use crate::{Dart, EdgeSet, Error, Result};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Plus,
    Minus,
}

impl Side {
    fn flip_if(self, t: bool) -> Side {
        match (self, t) {
            (s, false) => s,
            (Side::Plus, true) => Side::Minus,
            (Side::Minus, true) => Side::Plus,
        }
    }

    fn bit(self) -> usize {
        (self == Side::Minus) as usize
    }
}

/// How the chosen representative walks traverse an edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Both traversals leave through the same dart.
    Same,
    Opposite,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryReport {
    /// All orbits of the successor rule, in order of their first state.
    pub walks: Vec<Vec<(Dart, Side)>>,
    /// Indices into `walks`: one orbit from each reversal pair (the earlier one).
    pub representatives: Vec<usize>,
    /// Per edge, how the representative walks traverse it.
    pub traversal: Vec<Direction>,
    /// Vertices without darts; each is a disc with its own boundary circle.
    pub isolated: usize,
}

impl BoundaryReport {
    /// Number of boundary circles.
    pub fn components(&self) -> usize {
        self.representatives.len() + self.isolated
    }

    pub fn same_direction(&self) -> EdgeSet {
        EdgeSet::from_edges(
            self.traversal
                .iter()
                .enumerate()
                .filter(|(_, &t)| t == Direction::Same)
                .map(|(e, _)| e),
        )
    }
}

#[inline]
fn step(succ: &[usize], pred: &[usize], twists: EdgeSet, d: usize, side: Side) -> (usize, Side) {
    let m = d ^ 1;
    let s = side.flip_if(twists.contains(d >> 1));
    match s {
        Side::Plus => (succ[m], s),
        Side::Minus => (pred[m], s),
    }
}

/// The state traversing the same stretch of boundary the other way.
#[inline]
fn reverse(twists: EdgeSet, d: usize, side: Side) -> (usize, Side) {
    let s = side.flip_if(twists.contains(d >> 1));
    let back = match s {
        Side::Plus => Side::Minus,
        Side::Minus => Side::Plus,
    };
    (d ^ 1, back)
}

/// Number of boundary circles. A vertex without darts is a disc and contributes one.
pub fn boundary_count(rot: &RotationSystem, twists: EdgeSet) -> usize {
    let turn = rot.turn_table();
    let isolated = rot.cycles().iter().filter(|c| c.is_empty()).count();
    let mut seen = [0u64; 4];
    let mut orbits = 0;
    // state 2d + s: leaving through dart d on side s (0 = plus)
    for start in 0..turn.len() {
        if seen[start >> 6] >> (start & 63) & 1 == 1 {
            continue;
        }
        orbits += 1;
        let mut state = start;
        while seen[state >> 6] >> (state & 63) & 1 == 0 {
            seen[state >> 6] |= 1 << (state & 63);
            state = fast_step(turn, twists, state);
        }
    }
    orbits / 2 + isolated
}

#[inline(always)]
fn fast_step(turn: &[usize], twists: EdgeSet, state: usize) -> usize {
    let d = state >> 1;
    let s = (state & 1) ^ (twists.0 >> (d >> 1) & 1) as usize;
    let m = d ^ 1;
    2 * turn[2 * m + s] + s
}

impl RibbonStructure {
    pub fn boundary(&self) -> BoundaryReport {
        let succ = self.rotation.succ_table();
        let pred = self.rotation.pred_table();
        let darts = succ.len();
        let mut orbit_of = vec![usize::MAX; 2 * darts];
        let mut walks: Vec<Vec<(Dart, Side)>> = Vec::new();
        for start in 0..2 * darts {
            if orbit_of[start] != usize::MAX {
                continue;
            }
            let id = walks.len();
            let mut walk = Vec::new();
            let (mut d, mut s) = (start >> 1, if start & 1 == 0 { Side::Plus } else { Side::Minus });
            while orbit_of[2 * d + s.bit()] == usize::MAX {
                orbit_of[2 * d + s.bit()] = id;
                walk.push((Dart(d), s));
                (d, s) = step(succ, pred, self.twists, d, s);
            }
            walks.push(walk);
        }
        let mut representatives = Vec::new();
        let mut taken = vec![false; walks.len()];
        for (i, walk) in walks.iter().enumerate() {
            if taken[i] {
                continue;
            }
            let (d, s) = walk[0];
            let (rd, rs) = reverse(self.twists, d.0, s);
            let j = orbit_of[2 * rd + rs.bit()];
            debug_assert_ne!(i, j, "boundary orbit equal to its own reverse");
            taken[i] = true;
            taken[j] = true;
            representatives.push(i);
        }
        let mut first: Vec<Option<usize>> = vec![None; self.graph.m()];
        let mut traversal = vec![Direction::Opposite; self.graph.m()];
        for &i in &representatives {
            for &(d, _) in &walks[i] {
                match first[d.edge()] {
                    None => first[d.edge()] = Some(d.0),
                    Some(f) => {
                        if f == d.0 {
                            traversal[d.edge()] = Direction::Same;
                        }
                    }
                }
            }
        }
        let isolated = self.rotation.cycles().iter().filter(|c| c.is_empty()).count();
        BoundaryReport { walks, representatives, traversal, isolated }
    }

    /// Edges traversed twice in the same direction by the single boundary circle.
    pub fn same_direction_edges(&self) -> Result<EdgeSet> {
        let report = self.boundary();
        if report.components() != 1 {
            return Err(Error::NotAStrip { components: report.components() });
        }
        Ok(report.same_direction())
    }
}

/// Boundary count and, for strips, the same-direction edges, without allocating.
/// Agrees with [`RibbonStructure::same_direction_edges`].
pub fn strip_profile(rot: &RotationSystem, twists: EdgeSet) -> (usize, Option<EdgeSet>) {
    let b = boundary_count(rot, twists);
    if b != 1 || rot.turn_table().is_empty() {
        return (b, (b == 1).then_some(EdgeSet::EMPTY));
    }
    let turn = rot.turn_table();
    // first departing dart per edge, 0 = not yet seen
    let mut first = [0u8; 64];
    let mut same = EdgeSet::EMPTY;
    let mut state = 0;
    loop {
        let d = state >> 1;
        let e = d >> 1;
        match first[e] {
            0 => first[e] = (d & 1) as u8 + 1,
            f if f == (d & 1) as u8 + 1 => same.insert(e),
            _ => {}
        }
        state = fast_step(turn, twists, state);
        if state == 0 {
            break;
        }
    }
    (b, Some(same))
}
