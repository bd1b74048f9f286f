//! Exhaustive search for an orientable strip.
//!
//! Orientable twist vectors on a connected graph are exactly the vertex cuts, so the
//! search runs over reduced rotation systems of the cyclic part times the `2^(n-1)` cuts.

use super::{lift_witness, RealizabilityReport};
use crate::cycle_space::vertex_cut_mask;
use crate::ribbon::{boundary_count, RotationReduction, RotationSpace};
use crate::{EdgeSet, Error, Multigraph, Result, RibbonStructure};
use rayon::prelude::*;

/// Largest number of (rotation, cut) pairs the oracle accepts.
pub const ORACLE_BUDGET: u128 = 1 << 26;

pub const ORACLE: &str = "exhaustive search";

/// Number of (rotation, cut) pairs the oracle would examine on `g`.
pub fn oracle_size(g: &Multigraph) -> Result<u128> {
    let cp = g.cyclic_part()?;
    let h = &cp.graph;
    let space = RotationSpace::new(h, RotationReduction::FULL);
    Ok(space.len().saturating_mul(1u128 << (h.n() - 1).min(127)))
}

pub fn oracle(g: &Multigraph) -> Result<RealizabilityReport> {
    let cp = g.cyclic_part()?;
    let h = &cp.graph;
    if h.m() == 0 {
        let disc = RibbonStructure::with_default_rotation(h.clone(), EdgeSet::EMPTY)?;
        return Ok(RealizabilityReport::yes(ORACLE, lift_witness(g, &cp, &disc)?));
    }
    let size = oracle_size(g)?;
    if size > ORACLE_BUDGET {
        return Err(Error::BudgetExceeded { what: "realizability oracle", size, limit: ORACLE_BUDGET });
    }
    let space = RotationSpace::new(h, RotationReduction::FULL);
    let star: Vec<EdgeSet> = (0..h.n()).map(|v| vertex_cut_mask(h, 1 << v)).collect();
    let cuts = 1u64 << (h.n() - 1);
    // vertex 0 stays on the unflipped side; Gray order keeps each step to one xor
    let found = (0..space.len() as u64).into_par_iter().find_map_first(|i| {
        let rot = space.get(i as u128);
        let mut t = EdgeSet::EMPTY;
        for s in 0..cuts {
            if s > 0 {
                t = t.xor(star[1 + s.trailing_zeros() as usize]);
            }
            if boundary_count(&rot, t) == 1 {
                return Some((rot, t));
            }
        }
        None
    });
    match found {
        Some((rot, t)) => {
            let w = RibbonStructure::new(h.clone(), rot, t)?;
            Ok(RealizabilityReport::yes(ORACLE, lift_witness(g, &cp, &w)?))
        }
        None => Ok(RealizabilityReport::no(ORACLE)),
    }
}
