//! Strip enumeration, equivalence orbits and classification of CL-structures.
//!
//! Three generators act on ribbon structures over a fixed graph:
//!
//! - complement: toggle every twist inside one 2-connected component;
//! - flips: [`RibbonStructure::vertex_flip`] at any vertex;
//! - automorphisms: relabel by a graph automorphism.
//!
//! Classification fixes one rotation `R` and works inside the slice of structures
//! with rotation `R`, where the stabiliser of `R` acts on twist vectors.

mod catalog;

pub use catalog::{catalog, catalog_entry, CatalogEntry};

use crate::cycle_space::simple_cycles;
use crate::multigraph::automorphisms;
use crate::ribbon::{boundary_count, flip_mask, sign_assignment, ClosedSurface};
use crate::{EdgeSet, Error, Multigraph, Result, RibbonStructure, RotationSystem};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

/// Largest edge count for twist-space scans.
pub const STRIP_SCAN_LIMIT: usize = 24;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Generators {
    pub complement: bool,
    pub flips: bool,
    pub automorphisms: bool,
}

impl Generators {
    pub const ALL: Generators = Generators { complement: true, flips: true, automorphisms: true };
    pub const NONE: Generators = Generators { complement: false, flips: false, automorphisms: false };

    /// Parses a comma-separated list of `flips`, `auto`, `complement` (or `none`).
    pub fn parse(s: &str) -> Result<Generators> {
        let mut g = Generators::NONE;
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            match tok {
                "flips" | "flip" => g.flips = true,
                "auto" | "autos" | "automorphisms" => g.automorphisms = true,
                "complement" => g.complement = true,
                "none" => {}
                other => {
                    return Err(Error::Parse { line: 0, message: format!("unknown generator `{other}`") })
                }
            }
        }
        Ok(g)
    }

    /// All eight regimes, from none to all.
    pub fn all_regimes() -> Vec<Generators> {
        (0..8)
            .map(|k| Generators { flips: k & 1 != 0, automorphisms: k & 2 != 0, complement: k & 4 != 0 })
            .collect()
    }

    pub fn names(&self) -> Vec<&'static str> {
        let mut v = Vec::new();
        if self.flips {
            v.push("flips");
        }
        if self.automorphisms {
            v.push("auto");
        }
        if self.complement {
            v.push("complement");
        }
        v
    }
}

impl Default for Generators {
    fn default() -> Self {
        Generators::ALL
    }
}

impl fmt::Display for Generators {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.names();
        if names.is_empty() {
            write!(f, "none")
        } else {
            write!(f, "{}", names.join(","))
        }
    }
}

/// All twist vectors with a single boundary circle over `rot`, in increasing order.
pub fn enumerate_strips(g: &Multigraph, rot: &RotationSystem) -> Result<Vec<EdgeSet>> {
    g.require_connected()?;
    if g.m() > STRIP_SCAN_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "twist scan",
            size: 1u128 << g.m(),
            limit: 1u128 << STRIP_SCAN_LIMIT,
        });
    }
    let total = 1u64 << g.m();
    let chunk = 1u64 << 12;
    let chunks: Vec<Vec<EdgeSet>> = (0..total.div_ceil(chunk))
        .into_par_iter()
        .map(|c| {
            (c * chunk..((c + 1) * chunk).min(total))
                .map(EdgeSet)
                .filter(|&t| boundary_count(rot, t) == 1)
                .collect()
        })
        .collect();
    Ok(chunks.into_iter().flatten().collect())
}

/// Twist maps `t -> perm(t xor mask)` generating the action of the stabiliser of a
/// rotation on its slice.
#[derive(Clone, Debug)]
struct SliceMap {
    mask: EdgeSet,
    perm: Option<Vec<usize>>,
}

impl SliceMap {
    fn apply(&self, t: EdgeSet) -> EdgeSet {
        let x = t.xor(self.mask);
        match &self.perm {
            None => x,
            Some(p) => EdgeSet::from_edges(x.iter().map(|e| p[e])),
        }
    }
}

fn component_masks(g: &Multigraph) -> Vec<EdgeSet> {
    g.two_connected_components()
}

fn slice_maps(g: &Multigraph, rot: &RotationSystem, gens: Generators) -> Result<Vec<SliceMap>> {
    let mut maps = Vec::new();
    if gens.complement {
        for c in component_masks(g) {
            maps.push(SliceMap { mask: c, perm: None });
        }
    }
    let free: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) <= 2).collect();
    if gens.flips {
        for &v in &free {
            let mask = flip_mask(g, v);
            if !mask.is_empty() {
                maps.push(SliceMap { mask, perm: None });
            }
        }
    }
    if gens.automorphisms {
        for a in automorphisms(g)? {
            // flip set S with a(R^S) = R, degree <= 2 vertices never flipped
            let mut mask = EdgeSet::EMPTY;
            let mut ok = true;
            for w in 0..g.n() {
                let image: Vec<usize> = rot.cycle(w).iter().map(|&d| a.darts[d]).collect();
                match cyclic_relation(&image, rot.cycle(a.vertices[w])) {
                    Some(false) => {}
                    Some(true) if gens.flips => mask = mask.xor(flip_mask(g, w)),
                    _ => {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                maps.push(SliceMap { mask, perm: Some(a.edges.clone()) });
            }
        }
    }
    Ok(maps)
}

/// `Some(false)` if `a` and `b` are the same cyclic sequence, `Some(true)` if they are
/// reverses of each other (and differ), `None` otherwise.
fn cyclic_relation(a: &[usize], b: &[usize]) -> Option<bool> {
    let norm = |s: &[usize]| {
        let mut v = s.to_vec();
        if let Some(k) = (0..v.len()).min_by_key(|&i| v[i]) {
            v.rotate_left(k);
        }
        v
    };
    let (a, b) = (norm(a), norm(b));
    if a == b {
        return Some(false);
    }
    let mut r = a;
    if r.len() > 1 {
        r[1..].reverse();
    }
    (r == b).then_some(true)
}

/// Closure of `r` under the chosen generators (full rotation and twist orbit), sorted by
/// `(rotation, twists)`.
pub fn equivalence_orbit(r: &RibbonStructure, gens: Generators) -> Result<Vec<RibbonStructure>> {
    let g = &r.graph;
    let autos = if gens.automorphisms { automorphisms(g)? } else { Vec::new() };
    let comps = if gens.complement { component_masks(g) } else { Vec::new() };
    let mut seen: BTreeSet<(RotationSystem, EdgeSet)> = BTreeSet::new();
    let mut queue = VecDeque::from([r.clone()]);
    seen.insert((r.rotation.clone(), r.twists));
    while let Some(x) = queue.pop_front() {
        let mut next = Vec::new();
        for &c in &comps {
            next.push(RibbonStructure { twists: x.twists.xor(c), ..x.clone() });
        }
        if gens.flips {
            for v in 0..g.n() {
                next.push(x.vertex_flip(v)?);
            }
        }
        for a in &autos {
            next.push(x.relabel(a));
        }
        for y in next {
            if seen.insert((y.rotation.clone(), y.twists)) {
                queue.push_back(y);
            }
        }
    }
    Ok(seen
        .into_iter()
        .map(|(rotation, twists)| RibbonStructure { graph: g.clone(), rotation, twists })
        .collect())
}

/// One equivalence class of strips within the surveyed rotation slice.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureClass {
    /// Least orientable strip twist vector of the class on the surveyed rotation.
    pub representative: RibbonStructure,
    /// Number of strip twist vectors of the class on the surveyed rotation.
    pub orbit_size: usize,
    pub orientable: bool,
    pub surface: ClosedSurface,
    /// Whether every member on the slice has the same boundary count and orientability
    /// as the representative (can fail only with the complement generator).
    pub uniform: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassificationReport {
    pub graph: String,
    pub n: usize,
    pub m: usize,
    pub q: usize,
    pub raw_strips: usize,
    pub orientable_raw: usize,
    pub orientable_classes: Vec<StructureClass>,
    pub nonorientable_classes: usize,
    pub generators_used: Generators,
}

#[derive(Serialize)]
struct ClassJson {
    twists: String,
    genus: usize,
    orbit_size: usize,
}

#[derive(Serialize)]
struct ReportJson<'a> {
    graph: &'a str,
    n: usize,
    m: usize,
    q: usize,
    raw_strips: usize,
    orientable_raw: usize,
    orientable_classes: Vec<ClassJson>,
    generators_used: Vec<&'static str>,
}

impl ClassificationReport {
    pub fn class_count(&self) -> usize {
        self.orientable_classes.len()
    }

    pub fn to_json(&self) -> String {
        let j = ReportJson {
            graph: &self.graph,
            n: self.n,
            m: self.m,
            q: self.q,
            raw_strips: self.raw_strips,
            orientable_raw: self.orientable_raw,
            orientable_classes: self
                .orientable_classes
                .iter()
                .map(|c| ClassJson {
                    twists: c.representative.twists.to_bitstring(self.m),
                    genus: c.surface.genus_or_crosscap,
                    orbit_size: c.orbit_size,
                })
                .collect(),
            generators_used: self.generators_used.names(),
        };
        let mut s = serde_json::to_string_pretty(&j).expect("plain data serializes");
        s.push('\n');
        s
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "graph {}: n = {}, m = {}, q = {}", self.graph, self.n, self.m, self.q)?;
        writeln!(f, "generators: {}", self.generators_used)?;
        writeln!(f, "strips: {} ({} orientable)", self.raw_strips, self.orientable_raw)?;
        writeln!(
            f,
            "orientable classes: {} (non-orientable classes: {})",
            self.orientable_classes.len(),
            self.nonorientable_classes
        )?;
        for c in &self.orientable_classes {
            writeln!(
                f,
                "  twists {}  genus {}  orbit {}{}",
                c.representative.twists.to_bitstring(self.m),
                c.surface.genus_or_crosscap,
                c.orbit_size,
                if c.uniform { "" } else { "  (mixed)" }
            )?;
        }
        Ok(())
    }
}

/// Partition the strips over `rot` into classes under `gens`.
pub fn classify(name: &str, g: &Multigraph, rot: &RotationSystem, gens: Generators) -> Result<ClassificationReport> {
    let strips = enumerate_strips(g, rot)?;
    let maps = slice_maps(g, rot, gens)?;
    let is_orientable = |t: EdgeSet| sign_assignment(g, t).is_some();
    let strip_set: std::collections::HashSet<EdgeSet> = strips.iter().copied().collect();
    let mut class_of: HashMap<EdgeSet, usize> = HashMap::new();
    let mut orientable_classes = Vec::new();
    let mut nonorientable_classes = 0;
    let mut orientable_raw = 0;
    let mut classes = 0;
    for &t in &strips {
        let or = is_orientable(t);
        orientable_raw += or as usize;
        if class_of.contains_key(&t) {
            continue;
        }
        let id = classes;
        class_of.insert(t, id);
        let mut queue = VecDeque::from([t]);
        let mut members = vec![t];
        while let Some(x) = queue.pop_front() {
            for map in &maps {
                let y = map.apply(x);
                if let std::collections::hash_map::Entry::Vacant(slot) = class_of.entry(y) {
                    slot.insert(id);
                    members.push(y);
                    queue.push_back(y);
                }
            }
        }
        let strip_members = members.iter().filter(|y| strip_set.contains(y)).count();
        let least_orientable = members
            .iter()
            .copied()
            .filter(|&y| strip_set.contains(&y) && is_orientable(y))
            .min();
        let uniform = members
            .iter()
            .all(|&y| strip_set.contains(&y) && is_orientable(y) == least_orientable.is_some());
        match least_orientable {
            Some(rep) => {
                let representative = RibbonStructure::new(g.clone(), rot.clone(), rep)?;
                let surface = representative.closed_euler()?;
                orientable_classes.push(StructureClass { representative, orbit_size: strip_members, orientable: true, surface, uniform });
            }
            None => nonorientable_classes += 1,
        }
        classes += 1;
    }
    Ok(ClassificationReport {
        graph: name.to_string(),
        n: g.n(),
        m: g.m(),
        q: g.cycle_rank()?,
        raw_strips: strips.len(),
        orientable_raw,
        orientable_classes,
        nonorientable_classes,
        generators_used: gens,
    })
}

/// Representatives violating the two- and three-edge cycle rule, as
/// `(class index, cycle)` pairs.
pub fn cor_2v_violations(report: &ClassificationReport) -> Result<Vec<(usize, EdgeSet)>> {
    let mut out = Vec::new();
    let Some(first) = report.orientable_classes.first() else {
        return Ok(out);
    };
    let cycles = simple_cycles(&first.representative.graph)?;
    for (i, c) in report.orientable_classes.iter().enumerate() {
        let t = c.representative.twists;
        for &cyc in &cycles {
            let twisted = cyc.intersection(t).len();
            let bad = match cyc.len() {
                2 => twisted != 2,
                3 => twisted != 2,
                _ => false,
            };
            if bad {
                out.push((i, cyc));
            }
        }
    }
    Ok(out)
}

/// Every orientable representative twists both edges of each 2-edge cycle and exactly
/// two edges of each 3-edge cycle.
pub fn verify_cor_2v(report: &ClassificationReport) -> bool {
    matches!(cor_2v_violations(report), Ok(v) if v.is_empty())
}

#[cfg(test)]
mod tests;
