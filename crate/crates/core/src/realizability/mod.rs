//! Orientable realizability: does a graph carry an orientable strip?
//!
//! [`decide`] applies cheap screens for a NO and constructive rules for a YES, and
//! answers [`Verdict::Unknown`] when none fires. [`oracle`] settles every graph within
//! its budget by exhaustive search. Both work on the cyclic part; witnesses are lifted
//! back to the input graph with pendant trees attached untwisted.

mod construct;
mod known_bad;
mod oracle;

pub use construct::{compose_tree, connect_two, join_trees, Part};
pub use known_bad::KnownBad;
pub use oracle::{oracle, oracle_size, ORACLE, ORACLE_BUDGET};

use crate::multigraph::{CyclicPart, Subgraph};
use crate::{EdgeSet, Multigraph, Result, RibbonStructure, RotationSystem};
use construct::transport;
use std::fmt;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

pub const ACYCLIC: &str = "acyclic";
pub const ODD_Q: &str = "odd cycle rank";
pub const LOOP_AT_3: &str = "loop at a degree-3 vertex";
pub const KNOWN_BAD: &str = "known non-realizable";
pub const BRIDGE_KNOWN_BAD: &str = "bridge to a known non-realizable side";
pub const BRIDGE_SPLIT: &str = "bridge side not realizable";
pub const BRIDGE_JOIN: &str = "bridge join";
pub const BLOCK_TREE: &str = "block tree";
pub const TWO_TREES: &str = "two trees";
pub const THREE_LINKS: &str = "three links";
pub const NONE: &str = "none";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealizabilityReport {
    pub verdict: Verdict,
    /// The rule that settled the verdict.
    pub criterion: &'static str,
    /// An orientable strip on the input graph when the verdict is YES.
    pub witness: Option<RibbonStructure>,
}

impl RealizabilityReport {
    pub(crate) fn yes(criterion: &'static str, witness: RibbonStructure) -> Self {
        debug_assert!(witness.is_strip() && witness.is_orientable());
        RealizabilityReport { verdict: Verdict::Yes, criterion, witness: Some(witness) }
    }

    pub(crate) fn no(criterion: &'static str) -> Self {
        RealizabilityReport { verdict: Verdict::No, criterion, witness: None }
    }

    fn unknown() -> Self {
        RealizabilityReport { verdict: Verdict::Unknown, criterion: NONE, witness: None }
    }
}

/// Odd cycle rank forces an odd Euler characteristic, hence non-orientability.
pub fn screen_odd_q(g: &Multigraph) -> Result<Option<RealizabilityReport>> {
    Ok((g.cycle_rank()? % 2 == 1).then(|| RealizabilityReport::no(ODD_Q)))
}

pub fn screen_loop_deg3(g: &Multigraph) -> Result<Option<RealizabilityReport>> {
    let h = g.cyclic_part()?.graph;
    let hit = (0..h.m()).any(|e| h.is_loop(e) && h.degree(h.edge_ends(e).0) == 3);
    Ok(hit.then(|| RealizabilityReport::no(LOOP_AT_3)))
}

/// Splits at bridge `e`; the first side holds the first endpoint.
fn split_at(g: &Multigraph, e: usize) -> (Subgraph, Subgraph) {
    let labels = g.component_labels(EdgeSet(g.all_edges().0 & !(1 << e)));
    let side = labels[g.edge_ends(e).0];
    let (a, b): (Vec<usize>, Vec<usize>) = (0..g.n()).partition(|&v| labels[v] == side);
    (g.induced_subgraph(&a), g.induced_subgraph(&b))
}

/// NO when some bridge has a side whose cyclic part lies in `known_bad`.
pub fn screen_bridge_nonrealizable(g: &Multigraph, known_bad: &KnownBad) -> Result<Option<RealizabilityReport>> {
    g.require_connected()?;
    if known_bad.is_empty() {
        return Ok(None);
    }
    for e in g.bridges().iter() {
        let (a, b) = split_at(g, e);
        if known_bad.contains(&a.graph)? || known_bad.contains(&b.graph)? {
            return Ok(Some(RealizabilityReport::no(BRIDGE_KNOWN_BAD)));
        }
    }
    Ok(None)
}

/// Carries a witness on the cyclic part back to `g`.
pub fn lift_witness(g: &Multigraph, cp: &CyclicPart, w: &RibbonStructure) -> Result<RibbonStructure> {
    let mut cycles: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    let mut placed = vec![false; 2 * g.m()];
    for (i, &v) in cp.vertex_origin.iter().enumerate() {
        for &d in w.rotation.cycle(i) {
            let path = &cp.edge_paths[d >> 1];
            let od = if d & 1 == 0 {
                let (e, fwd) = path[0];
                2 * e + !fwd as usize
            } else {
                let (e, fwd) = path[path.len() - 1];
                2 * e + fwd as usize
            };
            cycles[v].push(od);
            placed[od] = true;
        }
    }
    for (v, cyc) in cycles.iter_mut().enumerate() {
        cyc.extend(g.darts_at(v).into_iter().map(|d| d.0).filter(|&d| !placed[d]));
    }
    let twists = EdgeSet::from_edges(w.twists.iter().map(|e| cp.edge_paths[e][0].0));
    RibbonStructure::new(g.clone(), RotationSystem::new(g, cycles)?, twists)
}

/// Criteria only: YES with a witness, NO from a screen, or UNKNOWN.
pub fn decide(g: &Multigraph, known_bad: &KnownBad) -> Result<RealizabilityReport> {
    let cp = g.cyclic_part()?;
    let mut r = decide_cyclic(&cp.graph, known_bad)?;
    if let Some(w) = r.witness.take() {
        r.witness = Some(lift_witness(g, &cp, &w)?);
    }
    Ok(r)
}

/// [`decide`], falling back to [`oracle`] on UNKNOWN when `use_oracle` is set.
pub fn realizable(g: &Multigraph, known_bad: &KnownBad, use_oracle: bool) -> Result<RealizabilityReport> {
    let r = decide(g, known_bad)?;
    if r.verdict == Verdict::Unknown && use_oracle {
        return oracle(g);
    }
    Ok(r)
}

/// Largest vertex count for which bipartitions are searched.
const BIPARTITION_LIMIT: usize = 16;

fn decide_cyclic(h: &Multigraph, kb: &KnownBad) -> Result<RealizabilityReport> {
    if h.m() == 0 {
        return Ok(RealizabilityReport::yes(ACYCLIC, RibbonStructure::with_default_rotation(h.clone(), EdgeSet::EMPTY)?));
    }
    if let Some(r) = screen_odd_q(h)? {
        return Ok(r);
    }
    if let Some(r) = screen_loop_deg3(h)? {
        return Ok(r);
    }
    if kb.contains(h)? {
        return Ok(RealizabilityReport::no(KNOWN_BAD));
    }
    if let Some(r) = screen_bridge_nonrealizable(h, kb)? {
        return Ok(r);
    }

    if let Some(e) = h.bridges().iter().next() {
        let (a, b) = split_at(h, e);
        let (ra, rb) = (decide(&a.graph, kb)?, decide(&b.graph, kb)?);
        if ra.verdict == Verdict::No || rb.verdict == Verdict::No {
            return Ok(RealizabilityReport::no(BRIDGE_SPLIT));
        }
        if let (Some(wa), Some(wb)) = (&ra.witness, &rb.witness) {
            let (x, y) = h.edge_ends(e);
            let link = (local(&a, x), local(&b, y));
            let w = connect_two(wa, wb, &[link])?;
            return Ok(RealizabilityReport::yes(BRIDGE_JOIN, glue(h, &a, &b, &[e], &w)?));
        }
    }

    let blocks = h.blocks();
    if blocks.len() > 1 {
        let mut parts = Vec::new();
        for &blk in &blocks {
            let sub = h.edge_subgraph(blk, 0);
            match decide(&sub.graph, kb)?.witness {
                Some(w) => parts.push(construct::Part::from_subgraph(&sub, w)),
                None => break,
            }
        }
        if parts.len() == blocks.len() {
            return Ok(RealizabilityReport::yes(BLOCK_TREE, compose_tree(h, &parts)?));
        }
    }

    if h.n() <= BIPARTITION_LIMIT {
        if let Some(r) = two_trees(h)? {
            return Ok(r);
        }
        if let Some(r) = three_links(h, kb)? {
            return Ok(r);
        }
    }
    Ok(RealizabilityReport::unknown())
}

fn local(s: &Subgraph, v: usize) -> usize {
    s.vertices.iter().position(|&x| x == v).expect("vertex lies in the side")
}

/// Transports a join of `a` and `b` by links `crossing` back onto `h`.
fn glue(h: &Multigraph, a: &Subgraph, b: &Subgraph, crossing: &[usize], w: &RibbonStructure) -> Result<RibbonStructure> {
    let vmap: Vec<usize> = a.vertices.iter().chain(&b.vertices).copied().collect();
    let emap: Vec<usize> = a.edges.iter().chain(&b.edges).chain(crossing).copied().collect();
    transport(w, h, &vmap, &emap)
}

/// Bipartitions `(V1, V2)` with vertex 0 in `V1`, in increasing order of the mask of `V2`.
fn bipartitions(h: &Multigraph) -> impl Iterator<Item = (Subgraph, Subgraph, Vec<usize>)> + '_ {
    let n = h.n();
    (1u64..1 << (n - 1)).map(move |s| {
        let in2 = |v: usize| v > 0 && s >> (v - 1) & 1 == 1;
        let (v2, v1): (Vec<usize>, Vec<usize>) = (0..n).partition(|&v| in2(v));
        let crossing = (0..h.m())
            .filter(|&e| {
                let (x, y) = h.edge_ends(e);
                in2(x) != in2(y)
            })
            .collect();
        (h.induced_subgraph(&v1), h.induced_subgraph(&v2), crossing)
    })
}

fn links_between(h: &Multigraph, a: &Subgraph, b: &Subgraph, crossing: &[usize]) -> Vec<(usize, usize)> {
    crossing
        .iter()
        .map(|&e| {
            let (x, y) = h.edge_ends(e);
            match a.vertices.binary_search(&x) {
                Ok(i) => (i, local(b, y)),
                Err(_) => (local(a, y), local(b, x)),
            }
        })
        .collect()
}

fn is_tree(t: &Multigraph) -> bool {
    t.is_connected() && t.m() + 1 == t.n() && t.is_forest(t.all_edges())
}

fn two_trees(h: &Multigraph) -> Result<Option<RealizabilityReport>> {
    for (a, b, crossing) in bipartitions(h) {
        if crossing.len() % 2 == 1 && is_tree(&a.graph) && is_tree(&b.graph) {
            let links = links_between(h, &a, &b, &crossing);
            let w = join_trees(&a.graph, &b.graph, &links)?;
            return Ok(Some(RealizabilityReport::yes(TWO_TREES, glue(h, &a, &b, &crossing, &w)?)));
        }
    }
    Ok(None)
}

fn three_links(h: &Multigraph, kb: &KnownBad) -> Result<Option<RealizabilityReport>> {
    for (a, b, crossing) in bipartitions(h) {
        if crossing.len() != 3 || !a.graph.is_connected() || !b.graph.is_connected() {
            continue;
        }
        let Some(wa) = decide(&a.graph, kb)?.witness else { continue };
        let Some(wb) = decide(&b.graph, kb)?.witness else { continue };
        let links = links_between(h, &a, &b, &crossing);
        let w = connect_two(&wa, &wb, &links)?;
        return Ok(Some(RealizabilityReport::yes(THREE_LINKS, glue(h, &a, &b, &crossing, &w)?)));
    }
    Ok(None)
}

#[cfg(test)]
mod tests;
