//! Reproducibility harness: twelve checks on the census, the classification, the
//! realizability tools and exhaustive sweeps of small structures.
//!
//! Each [`Check`] carries what was expected, what was computed and whether they agree.
//! Time limits are part of a check: a check that is right but late fails.

use crate::cl_structures::{catalog, catalog_entry, verify_cor_2v};
use crate::cycle_space::fundamental_basis;
use crate::multigraph::{connected_multigraphs, cyclic_multigraphs, enumerate_cubic_q4, are_isomorphic, named};
use crate::realizability::{
    compose_tree, connect_two, decide, join_trees, oracle, screen_bridge_nonrealizable, screen_loop_deg3,
    screen_odd_q, KnownBad, Part,
};
use crate::ribbon::{sign_assignment, strip_profile, RotationReduction, RotationSpace};
use crate::{classify, EdgeSet, Error, Generators, Multigraph, Result, RibbonStructure, RotationSystem, Verdict};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use std::fmt;
use std::time::{Duration, Instant};

pub const EXPECTED_CENSUS: usize = 7;
pub const EXPECTED_CLASS_COUNTS: [usize; 7] = [1, 0, 5, 4, 4, 6, 2];
pub const EXPECTED_CLASS_TOTAL: usize = 22;

#[derive(Clone, Debug)]
pub struct Options {
    /// Seed for the randomized constructor inputs.
    pub seed: u64,
    /// Edge bound for the orientability, Euler and bridge sweeps.
    pub sweep_max_edges: usize,
    /// Edge bound for the loop obstruction and criteria-vs-oracle checks.
    pub oracle_max_edges: usize,
    pub random_inputs: usize,
}

impl Default for Options {
    fn default() -> Self {
        Options { seed: 0, sweep_max_edges: 8, oracle_max_edges: 7, random_inputs: 200 }
    }
}

#[derive(Clone, Debug)]
pub struct Check {
    pub id: usize,
    pub name: &'static str,
    pub expected: String,
    pub computed: String,
    pub passed: bool,
    pub elapsed: Duration,
    pub limit: Option<Duration>,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {:>2}. {}: expected {}; computed {} ({:.2}s",
            if self.passed { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.expected,
            self.computed,
            self.elapsed.as_secs_f64()
        )?;
        match self.limit {
            Some(l) => write!(f, ", limit {}s)", l.as_secs()),
            None => write!(f, ")"),
        }
    }
}

/// Orientable class counts of every q = 4 cubic catalog graph under one generator regime.
#[derive(Clone, Debug)]
pub struct RegimeCounts {
    pub generators: Generators,
    pub counts: Vec<(&'static str, usize)>,
}

impl RegimeCounts {
    pub fn total(&self) -> usize {
        self.counts.iter().map(|c| c.1).sum()
    }

    pub fn sorted(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.counts.iter().map(|c| c.1).collect();
        v.sort_unstable();
        v
    }
}

pub fn regime_counts() -> Result<Vec<RegimeCounts>> {
    let entries: Vec<_> = catalog().into_iter().filter(|e| e.has_tag("q4-cubic")).collect();
    Generators::all_regimes()
        .into_iter()
        .map(|gens| {
            let counts = entries
                .iter()
                .map(|e| {
                    let r = &e.structure;
                    Ok((e.name, classify(e.name, &r.graph, &r.rotation, gens)?.class_count()))
                })
                .collect::<Result<_>>()?;
            Ok(RegimeCounts { generators: gens, counts })
        })
        .collect()
}

fn set(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(usize::to_string).collect();
    format!("{{{}}}", items.join(", "))
}

struct Timed {
    start: Instant,
}

impl Timed {
    fn start() -> Timed {
        Timed { start: Instant::now() }
    }

    fn finish(self, id: usize, name: &'static str, expected: String, computed: String, ok: bool, limit: Option<u64>) -> Check {
        let elapsed = self.start.elapsed();
        let limit = limit.map(Duration::from_secs);
        let in_time = limit.is_none_or(|l| elapsed <= l);
        Check { id, name, expected, computed, passed: ok && in_time, elapsed, limit }
    }
}

pub fn census() -> Check {
    let t = Timed::start();
    let graphs = enumerate_cubic_q4();
    let distinct = graphs
        .iter()
        .enumerate()
        .all(|(i, a)| graphs[i + 1..].iter().all(|b| !are_isomorphic(a, b).unwrap_or(true)));
    let computed = format!("{} graphs{}", graphs.len(), if distinct { ", pairwise non-isomorphic" } else { ", with repeats" });
    t.finish(1, "census of cubic graphs with q = 4", format!("{EXPECTED_CENSUS} graphs"), computed, graphs.len() == EXPECTED_CENSUS && distinct, Some(10))
}

pub fn class_multiset(regimes: &[RegimeCounts]) -> Check {
    let t = Timed::start();
    let mut want = EXPECTED_CLASS_COUNTS.to_vec();
    want.sort_unstable();
    let hit = regimes.iter().find(|r| r.sorted() == want && r.total() == EXPECTED_CLASS_TOTAL);
    let shown = hit.or_else(|| regimes.iter().find(|r| r.generators == Generators::ALL)).expect("ALL is a regime");
    let computed = format!(
        "{} total {} under {}{}",
        set(&shown.sorted()),
        shown.total(),
        shown.generators,
        if hit.is_some() { "" } else { "; no regime matches" }
    );
    t.finish(2, "orientable class counts", format!("{} total {EXPECTED_CLASS_TOTAL}", set(&want)), computed, hit.is_some(), Some(60))
}

fn two_cycles(g: &Multigraph) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for a in 0..g.m() {
        for b in a + 1..g.m() {
            let (x, y) = g.edge_ends(a);
            if !g.is_loop(a) && (g.edge_ends(b) == (x, y) || g.edge_ends(b) == (y, x)) {
                out.push((a, b));
            }
        }
    }
    out
}

pub fn structural_anchors(regimes: &[RegimeCounts]) -> Result<Check> {
    let t = Timed::start();
    let all = regimes.iter().find(|r| r.generators == Generators::ALL).expect("ALL is a regime");
    let entries: Vec<_> = catalog().into_iter().filter(|e| e.has_tag("q4-cubic")).collect();
    let count = |name: &str| all.counts.iter().find(|c| c.0 == name).map(|c| c.1);
    let bridged: Vec<&str> = entries.iter().filter(|e| !e.structure.graph.bridges().is_empty()).map(|e| e.name).collect();
    let digons3: Vec<&str> = entries.iter().filter(|e| two_cycles(&e.structure.graph).len() == 3).map(|e| e.name).collect();
    let ones: Vec<&str> = all.counts.iter().filter(|c| c.1 == 1).map(|c| c.0).collect();
    let zeros: Vec<&str> = all.counts.iter().filter(|c| c.1 == 0).map(|c| c.0).collect();
    let b3 = match digons3.as_slice() {
        [name] => {
            let r = catalog_entry(name).expect("catalog entry").structure;
            let tw = EdgeSet::from_edges(two_cycles(&r.graph).into_iter().flat_map(|(a, b)| [a, b]));
            Some(RibbonStructure { twists: tw, ..r }.boundary_count())
        }
        _ => None,
    };
    let ok = bridged.len() == 1
        && ones == bridged
        && count(bridged[0]) == Some(1)
        && digons3.len() == 1
        && zeros == digons3
        && b3 == Some(3);
    let computed = format!(
        "bridged {:?}, count-1 {:?}; three digons {:?}, count-0 {:?}, boundary {}",
        bridged,
        ones,
        digons3,
        zeros,
        b3.map_or("n/a".into(), |b| b.to_string())
    );
    Ok(t.finish(
        3,
        "structural anchors",
        "the only count-1 graph is the only bridged one; the only count-0 graph is the only one with three digons, boundary 3".into(),
        computed,
        ok,
        None,
    ))
}

pub fn petersen() -> Result<Check> {
    let t = Timed::start();
    let verdict = oracle(&named::petersen())?.verdict;
    let p = catalog_entry("petersen").expect("catalog entry").structure;
    let classes = classify("petersen", &p.graph, &p.rotation, Generators::ALL)?.class_count();
    let ok = verdict == Verdict::Yes && classes >= 2;
    Ok(t.finish(4, "Petersen graph", "oracle YES, at least 2 orientable classes".into(), format!("oracle {verdict}, {classes} classes"), ok, Some(30)))
}

pub fn torus() -> Result<Check> {
    let t = Timed::start();
    let g = named::bouquet(2);
    let r = RibbonStructure::new(g.clone(), RotationSystem::new(&g, vec![vec![0, 2, 1, 3]])?, EdgeSet::EMPTY)?;
    let s = r.closed_euler()?;
    let ok = r.is_strip() && s.orientable && s.genus() == Some(1);
    let computed = format!("strip {}, {}", r.is_strip(), s);
    Ok(t.finish(5, "torus bouquet", "strip, orientable, genus 1".into(), computed, ok, None))
}

pub fn loop_obstruction(opts: &Options) -> Result<Check> {
    let t = Timed::start();
    let graphs = connected_multigraphs(opts.oracle_max_edges);
    let relevant: Vec<&Multigraph> = graphs
        .iter()
        .filter(|g| screen_loop_deg3(g).map(|s| s.is_some()).unwrap_or(false))
        .collect();
    let bad = relevant
        .par_iter()
        .map(|g| oracle(g).map(|r| (r.verdict != Verdict::No) as usize))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .sum::<usize>();
    let computed = format!("{} graphs with such a loop, {bad} realizable", relevant.len());
    Ok(t.finish(6, "loop at a degree-3 vertex", "oracle NO on every graph".into(), computed, bad == 0 && !relevant.is_empty(), Some(300)))
}

/// Result of the exhaustive structure sweep behind checks 7 to 9.
#[derive(Clone, Debug, Default)]
pub struct SweepStats {
    pub graphs: usize,
    pub structures: u64,
    pub strips: u64,
    pub orientability_mismatches: u64,
    pub euler_violations: u64,
    pub bridge_violations: u64,
    pub elapsed: Duration,
}

fn sweep_graph(g: &Multigraph) -> Result<SweepStats> {
    let m = g.m();
    let (n, q) = (g.n() as i64, g.cycle_rank()?);
    let basis: Vec<EdgeSet> = fundamental_basis(g)?.cycles.iter().map(|c| c.edges()).collect();
    let bridges = g.bridges();
    let twists = 1u64 << m;
    let by_sign: Vec<bool> = (0..twists).map(|t| sign_assignment(g, EdgeSet(t)).is_some()).collect();
    let by_parity: Vec<bool> = (0..twists)
        .map(|t| basis.iter().all(|c| !c.intersection(EdgeSet(t)).parity()))
        .collect();
    let mut base = SweepStats {
        graphs: 1,
        orientability_mismatches: (0..twists as usize).filter(|&t| by_sign[t] != by_parity[t]).count() as u64,
        ..SweepStats::default()
    };
    let space = RotationSpace::new(g, RotationReduction::FULL);
    let per_rotation: Vec<SweepStats> = (0..space.len() as u64)
        .into_par_iter()
        .map(|i| {
            let rot = space.get(i as u128);
            let mut s = SweepStats::default();
            for t in 0..twists {
                let (b, same) = strip_profile(&rot, EdgeSet(t));
                let orientable = by_sign[t as usize];
                s.structures += 1;
                let chi = n - m as i64 + b as i64;
                if chi > 2 || (orientable && chi % 2 != 0) || (!orientable && chi == 2) {
                    s.euler_violations += 1;
                }
                if let Some(same) = same {
                    s.strips += 1;
                    if same.is_empty() != orientable {
                        s.orientability_mismatches += 1;
                    }
                    if !same.intersection(bridges).is_empty() {
                        s.bridge_violations += 1;
                    }
                    if orientable && q == 4 && chi != -2 {
                        s.euler_violations += 1;
                    }
                }
            }
            s
        })
        .collect();
    for s in per_rotation {
        base.structures += s.structures;
        base.strips += s.strips;
        base.orientability_mismatches += s.orientability_mismatches;
        base.euler_violations += s.euler_violations;
        base.bridge_violations += s.bridge_violations;
    }
    Ok(base)
}

/// Every rotation (reduced by reversal, loop and parallel-edge symmetries) times every
/// twist vector on every connected graph of minimum degree 3 with at most `max_edges` edges.
pub fn structure_sweep(max_edges: usize) -> Result<SweepStats> {
    let start = Instant::now();
    let mut total = SweepStats::default();
    for g in cyclic_multigraphs(max_edges) {
        let s = sweep_graph(&g)?;
        total.graphs += s.graphs;
        total.structures += s.structures;
        total.strips += s.strips;
        total.orientability_mismatches += s.orientability_mismatches;
        total.euler_violations += s.euler_violations;
        total.bridge_violations += s.bridge_violations;
    }
    total.elapsed = start.elapsed();
    Ok(total)
}

fn sweep_check(id: usize, name: &'static str, expected: &str, violations: u64, s: &SweepStats) -> Check {
    Check {
        id,
        name,
        expected: expected.into(),
        computed: format!("{violations} over {} structures ({} strips) on {} graphs", s.structures, s.strips, s.graphs),
        passed: violations == 0 && s.structures > 0,
        elapsed: s.elapsed,
        limit: None,
    }
}

pub fn sweep_checks(s: &SweepStats) -> [Check; 3] {
    [
        sweep_check(7, "orientability three ways", "0 mismatches", s.orientability_mismatches, s),
        sweep_check(8, "Euler bookkeeping", "0 violations", s.euler_violations, s),
        sweep_check(9, "bridges never traversed the same way", "0 violations", s.bridge_violations, s),
    ]
}

pub fn cor_2v_audit() -> Result<Check> {
    let t = Timed::start();
    let mut graphs = 0;
    let mut failing = Vec::new();
    for e in catalog().into_iter().filter(|e| e.has_tag("q4-cubic") && e.has_tag("planar")) {
        let r = &e.structure;
        let rep = classify(e.name, &r.graph, &r.rotation, Generators::ALL)?;
        graphs += 1;
        if !verify_cor_2v(&rep) {
            failing.push(e.name);
        }
    }
    let computed = format!("{} of {graphs} graphs violate", failing.len());
    Ok(t.finish(10, "twists on 2- and 3-cycles", "0 violations".into(), computed, failing.is_empty() && graphs > 0, None))
}

fn random_tree(rng: &mut ChaCha8Rng, max: usize) -> Multigraph {
    let n = rng.gen_range(1..=max);
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    Multigraph::new(n, &edges).expect("tree")
}

fn random_witness(rng: &mut ChaCha8Rng, pool: &[RibbonStructure]) -> RibbonStructure {
    let mut w = if rng.gen_bool(0.3) {
        RibbonStructure::with_default_rotation(random_tree(rng, 4), EdgeSet::EMPTY).expect("disc")
    } else {
        pool[rng.gen_range(0..pool.len())].clone()
    };
    for _ in 0..rng.gen_range(0..3) {
        let v = rng.gen_range(0..w.graph.n());
        w = w.vertex_flip(v).expect("vertex in range");
    }
    w
}

fn random_compose(rng: &mut ChaCha8Rng, pool: &[RibbonStructure]) -> Result<RibbonStructure> {
    let count = rng.gen_range(1..=3);
    let mut n = 0;
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut parts = Vec::new();
    for i in 0..count {
        let w = random_witness(rng, pool);
        let glue_at = (i > 0).then(|| (rng.gen_range(0..w.graph.n()), rng.gen_range(0..n)));
        let mut vertices = Vec::new();
        for v in 0..w.graph.n() {
            match glue_at {
                Some((local, target)) if local == v => vertices.push(target),
                _ => {
                    vertices.push(n);
                    n += 1;
                }
            }
        }
        let first = edges.len();
        edges.extend(w.graph.edge_list().into_iter().map(|(a, b)| (vertices[a], vertices[b])));
        parts.push(Part { edges: (first..edges.len()).collect(), vertices, structure: w });
    }
    compose_tree(&Multigraph::new(n, &edges)?, &parts)
}

fn random_links(rng: &mut ChaCha8Rng, n1: usize, n2: usize, k: usize) -> Vec<(usize, usize)> {
    (0..k).map(|_| (rng.gen_range(0..n1), rng.gen_range(0..n2))).collect()
}

/// The two-link join of two orientable theta strips.
pub fn two_link_attempt() -> Result<usize> {
    let t = catalog_entry("theta-orientable").expect("catalog entry").structure;
    match connect_two(&t, &t, &[(0, 0), (1, 1)]) {
        Err(Error::NotAStrip { components }) => Ok(components),
        Ok(_) => Ok(1),
        Err(e) => Err(e),
    }
}

pub fn constructors(opts: &Options) -> Result<Check> {
    let t = Timed::start();
    let mut pool: Vec<RibbonStructure> = ["theta-orientable", "torus-bouquet", "cubic4-prism", "cubic4-k33"]
        .into_iter()
        .map(|n| {
            let r = catalog_entry(n).expect("catalog entry").structure;
            oracle(&r.graph).map(|o| o.witness.expect("catalog graph is realizable"))
        })
        .collect::<Result<_>>()?;
    pool.extend(
        connected_multigraphs(5)
            .iter()
            .filter_map(|g| oracle(g).ok().and_then(|r| r.witness))
            .filter(|w| w.graph.m() > 0),
    );
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut failures = 0;
    for i in 0..opts.random_inputs {
        let out = match i % 3 {
            0 => random_compose(&mut rng, &pool),
            1 => {
                let (a, b) = (random_witness(&mut rng, &pool), random_witness(&mut rng, &pool));
                let k = if rng.gen_bool(0.5) { 1 } else { 3 };
                let links = random_links(&mut rng, a.graph.n(), b.graph.n(), k);
                connect_two(&a, &b, &links)
            }
            _ => {
                let (a, b) = (random_tree(&mut rng, 4), random_tree(&mut rng, 4));
                let k = [1, 3, 5][rng.gen_range(0..3)];
                let links = random_links(&mut rng, a.n(), b.n(), k);
                join_trees(&a, &b, &links)
            }
        };
        if !out.map(|r| r.is_strip() && r.is_orientable()).unwrap_or(false) {
            failures += 1;
        }
    }
    let b2 = two_link_attempt()?;
    let ok = failures == 0 && b2 >= 2;
    let computed = format!("{failures} failures over {} inputs; two-link join has {b2} boundary circles", opts.random_inputs);
    Ok(t.finish(11, "constructors", "0 failures; two-link join rejected with at least 2 boundary circles".into(), computed, ok, None))
}

pub fn criteria_vs_oracle(opts: &Options) -> Result<Check> {
    let t = Timed::start();
    let kb = KnownBad::seeded();
    let graphs = connected_multigraphs(opts.oracle_max_edges);
    let rows: Vec<(usize, usize)> = graphs
        .par_iter()
        .map(|g| -> Result<(usize, usize)> {
            let truth = oracle(g)?.verdict;
            let mut bad = 0;
            let screens = [screen_odd_q(g)?, screen_loop_deg3(g)?, screen_bridge_nonrealizable(g, &kb)?];
            bad += screens.iter().flatten().filter(|s| s.verdict != truth).count();
            let d = decide(g, &kb)?;
            let decided = d.verdict != Verdict::Unknown;
            if decided && d.verdict != truth {
                bad += 1;
            }
            if let Some(w) = &d.witness {
                if !w.is_strip() || !w.is_orientable() {
                    bad += 1;
                }
            }
            Ok((bad, decided as usize))
        })
        .collect::<Result<_>>()?;
    let bad: usize = rows.iter().map(|r| r.0).sum();
    let decided: usize = rows.iter().map(|r| r.1).sum();
    let computed = format!("{bad} contradictions over {} graphs ({decided} decided by criteria)", graphs.len());
    Ok(t.finish(12, "criteria against the oracle", "0 contradictions".into(), computed, bad == 0, Some(600)))
}

#[derive(Clone, Debug)]
pub struct Outcome {
    pub checks: Vec<Check>,
    pub regimes: Vec<RegimeCounts>,
    pub sweep: SweepStats,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub fn run_all(opts: &Options) -> Result<Outcome> {
    let census = census();
    let regimes = regime_counts()?;
    let mut checks = vec![census, class_multiset(&regimes), structural_anchors(&regimes)?, petersen()?, torus()?, loop_obstruction(opts)?];
    let sweep = structure_sweep(opts.sweep_max_edges)?;
    checks.extend(sweep_checks(&sweep));
    checks.push(cor_2v_audit()?);
    checks.push(constructors(opts)?);
    checks.push(criteria_vs_oracle(opts)?);
    Ok(Outcome { checks, regimes, sweep })
}
