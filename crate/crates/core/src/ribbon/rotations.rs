//! Enumeration of rotation systems, optionally reduced by symmetries that preserve
//! every boundary and orientability question once all twist vectors (or all cut-space
//! twist vectors) are swept:
//!
//! - `reversal`: a vertex and its reverse differ by a flip.
//! - `loops`: loops at one vertex may be permuted and have their ends swapped.
//! - `parallel`: parallel non-loop edges may be permuted; their darts are kept in
//!   increasing cyclic order at the lower endpoint (reversal is then not applied there).
//!
//! Reduced lists cover every class at least once; they may contain duplicates.

use super::RotationSystem;
use crate::Multigraph;
use std::collections::BTreeMap;

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct RotationReduction {
    pub reversal: bool,
    pub loops: bool,
    pub parallel: bool,
}

impl RotationReduction {
    pub const NONE: RotationReduction = RotationReduction { reversal: false, loops: false, parallel: false };
    pub const REVERSAL: RotationReduction = RotationReduction { reversal: true, loops: false, parallel: false };
    pub const FULL: RotationReduction = RotationReduction { reversal: true, loops: true, parallel: true };
}

/// Per-vertex choices of cyclic order; the rotation systems are their product.
#[derive(Clone, Debug)]
pub struct RotationSpace {
    choices: Vec<Vec<Vec<usize>>>,
}

impl RotationSpace {
    pub fn new(g: &Multigraph, red: RotationReduction) -> RotationSpace {
        let classes = parallel_classes(g);
        let choices = (0..g.n()).map(|v| vertex_orders(g, v, red, &classes)).collect();
        RotationSpace { choices }
    }

    /// Number of rotation systems, saturating at `u128::MAX`.
    pub fn len(&self) -> u128 {
        self.choices
            .iter()
            .fold(1u128, |acc, c| acc.saturating_mul(c.len() as u128))
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn choices_at(&self, v: usize) -> usize {
        self.choices[v].len()
    }

    /// Mixed-radix decoding, vertex 0 least significant.
    pub fn get(&self, mut index: u128) -> RotationSystem {
        let cycles = self
            .choices
            .iter()
            .map(|c| {
                let k = c.len() as u128;
                let pick = (index % k) as usize;
                index /= k;
                c[pick].clone()
            })
            .collect();
        RotationSystem::from_cycles_unchecked(cycles)
    }

    pub fn iter(&self) -> impl Iterator<Item = RotationSystem> + '_ {
        (0..self.len()).map(move |i| self.get(i))
    }
}

/// Parallel classes of size >= 2 among non-loop edges, keyed by endpoint pair.
fn parallel_classes(g: &Multigraph) -> BTreeMap<(usize, usize), Vec<usize>> {
    let mut map: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
    for e in 0..g.m() {
        let (a, b) = g.edge_ends(e);
        if a != b {
            map.entry((a.min(b), a.max(b))).or_default().push(e);
        }
    }
    map.retain(|_, es| es.len() >= 2);
    map
}

#[derive(Copy, Clone)]
enum Token {
    Dart(usize),
    Open,
    Close(usize),
}

pub(crate) fn vertex_orders(
    g: &Multigraph,
    v: usize,
    red: RotationReduction,
    classes: &BTreeMap<(usize, usize), Vec<usize>>,
) -> Vec<Vec<usize>> {
    let darts: Vec<usize> = g.darts_at(v).into_iter().map(|d| d.0).collect();
    if darts.len() <= 1 {
        return vec![darts];
    }
    let loops: Vec<usize> = if red.loops {
        let mut ls: Vec<usize> = darts.iter().map(|d| d >> 1).filter(|&e| g.is_loop(e)).collect();
        ls.dedup();
        ls
    } else {
        Vec::new()
    };
    let plain: Vec<usize> = darts
        .iter()
        .copied()
        .filter(|d| !loops.contains(&(d >> 1)))
        .collect();

    // parallel classes whose darts at v must appear in increasing cyclic order
    let constrained: Vec<Vec<usize>> = if red.parallel {
        classes
            .iter()
            .filter(|((a, _), _)| *a == v)
            .map(|(_, es)| {
                es.iter()
                    .map(|&e| if g.edge_ends(e).0 == v { 2 * e } else { 2 * e + 1 })
                    .collect()
            })
            .collect()
    } else {
        Vec::new()
    };

    let mut seq = Vec::with_capacity(darts.len());
    let mut used = vec![false; plain.len()];
    let mut opened = 0usize;
    let mut open: Vec<bool> = vec![false; loops.len()];
    if let Some(&first) = plain.first() {
        seq.push(first);
        used[0] = true;
    } else {
        seq.push(2 * loops[0]);
        open[0] = true;
        opened = 1;
    }

    let mut out = Vec::new();
    let st = &mut DfsState { plain: &plain, loops: &loops, used, open, opened, seq };
    dfs(st, darts.len(), &mut |s: &[usize]| {
        if !constrained.iter().all(|c| increasing_cyclically(s, c)) {
            return;
        }
        if red.reversal && constrained.is_empty() && s.len() >= 3 {
            let mut rev = s.to_vec();
            rev[1..].reverse();
            if red.loops {
                relabel_loops(&mut rev, g);
            }
            if rev.as_slice() < s {
                return;
            }
        }
        out.push(s.to_vec());
    });
    out
}

struct DfsState<'a> {
    plain: &'a [usize],
    loops: &'a [usize],
    used: Vec<bool>,
    open: Vec<bool>,
    opened: usize,
    seq: Vec<usize>,
}

fn dfs(st: &mut DfsState<'_>, len: usize, emit: &mut dyn FnMut(&[usize])) {
    if st.seq.len() == len {
        emit(&st.seq);
        return;
    }
    let mut options = Vec::new();
    for (i, &d) in st.plain.iter().enumerate() {
        if !st.used[i] {
            options.push((d, Token::Dart(i)));
        }
    }
    if st.opened < st.loops.len() {
        options.push((2 * st.loops[st.opened], Token::Open));
    }
    for (j, &o) in st.open.iter().enumerate() {
        if o {
            options.push((2 * st.loops[j] + 1, Token::Close(j)));
        }
    }
    options.sort_by_key(|&(d, _)| d);
    for (d, tok) in options {
        st.seq.push(d);
        match tok {
            Token::Dart(i) => st.used[i] = true,
            Token::Open => {
                st.open[st.opened] = true;
                st.opened += 1;
            }
            Token::Close(j) => st.open[j] = false,
        }
        dfs(st, len, emit);
        match tok {
            Token::Dart(i) => st.used[i] = false,
            Token::Open => {
                st.opened -= 1;
                st.open[st.opened] = false;
            }
            Token::Close(j) => st.open[j] = true,
        }
        st.seq.pop();
    }
}

/// Rename the loops of a linear dart sequence so they occur in increasing edge order
/// and each is first met through its even dart.
fn relabel_loops(seq: &mut [usize], g: &Multigraph) {
    let mut loops: Vec<usize> = seq.iter().map(|d| d >> 1).filter(|&e| g.is_loop(e)).collect();
    loops.sort_unstable();
    loops.dedup();
    let mut rename: BTreeMap<usize, usize> = BTreeMap::new();
    let mut next = 0;
    for d in seq.iter_mut() {
        let e = *d >> 1;
        if !g.is_loop(e) {
            continue;
        }
        match rename.get(&e) {
            Some(&target) => *d = 2 * target + 1,
            None => {
                let target = loops[next];
                next += 1;
                rename.insert(e, target);
                *d = 2 * target;
            }
        }
    }
}

fn increasing_cyclically(seq: &[usize], class: &[usize]) -> bool {
    let restricted: Vec<usize> = seq.iter().copied().filter(|d| class.contains(d)).collect();
    let k = restricted
        .iter()
        .enumerate()
        .min_by_key(|&(_, d)| *d)
        .map_or(0, |(i, _)| i);
    (0..restricted.len()).all(|i| {
        let a = restricted[(k + i) % restricted.len()];
        i == 0 || a > restricted[(k + i - 1) % restricted.len()]
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::named::*;
    use crate::ribbon::boundary_count;
    use crate::EdgeSet;
    use std::collections::BTreeSet;

    fn factorial(k: usize) -> usize {
        (1..=k).product()
    }

    #[test]
    fn unreduced_counts() {
        let k4 = complete(4);
        assert_eq!(RotationSpace::new(&k4, RotationReduction::NONE).len(), 16);
        assert_eq!(RotationSpace::new(&k4, RotationReduction::REVERSAL).len(), 1);
        let b3 = bouquet(3);
        assert_eq!(RotationSpace::new(&b3, RotationReduction::NONE).len(), factorial(5) as u128);
        let d4 = dipole(4);
        assert_eq!(RotationSpace::new(&d4, RotationReduction::NONE).len(), 36);
    }

    #[test]
    fn loop_reduction_counts_chord_diagrams() {
        // sequences with loops in first-occurrence order = perfect matchings with the
        // first point fixed open: (2k-1)!!
        for k in 1..=4usize {
            let red = RotationReduction { reversal: false, loops: true, parallel: false };
            let got = RotationSpace::new(&bouquet(k), red).len();
            let double_fact: usize = (1..2 * k).step_by(2).product();
            assert_eq!(got, double_fact as u128);
        }
    }

    #[test]
    fn every_rotation_is_valid() {
        for g in [theta(), handcuff(), bouquet(3), dipole(4), complete(4)] {
            for red in [RotationReduction::NONE, RotationReduction::FULL] {
                for r in RotationSpace::new(&g, red).iter() {
                    assert!(RotationSystem::new(&g, r.cycles().to_vec()).is_ok());
                }
            }
        }
    }

    /// The multiset of boundary counts over all twists, keyed up to multiplicity, is
    /// a class invariant; reduced spaces must reach every value the full space reaches.
    #[test]
    fn reduced_spaces_cover_all_boundary_profiles() {
        let graphs = [
            theta(),
            handcuff(),
            bouquet(3),
            dipole(4),
            Multigraph::new(2, &[(0, 0), (0, 1), (0, 1), (1, 1)]).unwrap(),
            Multigraph::new(3, &[(0, 1), (0, 1), (1, 2), (1, 2), (2, 0)]).unwrap(),
        ];
        for g in graphs {
            let profile = |r: &RotationSystem| {
                let mut p: Vec<usize> = (0..1u64 << g.m())
                    .map(|t| boundary_count(r, EdgeSet(t)))
                    .collect();
                p.sort_unstable();
                p
            };
            let full: BTreeSet<Vec<usize>> =
                RotationSpace::new(&g, RotationReduction::NONE).iter().map(|r| profile(&r)).collect();
            let reduced: BTreeSet<Vec<usize>> =
                RotationSpace::new(&g, RotationReduction::FULL).iter().map(|r| profile(&r)).collect();
            assert_eq!(full, reduced, "{g:?}");
        }
    }
}
