use super::{Dart, Multigraph};
use crate::{Error, Result};

/// Largest vertex count handled by the brute-force isomorphism routines.
pub const ISO_VERTEX_LIMIT: usize = 12;
const AUTOMORPHISM_LIMIT: u128 = 1 << 22;
const LABELING_LIMIT: u128 = 1 << 24;

/// A graph automorphism: a vertex permutation with a compatible edge permutation.
///
/// `darts` is the induced dart permutation; loops keep their dart orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Automorphism {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub darts: Vec<usize>,
}

impl Automorphism {
    pub fn identity(g: &Multigraph) -> Automorphism {
        Automorphism {
            vertices: (0..g.n()).collect(),
            edges: (0..g.m()).collect(),
            darts: (0..2 * g.m()).collect(),
        }
    }

    pub fn map_dart(&self, d: Dart) -> Dart {
        Dart(self.darts[d.0])
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &Automorphism) -> Automorphism {
        Automorphism {
            vertices: other.vertices.iter().map(|&v| self.vertices[v]).collect(),
            edges: other.edges.iter().map(|&e| self.edges[e]).collect(),
            darts: other.darts.iter().map(|&d| self.darts[d]).collect(),
        }
    }

    pub fn inverse(&self) -> Automorphism {
        fn inv(p: &[usize]) -> Vec<usize> {
            let mut out = vec![0; p.len()];
            for (i, &x) in p.iter().enumerate() {
                out[x] = i;
            }
            out
        }
        Automorphism {
            vertices: inv(&self.vertices),
            edges: inv(&self.edges),
            darts: inv(&self.darts),
        }
    }
}

fn check_budget(g: &Multigraph) -> Result<()> {
    if g.n() > ISO_VERTEX_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "isomorphism search",
            size: g.n() as u128,
            limit: ISO_VERTEX_LIMIT as u128,
        });
    }
    Ok(())
}

fn mult_matrix(g: &Multigraph) -> Vec<Vec<usize>> {
    let n = g.n();
    let mut mult = vec![vec![0usize; n]; n];
    for (u, v) in g.edge_list() {
        mult[u][v] += 1;
        if u != v {
            mult[v][u] += 1;
        }
    }
    mult
}

/// Order in which vertices of `g` get mapped: breadth-first from each unvisited
/// vertex, so that neighbours constrain each other early.
fn search_order(g: &Multigraph) -> Vec<usize> {
    let adj = g.adjacency(g.all_edges());
    let mut seen = vec![false; g.n()];
    let mut order = Vec::with_capacity(g.n());
    for s in 0..g.n() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut head = order.len();
        order.push(s);
        while head < order.len() {
            let x = order[head];
            head += 1;
            for &(y, _) in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    order.push(y);
                }
            }
        }
    }
    order
}

/// Calls `visit` with every vertex bijection `g -> h` preserving edge multiplicities
/// (including loop counts). `visit` returns `false` to stop early.
fn for_each_vertex_iso<F: FnMut(&[usize]) -> bool>(g: &Multigraph, h: &Multigraph, mut visit: F) {
    let n = g.n();
    if n != h.n() || g.m() != h.m() {
        return;
    }
    let (mg, mh) = (mult_matrix(g), mult_matrix(h));
    let (dg, dh) = (g.degrees(), h.degrees());
    let order = search_order(g);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];

    fn rec<F: FnMut(&[usize]) -> bool>(
        depth: usize,
        order: &[usize],
        mg: &[Vec<usize>],
        mh: &[Vec<usize>],
        dg: &[usize],
        dh: &[usize],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
        visit: &mut F,
    ) -> bool {
        if depth == order.len() {
            return visit(map);
        }
        let v = order[depth];
        for w in 0..mh.len() {
            if used[w] || dg[v] != dh[w] || mg[v][v] != mh[w][w] {
                continue;
            }
            let consistent = order[..depth]
                .iter()
                .all(|&u| mg[v][u] == mh[w][map[u]]);
            if !consistent {
                continue;
            }
            map[v] = w;
            used[w] = true;
            let go_on = rec(depth + 1, order, mg, mh, dg, dh, map, used, visit);
            used[w] = false;
            map[v] = usize::MAX;
            if !go_on {
                return false;
            }
        }
        true
    }
    rec(
        0, &order, &mg, &mh, &dg, &dh, &mut map, &mut used, &mut visit,
    );
}

pub fn are_isomorphic(g: &Multigraph, h: &Multigraph) -> Result<bool> {
    check_budget(g)?;
    check_budget(h)?;
    if g.n() != h.n() || g.m() != h.m() {
        return Ok(false);
    }
    let (mut a, mut b) = (g.degrees(), h.degrees());
    a.sort_unstable();
    b.sort_unstable();
    if a != b {
        return Ok(false);
    }
    let mut found = false;
    for_each_vertex_iso(g, h, |_| {
        found = true;
        false
    });
    Ok(found)
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

fn factorial(k: usize) -> u128 {
    (1..=k as u128).product()
}

/// Every automorphism of `g`, identity first, in lexicographic order of
/// `(vertex permutation, edge permutation)`.
pub fn automorphisms(g: &Multigraph) -> Result<Vec<Automorphism>> {
    check_budget(g)?;
    let mut classes: std::collections::BTreeMap<(usize, usize), Vec<usize>> = Default::default();
    for (e, (u, v)) in g.edge_list().into_iter().enumerate() {
        classes.entry((u.min(v), u.max(v))).or_default().push(e);
    }
    let per_vertex_map: u128 = classes.values().map(|c| factorial(c.len())).product();

    let mut vertex_maps: Vec<Vec<usize>> = Vec::new();
    let mut too_many = false;
    for_each_vertex_iso(g, g, |p| {
        vertex_maps.push(p.to_vec());
        if vertex_maps.len() as u128 * per_vertex_map > AUTOMORPHISM_LIMIT {
            too_many = true;
            return false;
        }
        true
    });
    if too_many {
        return Err(Error::BudgetExceeded {
            what: "automorphism group",
            size: vertex_maps.len() as u128 * per_vertex_map,
            limit: AUTOMORPHISM_LIMIT,
        });
    }
    vertex_maps.sort();

    let class_list: Vec<(&(usize, usize), &Vec<usize>)> = classes.iter().collect();
    let perms_by_len: Vec<Vec<Vec<usize>>> = {
        let max = class_list.iter().map(|(_, c)| c.len()).max().unwrap_or(0);
        (0..=max)
            .map(|k| permutations(&(0..k).collect::<Vec<_>>()))
            .collect()
    };

    let mut out = Vec::new();
    for p in vertex_maps {
        // for each class, its target edge list
        let targets: Vec<&Vec<usize>> = class_list
            .iter()
            .map(|((u, v), _)| {
                let (a, b) = (p[*u], p[*v]);
                &classes[&(a.min(b), a.max(b))]
            })
            .collect();
        let mut choice = vec![0usize; class_list.len()];
        let mut done = false;
        while !done {
            let mut edges = vec![0usize; g.m()];
            for (ci, (_, src)) in class_list.iter().enumerate() {
                let perm = &perms_by_len[src.len()][choice[ci]];
                for (k, &e) in src.iter().enumerate() {
                    edges[e] = targets[ci][perm[k]];
                }
            }
            let mut darts = vec![0usize; 2 * g.m()];
            for e in 0..g.m() {
                let f = edges[e];
                let (u, _) = g.edge_ends(e);
                let (x, _) = g.edge_ends(f);
                let straight = g.is_loop(e) || p[u] == x;
                darts[2 * e] = if straight { 2 * f } else { 2 * f + 1 };
                darts[2 * e + 1] = darts[2 * e] ^ 1;
            }
            out.push(Automorphism {
                vertices: p.clone(),
                edges,
                darts,
            });
            done = true;
            for i in (0..class_list.len()).rev() {
                choice[i] += 1;
                if choice[i] < perms_by_len[class_list[i].1.len()].len() {
                    done = false;
                    break;
                }
                choice[i] = 0;
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Isomorphism-invariant encoding: the least sorted endpoint-pair list over all
/// vertex labelings compatible with a colour refinement of the vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
}

impl CanonicalForm {
    pub fn to_graph(&self) -> Multigraph {
        Multigraph::new(self.n, &self.edges).expect("canonical form is a valid graph")
    }
}

fn refined_colours(g: &Multigraph) -> Vec<usize> {
    let n = g.n();
    let mult = mult_matrix(g);
    let deg = g.degrees();
    let mut colour: Vec<usize> = {
        let keys: Vec<(usize, usize)> = (0..n).map(|v| (deg[v], mult[v][v])).collect();
        rank(&keys)
    };
    loop {
        let sigs: Vec<(usize, Vec<(usize, usize)>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<(usize, usize)> = (0..n)
                    .filter(|&u| u != v && mult[v][u] > 0)
                    .map(|u| (colour[u], mult[v][u]))
                    .collect();
                nb.sort_unstable();
                (colour[v], nb)
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().max().map_or(0, |x| x + 1);
        if classes(&next) == classes(&colour) {
            return next;
        }
        colour = next;
    }
}

fn rank<T: Ord + Clone>(keys: &[T]) -> Vec<usize> {
    let mut sorted: Vec<T> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).unwrap())
        .collect()
}

pub fn canonical_form(g: &Multigraph) -> Result<CanonicalForm> {
    let n = g.n();
    let colour = refined_colours(g);
    let ncol = colour.iter().max().map_or(0, |x| x + 1);
    let mut cells: Vec<Vec<usize>> = vec![Vec::new(); ncol];
    for v in 0..n {
        cells[colour[v]].push(v);
    }
    let labelings: u128 = cells.iter().map(|c| factorial(c.len())).product();
    if labelings > LABELING_LIMIT {
        return Err(Error::BudgetExceeded {
            what: "canonical labeling",
            size: labelings,
            limit: LABELING_LIMIT,
        });
    }
    // positions: cell k occupies a contiguous label range
    let mut offsets = vec![0usize; ncol];
    for k in 1..ncol {
        offsets[k] = offsets[k - 1] + cells[k - 1].len();
    }
    let cell_perms: Vec<Vec<Vec<usize>>> = cells.iter().map(|c| permutations(c)).collect();
    let pairs = g.edge_list();
    let mut best: Option<Vec<(usize, usize)>> = None;
    let mut choice = vec![0usize; ncol];
    let mut label = vec![0usize; n];
    let mut enc: Vec<(usize, usize)> = Vec::with_capacity(pairs.len());
    loop {
        for k in 0..ncol {
            for (i, &v) in cell_perms[k][choice[k]].iter().enumerate() {
                label[v] = offsets[k] + i;
            }
        }
        enc.clear();
        enc.extend(pairs.iter().map(|&(u, v)| {
            let (a, b) = (label[u], label[v]);
            (a.min(b), a.max(b))
        }));
        enc.sort_unstable();
        if best.as_ref().map_or(true, |b| enc < *b) {
            best = Some(enc.clone());
        }
        let mut k = ncol;
        let mut done = true;
        while k > 0 {
            k -= 1;
            choice[k] += 1;
            if choice[k] < cell_perms[k].len() {
                done = false;
                break;
            }
            choice[k] = 0;
        }
        if done {
            break;
        }
    }
    Ok(CanonicalForm {
        n,
        edges: best.unwrap_or_default(),
    })
}
