//! Multigraphs with loops and parallel edges.
//!
//! Edge `i` owns the two darts `2i` (at its first endpoint) and `2i + 1` (at its
//! second endpoint). Every other module refers to edge ends by dart, never by
//! endpoint pair, since pairs are ambiguous for loops and parallel edges.

mod generate;
mod iso;
pub mod named;

pub use generate::{connected_multigraphs, cyclic_multigraphs, enumerate_cubic_q4};
pub use iso::{are_isomorphic, automorphisms, canonical_form, Automorphism, CanonicalForm};

use crate::{EdgeSet, Error, Result, MAX_EDGES};
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;

/// One end of an edge.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Dart(pub usize);

impl Dart {
    #[inline]
    pub fn edge(self) -> usize {
        self.0 >> 1
    }

    #[inline]
    pub fn mate(self) -> Dart {
        Dart(self.0 ^ 1)
    }

    /// The dart of `edge` at its first (`end = 0`) or second (`end = 1`) endpoint.
    #[inline]
    pub fn of(edge: usize, end: usize) -> Dart {
        Dart(2 * edge + end)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Multigraph {
    n: usize,
    ends: Vec<[usize; 2]>,
}

/// A subgraph extracted from a parent graph, with the maps back to parent indices.
#[derive(Clone, Debug)]
pub struct Subgraph {
    pub graph: Multigraph,
    /// `vertices[i]` is the parent vertex of subgraph vertex `i`.
    pub vertices: Vec<usize>,
    /// `edges[j]` is the parent edge of subgraph edge `j`; darts keep their orientation.
    pub edges: Vec<usize>,
}

/// Result of [`Multigraph::cyclic_part`].
#[derive(Clone, Debug)]
pub struct CyclicPart {
    pub graph: Multigraph,
    /// Original vertex carried by each vertex of the cyclic part.
    pub vertex_origin: Vec<usize>,
    /// For each edge of the cyclic part, the original edges it absorbed, walked from its
    /// first endpoint to its second. `(edge, forward)` with `forward` meaning the walk
    /// leaves through dart `2 * edge`.
    pub edge_paths: Vec<Vec<(usize, bool)>>,
}

impl Multigraph {
    pub fn new(n: usize, endpoints: &[(usize, usize)]) -> Result<Multigraph> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        if endpoints.len() > MAX_EDGES {
            return Err(Error::TooManyEdges {
                m: endpoints.len(),
                max: MAX_EDGES,
            });
        }
        let mut ends = Vec::with_capacity(endpoints.len());
        for &(u, v) in endpoints {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            ends.push([u, v]);
        }
        Ok(Multigraph { n, ends })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.ends.len()
    }

    pub fn darts(&self) -> impl Iterator<Item = Dart> {
        (0..2 * self.m()).map(Dart)
    }

    #[inline]
    pub fn endpoint(&self, d: Dart) -> usize {
        self.ends[d.edge()][d.0 & 1]
    }

    #[inline]
    pub fn edge_ends(&self, e: usize) -> (usize, usize) {
        let [u, v] = self.ends[e];
        (u, v)
    }

    pub fn edge_list(&self) -> Vec<(usize, usize)> {
        self.ends.iter().map(|&[u, v]| (u, v)).collect()
    }

    #[inline]
    pub fn is_loop(&self, e: usize) -> bool {
        self.ends[e][0] == self.ends[e][1]
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.m())
    }

    pub fn degree(&self, v: usize) -> usize {
        self.ends
            .iter()
            .map(|&[a, b]| (a == v) as usize + (b == v) as usize)
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for &[a, b] in &self.ends {
            deg[a] += 1;
            deg[b] += 1;
        }
        deg
    }

    /// Darts at `v` in increasing order.
    pub fn darts_at(&self, v: usize) -> Vec<Dart> {
        self.darts().filter(|&d| self.endpoint(d) == v).collect()
    }

    /// Number of edges joining `u` and `v` (loops at `u` when `u == v`).
    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.ends
            .iter()
            .filter(|&&[a, b]| (a == u && b == v) || (a == v && b == u))
            .count()
    }

    pub fn loop_count(&self, v: usize) -> usize {
        self.multiplicity(v, v)
    }

    pub fn is_cubic(&self) -> bool {
        self.degrees().iter().all(|&d| d == 3)
    }

    pub fn is_loopless(&self) -> bool {
        (0..self.m()).all(|e| !self.is_loop(e))
    }

    /// Component label per vertex using only the edges in `keep`.
    pub fn component_labels(&self, keep: EdgeSet) -> Vec<usize> {
        let mut label = vec![usize::MAX; self.n];
        let adj = self.adjacency(keep);
        let mut next = 0;
        for s in 0..self.n {
            if label[s] != usize::MAX {
                continue;
            }
            label[s] = next;
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                for &(y, _) in &adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = next;
                        stack.push(y);
                    }
                }
            }
            next += 1;
        }
        label
    }

    pub fn component_count(&self, keep: EdgeSet) -> usize {
        self.component_labels(keep)
            .into_iter()
            .max()
            .map_or(0, |x| x + 1)
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.all_edges()) == 1
    }

    /// Neighbour lists `(neighbour, edge)` restricted to `keep`, in edge order.
    pub(crate) fn adjacency(&self, keep: EdgeSet) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.n];
        for e in keep.iter() {
            let [u, v] = self.ends[e];
            adj[u].push((v, e));
            if u != v {
                adj[v].push((u, e));
            }
        }
        adj
    }

    pub fn require_connected(&self) -> Result<()> {
        if self.is_connected() {
            Ok(())
        } else {
            Err(Error::Disconnected)
        }
    }

    /// Cycle rank `m - n + 1` of a connected graph.
    pub fn cycle_rank(&self) -> Result<usize> {
        self.require_connected()?;
        Ok(self.m() + 1 - self.n)
    }

    /// Edges whose removal increases the number of connected components.
    pub fn bridges(&self) -> EdgeSet {
        let all = self.all_edges();
        let base = self.component_count(all);
        let mut out = EdgeSet::EMPTY;
        for e in 0..self.m() {
            if self.is_loop(e) {
                continue;
            }
            let mut rest = all;
            rest.remove(e);
            if self.component_count(rest) > base {
                out.insert(e);
            }
        }
        out
    }

    /// Edge sets of the non-vertex components left after deleting all bridges,
    /// ordered by their smallest edge.
    pub fn two_connected_components(&self) -> Vec<EdgeSet> {
        let keep = self.all_edges().xor(self.bridges());
        let label = self.component_labels(keep);
        let mut by_label: Vec<EdgeSet> = vec![EdgeSet::EMPTY; self.n];
        for e in keep.iter() {
            by_label[label[self.ends[e][0]]].insert(e);
        }
        let mut comps: Vec<EdgeSet> = by_label.into_iter().filter(|s| !s.is_empty()).collect();
        comps.sort_by_key(|s| s.0.trailing_zeros());
        comps
    }

    /// Blocks (maximal 2-vertex-connected pieces) as edge sets. A loop is its own
    /// block, and so is a bridge. Ordered by smallest edge.
    pub fn blocks(&self) -> Vec<EdgeSet> {
        // two non-loop edges share a block iff they lie on a common cycle; equivalently
        // union-find over the biconnected components found by lowpoint DFS.
        let m = self.m();
        let mut parent: Vec<usize> = (0..m).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut y = x;
            while p[y] != r {
                let nx = p[y];
                p[y] = r;
                y = nx;
            }
            r
        }
        let adj = self.adjacency(self.all_edges());
        let mut disc = vec![usize::MAX; self.n];
        let mut low = vec![0usize; self.n];
        let mut time = 0;
        let mut edge_stack: Vec<usize> = Vec::new();
        for root in 0..self.n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent edge, next adjacency index)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, pe, ref mut idx)) = stack.last_mut() {
                if *idx < adj[v].len() {
                    let (w, e) = adj[v][*idx];
                    *idx += 1;
                    if e == pe || self.is_loop(e) {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        edge_stack.push(e);
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, e, 0));
                    } else if disc[w] < disc[v] {
                        edge_stack.push(e);
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if let Some(&(u, _, _)) = stack.last() {
                        low[u] = low[u].min(low[v]);
                        if low[v] >= disc[u] {
                            // pop the block closed by edge pe
                            let mut first = None;
                            while let Some(f) = edge_stack.pop() {
                                match first {
                                    None => first = Some(f),
                                    Some(r) => {
                                        let (a, b) = (find(&mut parent, r), find(&mut parent, f));
                                        parent[a] = b;
                                    }
                                }
                                if f == pe {
                                    break;
                                }
                            }
                        }
                    }
                }
            }
        }
        let mut sets: Vec<EdgeSet> = Vec::new();
        let mut slot = vec![usize::MAX; m];
        for e in 0..m {
            let r = find(&mut parent, e);
            if slot[r] == usize::MAX {
                slot[r] = sets.len();
                sets.push(EdgeSet::EMPTY);
            }
            sets[slot[r]].insert(e);
        }
        sets.sort_by_key(|s| s.0.trailing_zeros());
        sets
    }

    /// Subgraph on the given edges; its vertices are the endpoints of those edges
    /// (in increasing parent order), or `fallback_vertex` alone if `edges` is empty.
    pub fn edge_subgraph(&self, edges: EdgeSet, fallback_vertex: usize) -> Subgraph {
        let mut used = vec![false; self.n];
        for e in edges.iter() {
            let [u, v] = self.ends[e];
            used[u] = true;
            used[v] = true;
        }
        if edges.is_empty() {
            used[fallback_vertex] = true;
        }
        let vertices: Vec<usize> = (0..self.n).filter(|&v| used[v]).collect();
        self.subgraph_on(vertices, edges.iter().collect())
    }

    /// Induced subgraph on a vertex list (kept in increasing order).
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let mut vs = vertices.to_vec();
        vs.sort_unstable();
        vs.dedup();
        let mut inside = vec![false; self.n];
        for &v in &vs {
            inside[v] = true;
        }
        let edges = (0..self.m())
            .filter(|&e| inside[self.ends[e][0]] && inside[self.ends[e][1]])
            .collect();
        self.subgraph_on(vs, edges)
    }

    fn subgraph_on(&self, vertices: Vec<usize>, edges: Vec<usize>) -> Subgraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let pairs: Vec<(usize, usize)> = edges
            .iter()
            .map(|&e| (index[self.ends[e][0]], index[self.ends[e][1]]))
            .collect();
        let graph = Multigraph {
            n: vertices.len(),
            ends: pairs.iter().map(|&(u, v)| [u, v]).collect(),
        };
        Subgraph {
            graph,
            vertices,
            edges,
        }
    }

    /// Deletes degree-1 vertices until none remain, then smooths every degree-2 vertex
    /// by merging its two incident edges. A pure cycle keeps its last vertex and
    /// becomes a loop there; a tree shrinks to a single vertex.
    pub fn cyclic_part(&self) -> Result<CyclicPart> {
        self.require_connected()?;
        struct Chain {
            ends: [usize; 2],
            path: Vec<(usize, bool)>,
            alive: bool,
        }
        let mut chains: Vec<Chain> = self
            .ends
            .iter()
            .enumerate()
            .map(|(e, &ends)| Chain {
                ends,
                path: vec![(e, true)],
                alive: true,
            })
            .collect();
        let mut alive = vec![true; self.n];
        let mut deg = self.degrees();

        // prune leaves, lowest index first, repeating until stable
        let mut queue: VecDeque<usize> = (0..self.n).filter(|&v| deg[v] == 1).collect();
        let mut remaining = self.n;
        while let Some(v) = queue.pop_front() {
            if !alive[v] || deg[v] != 1 || remaining == 1 {
                continue;
            }
            let c = chains
                .iter()
                .position(|c| c.alive && (c.ends[0] == v || c.ends[1] == v))
                .expect("degree-1 vertex has an edge");
            chains[c].alive = false;
            let other = if chains[c].ends[0] == v {
                chains[c].ends[1]
            } else {
                chains[c].ends[0]
            };
            alive[v] = false;
            remaining -= 1;
            deg[v] = 0;
            deg[other] -= 1;
            if deg[other] == 1 {
                queue.push_back(other);
            }
        }

        // smooth degree-2 vertices that are not the lone carrier of a loop
        loop {
            let mut merged = false;
            for w in 0..self.n {
                if !alive[w] || deg[w] != 2 {
                    continue;
                }
                let incident: Vec<usize> = chains
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| c.alive && (c.ends[0] == w || c.ends[1] == w))
                    .map(|(i, _)| i)
                    .collect();
                if incident.len() == 1 {
                    // a loop at w: pure cycle, keep it
                    continue;
                }
                let (a, b) = (incident[0], incident[1]);
                // orient a to end at w and b to start at w
                let mut pa = chains[a].path.clone();
                let mut ea = chains[a].ends;
                if ea[0] == w {
                    ea.swap(0, 1);
                    pa = reverse_path(&pa);
                }
                let mut pb = chains[b].path.clone();
                let mut eb = chains[b].ends;
                if eb[1] == w {
                    eb.swap(0, 1);
                    pb = reverse_path(&pb);
                }
                pa.extend(pb);
                chains[b].alive = false;
                chains[a] = Chain {
                    ends: [ea[0], eb[1]],
                    path: pa,
                    alive: true,
                };
                alive[w] = false;
                merged = true;
                break;
            }
            if !merged {
                break;
            }
        }

        let vertex_origin: Vec<usize> = (0..self.n).filter(|&v| alive[v]).collect();
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertex_origin.iter().enumerate() {
            index[v] = i;
        }
        let mut kept: Vec<&Chain> = chains.iter().filter(|c| c.alive).collect();
        kept.sort_by_key(|c| c.path.iter().map(|p| p.0).min());
        let pairs: Vec<(usize, usize)> = kept
            .iter()
            .map(|c| (index[c.ends[0]], index[c.ends[1]]))
            .collect();
        let edge_paths = kept.iter().map(|c| c.path.clone()).collect();
        Ok(CyclicPart {
            graph: Multigraph::new(vertex_origin.len(), &pairs)?,
            vertex_origin,
            edge_paths,
        })
    }

    /// Disjoint union; vertices and edges of `other` come after those of `self`.
    pub fn disjoint_union(&self, other: &Multigraph) -> Result<Multigraph> {
        let mut pairs = self.edge_list();
        pairs.extend(other.edge_list().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Multigraph::new(self.n + other.n, &pairs)
    }

    /// Same graph with extra edges appended.
    pub fn with_edges(&self, extra: &[(usize, usize)]) -> Result<Multigraph> {
        let mut pairs = self.edge_list();
        pairs.extend_from_slice(extra);
        Multigraph::new(self.n, &pairs)
    }

    /// Same vertices, edge `e` removed; later edges shift down by one.
    pub fn without_edge(&self, e: usize) -> Multigraph {
        let mut ends = self.ends.clone();
        ends.remove(e);
        Multigraph { n: self.n, ends }
    }

    /// Whether the edge set, taken as a graph on all vertices, is a forest.
    pub fn is_forest(&self, edges: EdgeSet) -> bool {
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for e in edges.iter() {
            let [u, v] = self.ends[e];
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            if a == b {
                return false;
            }
            parent[a] = b;
        }
        true
    }
}

fn reverse_path(p: &[(usize, bool)]) -> Vec<(usize, bool)> {
    p.iter().rev().map(|&(e, f)| (e, !f)).collect()
}
