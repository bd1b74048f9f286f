//! Text formats, DOT export and JSON.
//!
//! Graph file: the first non-comment line is `n m`, followed by `m` lines `u v`
//! (0-based vertices; edge index = line order). Lines whose first non-blank character
//! is `#` are comments; blank lines are ignored.
//!
//! Ribbon file: a graph block, then one `rotation v: d d ...` line per vertex (darts in
//! cyclic order), then `twists: <bitstring>` with edge 0 as the rightmost character.
//!
//! ```text
//! # theta graph, planar rotation, every edge twisted
//! 2 3
//! 0 1
//! 0 1
//! 0 1
//! rotation 0: 0 2 4
//! rotation 1: 1 5 3
//! twists: 111
//! ```

use crate::{EdgeSet, Error, Multigraph, RibbonStructure, RotationSystem, Result};
use serde::{Deserialize, Serialize};
use std::fmt::Write as _;

struct Lines<'a> {
    inner: std::iter::Enumerate<std::str::Lines<'a>>,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        Lines { inner: text.lines().enumerate() }
    }

    /// Next meaningful line with its 1-based number.
    fn next_line(&mut self) -> Option<(usize, &'a str)> {
        for (i, raw) in self.inner.by_ref() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            return Some((i + 1, line));
        }
        None
    }
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, message: message.into() }
}

fn parse_usize(line: usize, tok: &str, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("expected {what}, found `{tok}`")))
}

fn read_graph(lines: &mut Lines<'_>) -> Result<Multigraph> {
    let (ln, header) = lines.next_line().ok_or_else(|| parse_err(0, "missing `n m` header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(ln, "header must be `n m`"));
    }
    let n = parse_usize(ln, toks[0], "vertex count")?;
    let m = parse_usize(ln, toks[1], "edge count")?;
    let mut pairs = Vec::with_capacity(m);
    for k in 0..m {
        let (ln, line) = lines
            .next_line()
            .ok_or_else(|| parse_err(0, format!("expected {m} edge lines, found {k}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(parse_err(ln, "edge line must be `u v`"));
        }
        let u = parse_usize(ln, toks[0], "vertex")?;
        let v = parse_usize(ln, toks[1], "vertex")?;
        if u >= n || v >= n {
            return Err(parse_err(ln, format!("vertex out of range for n = {n}")));
        }
        pairs.push((u, v));
    }
    Multigraph::new(n, &pairs).map_err(|e| parse_err(ln, e.to_string()))
}

pub fn parse_graph(text: &str) -> Result<Multigraph> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    if let Some((ln, _)) = lines.next_line() {
        return Err(parse_err(ln, "unexpected content after the edge list"));
    }
    Ok(g)
}

pub fn write_graph(g: &Multigraph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.m());
    for (u, v) in g.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Parses a ribbon file. Vertices without a `rotation` line keep their darts in
/// increasing order; a missing `twists` line means no twists.
pub fn parse_ribbon(text: &str) -> Result<RibbonStructure> {
    let mut lines = Lines::new(text);
    let g = read_graph(&mut lines)?;
    let mut cycles: Vec<Option<Vec<usize>>> = vec![None; g.n()];
    let mut twists = None;
    let mut last_line = 0;
    while let Some((ln, line)) = lines.next_line() {
        last_line = ln;
        if let Some(rest) = line.strip_prefix("rotation") {
            let (v, darts) = rest
                .split_once(':')
                .ok_or_else(|| parse_err(ln, "rotation line must be `rotation v: d d ...`"))?;
            let v = parse_usize(ln, v.trim(), "vertex")?;
            if v >= g.n() {
                return Err(parse_err(ln, format!("vertex {v} out of range")));
            }
            if cycles[v].is_some() {
                return Err(parse_err(ln, format!("second rotation line for vertex {v}")));
            }
            let ds = darts
                .split_whitespace()
                .map(|t| parse_usize(ln, t, "dart"))
                .collect::<Result<Vec<_>>>()?;
            cycles[v] = Some(ds);
        } else if let Some(rest) = line.strip_prefix("twists:") {
            if twists.is_some() {
                return Err(parse_err(ln, "second twists line"));
            }
            let bits = rest.trim();
            if bits.len() != g.m() {
                return Err(parse_err(ln, format!("expected {} twist bits, found {}", g.m(), bits.len())));
            }
            twists = Some(
                EdgeSet::parse_bitstring(bits)
                    .ok_or_else(|| parse_err(ln, "twists must be a string of 0 and 1"))?,
            );
        } else {
            return Err(parse_err(ln, format!("unrecognised line `{line}`")));
        }
    }
    let default = RotationSystem::default_for(&g);
    let cycles = cycles
        .into_iter()
        .enumerate()
        .map(|(v, c)| c.unwrap_or_else(|| default.cycle(v).to_vec()))
        .collect();
    let rotation = RotationSystem::new(&g, cycles).map_err(|e| parse_err(last_line, e.to_string()))?;
    RibbonStructure::new(g, rotation, twists.unwrap_or(EdgeSet::EMPTY))
}

pub fn write_ribbon(r: &RibbonStructure) -> String {
    let mut out = write_graph(&r.graph);
    for v in 0..r.graph.n() {
        let _ = write!(out, "rotation {v}:");
        for d in r.rotation.cycle(v) {
            let _ = write!(out, " {d}");
        }
        out.push('\n');
    }
    let _ = writeln!(out, "twists: {}", r.twists.to_bitstring(r.graph.m()));
    out
}

/// Graphviz rendering: one drawn edge per edge, labelled `x` when twisted and `=` otherwise.
pub fn to_dot(r: &RibbonStructure, name: &str) -> String {
    let id: String = name
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() || c == '_' { c } else { '_' })
        .collect();
    let mut out = format!("graph {} {{\n", if id.is_empty() { "G".into() } else { id });
    for v in 0..r.graph.n() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, (u, v)) in r.graph.edge_list().into_iter().enumerate() {
        let label = if r.twist(e) { "x" } else { "=" };
        let _ = writeln!(out, "  {u} -- {v} [label=\"{label}\", id=\"e{e}\"];");
    }
    out.push_str("}\n");
    out
}

/// JSON shape of a ribbon structure.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RibbonJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub rotation: Vec<Vec<usize>>,
    pub twists: String,
}

impl From<&RibbonStructure> for RibbonJson {
    fn from(r: &RibbonStructure) -> Self {
        RibbonJson {
            n: r.graph.n(),
            edges: r.graph.edge_list().into_iter().map(|(u, v)| [u, v]).collect(),
            rotation: r.rotation.cycles().to_vec(),
            twists: r.twists.to_bitstring(r.graph.m()),
        }
    }
}

impl TryFrom<RibbonJson> for RibbonStructure {
    type Error = Error;

    fn try_from(j: RibbonJson) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = j.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Multigraph::new(j.n, &pairs)?;
        if j.twists.len() != g.m() {
            return Err(Error::Parse { line: 0, message: "twist bitstring length differs from m".into() });
        }
        let twists = EdgeSet::parse_bitstring(&j.twists)
            .ok_or_else(|| Error::Parse { line: 0, message: "bad twist bitstring".into() })?;
        let rotation = RotationSystem::new(&g, j.rotation)?;
        RibbonStructure::new(g, rotation, twists)
    }
}

pub fn ribbon_to_json(r: &RibbonStructure) -> String {
    let mut s = serde_json::to_string_pretty(&RibbonJson::from(r)).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn ribbon_from_json(text: &str) -> Result<RibbonStructure> {
    let j: RibbonJson = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        message: e.to_string(),
    })?;
    RibbonStructure::try_from(j)
}
