//! Graphs known not to be orientably realizable, stored by the canonical form of their
//! cyclic part and optionally persisted as a directory of graph files.

use crate::cl_structures::catalog_entry;
use crate::io::{parse_graph, write_graph};
use crate::multigraph::{canonical_form, CanonicalForm};
use crate::{Error, Multigraph, Result};
use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnownBad {
    forms: BTreeSet<CanonicalForm>,
}

fn key(g: &Multigraph) -> Result<CanonicalForm> {
    canonical_form(&g.cyclic_part()?.graph)
}

fn io_err(path: &Path, e: std::io::Error) -> Error {
    Error::Io(format!("{}: {e}", path.display()))
}

impl KnownBad {
    pub fn new() -> KnownBad {
        KnownBad::default()
    }

    /// Starts from the q = 4 cubic graph with three digons, which has no orientable strip.
    pub fn seeded() -> KnownBad {
        let mut kb = KnownBad::new();
        let g = catalog_entry("cubic4-three-digons").expect("catalog entry").structure.graph;
        kb.insert(&g).expect("catalog graph is connected");
        kb
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Returns false if an isomorphic cyclic part was already present.
    pub fn insert(&mut self, g: &Multigraph) -> Result<bool> {
        Ok(self.forms.insert(key(g)?))
    }

    pub fn contains(&self, g: &Multigraph) -> Result<bool> {
        if self.forms.is_empty() {
            return Ok(false);
        }
        Ok(self.forms.contains(&key(g)?))
    }

    pub fn graphs(&self) -> Vec<Multigraph> {
        self.forms.iter().map(CanonicalForm::to_graph).collect()
    }

    /// The seeded set plus every `*.graph` file in `dir` (a missing directory adds nothing).
    pub fn load_dir(dir: &Path) -> Result<KnownBad> {
        let mut kb = KnownBad::seeded();
        if !dir.exists() {
            return Ok(kb);
        }
        let mut paths: Vec<PathBuf> = fs::read_dir(dir)
            .map_err(|e| io_err(dir, e))?
            .filter_map(|entry| entry.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "graph"))
            .collect();
        paths.sort();
        for p in paths {
            let text = fs::read_to_string(&p).map_err(|e| io_err(&p, e))?;
            let g = parse_graph(&text).map_err(|e| Error::Io(format!("{}: {e}", p.display())))?;
            kb.insert(&g)?;
        }
        Ok(kb)
    }

    /// Adds `g` and, if it is new, writes its cyclic part to `dir` as `bad-N.graph`.
    pub fn record(&mut self, dir: &Path, g: &Multigraph) -> Result<Option<PathBuf>> {
        let form = key(g)?;
        if !self.forms.insert(form.clone()) {
            return Ok(None);
        }
        fs::create_dir_all(dir).map_err(|e| io_err(dir, e))?;
        let path = (0..)
            .map(|i| dir.join(format!("bad-{i}.graph")))
            .find(|p| !p.exists())
            .expect("some file name is free");
        fs::write(&path, write_graph(&form.to_graph())).map_err(|e| io_err(&path, e))?;
        Ok(Some(path))
    }
}
