//! Named ribbon structures shipped with the crate.

use crate::io::parse_ribbon;
use crate::RibbonStructure;

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: &'static str,
    pub tags: &'static [&'static str],
    pub description: String,
    /// Graph with its stored rotation; twists are those of the file (zero unless the
    /// entry is about a particular structure).
    pub structure: RibbonStructure,
}

const FILES: &[(&str, &[&str], &str)] = &[
    ("cubic4-bridge", &["q4-cubic", "planar"], include_str!("../../catalog/cubic4-bridge.ribbon")),
    ("cubic4-three-digons", &["q4-cubic", "planar"], include_str!("../../catalog/cubic4-three-digons.ribbon")),
    ("cubic4-two-digons", &["q4-cubic", "planar"], include_str!("../../catalog/cubic4-two-digons.ribbon")),
    ("cubic4-one-digon", &["q4-cubic", "planar"], include_str!("../../catalog/cubic4-one-digon.ribbon")),
    ("cubic4-prism", &["q4-cubic", "planar"], include_str!("../../catalog/cubic4-prism.ribbon")),
    ("cubic4-k33", &["q4-cubic"], include_str!("../../catalog/cubic4-k33.ribbon")),
    ("torus-bouquet", &["q2"], include_str!("../../catalog/torus-bouquet.ribbon")),
    ("theta-orientable", &["q2", "planar"], include_str!("../../catalog/theta-orientable.ribbon")),
    ("theta-nonorientable", &["q2", "planar"], include_str!("../../catalog/theta-nonorientable.ribbon")),
    ("petersen", &["cubic"], include_str!("../../catalog/petersen.ribbon")),
    ("k2-join", &["construction"], include_str!("../../catalog/k2-join.ribbon")),
];

pub fn catalog() -> Vec<CatalogEntry> {
    FILES
        .iter()
        .map(|&(name, tags, text)| CatalogEntry {
            name,
            tags,
            description: text
                .lines()
                .next()
                .and_then(|l| l.strip_prefix("# "))
                .unwrap_or("")
                .to_string(),
            structure: parse_ribbon(text).expect("catalog files parse"),
        })
        .collect()
}

pub fn catalog_entry(name: &str) -> Option<CatalogEntry> {
    catalog().into_iter().find(|e| e.name == name)
}

impl CatalogEntry {
    pub fn has_tag(&self, tag: &str) -> bool {
        self.tags.contains(&tag)
    }
}
