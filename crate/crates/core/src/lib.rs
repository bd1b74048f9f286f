//! Cut-locus structures on graphs, modelled as twisted ribbon structures.
//!
//! A ribbon structure is a multigraph together with a rotation system (the
//! cyclic order of darts at every vertex) and one twist bit per edge. The
//! crate answers the questions that matter for cut loci on surfaces:
//!
//! - does the thickened graph have a single boundary circle (is it a *strip*)?
//! - is the resulting surface orientable, and what is its genus or crosscap number?
//! - which strip structures exist on a graph, up to equivalence?
//! - does a graph admit an orientable strip at all?
//!
//! Module map:
//!
//! - [`multigraph`]: multigraphs with loops and parallel edges, decompositions,
//!   isomorphism and small-graph generation.
//! - [`cycle_space`]: GF(2) cycle and cut spaces.
//! - [`ribbon`]: rotation systems, boundary tracing, orientability, flips and contractions.
//! - [`cl_structures`]: twist enumeration, equivalence orbits, classification and the catalog.
//! - [`realizability`]: obstruction screens, constructive witnesses and an exhaustive oracle.
//! - [`io`]: text formats, DOT and JSON.
//! - [`verify`]: the reproducibility harness behind `clstrata verify-paper`.

pub mod cl_structures;
pub mod cycle_space;
mod edge_set;
mod error;
pub mod io;
pub mod multigraph;
pub mod realizability;
pub mod ribbon;
pub mod verify;

pub use cl_structures::{
    catalog, classify, enumerate_strips, equivalence_orbit, CatalogEntry, ClassificationReport,
    Generators, StructureClass,
};
pub use cycle_space::{CycleBasis, CycleVector};
pub use edge_set::{EdgeSet, MAX_EDGES};
pub use error::{Error, Result};
pub use multigraph::{Automorphism, CyclicPart, Dart, Multigraph};
pub use realizability::{RealizabilityReport, Verdict};
pub use ribbon::{BoundaryReport, ClosedSurface, RibbonStructure, RotationSystem};
