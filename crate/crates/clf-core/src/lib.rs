//! Construction and verification of graphs with constant link and
//! restricted cycle lengths.
//!
//! The crate builds the objects three ways — design-theoretic towers over
//! Steiner systems and affine geometries, tree-gluing with separating
//! permutations, and hypergraph switching — and certifies every claimed
//! property (constant link, forbidden cycle windows, Berge girth,
//! induced-star-freeness, induced Turán extremality) directly on the built
//! objects.
//!
//! Module map:
//! - [`graph`], [`iso`], [`cycles`]: simple-graph core, small-graph
//!   isomorphism, bounded cycle search.
//! - [`hypergraph`]: uniform hypergraphs, Berge girth, switching.
//! - [`families`]: the clique-expansion/contraction and incidence
//!   correspondences between constant-link graphs, hypergraphs, and
//!   biregular bipartite graphs.
//! - [`designs`], [`field`]: Steiner triple systems, projective planes,
//!   resolvable affine point-line geometries.
//! - [`construct`], [`perms`]: the graph-building pipelines and the
//!   separating-permutation search.
//! - [`turan`], [`verify`]: induced Turán bounds, witnesses, the brute-force
//!   oracle, and the property verifiers with their report format.
//! - [`format`]: bit-exact text formats for graphs and hypergraphs.

pub mod construct;
pub mod cycles;
pub mod designs;
pub mod families;
pub mod field;
pub mod graph;
pub mod hypergraph;
pub mod iso;
pub mod perms;
pub mod rng;

pub use cycles::{circumference_small, cycle_lengths_up_to, find_cycle_of_length, CycleProfile};
pub use graph::{Graph, GraphError};
pub use hypergraph::{BergeCycle, BergeGirth, Hypergraph, HypergraphError};
pub use iso::is_isomorphic;
pub use rng::SplitMix64;
