//! Exact unit-distance graphs and chromatic numbers in Minkowski planes
//! whose unit circle is a regular octagon, decagon or dodecagon.
//!
//! The pipeline: exact arithmetic over Q(√d) ([`field`]) grounds the
//! polygon metrics and their boundary predicate ([`metric`]); named
//! unit-vector orbits form validated catalogs ([`catalog`]); Minkowski sums
//! and orbit closures of those vectors yield unit-distance graphs
//! ([`graph`]); an exhaustive DSATUR branch-and-bound decides
//! k-colorability with verifiable certificates ([`color`]); and structural
//! searches count Moser spindles and extract small chromatic-critical
//! subgraphs ([`structure`]).
//!
//! See the `examples/` directory for one runnable walk-through per
//! capability, and the `acceptance` integration test for the full
//! reproduction matrix.

pub(crate) mod bits;
pub mod catalog;
pub mod cli;
pub mod color;
pub mod field;
pub mod graph;
pub mod metric;
pub mod render;
pub mod structure;
