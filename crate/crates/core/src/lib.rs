//! Interval posets of permutations and the dissections of convex polygons
//! they correspond to.
//!
//! The interval `[a, b]` of a permutation of order `n` is sent to the chord
//! `{a, b + 1}` of the `(n + 1)`-gon. Under this map, interval posets become
//! diagonally framed dissections without empty quadrilaterals, tree posets
//! become non-crossing ones, and posets of block-wise simple permutations
//! additionally avoid empty triangles. [`census`] checks these statements
//! exhaustively for small orders.

pub mod bijection;
pub mod census;
pub mod perm;
pub mod polygon;
pub mod poset;
pub mod render;

pub use bijection::{classify_image, phi, phi_inverse, ImageClass};
pub use census::{Census, CensusConfig, CensusReport, Family};
pub use perm::{parse_permutation, Permutation, SumParts, ValueInterval};
pub use polygon::{Chord, Dissection, DissectionClass, EnumerationCaps};
pub use poset::{validate_interval_family, FamilyVerdict, IntervalPoset};
