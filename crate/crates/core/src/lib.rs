//! Weighted safe sets on small graphs.
//!
//! The crate computes the weighted safe number `s(G,w)` and the connected
//! weighted safe number `cs(G,w)` exactly, recognises the connected
//! bipartite and chordal graphs for which the two coincide under every
//! weight function, and builds solver-verified witness weightings
//! (`s < cs`) for graphs outside that class from forbidden contraction
//! patterns.

pub mod campaign;
pub mod contraction;
pub mod enumerate;
pub mod error;
pub mod family;
pub mod graph;
pub mod graph6;
pub mod rational;
pub mod solver;
pub mod witness;

pub use contraction::{beta, contract, find_pattern, lift_weights, Pattern, PatternMatch, QuotientGraph};
pub use error::{Error, Result};
pub use family::{classify, Family, FamilyClassification, Verdict};
pub use graph::{Graph, VertexSet};
pub use rational::{Rational, WeightFn};
pub use solver::{connected_safe_number, is_safe_set, safe_number, SafeSetSolution};
pub use witness::{certify_non_membership, WitnessCertificate, WitnessParams};
