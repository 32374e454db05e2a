//! Exact combinatorics for small graphs: the four vulnerability parameters
//! (toughness, isolated toughness and its variant, binding number), decisions
//! and constructions for factors whose components are single edges or odd
//! cycles, and the extremal families on which those bounds are tight.
//!
//! Everything is exact: parameter values are rationals in lowest terms,
//! minima come from exhaustive subset enumeration with value-preserving
//! pruning, and decisions carry certificates (a witness set, a violating set,
//! or an explicit decomposition) that can be revalidated independently.
//!
//! Start with the runnable programs in `examples/`; each one exercises one
//! capability end to end. The `factorkit` binary exposes the same operations
//! on edge-list files.

pub mod canon;
pub mod edgelist;
pub mod factors;
pub mod generate;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod parameters;
pub mod rational;
pub mod rng;
pub mod structure;

pub use graph::{Graph, VertexSet, MAX_ORDER};
pub use rational::Rational;
