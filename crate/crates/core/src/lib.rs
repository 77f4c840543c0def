//! Expansive automata networks over finite alphabets.
//!
//! An automata network is a map `f : (q)^n -> (q)^n`. It is *expansive* when
//! the sequence of states observed at any single vertex determines the initial
//! configuration. This crate provides:
//!
//! - [`algebra`]: exact arithmetic over `Z_q` and `GF(q)`, dense matrices,
//!   determinants, ranks and primitive polynomials.
//! - [`graphs`]: digraphs, strongness, coverability (cycle covers), term rank
//!   and the named graph families.
//! - [`networks`]: table and linear networks, traces, observations,
//!   interaction graphs, cartesian products and periodic cellular automata.
//! - [`expansivity`]: brute-force partition refinement, the linear
//!   determinant criterion, expansion time and frequency, super-expansivity.
//! - [`constructions`]: explicit and randomized network constructions, each
//!   with verifiable claims.
//! - [`coding`]: orbit arrays, orthogonal-array strength, minimum distance and
//!   MDS certification.

pub mod algebra;
pub mod coding;
pub mod constructions;
pub mod expansivity;
pub mod graphs;
pub mod networks;

mod caps;
mod error;

pub use algebra::{Element, Matrix, Ring, RingKind};
pub use caps::Caps;
pub use coding::{Code, OrthogonalArray};
pub use constructions::ConstructionReport;
pub use error::{Error, Result};
pub use expansivity::{Dynamics, Observer, Partition, RefinementReport};
pub use graphs::Digraph;
pub use networks::{Configuration, Network, Observation, StateSpace, TraceView};
