//! Digraphs, the admissibility predicates (strong, coverable), term rank and
//! the named graph families.

mod digraph;
pub mod families;
mod matching;

pub use digraph::Digraph;
pub use families::{CycleOfCycles, CycleOfCyclesGraph};
pub use matching::maximum_matching;
