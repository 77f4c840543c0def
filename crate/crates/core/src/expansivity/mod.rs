//! Expansivity predicates and metrics.
//!
//! Brute-force checks refine the kernel of the trace map over the whole
//! configuration space (see [`Dynamics::refine`]); linear networks over
//! fields also have determinant criteria.

mod linear;
mod metrics;
mod predicates;
mod refine;
mod superexp;

pub(crate) use linear::unit_criterion;
pub use linear::{is_expansive_linear, observability_matrix, LinearCertificate};
pub use metrics::{
    expansion_frequency, expansion_time, is_strongly_expansive, phi_pair, tau_pair, FrequencyReport, TimeReport,
    Witness,
};
pub use predicates::{
    certify, is_expansive, is_quasi_expansive, is_quasi_expansive_on, is_weakly_expansive, ExpansivityCertificate,
    Variant, VertexVerdict,
};
pub use refine::{Dynamics, Observer, Partition, RefinementReport};
pub use superexp::{
    gate, is_super_expansive, is_super_expansive_linear, observation_matrix, GateFailure, SuperReport, SuperWitness,
};
