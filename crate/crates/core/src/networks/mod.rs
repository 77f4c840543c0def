mod ca;
mod config;
mod format;
mod network;

pub use ca::from_ca_rule;
pub use config::{format_digits, parse_digits, Configuration, StateSpace};
pub use network::{cartesian_product, Body, Network, Observation, Orbit, TraceView};

pub(crate) use network::brent;
