//! Exact arithmetic over `Z_q` and `GF(q)` and dense matrices over them.

mod matrix;
pub mod numbers;
pub mod poly;
mod ring;

pub use matrix::Matrix;
pub use poly::{primitive_polynomial, Poly};
pub use ring::{Element, Ring, RingKind};

/// Builds the alphabet ring; see [`Ring::new`].
pub fn make_ring(q: u32, kind: RingKind) -> crate::Result<Ring> {
    Ring::new(q, kind)
}

/// Least element of multiplicative order `q - 1`.
pub fn primitive_element(ring: &Ring) -> crate::Result<Element> {
    ring.primitive_element()
}
