//! Inputs shared by the benchmarks.

use expnet::constructions::{primitive_mult_network, twisted_lex_network};
use expnet::graphs::families::g_n;
use expnet::{Caps, Network};

/// Multiplication by a primitive element of `GF(2^n)`, as a linear network.
pub fn primitive(n: usize) -> Network {
    primitive_mult_network(n, 2).expect("binary fields exist for every n")
}

/// The same network expanded to a successor table.
pub fn primitive_table(n: usize) -> Network {
    primitive(n).to_table(&Caps::unlimited()).expect("small n")
}

pub fn twisted(n: usize, q: u32) -> Network {
    twisted_lex_network(n, q, &Caps::unlimited()).expect("valid parameters")
}

/// XOR network on the hub graph `G_n`, which is never expansive.
pub fn xor_hub(n: usize) -> Network {
    Network::xor(&g_n(n).expect("n >= 2"))
}
