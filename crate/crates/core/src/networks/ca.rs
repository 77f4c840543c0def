use super::network::Network;
use crate::algebra::Element;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// Restriction of a cellular automaton with radius `r` to configurations of
/// period `n`: `f(x)_z = rule(x_{z-r}, ..., x_{z+r})`, indices mod `n`.
pub fn from_ca_rule(
    rule: impl Fn(&[Element]) -> Element,
    r: usize,
    n: usize,
    q: u32,
    caps: &Caps,
) -> Result<Network> {
    if n == 0 {
        return Err(Error::BadParams("period must be at least 1".into()));
    }
    let offset = n * (r / n + 1) - r;
    Network::from_fn(n, q, caps, |x| {
        (0..n)
            .map(|z| {
                let window: Vec<Element> = (0..=2 * r).map(|k| x[(z + offset + k) % n]).collect();
                rule(&window)
            })
            .collect()
    })
}
