//! Univariate polynomials over a finite field, coefficients lowest degree
//! first.

use super::numbers::prime_factors;
use super::ring::{Element, Ring};
use crate::error::{Error, Result};

pub type Poly = Vec<Element>;

pub fn trim(mut a: Poly) -> Poly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

/// Degree, `None` for the zero polynomial.
pub fn degree(a: &[Element]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

pub fn mul(ring: &Ring, a: &[Element], b: &[Element]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ring.add(out[i + j], ring.mul(x, y));
        }
    }
    trim(out)
}

/// Remainder of `a` modulo `m`. The leading coefficient of `m` must be a unit.
pub fn rem(ring: &Ring, a: &[Element], m: &[Element]) -> Poly {
    let dm = degree(m).expect("division by the zero polynomial");
    let lead_inv = ring.inv(m[dm]).expect("leading coefficient must be a unit");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < dm {
            break;
        }
        let factor = ring.mul(r[dr], lead_inv);
        let shift = dr - dm;
        for (i, &c) in m[..=dm].iter().enumerate() {
            r[i + shift] = ring.sub(r[i + shift], ring.mul(factor, c));
        }
        r = trim(r);
    }
    r
}

/// `x^e mod m`.
pub fn pow_x_mod(ring: &Ring, mut e: u64, m: &[Element]) -> Poly {
    let mut acc = rem(ring, &[1], m);
    let mut base = rem(ring, &[0, 1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = rem(ring, &mul(ring, &acc, &base), m);
        }
        base = rem(ring, &mul(ring, &base, &base), m);
        e >>= 1;
    }
    acc
}

/// The `index`-th monic polynomial of degree `k` in canonical order: the
/// lower coefficients are the base-`q` digits of `index`, least significant
/// first.
pub fn monic_from_index(ring: &Ring, k: usize, mut index: u64) -> Poly {
    let q = ring.q() as u64;
    let mut out = Vec::with_capacity(k + 1);
    for _ in 0..k {
        out.push((index % q) as Element);
        index /= q;
    }
    out.push(1);
    out
}

fn monic_count(ring: &Ring, k: usize) -> u64 {
    (ring.q() as u64).pow(k as u32)
}

/// Irreducibility by exhaustive search for monic factors of degree up to
/// half the degree.
pub fn is_irreducible(ring: &Ring, f: &[Element]) -> bool {
    let Some(deg) = degree(f) else { return false };
    if deg == 0 {
        return false;
    }
    for d in 1..=deg / 2 {
        for idx in 0..monic_count(ring, d) {
            let g = monic_from_index(ring, d, idx);
            if rem(ring, f, &g).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Primitive: irreducible with a root of multiplicative order `q^k - 1`.
pub fn is_primitive(ring: &Ring, f: &[Element]) -> bool {
    let Some(k) = degree(f) else { return false };
    if k == 0 || f[0] == 0 || !is_irreducible(ring, f) {
        return false;
    }
    let m = (ring.q() as u64).pow(k as u32) - 1;
    prime_factors(m)
        .into_iter()
        .all(|r| pow_x_mod(ring, m / r, f) != vec![1])
}

pub fn least_irreducible(ring: &Ring, k: usize) -> Poly {
    (0..monic_count(ring, k))
        .map(|idx| monic_from_index(ring, k, idx))
        .find(|f| is_irreducible(ring, f))
        .expect("irreducible polynomials exist in every degree")
}

/// Least monic primitive polynomial of degree `k` over the field `ring`.
pub fn least_primitive(ring: &Ring, k: usize) -> Result<Poly> {
    if !ring.is_field() {
        return Err(Error::NotAField(ring.q()));
    }
    if k == 0 {
        return Err(Error::BadParams("degree must be >= 1".into()));
    }
    if (ring.q() as u64).checked_pow(k as u32).is_none() {
        return Err(Error::BadParams(format!("q^{k} does not fit in 64 bits")));
    }
    Ok((0..monic_count(ring, k))
        .map(|idx| monic_from_index(ring, k, idx))
        .find(|f| is_primitive(ring, f))
        .expect("primitive polynomials exist in every degree"))
}

/// Least monic primitive polynomial of degree `k` over `GF(p)`.
pub fn primitive_polynomial(p: u32, k: usize) -> Result<Poly> {
    if !super::numbers::is_prime(p as u64) {
        return Err(Error::BadParams(format!("{p} is not prime")));
    }
    least_primitive(&Ring::field(p)?, k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gf2_quadratics() {
        let gf2 = Ring::field(2).unwrap();
        // exhaustive: x^2, x^2+1, x^2+x are reducible; x^2+x+1 is not
        let irreducible: Vec<_> = (0..4)
            .map(|i| monic_from_index(&gf2, 2, i))
            .filter(|f| is_irreducible(&gf2, f))
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1, 1]]);
        assert_eq!(primitive_polynomial(2, 2).unwrap(), vec![1, 1, 1]);
    }

    #[test]
    fn oversized_degree_is_rejected() {
        assert!(matches!(primitive_polynomial(2, 64), Err(Error::BadParams(_))));
    }

    #[test]
    fn least_primitive_examples() {
        assert_eq!(primitive_polynomial(2, 3).unwrap(), vec![1, 1, 0, 1]);
        assert_eq!(primitive_polynomial(2, 4).unwrap(), vec![1, 1, 0, 0, 1]);
        // x^2 + x + 2 over GF(3): x^2+1 is irreducible but not primitive
        assert_eq!(primitive_polynomial(3, 2).unwrap(), vec![2, 1, 1]);
        assert_eq!(primitive_polynomial(2, 1).unwrap(), vec![1, 1]);
        assert_eq!(primitive_polynomial(3, 1).unwrap(), vec![1, 1]);
    }

    #[test]
    fn primitive_root_generates_everything() {
        for (p, k) in [(2u32, 2usize), (2, 3), (2, 4), (3, 2), (5, 2), (3, 3)] {
            let ring = Ring::field(p).unwrap();
            let f = primitive_polynomial(p, k).unwrap();
            let m = (p as u64).pow(k as u32) - 1;
            let mut seen = std::collections::HashSet::new();
            for e in 0..m {
                seen.insert(pow_x_mod(&ring, e, &f));
            }
            assert_eq!(seen.len() as u64, m, "p = {p}, k = {k}");
        }
    }

    #[test]
    fn remainder_matches_definition() {
        let gf3 = Ring::field(3).unwrap();
        // (x^3 + 2x + 1) mod (x^2 + 1) = x + 1 since x^3 = -x
        let r = rem(&gf3, &[1, 2, 0, 1], &[1, 0, 1]);
        assert_eq!(r, vec![1, 1]);
    }
}
