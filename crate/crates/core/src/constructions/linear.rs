use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::numbers::{binomial, prime_power_at_least};
use crate::algebra::{Element, Matrix, Ring};
use crate::error::{Error, Result};
use crate::graphs::Digraph;
use crate::networks::Network;

/// A matrix over `Z_q` with support exactly `D` and determinant 1.
///
/// Requires `D` coverable and `q >= 3`. Uses the cycle cover `pi` to reduce
/// to a loop-full graph `D'`, builds `M'` on `D'` vertex by vertex, and
/// returns `M = P M'`.
pub fn nonsingular_matrix_for_graph(d: &Digraph, q: u32) -> Result<Matrix> {
    if q < 3 {
        return Err(Error::AlphabetTooSmall(q));
    }
    let ring = Ring::modular(q)?;
    let n = d.n();
    let cover = d.cycle_decomposition().ok_or(Error::NotCoverable)?;
    let mut pi = vec![0; n];
    for c in &cover {
        for (i, &v) in c.iter().enumerate() {
            pi[v] = c[(i + 1) % c.len()];
        }
    }
    // D' has the arc (pi(u), v) for every arc (u, v) of D
    let reduced = Digraph::new(n, d.arcs().map(|(u, v)| (pi[u], v)))?;
    let mut m_red = loop_full_unit(&reduced, &ring)?;
    let odd = cover.iter().filter(|c| c.len() % 2 == 0).count() % 2 == 1;
    if odd {
        for j in 0..n {
            let e = m_red.get(0, j);
            m_red.set(0, j, ring.neg(e));
        }
    }
    let mut m = Matrix::zeros(ring, n, n);
    for i in 0..n {
        for j in 0..n {
            m.set(i, j, m_red.get(pi[i], j));
        }
    }
    Ok(m)
}

/// Induction on a loop-full graph: each new vertex gets ones on its arcs and
/// a diagonal entry chosen so the determinant stays 1.
fn loop_full_unit(d: &Digraph, ring: &Ring) -> Result<Matrix> {
    let n = d.n();
    let one = ring.one();
    let mut m = Matrix::from_rows(ring.clone(), &[vec![one]])?;
    for k in 1..n {
        let mut a = Matrix::zeros(ring.clone(), k + 1, k + 1);
        for i in 0..k {
            for j in 0..k {
                a.set(i, j, m.get(i, j));
            }
            if d.has_arc(k, i) {
                a.set(k, i, one);
            }
            if d.has_arc(i, k) {
                a.set(i, k, one);
            }
        }
        a.set(k, k, one);
        let det_a = a.det()?;
        let two = ring.from_int(2);
        if det_a != two {
            a.set(k, k, ring.sub(two, det_a));
        } else {
            // the off-diagonal part of row k contributes det(A) - 1 = 1;
            // negating it and doubling the diagonal gives 2 - 1
            for j in 0..k {
                let e = a.get(k, j);
                a.set(k, j, ring.neg(e));
            }
            a.set(k, k, two);
        }
        m = a;
    }
    Ok(m)
}

/// `x (M . A_D)` with `M` uniform over nonzero elements of `GF(q)`.
///
/// Every one of the `n^2` entries is drawn (row-major) before masking, so the
/// stream consumed depends only on `n`.
pub fn random_linear_strategy(d: &Digraph, q: u32, seed: u64) -> Result<Network> {
    let ring = Ring::field(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = d.n();
    let data: Vec<Element> = (0..n * n)
        .map(|k| {
            let e = rng.gen_range(1..q);
            if d.has_arc(k / n, k % n) {
                e
            } else {
                0
            }
        })
        .collect();
    Network::linear(Matrix::new(ring, n, n, data)?)
}

/// Least prime power `q >= (n^3 + n^2 + 4) / 2`.
pub fn linear_field_threshold(n: u64) -> u64 {
    prime_power_at_least((n * n * n + n * n + 4).div_ceil(2))
}

/// Least prime power `q > n^2 C(n^2, n)`.
pub fn super_threshold(n: u64) -> Result<u64> {
    let bound = binomial(n * n, n)
        .checked_mul((n * n) as u128)
        .and_then(|b| u64::try_from(b + 1).ok())
        .ok_or_else(|| Error::BadParams(format!("threshold for n = {n} overflows")))?;
    Ok(prime_power_at_least(bound))
}

/// `false` iff `q <= n^2 - n`, in which case no super-expansive network exists.
pub fn bush_gate(n: u64, q: u64) -> bool {
    q > n * n - n
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::families::{cycle, g_n};

    fn check_unit(d: &Digraph, q: u32) {
        let m = nonsingular_matrix_for_graph(d, q).unwrap();
        assert_eq!(m.det().unwrap(), 1, "{d:?} over Z_{q}");
        for u in 0..d.n() {
            for v in 0..d.n() {
                assert_eq!(m.get(u, v) != 0, d.has_arc(u, v));
            }
        }
    }

    #[test]
    fn nonsingular_examples() {
        let k1 = Digraph::new(1, [(0, 0)]).unwrap();
        assert_eq!(nonsingular_matrix_for_graph(&k1, 3).unwrap().to_rows(), vec![vec![1]]);
        for q in 3..8 {
            check_unit(&cycle(3).unwrap(), q);
            check_unit(&cycle(4).unwrap(), q);
            check_unit(&g_n(2).unwrap(), q);
            check_unit(&g_n(4).unwrap(), q);
            check_unit(&crate::graphs::families::complete(4).unwrap(), q);
        }
    }

    #[test]
    fn nonsingular_errors() {
        let path = crate::graphs::families::path(3).unwrap();
        assert!(matches!(nonsingular_matrix_for_graph(&path, 3), Err(Error::NotCoverable)));
        assert!(matches!(nonsingular_matrix_for_graph(&cycle(2).unwrap(), 2), Err(Error::AlphabetTooSmall(2))));
    }

    #[test]
    fn random_strategy_is_seeded_and_masked() {
        let d = cycle(3).unwrap();
        let a = random_linear_strategy(&d, 8, 7).unwrap();
        assert_eq!(a, random_linear_strategy(&d, 8, 7).unwrap());
        assert_eq!(a.interaction_graph(&crate::Caps::default()).unwrap(), d);
        assert!(random_linear_strategy(&d, 6, 7).is_err());
    }

    #[test]
    fn thresholds() {
        assert_eq!(linear_field_threshold(2), 8);
        assert_eq!(super_threshold(2).unwrap(), 25);
        assert!(!bush_gate(2, 2));
        assert!(bush_gate(2, 3));
        assert!(bush_gate(1, 2));
    }
}
