use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::linear::{bush_gate, nonsingular_matrix_for_graph};
use crate::algebra::numbers::factorize;
use crate::algebra::poly::least_primitive;
use crate::algebra::{Element, Matrix, Ring};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::expansivity::{is_super_expansive_linear, unit_criterion};
use crate::graphs::families::{cycle_with_loops, CycleOfCycles};
use crate::networks::{cartesian_product, Network, StateSpace};

/// A linear network over `Z_q` on the cycle `0 -> 1 -> ... -> n-1 -> 0`
/// with loops on `loops`.
///
/// Proper graphs (some vertex without a loop) use `A_D`. When every vertex
/// has a loop the matrix has first row `(b, a, 0, ...)`, rows `i = 1..n-2`
/// with ones at `i` and `i + 1`, and last row `(1, 0, ..., 0, 1)`, where `a`
/// is the least unit outside `{0, 1}` and `b = 1 - a` (odd `n`) or `a + 1`
/// (even `n`). If `b = 0` or that matrix is not expansive, the entries at
/// `(0, 0)`, `(0, 1)` and `(n-1, 0)` are searched in lexicographic order.
pub fn cycle_with_loops_network(n: usize, loops: &[usize], q: u32) -> Result<Matrix> {
    let ring = Ring::modular(q)?;
    let d = cycle_with_loops(n, loops)?;
    let improper = n >= 2 && (0..n).all(|v| d.has_arc(v, v));
    if !improper {
        return Ok(d.adjacency_matrix(ring));
    }
    if q == 2 {
        return Err(Error::NoLinearSolution(format!("every vertex of the {n}-cycle has a loop and q = 2")));
    }
    let a = (2..q).find(|&a| ring.is_unit(a)).expect("q - 1 is a unit");
    let b = if n % 2 == 1 { ring.sub(1, a) } else { ring.add(a, 1) };
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for i in 1..n - 1 {
        m.set(i, i, 1);
        m.set(i, i + 1, 1);
    }
    m.set(n - 1, 0, 1);
    m.set(n - 1, n - 1, 1);
    let with = |m: &Matrix, x: Element, y: Element, z: Element| {
        let mut m = m.clone();
        m.set(0, 0, x);
        m.set(0, 1, y);
        m.set(n - 1, 0, z);
        m
    };
    let direct = with(&m, b, a, 1);
    if b != 0 && unit_criterion(&direct)? {
        return Ok(direct);
    }
    for x in 1..q {
        for y in 1..q {
            for z in 1..q {
                let cand = with(&m, x, y, z);
                if unit_criterion(&cand)? {
                    return Ok(cand);
                }
            }
        }
    }
    Err(Error::NoLinearSolution(format!("no expansive matrix found for n = {n}, q = {q}")))
}

/// The XOR network for `q = 2` (requires a proper arrangement), otherwise
/// [`nonsingular_matrix_for_graph`] over `Z_q`.
pub fn cycle_of_cycles_network(cc: &CycleOfCycles, q: u32) -> Result<Network> {
    let built = cc.build()?;
    if q == 2 {
        if !built.proper {
            return Err(Error::NoLinearSolution(
                "improper cycle of cycles has two cycle decompositions, so XOR is not bijective".into(),
            ));
        }
        return Ok(Network::xor(&built.graph));
    }
    Network::linear(nonsingular_matrix_for_graph(&built.graph, q)?)
}

/// Digits `x^a` of the `a`-th configuration in twisted lexicographic order,
/// where `a = sum_i a_i q^(i-1)`.
fn twisted(a: usize, n: usize, q: u32) -> Vec<Element> {
    let digits: Vec<Element> = (0..n).map(|i| ((a / (q as usize).pow(i as u32)) % q as usize) as Element).collect();
    let top = q - 1;
    (0..n)
        .map(|i| {
            let d = digits[i];
            if i + 1 == n || digits[i + 1..].iter().any(|&e| e != top) {
                d
            } else if d == top {
                q - 2
            } else if d + 2 == q {
                top
            } else {
                d
            }
        })
        .collect()
}

/// The successor map of the twisted lexicographic enumeration, a single
/// cycle through all `q^n` configurations.
pub fn twisted_lex_network(n: usize, q: u32, caps: &Caps) -> Result<Network> {
    if n == 0 || q < 2 {
        return Err(Error::BadParams("twisted-lex needs n >= 1 and q >= 2".into()));
    }
    let space = StateSpace::new(n, q);
    let size = space.checked_size(caps)?;
    let order: Vec<usize> = (0..size).map(|a| space.index(&twisted(a, n, q))).collect();
    let mut succ = vec![0; size];
    for a in 0..size {
        succ[order[a]] = order[(a + 1) % size];
    }
    Network::table(n, q, succ)
}

/// Multiplication by a primitive element of `GF(q^n)`, written in the
/// polynomial basis of the least primitive polynomial of degree `n`.
pub fn primitive_mult_network(n: usize, q: u32) -> Result<Network> {
    let ring = Ring::field(q)?;
    let c = least_primitive(&ring, n)?;
    let mut m = Matrix::zeros(ring.clone(), n, n);
    for i in 0..n.saturating_sub(1) {
        m.set(i, i + 1, 1);
    }
    for j in 0..n {
        m.set(n - 1, j, ring.neg(c[j]));
    }
    Network::linear(m)
}

/// `M` over `GF(q)` with `alpha` the least element outside `{0, 1}`.
pub fn hub_matrix(q: u32) -> Result<Matrix> {
    let ring = Ring::field(q)?;
    if q == 2 {
        return Err(Error::NoLinearSolution("no linear expansive network on this graph for q = 2".into()));
    }
    let alpha = 2;
    Matrix::from_rows(ring, &[vec![0, 1, 1, 1], vec![1, 1, 0, 0], vec![1, 0, alpha, 0], vec![1, 0, 0, 0]])
}

/// The nonlinear binary network on the same graph.
pub fn hub_binary() -> Network {
    Network::from_fn(4, 2, &Caps::default(), |x| {
        vec![(x[1] * x[2] + x[3] + 1) % 2, (x[0] + x[1]) % 2, (x[0] + x[2] + 1) % 2, x[0]]
    })
    .expect("16 states")
}

/// An expansive network on the four-vertex hub graph for any `q >= 2`: one
/// factor per prime power dividing `q`, linear except for the factor 2,
/// combined by cartesian products.
pub fn hub_network(q: u32, caps: &Caps) -> Result<Network> {
    if q < 2 {
        return Err(Error::BadParams("q must be at least 2".into()));
    }
    let factors: Vec<Network> = factorize(q as u64)
        .into_iter()
        .map(|(p, k)| {
            let r = (p as u32).pow(k);
            if r == 2 {
                Ok(hub_binary())
            } else {
                Network::linear(hub_matrix(r)?)
            }
        })
        .collect::<Result<_>>()?;
    let mut it = factors.into_iter();
    let first = it.next().expect("q >= 2 has a prime factor");
    it.try_fold(first, |acc, g| cartesian_product(&acc, &g, caps))
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub matrix: Option<Matrix>,
    pub attempts: usize,
}

/// Samples matrices with all entries nonzero until one is super-expansive,
/// for at most `budget` attempts.
pub fn super_expansive_search(n: usize, q: u32, seed: u64, budget: usize, caps: &Caps) -> Result<SearchOutcome> {
    if !bush_gate(n as u64, q as u64) {
        return Err(Error::BushBoundViolated { n, q });
    }
    let ring = Ring::field(q)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for attempt in 1..=budget {
        let data = (0..n * n).map(|_| rng.gen_range(1..q)).collect();
        let m = Matrix::new(ring.clone(), n, n, data)?;
        if is_super_expansive_linear(&m, caps)?.holds {
            return Ok(SearchOutcome { matrix: Some(m), attempts: attempt });
        }
    }
    Ok(SearchOutcome { matrix: None, attempts: budget })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expansivity::{is_expansive, is_expansive_linear};

    #[test]
    fn twisted_order_2_2() {
        let order: Vec<_> = (0..4).map(|a| twisted(a, 2, 2)).collect();
        assert_eq!(order, vec![vec![0, 0], vec![1, 0], vec![1, 1], vec![0, 1]]);
        let f = twisted_lex_network(2, 2, &Caps::default()).unwrap();
        assert_eq!(f.successor_table(&Caps::default()).unwrap(), vec![2, 0, 3, 1]);
    }

    #[test]
    fn twisted_is_one_cycle() {
        for (n, q) in [(2, 3), (3, 2), (3, 3), (2, 5)] {
            let f = twisted_lex_network(n, q, &Caps::default()).unwrap();
            let o = f.orbit(&crate::Configuration::zero(n)).unwrap();
            assert_eq!((o.tail, o.cycle), (0, (q as usize).pow(n as u32)));
        }
    }

    #[test]
    fn primitive_mult_small() {
        let f = primitive_mult_network(2, 2).unwrap();
        assert_eq!(f.matrix().unwrap().to_rows(), vec![vec![0, 1], vec![1, 1]]);
        let o = f.orbit(&crate::Configuration::new(vec![0, 1])).unwrap();
        assert_eq!(o.cycle, 3);
        let f = primitive_mult_network(3, 4).unwrap();
        let o = f.orbit(&crate::Configuration::new(vec![1, 0, 0])).unwrap();
        assert_eq!(o.cycle, 63);
    }

    #[test]
    fn hub_linear_is_expansive() {
        for q in [3, 4, 5, 7, 8, 9] {
            assert!(is_expansive_linear(&hub_matrix(q).unwrap()).unwrap().holds, "q = {q}");
        }
        assert!(is_expansive(&hub_binary(), &Caps::default()).unwrap());
        assert!(hub_network(2, &Caps::default()).unwrap() == hub_binary());
    }

    #[test]
    fn cycle_with_loops_cases() {
        assert!(matches!(cycle_with_loops_network(3, &[0, 1, 2], 2), Err(Error::NoLinearSolution(_))));
        for q in 3..=8 {
            for n in 2..=5 {
                let all: Vec<usize> = (0..n).collect();
                let m = cycle_with_loops_network(n, &all, q).unwrap();
                let d = cycle_with_loops(n, &all).unwrap();
                let net = Network::linear(m.clone()).unwrap();
                assert_eq!(net.interaction_graph(&Caps::default()).unwrap(), d);
                assert!(unit_criterion(&m).unwrap(), "n = {n}, q = {q}");
            }
        }
    }

    #[test]
    fn super_search_small() {
        let out = super_expansive_search(2, 3, 1, 100, &Caps::default()).unwrap();
        assert!(out.matrix.is_some());
        assert!(matches!(
            super_expansive_search(2, 2, 1, 100, &Caps::default()),
            Err(Error::BushBoundViolated { n: 2, q: 2 })
        ));
    }
}
