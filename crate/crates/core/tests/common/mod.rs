//! Independent reference implementations used to cross-check the library.
#![allow(dead_code)]

use expnet::algebra::numbers::checked_pow;
use expnet::{Caps, Configuration, Digraph, Element, Network};
use itertools::Itertools;
use num_rational::Ratio;

/// Leibniz expansion over `Z_q` with integer arithmetic.
pub fn leibniz_det(rows: &[Vec<Element>], q: u32) -> Element {
    let n = rows.len();
    let mut total: i128 = 0;
    for perm in (0..n).permutations(n) {
        let inversions = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        let prod = (0..n).fold(1i128, |acc, i| acc * rows[i][perm[i]] as i128 % q as i128);
        total += if inversions % 2 == 0 { prod } else { -prod };
    }
    total.rem_euclid(q as i128) as Element
}

/// Hall's condition on every vertex subset.
pub fn hall_coverable(d: &Digraph) -> bool {
    let n = d.n();
    (1u32..1 << n).all(|mask| {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        d.out_neighborhood(&set).len() >= set.len()
    })
}

/// Reachability by repeated squaring of the adjacency relation.
pub fn naive_strong(d: &Digraph) -> bool {
    let n = d.n();
    let mut reach = vec![vec![false; n]; n];
    for (u, row) in reach.iter_mut().enumerate() {
        row[u] = true;
    }
    for (u, v) in d.arcs() {
        reach[u][v] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if reach[i][k] && reach[k][j] {
                    reach[i][j] = true;
                }
            }
        }
    }
    reach.iter().all(|r| r.iter().all(|&b| b))
}

pub fn configs(n: usize, q: u32) -> Vec<Configuration> {
    (0..n)
        .map(|_| 0..q)
        .multi_cartesian_product()
        .map(Configuration::new)
        .collect()
}

pub fn states(f: &Network) -> u64 {
    checked_pow(f.q() as u64, f.n() as u32).unwrap() as u64
}

/// Traces of length `horizon` by direct iteration.
pub fn trace(f: &Network, x: &Configuration, v: usize, horizon: usize) -> Vec<Element> {
    let mut y = x.clone();
    (0..horizon)
        .map(|_| {
            y = f.apply(&y).unwrap();
            y.digits[v]
        })
        .collect()
}

/// Pairwise first differences over a `q^(2n)` horizon, which covers any
/// `l_x * l_y`. Returns `None` if some pair never separates, else `T(f)`.
pub fn naive_expansion_time(f: &Network) -> Option<usize> {
    let all = configs(f.n(), f.q());
    let horizon = (states(f) * states(f)) as usize;
    let mut worst = 0;
    for v in 0..f.n() {
        let traces: Vec<Vec<Element>> = all.iter().map(|x| trace(f, x, v, horizon)).collect();
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                let t = traces[i].iter().zip(&traces[j]).position(|(a, b)| a != b)? + 1;
                worst = worst.max(t);
            }
        }
    }
    Some(worst)
}

pub fn naive_expansive(f: &Network) -> bool {
    naive_expansion_time(f).is_some()
}

pub fn orbit_len(f: &Network, x: &Configuration) -> usize {
    let mut y = f.apply(x).unwrap();
    let mut l = 1;
    while &y != x {
        y = f.apply(&y).unwrap();
        l += 1;
        assert!(l as u64 <= states(f), "not a permutation");
    }
    l
}

/// `phi_v(x, y)` with the `l_x l_y` horizon of the definition.
pub fn naive_phi(f: &Network, x: &Configuration, y: &Configuration, v: usize) -> Ratio<u64> {
    let h = orbit_len(f, x) * orbit_len(f, y);
    let d = trace(f, x, v, h).iter().zip(trace(f, y, v, h)).filter(|(a, b)| *a != b).count();
    Ratio::new(d as u64, h as u64)
}

pub fn naive_frequency(f: &Network) -> Ratio<u64> {
    let all = configs(f.n(), f.q());
    let mut best = Ratio::from_integer(1);
    for v in 0..f.n() {
        for x in &all {
            for y in &all {
                if x != y {
                    best = best.min(naive_phi(f, x, y, v));
                }
            }
        }
    }
    best
}

/// Arc `u -> v` iff changing only `x_u` can change `f(x)_v`.
pub fn naive_interaction_graph(f: &Network) -> Digraph {
    let n = f.n();
    let all = configs(n, f.q());
    let mut arcs = Vec::new();
    for u in 0..n {
        for v in 0..n {
            let depends = all.iter().any(|a| {
                (0..f.q()).any(|b| {
                    let mut y = a.clone();
                    y.digits[u] = b;
                    f.apply(a).unwrap().digits[v] != f.apply(&y).unwrap().digits[v]
                })
            });
            if depends {
                arcs.push((u, v));
            }
        }
    }
    Digraph::new(n, arcs).unwrap()
}

/// All `n`-cell observations checked by iterating `f` from scratch.
pub fn naive_super_expansive(f: &Network) -> bool {
    let n = f.n();
    let all = configs(n, f.q());
    let cells: Vec<(usize, usize)> = (0..n).flat_map(|v| (1..=n).map(move |t| (v, t))).collect();
    cells.into_iter().combinations(n).all(|omega| {
        let seen: std::collections::HashSet<Vec<Element>> = all
            .iter()
            .map(|x| omega.iter().map(|&(v, t)| f.iterate(x, t).unwrap().digits[v]).collect())
            .collect();
        seen.len() == all.len()
    })
}

/// A network whose coordinate `v` is a random function of `x_{N_in(v)}`.
pub fn random_local_network<R: rand::Rng>(d: &Digraph, q: u32, rng: &mut R) -> Network {
    let n = d.n();
    let tables: Vec<(Vec<usize>, Vec<Element>)> = (0..n)
        .map(|v| {
            let ins = d.in_neighbors(v);
            let size = (q as usize).pow(ins.len() as u32);
            (ins, (0..size).map(|_| rng.gen_range(0..q)).collect())
        })
        .collect();
    Network::from_fn(n, q, &Caps::default(), |x| {
        tables
            .iter()
            .map(|(ins, table)| table[ins.iter().fold(0, |acc, &u| acc * q as usize + x[u] as usize)])
            .collect()
    })
    .unwrap()
}

/// Every digraph on `n` vertices, by arc bitmask.
pub fn all_digraphs(n: usize) -> impl Iterator<Item = Digraph> {
    (0u64..1 << (n * n)).map(move |mask| {
        Digraph::new(n, (0..n * n).filter(|&k| mask >> k & 1 == 1).map(|k| (k / n, k % n))).unwrap()
    })
}

pub fn random_digraph<R: rand::Rng>(n: usize, density: f64, rng: &mut R) -> Digraph {
    Digraph::new(n, (0..n * n).filter(|_| rng.gen_bool(density)).map(|k| (k / n, k % n))).unwrap()
}
