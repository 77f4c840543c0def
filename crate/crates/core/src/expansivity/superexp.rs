use itertools::Itertools;
use serde::Serialize;

use super::linear::powers;
use crate::algebra::numbers::binomial;
use crate::algebra::{Element, Matrix};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graphs::Digraph;
use crate::networks::Network;

/// Why a network was rejected before any observation was enumerated.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "reason", rename_all = "snake_case")]
pub enum GateFailure {
    IncompleteGraph { missing: (usize, usize) },
    AlphabetTooSmall { q: u32, bound: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperReport {
    pub holds: bool,
    pub gate: Option<GateFailure>,
    /// Observations examined (as cell sets, each cell `(vertex, time)`).
    pub checked: usize,
    /// An observation that is not injective, with two configurations it
    /// confuses (brute force) or with no configurations (linear).
    pub witness: Option<SuperWitness>,
    pub singular_count: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuperWitness {
    pub cells: Vec<(usize, usize)>,
    pub pair: Option<(Vec<Element>, Vec<Element>)>,
}

/// Necessary conditions: a complete interaction graph and `q > n^2 - n`.
pub fn gate(graph: &Digraph, q: u32) -> Option<GateFailure> {
    let n = graph.n();
    if let Some(missing) = (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).find(|&(u, v)| !graph.has_arc(u, v)) {
        return Some(GateFailure::IncompleteGraph { missing });
    }
    let bound = n * n - n;
    if (q as usize) <= bound {
        return Some(GateFailure::AlphabetTooSmall { q, bound });
    }
    None
}

fn cells(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|v| (1..=n).map(move |t| (v, t))).collect()
}

fn rejected(g: GateFailure) -> SuperReport {
    SuperReport { holds: false, gate: Some(g), checked: 0, witness: None, singular_count: 0 }
}

/// Checks that every observation of `n` distinct cells determines the
/// configuration, by exhaustive enumeration.
pub fn is_super_expansive(f: &Network, caps: &Caps) -> Result<SuperReport> {
    let n = f.n();
    if let Some(g) = gate(&f.interaction_graph(caps)?, f.q()) {
        return Ok(rejected(g));
    }
    caps.check_observations(binomial((n * n) as u64, n as u64))?;
    let space = f.space();
    let size = space.checked_size(caps)?;
    let succ = f.successor_table(caps)?;
    // iterates[t][x] = f^t(x)
    let mut iterates = vec![(0..size).collect::<Vec<_>>()];
    for t in 1..=n {
        let next = iterates[t - 1].iter().map(|&x| succ[x]).collect();
        iterates.push(next);
    }
    let q = f.q() as usize;
    let mut owner = vec![usize::MAX; size];
    let mut checked = 0;
    for omega in cells(n).into_iter().combinations(n) {
        checked += 1;
        owner.fill(usize::MAX);
        for x in 0..size {
            let key = omega
                .iter()
                .fold(0, |acc, &(v, t)| acc * q + space.digit(iterates[t][x], v) as usize);
            if owner[key] != usize::MAX {
                let pair = (space.digits(owner[key]), space.digits(x));
                let witness = SuperWitness { cells: omega, pair: Some(pair) };
                return Ok(SuperReport { holds: false, gate: None, checked, witness: Some(witness), singular_count: 1 });
            }
            owner[key] = x;
        }
    }
    Ok(SuperReport { holds: true, gate: None, checked, witness: None, singular_count: 0 })
}

/// `N_omega`: column `v_i` of `M^{t_i}` for each cell.
pub fn observation_matrix(m: &Matrix, cells: &[(usize, usize)]) -> Result<Matrix> {
    let pw = powers(m, m.rows() + 1)?;
    Matrix::from_columns(m.ring().clone(), &cells.iter().map(|&(v, t)| pw[t].column(v)).collect::<Vec<_>>())
}

/// Linear check: every `N_omega` must be nonsingular. Counts all singular
/// observations and keeps the first as the witness.
pub fn is_super_expansive_linear(m: &Matrix, caps: &Caps) -> Result<SuperReport> {
    if !m.ring().is_field() {
        return Err(Error::NotAField(m.ring().q()));
    }
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let n = m.rows();
    let graph = Digraph::new(n, (0..n).flat_map(|u| (0..n).map(move |v| (u, v))).filter(|&(u, v)| m.get(u, v) != 0))?;
    if let Some(g) = gate(&graph, m.ring().q()) {
        return Ok(rejected(g));
    }
    caps.check_observations(binomial((n * n) as u64, n as u64))?;
    let pw = powers(m, n + 1)?;
    let mut checked = 0;
    let mut singular_count = 0;
    let mut witness = None;
    for omega in cells(n).into_iter().combinations(n) {
        checked += 1;
        let cols: Vec<Vec<Element>> = omega.iter().map(|&(v, t)| pw[t].column(v)).collect();
        if Matrix::from_columns(m.ring().clone(), &cols)?.det()? == 0 {
            singular_count += 1;
            witness.get_or_insert(SuperWitness { cells: omega, pair: None });
        }
    }
    Ok(SuperReport { holds: singular_count == 0, gate: None, checked, witness, singular_count })
}
