use std::collections::HashSet;

use num_integer::Integer;
use num_rational::Ratio;
use serde::Serialize;

use super::predicates::{run, Variant};
use super::refine::{Dynamics, Observer};
use crate::algebra::Element;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::networks::{Configuration, Network};

/// A pair of configurations together with a vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness<V> {
    pub x: Vec<Element>,
    pub y: Vec<Element>,
    pub vertex: usize,
    pub value: V,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TimeReport {
    pub time: usize,
    pub depths: Vec<usize>,
    pub worst: Witness<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrequencyReport {
    pub frequency: Ratio<u64>,
    pub minimizer: Witness<Ratio<u64>>,
}

/// `tau_v(x, y)`: the first `t >= 1` with `f^t(x)_v != f^t(y)_v`, or `None`
/// when the traces never differ.
pub fn tau_pair(f: &Network, x: &Configuration, y: &Configuration, v: usize) -> Result<Option<usize>> {
    if x == y {
        return Err(Error::BadParams("tau needs two distinct configurations".into()));
    }
    if v >= f.n() {
        return Err(Error::DimensionMismatch(format!("vertex {v} out of range")));
    }
    let (mut a, mut b) = (f.apply(x)?.digits, f.apply(y)?.digits);
    let mut seen = HashSet::new();
    let mut t = 1;
    while a[v] == b[v] {
        if !seen.insert((a.clone(), b.clone())) {
            return Ok(None);
        }
        a = f.apply(&Configuration::new(a))?.digits;
        b = f.apply(&Configuration::new(b))?.digits;
        t += 1;
    }
    Ok(Some(t))
}

/// `T(f)`, the largest `tau_v(x, y)`, with a pair attaining it.
pub fn expansion_time(f: &Network, caps: &Caps) -> Result<TimeReport> {
    let d = Dynamics::new(f, caps)?;
    if !d.is_bijective() {
        return Err(Error::NotExpansive);
    }
    let space = d.space();
    let mut depths = Vec::new();
    let mut worst: Option<Witness<usize>> = None;
    for v in 0..space.n() {
        let r = d.refine(&Observer::Positive { vertex: v }, false)?;
        let depth = r.depth.ok_or(Error::NotExpansive)?;
        depths.push(depth);
        if worst.as_ref().is_none_or(|w| depth > w.value) {
            let (x, y) = r.last_pair().expect("q^n >= 2 so round 0 is not discrete");
            worst = Some(Witness { x: space.digits(x), y: space.digits(y), vertex: v, value: depth });
        }
    }
    let worst = worst.expect("n >= 1");
    Ok(TimeReport { time: worst.value, depths, worst })
}

/// Expansive with `T(f) = n`.
pub fn is_strongly_expansive(f: &Network, caps: &Caps) -> Result<bool> {
    match expansion_time(f, caps) {
        Ok(r) => Ok(r.time == f.n()),
        Err(Error::NotExpansive) => Ok(false),
        Err(e) => Err(e),
    }
}

fn cycle_len(f: &Network, x: &Configuration) -> Result<usize> {
    let o = f.orbit(x)?;
    if o.tail != 0 {
        return Err(Error::NotBijective);
    }
    Ok(o.cycle)
}

/// `phi_v(x, y)`: the fraction of differing entries between the traces of
/// `x` and `y` at `v` over a common period.
pub fn phi_pair(f: &Network, x: &Configuration, y: &Configuration, v: usize) -> Result<Ratio<u64>> {
    let (lx, ly) = (cycle_len(f, x)?, cycle_len(f, y)?);
    let horizon = lx.lcm(&ly);
    let (tx, ty) = (f.trace(x, v, horizon)?, f.trace(y, v, horizon)?);
    let diff = tx.values.iter().zip(&ty.values).filter(|(a, b)| a != b).count();
    Ok(Ratio::new(diff as u64, horizon as u64))
}

/// `Phi(f)`, the least `phi_v(x, y)` over distinct pairs and vertices.
///
/// Shifting both configurations along their orbits leaves `phi` unchanged,
/// so `x` ranges over one representative per cycle.
pub fn expansion_frequency(f: &Network, caps: &Caps) -> Result<FrequencyReport> {
    let d = Dynamics::new(f, caps)?;
    if !d.is_bijective() {
        return Err(Error::NotBijective);
    }
    if !run(&d, Variant::Expansive, None, true)?.holds {
        return Err(Error::NotExpansive);
    }
    let space = d.space();
    let succ = d.successors();
    let size = succ.len();
    // cycle id and position of every configuration, and the cycles themselves
    let mut cycle_of = vec![usize::MAX; size];
    let mut pos = vec![0; size];
    let mut cycles: Vec<Vec<usize>> = Vec::new();
    for s in 0..size {
        if cycle_of[s] != usize::MAX {
            continue;
        }
        let mut c = Vec::new();
        let mut z = s;
        while cycle_of[z] == usize::MAX {
            cycle_of[z] = cycles.len();
            pos[z] = c.len();
            c.push(z);
            z = succ[z];
        }
        cycles.push(c);
    }
    let mut best: Option<Witness<Ratio<u64>>> = None;
    for v in 0..space.n() {
        // trace entry t >= 1 of the k-th element of cycle c is digit v of c[k + t]
        let traces: Vec<Vec<Element>> =
            cycles.iter().map(|c| c.iter().map(|&z| space.digit(z, v)).collect()).collect();
        for (cx, cycle) in cycles.iter().enumerate() {
            let x = cycle[0];
            let tx = &traces[cx];
            for y in (0..size).filter(|&y| y != x) {
                let ty = &traces[cycle_of[y]];
                let (lx, ly) = (tx.len(), ty.len());
                let horizon = lx.lcm(&ly);
                let py = pos[y];
                let diff = (1..=horizon).filter(|&t| tx[t % lx] != ty[(py + t) % ly]).count();
                let phi = Ratio::new(diff as u64, horizon as u64);
                if best.as_ref().is_none_or(|b| phi < b.value) {
                    best = Some(Witness { x: space.digits(x), y: space.digits(y), vertex: v, value: phi });
                }
            }
        }
    }
    let minimizer = best.ok_or(Error::NotExpansive)?;
    Ok(FrequencyReport { frequency: minimizer.value, minimizer })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Matrix, Ring};

    fn fib() -> Network {
        Network::linear(Matrix::from_rows(Ring::field(2).unwrap(), &[vec![0, 1], vec![1, 1]]).unwrap()).unwrap()
    }

    #[test]
    fn fibonacci_time_and_frequency() {
        let caps = Caps::default();
        let f = fib();
        let t = expansion_time(&f, &caps).unwrap();
        assert_eq!(t.time, 2);
        let (x, y) = (Configuration::new(t.worst.x.clone()), Configuration::new(t.worst.y.clone()));
        assert_eq!(tau_pair(&f, &x, &y, t.worst.vertex).unwrap(), Some(2));
        assert!(is_strongly_expansive(&f, &caps).unwrap());
        let fr = expansion_frequency(&f, &caps).unwrap();
        assert_eq!(fr.frequency, Ratio::new(2, 3));
        let w = &fr.minimizer;
        let again = phi_pair(&f, &Configuration::new(w.x.clone()), &Configuration::new(w.y.clone()), w.vertex).unwrap();
        assert_eq!(again, w.value);
    }

    #[test]
    fn identity_metrics() {
        let caps = Caps::default();
        let f = Network::identity(2, Ring::field(2).unwrap());
        assert!(matches!(expansion_time(&f, &caps), Err(Error::NotExpansive)));
        assert!(!is_strongly_expansive(&f, &caps).unwrap());
        let (x, y) = (Configuration::new(vec![0, 0]), Configuration::new(vec![0, 1]));
        assert_eq!(tau_pair(&f, &x, &y, 0).unwrap(), None);
        assert_eq!(phi_pair(&f, &x, &y, 1).unwrap(), Ratio::from_integer(1));
        assert!(tau_pair(&f, &x, &x, 0).is_err());
    }

    #[test]
    fn non_bijective_phi() {
        let f = Network::table(1, 2, vec![0, 0]).unwrap();
        let r = phi_pair(&f, &Configuration::new(vec![0]), &Configuration::new(vec![1]), 0);
        assert!(matches!(r, Err(Error::NotBijective)));
        assert!(matches!(expansion_frequency(&f, &Caps::default()), Err(Error::NotBijective)));
    }
}
