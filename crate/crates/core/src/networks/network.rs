use std::collections::BTreeSet;

use serde::Serialize;

use super::config::{Configuration, StateSpace};
use crate::algebra::{Element, Matrix, Ring};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graphs::Digraph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Body {
    /// Successor index of every configuration index.
    Table(Vec<usize>),
    /// `f(x) = x M`.
    Linear(Matrix),
}

/// An automata network `f : (q)^n -> (q)^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Network {
    n: usize,
    q: u32,
    body: Body,
}

/// First `T` trace entries `f_v(x), ..., f_v^T(x)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceView {
    pub vertex: usize,
    pub values: Vec<Element>,
}

impl TraceView {
    pub fn horizon(&self) -> usize {
        self.values.len()
    }
}

/// Tail length and cycle length of the orbit of a configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Orbit {
    pub tail: usize,
    pub cycle: usize,
}

/// A selection of distinct (vertex, time) cells, times in `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Observation {
    pairs: Vec<(usize, usize)>,
}

impl Observation {
    pub fn new(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        if pairs.len() != n {
            return Err(Error::DimensionMismatch(format!("{} pairs for n = {n}", pairs.len())));
        }
        if let Some(&(v, t)) = pairs.iter().find(|&&(v, t)| v >= n || t == 0 || t > n) {
            return Err(Error::DimensionMismatch(format!("cell ({v},{t}) out of range")));
        }
        if pairs.iter().collect::<BTreeSet<_>>().len() != n {
            return Err(Error::BadParams("observation cells must be distinct".into()));
        }
        Ok(Observation { pairs })
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }
}

impl Network {
    pub fn table(n: usize, q: u32, succ: Vec<usize>) -> Result<Self> {
        let size = StateSpace::new(n, q).size();
        if succ.len() as u128 != size {
            return Err(Error::DimensionMismatch(format!("table of {} entries for q^n = {size}", succ.len())));
        }
        if let Some(bad) = succ.iter().find(|&&s| s as u128 >= size) {
            return Err(Error::DimensionMismatch(format!("table entry {bad} out of range")));
        }
        Ok(Network { n, q, body: Body::Table(succ) })
    }

    /// Tabulates the global map given on digit vectors.
    pub fn from_fn(n: usize, q: u32, caps: &Caps, f: impl Fn(&[Element]) -> Vec<Element>) -> Result<Self> {
        let space = StateSpace::new(n, q);
        let size = space.checked_size(caps)?;
        let succ = (0..size)
            .map(|i| {
                let y = f(&space.digits(i));
                if y.len() != n || y.iter().any(|&d| d >= q) {
                    return Err(Error::DimensionMismatch(format!("image of {i} is not in (q)^n")));
                }
                Ok(space.index(&y))
            })
            .collect::<Result<_>>()?;
        Ok(Network { n, q, body: Body::Table(succ) })
    }

    pub fn linear(m: Matrix) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
        }
        Ok(Network { n: m.rows(), q: m.ring().q(), body: Body::Linear(m) })
    }

    /// `f(x) = x A_D` over `GF(2)`.
    pub fn xor(graph: &Digraph) -> Self {
        let ring = Ring::field(2).expect("GF(2)");
        Network::linear(graph.adjacency_matrix(ring)).expect("square")
    }

    pub fn identity(n: usize, ring: Ring) -> Self {
        Network::linear(Matrix::identity(ring, n)).expect("square")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn space(&self) -> StateSpace {
        StateSpace::new(self.n, self.q)
    }

    pub fn body(&self) -> &Body {
        &self.body
    }

    pub fn matrix(&self) -> Option<&Matrix> {
        match &self.body {
            Body::Linear(m) => Some(m),
            Body::Table(_) => None,
        }
    }

    pub fn is_linear(&self) -> bool {
        matches!(self.body, Body::Linear(_))
    }

    pub(crate) fn step(&self, x: &[Element]) -> Vec<Element> {
        match &self.body {
            Body::Linear(m) => m.left_mul(x),
            Body::Table(t) => {
                let s = self.space();
                s.digits(t[s.index(x)])
            }
        }
    }

    pub fn apply(&self, x: &Configuration) -> Result<Configuration> {
        self.space().check(x)?;
        Ok(Configuration::new(self.step(&x.digits)))
    }

    pub fn iterate(&self, x: &Configuration, t: usize) -> Result<Configuration> {
        self.space().check(x)?;
        let mut y = x.digits.clone();
        for _ in 0..t {
            y = self.step(&y);
        }
        Ok(Configuration::new(y))
    }

    /// Tail and cycle length of the orbit of `x` (Brent's cycle detection).
    pub fn orbit(&self, x: &Configuration) -> Result<Orbit> {
        self.space().check(x)?;
        Ok(brent(x.digits.clone(), |y| self.step(y)))
    }

    pub fn trace(&self, x: &Configuration, v: usize, horizon: usize) -> Result<TraceView> {
        self.space().check(x)?;
        if v >= self.n {
            return Err(Error::DimensionMismatch(format!("vertex {v} out of range")));
        }
        let mut y = x.digits.clone();
        let values = (0..horizon)
            .map(|_| {
                y = self.step(&y);
                y[v]
            })
            .collect();
        Ok(TraceView { vertex: v, values })
    }

    /// `tau_omega(x)`: entry `i` is `f^{t_i}(x)` at vertex `v_i`.
    pub fn observe(&self, x: &Configuration, omega: &Observation) -> Result<Vec<Element>> {
        self.space().check(x)?;
        if omega.pairs.len() != self.n {
            return Err(Error::DimensionMismatch("observation size differs from n".into()));
        }
        let mut states = vec![x.digits.clone()];
        for t in 1..=self.n {
            let next = self.step(&states[t - 1]);
            states.push(next);
        }
        Ok(omega.pairs.iter().map(|&(v, t)| states[t][v]).collect())
    }

    /// Successor index for every configuration index.
    pub fn successor_table(&self, caps: &Caps) -> Result<Vec<usize>> {
        let space = self.space();
        let size = space.checked_size(caps)?;
        Ok(match &self.body {
            Body::Table(t) => t.clone(),
            Body::Linear(m) => (0..size).map(|i| space.index(&m.left_mul(&space.digits(i)))).collect(),
        })
    }

    pub fn to_table(&self, caps: &Caps) -> Result<Network> {
        Network::table(self.n, self.q, self.successor_table(caps)?)
    }

    pub fn is_bijective(&self, caps: &Caps) -> Result<bool> {
        if let Body::Linear(m) = &self.body {
            if m.ring().is_field() {
                return Ok(m.det()? != 0);
            }
        }
        let succ = self.successor_table(caps)?;
        let mut hit = vec![false; succ.len()];
        for &s in &succ {
            if std::mem::replace(&mut hit[s], true) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Arc `u -> v` iff `f_v` depends essentially on `x_u`.
    ///
    /// Linear networks read the nonzero pattern of `M`; tables are scanned
    /// exhaustively over pairs of configurations differing by one step in a
    /// single coordinate, which suffices to witness any essential dependence.
    pub fn interaction_graph(&self, caps: &Caps) -> Result<Digraph> {
        let n = self.n;
        match &self.body {
            Body::Linear(m) => {
                let arcs = (0..n).flat_map(|u| (0..n).map(move |v| (u, v)));
                Digraph::new(n, arcs.filter(|&(u, v)| m.get(u, v) != 0))
            }
            Body::Table(t) => {
                let space = self.space();
                space.checked_size(caps)?;
                let mut arcs = BTreeSet::new();
                for a in 0..t.len() {
                    for u in 0..n {
                        if space.digit(a, u) + 1 == self.q {
                            continue;
                        }
                        let b = a + space.weight(u);
                        let (fa, fb) = (t[a], t[b]);
                        if fa == fb {
                            continue;
                        }
                        for v in 0..n {
                            if space.digit(fa, v) != space.digit(fb, v) {
                                arcs.insert((u, v));
                            }
                        }
                    }
                    if arcs.len() == n * n {
                        break;
                    }
                }
                Digraph::new(n, arcs)
            }
        }
    }
}

pub(crate) fn brent<T: Clone + PartialEq>(x0: T, f: impl Fn(&T) -> T) -> Orbit {
    let mut power = 1;
    let mut lam = 1;
    let mut tortoise = x0.clone();
    let mut hare = f(&x0);
    while tortoise != hare {
        if power == lam {
            tortoise = hare.clone();
            power *= 2;
            lam = 0;
        }
        hare = f(&hare);
        lam += 1;
    }
    let mut tortoise = x0.clone();
    let mut hare = x0;
    for _ in 0..lam {
        hare = f(&hare);
    }
    let mut mu = 0;
    while tortoise != hare {
        tortoise = f(&tortoise);
        hare = f(&hare);
        mu += 1;
    }
    Orbit { tail: mu, cycle: lam }
}

/// Cartesian product `f x g` over `(q r)`, pairing digits as `a = a1 * r + a2`.
///
/// The result is always a table network.
pub fn cartesian_product(f: &Network, g: &Network, caps: &Caps) -> Result<Network> {
    if f.n != g.n {
        return Err(Error::DimensionMismatch(format!("n = {} vs n = {}", f.n, g.n)));
    }
    let n = f.n;
    let (q, r) = (f.q, g.q);
    let space = StateSpace::new(n, q * r);
    let size = space.checked_size(caps)?;
    let (sf, sg) = (f.successor_table(caps)?, g.successor_table(caps)?);
    let (space_f, space_g) = (f.space(), g.space());
    let succ = (0..size)
        .map(|i| {
            let digits = space.digits(i);
            let x1: Vec<Element> = digits.iter().map(|&a| a / r).collect();
            let x2: Vec<Element> = digits.iter().map(|&a| a % r).collect();
            let y1 = space_f.digits(sf[space_f.index(&x1)]);
            let y2 = space_g.digits(sg[space_g.index(&x2)]);
            let y: Vec<Element> = y1.iter().zip(&y2).map(|(&a, &b)| a * r + b).collect();
            space.index(&y)
        })
        .collect();
    Network::table(n, q * r, succ)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(q: u32) -> Ring {
        Ring::field(q).unwrap()
    }

    #[test]
    fn identity_iterates_to_itself() {
        let f = Network::identity(3, gf(3));
        let x = Configuration::new(vec![2, 0, 1]);
        assert_eq!(f.iterate(&x, 17).unwrap(), x);
        assert_eq!(f.trace(&x, 2, 4).unwrap().values, vec![1; 4]);
        assert_eq!(f.orbit(&x).unwrap(), Orbit { tail: 0, cycle: 1 });
    }

    #[test]
    fn orbit_with_tail() {
        // 0 -> 1 -> 2 -> 3 -> 2 on n = 2, q = 2
        let f = Network::table(2, 2, vec![1, 2, 3, 2]).unwrap();
        let o = f.orbit(&Configuration::new(vec![0, 0])).unwrap();
        assert_eq!(o, Orbit { tail: 2, cycle: 2 });
        assert!(!f.is_bijective(&Caps::default()).unwrap());
    }

    #[test]
    fn observation_validation() {
        assert!(Observation::new(2, vec![(0, 1), (0, 1)]).is_err());
        assert!(Observation::new(2, vec![(0, 3), (1, 1)]).is_err());
        assert!(Observation::new(2, vec![(0, 1)]).is_err());
        let f = Network::identity(2, gf(2));
        let omega = Observation::new(2, vec![(0, 1), (1, 1)]).unwrap();
        let x = Configuration::new(vec![1, 0]);
        assert_eq!(f.observe(&x, &omega).unwrap(), f.apply(&x).unwrap().digits);
    }

    #[test]
    fn dimension_errors() {
        let f = Network::identity(2, gf(2));
        assert!(matches!(f.apply(&Configuration::zero(3)), Err(Error::DimensionMismatch(_))));
        assert!(matches!(f.apply(&Configuration::new(vec![0, 2])), Err(Error::DimensionMismatch(_))));
        assert!(f.trace(&Configuration::zero(2), 2, 1).is_err());
    }

    #[test]
    fn interaction_graphs() {
        let caps = Caps::default();
        let constant = Network::from_fn(3, 2, &caps, |_| vec![1, 0, 1]).unwrap();
        assert_eq!(constant.interaction_graph(&caps).unwrap().arc_count(), 0);
        let g = crate::graphs::families::g_n(2).unwrap();
        let xor = Network::xor(&g);
        assert_eq!(xor.interaction_graph(&caps).unwrap(), g);
        assert_eq!(xor.to_table(&caps).unwrap().interaction_graph(&caps).unwrap(), g);
    }

    #[test]
    fn linear_and_table_agree() {
        let caps = Caps::default();
        let m = Matrix::from_rows(gf(3), &[vec![1, 2], vec![0, 1]]).unwrap();
        let f = Network::linear(m).unwrap();
        let t = f.to_table(&caps).unwrap();
        for i in 0..9 {
            let x = f.space().configuration(i);
            assert_eq!(f.apply(&x).unwrap(), t.apply(&x).unwrap());
            assert_eq!(f.orbit(&x).unwrap(), t.orbit(&x).unwrap());
        }
    }

    #[test]
    fn product_of_identities() {
        let caps = Caps::default();
        let id2 = Network::identity(2, gf(2));
        let id3 = Network::identity(2, gf(3));
        let prod = cartesian_product(&id2, &id3, &caps).unwrap();
        assert_eq!(prod, Network::table(2, 6, (0..36).collect()).unwrap());
        assert!(cartesian_product(&id2, &Network::identity(3, gf(3)), &caps).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps { max_states: 100, ..Caps::default() };
        let f = Network::identity(7, gf(2));
        assert!(matches!(f.successor_table(&caps), Err(Error::CapExceeded { needed: 128, cap: 100 })));
    }
}
