use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::Element;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graphs::Digraph;
use crate::networks::{Network, StateSpace};

/// A partition of the configuration space, as canonical class ids: class
/// ids are assigned in order of first occurrence, so equal partitions have
/// equal id vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    ids: Vec<u32>,
    count: usize,
}

impl Partition {
    pub fn trivial(size: usize) -> Self {
        Partition { ids: vec![0; size], count: usize::from(size > 0) }
    }

    /// Canonicalizes an arbitrary labelling.
    pub fn from_labels<K: std::hash::Hash + Eq>(labels: impl IntoIterator<Item = K>) -> Self {
        let mut seen = HashMap::new();
        let ids = labels
            .into_iter()
            .map(|k| {
                let next = seen.len() as u32;
                *seen.entry(k).or_insert(next)
            })
            .collect();
        Partition { ids, count: seen.len() }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.count
    }

    pub fn class_of(&self, x: usize) -> u32 {
        self.ids[x]
    }

    pub fn ids(&self) -> &[u32] {
        &self.ids
    }

    pub fn is_discrete(&self) -> bool {
        self.count == self.ids.len()
    }

    /// Whether every class of `self` lies inside a class of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut parent = vec![u32::MAX; self.count];
        self.ids.iter().zip(&other.ids).all(|(&a, &b)| {
            let p = &mut parent[a as usize];
            if *p == u32::MAX {
                *p = b;
            }
            *p == b
        })
    }

    /// Two members of the same class, if any class has two members.
    pub fn merged_pair(&self) -> Option<(usize, usize)> {
        let mut first = vec![usize::MAX; self.count];
        for (x, &c) in self.ids.iter().enumerate() {
            let f = &mut first[c as usize];
            if *f != usize::MAX {
                return Some((*f, x));
            }
            *f = x;
        }
        None
    }

    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.count];
        for (x, &c) in self.ids.iter().enumerate() {
            out[c as usize].push(x);
        }
        out
    }
}

/// What is read off a configuration at each step of a trace.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum Observer {
    /// `f(x)_v`: traces starting at `t = 1`.
    Positive { vertex: usize },
    /// `x_v`: traces starting at `t = 0`.
    Weak { vertex: usize },
    /// `x_W` for a vertex set `W` (usually `N_in(v)`), from `t = 0`.
    Quasi { vertex: usize, cells: Vec<usize> },
}

impl Observer {
    pub fn quasi(graph: &Digraph, vertex: usize) -> Self {
        Observer::Quasi { vertex, cells: graph.in_neighbors(vertex) }
    }

    pub fn vertex(&self) -> usize {
        match self {
            Observer::Positive { vertex } | Observer::Weak { vertex } | Observer::Quasi { vertex, .. } => *vertex,
        }
    }

    fn output(&self, dynamics: &Dynamics, x: usize) -> u64 {
        let space = dynamics.space;
        match self {
            Observer::Positive { vertex } => space.digit(dynamics.succ[x], *vertex) as u64,
            Observer::Weak { vertex } => space.digit(x, *vertex) as u64,
            Observer::Quasi { cells, .. } => cells
                .iter()
                .fold(0, |acc, &u| acc * space.q() as u64 + space.digit(x, u) as u64),
        }
    }
}

/// A materialized successor table.
#[derive(Clone, Debug)]
pub struct Dynamics {
    space: StateSpace,
    succ: Vec<usize>,
}

/// Result of refining the kernel of the trace map until it stabilizes.
#[derive(Clone, Debug)]
pub struct RefinementReport {
    pub observer: Observer,
    /// Number of classes after each round; round 0 is the seed partition
    /// (trivial for positive traces, the output kernel otherwise).
    pub class_counts: Vec<usize>,
    pub final_partition: Partition,
    /// The partition one round before the final one.
    pub penultimate: Option<Partition>,
    pub separated: bool,
    /// Least round whose partition is discrete.
    pub depth: Option<usize>,
    pub history: Option<Vec<Partition>>,
}

impl RefinementReport {
    pub fn vertex(&self) -> usize {
        self.observer.vertex()
    }

    pub fn rounds(&self) -> usize {
        self.class_counts.len() - 1
    }

    /// Two configurations that are never separated, for a failed report.
    pub fn merged_pair(&self) -> Option<(usize, usize)> {
        if self.separated {
            None
        } else {
            self.final_partition.merged_pair()
        }
    }

    /// A pair separated exactly at round `depth`.
    pub fn last_pair(&self) -> Option<(usize, usize)> {
        self.penultimate.as_ref().filter(|_| self.separated).and_then(Partition::merged_pair)
    }
}

impl Dynamics {
    pub fn new(f: &Network, caps: &Caps) -> Result<Self> {
        Ok(Dynamics { space: f.space(), succ: f.successor_table(caps)? })
    }

    pub fn from_table(space: StateSpace, succ: Vec<usize>) -> Result<Self> {
        if succ.len() as u128 != space.size() || succ.iter().any(|&s| s >= succ.len()) {
            return Err(Error::DimensionMismatch("successor table does not match the space".into()));
        }
        Ok(Dynamics { space, succ })
    }

    pub fn space(&self) -> StateSpace {
        self.space
    }

    pub fn successors(&self) -> &[usize] {
        &self.succ
    }

    pub fn len(&self) -> usize {
        self.succ.len()
    }

    pub fn is_empty(&self) -> bool {
        self.succ.is_empty()
    }

    pub fn is_bijective(&self) -> bool {
        let mut hit = vec![false; self.succ.len()];
        self.succ.iter().all(|&s| !std::mem::replace(&mut hit[s], true))
    }

    /// Moore refinement: `x ~_{t+1} y` iff `out(x) = out(y)` and
    /// `f(x) ~_t f(y)`. Stops at the first round that adds no class.
    pub fn refine(&self, observer: &Observer, keep_history: bool) -> Result<RefinementReport> {
        let n = self.space.n();
        let bad = match observer {
            Observer::Positive { vertex } | Observer::Weak { vertex } => *vertex >= n,
            Observer::Quasi { vertex, cells } => *vertex >= n || cells.iter().any(|&u| u >= n),
        };
        if bad {
            return Err(Error::DimensionMismatch(format!("observer {observer:?} out of range for n = {n}")));
        }
        let size = self.succ.len();
        let outputs: Vec<u64> = (0..size).map(|x| observer.output(self, x)).collect();
        let mut current = match observer {
            Observer::Positive { .. } => Partition::trivial(size),
            _ => Partition::from_labels(outputs.iter().copied()),
        };
        let mut history = keep_history.then(Vec::new);
        let mut class_counts = vec![current.class_count()];
        let mut penultimate = None;
        let mut depth = current.is_discrete().then_some(0);
        while depth.is_none() {
            let next = Partition::from_labels(
                (0..size).map(|x| (outputs[x], current.ids[self.succ[x]])),
            );
            if next.class_count() == current.class_count() {
                break;
            }
            class_counts.push(next.class_count());
            if next.is_discrete() {
                depth = Some(class_counts.len() - 1);
            }
            let prev = std::mem::replace(&mut current, next);
            if let Some(h) = history.as_mut() {
                h.push(prev.clone());
            }
            penultimate = Some(prev);
        }
        if let Some(h) = history.as_mut() {
            h.push(current.clone());
        }
        Ok(RefinementReport {
            observer: observer.clone(),
            class_counts,
            separated: current.is_discrete(),
            final_partition: current,
            penultimate,
            depth,
            history,
        })
    }

    /// First `t >= 1` with `f^t(x)_v != f^t(y)_v`, or `None` if the pair
    /// never separates. Detects a repeated joint state to terminate.
    pub fn tau(&self, x: usize, y: usize, v: usize) -> Option<usize> {
        let digit = |z: usize| self.space.digit(z, v);
        let (mut a, mut b) = (x, y);
        let mut seen = std::collections::HashSet::new();
        let mut t = 0;
        loop {
            if !seen.insert((a, b)) {
                return None;
            }
            a = self.succ[a];
            b = self.succ[b];
            t += 1;
            if digit(a) != digit(b) {
                return Some(t);
            }
        }
    }

    pub fn cycle_length(&self, x: usize) -> usize {
        crate::networks::brent(x, |&z| self.succ[z]).cycle
    }

    pub fn trace(&self, x: usize, v: usize, horizon: usize) -> Vec<Element> {
        let mut z = x;
        (0..horizon)
            .map(|_| {
                z = self.succ[z];
                self.space.digit(z, v)
            })
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    #[test]
    fn canonical_ids() {
        let p = Partition::from_labels(["b", "a", "b", "c"]);
        assert_eq!(p.ids(), &[0, 1, 0, 2]);
        assert_eq!(p, Partition::from_labels([7, 3, 7, 1]));
        assert!(Partition::from_labels([0, 1, 2, 3]).refines(&p));
        assert!(!Partition::trivial(4).refines(&p));
        assert_eq!(p.merged_pair(), Some((0, 2)));
    }

    #[test]
    fn identity_never_separates() {
        let f = Network::identity(2, Ring::field(2).unwrap());
        let d = Dynamics::new(&f, &Caps::default()).unwrap();
        let r = d.refine(&Observer::Positive { vertex: 0 }, true).unwrap();
        assert!(!r.separated);
        assert_eq!(r.depth, None);
        assert_eq!(r.class_counts, vec![1, 2]);
        let (x, y) = r.merged_pair().unwrap();
        assert_eq!(d.tau(x, y, 0), None);
    }

    #[test]
    fn history_is_monotone() {
        let m = crate::Matrix::from_rows(Ring::field(2).unwrap(), &[vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 0]]).unwrap();
        let d = Dynamics::new(&Network::linear(m).unwrap(), &Caps::default()).unwrap();
        let r = d.refine(&Observer::Positive { vertex: 2 }, true).unwrap();
        let h = r.history.unwrap();
        assert!(h.windows(2).all(|w| w[1].refines(&w[0])));
        assert_eq!(h.len(), r.class_counts.len());
    }

    #[test]
    fn out_of_range_observer() {
        let f = Network::identity(2, Ring::field(2).unwrap());
        let d = Dynamics::new(&f, &Caps::default()).unwrap();
        assert!(d.refine(&Observer::Weak { vertex: 2 }, false).is_err());
    }
}
