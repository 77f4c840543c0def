//! Named graph families.

use serde::{Deserialize, Serialize};

use super::Digraph;
use crate::error::{Error, Result};

/// Hub-and-leaves graph on `{0, ..., n}`: arcs `0 -> i`, `i -> 0` and a loop
/// on every vertex.
pub fn g_n(n: usize) -> Result<Digraph> {
    if n < 1 {
        return Err(Error::BadParams("g_n needs n >= 1".into()));
    }
    let arcs = (0..=n).flat_map(|i| [(0, i), (i, 0), (i, i)]);
    Digraph::new(n + 1, arcs)?.with_labels((0..=n as i64).collect())
}

/// Directed cycle `0 -> 1 -> ... -> n-1 -> 0` plus loops on `loops`
/// (0-based vertex indices).
pub fn cycle_with_loops(n: usize, loops: &[usize]) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::BadParams("cycle needs n >= 1".into()));
    }
    if let Some(&s) = loops.iter().find(|&&s| s >= n) {
        return Err(Error::BadParams(format!("loop vertex {s} out of range")));
    }
    let arcs = (0..n).map(|i| (i, (i + 1) % n)).chain(loops.iter().map(|&s| (s, s)));
    Digraph::new(n, arcs)
}

pub fn cycle(n: usize) -> Result<Digraph> {
    cycle_with_loops(n, &[])
}

/// Directed path `0 -> 1 -> ... -> n-1`.
pub fn path(n: usize) -> Result<Digraph> {
    Digraph::new(n, (1..n).map(|i| (i - 1, i)))
}

/// All `n^2` arcs, loops included.
pub fn complete(n: usize) -> Result<Digraph> {
    Digraph::new(n, (0..n).flat_map(|u| (0..n).map(move |v| (u, v))))
}

/// `Z/nZ` with an arc `i -> j` whenever the cyclic distance is at most `r`.
pub fn circulant(n: usize, r: usize) -> Result<Digraph> {
    if n == 0 {
        return Err(Error::BadParams("circulant needs n >= 1".into()));
    }
    let arcs = (0..n).flat_map(|i| {
        (0..=2 * r).map(move |d| (i, (i + n * (r + 1) + d - r) % n))
    });
    Digraph::new(n, arcs)?.with_labels((0..n as i64).collect())
}

/// The four-vertex graph with hub `0` linked both ways to `1, 2, 3` and
/// loops on `1` and `2`.
pub fn hub_graph() -> Digraph {
    let arcs = [(0, 1), (1, 0), (0, 2), (2, 0), (0, 3), (3, 0), (1, 1), (2, 2)];
    Digraph::new(4, arcs)
        .and_then(|g| g.with_labels(vec![0, 1, 2, 3]))
        .expect("fixed arc set")
}

/// Disjoint cycles `C_1..C_k` chained by link arcs `u_i -> v_{i+1}`
/// (indices cyclic). Vertex positions are indices along each cycle; cycle
/// `i` occupies a consecutive block of vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CycleOfCycles {
    pub lengths: Vec<usize>,
    /// `v_i`: position on cycle `i` receiving the link from cycle `i - 1`.
    pub in_links: Vec<usize>,
    /// `u_i`: position on cycle `i` sending the link to cycle `i + 1`.
    pub out_links: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct CycleOfCyclesGraph {
    pub graph: Digraph,
    /// Link arcs that coincided with an existing arc and were merged.
    pub duplicate_arcs: usize,
    pub proper: bool,
}

impl CycleOfCycles {
    pub fn new(lengths: Vec<usize>, in_links: Vec<usize>, out_links: Vec<usize>) -> Self {
        CycleOfCycles { lengths, in_links, out_links }
    }

    fn validate(&self) -> Result<()> {
        let k = self.lengths.len();
        if k == 0 || self.in_links.len() != k || self.out_links.len() != k {
            return Err(Error::NotCycleOfCycles("one length, in-link and out-link per cycle".into()));
        }
        for i in 0..k {
            if self.lengths[i] == 0 {
                return Err(Error::NotCycleOfCycles(format!("cycle {i} is empty")));
            }
            if self.in_links[i] >= self.lengths[i] || self.out_links[i] >= self.lengths[i] {
                return Err(Error::NotCycleOfCycles(format!("link vertex off cycle {i}")));
            }
        }
        Ok(())
    }

    fn offsets(&self) -> Vec<usize> {
        self.lengths
            .iter()
            .scan(0, |acc, &l| {
                let start = *acc;
                *acc += l;
                Some(start)
            })
            .collect()
    }

    pub fn build(&self) -> Result<CycleOfCyclesGraph> {
        self.validate()?;
        let k = self.lengths.len();
        let offsets = self.offsets();
        let n: usize = self.lengths.iter().sum();
        let mut arcs = std::collections::BTreeSet::new();
        for (i, &l) in self.lengths.iter().enumerate() {
            for j in 0..l {
                arcs.insert((offsets[i] + j, offsets[i] + (j + 1) % l));
            }
        }
        let mut duplicate_arcs = 0;
        if k >= 2 {
            for i in 0..k {
                let next = (i + 1) % k;
                let arc = (offsets[i] + self.out_links[i], offsets[next] + self.in_links[next]);
                if !arcs.insert(arc) {
                    duplicate_arcs += 1;
                }
            }
        }
        let graph = Digraph::new(n, arcs)?;
        let proper = k == 1
            || (0..k).any(|i| !graph.has_arc(offsets[i] + self.out_links[i], offsets[i] + self.in_links[i]));
        Ok(CycleOfCyclesGraph { graph, duplicate_arcs, proper })
    }
}
