use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write;

use serde::Serialize;

use super::matching::maximum_matching;
use crate::algebra::{Matrix, Ring};
use crate::error::{Error, Result};

/// Directed graph on vertices `0..n`. Loops are allowed, multi-arcs are not.
///
/// Each vertex carries a display label (the family constructors use the
/// labels of their definitions, e.g. hub `0`). Equality ignores labels.
#[derive(Clone, Debug, Serialize)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<(usize, usize)>,
    labels: Vec<i64>,
}

impl PartialEq for Digraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.arcs == other.arcs
    }
}

impl Eq for Digraph {}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: BTreeSet<_> = arcs.into_iter().collect();
        if let Some(&(u, v)) = arcs.iter().find(|&&(u, v)| u >= n || v >= n) {
            return Err(Error::BadParams(format!("arc ({u},{v}) out of range for n = {n}")));
        }
        let labels = (1..=n as i64).collect();
        Ok(Digraph { n, arcs, labels })
    }

    pub fn with_labels(mut self, labels: Vec<i64>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::BadParams("one label per vertex required".into()));
        }
        self.labels = labels;
        Ok(self)
    }

    pub fn empty(n: usize) -> Self {
        Digraph::new(n, []).expect("no arcs")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.arcs.iter().copied()
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// True when all `n^2` arcs (loops included) are present.
    pub fn is_complete(&self) -> bool {
        self.arcs.len() == self.n * self.n
    }

    pub fn out_neighbors(&self, u: usize) -> Vec<usize> {
        self.arcs.range((u, 0)..(u + 1, 0)).map(|&(_, v)| v).collect()
    }

    pub fn in_neighbors(&self, v: usize) -> Vec<usize> {
        self.arcs.iter().filter(|&&(_, w)| w == v).map(|&(u, _)| u).collect()
    }

    pub fn out_neighborhood(&self, set: &[usize]) -> BTreeSet<usize> {
        set.iter().flat_map(|&u| self.out_neighbors(u)).collect()
    }

    pub fn in_neighborhood(&self, set: &[usize]) -> BTreeSet<usize> {
        set.iter().flat_map(|&v| self.in_neighbors(v)).collect()
    }

    /// 0/1 adjacency matrix over `ring`.
    pub fn adjacency_matrix(&self, ring: Ring) -> Matrix {
        let mut m = Matrix::zeros(ring, self.n, self.n);
        for &(u, v) in &self.arcs {
            m.set(u, v, 1);
        }
        m
    }

    fn reaches_all(&self, start: usize, forward: bool) -> bool {
        let mut adj = vec![Vec::new(); self.n];
        for &(u, v) in &self.arcs {
            if forward {
                adj[u].push(v);
            } else {
                adj[v].push(u);
            }
        }
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Every vertex reaches every other vertex.
    pub fn is_strong(&self) -> bool {
        self.n == 0 || (self.reaches_all(0, true) && self.reaches_all(0, false))
    }

    fn matching(&self) -> Vec<Option<usize>> {
        let adj: Vec<Vec<usize>> = (0..self.n).map(|u| self.out_neighbors(u)).collect();
        maximum_matching(&adj, self.n)
    }

    /// Maximum number of pairwise independent arcs (distinct tails and heads).
    pub fn term_rank(&self) -> usize {
        self.matching().iter().flatten().count()
    }

    pub fn is_coverable(&self) -> bool {
        self.term_rank() == self.n
    }

    /// Vertex-disjoint cycles covering every vertex, when they exist. Each
    /// cycle starts at its least vertex; cycles are sorted by that vertex.
    pub fn cycle_decomposition(&self) -> Option<Vec<Vec<usize>>> {
        let succ: Vec<usize> = self.matching().into_iter().collect::<Option<_>>()?;
        Some(permutation_cycles(&succ))
    }

    /// Text form: `n` on the first line, then one 1-based `u v` arc per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("{}\n", self.n);
        for &(u, v) in &self.arcs {
            writeln!(s, "{} {}", u + 1, v + 1).unwrap();
        }
        s
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let (ln, first) = lines.next().ok_or_else(|| Error::parse(1, "missing vertex count"))?;
        let n: usize = first.parse().map_err(|_| Error::parse(ln, format!("bad vertex count `{first}`")))?;
        let mut arcs = Vec::new();
        for (ln, line) in lines {
            let ends: Vec<usize> = line
                .split_whitespace()
                .map(|t| t.parse().map_err(|_| Error::parse(ln, format!("bad vertex `{t}`"))))
                .collect::<Result<_>>()?;
            let [u, v] = ends[..] else {
                return Err(Error::parse(ln, "expected `u v`"));
            };
            if u == 0 || v == 0 || u > n || v > n {
                return Err(Error::parse(ln, format!("vertex out of range 1..={n}")));
            }
            arcs.push((u - 1, v - 1));
        }
        Digraph::new(n, arcs)
    }
}

/// Cycles of a permutation given as a successor list.
pub(crate) fn permutation_cycles(succ: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; succ.len()];
    let mut cycles = Vec::new();
    for start in 0..succ.len() {
        if seen[start] {
            continue;
        }
        let mut cycle = Vec::new();
        let mut v = start;
        while !seen[v] {
            seen[v] = true;
            cycle.push(v);
            v = succ[v];
        }
        cycles.push(cycle);
    }
    cycles
}
