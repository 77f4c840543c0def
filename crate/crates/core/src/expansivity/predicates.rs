use serde::Serialize;

use super::refine::{Dynamics, Observer, RefinementReport};
use crate::algebra::Element;
use crate::caps::Caps;
use crate::error::Result;
use crate::graphs::Digraph;
use crate::networks::Network;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// Differences seen at some `t >= 1` on the vertex.
    Expansive,
    /// Differences seen at some `t >= 0` on the vertex.
    Weak,
    /// Differences seen at some `t >= 0` on the in-neighborhood.
    Quasi,
}

impl Variant {
    pub fn as_str(self) -> &'static str {
        match self {
            Variant::Expansive => "expansive",
            Variant::Weak => "weakly expansive",
            Variant::Quasi => "quasi-expansive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexVerdict {
    pub vertex: usize,
    pub depth: Option<usize>,
    pub classes: usize,
    /// Two configurations the vertex never tells apart.
    pub merged: Option<(Vec<Element>, Vec<Element>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExpansivityCertificate {
    pub variant: Variant,
    pub holds: bool,
    pub vertices: Vec<VertexVerdict>,
}

impl ExpansivityCertificate {
    pub fn first_failure(&self) -> Option<&VertexVerdict> {
        self.vertices.iter().find(|v| v.depth.is_none())
    }
}

fn verdict(d: &Dynamics, r: &RefinementReport) -> VertexVerdict {
    let space = d.space();
    VertexVerdict {
        vertex: r.vertex(),
        depth: r.depth,
        classes: r.final_partition.class_count(),
        merged: r.merged_pair().map(|(x, y)| (space.digits(x), space.digits(y))),
    }
}

fn observers(variant: Variant, graph: Option<&Digraph>, n: usize) -> Vec<Observer> {
    (0..n)
        .map(|v| match variant {
            Variant::Expansive => Observer::Positive { vertex: v },
            Variant::Weak => Observer::Weak { vertex: v },
            Variant::Quasi => Observer::quasi(graph.expect("graph for quasi"), v),
        })
        .collect()
}

pub(crate) fn run(
    d: &Dynamics,
    variant: Variant,
    graph: Option<&Digraph>,
    stop_early: bool,
) -> Result<ExpansivityCertificate> {
    let mut vertices = Vec::new();
    let mut holds = true;
    for obs in observers(variant, graph, d.space().n()) {
        let r = d.refine(&obs, false)?;
        holds &= r.separated;
        vertices.push(verdict(d, &r));
        if !holds && stop_early {
            break;
        }
    }
    Ok(ExpansivityCertificate { variant, holds, vertices })
}

/// Per-vertex verdicts for the chosen variant. Quasi-expansivity uses the
/// interaction graph of `f` unless `graph` is given.
pub fn certify(f: &Network, variant: Variant, graph: Option<&Digraph>, caps: &Caps) -> Result<ExpansivityCertificate> {
    let d = Dynamics::new(f, caps)?;
    let own;
    let graph = match (variant, graph) {
        (Variant::Quasi, None) => {
            own = f.interaction_graph(caps)?;
            Some(&own)
        }
        (_, g) => g,
    };
    run(&d, variant, graph, false)
}

pub fn is_expansive(f: &Network, caps: &Caps) -> Result<bool> {
    let d = Dynamics::new(f, caps)?;
    if !d.is_bijective() {
        return Ok(false);
    }
    Ok(run(&d, Variant::Expansive, None, true)?.holds)
}

pub fn is_weakly_expansive(f: &Network, caps: &Caps) -> Result<bool> {
    Ok(run(&Dynamics::new(f, caps)?, Variant::Weak, None, true)?.holds)
}

pub fn is_quasi_expansive(f: &Network, caps: &Caps) -> Result<bool> {
    is_quasi_expansive_on(f, &f.interaction_graph(caps)?, caps)
}

/// Quasi-expansivity with the neighborhoods of an explicit graph.
pub fn is_quasi_expansive_on(f: &Network, graph: &Digraph, caps: &Caps) -> Result<bool> {
    Ok(run(&Dynamics::new(f, caps)?, Variant::Quasi, Some(graph), true)?.holds)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Matrix, Ring};
    use crate::graphs::families::cycle_with_loops;

    fn gf(q: u32) -> Ring {
        Ring::field(q).unwrap()
    }

    #[test]
    fn identity_is_weak_but_not_expansive() {
        let caps = Caps::default();
        let f = Network::identity(2, gf(2));
        assert!(!is_expansive(&f, &caps).unwrap());
        assert!(!is_weakly_expansive(&f, &caps).unwrap());
        let one = Network::identity(1, gf(3));
        assert!(is_expansive(&one, &caps).unwrap());
        assert!(is_weakly_expansive(&one, &caps).unwrap());
    }

    #[test]
    fn fibonacci_is_expansive() {
        let caps = Caps::default();
        let m = Matrix::from_rows(gf(2), &[vec![0, 1], vec![1, 1]]).unwrap();
        let f = Network::linear(m).unwrap();
        assert!(is_expansive(&f, &caps).unwrap());
        assert!(is_weakly_expansive(&f, &caps).unwrap());
        assert!(is_quasi_expansive(&f, &caps).unwrap());
    }

    #[test]
    fn improper_xor_cycle_fails() {
        let caps = Caps::default();
        let g = cycle_with_loops(3, &[0, 1, 2]).unwrap();
        let f = Network::xor(&g);
        let cert = certify(&f, Variant::Expansive, None, &caps).unwrap();
        assert!(!cert.holds);
        let (x, y) = cert.first_failure().unwrap().merged.clone().unwrap();
        assert_ne!(x, y);
        assert_eq!(f.apply(&crate::Configuration::new(vec![1, 1, 1])).unwrap().digits, vec![0, 0, 0]);
    }
}
