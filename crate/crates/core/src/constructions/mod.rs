//! Explicit and randomized constructions. [`Construction::run`] wraps each
//! one in a [`ConstructionReport`] whose claims can be re-verified.

mod explicit;
mod linear;
mod report;

pub use explicit::{
    cycle_of_cycles_network, cycle_with_loops_network, primitive_mult_network, hub_binary, hub_matrix,
    hub_network, super_expansive_search, twisted_lex_network, SearchOutcome,
};
pub use linear::{bush_gate, linear_field_threshold, nonsingular_matrix_for_graph, random_linear_strategy, super_threshold};
pub use report::{Claim, ConstructionReport, Predicate, Provenance};

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graphs::families::CycleOfCycles;
use crate::graphs::Digraph;
use crate::networks::Network;

/// Every construction with its parameters.
#[derive(Clone, Debug)]
pub enum Construction {
    Nonsingular { graph: Digraph, q: u32 },
    RandomLinear { graph: Digraph, q: u32, seed: u64 },
    CycleWithLoops { n: usize, loops: Vec<usize>, q: u32 },
    CycleOfCycles { cc: CycleOfCycles, q: u32 },
    TwistedLex { n: usize, q: u32 },
    PrimitiveMult { n: usize, q: u32 },
    HubGraph { q: u32 },
    SuperSearch { n: usize, q: u32, seed: u64, budget: usize },
}

impl Construction {
    pub fn name(&self) -> &'static str {
        match self {
            Construction::Nonsingular { .. } => "nonsingular",
            Construction::RandomLinear { .. } => "random-linear",
            Construction::CycleWithLoops { .. } => "cycle-with-loops",
            Construction::CycleOfCycles { .. } => "cycle-of-cycles",
            Construction::TwistedLex { .. } => "twisted-lex",
            Construction::PrimitiveMult { .. } => "primitive-mult",
            Construction::HubGraph { .. } => "hub-graph",
            Construction::SuperSearch { .. } => "super-search",
        }
    }

    fn params(&self) -> (Vec<(String, String)>, Option<u64>) {
        let kv = |k: &str, v: String| (k.to_string(), v);
        match self {
            Construction::Nonsingular { graph, q } => {
                (vec![kv("n", graph.n().to_string()), kv("arcs", graph.arc_count().to_string()), kv("q", q.to_string())], None)
            }
            Construction::RandomLinear { graph, q, seed } => {
                (vec![kv("n", graph.n().to_string()), kv("arcs", graph.arc_count().to_string()), kv("q", q.to_string())], Some(*seed))
            }
            Construction::CycleWithLoops { n, loops, q } => {
                let loops = loops.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",");
                (vec![kv("n", n.to_string()), kv("loops", loops), kv("q", q.to_string())], None)
            }
            Construction::CycleOfCycles { cc, q } => {
                let join = |v: &[usize], off: usize| v.iter().map(|x| (x + off).to_string()).collect::<Vec<_>>().join(",");
                (
                    vec![
                        kv("lengths", join(&cc.lengths, 0)),
                        kv("in", join(&cc.in_links, 1)),
                        kv("out", join(&cc.out_links, 1)),
                        kv("q", q.to_string()),
                    ],
                    None,
                )
            }
            Construction::TwistedLex { n, q } | Construction::PrimitiveMult { n, q } => {
                (vec![kv("n", n.to_string()), kv("q", q.to_string())], None)
            }
            Construction::HubGraph { q } => (vec![kv("q", q.to_string())], None),
            Construction::SuperSearch { n, q, seed, budget } => {
                (vec![kv("n", n.to_string()), kv("q", q.to_string()), kv("budget", budget.to_string())], Some(*seed))
            }
        }
    }

    /// Builds the network and attaches its claims, unverified.
    pub fn run(&self, caps: &Caps) -> Result<ConstructionReport> {
        use Predicate::*;
        let (params, seed) = self.params();
        let provenance = Provenance { construction: self.name().to_string(), params, seed };
        let mut notes = Vec::new();
        let (network, claims) = match self {
            Construction::Nonsingular { graph, q } => {
                (Network::linear(nonsingular_matrix_for_graph(graph, *q)?)?, vec![Claim::new(Bijective, true)])
            }
            Construction::RandomLinear { graph, q, seed } => {
                let f = random_linear_strategy(graph, *q, *seed)?;
                let admissible = graph.is_strong() && graph.is_coverable();
                let claims = if !admissible {
                    vec![Claim::new(Expansive, false)]
                } else if *q as u64 >= linear_field_threshold(graph.n() as u64) {
                    notes.push("expansive with high probability; the claim may fail for an unlucky seed".into());
                    vec![Claim::new(Expansive, true)]
                } else {
                    Vec::new()
                };
                (f, claims)
            }
            Construction::CycleWithLoops { n, loops, q } => {
                let f = Network::linear(cycle_with_loops_network(*n, loops, *q)?)?;
                (f, vec![Claim::new(Expansive, true)])
            }
            Construction::CycleOfCycles { cc, q } => {
                (cycle_of_cycles_network(cc, *q)?, vec![Claim::new(Bijective, true), Claim::new(Expansive, true)])
            }
            Construction::TwistedLex { n, q } => {
                (twisted_lex_network(*n, *q, caps)?, vec![Claim::new(Bijective, true), Claim::new(Expansive, true)])
            }
            Construction::PrimitiveMult { n, q } => (
                primitive_mult_network(*n, *q)?,
                vec![Claim::new(Expansive, true), Claim::new(StronglyExpansive, true)],
            ),
            Construction::HubGraph { q } => (hub_network(*q, caps)?, vec![Claim::new(Expansive, true)]),
            Construction::SuperSearch { n, q, seed, budget } => {
                let out = super_expansive_search(*n, *q, *seed, *budget, caps)?;
                notes.push(format!("attempts: {}", out.attempts));
                let m = out.matrix.ok_or(Error::NotSuperExpansive)?;
                (Network::linear(m)?, vec![Claim::new(SuperExpansive, true)])
            }
        };
        let mut report = ConstructionReport::new(network, claims, provenance);
        report.notes = notes;
        Ok(report)
    }
}
