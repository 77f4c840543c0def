use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use expnet::coding::generator_matrix;
use expnet::constructions::Construction;
use expnet::expansivity::{
    certify, expansion_frequency, expansion_time, is_expansive_linear, is_super_expansive, ExpansivityCertificate,
    GateFailure, LinearCertificate, Variant,
};
use expnet::graphs::families::CycleOfCycles;
use expnet::networks::format_digits;
use expnet::{Caps, Code, Digraph, Element, Error, Network, OrthogonalArray};
use serde_json::{json, Value};

use crate::outcome::Outcome;
use crate::{GraphProperty, GraphQuery, Mode};

type Run = Result<Outcome, Outcome>;

fn flatten(r: Run) -> Outcome {
    r.unwrap_or_else(|e| e)
}

fn read(path: &Path) -> Result<String, Outcome> {
    std::fs::read_to_string(path).map_err(|e| Outcome::input(format!("cannot read {}: {e}", path.display())))
}

fn write(path: &Path, body: &str) -> Result<(), Outcome> {
    std::fs::write(path, body).map_err(|e| Outcome::input(format!("cannot write {}: {e}", path.display())))
}

fn load_network(path: &Path, caps: &Caps) -> Result<Network, Outcome> {
    Network::parse(&read(path)?, caps).map_err(|e| in_file(path, e))
}

fn load_graph(path: &Path) -> Result<Digraph, Outcome> {
    Digraph::parse(&read(path)?).map_err(|e| in_file(path, e))
}

fn in_file(path: &Path, e: Error) -> Outcome {
    let mut o = Outcome::from(e);
    o.text = format!("{}: {}", path.display(), o.text);
    o
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn digits(x: &[Element], q: u32) -> String {
    format_digits(x, q)
}

fn to_json<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("reports serialize")
}

pub fn check(file: &Path, mode: Mode, graph: Option<&Path>, caps: &Caps) -> Outcome {
    flatten(try_check(file, mode, graph, caps))
}

fn try_check(file: &Path, mode: Mode, graph: Option<&Path>, caps: &Caps) -> Run {
    let f = load_network(file, caps)?;
    match mode {
        Mode::Expansive => match certify(&f, Variant::Expansive, None, caps) {
            Err(Error::CapExceeded { .. }) if f.matrix().is_some_and(|m| m.ring().is_field()) => {
                let cert = is_expansive_linear(f.matrix().expect("checked above"))?;
                let mut o = linear_outcome(&cert);
                o.text = format!("state space above --max-states; using the determinant criterion\n{}", o.text);
                Ok(o)
            }
            r => {
                let cert = r?;
                let mut o = certificate_outcome(&cert, f.q());
                if cert.holds {
                    let t = expansion_time(&f, caps)?;
                    let _ = writeln!(o.text, "T(f) = {}", t.time);
                    o.json.as_mut().expect("set")["expansion_time"] = json!(t.time);
                }
                Ok(o)
            }
        },
        Mode::Weak => Ok(certificate_outcome(&certify(&f, Variant::Weak, None, caps)?, f.q())),
        Mode::Quasi => {
            let g = graph.map(load_graph).transpose()?;
            if let Some(g) = &g {
                if g.n() != f.n() {
                    return Err(Outcome::input(format!("graph has {} vertices, network has {}", g.n(), f.n())));
                }
            }
            Ok(certificate_outcome(&certify(&f, Variant::Quasi, g.as_ref(), caps)?, f.q()))
        }
        Mode::Strong => {
            let cert = certify(&f, Variant::Expansive, None, caps)?;
            if !cert.holds {
                let mut o = certificate_outcome(&cert, f.q());
                o.text.push_str("strongly expansive: no (not expansive)\n");
                return Ok(o);
            }
            let t = expansion_time(&f, caps)?;
            let holds = t.time == f.n();
            let w = &t.worst;
            let text = format!(
                "strongly expansive: {}\nT(f) = {} (n = {})\nslowest pair: x = {}, y = {}, vertex {}\n",
                yes(holds),
                t.time,
                f.n(),
                digits(&w.x, f.q()),
                digits(&w.y, f.q()),
                w.vertex + 1
            );
            Ok(Outcome::new(holds, text, Some(json!({ "strongly_expansive": holds, "time": to_json(&t) }))))
        }
        Mode::Super => {
            let r = is_super_expansive(&f, caps)?;
            let mut text = format!("super-expansive: {}\n", yes(r.holds));
            match &r.gate {
                Some(GateFailure::IncompleteGraph { missing: (u, v) }) => {
                    let _ = writeln!(text, "interaction graph lacks the arc {} -> {}", u + 1, v + 1);
                }
                Some(GateFailure::AlphabetTooSmall { q, bound }) => {
                    let _ = writeln!(text, "q = {q} does not exceed n^2 - n = {bound}");
                }
                None => {}
            }
            let _ = writeln!(text, "observations checked: {}", r.checked);
            if let Some(w) = &r.witness {
                let cells = w.cells.iter().map(|(v, t)| format!("({}, {t})", v + 1)).collect::<Vec<_>>().join(" ");
                let _ = writeln!(text, "non-injective observation: {cells}");
                if let Some((x, y)) = &w.pair {
                    let _ = writeln!(text, "colliding pair: {} {}", digits(x, f.q()), digits(y, f.q()));
                }
            }
            Ok(Outcome::new(r.holds, text, Some(to_json(&r))))
        }
        Mode::LinearCriterion => {
            let m = f.matrix().ok_or_else(|| Outcome::input("linear-criterion needs a linear network"))?;
            Ok(linear_outcome(&is_expansive_linear(m)?))
        }
    }
}

fn certificate_outcome(cert: &ExpansivityCertificate, q: u32) -> Outcome {
    let mut text = format!("{}: {}\n", cert.variant.as_str(), yes(cert.holds));
    for v in &cert.vertices {
        match (&v.depth, &v.merged) {
            (Some(d), _) => {
                let _ = writeln!(text, "vertex {}: separated after {d} steps", v.vertex + 1);
            }
            (None, Some((x, y))) => {
                let _ = writeln!(
                    text,
                    "vertex {}: {} classes; {} and {} are never separated",
                    v.vertex + 1,
                    v.classes,
                    digits(x, q),
                    digits(y, q)
                );
            }
            (None, None) => {
                let _ = writeln!(text, "vertex {}: not checked", v.vertex + 1);
            }
        }
    }
    Outcome::new(cert.holds, text, Some(to_json(cert)))
}

fn linear_outcome(cert: &LinearCertificate) -> Outcome {
    let mut text = format!("expansive: {}\ndet(M) = {}\n", yes(cert.holds), cert.det_m);
    for (u, d) in cert.dets.iter().enumerate() {
        let _ = writeln!(text, "det(N_{}) = {d}", u + 1);
    }
    if cert.holds {
        let _ = writeln!(text, "T(f) = {}", cert.dets.len());
    }
    Outcome::new(cert.holds, text, Some(json!({ "linear_criterion": to_json(cert) })))
}

pub fn graph(file: &Path, queries: &[GraphQuery], require: &[GraphProperty]) -> Outcome {
    flatten(try_graph(file, queries, require))
}

fn try_graph(file: &Path, queries: &[GraphQuery], require: &[GraphProperty]) -> Run {
    let g = load_graph(file)?;
    let all = [GraphQuery::Strong, GraphQuery::Coverable, GraphQuery::TermRank, GraphQuery::Decomposition];
    let queries = if queries.is_empty() { &all[..] } else { queries };
    let mut text = String::new();
    let mut report = serde_json::Map::new();
    for q in all.iter().filter(|q| queries.contains(q)) {
        match q {
            GraphQuery::Strong => {
                let _ = writeln!(text, "strong = {}", yes(g.is_strong()));
                report.insert("strong".into(), json!(g.is_strong()));
            }
            GraphQuery::Coverable => {
                let _ = writeln!(text, "coverable = {}", yes(g.is_coverable()));
                report.insert("coverable".into(), json!(g.is_coverable()));
            }
            GraphQuery::TermRank => {
                let _ = writeln!(text, "term-rank = {}", g.term_rank());
                report.insert("term_rank".into(), json!(g.term_rank()));
            }
            GraphQuery::Decomposition => {
                let cycles = g.cycle_decomposition();
                let shown = match &cycles {
                    Some(cs) => cs
                        .iter()
                        .map(|c| format!("({})", c.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(" ")))
                        .collect::<String>(),
                    None => "none".into(),
                };
                let _ = writeln!(text, "decomposition = {shown}");
                let one_based = cycles.map(|cs| cs.into_iter().map(|c| c.into_iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>());
                report.insert("decomposition".into(), json!(one_based));
            }
        }
    }
    let holds = require.iter().all(|r| match r {
        GraphProperty::Strong => g.is_strong(),
        GraphProperty::Coverable => g.is_coverable(),
    });
    Ok(Outcome::new(holds, text, Some(Value::Object(report))))
}

#[derive(Clone, Copy, ValueEnum)]
pub enum ConstructionName {
    Nonsingular,
    RandomLinear,
    CycleWithLoops,
    CycleOfCycles,
    TwistedLex,
    PrimitiveMult,
    HubGraph,
    SuperSearch,
}

#[derive(Args)]
pub struct ConstructArgs {
    #[arg(value_enum)]
    name: ConstructionName,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    q: Option<u32>,
    /// Looped vertices (1-based), e.g. `1,3`.
    #[arg(long, value_delimiter = ',')]
    loops: Vec<usize>,
    /// Graph file for nonsingular and random-linear.
    #[arg(long)]
    graph: Option<PathBuf>,
    /// Cycle lengths for cycle-of-cycles.
    #[arg(long, value_delimiter = ',')]
    lengths: Vec<usize>,
    /// Link targets (1-based positions on each cycle).
    #[arg(long, value_delimiter = ',')]
    in_links: Vec<usize>,
    /// Link sources (1-based positions on each cycle).
    #[arg(long, value_delimiter = ',')]
    out_links: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100)]
    budget: usize,
    /// Network file to write; the claim report goes to `<output>.report.json`.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

fn need<T>(v: Option<T>, flag: &str) -> Result<T, Outcome> {
    v.ok_or_else(|| Outcome::input(format!("missing --{flag}")))
}

fn zero_based(v: &[usize], flag: &str) -> Result<Vec<usize>, Outcome> {
    v.iter()
        .map(|&x| x.checked_sub(1).ok_or_else(|| Outcome::input(format!("--{flag} is 1-based"))))
        .collect()
}

impl ConstructArgs {
    fn construction(&self) -> Result<Construction, Outcome> {
        let q = || need(self.q, "q");
        let n = || need(self.n, "n");
        let graph = || need(self.graph.as_deref(), "graph").and_then(load_graph);
        Ok(match self.name {
            ConstructionName::Nonsingular => Construction::Nonsingular { graph: graph()?, q: q()? },
            ConstructionName::RandomLinear => Construction::RandomLinear { graph: graph()?, q: q()?, seed: self.seed },
            ConstructionName::CycleWithLoops => {
                Construction::CycleWithLoops { n: n()?, loops: zero_based(&self.loops, "loops")?, q: q()? }
            }
            ConstructionName::CycleOfCycles => Construction::CycleOfCycles {
                cc: CycleOfCycles::new(
                    self.lengths.clone(),
                    zero_based(&self.in_links, "in-links")?,
                    zero_based(&self.out_links, "out-links")?,
                ),
                q: q()?,
            },
            ConstructionName::TwistedLex => Construction::TwistedLex { n: n()?, q: q()? },
            ConstructionName::PrimitiveMult => Construction::PrimitiveMult { n: n()?, q: q()? },
            ConstructionName::HubGraph => Construction::HubGraph { q: q()? },
            ConstructionName::SuperSearch => {
                Construction::SuperSearch { n: n()?, q: q()?, seed: self.seed, budget: self.budget }
            }
        })
    }
}

pub fn construct(args: &ConstructArgs, caps: &Caps) -> Outcome {
    flatten(try_construct(args, caps))
}

fn try_construct(args: &ConstructArgs, caps: &Caps) -> Run {
    let c = args.construction()?;
    let mut report = c.run(caps)?;
    let holds = report.verify(caps)?;
    let mut text = String::new();
    let params = report.provenance.params.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(" ");
    let _ = writeln!(text, "construction: {} {params}", report.provenance.construction);
    if let Some(seed) = report.provenance.seed {
        let _ = writeln!(text, "seed: {seed}");
    }
    for claim in &report.claims {
        let verdict = match claim.verified {
            Some(v) if v == claim.expected => "confirmed",
            Some(_) => "REFUTED",
            None => "unchecked",
        };
        let _ = writeln!(
            text,
            "claim {} = {}: {verdict} ({})",
            claim.predicate.as_str(),
            claim.expected,
            claim.method.as_deref().unwrap_or("-")
        );
    }
    for note in &report.notes {
        let _ = writeln!(text, "note: {note}");
    }
    let body = report.network.to_text();
    let json = to_json(&report);
    match &args.output {
        Some(path) => {
            write(path, &body)?;
            let mut sidecar = path.clone().into_os_string();
            sidecar.push(".report.json");
            write(Path::new(&sidecar), &(serde_json::to_string_pretty(&json).expect("reports serialize") + "\n"))?;
            let _ = writeln!(text, "wrote {}", path.display());
        }
        None => text.push_str(&body),
    }
    Ok(Outcome::new(holds, text, Some(json)))
}

pub fn metrics(file: &Path, time: bool, frequency: bool, caps: &Caps) -> Outcome {
    flatten(try_metrics(file, time, frequency, caps))
}

fn try_metrics(file: &Path, time: bool, frequency: bool, caps: &Caps) -> Run {
    let f = load_network(file, caps)?;
    let (time, frequency) = if time || frequency { (time, frequency) } else { (true, true) };
    let q = f.q();
    let mut text = String::new();
    let mut report = serde_json::Map::new();
    if time {
        let t = expansion_time(&f, caps)?;
        let w = &t.worst;
        let _ = writeln!(text, "T(f) = {}", t.time);
        let _ = writeln!(
            text,
            "slowest pair: x = {}, y = {}, vertex {}, tau = {}",
            digits(&w.x, q),
            digits(&w.y, q),
            w.vertex + 1,
            w.value
        );
        report.insert("time".into(), to_json(&t));
    }
    if frequency {
        let p = expansion_frequency(&f, caps)?;
        let w = &p.minimizer;
        let _ = writeln!(text, "phi = {}", p.frequency);
        let _ = writeln!(text, "minimizer: x = {}, y = {}, vertex {}", digits(&w.x, q), digits(&w.y, q), w.vertex + 1);
        report.insert("frequency".into(), json!({ "phi": p.frequency.to_string(), "minimizer": to_json(w) }));
    }
    Ok(Outcome::new(true, text, Some(Value::Object(report))))
}

pub fn code(
    file: &Path,
    export: bool,
    strength: Option<usize>,
    distance: bool,
    output: Option<&Path>,
    caps: &Caps,
) -> Outcome {
    flatten(try_code(file, export, strength, distance, output, caps))
}

fn try_code(file: &Path, export: bool, strength: Option<usize>, distance: bool, output: Option<&Path>, caps: &Caps) -> Run {
    let f = load_network(file, caps)?;
    let oa = OrthogonalArray::orbit_array(&f, caps)?;
    let code: Code = oa.code()?;
    let mut text = String::new();
    let mut holds = true;
    let mut report = serde_json::Map::new();
    if export || output.is_some() {
        let body = code.export()?;
        match output {
            Some(path) => {
                write(path, &body)?;
                let _ = writeln!(text, "{}\nwrote {}", code.header()?, path.display());
            }
            None => text.push_str(&body),
        }
        if let Some(m) = f.matrix() {
            match generator_matrix(m, caps) {
                Ok(g) => {
                    let _ = write!(text, "generator matrix:\n{}", g.to_text());
                    report.insert("generator".into(), json!(g.to_rows()));
                }
                Err(Error::NotSuperExpansive) => {}
                Err(e @ Error::CapExceeded { .. }) => {
                    let _ = writeln!(text, "generator matrix skipped: {e}");
                }
                Err(e) => return Err(e.into()),
            }
        }
        report.insert("header".into(), json!(code.header()?));
    }
    if let Some(s) = strength {
        if s == 0 || s > oa.width() {
            return Err(Outcome::input(format!("strength must lie in 1..={}", oa.width())));
        }
        let ok = oa.check_oa(s);
        holds &= ok;
        let _ = writeln!(text, "orthogonal array of strength {s}, index 1: {}", yes(ok));
        report.insert("strength".into(), json!({ "s": s, "holds": ok }));
    }
    if distance {
        let d = code.min_distance()?;
        let _ = writeln!(text, "d = {d}\nMDS = {}", yes(code.is_mds()?));
        report.insert("distance".into(), json!(d));
    }
    if text.is_empty() {
        let _ = writeln!(text, "{}", code.header()?);
    }
    Ok(Outcome::new(holds, text, Some(Value::Object(report))))
}

pub fn search(n: usize, q: u32, seed: u64, budget: usize, output: Option<&Path>, caps: &Caps) -> Outcome {
    flatten(try_search(n, q, seed, budget, output, caps))
}

fn try_search(n: usize, q: u32, seed: u64, budget: usize, output: Option<&Path>, caps: &Caps) -> Run {
    let out = expnet::constructions::super_expansive_search(n, q, seed, budget, caps)?;
    let mut text = format!("seed: {seed}\nattempts: {} of {budget}\n", out.attempts);
    let json = json!({ "seed": seed, "attempts": out.attempts, "found": out.matrix.is_some() });
    let Some(m) = out.matrix else {
        text.push_str("no super-expansive matrix found\n");
        return Ok(Outcome::new(false, text, Some(json)));
    };
    let body = Network::linear(m)?.to_text();
    match output {
        Some(path) => {
            write(path, &body)?;
            let _ = writeln!(text, "wrote {}", path.display());
        }
        None => text.push_str(&body),
    }
    Ok(Outcome::new(true, text, Some(json)))
}
