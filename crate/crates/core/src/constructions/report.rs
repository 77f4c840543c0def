use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::expansivity::{
    is_expansive, is_expansive_linear, is_strongly_expansive, is_super_expansive, is_super_expansive_linear,
    unit_criterion,
};
use crate::networks::Network;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Predicate {
    Bijective,
    Expansive,
    StronglyExpansive,
    SuperExpansive,
}

impl Predicate {
    pub fn as_str(self) -> &'static str {
        match self {
            Predicate::Bijective => "bijective",
            Predicate::Expansive => "expansive",
            Predicate::StronglyExpansive => "strongly expansive",
            Predicate::SuperExpansive => "super-expansive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Claim {
    pub predicate: Predicate,
    pub expected: bool,
    /// `None` until checked, or when every checker hit a cap.
    pub verified: Option<bool>,
    pub method: Option<String>,
}

impl Claim {
    pub fn new(predicate: Predicate, expected: bool) -> Self {
        Claim { predicate, expected, verified: None, method: None }
    }

    pub fn holds(&self) -> bool {
        self.verified == Some(self.expected)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub construction: String,
    pub params: Vec<(String, String)>,
    pub seed: Option<u64>,
}

/// A constructed network, what it is claimed to satisfy, and how it was made.
#[derive(Clone, Debug, Serialize)]
pub struct ConstructionReport {
    #[serde(skip)]
    pub network: Network,
    pub claims: Vec<Claim>,
    pub provenance: Provenance,
    /// Free-form notes, e.g. attempts used by a search.
    pub notes: Vec<String>,
}

impl ConstructionReport {
    pub fn new(network: Network, claims: Vec<Claim>, provenance: Provenance) -> Self {
        ConstructionReport { network, claims, provenance, notes: Vec::new() }
    }

    /// Checks every claim with an independent checker: determinant criteria
    /// for linear networks, brute force otherwise. Returns whether all
    /// claims were confirmed.
    pub fn verify(&mut self, caps: &Caps) -> Result<bool> {
        for i in 0..self.claims.len() {
            let (verified, method) = match check(&self.network, self.claims[i].predicate, caps) {
                Ok(r) => (Some(r.0), r.1.to_string()),
                Err(Error::CapExceeded { needed, cap }) => (None, format!("skipped: {needed} exceeds cap {cap}")),
                Err(e) => return Err(e),
            };
            self.claims[i].verified = verified;
            self.claims[i].method = Some(method);
        }
        Ok(self.all_verified())
    }

    pub fn all_verified(&self) -> bool {
        self.claims.iter().all(Claim::holds)
    }
}

fn check(f: &Network, predicate: Predicate, caps: &Caps) -> Result<(bool, &'static str)> {
    let m = f.matrix().filter(|_| predicate != Predicate::StronglyExpansive);
    match (predicate, m) {
        (Predicate::Bijective, Some(m)) => Ok((m.ring().is_unit(m.det()?), "determinant")),
        (Predicate::Bijective, None) => Ok((f.is_bijective(caps)?, "brute force")),
        (Predicate::Expansive, Some(m)) if m.ring().is_field() => {
            Ok((is_expansive_linear(m)?.holds, "linear criterion"))
        }
        (Predicate::Expansive, Some(m)) => Ok((unit_criterion(m)?, "linear criterion over Z_q")),
        (Predicate::Expansive, None) => Ok((is_expansive(f, caps)?, "brute force")),
        (Predicate::StronglyExpansive, _) => match is_strongly_expansive(f, caps) {
            Err(Error::CapExceeded { .. }) if f.matrix().is_some_and(|m| m.ring().is_field()) => {
                // expansive field-linear networks always have T(f) = n
                Ok((is_expansive_linear(f.matrix().expect("linear"))?.holds, "linear criterion"))
            }
            r => Ok((r?, "brute force")),
        },
        (Predicate::SuperExpansive, Some(m)) if m.ring().is_field() => {
            Ok((is_super_expansive_linear(m, caps)?.holds, "linear criterion"))
        }
        (Predicate::SuperExpansive, _) => Ok((is_super_expansive(f, caps)?.holds, "brute force")),
    }
}
