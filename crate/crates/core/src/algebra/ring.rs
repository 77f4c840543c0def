use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use super::numbers::{is_prime, prime_factors, prime_power};
use super::poly;
use crate::error::{Error, Result};

/// Canonical representative of a ring element.
///
/// For `Z_q` and prime fields this is the integer in `[0, q)`. For `GF(p^k)`
/// it is the integer whose base-`p` digits are the polynomial coefficients,
/// lowest degree first.
pub type Element = u32;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum RingKind {
    Modular,
    Field,
}

impl RingKind {
    pub fn as_str(self) -> &'static str {
        match self {
            RingKind::Modular => "modular",
            RingKind::Field => "field",
        }
    }
}

impl std::str::FromStr for RingKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "modular" => Ok(RingKind::Modular),
            "field" => Ok(RingKind::Field),
            other => Err(Error::BadParams(format!("unknown ring kind `{other}`"))),
        }
    }
}

// Multiplication tables are materialized for small extension fields.
const TABLE_LIMIT: u32 = 256;

/// Alphabet `(q)` with a ring structure: `Z_q` or `GF(q)`.
#[derive(Clone)]
pub struct Ring {
    q: u32,
    kind: RingKind,
    p: u32,
    degree: u32,
    modulus: Option<Vec<Element>>,
    mul_table: Option<Arc<[Element]>>,
}

impl Ring {
    /// Builds `Z_q` (`Modular`) or `GF(q)` (`Field`).
    ///
    /// Extension fields use the least monic irreducible polynomial of the
    /// right degree over the prime field as modulus.
    pub fn new(q: u32, kind: RingKind) -> Result<Self> {
        if q < 2 {
            return Err(Error::BadParams(format!("alphabet size must be >= 2, got {q}")));
        }
        match kind {
            RingKind::Modular => Ok(Ring::prime_like(q, RingKind::Modular)),
            RingKind::Field => {
                let (p, k) = prime_power(q as u64).ok_or(Error::NotPrimePower(q as u64))?;
                if k == 1 {
                    return Ok(Ring::prime_like(q, RingKind::Field));
                }
                let base = Ring::prime_like(p as u32, RingKind::Field);
                let modulus = poly::least_irreducible(&base, k as usize);
                Ring::extension(p as u32, modulus)
            }
        }
    }

    pub fn modular(q: u32) -> Result<Self> {
        Ring::new(q, RingKind::Modular)
    }

    pub fn field(q: u32) -> Result<Self> {
        Ring::new(q, RingKind::Field)
    }

    /// `GF(p^k)` with an explicit monic modulus of degree `k` (lowest degree
    /// first). The modulus must be irreducible over `GF(p)`.
    pub fn extension(p: u32, modulus: Vec<Element>) -> Result<Self> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrimePower(p as u64));
        }
        let base = Ring::prime_like(p, RingKind::Field);
        let degree = modulus.len().saturating_sub(1);
        if degree == 0 || *modulus.last().unwrap() != 1 || modulus.iter().any(|&c| c >= p) {
            return Err(Error::BadParams("modulus must be monic over GF(p)".into()));
        }
        if !poly::is_irreducible(&base, &modulus) {
            return Err(Error::BadParams("modulus is reducible".into()));
        }
        if degree == 1 {
            return Ok(base);
        }
        let q = (p as u64)
            .checked_pow(degree as u32)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or_else(|| Error::BadParams("field too large".into()))? as u32;
        let mut ring = Ring {
            q,
            kind: RingKind::Field,
            p,
            degree: degree as u32,
            modulus: Some(modulus),
            mul_table: None,
        };
        if q <= TABLE_LIMIT {
            let table: Vec<Element> = (0..q)
                .flat_map(|a| (0..q).map(move |b| (a, b)))
                .map(|(a, b)| ring.poly_mul(a, b))
                .collect();
            ring.mul_table = Some(table.into());
        }
        Ok(ring)
    }

    fn prime_like(q: u32, kind: RingKind) -> Self {
        Ring { q, kind, p: q, degree: 1, modulus: None, mul_table: None }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Modulus polynomial for proper extension fields, lowest degree first.
    pub fn modulus(&self) -> Option<&[Element]> {
        self.modulus.as_deref()
    }

    /// True for `GF(q)` and for `Z_q` with `q` prime.
    pub fn is_field(&self) -> bool {
        self.kind == RingKind::Field || is_prime(self.q as u64)
    }

    pub fn is_extension(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn zero(&self) -> Element {
        0
    }

    pub fn one(&self) -> Element {
        1
    }

    pub fn contains(&self, a: Element) -> bool {
        a < self.q
    }

    /// Elements in canonical enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Element> {
        0..self.q
    }

    /// Reduces an arbitrary integer into the ring. For extension fields this
    /// is only meaningful for integers of the prime subfield.
    pub fn from_int(&self, v: i64) -> Element {
        if self.is_extension() {
            v.rem_euclid(self.p as i64) as Element
        } else {
            v.rem_euclid(self.q as i64) as Element
        }
    }

    pub fn add(&self, a: Element, b: Element) -> Element {
        if self.is_extension() {
            self.digitwise(a, b, |x, y| (x + y) % self.p)
        } else {
            ((a as u64 + b as u64) % self.q as u64) as Element
        }
    }

    pub fn neg(&self, a: Element) -> Element {
        if self.is_extension() {
            self.digitwise(a, 0, |x, _| (self.p - x) % self.p)
        } else {
            (self.q - a) % self.q
        }
    }

    pub fn sub(&self, a: Element, b: Element) -> Element {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Element, b: Element) -> Element {
        if let Some(table) = &self.mul_table {
            return table[(a * self.q + b) as usize];
        }
        if self.is_extension() {
            self.poly_mul(a, b)
        } else {
            ((a as u64 * b as u64) % self.q as u64) as Element
        }
    }

    pub fn pow(&self, a: Element, mut e: u64) -> Element {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse, `None` for non-units.
    pub fn inv(&self, a: Element) -> Option<Element> {
        if a == 0 {
            return None;
        }
        if self.is_extension() {
            return Some(self.pow(a, self.q as u64 - 2));
        }
        let (g, x) = ext_gcd(a as i64, self.q as i64);
        (g == 1).then(|| x.rem_euclid(self.q as i64) as Element)
    }

    pub fn is_unit(&self, a: Element) -> bool {
        self.inv(a).is_some()
    }

    /// Multiplicative order of a unit, `None` for non-units.
    pub fn order(&self, a: Element) -> Option<u64> {
        if !self.is_unit(a) {
            return None;
        }
        let mut x = a;
        let mut k = 1;
        while x != 1 {
            x = self.mul(x, a);
            k += 1;
        }
        Some(k)
    }

    /// Least element (canonical order) of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> Result<Element> {
        if !self.is_field() {
            return Err(Error::NotAField(self.q));
        }
        let m = self.q as u64 - 1;
        let factors = prime_factors(m);
        (1..self.q)
            .find(|&a| factors.iter().all(|&r| self.pow(a, m / r) != 1))
            .ok_or(Error::NotAField(self.q))
    }

    fn digits(&self, mut a: Element) -> Vec<u32> {
        let mut out = vec![0; self.degree as usize];
        for d in out.iter_mut() {
            *d = a % self.p;
            a /= self.p;
        }
        out
    }

    fn undigits(&self, digits: &[u32]) -> Element {
        digits.iter().rev().fold(0, |acc, &d| acc * self.p + d)
    }

    fn digitwise(&self, a: Element, b: Element, op: impl Fn(u32, u32) -> u32) -> Element {
        let (da, db) = (self.digits(a), self.digits(b));
        let out: Vec<u32> = da.iter().zip(&db).map(|(&x, &y)| op(x, y)).collect();
        self.undigits(&out)
    }

    fn poly_mul(&self, a: Element, b: Element) -> Element {
        let base = Ring::prime_like(self.p, RingKind::Field);
        let modulus = self.modulus.as_ref().expect("extension field");
        let prod = poly::mul(&base, &self.digits(a), &self.digits(b));
        let mut r = poly::rem(&base, &prod, modulus);
        r.resize(self.degree as usize, 0);
        self.undigits(&r)
    }
}

fn ext_gcd(a: i64, b: i64) -> (i64, i64) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i64, 0i64);
    while r != 0 {
        let quot = old_r / r;
        (old_r, r) = (r, old_r - quot * r);
        (old_s, s) = (s, old_s - quot * s);
    }
    (old_r, old_s)
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        self.q == other.q && self.kind == other.kind && self.modulus == other.modulus
    }
}

impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.modulus, self.kind) {
            (Some(m), _) => write!(f, "GF({}) mod {:?}", self.q, m),
            (None, RingKind::Field) => write!(f, "GF({})", self.q),
            (None, RingKind::Modular) => write!(f, "Z_{}", self.q),
        }
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}
