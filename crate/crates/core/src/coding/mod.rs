//! Orbit arrays of networks and the codes they form.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use itertools::Itertools;
use serde::Serialize;

use crate::algebra::{Element, Matrix};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::expansivity::is_super_expansive_linear;
use crate::networks::{format_digits, parse_digits, Network};

/// `q^n` rows, one per configuration `x` in index order:
/// `L_x = (f(x)_1, ..., f(x)_n, f^2(x)_1, ..., f^n(x)_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrthogonalArray {
    pub n: usize,
    pub q: u32,
    pub rows: Vec<Vec<Element>>,
}

impl OrthogonalArray {
    pub fn orbit_array(f: &Network, caps: &Caps) -> Result<Self> {
        let space = f.space();
        let size = space.checked_size(caps)?;
        let succ = f.successor_table(caps)?;
        let n = f.n();
        let rows = (0..size)
            .map(|x| {
                let mut row = Vec::with_capacity(n * n);
                let mut z = x;
                for _ in 0..n {
                    z = succ[z];
                    row.extend(space.digits(z));
                }
                row
            })
            .collect();
        Ok(OrthogonalArray { n, q: f.q(), rows })
    }

    pub fn width(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    /// Whether no `s`-tuple appears twice in any `s` columns (index 1).
    pub fn check_oa(&self, s: usize) -> bool {
        if s > self.width() {
            return false;
        }
        let q = self.q as u128;
        (0..self.width()).combinations(s).all(|cols| {
            let mut seen = std::collections::HashSet::with_capacity(self.rows.len());
            self.rows
                .iter()
                .all(|r| seen.insert(cols.iter().fold(0u128, |acc, &c| acc * q + r[c] as u128)))
        })
    }

    pub fn code(&self) -> Result<Code> {
        Code::new(self.q, self.rows.clone())
    }
}

/// A set of distinct equal-length words over `(q)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Code {
    q: u32,
    len: usize,
    words: Vec<Vec<Element>>,
}

impl Code {
    /// Sorts and deduplicates `words`.
    pub fn new(q: u32, words: Vec<Vec<Element>>) -> Result<Self> {
        let len = words.first().map_or(0, Vec::len);
        if words.iter().any(|w| w.len() != len) {
            return Err(Error::DimensionMismatch("words of different lengths".into()));
        }
        if words.iter().flatten().any(|&a| a >= q) {
            return Err(Error::DimensionMismatch(format!("symbol outside (q) for q = {q}")));
        }
        let words: Vec<_> = words.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
        Ok(Code { q, len, words })
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn size(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn words(&self) -> &[Vec<Element>] {
        &self.words
    }

    pub fn min_distance(&self) -> Result<usize> {
        if self.words.len() < 2 {
            return Err(Error::TooFewWords(self.words.len()));
        }
        let mut best = self.len;
        for (i, a) in self.words.iter().enumerate() {
            for b in &self.words[i + 1..] {
                let mut d = 0;
                for (x, y) in a.iter().zip(b) {
                    d += usize::from(x != y);
                    if d >= best {
                        break;
                    }
                }
                best = best.min(d);
            }
        }
        Ok(best)
    }

    /// Singleton equality `|C| = q^(N - d + 1)`.
    pub fn is_mds(&self) -> Result<bool> {
        let d = self.min_distance()?;
        let size = (self.q as u128).checked_pow((self.len - d + 1) as u32);
        Ok(size == Some(self.words.len() as u128))
    }

    pub fn header(&self) -> Result<String> {
        let d = self.min_distance()?;
        let mds = if self.is_mds()? { "yes" } else { "no" };
        Ok(format!("N={} q={} |C|={} d={d} MDS={mds}", self.len, self.q, self.words.len()))
    }

    /// Header line, then one digit string per word.
    pub fn export(&self) -> Result<String> {
        let mut s = self.header()?;
        s.push('\n');
        for w in &self.words {
            let _ = writeln!(s, "{}", format_digits(w, self.q));
        }
        Ok(s)
    }

    /// Reads [`Code::export`] output. Only `q` is taken from the header; the
    /// other fields are recomputed and must agree with it.
    pub fn parse(text: &str) -> Result<Code> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim())).filter(|(_, l)| !l.is_empty());
        let (_, header) = lines.next().ok_or_else(|| Error::parse(1, "missing header"))?;
        let field = |key: &str| {
            header
                .split_whitespace()
                .find_map(|kv| kv.strip_prefix(key))
                .ok_or_else(|| Error::parse(1, format!("header lacks `{key}`")))
        };
        let q: u32 = field("q=")?.parse().map_err(|_| Error::parse(1, "bad q"))?;
        let words = lines
            .map(|(ln, l)| parse_digits(l, q).map_err(|e| Error::parse(ln, e.to_string())))
            .collect::<Result<Vec<_>>>()?;
        let code = Code::new(q, words)?;
        if code.header()? != header.split_whitespace().join(" ") {
            return Err(Error::parse(1, format!("header disagrees with words: expected `{}`", code.header()?)));
        }
        Ok(code)
    }
}

/// `(M | M^2 | ... | M^n)`, whose row space is the orbit array of `x -> xM`.
pub fn generator_matrix(m: &Matrix, caps: &Caps) -> Result<Matrix> {
    if !is_super_expansive_linear(m, caps)?.holds {
        return Err(Error::NotSuperExpansive);
    }
    let mut blocks = vec![m.clone()];
    for i in 1..m.rows() {
        let next = blocks[i - 1].mul(m)?;
        blocks.push(next);
    }
    Matrix::hstack(&blocks)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Ring;

    fn m33() -> Matrix {
        Matrix::from_rows(Ring::field(3).unwrap(), &[vec![1, 1], vec![1, 2]]).unwrap()
    }

    #[test]
    fn repetition_code() {
        let c = Code::new(3, (0..3).map(|a| vec![a; 5]).collect()).unwrap();
        assert_eq!(c.min_distance().unwrap(), 5);
        assert!(c.is_mds().unwrap());
    }

    #[test]
    fn distance_one() {
        let c = Code::new(2, vec![vec![0, 1, 1], vec![0, 1, 0]]).unwrap();
        assert_eq!(c.min_distance().unwrap(), 1);
        assert!(!c.is_mds().unwrap());
        let full = Code::new(2, vec![vec![0], vec![1]]).unwrap();
        assert!(full.is_mds().unwrap());
        assert!(matches!(Code::new(2, vec![vec![0]]).unwrap().min_distance(), Err(Error::TooFewWords(1))));
    }

    #[test]
    fn gf3_pipeline() {
        let caps = Caps::default();
        let f = Network::linear(m33()).unwrap();
        let oa = OrthogonalArray::orbit_array(&f, &caps).unwrap();
        assert_eq!((oa.rows.len(), oa.width()), (9, 4));
        assert!(oa.check_oa(2));
        let code = oa.code().unwrap();
        assert_eq!(code.header().unwrap(), "N=4 q=3 |C|=9 d=3 MDS=yes");
        let g = generator_matrix(&m33(), &caps).unwrap();
        assert_eq!(g.to_rows(), vec![vec![1, 1, 2, 0], vec![1, 2, 0, 2]]);
    }

    #[test]
    fn corrupted_array_fails() {
        let f = Network::linear(m33()).unwrap();
        let mut oa = OrthogonalArray::orbit_array(&f, &Caps::default()).unwrap();
        oa.rows[0][0] = oa.rows[1][0];
        oa.rows[0][1] = oa.rows[1][1];
        assert!(!oa.check_oa(2));
    }

    #[test]
    fn export_round_trip() {
        let code = Code::new(3, vec![vec![0, 1, 2], vec![1, 1, 1], vec![2, 0, 1]]).unwrap();
        assert_eq!(Code::parse(&code.export().unwrap()).unwrap(), code);
        let tampered = code.export().unwrap().replace("d=", "d=9");
        assert!(Code::parse(&tampered).is_err());
    }

    #[test]
    fn one_vertex() {
        let m = Matrix::from_rows(Ring::field(5).unwrap(), &[vec![2]]).unwrap();
        let oa = OrthogonalArray::orbit_array(&Network::linear(m.clone()).unwrap(), &Caps::default()).unwrap();
        assert_eq!(oa.rows, vec![vec![0], vec![2], vec![4], vec![1], vec![3]]);
        assert!(oa.check_oa(1));
        assert_eq!(generator_matrix(&m, &Caps::default()).unwrap().to_rows(), vec![vec![2]]);
    }
}
