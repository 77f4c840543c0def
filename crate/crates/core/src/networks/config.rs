use std::fmt;

use serde::Serialize;

use crate::algebra::Element;
use crate::caps::Caps;
use crate::error::{Error, Result};

/// The configuration space `(q)^n` and its index encoding.
///
/// Vertex `0` is the most significant digit: the index of `x` is
/// `sum_i x_i * q^(n-1-i)`, so digit strings read left to right.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct StateSpace {
    n: usize,
    q: u32,
}

impl StateSpace {
    pub fn new(n: usize, q: u32) -> Self {
        StateSpace { n, q }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// `q^n`, saturating at `u128::MAX`.
    pub fn size(&self) -> u128 {
        (self.q as u128).checked_pow(self.n as u32).unwrap_or(u128::MAX)
    }

    /// `q^n` as a `usize`, failing when it exceeds `caps.max_states`.
    pub fn checked_size(&self, caps: &Caps) -> Result<usize> {
        caps.check_states(self.size())
    }

    pub fn digits(&self, mut index: usize) -> Vec<Element> {
        let q = self.q as usize;
        let mut out = vec![0; self.n];
        for d in out.iter_mut().rev() {
            *d = (index % q) as Element;
            index /= q;
        }
        out
    }

    pub fn index(&self, digits: &[Element]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.q as usize + d as usize)
    }

    /// Place value of vertex `v`.
    pub fn weight(&self, v: usize) -> usize {
        (self.q as usize).pow((self.n - 1 - v) as u32)
    }

    pub fn digit(&self, index: usize, v: usize) -> Element {
        ((index / self.weight(v)) % self.q as usize) as Element
    }

    pub fn configuration(&self, index: usize) -> Configuration {
        Configuration::new(self.digits(index))
    }

    pub(crate) fn check(&self, x: &Configuration) -> Result<()> {
        if x.digits.len() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "configuration of length {} for n = {}",
                x.digits.len(),
                self.n
            )));
        }
        if let Some(d) = x.digits.iter().find(|&&d| d >= self.q) {
            return Err(Error::DimensionMismatch(format!("digit {d} out of range for q = {}", self.q)));
        }
        Ok(())
    }
}

/// A configuration `x = (x_1, ..., x_n)`, stored 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Configuration {
    pub digits: Vec<Element>,
}

impl Configuration {
    pub fn new(digits: Vec<Element>) -> Self {
        Configuration { digits }
    }

    pub fn zero(n: usize) -> Self {
        Configuration { digits: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn get(&self, v: usize) -> Element {
        self.digits[v]
    }

    /// Parses a digit string such as `"0101"` (see [`format_digits`]).
    pub fn parse(s: &str, q: u32) -> Result<Self> {
        parse_digits(s, q).map(Configuration::new)
    }

    pub fn to_string_q(&self, q: u32) -> String {
        format_digits(&self.digits, q)
    }
}

impl fmt::Display for Configuration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self.digits.iter().copied().max().unwrap_or(0);
        f.write_str(&format_digits(&self.digits, max.max(1) + 1))
    }
}

/// Digit strings: one base-36 character per vertex when `q <= 36`,
/// comma-separated integers otherwise.
pub fn format_digits(digits: &[Element], q: u32) -> String {
    if q <= 36 {
        digits.iter().map(|&d| std::char::from_digit(d, 36).expect("digit < 36")).collect()
    } else {
        digits.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
    }
}

pub fn parse_digits(s: &str, q: u32) -> Result<Vec<Element>> {
    let digits: Vec<Element> = if q <= 36 {
        s.chars()
            .map(|c| c.to_digit(36).ok_or_else(|| Error::BadParams(format!("bad digit `{c}`"))))
            .collect::<Result<_>>()?
    } else {
        s.split(',')
            .map(|t| t.trim().parse().map_err(|_| Error::BadParams(format!("bad digit `{t}`"))))
            .collect::<Result<_>>()?
    };
    if let Some(d) = digits.iter().find(|&&d| d >= q) {
        return Err(Error::BadParams(format!("digit {d} out of range for q = {q}")));
    }
    Ok(digits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn index_encoding() {
        let s = StateSpace::new(3, 2);
        assert_eq!(s.index(&[0, 0, 1]), 1);
        assert_eq!(s.index(&[1, 0, 0]), 4);
        assert_eq!(s.digits(6), vec![1, 1, 0]);
        assert_eq!(s.digit(6, 0), 1);
        assert_eq!(s.digit(6, 2), 0);
        for i in 0..8 {
            assert_eq!(s.index(&s.digits(i)), i);
        }
    }

    #[test]
    fn digit_strings() {
        assert_eq!(format_digits(&[0, 1, 1], 2), "011");
        assert_eq!(parse_digits("011", 2).unwrap(), vec![0, 1, 1]);
        assert_eq!(format_digits(&[12, 40], 43), "12,40");
        assert_eq!(parse_digits("12,40", 43).unwrap(), vec![12, 40]);
        assert!(parse_digits("012", 2).is_err());
    }

    proptest! {
        #[test]
        fn index_round_trips(n in 1usize..6, q in 2u32..7, seed in any::<u64>()) {
            let s = StateSpace::new(n, q);
            let idx = (seed % s.size() as u64) as usize;
            let digits = s.digits(idx);
            prop_assert_eq!(s.index(&digits), idx);
            for v in 0..n {
                prop_assert_eq!(s.digit(idx, v), digits[v]);
            }
        }
    }
}
