use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::ring::{Element, Ring, RingKind};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    ring: Ring,
    data: Vec<Element>,
}

impl Matrix {
    pub fn new(ring: Ring, rows: usize, cols: usize, data: Vec<Element>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&e| !ring.contains(e)) {
            return Err(Error::BadParams(format!("entry {bad} is not canonical in {ring}")));
        }
        Ok(Matrix { rows, cols, ring, data })
    }

    pub fn from_rows(ring: Ring, rows: &[Vec<Element>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Matrix::new(ring, rows.len(), cols, rows.concat())
    }

    /// Builds a matrix from column vectors.
    pub fn from_columns(ring: Ring, columns: &[Vec<Element>]) -> Result<Self> {
        let rows = columns.first().map_or(0, Vec::len);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(Error::DimensionMismatch("ragged columns".into()));
        }
        let cols = columns.len();
        let data = (0..rows)
            .flat_map(|i| columns.iter().map(move |c| c[i]))
            .collect();
        Matrix::new(ring, rows, cols, data)
    }

    pub fn zeros(ring: Ring, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, ring, data: vec![0; rows * cols] }
    }

    pub fn identity(ring: Ring, n: usize) -> Self {
        let mut m = Matrix::zeros(ring, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Element {
        self.data[i * self.cols + j]
    }

    /// Sets an entry. Panics if `value` is not canonical.
    pub fn set(&mut self, i: usize, j: usize, value: Element) {
        assert!(self.ring.contains(value), "entry {value} not canonical in {}", self.ring);
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Element] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Element> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[Element] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Element>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    fn require_square(&self) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NonSquare { rows: self.rows, cols: self.cols })
        }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows || self.ring != other.ring {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let r = &self.ring;
        let mut out = Matrix::zeros(r.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = r.add(out.data[idx], r.mul(a, other.get(k, j)));
                }
            }
        }
        Ok(out)
    }

    /// Row vector times matrix: `x M`.
    pub fn left_mul(&self, x: &[Element]) -> Vec<Element> {
        assert_eq!(x.len(), self.rows);
        let r = &self.ring;
        let mut out = vec![0; self.cols];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = r.add(*o, r.mul(xi, self.get(i, j)));
            }
        }
        out
    }

    /// `M^t` by repeated squaring.
    pub fn pow(&self, mut t: u64) -> Result<Matrix> {
        let n = self.require_square()?;
        let mut acc = Matrix::identity(self.ring.clone(), n);
        let mut base = self.clone();
        while t > 0 {
            if t & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            t >>= 1;
            if t > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Horizontal concatenation `(A | B | ...)`.
    pub fn hstack(blocks: &[Matrix]) -> Result<Matrix> {
        let first = blocks
            .first()
            .ok_or_else(|| Error::DimensionMismatch("no blocks".into()))?;
        if blocks.iter().any(|b| b.rows != first.rows || b.ring != first.ring) {
            return Err(Error::DimensionMismatch("blocks differ in height or ring".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let data = (0..first.rows)
            .flat_map(|i| blocks.iter().flat_map(move |b| b.row(i).iter().copied()))
            .collect();
        Matrix::new(first.ring.clone(), first.rows, cols, data)
    }

    /// Entrywise product with a 0/1 mask.
    pub fn mask(&self, keep: impl Fn(usize, usize) -> bool) -> Matrix {
        let mut out = self.clone();
        for i in 0..self.rows {
            for j in 0..self.cols {
                if !keep(i, j) {
                    out.data[i * self.cols + j] = 0;
                }
            }
        }
        out
    }

    /// Exact determinant.
    ///
    /// Fields use Gaussian elimination; `Z_q` lifts entries to integers,
    /// runs fraction-free Bareiss elimination and reduces at the end, which
    /// stays correct in the presence of zero divisors.
    pub fn det(&self) -> Result<Element> {
        let n = self.require_square()?;
        if self.ring.kind() == RingKind::Field {
            Ok(self.det_field(n))
        } else {
            let d = bareiss(n, &self.data);
            Ok(d.mod_floor(&BigInt::from(self.ring.q())).to_u32().expect("reduced"))
        }
    }

    fn det_field(&self, n: usize) -> Element {
        let r = &self.ring;
        let mut a = self.data.clone();
        let mut det = r.one();
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| a[i * n + k] != 0) else {
                return 0;
            };
            if p != k {
                for j in 0..n {
                    a.swap(p * n + j, k * n + j);
                }
                det = r.neg(det);
            }
            let pivot = a[k * n + k];
            det = r.mul(det, pivot);
            let inv = r.inv(pivot).expect("nonzero field element");
            for i in k + 1..n {
                let factor = r.mul(a[i * n + k], inv);
                if factor == 0 {
                    continue;
                }
                for j in k..n {
                    a[i * n + j] = r.sub(a[i * n + j], r.mul(factor, a[k * n + j]));
                }
            }
        }
        det
    }

    /// Rank by elimination. Requires a field.
    pub fn rank(&self) -> Result<usize> {
        if !self.ring.is_field() {
            return Err(Error::RankOverNonField(self.ring.q()));
        }
        let r = &self.ring;
        let (rows, cols) = (self.rows, self.cols);
        let mut a = self.data.clone();
        let mut rank = 0;
        for c in 0..cols {
            let Some(p) = (rank..rows).find(|&i| a[i * cols + c] != 0) else {
                continue;
            };
            for j in 0..cols {
                a.swap(p * cols + j, rank * cols + j);
            }
            let inv = r.inv(a[rank * cols + c]).expect("nonzero field element");
            for i in rank + 1..rows {
                let factor = r.mul(a[i * cols + c], inv);
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    a[i * cols + j] = r.sub(a[i * cols + j], r.mul(factor, a[rank * cols + j]));
                }
            }
            rank += 1;
            if rank == rows {
                break;
            }
        }
        Ok(rank)
    }

    /// Text form: header `rows cols q kind`, then one line per row.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {} {} {}\n", self.rows, self.cols, self.ring.q(), self.ring.kind().as_str());
        for i in 0..self.rows {
            let row: Vec<String> = self.row(i).iter().map(u32::to_string).collect();
            s.push_str(&row.join(" "));
            s.push('\n');
        }
        s
    }

    /// Parses the text form produced by [`Matrix::to_text`]. Blank lines and
    /// `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Matrix> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        Matrix::parse_lines(&mut lines, 0)
    }

    pub(crate) fn parse_lines<'a>(
        lines: &mut impl Iterator<Item = (usize, &'a str)>,
        last_line: usize,
    ) -> Result<Matrix> {
        let (ln, header) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line + 1, "missing matrix header"))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        let [rows, cols, q, kind] = fields[..] else {
            return Err(Error::parse(ln, "expected `rows cols q kind`"));
        };
        let num = |s: &str| s.parse::<usize>().map_err(|_| Error::parse(ln, format!("bad integer `{s}`")));
        let (rows, cols, q) = (num(rows)?, num(cols)?, num(q)?);
        let kind: RingKind = kind.parse().map_err(|_| Error::parse(ln, format!("bad ring kind `{kind}`")))?;
        let ring = Ring::new(u32::try_from(q).map_err(|_| Error::parse(ln, "q too large"))?, kind)
            .map_err(|e| Error::parse(ln, e.to_string()))?;
        let mut data = Vec::with_capacity(rows * cols);
        let mut last = ln;
        for _ in 0..rows {
            let (ln, line) = lines
                .next()
                .ok_or_else(|| Error::parse(last + 1, "missing matrix row"))?;
            last = ln;
            let row: Vec<Element> = line
                .split_whitespace()
                .map(|t| t.parse::<Element>().map_err(|_| Error::parse(ln, format!("bad entry `{t}`"))))
                .collect::<Result<_>>()?;
            if row.len() != cols {
                return Err(Error::parse(ln, format!("expected {cols} entries, got {}", row.len())));
            }
            if let Some(bad) = row.iter().find(|&&e| !ring.contains(e)) {
                return Err(Error::parse(ln, format!("entry {bad} out of range for q = {q}")));
            }
            data.extend(row);
        }
        Matrix::new(ring, rows, cols, data)
    }
}

fn bareiss(n: usize, data: &[Element]) -> BigInt {
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<BigInt> = data.iter().map(|&e| BigInt::from(e)).collect();
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n - 1 {
        if a[k * n + k].is_zero() {
            let Some(p) = (k + 1..n).find(|&i| !a[i * n + k].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                a.swap(p * n + j, k * n + j);
            }
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i * n + j] * &a[k * n + k] - &a[i * n + k] * &a[k * n + j];
                a[i * n + j] = v / &prev;
            }
        }
        prev = a[k * n + k].clone();
    }
    let d = a[n * n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
