use std::fmt::Write as _;

use super::config::{format_digits, parse_digits, StateSpace};
use super::network::{Body, Network};
use crate::algebra::{Matrix, RingKind};
use crate::caps::Caps;
use crate::error::{Error, Result};

impl Network {
    /// Text form: `kind:`, `n:`, `q:` (and `ring:` for linear) headers, then
    /// either a matrix block or one `digits -> digits` line per configuration.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        match self.body() {
            Body::Linear(m) => {
                let _ = writeln!(s, "kind: linear\nn: {}\nq: {}\nring: {}", self.n(), self.q(), m.ring().kind().as_str());
                s.push_str(&m.to_text());
            }
            Body::Table(t) => {
                let _ = writeln!(s, "kind: table\nn: {}\nq: {}", self.n(), self.q());
                let space = self.space();
                for (i, &j) in t.iter().enumerate() {
                    let _ = writeln!(
                        s,
                        "{} -> {}",
                        format_digits(&space.digits(i), self.q()),
                        format_digits(&space.digits(j), self.q())
                    );
                }
            }
        }
        s
    }

    /// Parses [`Network::to_text`] output. Table bodies are checked against
    /// `caps` from the header alone, before any line is read.
    pub fn parse(text: &str, caps: &Caps) -> Result<Network> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
            .filter(|(_, l)| !l.is_empty());
        let mut header = |key: &str| -> Result<(usize, String)> {
            let (ln, line) = lines.next().ok_or_else(|| Error::parse(0, format!("missing `{key}:` header")))?;
            match line.split_once(':') {
                Some((k, v)) if k.trim() == key => Ok((ln, v.trim().to_string())),
                _ => Err(Error::parse(ln, format!("expected `{key}: ...`"))),
            }
        };
        let (kind_ln, kind) = header("kind")?;
        let (n_ln, n) = header("n")?;
        let n: usize = n.parse().map_err(|_| Error::parse(n_ln, format!("bad n `{n}`")))?;
        let (q_ln, q) = header("q")?;
        let q: u32 = q.parse().map_err(|_| Error::parse(q_ln, format!("bad q `{q}`")))?;
        if n == 0 || q < 2 {
            return Err(Error::parse(q_ln, "need n >= 1 and q >= 2"));
        }
        match kind.as_str() {
            "linear" => {
                let (ring_ln, ring) = header("ring")?;
                let ring: RingKind = ring.parse().map_err(|_| Error::parse(ring_ln, format!("bad ring `{ring}`")))?;
                let m = Matrix::parse_lines(&mut lines, ring_ln)?;
                if m.rows() != n || m.ring().q() != q || m.ring().kind() != ring {
                    return Err(Error::parse(ring_ln, "matrix block disagrees with the header"));
                }
                if let Some((ln, _)) = lines.next() {
                    return Err(Error::parse(ln, "trailing content after matrix"));
                }
                Network::linear(m)
            }
            "table" => {
                let space = StateSpace::new(n, q);
                let size = space.checked_size(caps)?;
                let mut succ = Vec::with_capacity(size);
                for (ln, line) in lines {
                    let (lhs, rhs) = line
                        .split_once("->")
                        .ok_or_else(|| Error::parse(ln, "expected `digits -> digits`"))?;
                    let digits = |s: &str| -> Result<Vec<_>> {
                        let d = parse_digits(s.trim(), q).map_err(|e| Error::parse(ln, e.to_string()))?;
                        if d.len() != n {
                            return Err(Error::parse(ln, format!("expected {n} digits")));
                        }
                        Ok(d)
                    };
                    let (x, y) = (digits(lhs)?, digits(rhs)?);
                    if space.index(&x) != succ.len() {
                        return Err(Error::parse(ln, "table lines must list configurations in increasing order"));
                    }
                    if succ.len() == size {
                        return Err(Error::parse(ln, "too many table lines"));
                    }
                    succ.push(space.index(&y));
                }
                if succ.len() != size {
                    return Err(Error::parse(0, format!("table has {} of {size} lines", succ.len())));
                }
                Network::table(n, q, succ)
            }
            other => Err(Error::parse(kind_ln, format!("unknown kind `{other}`"))),
        }
    }
}
