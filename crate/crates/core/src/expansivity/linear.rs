use serde::Serialize;

use crate::algebra::{Element, Matrix};
use crate::error::{Error, Result};

/// Determinants behind the linear expansivity criterion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinearCertificate {
    pub holds: bool,
    pub det_m: Element,
    /// `det N_u` for every vertex `u`.
    pub dets: Vec<Element>,
}

/// `N_u = (M^0_u | M^1_u | ... | M^{n-1}_u)`, where `M^i_u` is column `u` of `M^i`.
pub fn observability_matrix(m: &Matrix, u: usize) -> Result<Matrix> {
    let powers = powers(m, m.rows())?;
    Matrix::from_columns(m.ring().clone(), &powers.iter().map(|p| p.column(u)).collect::<Vec<_>>())
}

/// `[M^0, ..., M^{count-1}]`.
pub(crate) fn powers(m: &Matrix, count: usize) -> Result<Vec<Matrix>> {
    if !m.is_square() {
        return Err(Error::NonSquare { rows: m.rows(), cols: m.cols() });
    }
    let mut out = vec![Matrix::identity(m.ring().clone(), m.rows())];
    for i in 1..count {
        let next = out[i - 1].mul(m)?;
        out.push(next);
    }
    Ok(out)
}

/// A field-linear network `x -> xM` is expansive iff `det M != 0` and every
/// `N_u` is nonsingular.
pub fn is_expansive_linear(m: &Matrix) -> Result<LinearCertificate> {
    if !m.ring().is_field() {
        return Err(Error::NotAField(m.ring().q()));
    }
    let det_m = m.det()?;
    let pw = powers(m, m.rows())?;
    let dets = (0..m.rows())
        .map(|u| Matrix::from_columns(m.ring().clone(), &pw.iter().map(|p| p.column(u)).collect::<Vec<_>>())?.det())
        .collect::<Result<Vec<_>>>()?;
    let holds = det_m != 0 && dets.iter().all(|&d| d != 0);
    Ok(LinearCertificate { holds, det_m, dets })
}

/// The same criterion over any `Z_q`, with "nonzero" strengthened to "unit":
/// `x -> xN` is injective on `(Z_q)^n` iff `det N` is a unit, and by
/// Cayley-Hamilton the columns `M^t_u` for `t >= n` add nothing.
pub(crate) fn unit_criterion(m: &Matrix) -> Result<bool> {
    let ring = m.ring();
    if !ring.is_unit(m.det()?) {
        return Ok(false);
    }
    let pw = powers(m, m.rows())?;
    for u in 0..m.rows() {
        let n_u = Matrix::from_columns(ring.clone(), &pw.iter().map(|p| p.column(u)).collect::<Vec<_>>())?;
        if !ring.is_unit(n_u.det()?) {
            return Ok(false);
        }
    }
    Ok(true)
}
