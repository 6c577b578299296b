//! Points of E(r, g): r-dimensional subspaces given by a basis matrix.

use std::fmt;

use super::algebra::RestrictedLieAlgebra;
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{FiniteField, Gf, GfElem, Matrix, Ring};

/// An `n x r` matrix of full column rank over `F_{p^k}`; its columns span a
/// subspace of the algebra.
#[derive(Clone, PartialEq, Eq)]
pub struct EPoint {
    field: Gf,
    eps: Matrix<GfElem>,
}

impl fmt::Debug for EPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EPoint{:?}", self.encode())
    }
}

impl EPoint {
    pub fn new(field: Gf, eps: Matrix<GfElem>) -> Result<Self> {
        if linalg::rank(&field, &eps) != eps.cols() {
            return Err(Error::RankDeficient);
        }
        Ok(EPoint { field, eps })
    }

    /// A point with `F_p` coordinates; `columns[s]` is the s-th basis vector.
    pub fn from_prime_columns(field: &Gf, n: usize, columns: &[Vec<u64>]) -> Result<Self> {
        if columns.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch(format!("columns must have length {n}")));
        }
        let cols: Vec<Vec<GfElem>> =
            columns.iter().map(|c| c.iter().map(|&x| field.embed(x)).collect()).collect();
        Self::new(field.clone(), Matrix::from_columns(n, &cols))
    }

    pub fn field(&self) -> &Gf {
        &self.field
    }

    pub fn matrix(&self) -> &Matrix<GfElem> {
        &self.eps
    }

    /// Ambient dimension.
    pub fn n(&self) -> usize {
        self.eps.rows()
    }

    /// Subspace dimension.
    pub fn r(&self) -> usize {
        self.eps.cols()
    }

    pub fn column(&self, s: usize) -> Vec<GfElem> {
        self.eps.column(s)
    }

    pub fn columns(&self) -> Vec<Vec<GfElem>> {
        self.eps.columns()
    }

    pub fn same_span(&self, o: &EPoint) -> bool {
        self.field == o.field && linalg::same_column_span(&self.field, &self.eps, &o.eps)
    }

    /// Right multiplication by an invertible `r x r` matrix (a basis change
    /// of the same subspace).
    pub fn rebased(&self, q: &Matrix<GfElem>) -> Result<EPoint> {
        let m = self.eps.mul(&self.field, q)?;
        EPoint::new(self.field.clone(), m)
    }

    /// Entry indices in the field enumeration, row-major; used for sorting
    /// and stable output.
    pub fn encode(&self) -> Vec<u64> {
        self.eps.data().iter().map(|e| self.field.index_of(e)).collect()
    }

    /// Entries as coordinate lists over `F_p` (power basis of `F_{p^k}`).
    pub fn entries_json(&self) -> Vec<Vec<Vec<u64>>> {
        let k = self.field.degree();
        (0..self.n())
            .map(|i| (0..self.r()).map(|s| self.eps.get(i, s).0[..k].to_vec()).collect())
            .collect()
    }
}

/// Whether the columns pairwise commute and each has zero p-power. Errors on
/// rank-deficient input or a field of the wrong characteristic.
pub fn is_elementary(alg: &RestrictedLieAlgebra, eps: &EPoint) -> Result<bool> {
    let f = eps.field();
    if f.base().p() != alg.p() {
        return Err(Error::InvalidParameter(format!(
            "point over characteristic {} for an algebra over {}",
            f.base().p(),
            alg.p()
        )));
    }
    if eps.n() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "point in dimension {} for an algebra of dimension {}",
            eps.n(),
            alg.dim()
        )));
    }
    if linalg::rank(f, eps.matrix()) != eps.r() {
        return Err(Error::RankDeficient);
    }
    let cols = eps.columns();
    for a in 0..cols.len() {
        for b in a + 1..cols.len() {
            if alg.bracket(f, &cols[a], &cols[b]).iter().any(|x| !f.is_zero(x)) {
                return Ok(false);
            }
        }
    }
    for c in &cols {
        if alg.p_power(f, c).iter().any(|x| !f.is_zero(x)) {
            return Ok(false);
        }
    }
    Ok(true)
}
