//! Rank, kernel and image over fields, fraction-free rank over polynomial
//! rings, and specialization of polynomial matrices.
//!
//! Pivoting is deterministic: columns are scanned left to right and the pivot
//! is the first nonzero entry at or below the current row.

use super::field::{Field, Ring};
use super::matrix::Matrix;
use super::poly::{Poly, PolyRing};
use crate::error::{Error, Result};

/// Reduced row echelon form and pivot columns.
#[derive(Clone, Debug)]
pub struct Echelon<E> {
    pub rref: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn rref<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Echelon<F::Elem> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = field.inv(a.get(r, c)).expect("pivot is nonzero");
        for j in c..cols {
            let v = field.mul(a.get(r, j), &inv);
            a.set(r, j, v);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = a.get(i, c).clone();
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                let t = field.mul(&factor, a.get(r, j));
                let v = field.sub(a.get(i, j), &t);
                a.set(i, j, v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    Echelon { rref: a, pivots }
}

/// Rank only; forward elimination without back substitution.
pub fn rank<F: Field>(field: &F, m: &Matrix<F::Elem>) -> usize {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !field.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, pr);
        let inv = field.inv(a.get(r, c)).expect("pivot is nonzero");
        for i in r + 1..rows {
            let factor = field.mul(a.get(i, c), &inv);
            if field.is_zero(&factor) {
                continue;
            }
            for j in c..cols {
                let t = field.mul(&factor, a.get(r, j));
                let v = field.sub(a.get(i, j), &t);
                a.set(i, j, v);
            }
        }
        r += 1;
    }
    r
}

#[derive(Clone, Debug)]
pub struct RankKernelImage<E> {
    pub rank: usize,
    /// `cols x (cols - rank)`, columns form a kernel basis.
    pub kernel: Matrix<E>,
    /// `rows x rank`, the pivot columns of the input.
    pub image: Matrix<E>,
    pub pivots: Vec<usize>,
}

pub fn rank_kernel_image<F: Field>(field: &F, m: &Matrix<F::Elem>) -> RankKernelImage<F::Elem> {
    let Echelon { rref, pivots } = rref(field, m);
    let cols = m.cols();
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    let mut kernel = Matrix::zeros(field, cols, free.len());
    for (k, &fc) in free.iter().enumerate() {
        kernel.set(fc, k, field.one());
        for (r, &pc) in pivots.iter().enumerate() {
            let v = field.neg(rref.get(r, fc));
            kernel.set(pc, k, v);
        }
    }
    let image = m.select_columns(&pivots);
    RankKernelImage { rank: pivots.len(), kernel, image, pivots }
}

pub fn kernel<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    rank_kernel_image(field, m).kernel
}

/// A basis (as columns) of the column space, taken from the input's pivot columns.
pub fn column_space<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Matrix<F::Elem> {
    let e = rref(field, m);
    m.select_columns(&e.pivots)
}

/// Indices of the lexicographically first maximal set of independent rows.
pub fn independent_rows<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Vec<usize> {
    rref(field, &m.transpose()).pivots
}

pub fn inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Option<Matrix<F::Elem>> {
    let n = m.rows();
    if n != m.cols() {
        return None;
    }
    let aug = Matrix::hstack(&[m.clone(), Matrix::identity(field, n)]).ok()?;
    let e = rref(field, &aug);
    if e.pivots.len() < n || e.pivots[n - 1] != n - 1 {
        return None;
    }
    let idx: Vec<usize> = (n..2 * n).collect();
    Some(e.rref.select_columns(&idx))
}

/// A left inverse `L` (`cols x rows`) of a full column rank matrix.
pub fn left_inverse<F: Field>(field: &F, m: &Matrix<F::Elem>) -> Result<Matrix<F::Elem>> {
    let rows = independent_rows(field, m);
    if rows.len() != m.cols() {
        return Err(Error::RankDeficient);
    }
    let minor = m.select_rows(&rows);
    let inv = inverse(field, &minor).ok_or(Error::RankDeficient)?;
    let mut l = Matrix::zeros(field, m.cols(), m.rows());
    for (k, &r) in rows.iter().enumerate() {
        for i in 0..m.cols() {
            l.set(i, r, inv.get(i, k).clone());
        }
    }
    Ok(l)
}

/// Solves `m x = b`; `None` when inconsistent.
pub fn solve<F: Field>(field: &F, m: &Matrix<F::Elem>, b: &[F::Elem]) -> Option<Vec<F::Elem>> {
    let col = Matrix::from_columns(m.rows(), &[b.to_vec()]);
    let aug = Matrix::hstack(&[m.clone(), col]).ok()?;
    let e = rref(field, &aug);
    if e.pivots.last() == Some(&m.cols()) {
        return None;
    }
    let mut x = vec![field.zero(); m.cols()];
    for (r, &pc) in e.pivots.iter().enumerate() {
        x[pc] = e.rref.get(r, m.cols()).clone();
    }
    Some(x)
}

/// Whether the column spans of `a` and `b` coincide.
pub fn same_column_span<F: Field>(field: &F, a: &Matrix<F::Elem>, b: &Matrix<F::Elem>) -> bool {
    if a.rows() != b.rows() {
        return false;
    }
    let ra = rank(field, a);
    let rb = rank(field, b);
    let both = Matrix::hstack(&[a.clone(), b.clone()]).expect("same row count");
    ra == rb && rank(field, &both) == ra
}

/// A ring with exact division, as needed by fraction-free elimination.
pub trait ExactDivision: Ring {
    fn exact_div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem>;
}

impl ExactDivision for PolyRing {
    fn exact_div(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        PolyRing::exact_div(self, a, b)
    }
}

/// Rank over the fraction field by Bareiss fraction-free elimination.
pub fn bareiss_rank<R: ExactDivision>(ring: &R, m: &Matrix<R::Elem>) -> Result<usize> {
    let mut a = m.clone();
    let (rows, cols) = a.shape();
    let mut prev = ring.one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(pr) = (r..rows).find(|&i| !ring.is_zero(a.get(i, c))) else {
            continue;
        };
        a.swap_rows(r, pr);
        let piv = a.get(r, c).clone();
        for i in r + 1..rows {
            let aic = a.get(i, c).clone();
            for j in c + 1..cols {
                let num = ring.sub(&ring.mul(&piv, a.get(i, j)), &ring.mul(&aic, a.get(r, j)));
                let v = ring.exact_div(&num, &prev).ok_or_else(|| {
                    Error::InvariantViolation("fraction-free step was not exact".into())
                })?;
                a.set(i, j, v);
            }
            a.set(i, c, ring.zero());
        }
        prev = piv;
        r += 1;
    }
    Ok(r)
}

/// Entrywise evaluation of a polynomial matrix at a point of `field`.
pub fn specialize<F: Ring>(
    ring: &PolyRing,
    m: &Matrix<Poly>,
    field: &F,
    point: &[F::Elem],
) -> Result<Matrix<F::Elem>> {
    if point.len() != ring.nvars() {
        return Err(Error::DimensionMismatch(format!(
            "point has {} coordinates, expected {}",
            point.len(),
            ring.nvars()
        )));
    }
    m.try_map(|e| ring.eval(field, e, point))
}
