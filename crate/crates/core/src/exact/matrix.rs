//! Dense matrices over any scalar type; arithmetic goes through a ring context.

use std::fmt;

use super::field::Ring;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

impl<E: fmt::Debug> fmt::Debug for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<_> = (0..self.cols).map(|j| &self.data[i * self.cols + j]).collect();
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

impl<E: Clone> Matrix<E> {
    pub fn filled(rows: usize, cols: usize, e: E) -> Self {
        Matrix { rows, cols, data: vec![e; rows * cols] }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<E>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "expected {} entries for a {rows}x{cols} matrix, got {}",
                rows * cols,
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        if rows.iter().any(|r| r.len() != nc) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(Matrix { rows: nr, cols: nc, data: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Matrix whose columns are the given vectors (all of length `rows`).
    pub fn from_columns(rows: usize, columns: &[Vec<E>]) -> Self {
        Self::from_fn(rows, columns.len(), |i, j| columns[j][i].clone())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, e: E) {
        self.data[i * self.cols + j] = e;
    }

    #[inline]
    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut E {
        &mut self.data[i * self.cols + j]
    }

    pub fn data(&self) -> &[E] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<E> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<E>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F, G: Clone>(&self, f: F) -> Matrix<G>
    where
        F: FnMut(&E) -> G,
    {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn try_map<F, G: Clone>(&self, f: F) -> Result<Matrix<G>>
    where
        F: FnMut(&E) -> Result<G>,
    {
        let data = self.data.iter().map(f).collect::<Result<Vec<_>>>()?;
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn select_columns(&self, idx: &[usize]) -> Self {
        Self::from_fn(self.rows, idx.len(), |i, j| self.get(i, idx[j]).clone())
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), self.cols, |i, j| self.get(idx[i], j).clone())
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    /// Horizontal concatenation `[A | B | ...]`.
    pub fn hstack(blocks: &[Matrix<E>]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::DimensionMismatch("hstack of no blocks".into()));
        };
        let rows = first.rows;
        if blocks.iter().any(|b| b.rows != rows) {
            return Err(Error::DimensionMismatch("hstack row counts differ".into()));
        }
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for b in blocks {
                data.extend_from_slice(b.row(i));
            }
        }
        Ok(Matrix { rows, cols, data })
    }

    /// Vertical concatenation.
    pub fn vstack(blocks: &[Matrix<E>]) -> Result<Self> {
        let Some(first) = blocks.first() else {
            return Err(Error::DimensionMismatch("vstack of no blocks".into()));
        };
        let cols = first.cols;
        if blocks.iter().any(|b| b.cols != cols) {
            return Err(Error::DimensionMismatch("vstack column counts differ".into()));
        }
        let rows = blocks.iter().map(|b| b.rows).sum();
        let mut data = Vec::with_capacity(rows * cols);
        for b in blocks {
            data.extend_from_slice(&b.data);
        }
        Ok(Matrix { rows, cols, data })
    }
}

impl<E: Clone> Matrix<E> {
    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, ring.zero())
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn is_zero<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.data.iter().all(|e| ring.is_zero(e))
    }

    pub fn mul<R: Ring<Elem = E>>(&self, ring: &R, o: &Matrix<E>) -> Result<Self> {
        if self.cols != o.rows {
            return Err(Error::DimensionMismatch(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, o.rows, o.cols
            )));
        }
        let mut out = Self::zeros(ring, self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if ring.is_zero(b) {
                        continue;
                    }
                    let t = ring.mul(a, b);
                    let s = ring.add(out.get(i, j), &t);
                    out.set(i, j, s);
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec<R: Ring<Elem = E>>(&self, ring: &R, v: &[E]) -> Result<Vec<E>> {
        if self.cols != v.len() {
            return Err(Error::DimensionMismatch(format!(
                "cannot apply {}x{} matrix to vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                let mut acc = ring.zero();
                for (a, b) in self.row(i).iter().zip(v) {
                    if !ring.is_zero(a) && !ring.is_zero(b) {
                        acc = ring.add(&acc, &ring.mul(a, b));
                    }
                }
                acc
            })
            .collect())
    }

    fn zip_with<R: Ring<Elem = E>>(
        &self,
        o: &Matrix<E>,
        f: impl Fn(&E, &E) -> E,
        _ring: &R,
    ) -> Result<Self> {
        if self.shape() != o.shape() {
            return Err(Error::DimensionMismatch(format!(
                "shapes {:?} and {:?} differ",
                self.shape(),
                o.shape()
            )));
        }
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&o.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add<R: Ring<Elem = E>>(&self, ring: &R, o: &Matrix<E>) -> Result<Self> {
        self.zip_with(o, |a, b| ring.add(a, b), ring)
    }

    pub fn sub<R: Ring<Elem = E>>(&self, ring: &R, o: &Matrix<E>) -> Result<Self> {
        self.zip_with(o, |a, b| ring.sub(a, b), ring)
    }

    pub fn scale<R: Ring<Elem = E>>(&self, ring: &R, c: &E) -> Self {
        self.map(|a| ring.mul(a, c))
    }

    pub fn neg<R: Ring<Elem = E>>(&self, ring: &R) -> Self {
        self.map(|a| ring.neg(a))
    }

    /// `self * o - o * self`.
    pub fn commutator<R: Ring<Elem = E>>(&self, ring: &R, o: &Matrix<E>) -> Result<Self> {
        self.mul(ring, o)?.sub(ring, &o.mul(ring, self)?)
    }

    pub fn pow<R: Ring<Elem = E>>(&self, ring: &R, e: u64) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::DimensionMismatch("power of a non-square matrix".into()));
        }
        let mut acc = Self::identity(ring, self.rows);
        for _ in 0..e {
            acc = acc.mul(ring, self)?;
        }
        Ok(acc)
    }

    /// Kronecker product `self ⊗ o`.
    pub fn kron<R: Ring<Elem = E>>(&self, ring: &R, o: &Matrix<E>) -> Self {
        Self::from_fn(self.rows * o.rows, self.cols * o.cols, |i, j| {
            ring.mul(self.get(i / o.rows, j / o.cols), o.get(i % o.rows, j % o.cols))
        })
    }

    /// Linear combination `Σ c_k A_k` of same-shaped matrices.
    pub fn combination<R: Ring<Elem = E>>(
        ring: &R,
        rows: usize,
        cols: usize,
        terms: &[(E, &Matrix<E>)],
    ) -> Result<Self> {
        let mut out = Self::zeros(ring, rows, cols);
        for (c, m) in terms {
            if ring.is_zero(c) {
                continue;
            }
            if m.shape() != (rows, cols) {
                return Err(Error::DimensionMismatch("combination of mismatched matrices".into()));
            }
            for (o, a) in out.data.iter_mut().zip(&m.data) {
                if !ring.is_zero(a) {
                    *o = ring.add(o, &ring.mul(c, a));
                }
            }
        }
        Ok(out)
    }
}
