//! Modules over the principal ideal domain `F_p[t]`: column echelon forms
//! by unimodular column operations, kernel modules and membership tests.

use super::field::{Fp, Ring};
use super::matrix::Matrix;
use super::upoly::UPoly;

/// Ring context for `F_p[t]` with dense [`UPoly`] elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UPolyRing {
    fp: Fp,
}

impl UPolyRing {
    pub fn new(fp: Fp) -> Self {
        UPolyRing { fp }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }
}

impl Ring for UPolyRing {
    type Elem = UPoly;

    fn zero(&self) -> UPoly {
        UPoly::zero(self.fp)
    }
    fn one(&self) -> UPoly {
        UPoly::constant(self.fp, 1)
    }
    fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.add(b)
    }
    fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.sub(b)
    }
    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        a.mul(b)
    }
    fn neg(&self, a: &UPoly) -> UPoly {
        a.neg()
    }
    fn is_zero(&self, a: &UPoly) -> bool {
        a.is_zero()
    }
    fn from_u64(&self, c: u64) -> UPoly {
        UPoly::constant(self.fp, c)
    }
}

/// `a · u = h` with `u` unimodular and `h` in column echelon form: the first
/// `rank` columns have strictly increasing pivot rows (first nonzero entry,
/// made monic), the remaining columns are zero.
#[derive(Clone, Debug)]
pub struct ColumnEchelon {
    pub h: Matrix<UPoly>,
    pub u: Matrix<UPoly>,
    pub pivot_rows: Vec<usize>,
}

impl ColumnEchelon {
    pub fn rank(&self) -> usize {
        self.pivot_rows.len()
    }

    /// Columns of `u` spanning the kernel of `a` over `F_p[t]`; the kernel
    /// module is free and this basis is saturated in `F_p[t]^cols`.
    pub fn kernel_basis(&self) -> Matrix<UPoly> {
        let idx: Vec<usize> = (self.rank()..self.u.cols()).collect();
        self.u.select_columns(&idx)
    }

    /// Generators of the column module of `a`, in echelon form.
    pub fn image_basis(&self) -> Matrix<UPoly> {
        let idx: Vec<usize> = (0..self.rank()).collect();
        self.h.select_columns(&idx)
    }

    /// Remainder of `v` after reduction by the echelon generators; zero iff
    /// `v` lies in the column module. The map is `F_p`-linear in `v`.
    pub fn normal_form(&self, v: &[UPoly]) -> Vec<UPoly> {
        let mut v = v.to_vec();
        for (k, &pr) in self.pivot_rows.iter().enumerate() {
            if v[pr].is_zero() {
                continue;
            }
            let (q, _) = v[pr].div_rem(self.h.get(pr, k));
            if q.is_zero() {
                continue;
            }
            for (i, slot) in v.iter_mut().enumerate().skip(pr) {
                let t = q.mul(self.h.get(i, k));
                *slot = slot.sub(&t);
            }
        }
        v
    }

    pub fn contains(&self, v: &[UPoly]) -> bool {
        self.normal_form(v).iter().all(|x| x.is_zero())
    }
}

fn col_axpy(m: &mut Matrix<UPoly>, dst: usize, src: usize, q: &UPoly) {
    // column dst -= q * column src
    for i in 0..m.rows() {
        let s = m.get(i, src);
        if s.is_zero() {
            continue;
        }
        let v = m.get(i, dst).sub(&q.mul(s));
        m.set(i, dst, v);
    }
}

fn col_swap(m: &mut Matrix<UPoly>, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.rows() {
        let x = m.get(i, a).clone();
        let y = m.get(i, b).clone();
        m.set(i, a, y);
        m.set(i, b, x);
    }
}

fn col_scale(m: &mut Matrix<UPoly>, c: usize, s: u64) {
    for i in 0..m.rows() {
        let v = m.get(i, c).scale(s);
        m.set(i, c, v);
    }
}

/// Column echelon form by Euclidean column operations.
pub fn column_echelon(ring: &UPolyRing, a: &Matrix<UPoly>) -> ColumnEchelon {
    use super::field::Field;
    let (rows, cols) = a.shape();
    let mut h = a.clone();
    let mut u = Matrix::identity(ring, cols);
    let mut pivot_rows = Vec::new();
    let mut next = 0;
    for r in 0..rows {
        if next == cols {
            break;
        }
        loop {
            // smallest-degree nonzero entry among remaining columns in row r
            let best = (next..cols)
                .filter(|&c| !h.get(r, c).is_zero())
                .min_by_key(|&c| (h.get(r, c).degree().unwrap_or(0), c));
            let Some(b) = best else { break };
            let mut done = true;
            for c in next..cols {
                if c == b || h.get(r, c).is_zero() {
                    continue;
                }
                let (q, rem) = h.get(r, c).div_rem(h.get(r, b));
                col_axpy(&mut h, c, b, &q);
                col_axpy(&mut u, c, b, &q);
                if !rem.is_zero() {
                    done = false;
                }
            }
            if done {
                col_swap(&mut h, next, b);
                col_swap(&mut u, next, b);
                let lc = h.get(r, next).lead();
                let inv = ring.fp().inv(&lc).expect("nonzero");
                col_scale(&mut h, next, inv);
                col_scale(&mut u, next, inv);
                pivot_rows.push(r);
                next += 1;
                break;
            }
        }
    }
    ColumnEchelon { h, u, pivot_rows }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn up(f: Fp, c: &[u64]) -> UPoly {
        UPoly::new(f, c.to_vec())
    }

    #[test]
    fn kernel_of_a_rank_one_matrix() {
        let f = Fp::new(5).unwrap();
        let ring = UPolyRing::new(f);
        // [t, t^2] has kernel spanned by (t, -1) (saturated, not (t^2, -t))
        let a = Matrix::from_rows(vec![vec![up(f, &[0, 1]), up(f, &[0, 0, 1])]]).unwrap();
        let ce = column_echelon(&ring, &a);
        assert_eq!(ce.rank(), 1);
        let k = ce.kernel_basis();
        assert!(a.mul(&ring, &k).unwrap().is_zero(&ring));
        let col = k.column(0);
        let maxdeg = col.iter().filter_map(|x| x.degree()).max().unwrap();
        assert_eq!(maxdeg, 1);
        assert_eq!(a.mul(&ring, &ce.u).unwrap(), ce.h);
    }

    #[test]
    fn membership_in_column_module() {
        let f = Fp::new(7).unwrap();
        let ring = UPolyRing::new(f);
        // module generated by (t, 0) and (1, t^2) inside F_p[t]^2
        let a = Matrix::from_rows(vec![
            vec![up(f, &[0, 1]), up(f, &[1])],
            vec![up(f, &[0]), up(f, &[0, 0, 1])],
        ])
        .unwrap();
        let ce = column_echelon(&ring, &a);
        assert_eq!(ce.rank(), 2);
        assert!(ce.contains(&[up(f, &[0, 1]), up(f, &[])]));
        assert!(ce.contains(&[up(f, &[1, 3]), up(f, &[0, 0, 1])]));
        assert!(!ce.contains(&[up(f, &[1]), up(f, &[])]));
        assert!(!ce.contains(&[up(f, &[]), up(f, &[0, 1])]));
    }
}
