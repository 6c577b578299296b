//! Sparse multivariate polynomials over `F_p` in at most six variables.
//!
//! Monomials are packed into a `u64`, ten bits per exponent, variable 0 in
//! the most significant field, so integer order on packed monomials is the
//! lexicographic monomial order.

use std::cmp::Ordering;
use std::fmt;

use super::field::{Field, Fp, Ring};
use super::upoly::UPoly;
use crate::error::{Error, Result};

pub const MAX_VARS: usize = 6;
const BITS: u32 = 10;
const FIELD_MASK: u64 = (1 << BITS) - 1;
pub const MAX_EXPONENT: u32 = (1 << BITS) - 1;

/// Packed exponent vector.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Mono(pub u64);

impl Mono {
    pub const ONE: Mono = Mono(0);

    fn shift(i: usize) -> u32 {
        BITS * (MAX_VARS - 1 - i) as u32
    }

    pub fn from_exps(exps: &[u32]) -> Mono {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let mut m = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= MAX_EXPONENT, "exponent {e} too large");
            m |= (e as u64) << Self::shift(i);
        }
        Mono(m)
    }

    pub fn var(i: usize) -> Mono {
        Mono(1 << Self::shift(i))
    }

    pub fn exp(self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & FIELD_MASK) as u32
    }

    pub fn exps(self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|i| self.exp(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exp(i)).sum()
    }

    pub fn mul(self, o: Mono) -> Mono {
        debug_assert!((0..MAX_VARS).all(|i| self.exp(i) + o.exp(i) <= MAX_EXPONENT));
        Mono(self.0 + o.0)
    }

    pub fn divides(self, o: Mono) -> bool {
        (0..MAX_VARS).all(|i| self.exp(i) <= o.exp(i))
    }

    /// `o / self`, if it is a monomial.
    pub fn quotient_of(self, o: Mono) -> Option<Mono> {
        if self.divides(o) {
            Some(Mono(o.0 - self.0))
        } else {
            None
        }
    }

    pub fn gcd(self, o: Mono) -> Mono {
        let mut m = 0u64;
        for i in 0..MAX_VARS {
            m |= (self.exp(i).min(o.exp(i)) as u64) << Self::shift(i);
        }
        Mono(m)
    }
}

/// A polynomial: terms sorted by strictly decreasing monomial, no zero
/// coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    terms: Vec<(Mono, u64)>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for i in 0..MAX_VARS {
                match m.exp(i) {
                    0 => {}
                    1 => write!(f, "*x{i}")?,
                    e => write!(f, "*x{i}^{e}")?,
                }
            }
        }
        Ok(())
    }
}

impl Poly {
    pub fn terms(&self) -> &[(Mono, u64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<(Mono, u64)> {
        self.terms.first().copied()
    }

    /// Total degree, `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| *m == Mono::ONE)
    }

    pub fn constant_value(&self) -> Option<u64> {
        match self.terms.as_slice() {
            [] => Some(0),
            [(m, c)] if *m == Mono::ONE => Some(*c),
            _ => None,
        }
    }

    /// `Some(deg)` if every term has total degree `deg`; zero is homogeneous
    /// of every degree and yields `None`.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn coeff(&self, m: Mono) -> u64 {
        match self.terms.binary_search_by(|(x, _)| m.cmp(x)) {
            Ok(k) => self.terms[k].1,
            Err(_) => 0,
        }
    }

    fn from_sorted(terms: Vec<(Mono, u64)>) -> Poly {
        Poly { terms }
    }
}

/// Ring context for `F_p[x_0, ..., x_{d-1}]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    fp: Fp,
    nvars: usize,
}

impl PolyRing {
    pub fn new(fp: Fp, nvars: usize) -> Result<Self> {
        if nvars > MAX_VARS {
            return Err(Error::InvalidParameter(format!(
                "at most {MAX_VARS} polynomial variables are supported, got {nvars}"
            )));
        }
        Ok(PolyRing { fp, nvars })
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn var(&self, i: usize) -> Poly {
        assert!(i < self.nvars, "variable index {i} out of range");
        Poly::from_sorted(vec![(Mono::var(i), 1)])
    }

    pub fn constant(&self, c: u64) -> Poly {
        self.monomial(Mono::ONE, c)
    }

    pub fn monomial(&self, m: Mono, c: u64) -> Poly {
        let c = self.fp.reduce(c);
        if c == 0 {
            Poly::default()
        } else {
            Poly::from_sorted(vec![(m, c)])
        }
    }

    /// Builds a polynomial from arbitrary `(exponents, coefficient)` pairs.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, u64)>>(&self, it: I) -> Result<Poly> {
        let mut raw = Vec::new();
        for (e, c) in it {
            if e.len() != self.nvars {
                return Err(Error::DimensionMismatch(format!(
                    "monomial has {} exponents, ring has {} variables",
                    e.len(),
                    self.nvars
                )));
            }
            if e.iter().any(|&x| x > MAX_EXPONENT) {
                return Err(Error::InvalidParameter("exponent too large".into()));
            }
            raw.push((Mono::from_exps(&e), self.fp.reduce(c)));
        }
        Ok(self.normalize(raw))
    }

    fn normalize(&self, mut raw: Vec<(Mono, u64)>) -> Poly {
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut out: Vec<(Mono, u64)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.fp.add(lc, &c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| *c != 0);
        Poly::from_sorted(out)
    }

    fn merge(&self, a: &Poly, b: &Poly, negate_b: bool) -> Poly {
        let mut out = Vec::with_capacity(a.terms.len() + b.terms.len());
        let (mut i, mut j) = (0, 0);
        let fix = |c: u64| if negate_b { self.fp.neg(&c) } else { c };
        while i < a.terms.len() && j < b.terms.len() {
            let (ma, ca) = a.terms[i];
            let (mb, cb) = b.terms[j];
            match ma.cmp(&mb) {
                Ordering::Greater => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, fix(cb)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = self.fp.add(&ca, &fix(cb));
                    if c != 0 {
                        out.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a.terms[i..]);
        out.extend(b.terms[j..].iter().map(|&(m, c)| (m, fix(c))));
        Poly::from_sorted(out)
    }

    pub fn scale(&self, a: &Poly, c: u64) -> Poly {
        let c = self.fp.reduce(c);
        if c == 0 {
            return Poly::default();
        }
        Poly::from_sorted(a.terms.iter().map(|&(m, x)| (m, self.fp.mul(&x, &c))).collect())
    }

    pub fn mul_term(&self, a: &Poly, m: Mono, c: u64) -> Poly {
        if c == 0 {
            return Poly::default();
        }
        Poly::from_sorted(a.terms.iter().map(|&(x, y)| (x.mul(m), self.fp.mul(&y, &c))).collect())
    }

    /// Evaluates at a point of any field containing `F_p`.
    pub fn eval<F: Ring>(&self, field: &F, a: &Poly, point: &[F::Elem]) -> Result<F::Elem> {
        if point.len() != self.nvars {
            return Err(Error::DimensionMismatch(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.nvars
            )));
        }
        // cache powers per variable
        let mut powers: Vec<Vec<F::Elem>> = Vec::with_capacity(self.nvars);
        for (v, x) in point.iter().enumerate() {
            let top = a.degree_in(v).unwrap_or(0) as usize;
            let mut pw = Vec::with_capacity(top + 1);
            pw.push(field.one());
            for k in 1..=top {
                let next = field.mul(&pw[k - 1], x);
                pw.push(next);
            }
            powers.push(pw);
        }
        let mut acc = field.zero();
        for &(m, c) in &a.terms {
            let mut t = field.from_u64(c);
            for (v, pw) in powers.iter().enumerate() {
                let e = m.exp(v) as usize;
                if e > 0 {
                    t = field.mul(&t, &pw[e]);
                }
            }
            acc = field.add(&acc, &t);
        }
        Ok(acc)
    }

    /// Exact division; `None` when `b` does not divide `a` (or `b = 0`).
    pub fn exact_div(&self, a: &Poly, b: &Poly) -> Option<Poly> {
        let (lb, cb) = b.leading()?;
        let inv = self.fp.inv(&cb)?;
        if let Some(c) = b.constant_value() {
            let ci = self.fp.inv(&c)?;
            return Some(self.scale(a, ci));
        }
        let mut r = a.clone();
        let mut q = Vec::new();
        while let Some((lr, cr)) = r.leading() {
            let m = lb.quotient_of(lr)?;
            let c = self.fp.mul(&cr, &inv);
            q.push((m, c));
            r = self.merge(&r, &self.mul_term(b, m, c), true);
        }
        Some(Poly::from_sorted(q))
    }

    /// Substitutes `value` for variable `var` (the variable stays in the ring).
    pub fn substitute_constant(&self, a: &Poly, var: usize, value: u64) -> Poly {
        let mut raw = Vec::with_capacity(a.terms.len());
        for &(m, c) in &a.terms {
            let e = m.exp(var);
            let coeff = self.fp.mul(&c, &self.fp.pow(&self.fp.reduce(value), e as u64));
            let reduced = Mono(m.0 - ((e as u64) << Mono::shift(var)));
            raw.push((reduced, coeff));
        }
        self.normalize(raw)
    }

    /// Homogenizes with respect to variable `hvar` to total degree `deg`.
    pub fn homogenize(&self, a: &Poly, hvar: usize, deg: u32) -> Result<Poly> {
        let mut raw = Vec::with_capacity(a.terms.len());
        for &(m, c) in &a.terms {
            let d = m.degree();
            if d > deg {
                return Err(Error::InvalidParameter(format!(
                    "term of degree {d} exceeds homogenization degree {deg}"
                )));
            }
            raw.push((m.mul(Mono(((deg - d) as u64) << Mono::shift(hvar))), c));
        }
        Ok(self.normalize(raw))
    }

    /// Reinterprets a polynomial in the ring `target`, sending variable `i`
    /// to variable `map[i]`.
    pub fn relabel(&self, a: &Poly, target: &PolyRing, map: &[usize]) -> Poly {
        let mut raw = Vec::with_capacity(a.terms.len());
        for &(m, c) in &a.terms {
            let mut e = vec![0u32; target.nvars];
            for (i, &t) in map.iter().enumerate().take(self.nvars) {
                e[t] += m.exp(i);
            }
            raw.push((Mono::from_exps(&e), c));
        }
        target.normalize(raw)
    }

    /// Univariate view of a polynomial in a one-variable ring.
    pub fn to_upoly(&self, a: &Poly) -> UPoly {
        assert!(self.nvars <= 1, "to_upoly needs a ring in at most one variable");
        let top = a.degree_in(0).unwrap_or(0) as usize;
        let mut c = vec![0; top + 1];
        for &(m, x) in &a.terms {
            c[m.exp(0) as usize] = x;
        }
        UPoly::new(self.fp, c)
    }

    pub fn from_upoly(&self, u: &UPoly) -> Poly {
        assert!(self.nvars >= 1);
        let raw = u
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, &c)| (Mono::var(0).pow_mono(i as u32), c))
            .collect();
        self.normalize(raw)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self, a: &Poly) -> Mono {
        let mut it = a.terms.iter();
        let Some(&(first, _)) = it.next() else {
            return Mono::ONE;
        };
        it.fold(first, |g, &(m, _)| g.gcd(m))
    }

    pub fn divide_by_monomial(&self, a: &Poly, m: Mono) -> Poly {
        Poly::from_sorted(
            a.terms
                .iter()
                .map(|&(x, c)| (m.quotient_of(x).expect("monomial divides"), c))
                .collect(),
        )
    }
}

impl Mono {
    fn pow_mono(self, e: u32) -> Mono {
        Mono(self.0 * e as u64)
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn zero(&self) -> Poly {
        Poly::default()
    }
    fn one(&self) -> Poly {
        self.constant(1)
    }
    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        self.merge(a, b, false)
    }
    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        self.merge(a, b, true)
    }
    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.is_zero() || b.is_zero() {
            return Poly::default();
        }
        if a.terms.len() == 1 {
            let (m, c) = a.terms[0];
            return self.mul_term(b, m, c);
        }
        if b.terms.len() == 1 {
            let (m, c) = b.terms[0];
            return self.mul_term(a, m, c);
        }
        let mut raw = Vec::with_capacity(a.terms.len() * b.terms.len());
        for &(ma, ca) in &a.terms {
            for &(mb, cb) in &b.terms {
                raw.push((ma.mul(mb), self.fp.mul(&ca, &cb)));
            }
        }
        self.normalize(raw)
    }
    fn neg(&self, a: &Poly) -> Poly {
        Poly::from_sorted(a.terms.iter().map(|&(m, c)| (m, self.fp.neg(&c))).collect())
    }
    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }
    fn from_u64(&self, c: u64) -> Poly {
        self.constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(p: u64, n: usize) -> PolyRing {
        PolyRing::new(Fp::new(p).unwrap(), n).unwrap()
    }

    #[test]
    fn lex_order_on_packed_monomials() {
        let a = Mono::from_exps(&[1, 0, 0]);
        let b = Mono::from_exps(&[0, 5, 7]);
        assert!(a > b);
        assert_eq!(a.mul(b).exps(3), vec![1, 5, 7]);
    }

    #[test]
    fn arithmetic_and_cancellation() {
        let r = ring(5, 2);
        let x = r.var(0);
        let y = r.var(1);
        let s = r.add(&x, &y);
        let d = r.sub(&x, &y);
        // (x+y)(x-y) = x^2 - y^2
        let lhs = r.mul(&s, &d);
        let rhs = r.sub(&r.mul(&x, &x), &r.mul(&y, &y));
        assert_eq!(lhs, rhs);
        assert!(r.sub(&lhs, &rhs).is_zero());
        // (x+y)^5 = x^5 + y^5 in characteristic 5
        let five = r.pow(&s, 5);
        assert_eq!(five, r.add(&r.pow(&x, 5), &r.pow(&y, 5)));
    }

    #[test]
    fn exact_division() {
        let r = ring(7, 3);
        let a = r.from_terms([(vec![1, 1, 0], 3), (vec![0, 0, 2], 1), (vec![0, 0, 0], 6)]).unwrap();
        let b = r.from_terms([(vec![2, 0, 1], 1), (vec![0, 1, 0], 4)]).unwrap();
        let ab = r.mul(&a, &b);
        assert_eq!(r.exact_div(&ab, &b), Some(a.clone()));
        assert_eq!(r.exact_div(&ab, &a), Some(b.clone()));
        assert_eq!(r.exact_div(&r.add(&ab, &r.one()), &b), None);
    }

    #[test]
    fn evaluation_and_substitution() {
        let r = ring(5, 2);
        let f = r.from_terms([(vec![2, 1], 1), (vec![0, 0], 3)]).unwrap();
        let fp = r.fp();
        assert_eq!(r.eval(&fp, &f, &[2, 3]).unwrap(), (4 * 3 + 3) % 5);
        let g = r.substitute_constant(&f, 0, 2);
        assert_eq!(r.eval(&fp, &g, &[0, 3]).unwrap(), (4 * 3 + 3) % 5);
        assert!(r.eval(&fp, &f, &[1]).is_err());
    }

    #[test]
    fn homogenize_then_dehomogenize() {
        let r = ring(5, 2);
        let f = r.from_terms([(vec![2, 0], 1), (vec![1, 0], 2), (vec![0, 0], 3)]).unwrap();
        let h = r.homogenize(&f, 1, 2).unwrap();
        assert_eq!(h.homogeneous_degree(), Some(2));
        assert_eq!(r.substitute_constant(&h, 1, 1), f);
    }
}
