//! Dense univariate polynomials over `F_p`.
//!
//! Used for extension-field moduli and for the Euclidean (PID) algorithms
//! over `F_p[t]` behind one-parameter kernel modules and graded saturation.

use std::fmt;

use super::field::{Fp, Ring};

/// Coefficients low degree first, no trailing zeros (zero polynomial = empty).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UPoly {
    f: Fp,
    c: Vec<u64>,
}

impl fmt::Debug for UPoly {
    fn fmt(&self, fm: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(fm, "0");
        }
        let mut first = true;
        for (i, &c) in self.c.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(fm, " + ")?;
            }
            first = false;
            match i {
                0 => write!(fm, "{c}")?,
                1 => write!(fm, "{c}*t")?,
                _ => write!(fm, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

impl UPoly {
    pub fn new(f: Fp, mut c: Vec<u64>) -> Self {
        for x in c.iter_mut() {
            *x = f.reduce(*x);
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        UPoly { f, c }
    }

    pub fn zero(f: Fp) -> Self {
        UPoly { f, c: Vec::new() }
    }

    pub fn constant(f: Fp, a: u64) -> Self {
        Self::new(f, vec![a])
    }

    pub fn monomial(f: Fp, coeff: u64, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = coeff;
        Self::new(f, c)
    }

    /// The `idx`-th monic polynomial of degree `k`, enumerating the lower
    /// coefficients as base-`p` digits (constant term least significant).
    pub fn monic_by_index(f: Fp, k: usize, mut idx: u64) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        for slot in c.iter_mut().take(k) {
            *slot = idx % f.p();
            idx /= f.p();
        }
        Self::new(f, c)
    }

    pub fn field(&self) -> Fp {
        self.f
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree, `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> u64 {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.f.add(&self.coeff(i), &o.coeff(i))).collect();
        Self::new(self.f, c)
    }

    pub fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.f.sub(&self.coeff(i), &o.coeff(i))).collect();
        Self::new(self.f, c)
    }

    pub fn neg(&self) -> UPoly {
        Self::new(self.f, self.c.iter().map(|x| self.f.neg(x)).collect())
    }

    pub fn scale(&self, a: u64) -> UPoly {
        Self::new(self.f, self.c.iter().map(|x| self.f.mul(x, &a)).collect())
    }

    pub fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return Self::zero(self.f);
        }
        let mut c = vec![0u64; self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if *a == 0 {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = self.f.add(&c[i + j], &self.f.mul(a, b));
            }
        }
        Self::new(self.f, c)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let inv_lead = {
            use super::field::Field;
            self.f.inv(&d.lead()).expect("nonzero leading coefficient")
        };
        let mut r = self.c.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(self.f), Self::zero(self.f));
        };
        if nd < dd {
            return (Self::zero(self.f), self.clone());
        }
        let mut q = vec![0u64; nd - dd + 1];
        for i in (dd..=nd).rev() {
            let c = r[i];
            if c == 0 {
                continue;
            }
            let t = self.f.mul(&c, &inv_lead);
            q[i - dd] = t;
            for j in 0..=dd {
                let s = self.f.mul(&t, &d.c[j]);
                r[i - dd + j] = self.f.sub(&r[i - dd + j], &s);
            }
        }
        (Self::new(self.f, q), Self::new(self.f, r))
    }

    pub fn rem(&self, d: &UPoly) -> UPoly {
        self.div_rem(d).1
    }

    pub fn make_monic(&self) -> UPoly {
        use super::field::Field;
        match self.f.inv(&self.lead()) {
            Some(i) => self.scale(i),
            None => self.clone(),
        }
    }

    pub fn gcd(&self, o: &UPoly) -> UPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.make_monic()
    }

    pub fn eval<R: Ring>(&self, ring: &R, x: &R::Elem) -> R::Elem {
        let mut acc = ring.zero();
        for c in self.c.iter().rev() {
            acc = ring.add(&ring.mul(&acc, x), &ring.from_u64(*c));
        }
        acc
    }

    fn mulmod(&self, o: &UPoly, m: &UPoly) -> UPoly {
        self.mul(o).rem(m)
    }

    fn powmod(&self, mut e: u64, m: &UPoly) -> UPoly {
        let mut base = self.rem(m);
        let mut acc = UPoly::constant(self.f, 1).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m);
            }
        }
        acc
    }

    /// Irreducibility over `F_p` by Ben-Or: no factor of degree `i <= deg/2`
    /// divides `t^(p^i) - t`.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.degree() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let t = UPoly::monomial(self.f, 1, 1);
        let mut frob = t.clone();
        for _ in 1..=n / 2 {
            frob = frob.powmod(self.f.p(), self);
            let g = frob.sub(&t).gcd(self);
            if g.degree() != Some(0) {
                return false;
            }
        }
        true
    }
}
