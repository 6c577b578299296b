//! Rational functions over `F_p`, as a field context over [`PolyRing`].
//!
//! Normalization: the denominator has leading coefficient 1, common monomial
//! factors are cancelled, and in one variable the full gcd is removed. In
//! several variables only exact divisibility of the numerator by the
//! denominator is detected, so equal values may have different
//! representations.

use super::field::{Field, Ring};
use super::poly::{Poly, PolyRing};

/// Structural equality compares representations; use
/// [`RatFuncField::equal`] for equality of values.
#[derive(Clone, Debug, PartialEq)]
pub struct RatFunc {
    pub num: Poly,
    pub den: Poly,
}

/// The field `F_p(x_0, ..., x_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatFuncField {
    ring: PolyRing,
}

impl RatFuncField {
    pub fn new(ring: PolyRing) -> Self {
        RatFuncField { ring }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn from_poly(&self, p: Poly) -> RatFunc {
        RatFunc { num: p, den: self.ring.one() }
    }

    pub fn make(&self, num: Poly, den: Poly) -> Option<RatFunc> {
        if den.is_zero() {
            return None;
        }
        Some(self.normalize(num, den))
    }

    /// Cross-multiplication equality, independent of representation.
    pub fn equal(&self, a: &RatFunc, b: &RatFunc) -> bool {
        self.ring.mul(&a.num, &b.den) == self.ring.mul(&b.num, &a.den)
    }

    fn normalize(&self, num: Poly, den: Poly) -> RatFunc {
        let r = &self.ring;
        assert!(!den.is_zero(), "zero denominator");
        if num.is_zero() {
            return RatFunc { num, den: r.one() };
        }
        let (mut num, mut den) = (num, den);
        let g = r.monomial_content(&num).gcd(r.monomial_content(&den));
        if g != super::poly::Mono::ONE {
            num = r.divide_by_monomial(&num, g);
            den = r.divide_by_monomial(&den, g);
        }
        if r.nvars() == 1 && !den.is_constant() {
            let un = r.to_upoly(&num);
            let ud = r.to_upoly(&den);
            let g = un.gcd(&ud);
            if g.degree().unwrap_or(0) > 0 {
                num = r.from_upoly(&un.div_rem(&g).0);
                den = r.from_upoly(&ud.div_rem(&g).0);
            }
        } else if !den.is_constant() {
            if let Some(q) = r.exact_div(&num, &den) {
                num = q;
                den = r.one();
            }
        }
        let lc = den.leading().expect("nonzero").1;
        let inv = r.fp().inv(&lc).expect("nonzero");
        RatFunc { num: r.scale(&num, inv), den: r.scale(&den, inv) }
    }
}

impl Ring for RatFuncField {
    type Elem = RatFunc;

    fn zero(&self) -> RatFunc {
        RatFunc { num: self.ring.zero(), den: self.ring.one() }
    }
    fn one(&self) -> RatFunc {
        RatFunc { num: self.ring.one(), den: self.ring.one() }
    }
    fn add(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.den == b.den {
            return self.normalize(r.add(&a.num, &b.num), a.den.clone());
        }
        let num = r.add(&r.mul(&a.num, &b.den), &r.mul(&b.num, &a.den));
        self.normalize(num, r.mul(&a.den, &b.den))
    }
    fn sub(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        self.add(a, &self.neg(b))
    }
    fn mul(&self, a: &RatFunc, b: &RatFunc) -> RatFunc {
        let r = &self.ring;
        if a.num.is_zero() || b.num.is_zero() {
            return self.zero();
        }
        self.normalize(r.mul(&a.num, &b.num), r.mul(&a.den, &b.den))
    }
    fn neg(&self, a: &RatFunc) -> RatFunc {
        RatFunc { num: self.ring.neg(&a.num), den: a.den.clone() }
    }
    fn is_zero(&self, a: &RatFunc) -> bool {
        a.num.is_zero()
    }
    fn from_u64(&self, c: u64) -> RatFunc {
        self.from_poly(self.ring.constant(c))
    }
}

impl Field for RatFuncField {
    fn inv(&self, a: &RatFunc) -> Option<RatFunc> {
        if a.num.is_zero() {
            return None;
        }
        Some(self.normalize(a.den.clone(), a.num.clone()))
    }
    fn characteristic(&self) -> u64 {
        self.ring.fp().p()
    }
}
