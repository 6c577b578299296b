//! Scalar rings and fields.
//!
//! Rings are passed explicitly as context objects: the modulus is a runtime
//! value, so elements alone do not know how to add themselves.

use std::fmt;

use rand::Rng;

use super::upoly::UPoly;
use crate::error::{Error, Result};

/// A commutative ring with identity, given as a context object.
pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    /// Image of an integer (already reduced or not) under `Z -> R`.
    fn from_u64(&self, c: u64) -> Self::Elem;

    fn from_i64(&self, c: i64) -> Self::Elem {
        if c >= 0 {
            self.from_u64(c as u64)
        } else {
            self.neg(&self.from_u64(c.unsigned_abs()))
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        acc
    }
}

/// A field. `inv` returns `None` exactly on zero.
pub trait Field: Ring {
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;
    fn characteristic(&self) -> u64;

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Option<Self::Elem> {
        self.inv(b).map(|bi| self.mul(a, &bi))
    }
}

/// A finite field whose elements can be enumerated and sampled.
pub trait FiniteField: Field {
    fn order(&self) -> u64;
    /// The `idx`-th element in a fixed enumeration, `0 <= idx < order`.
    fn element(&self, idx: u64) -> Self::Elem;
    fn index_of(&self, a: &Self::Elem) -> u64;
    fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Self::Elem {
        self.element(rng.gen_range(0..self.order()))
    }
    fn frobenius(&self, a: &Self::Elem) -> Self::Elem {
        self.pow(a, self.characteristic())
    }
    fn elements(&self) -> Box<dyn Iterator<Item = Self::Elem> + '_> {
        Box::new((0..self.order()).map(move |i| self.element(i)))
    }
}

pub fn check_prime(p: u64) -> Result<()> {
    if p == 2 {
        return Err(Error::InvalidPrime(p, "characteristic 2 is not supported"));
    }
    if p < 3 || p >= (1 << 31) {
        return Err(Error::InvalidPrime(p, "expected an odd prime below 2^31"));
    }
    let mut d = 3;
    while d * d <= p {
        if p % d == 0 {
            return Err(Error::InvalidPrime(p, "not prime"));
        }
        d += 2;
    }
    if p % 2 == 0 {
        return Err(Error::InvalidPrime(p, "not prime"));
    }
    Ok(())
}

/// The prime field `F_p`, elements stored as residues in `[0, p)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Fp {
    p: u64,
}

impl Fp {
    pub fn new(p: u64) -> Result<Self> {
        check_prime(p)?;
        Ok(Fp { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    #[inline]
    pub fn reduce(&self, c: u64) -> u64 {
        c % self.p
    }
}

impl Ring for Fp {
    type Elem = u64;

    #[inline]
    fn zero(&self) -> u64 {
        0
    }
    #[inline]
    fn one(&self) -> u64 {
        1
    }
    #[inline]
    fn add(&self, a: &u64, b: &u64) -> u64 {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }
    #[inline]
    fn sub(&self, a: &u64, b: &u64) -> u64 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }
    #[inline]
    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }
    #[inline]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }
    #[inline]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline]
    fn from_u64(&self, c: u64) -> u64 {
        c % self.p
    }
}

impl Field for Fp {
    fn inv(&self, a: &u64) -> Option<u64> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p - 2))
        }
    }
    fn characteristic(&self) -> u64 {
        self.p
    }
}

impl FiniteField for Fp {
    fn order(&self) -> u64 {
        self.p
    }
    fn element(&self, idx: u64) -> u64 {
        idx
    }
    fn index_of(&self, a: &u64) -> u64 {
        *a
    }
    fn frobenius(&self, a: &u64) -> u64 {
        *a
    }
}

/// Maximum extension degree supported by [`Gf`].
pub const MAX_EXT_DEGREE: usize = 4;

/// Element of `F_{p^k}`: coefficients in the power basis `1, a, a^2, a^3`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GfElem(pub [u64; MAX_EXT_DEGREE]);

impl fmt::Debug for GfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// The field `F_{p^k}` for `1 <= k <= 4`, built on the first monic irreducible
/// polynomial of degree `k` in the enumeration order of [`UPoly::monic_by_index`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gf {
    base: Fp,
    k: usize,
    /// Monic modulus of degree `k`, low coefficient first, length `k + 1`.
    modulus: Vec<u64>,
}

impl Gf {
    pub fn new(p: u64, k: usize) -> Result<Self> {
        let base = Fp::new(p)?;
        if k == 0 || k > MAX_EXT_DEGREE {
            return Err(Error::InvalidParameter(format!(
                "extension degree must be in 1..={MAX_EXT_DEGREE}, got {k}"
            )));
        }
        let modulus = if k == 1 {
            vec![0, 1]
        } else {
            let mut idx = 0u64;
            loop {
                let cand = UPoly::monic_by_index(base, k, idx);
                if cand.is_irreducible() {
                    break cand.coeffs().to_vec();
                }
                idx += 1;
            }
        };
        Ok(Gf { base, k, modulus })
    }

    pub fn base(&self) -> Fp {
        self.base
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn modulus(&self) -> &[u64] {
        &self.modulus
    }

    /// Embeds a prime-field residue.
    pub fn embed(&self, c: u64) -> GfElem {
        let mut a = [0; MAX_EXT_DEGREE];
        a[0] = self.base.reduce(c);
        GfElem(a)
    }

    /// The generator `a` of the power basis (equals 1 when `k = 1`).
    pub fn generator(&self) -> GfElem {
        if self.k == 1 {
            return self.one();
        }
        let mut a = [0; MAX_EXT_DEGREE];
        a[1] = 1;
        GfElem(a)
    }

    /// Returns the residue if the element lies in the prime field.
    pub fn as_prime(&self, a: &GfElem) -> Option<u64> {
        if a.0[1..].iter().all(|&c| c == 0) {
            Some(a.0[0])
        } else {
            None
        }
    }
}

impl Ring for Gf {
    type Elem = GfElem;

    fn zero(&self) -> GfElem {
        GfElem([0; MAX_EXT_DEGREE])
    }
    fn one(&self) -> GfElem {
        self.embed(1)
    }
    fn add(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.k {
            c[i] = self.base.add(&a.0[i], &b.0[i]);
        }
        GfElem(c)
    }
    fn sub(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.k {
            c[i] = self.base.sub(&a.0[i], &b.0[i]);
        }
        GfElem(c)
    }
    fn mul(&self, a: &GfElem, b: &GfElem) -> GfElem {
        let k = self.k;
        let f = &self.base;
        let mut prod = [0u64; 2 * MAX_EXT_DEGREE - 1];
        for i in 0..k {
            if a.0[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = f.add(&prod[i + j], &f.mul(&a.0[i], &b.0[j]));
            }
        }
        // reduce by the monic modulus from the top down
        for d in (k..2 * k - 1).rev() {
            let c = prod[d];
            if c == 0 {
                continue;
            }
            prod[d] = 0;
            for i in 0..k {
                let t = f.mul(&c, &self.modulus[i]);
                prod[d - k + i] = f.sub(&prod[d - k + i], &t);
            }
        }
        let mut out = [0; MAX_EXT_DEGREE];
        out[..k].copy_from_slice(&prod[..k]);
        GfElem(out)
    }
    fn neg(&self, a: &GfElem) -> GfElem {
        let mut c = [0; MAX_EXT_DEGREE];
        for i in 0..self.k {
            c[i] = self.base.neg(&a.0[i]);
        }
        GfElem(c)
    }
    fn is_zero(&self, a: &GfElem) -> bool {
        a.0.iter().all(|&c| c == 0)
    }
    fn from_u64(&self, c: u64) -> GfElem {
        self.embed(c)
    }
}

impl Field for Gf {
    fn inv(&self, a: &GfElem) -> Option<GfElem> {
        if self.is_zero(a) {
            return None;
        }
        // a^(q-2); q fits in u128 for p < 2^31, k <= 4
        let q_minus_2 = (self.base.p() as u128).pow(self.k as u32) - 2;
        let mut e = q_minus_2;
        let mut base = *a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(&base, &base);
            }
        }
        Some(acc)
    }
    fn characteristic(&self) -> u64 {
        self.base.p()
    }
}

impl FiniteField for Gf {
    fn order(&self) -> u64 {
        self.base.p().checked_pow(self.k as u32).unwrap_or(u64::MAX)
    }
    fn element(&self, mut idx: u64) -> GfElem {
        let p = self.base.p();
        let mut c = [0; MAX_EXT_DEGREE];
        for slot in c.iter_mut().take(self.k) {
            *slot = idx % p;
            idx /= p;
        }
        GfElem(c)
    }
    fn index_of(&self, a: &GfElem) -> u64 {
        let p = self.base.p();
        a.0[..self.k].iter().rev().fold(0, |acc, &c| acc * p + c)
    }
}
