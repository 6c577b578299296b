//! Homogeneous parametrizations of projective lines in E(r, g) and the
//! graded operators over `k[s, t]` they induce.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Fp, Gf, GfElem, Matrix, Poly, PolyRing, Ring, UPoly};
use crate::liealg::{EPoint, RestrictedLieAlgebra};
use crate::modrep::series::ordered_products;
use crate::modrep::{validate_module, UModule};
use crate::theta::{check_degree, check_operators, generic_rank, operator_of_column};

/// `(s : t) ↦ span of the columns`, each column a vector of forms of one
/// common degree in `s, t` (variables 0 and 1).
#[derive(Clone, Debug, PartialEq)]
pub struct P1Param {
    pub n: usize,
    pub ring: PolyRing,
    pub columns: Vec<Vec<Poly>>,
    pub label: String,
}

impl P1Param {
    pub fn new(ring: PolyRing, n: usize, columns: Vec<Vec<Poly>>, label: impl Into<String>) -> Result<Self> {
        if ring.nvars() != 2 {
            return Err(Error::InvalidParameter("a P^1 locus needs a ring in s, t".into()));
        }
        if columns.is_empty() || columns.iter().any(|c| c.len() != n) {
            return Err(Error::DimensionMismatch(format!("columns must have length {n}")));
        }
        let p = P1Param { n, ring, columns, label: label.into() };
        p.column_degrees()?;
        Ok(p)
    }

    pub fn r(&self) -> usize {
        self.columns.len()
    }

    /// The common degree of the entries of each column.
    pub fn column_degrees(&self) -> Result<Vec<u32>> {
        self.columns
            .iter()
            .enumerate()
            .map(|(s, col)| {
                let mut deg = None;
                for e in col.iter().filter(|e| !e.is_zero()) {
                    let d = e.homogeneous_degree().ok_or_else(|| {
                        Error::NotHomogeneous(format!("column {s} has entry {e:?}"))
                    })?;
                    if deg.is_some_and(|x| x != d) {
                        return Err(Error::NotHomogeneous(format!("column {s} mixes degrees")));
                    }
                    deg = Some(d);
                }
                deg.ok_or_else(|| Error::InvalidParameter(format!("column {s} is zero")))
            })
            .collect()
    }

    /// The point at `(s : t)`.
    pub fn point_at(&self, field: &Gf, s: GfElem, t: GfElem) -> Result<EPoint> {
        let cols: Vec<Vec<GfElem>> = self
            .columns
            .iter()
            .map(|c| c.iter().map(|e| self.ring.eval(field, e, &[s, t])).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        EPoint::new(field.clone(), Matrix::from_columns(self.n, &cols))
    }

    pub fn to_json(&self) -> P1LocusJson {
        P1LocusJson {
            n: self.n,
            columns: self
                .columns
                .iter()
                .map(|c| {
                    c.iter().map(|e| e.terms().iter().map(|(m, x)| (m.exps(2), *x as i64)).collect()).collect()
                })
                .collect(),
            label: self.label.clone(),
        }
    }

    pub fn from_json(fp: Fp, j: &P1LocusJson) -> Result<Self> {
        let ring = PolyRing::new(fp, 2)?;
        let columns = j
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .map(|e| ring.from_terms(e.iter().map(|(x, v)| (x.clone(), fp.from_i64(*v)))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(ring, j.n, columns, j.label.clone())
    }
}

/// Wire format of a `P^1` locus: per column, per coordinate, a sparse form
/// in `s, t`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct P1LocusJson {
    pub n: usize,
    pub columns: Vec<Vec<Vec<(Vec<u32>, i64)>>>,
    pub label: String,
}

#[derive(Clone, Debug)]
pub struct P1System {
    alg: RestrictedLieAlgebra,
    module: UModule,
    param: P1Param,
    theta: Vec<Matrix<Poly>>,
    degrees: Vec<u32>,
}

/// Builds the homogeneous `Θ_s` and checks commutation and `Θ_s^p = 0`.
pub fn build_p1(alg: &RestrictedLieAlgebra, m: &UModule, param: &P1Param) -> Result<P1System> {
    if let Some(c) = validate_module(alg, m).first_failure() {
        return Err(Error::InvariantViolation(format!(
            "module {} fails {}: {}",
            m.label(),
            c.name,
            c.witness.clone().unwrap_or_default()
        )));
    }
    if param.n != alg.dim() || param.ring.fp() != alg.fp() {
        return Err(Error::DimensionMismatch("locus does not match the algebra".into()));
    }
    let degrees = param.column_degrees()?;
    let theta: Vec<Matrix<Poly>> = param.columns.iter().map(|c| operator_of_column(&param.ring, m, c)).collect();
    check_operators(&param.ring, &theta, alg.p())?;
    Ok(P1System { alg: alg.clone(), module: m.clone(), param: param.clone(), theta, degrees })
}

impl P1System {
    pub fn algebra(&self) -> &RestrictedLieAlgebra {
        &self.alg
    }

    pub fn module(&self) -> &UModule {
        &self.module
    }

    pub fn param(&self) -> &P1Param {
        &self.param
    }

    pub fn ring(&self) -> &PolyRing {
        &self.param.ring
    }

    pub fn theta(&self) -> &[Matrix<Poly>] {
        &self.theta
    }

    pub fn column_degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn r(&self) -> usize {
        self.theta.len()
    }

    /// Degree-`j` products with the degree of each block.
    pub fn products(&self, j: usize) -> Result<(Vec<Matrix<Poly>>, Vec<i64>)> {
        check_degree(j, self.alg.p(), self.r())?;
        let prods = ordered_products(self.ring(), &self.theta, j)?;
        let degs = crate::modrep::series::compositions(j, self.r())
            .iter()
            .map(|c| c.iter().zip(&self.degrees).map(|(&a, &e)| a as i64 * e as i64).sum())
            .collect();
        Ok((prods, degs))
    }

    /// `K_j` with generator degrees: source all 0, target `-deg` per block.
    pub fn kernel_matrix(&self, j: usize) -> Result<(Matrix<Poly>, Vec<i64>, Vec<i64>)> {
        let (prods, degs) = self.products(j)?;
        let m = self.module.dim();
        let target = degs.iter().flat_map(|&d| std::iter::repeat(-d).take(m)).collect();
        Ok((Matrix::vstack(&prods)?, vec![0; m], target))
    }

    /// `I_j` with generator degrees: source `deg` per block, target all 0.
    pub fn image_matrix(&self, j: usize) -> Result<(Matrix<Poly>, Vec<i64>, Vec<i64>)> {
        let (prods, degs) = self.products(j)?;
        let m = self.module.dim();
        let source = degs.iter().flat_map(|&d| std::iter::repeat(d).take(m)).collect();
        Ok((Matrix::hstack(&prods)?, source, vec![0; m]))
    }

    /// `(ker_rank, im_rank)` over `k(s, t)`.
    pub fn generic_ranks(&self, j: usize) -> Result<(usize, usize)> {
        let (k, _, _) = self.kernel_matrix(j)?;
        let (i, _, _) = self.image_matrix(j)?;
        Ok((self.module.dim() - generic_rank(self.ring(), &k, 0xC3)?, generic_rank(self.ring(), &i, 0x3C)?))
    }

    /// The operators on the chart where variable `fixed` is set to 1, as
    /// polynomials in the remaining variable.
    pub fn dehomogenized(&self, fixed: usize) -> Result<(PolyRing, Vec<Matrix<Poly>>)> {
        let r1 = PolyRing::new(self.ring().fp(), 1)?;
        let th = self.theta.iter().map(|t| t.map(|e| dehomogenize(self.ring(), &r1, e, fixed))).collect();
        Ok((r1, th))
    }

    /// `(m - rank K_j, rank I_j)` at the point `(s : t)`.
    pub fn fiber_ranks(&self, field: &Gf, s: GfElem, t: GfElem, j: usize) -> Result<(usize, usize)> {
        let (k, _, _) = self.kernel_matrix(j)?;
        let (i, _, _) = self.image_matrix(j)?;
        let ks = linalg::specialize(self.ring(), &k, field, &[s, t])?;
        let is = linalg::specialize(self.ring(), &i, field, &[s, t])?;
        Ok((self.module.dim() - linalg::rank(field, &ks), linalg::rank(field, &is)))
    }
}

/// Sets variable `fixed` of a form in `s, t` to 1; the other variable
/// becomes the variable of `target`.
pub fn dehomogenize(ring: &PolyRing, target: &PolyRing, e: &Poly, fixed: usize) -> Poly {
    let sub = ring.substitute_constant(e, fixed, 1);
    ring.relabel(&sub, target, &[0, 0])
}

/// As [`dehomogenize`], as a dense univariate polynomial.
pub fn dehomogenize_upoly(ring: &PolyRing, e: &Poly, fixed: usize) -> UPoly {
    let r1 = PolyRing::new(ring.fp(), 1).expect("one variable");
    r1.to_upoly(&dehomogenize(ring, &r1, e, fixed))
}
