//! Sampling adjoint orbits by truncated exponentials of nilpotent derivations.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::algebra::RestrictedLieAlgebra;
use super::point::{is_elementary, EPoint};
use crate::error::{Error, Result};
use crate::evariety::chart::chart_of_point;
use crate::exact::{Field, FiniteField, Gf, GfElem, Matrix, Ring};

/// `Σ_{i<p} D^i / i!` for a matrix with `D^p = 0`.
pub fn truncated_exp(field: &Gf, d: &Matrix<GfElem>) -> Result<Matrix<GfElem>> {
    let n = d.rows();
    let p = field.characteristic();
    let mut acc = Matrix::identity(field, n);
    let mut pw = Matrix::identity(field, n);
    let mut fact = field.one();
    for i in 1..p {
        pw = pw.mul(field, d)?;
        fact = field.mul(&fact, &field.from_u64(i));
        let inv = field.inv(&fact).expect("i! is a unit for i < p");
        acc = acc.add(field, &pw.scale(field, &inv))?;
    }
    if !pw.mul(field, d)?.is_zero(field) {
        return Err(Error::NotNilpotent("derivation has nonzero p-th power".into()));
    }
    Ok(acc)
}

/// Checks `(ad x)^p = 0`.
pub fn is_ad_nilpotent(alg: &RestrictedLieAlgebra, x: &[u64]) -> bool {
    let fp = alg.fp();
    alg.ad(&fp, x).pow(&fp, alg.p()).map(|m| m.is_zero(&fp)).unwrap_or(false)
}

/// Distinct points `exp(λ_1 ad x_1) ... exp(λ_m ad x_m) ε` for random
/// scalars, starting with `ε` itself. Points that fail the elementary test
/// are discarded, as are repeats. At most `count` points are returned; fewer
/// when `attempts` draws do not produce enough distinct ones.
pub fn adjoint_orbit_points(
    alg: &RestrictedLieAlgebra,
    eps: &EPoint,
    generators: &[Vec<u64>],
    count: usize,
    seed: u64,
    attempts: usize,
) -> Result<Vec<EPoint>> {
    let field = eps.field().clone();
    for (k, x) in generators.iter().enumerate() {
        if x.len() != alg.dim() {
            return Err(Error::DimensionMismatch(format!("generator {k} has wrong length")));
        }
        if !is_ad_nilpotent(alg, x) {
            return Err(Error::NotNilpotent(format!("generator {k}: (ad x)^p != 0")));
        }
    }
    if !is_elementary(alg, eps)? {
        return Err(Error::NotElementary("orbit base point".into()));
    }
    let ads: Vec<Matrix<GfElem>> = generators
        .iter()
        .map(|x| {
            let xv: Vec<GfElem> = x.iter().map(|&c| field.embed(c)).collect();
            alg.ad(&field, &xv)
        })
        .collect();
    let mut out: Vec<EPoint> = Vec::new();
    let base = chart_of_point(eps)?.1;
    out.push(base);
    if generators.is_empty() || count <= 1 {
        out.truncate(count.max(1));
        return Ok(out);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        if out.len() >= count {
            break;
        }
        let mut m = eps.matrix().clone();
        for ad in ads.iter().rev() {
            let lam = field.random(&mut rng);
            let e = truncated_exp(&field, &ad.scale(&field, &lam))?;
            m = e.mul(&field, &m)?;
        }
        let pt = EPoint::new(field.clone(), m)?;
        if !is_elementary(alg, &pt)? {
            continue;
        }
        let normal = chart_of_point(&pt)?.1;
        if !out.iter().any(|q| *q == normal) {
            out.push(normal);
        }
    }
    Ok(out)
}

/// Whether `exp(ad x)` preserves the bracket on all basis pairs.
pub fn exp_is_automorphism(alg: &RestrictedLieAlgebra, x: &[u64], field: &Gf) -> Result<bool> {
    let xv: Vec<GfElem> = x.iter().map(|&c| field.embed(c)).collect();
    let e = truncated_exp(field, &alg.ad(field, &xv))?;
    let n = alg.dim();
    let cols = e.columns();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = alg.bracket(field, &cols[i], &cols[j]);
            let bij: Vec<GfElem> = alg.bracket_basis(i, j).iter().map(|&c| field.embed(c)).collect();
            let rhs = e.mul_vec(field, &bij)?;
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
