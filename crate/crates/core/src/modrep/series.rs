//! Radical and socle series of a module restricted to an elementary
//! subalgebra, and Jordan types.

use serde::{Deserialize, Serialize};

use super::module::UModule;
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Field, Gf, GfElem, Matrix, Ring};
use crate::liealg::{is_elementary, EPoint, RestrictedLieAlgebra};

/// Compositions of `j` into `r` nonnegative parts, in decreasing
/// lexicographic order: `(j, 0, ..), (j-1, 1, ..), ..., (.., 0, j)`.
pub fn compositions(j: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(j: usize, r: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 1 {
            prefix.push(j);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=j).rev() {
            prefix.push(first);
            rec(j - first, r - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if r == 0 {
        if j == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(j, r, &mut Vec::new(), &mut out);
    out
}

/// `C(j + r - 1, r - 1)`, the number of compositions.
pub fn composition_count(j: usize, r: usize) -> usize {
    binomial(j + r - 1, r - 1)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc as usize
}

/// All products `A_1^(j_1) ... A_r^(j_r)` over the compositions of `j`,
/// in [`compositions`] order, with powers computed once.
pub fn ordered_products<R: Ring>(ring: &R, ops: &[Matrix<R::Elem>], j: usize) -> Result<Vec<Matrix<R::Elem>>> {
    let m = ops.first().map_or(0, |a| a.rows());
    let mut powers: Vec<Vec<Matrix<R::Elem>>> = Vec::with_capacity(ops.len());
    for a in ops {
        let mut pw = vec![Matrix::identity(ring, m)];
        for k in 1..=j {
            let next = pw[k - 1].mul(ring, a)?;
            pw.push(next);
        }
        powers.push(pw);
    }
    compositions(j, ops.len())
        .into_iter()
        .map(|c| {
            let mut acc: Option<Matrix<R::Elem>> = None;
            for (s, &e) in c.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                acc = Some(match acc {
                    None => powers[s][e].clone(),
                    Some(a) => a.mul(ring, &powers[s][e])?,
                });
            }
            Ok(acc.unwrap_or_else(|| Matrix::identity(ring, m)))
        })
        .collect()
}

/// The operators `ρ(v_s)` of the basis vectors of `eps`, after checking that
/// `eps` is elementary and the operators commute.
pub fn point_operators(alg: &RestrictedLieAlgebra, m: &UModule, eps: &EPoint) -> Result<Vec<Matrix<GfElem>>> {
    if !is_elementary(alg, eps)? {
        return Err(Error::NotElementary(format!("{eps:?}")));
    }
    let f = eps.field();
    let ops: Vec<Matrix<GfElem>> = eps.columns().iter().map(|c| m.action(f, c)).collect();
    for a in 0..ops.len() {
        for b in a + 1..ops.len() {
            if !ops[a].commutator(f, &ops[b])?.is_zero(f) {
                return Err(Error::InvariantViolation(
                    "operators of an elementary subalgebra do not commute on the module".into(),
                ));
            }
        }
    }
    Ok(ops)
}

fn check_j(j: usize, p: u64, r: usize) -> Result<()> {
    let top = (p as usize - 1) * r;
    if j == 0 || j > top {
        return Err(Error::OutOfRange(format!("j = {j} must lie in 1..={top}")));
    }
    Ok(())
}

/// Stacked (for socles) or concatenated (for radicals) degree-`j` products.
pub fn stacked_products(f: &Gf, ops: &[Matrix<GfElem>], j: usize, vertical: bool) -> Result<Matrix<GfElem>> {
    let prods = ordered_products(f, ops, j)?;
    if vertical {
        Matrix::vstack(&prods)
    } else {
        Matrix::hstack(&prods)
    }
}

/// Basis (columns) of `Rad^j(ε*M)`.
pub fn rad_j(alg: &RestrictedLieAlgebra, m: &UModule, eps: &EPoint, j: usize) -> Result<Matrix<GfElem>> {
    check_j(j, alg.p(), eps.r())?;
    let ops = point_operators(alg, m, eps)?;
    let big = stacked_products(eps.field(), &ops, j, false)?;
    Ok(linalg::column_space(eps.field(), &big))
}

/// Basis (columns) of `Soc^j(ε*M)`.
pub fn soc_j(alg: &RestrictedLieAlgebra, m: &UModule, eps: &EPoint, j: usize) -> Result<Matrix<GfElem>> {
    check_j(j, alg.p(), eps.r())?;
    let ops = point_operators(alg, m, eps)?;
    let big = stacked_products(eps.field(), &ops, j, true)?;
    Ok(linalg::kernel(eps.field(), &big))
}

/// `(dim Rad^j, dim Soc^j)` for every `j` in `js`, sharing one operator set.
pub fn rad_soc_dims(
    alg: &RestrictedLieAlgebra,
    m: &UModule,
    eps: &EPoint,
    js: &[usize],
) -> Result<Vec<(usize, usize)>> {
    let ops = point_operators(alg, m, eps)?;
    let f = eps.field();
    js.iter()
        .map(|&j| {
            check_j(j, alg.p(), eps.r())?;
            let prods = ordered_products(f, &ops, j)?;
            let rad = linalg::rank(f, &Matrix::hstack(&prods)?);
            let soc = m.dim() - linalg::rank(f, &Matrix::vstack(&prods)?);
            Ok((rad, soc))
        })
        .collect()
}

/// A partition of the module dimension into Jordan block sizes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JordanType {
    /// Block sizes, largest first.
    pub parts: Vec<usize>,
}

impl JordanType {
    /// From `ranks[k] = rank A^k` for `k = 0, 1, ...` ending in a zero rank.
    pub fn from_ranks(ranks: &[usize]) -> Self {
        let mut parts = Vec::new();
        // #(parts >= k) = ranks[k-1] - ranks[k]
        let at_least = |k: usize| ranks[k - 1] - ranks.get(k).copied().unwrap_or(0);
        for k in (1..ranks.len()).rev() {
            let exactly = at_least(k) - if k + 1 < ranks.len() { at_least(k + 1) } else { 0 };
            parts.extend(std::iter::repeat(k).take(exactly));
        }
        JordanType { parts }
    }

    /// `rank A^k` reconstructed from the partition.
    pub fn rank_of_power(&self, k: usize) -> usize {
        self.parts.iter().map(|&b| b.saturating_sub(k)).sum()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// All blocks of size `p`: the module is projective over `u(span v)`.
    pub fn is_free(&self, p: usize) -> bool {
        self.parts.iter().all(|&b| b == p)
    }
}

/// Jordan type of a nilpotent operator with `A^p = 0`.
pub fn jordan_type_of<F: Field>(field: &F, a: &Matrix<F::Elem>, p: u64) -> Result<JordanType> {
    let mut ranks = vec![a.rows()];
    let mut pw = Matrix::identity(field, a.rows());
    for _ in 0..p {
        pw = pw.mul(field, a)?;
        ranks.push(linalg::rank(field, &pw));
    }
    if *ranks.last().expect("nonempty") != 0 {
        return Err(Error::NotNilpotent("operator has nonzero p-th power".into()));
    }
    while ranks.len() > 1 && ranks[ranks.len() - 2] == 0 {
        ranks.pop();
    }
    Ok(JordanType::from_ranks(&ranks))
}

/// Jordan type of `ρ(v)`; `v` must act with `ρ(v)^p = 0`.
pub fn jordan_type(m: &UModule, field: &Gf, v: &[GfElem]) -> Result<JordanType> {
    let p = field.characteristic();
    jordan_type_of(field, &m.action(field, v), p)
}
