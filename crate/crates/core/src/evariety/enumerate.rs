//! Exhaustive enumeration of the rational points of E(r, g) over a finite
//! field, one Schubert cell of the Grassmannian at a time.

use crate::error::{Error, Result};
use crate::exact::{FiniteField, Gf, GfElem, Matrix, Ring};
use crate::liealg::{EPoint, RestrictedLieAlgebra};

/// Default cap on the number of Grassmannian points visited.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

fn subsets(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, r: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(n, r, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, 0, &mut Vec::new(), &mut out);
    out
}

/// Free rows of column `s` in the cell of `sigma`: rows below the pivot
/// `sigma[s]` that are not pivots themselves.
fn free_rows(n: usize, sigma: &[usize], s: usize) -> Vec<usize> {
    (sigma[s] + 1..n).filter(|i| !sigma.contains(i)).collect()
}

/// `#Grass(r, n)(F_q)`, saturating at `u64::MAX`.
pub fn grassmannian_count(n: usize, r: usize, q: u64) -> u64 {
    let mut total: u64 = 0;
    for sigma in subsets(n, r) {
        let free: usize = (0..r).map(|s| free_rows(n, &sigma, s).len()).sum();
        let cell = (0..free).try_fold(1u64, |acc, _| acc.checked_mul(q)).unwrap_or(u64::MAX);
        total = total.saturating_add(cell);
    }
    total
}

/// All `F_q`-points of E(r, g), normalized so that the lexicographically
/// first invertible minor is the identity. Points are listed by cell in
/// lexicographic order of the pivot rows.
pub fn enumerate_elementary(alg: &RestrictedLieAlgebra, r: usize, field: &Gf, budget: u64) -> Result<Vec<EPoint>> {
    let n = alg.dim();
    if field.base().p() != alg.p() {
        return Err(Error::InvalidParameter("field characteristic differs from the algebra's".into()));
    }
    if r == 0 || r > n {
        return Ok(Vec::new());
    }
    let q = field.order();
    let count = grassmannian_count(n, r, q);
    if count > budget {
        return Err(Error::BudgetExceeded(format!(
            "Grass({r}, {n}) has {count} points over F_{q}, budget is {budget}"
        )));
    }
    let elems: Vec<GfElem> = field.elements().collect();
    let mut out = Vec::new();
    for sigma in subsets(n, r) {
        let mut chosen: Vec<Vec<GfElem>> = Vec::with_capacity(r);
        cell_search(alg, field, &elems, &sigma, &mut chosen, &mut out)?;
    }
    Ok(out)
}

fn cell_search(
    alg: &RestrictedLieAlgebra,
    field: &Gf,
    elems: &[GfElem],
    sigma: &[usize],
    chosen: &mut Vec<Vec<GfElem>>,
    out: &mut Vec<EPoint>,
) -> Result<()> {
    let n = alg.dim();
    let s = chosen.len();
    if s == sigma.len() {
        out.push(EPoint::new(field.clone(), Matrix::from_columns(n, chosen))?);
        return Ok(());
    }
    let rows = free_rows(n, sigma, s);
    let q = elems.len();
    let total = (q as u64).pow(rows.len() as u32);
    for code in 0..total {
        let mut v = vec![field.zero(); n];
        v[sigma[s]] = field.one();
        let mut c = code;
        for &i in &rows {
            v[i] = elems[(c % q as u64) as usize];
            c /= q as u64;
        }
        if alg.p_power(field, &v).iter().any(|x| !field.is_zero(x)) {
            continue;
        }
        if chosen.iter().any(|w| alg.bracket(field, w, &v).iter().any(|x| !field.is_zero(x))) {
            continue;
        }
        chosen.push(v);
        cell_search(alg, field, elems, sigma, chosen, out)?;
        chosen.pop();
    }
    Ok(())
}
