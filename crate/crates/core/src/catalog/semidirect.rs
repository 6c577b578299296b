//! `g_(1,n) = V ⋊ gl_n` and modules built from truncated symmetric and
//! exterior algebras on `V`, with `V` acting by multiplication and `gl_n`
//! by derivations.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Fp, Matrix, PolyRing, Ring};
use crate::liealg::RestrictedLieAlgebra;
use crate::modrep::UModule;
use crate::p1split::P1Param;

/// Basis `v_1..v_n`, then `E_ij` row-major, realized as `(n+1) x (n+1)`
/// matrices `[[A, v], [0, 0]]`.
pub fn semidirect_algebra(n: usize, p: u64) -> Result<RestrictedLieAlgebra> {
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let fp = Fp::new(p)?;
    let size = n + 1;
    let unit = |i: usize, j: usize| Matrix::from_fn(size, size, |a, b| u64::from(a == i && b == j));
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    for i in 0..n {
        labels.push(format!("v{}", i + 1));
        mats.push(unit(i, n));
    }
    for i in 0..n {
        for j in 0..n {
            labels.push(format!("E{}{}", i + 1, j + 1));
            mats.push(unit(i, j));
        }
    }
    RestrictedLieAlgebra::from_matrices(fp, labels, mats)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SemidirectKind {
    /// `S^*(V) / S^(>= j+1)(V)`.
    Truncated { j: usize },
    /// Exterior powers `Λ^r ⊕ Λ^(r+1)`.
    Exterior { r: usize },
    /// Degrees `r(p-1)` and `r(p-1) + 1` of `S^*(V) / (v^p)`.
    TopSymmetric { r: usize },
}

/// Exponent vectors with entries `< cap` and total degree in `degrees`,
/// by degree and then in decreasing lex order.
fn monomials(n: usize, degrees: &[usize], cap: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &d in degrees {
        let mut level = Vec::new();
        let mut cur = vec![0; n];
        fill(&mut cur, 0, d, cap, &mut level);
        out.extend(level);
    }
    out
}

fn fill(cur: &mut Vec<usize>, k: usize, left: usize, cap: usize, out: &mut Vec<Vec<usize>>) {
    if k + 1 == cur.len() {
        if left < cap {
            cur[k] = left;
            out.push(cur.clone());
        }
        return;
    }
    for a in (0..=left.min(cap - 1)).rev() {
        cur[k] = a;
        fill(cur, k + 1, left - a, cap, out);
    }
    cur[k] = 0;
}

/// Subsets of `0..n` of the given sizes, as sorted index lists.
fn wedges(n: usize, sizes: &[usize]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for &k in sizes {
        let mut level = Vec::new();
        subsets(n, k, 0, &mut Vec::new(), &mut level);
        out.extend(level);
    }
    out
}

fn subsets(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if cur.len() == k {
        out.push(cur.clone());
        return;
    }
    for i in start..n {
        cur.push(i);
        subsets(n, k, i + 1, cur, out);
        cur.pop();
    }
}

fn symmetric_module(fp: Fp, n: usize, basis: &[Vec<usize>], label: String) -> Result<UModule> {
    let dim = basis.len();
    let index = |e: &[usize]| basis.iter().position(|b| b == e);
    let mut actions = Vec::new();
    for i in 0..n {
        let mut a = Matrix::zeros(&fp, dim, dim);
        for (c, e) in basis.iter().enumerate() {
            let mut f = e.clone();
            f[i] += 1;
            if let Some(r) = index(&f) {
                a.set(r, c, 1);
            }
        }
        actions.push(a);
    }
    for i in 0..n {
        for j in 0..n {
            // x_i ∂_j
            let mut a = Matrix::zeros(&fp, dim, dim);
            for (c, e) in basis.iter().enumerate() {
                if e[j] == 0 {
                    continue;
                }
                let mut f = e.clone();
                f[j] -= 1;
                f[i] += 1;
                if let Some(r) = index(&f) {
                    let v = fp.add(a.get(r, c), &fp.reduce(e[j] as u64));
                    a.set(r, c, v);
                }
            }
            actions.push(a);
        }
    }
    UModule::new(fp, label, dim, actions)
}

/// Sign of inserting `i` into the sorted list `s`, with the new sorted list.
fn wedge_insert(s: &[usize], i: usize) -> Option<(bool, Vec<usize>)> {
    if s.contains(&i) {
        return None;
    }
    let before = s.iter().filter(|&&x| x < i).count();
    let mut t = s.to_vec();
    t.insert(before, i);
    Some((before % 2 == 1, t))
}

fn exterior_module(fp: Fp, n: usize, basis: &[Vec<usize>], label: String) -> Result<UModule> {
    let dim = basis.len();
    let index = |e: &[usize]| basis.iter().position(|b| b == e);
    let signed = |neg: bool| if neg { fp.neg(&1) } else { 1 };
    let mut actions = Vec::new();
    for i in 0..n {
        let mut a = Matrix::zeros(&fp, dim, dim);
        for (c, s) in basis.iter().enumerate() {
            if let Some((neg, t)) = wedge_insert(s, i) {
                if let Some(r) = index(&t) {
                    a.set(r, c, signed(neg));
                }
            }
        }
        actions.push(a);
    }
    for i in 0..n {
        for j in 0..n {
            // replace v_j by v_i in place
            let mut a = Matrix::zeros(&fp, dim, dim);
            for (c, s) in basis.iter().enumerate() {
                let Some(pos) = s.iter().position(|&x| x == j) else { continue };
                let mut rest = s.clone();
                rest.remove(pos);
                let Some((neg_in, t)) = wedge_insert(&rest, i) else { continue };
                // removing v_j from position pos costs (-1)^pos
                let neg = neg_in ^ (pos % 2 == 1);
                if let Some(r) = index(&t) {
                    let v = fp.add(a.get(r, c), &signed(neg));
                    a.set(r, c, v);
                }
            }
            actions.push(a);
        }
    }
    UModule::new(fp, label, dim, actions)
}

/// The algebra `g_(1,n)` with the requested module.
pub fn make_semidirect(n: usize, p: u64, kind: SemidirectKind) -> Result<(RestrictedLieAlgebra, UModule)> {
    let alg = semidirect_algebra(n, p)?;
    let fp = alg.fp();
    let pu = p as usize;
    let m = match kind {
        SemidirectKind::Truncated { j } => {
            if j == 0 || j > pu - 1 {
                return Err(Error::InvalidParameter(format!("need 1 <= j <= p - 1, got {j}")));
            }
            let degs: Vec<usize> = (0..=j).collect();
            symmetric_module(fp, n, &monomials(n, &degs, pu), format!("S(V)/S>={} (n = {n})", j + 1))?
        }
        SemidirectKind::Exterior { r } => {
            if r == 0 || r >= n {
                return Err(Error::InvalidParameter(format!("need 1 <= r < n, got r = {r}")));
            }
            exterior_module(fp, n, &wedges(n, &[r, r + 1]), format!("wedge^{r} + wedge^{} (n = {n})", r + 1))?
        }
        SemidirectKind::TopSymmetric { r } => {
            if r == 0 || r > n {
                return Err(Error::InvalidParameter(format!("need 1 <= r <= n, got r = {r}")));
            }
            let d = r * (pu - 1);
            symmetric_module(
                fp,
                n,
                &monomials(n, &[d, d + 1], pu),
                format!("truncated S(V) in degrees {d}, {} (n = {n})", d + 1),
            )?
        }
    };
    Ok((alg, m))
}

/// `(s : t) ↦ span(s v_1 + t v_2)`, a line in `Grass(1, V)`.
pub fn semidirect_line(alg: &RestrictedLieAlgebra, n: usize) -> Result<P1Param> {
    if n < 2 {
        return Err(Error::InvalidParameter("a line in P(V) needs n >= 2".into()));
    }
    let r2 = PolyRing::new(alg.fp(), 2)?;
    let mut col = vec![r2.zero(); alg.dim()];
    col[0] = r2.var(0);
    col[1] = r2.var(1);
    P1Param::new(r2, alg.dim(), vec![col], "line (s:t) -> <s v1 + t v2>")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::validate_module;

    #[test]
    fn dimensions_and_validity() {
        let alg = semidirect_algebra(2, 5).unwrap();
        assert_eq!(alg.dim(), 6);
        assert!(alg.validate().passed());
        for kind in [
            SemidirectKind::Truncated { j: 2 },
            SemidirectKind::TopSymmetric { r: 1 },
        ] {
            let (a, m) = make_semidirect(2, 5, kind).unwrap();
            let rep = validate_module(&a, &m);
            assert!(rep.passed(), "{kind:?}: {:?}", rep.first_failure());
        }
        let (a, m) = make_semidirect(3, 5, SemidirectKind::Exterior { r: 1 }).unwrap();
        assert_eq!(m.dim(), 6);
        assert!(validate_module(&a, &m).passed());
        let (_, m) = make_semidirect(2, 5, SemidirectKind::TopSymmetric { r: 1 }).unwrap();
        // degree 4: five monomials, degree 5: four
        assert_eq!(m.dim(), 9);
    }
}
