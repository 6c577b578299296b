//! Duals, tensor products, symmetric and exterior powers, sums, subquotients
//! and pullbacks of modules.
//!
//! Symmetric and exterior powers use the lexicographically ordered monomial
//! bases (weakly resp. strictly increasing index tuples).

use std::collections::HashMap;

use super::module::UModule;
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Fp, Matrix, Ring};
use crate::liealg::{is_elementary, EPoint, RestrictedLieAlgebra};

use super::series::{rad_j, soc_j};

/// `ρ*(x) = -ρ(x)^T`.
pub fn dual(m: &UModule) -> UModule {
    let fp = m.fp();
    let actions = m.actions().iter().map(|a| a.transpose().neg(&fp)).collect();
    UModule::new(fp, format!("dual({})", m.label()), m.dim(), actions).expect("shapes")
}

/// `x (v ⊗ w) = x v ⊗ w + v ⊗ x w`, basis `e_i ⊗ f_j` at index `i * dim N + j`.
pub fn tensor(m: &UModule, n: &UModule) -> Result<UModule> {
    if m.n() != n.n() || m.fp() != n.fp() {
        return Err(Error::DimensionMismatch("modules for different algebras".into()));
    }
    let fp = m.fp();
    let im = Matrix::identity(&fp, m.dim());
    let inn = Matrix::identity(&fp, n.dim());
    let actions = m
        .actions()
        .iter()
        .zip(n.actions())
        .map(|(a, b)| a.kron(&fp, &inn).add(&fp, &im.kron(&fp, b)))
        .collect::<Result<Vec<_>>>()?;
    UModule::new(fp, format!("({})⊗({})", m.label(), n.label()), m.dim() * n.dim(), actions)
}

/// `M^{⊗k}`.
pub fn tensor_power(m: &UModule, k: usize) -> Result<UModule> {
    let mut acc = UModule::trivial(m.fp(), m.n(), 1).with_label("k");
    for _ in 0..k {
        acc = tensor(&acc, m)?;
    }
    Ok(acc.with_label(format!("({})^⊗{k}", m.label())))
}

fn tuples(dim: usize, k: usize, strict: bool) -> Vec<Vec<usize>> {
    fn rec(dim: usize, k: usize, start: usize, strict: bool, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..dim {
            cur.push(i);
            rec(dim, k, if strict { i + 1 } else { i }, strict, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(dim, k, 0, strict, &mut Vec::new(), &mut out);
    out
}

fn power_module(m: &UModule, k: usize, strict: bool) -> Result<UModule> {
    let fp = m.fp();
    let basis = tuples(m.dim(), k, strict);
    let index: HashMap<Vec<usize>, usize> = basis.iter().cloned().enumerate().map(|(i, t)| (t, i)).collect();
    let dim = basis.len();
    let mut actions = Vec::with_capacity(m.n());
    for a in m.actions() {
        let mut out = Matrix::zeros(&fp, dim, dim);
        for (col, t) in basis.iter().enumerate() {
            for pos in 0..k {
                let src = t[pos];
                for l in 0..m.dim() {
                    let c = *a.get(l, src);
                    if c == 0 {
                        continue;
                    }
                    let mut nt = t.clone();
                    nt[pos] = l;
                    let sign_neg = if strict {
                        if t.iter().enumerate().any(|(q, &x)| q != pos && x == l) {
                            continue;
                        }
                        // bubble l into place and count transpositions
                        let mut swaps = 0;
                        let mut p = pos;
                        while p > 0 && nt[p - 1] > nt[p] {
                            nt.swap(p - 1, p);
                            p -= 1;
                            swaps += 1;
                        }
                        while p + 1 < k && nt[p + 1] < nt[p] {
                            nt.swap(p + 1, p);
                            p += 1;
                            swaps += 1;
                        }
                        swaps % 2 == 1
                    } else {
                        nt.sort_unstable();
                        false
                    };
                    let row = index[&nt];
                    let c = if sign_neg { fp.neg(&c) } else { c };
                    let v = fp.add(out.get(row, col), &c);
                    out.set(row, col, v);
                }
            }
        }
        actions.push(out);
    }
    let name = if strict { "Λ" } else { "S" };
    UModule::new(fp, format!("{name}^{k}({})", m.label()), dim, actions)
}

/// `S^k(M)`.
pub fn sym_power(m: &UModule, k: usize) -> Result<UModule> {
    power_module(m, k, false)
}

/// `Λ^k(M)`.
pub fn ext_power(m: &UModule, k: usize) -> Result<UModule> {
    power_module(m, k, true)
}

pub fn direct_sum(m: &UModule, n: &UModule) -> Result<UModule> {
    if m.n() != n.n() || m.fp() != n.fp() {
        return Err(Error::DimensionMismatch("modules for different algebras".into()));
    }
    let fp = m.fp();
    let d = m.dim() + n.dim();
    let actions = m
        .actions()
        .iter()
        .zip(n.actions())
        .map(|(a, b)| {
            Matrix::from_fn(d, d, |i, j| {
                if i < m.dim() && j < m.dim() {
                    *a.get(i, j)
                } else if i >= m.dim() && j >= m.dim() {
                    *b.get(i - m.dim(), j - m.dim())
                } else {
                    0
                }
            })
        })
        .collect();
    UModule::new(fp, format!("({})⊕({})", m.label(), n.label()), d, actions)
}

/// The action on an invariant subspace with basis the columns of `basis`.
pub fn submodule(m: &UModule, basis: &Matrix<u64>) -> Result<UModule> {
    let fp = m.fp();
    let li = linalg::left_inverse(&fp, basis)?;
    let mut actions = Vec::with_capacity(m.n());
    for a in m.actions() {
        let img = a.mul(&fp, basis)?;
        let coords = li.mul(&fp, &img)?;
        if basis.mul(&fp, &coords)? != img {
            return Err(Error::InvalidParameter("subspace is not invariant".into()));
        }
        actions.push(coords);
    }
    UModule::new(fp, format!("sub({})", m.label()), basis.cols(), actions)
}

/// Pullback along a linear map `g -> h` given by the `dim h x dim g` matrix
/// `proj` (column `i` = image of `x_i`).
pub fn pullback(m: &UModule, proj: &Matrix<u64>) -> Result<UModule> {
    let fp = m.fp();
    if proj.rows() != m.n() {
        return Err(Error::DimensionMismatch("projection target does not match module".into()));
    }
    let actions = (0..proj.cols()).map(|i| m.action(&fp, &proj.column(i))).collect();
    UModule::new(fp, format!("pullback({})", m.label()), m.dim(), actions)
}

/// The module for the algebra with new basis the columns of `q`.
pub fn rebase(m: &UModule, q: &Matrix<u64>) -> Result<UModule> {
    pullback(m, q)
}

/// `dim Soc^j(ε*M^#) + dim Rad^j(ε*M) == dim M`.
pub fn duality_check(alg: &RestrictedLieAlgebra, m: &UModule, eps: &EPoint, j: usize) -> Result<bool> {
    if !is_elementary(alg, eps)? {
        return Err(Error::NotElementary(format!("{eps:?}")));
    }
    let soc = soc_j(alg, &dual(m), eps, j)?.cols();
    let rad = rad_j(alg, m, eps, j)?.cols();
    Ok(soc + rad == m.dim())
}

/// Helper for tests and the catalog: `F_p` matrix from integer rows.
pub fn int_matrix(fp: &Fp, rows: &[&[i64]]) -> Matrix<u64> {
    Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| fp.from_i64(x)).collect()).collect())
        .expect("rectangular")
}

/// The adjoint module: `x_i` acts by `ad x_i`.
pub fn adjoint_module(alg: &RestrictedLieAlgebra) -> UModule {
    let fp = alg.fp();
    let actions = (0..alg.dim()).map(|i| alg.ad(&fp, &alg.basis_vector(&fp, i))).collect();
    UModule::new(fp, "adjoint", alg.dim(), actions).expect("square actions")
}

/// The defining module of a matrix realization.
pub fn realization_module(alg: &RestrictedLieAlgebra) -> Option<UModule> {
    let mats = alg.realization()?.to_vec();
    let n = mats.first().map_or(0, |m| m.rows());
    UModule::new(alg.fp(), "defining", n, mats).ok()
}
