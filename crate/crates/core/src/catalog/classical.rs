//! Classical matrix algebras with their defining modules, and the
//! cominuscule parabolics with their bracket identities.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Fp, Matrix};
use crate::liealg::classical::{classical_algebra, nilradical_indices, Family};
use crate::liealg::RestrictedLieAlgebra;
use crate::modrep::constructions::realization_module;
use crate::modrep::UModule;

/// The algebra and its defining module.
pub fn make_classical(family: Family, n: usize, p: u64) -> Result<(RestrictedLieAlgebra, UModule)> {
    let alg = classical_algebra(family, n, p)?;
    let m = realization_module(&alg)
        .ok_or_else(|| Error::InvariantViolation("classical algebra without realization".into()))?
        .with_label(format!("{}_{n} defining", family_name(family)));
    Ok((alg, m))
}

pub fn family_name(f: Family) -> &'static str {
    match f {
        Family::Gl => "gl",
        Family::Sl => "sl",
        Family::Sp => "sp",
        Family::So => "so",
    }
}

/// One row of the list of cominuscule parabolics.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CominusculeEntry {
    pub root_system: String,
    pub roots: String,
    /// Dimension of the nilradical as a formula in the rank `n` (and the
    /// root index `k` for type A).
    pub nilradical_dim: String,
    /// `(family, r)` for [`cominuscule_identities`] when a constructor is
    /// available.
    pub constructor: Option<(Family, String)>,
}

pub fn cominuscule_table() -> Vec<CominusculeEntry> {
    let e = |rs: &str, roots: &str, dim: &str, c: Option<(Family, &str)>| CominusculeEntry {
        root_system: rs.into(),
        roots: roots.into(),
        nilradical_dim: dim.into(),
        constructor: c.map(|(f, r)| (f, r.to_string())),
    };
    vec![
        e("A_n", "alpha_k, 1 <= k <= n", "k(n+1-k)", Some((Family::Sl, "r = k, n + 1 rows"))),
        e("B_n", "alpha_1", "2n-1", Some((Family::So, "r = 1"))),
        e("C_n", "alpha_n", "n(n+1)/2", Some((Family::Sp, "r = n"))),
        e("D_n", "alpha_1", "2n-2", None),
        e("D_n", "alpha_(n-1), alpha_n", "n(n-1)/2", None),
        e("E_6", "alpha_1, alpha_6", "16", None),
        e("E_7", "alpha_7", "27", None),
    ]
}

/// Dimensions of the subspaces entering the cominuscule identities, each
/// computed as the span of brackets of basis vectors.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CominusculeReport {
    pub family: Family,
    pub n: usize,
    pub r: usize,
    pub p: u64,
    pub dim_g: usize,
    pub dim_u: usize,
    /// The normalizer of `u`, i.e. the parabolic `p`.
    pub dim_p: usize,
    pub dim_u_p: usize,
    pub dim_u_g: usize,
    pub dim_u_u_g: usize,
    pub dim_centralizer: usize,
    pub u_is_abelian: bool,
    /// `[u, p] = u`.
    pub up_equals_u: bool,
    /// `[u, g] = p`.
    pub ug_equals_p: bool,
    /// `[u, [u, g]] = u`.
    pub uug_equals_u: bool,
    /// `C_g(u) = u`.
    pub centralizer_equals_u: bool,
}

/// Column span of all `[a, b]` for `a` in the columns of `x`, `b` in the
/// columns of `y`.
pub fn bracket_span(alg: &RestrictedLieAlgebra, x: &Matrix<u64>, y: &Matrix<u64>) -> Matrix<u64> {
    let fp = alg.fp();
    let mut cols = Vec::new();
    for a in x.columns() {
        for b in y.columns() {
            cols.push(alg.bracket(&fp, &a, &b));
        }
    }
    if cols.is_empty() {
        return Matrix::zeros(&fp, alg.dim(), 0);
    }
    linalg::column_space(&fp, &Matrix::from_columns(alg.dim(), &cols))
}

/// `{x : [x, u] ⊆ u}` when `want_normalizer`, else `{x : [x, u] = 0}`.
fn stabilizer(alg: &RestrictedLieAlgebra, u: &Matrix<u64>, want_normalizer: bool) -> Matrix<u64> {
    let fp = alg.fp();
    let n = alg.dim();
    // rows: for each basis vector b of u, the coordinates of [x, b] modulo u
    let proj = if want_normalizer { complement_projection(&fp, u) } else { Matrix::identity(&fp, n) };
    let mut blocks = Vec::new();
    for b in u.columns() {
        // x ↦ [x, b] = -ad(b) x
        let adb = alg.ad(&fp, &b).neg(&fp);
        blocks.push(proj.mul(&fp, &adb).expect("shapes"));
    }
    if blocks.is_empty() {
        return Matrix::identity(&fp, n);
    }
    linalg::kernel(&fp, &Matrix::vstack(&blocks).expect("widths"))
}

/// A matrix whose kernel is exactly the column span of `u`.
fn complement_projection(fp: &Fp, u: &Matrix<u64>) -> Matrix<u64> {
    // rows of a basis of the left kernel of u
    linalg::kernel(fp, &u.transpose()).transpose()
}

fn same_span(fp: &Fp, a: &Matrix<u64>, b: &Matrix<u64>) -> bool {
    linalg::same_column_span(fp, a, b)
}

/// The bracket identities for the nilradical of the standard parabolic of
/// a family (see [`nilradical_indices`]).
pub fn cominuscule_identities(family: Family, n: usize, r: usize, p: u64) -> Result<CominusculeReport> {
    let alg = classical_algebra(family, n, p)?;
    let fp = alg.fp();
    let dim = alg.dim();
    let idx = nilradical_indices(family, n, r)?;
    let u = Matrix::from_fn(dim, idx.len(), |i, k| u64::from(i == idx[k]));
    let g = Matrix::identity(&fp, dim);
    let par = stabilizer(&alg, &u, true);
    let cent = stabilizer(&alg, &u, false);
    let uu = bracket_span(&alg, &u, &u);
    let up = bracket_span(&alg, &u, &par);
    let ug = bracket_span(&alg, &u, &g);
    let uug = bracket_span(&alg, &u, &ug);
    Ok(CominusculeReport {
        family,
        n,
        r,
        p,
        dim_g: dim,
        dim_u: u.cols(),
        dim_p: par.cols(),
        dim_u_p: up.cols(),
        dim_u_g: ug.cols(),
        dim_u_u_g: uug.cols(),
        dim_centralizer: cent.cols(),
        u_is_abelian: uu.cols() == 0,
        up_equals_u: same_span(&fp, &up, &u),
        ug_equals_p: same_span(&fp, &ug, &par),
        uug_equals_u: same_span(&fp, &uug, &u),
        centralizer_equals_u: same_span(&fp, &cent, &u),
    })
}
