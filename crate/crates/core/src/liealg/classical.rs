//! The matrix families gl_n, sl_n, sp_2n with fixed bases, and the
//! nilradicals of their standard maximal parabolics.
//!
//! Bases:
//! - gl_n: `E_ij`, row-major.
//! - sl_n: off-diagonal `E_ij` row-major, then `H_i = E_ii - E_(i+1)(i+1)`.
//! - sp_2n (form `[[0, I], [-I, 0]]`): `E_ij - E_(j+n)(i+n)` row-major, then
//!   the upper symmetric block `t_ij` (`E_(i)(i+n)` on the diagonal,
//!   `E_(i)(j+n) + E_(j)(i+n)` for `i < j`), then its transpose.
//! - so_(2n+1) (form with ones on the antidiagonal, `i' = 2n - i`):
//!   `E_ij - E_(j')(i')` for `i + j < 2n`, row-major.
//!
//! Indices in labels are 1-based.

use serde::{Deserialize, Serialize};

use super::algebra::RestrictedLieAlgebra;
use super::point::EPoint;
use crate::error::{Error, Result};
use crate::exact::{Fp, Gf, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Gl,
    Sl,
    Sp,
    So,
}

impl std::str::FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gl" => Ok(Family::Gl),
            "sl" => Ok(Family::Sl),
            "sp" => Ok(Family::Sp),
            "so" => Ok(Family::So),
            _ => Err(Error::InvalidParameter(format!("unknown family {s:?}"))),
        }
    }
}

fn unit(n: usize, i: usize, j: usize) -> Matrix<u64> {
    Matrix::from_fn(n, n, |a, b| u64::from(a == i && b == j))
}

fn plus(fp: &Fp, a: &Matrix<u64>, b: &Matrix<u64>) -> Matrix<u64> {
    a.add(fp, b).expect("same shape")
}

fn minus(fp: &Fp, a: &Matrix<u64>, b: &Matrix<u64>) -> Matrix<u64> {
    a.sub(fp, b).expect("same shape")
}

/// Basis matrices and labels of a family, in the documented order.
pub fn family_basis(family: Family, n: usize, fp: &Fp) -> Result<(Vec<String>, Vec<Matrix<u64>>)> {
    if n == 0 {
        return Err(Error::InvalidParameter("rank must be positive".into()));
    }
    let mut labels = Vec::new();
    let mut mats = Vec::new();
    match family {
        Family::Gl => {
            for i in 0..n {
                for j in 0..n {
                    labels.push(format!("E{}{}", i + 1, j + 1));
                    mats.push(unit(n, i, j));
                }
            }
        }
        Family::Sl => {
            if n < 2 {
                return Err(Error::InvalidParameter("sl_n needs n >= 2".into()));
            }
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        labels.push(format!("E{}{}", i + 1, j + 1));
                        mats.push(unit(n, i, j));
                    }
                }
            }
            for i in 0..n - 1 {
                labels.push(format!("H{}", i + 1));
                mats.push(minus(fp, &unit(n, i, i), &unit(n, i + 1, i + 1)));
            }
        }
        Family::Sp => {
            let m = 2 * n;
            for i in 0..n {
                for j in 0..n {
                    labels.push(format!("A{}{}", i + 1, j + 1));
                    mats.push(minus(fp, &unit(m, i, j), &unit(m, j + n, i + n)));
                }
            }
            for i in 0..n {
                for j in i..n {
                    labels.push(format!("t{},{}", i + 1, j + n + 1));
                    if i == j {
                        mats.push(unit(m, i, i + n));
                    } else {
                        mats.push(plus(fp, &unit(m, i, j + n), &unit(m, j, i + n)));
                    }
                }
            }
            for i in 0..n {
                for j in i..n {
                    labels.push(format!("c{},{}", j + n + 1, i + 1));
                    if i == j {
                        mats.push(unit(m, i + n, i));
                    } else {
                        mats.push(plus(fp, &unit(m, j + n, i), &unit(m, i + n, j)));
                    }
                }
            }
        }
        Family::So => {
            let m = 2 * n + 1;
            for i in 0..m {
                for j in 0..m {
                    if i + j < m - 1 {
                        labels.push(format!("X{}{}", i + 1, j + 1));
                        mats.push(minus(fp, &unit(m, i, j), &unit(m, m - 1 - j, m - 1 - i)));
                    }
                }
            }
        }
    }
    Ok((labels, mats))
}

/// The algebra of a family with its defining matrices as realization.
pub fn classical_algebra(family: Family, n: usize, p: u64) -> Result<RestrictedLieAlgebra> {
    let fp = Fp::new(p)?;
    let (labels, mats) = family_basis(family, n, &fp)?;
    RestrictedLieAlgebra::from_matrices(fp, labels, mats)
}

/// Size of the defining representation.
pub fn defining_size(family: Family, n: usize) -> usize {
    match family {
        Family::Gl | Family::Sl => n,
        Family::Sp | Family::So => 2 * n + usize::from(family == Family::So),
    }
}

/// Basis indices spanning the nilradical of the standard maximal parabolic:
/// for gl_n/sl_n the block `u_(r, n-r)` of matrices supported in the top `r`
/// rows and right-most `n - r` columns; for sp_2n (with `r = n`, the long
/// simple root) the upper symmetric block; for so_(2n+1) (with `r = 1`, the
/// first simple root) the first row.
pub fn nilradical_indices(family: Family, n: usize, r: usize) -> Result<Vec<usize>> {
    match family {
        Family::Gl | Family::Sl => {
            if r == 0 || r >= n {
                return Err(Error::InvalidParameter(format!("need 0 < r < n, got r = {r}, n = {n}")));
            }
            let fp = Fp::new(3)?;
            let (labels, _) = family_basis(family, n, &fp)?;
            let mut out = Vec::new();
            for i in 0..r {
                for j in r..n {
                    let want = format!("E{}{}", i + 1, j + 1);
                    out.push(labels.iter().position(|l| *l == want).expect("label exists"));
                }
            }
            Ok(out)
        }
        Family::Sp => {
            if r != n {
                return Err(Error::InvalidParameter(format!(
                    "only the parabolic of the long simple root (r = n = {n}) is supported"
                )));
            }
            let start = n * n;
            Ok((start..start + n * (n + 1) / 2).collect())
        }
        Family::So => {
            if r != 1 {
                return Err(Error::InvalidParameter("only the parabolic of the first simple root (r = 1) is supported".into()));
            }
            Ok((1..2 * n).collect())
        }
    }
}

/// The nilradical as a point of E(dim u, g) over `field`.
pub fn nilradical_of_parabolic(family: Family, n: usize, r: usize, field: &Gf) -> Result<EPoint> {
    let idx = nilradical_indices(family, n, r)?;
    let dim = classical_dim(family, n);
    let cols: Vec<Vec<u64>> =
        idx.iter().map(|&k| (0..dim).map(|i| u64::from(i == k)).collect()).collect();
    EPoint::from_prime_columns(field, dim, &cols)
}

pub fn classical_dim(family: Family, n: usize) -> usize {
    match family {
        Family::Gl => n * n,
        Family::Sl => n * n - 1,
        Family::Sp | Family::So => 2 * n * n + n,
    }
}

/// Indices of root vectors (off-diagonal basis elements), usable as orbit
/// generators.
pub fn root_vector_indices(family: Family, n: usize) -> Vec<usize> {
    match family {
        Family::Gl => (0..n * n).filter(|k| k / n != k % n).collect(),
        Family::Sl => (0..n * (n - 1)).collect(),
        Family::Sp => {
            let a: Vec<usize> = (0..n * n).filter(|k| k / n != k % n).collect();
            a.into_iter().chain(n * n..2 * n * n + n).collect()
        }
        Family::So => {
            let m = 2 * n + 1;
            let mut out = Vec::new();
            let mut k = 0;
            for i in 0..m {
                for j in 0..m {
                    if i + j < m - 1 {
                        if i != j {
                            out.push(k);
                        }
                        k += 1;
                    }
                }
            }
            out
        }
    }
}
