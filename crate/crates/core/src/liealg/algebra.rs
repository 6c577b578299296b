//! Restricted Lie algebras given by structure constants and p-powers of a basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Field, Fp, Matrix, Ring};

/// A finite-dimensional restricted Lie algebra over `F_p`.
#[derive(Clone, Debug)]
pub struct RestrictedLieAlgebra {
    fp: Fp,
    n: usize,
    labels: Vec<String>,
    /// `c[(i * n + j) * n + k]` is the coefficient of `x_k` in `[x_i, x_j]`.
    c: Vec<u64>,
    /// Nonzero structure constants `(i, j, k, c)`.
    nz: Vec<(usize, usize, usize, u64)>,
    p_power: Vec<Vec<u64>>,
    realization: Option<Vec<Matrix<u64>>>,
}

/// Outcome of one named check.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize, PartialEq, Eq)]
pub struct ValidationReport {
    pub checks: Vec<Check>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn push(&mut self, name: &str, witness: Option<String>) {
        self.checks.push(Check { name: name.to_string(), passed: witness.is_none(), witness });
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

impl RestrictedLieAlgebra {
    /// Builds an algebra from dense structure constants (`c[i][j]` is the
    /// coordinate vector of `[x_i, x_j]`) and p-powers. No axioms are checked;
    /// see [`RestrictedLieAlgebra::validate`].
    pub fn new(
        fp: Fp,
        labels: Vec<String>,
        brackets: Vec<Vec<Vec<u64>>>,
        p_power: Vec<Vec<u64>>,
        realization: Option<Vec<Matrix<u64>>>,
    ) -> Result<Self> {
        let n = labels.len();
        if brackets.len() != n || brackets.iter().any(|r| r.len() != n || r.iter().any(|v| v.len() != n)) {
            return Err(Error::DimensionMismatch(format!("bracket table is not {n}x{n}x{n}")));
        }
        if p_power.len() != n || p_power.iter().any(|v| v.len() != n) {
            return Err(Error::DimensionMismatch(format!("p-power table is not {n}x{n}")));
        }
        if let Some(mats) = &realization {
            let big = mats.first().map_or(0, |m| m.rows());
            if mats.len() != n || mats.iter().any(|m| m.shape() != (big, big)) {
                return Err(Error::DimensionMismatch(
                    "realization must give one square matrix per basis vector".into(),
                ));
            }
        }
        let mut c = Vec::with_capacity(n * n * n);
        for row in &brackets {
            for v in row {
                c.extend(v.iter().map(|&x| fp.reduce(x)));
            }
        }
        let p_power = p_power.into_iter().map(|v| v.into_iter().map(|x| fp.reduce(x)).collect()).collect();
        let realization = realization.map(|ms| ms.into_iter().map(|m| m.map(|&x| fp.reduce(x))).collect());
        let mut alg = RestrictedLieAlgebra { fp, n, labels, c, nz: Vec::new(), p_power, realization };
        alg.rebuild_sparse();
        Ok(alg)
    }

    fn rebuild_sparse(&mut self) {
        let n = self.n;
        self.nz.clear();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let v = self.c[(i * n + j) * n + k];
                    if v != 0 {
                        self.nz.push((i, j, k, v));
                    }
                }
            }
        }
    }

    /// Builds an algebra from a faithful matrix realization: structure
    /// constants and p-powers are read off by solving in the span of the
    /// basis matrices.
    pub fn from_matrices(fp: Fp, labels: Vec<String>, mats: Vec<Matrix<u64>>) -> Result<Self> {
        let n = mats.len();
        if labels.len() != n {
            return Err(Error::DimensionMismatch("one label per matrix".into()));
        }
        let coords = SpanCoordinates::new(fp, &mats)?;
        let mut brackets = vec![vec![vec![0u64; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let com = mats[i].commutator(&fp, &mats[j])?;
                brackets[i][j] = coords.solve(&com).ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "commutator of {} and {} leaves the span",
                        labels[i], labels[j]
                    ))
                })?;
            }
        }
        let mut p_power = Vec::with_capacity(n);
        for (i, m) in mats.iter().enumerate() {
            let pw = m.pow(&fp, fp.p())?;
            p_power.push(coords.solve(&pw).ok_or_else(|| {
                Error::InvalidParameter(format!("p-th power of {} leaves the span", labels[i]))
            })?);
        }
        Self::new(fp, labels, brackets, p_power, Some(mats))
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn p(&self) -> u64 {
        self.fp.p()
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn realization(&self) -> Option<&[Matrix<u64>]> {
        self.realization.as_deref()
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> u64 {
        self.c[(i * self.n + j) * self.n + k]
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[u64] {
        let s = (i * self.n + j) * self.n;
        &self.c[s..s + self.n]
    }

    pub fn p_power_basis(&self, i: usize) -> &[u64] {
        &self.p_power[i]
    }

    /// Overwrites one structure constant (without restoring antisymmetry).
    pub fn set_structure_constant(&mut self, i: usize, j: usize, k: usize, v: u64) {
        let n = self.n;
        self.c[(i * n + j) * n + k] = self.fp.reduce(v);
        self.rebuild_sparse();
    }

    pub fn set_p_power(&mut self, i: usize, v: Vec<u64>) {
        self.p_power[i] = v.into_iter().map(|x| self.fp.reduce(x)).collect();
    }

    pub fn basis_vector<F: Ring>(&self, field: &F, i: usize) -> Vec<F::Elem> {
        (0..self.n).map(|k| if k == i { field.one() } else { field.zero() }).collect()
    }

    /// `[a, b]` for coordinate vectors over any field containing `F_p`.
    pub fn bracket<F: Ring>(&self, field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let mut out = vec![field.zero(); self.n];
        for &(i, j, k, c) in &self.nz {
            if field.is_zero(&a[i]) || field.is_zero(&b[j]) {
                continue;
            }
            let t = field.mul(&field.mul(&a[i], &b[j]), &field.from_u64(c));
            out[k] = field.add(&out[k], &t);
        }
        out
    }

    /// Matrix of `ad v` in the basis.
    pub fn ad<F: Ring>(&self, field: &F, v: &[F::Elem]) -> Matrix<F::Elem> {
        let cols: Vec<Vec<F::Elem>> =
            (0..self.n).map(|j| self.bracket(field, v, &self.basis_vector(field, j))).collect();
        Matrix::from_columns(self.n, &cols)
    }

    /// `v^[p]` for an arbitrary element, by Jacobson's formula applied one
    /// basis term at a time: `(a + b)^[p] = a^[p] + b^[p] + Σ s_i(a, b)` where
    /// `i s_i(a, b)` is the coefficient of `t^(i-1)` in `ad(ta + b)^(p-1)(a)`.
    pub fn p_power<F: Field>(&self, field: &F, v: &[F::Elem]) -> Vec<F::Elem> {
        let p = self.p();
        let mut acc: Option<(Vec<F::Elem>, Vec<F::Elem>)> = None; // (partial sum, its p-power)
        for (i, lam) in v.iter().enumerate() {
            if field.is_zero(lam) {
                continue;
            }
            let term: Vec<F::Elem> = (0..self.n)
                .map(|k| if k == i { lam.clone() } else { field.zero() })
                .collect();
            let lam_p = field.pow(lam, p);
            let term_pp: Vec<F::Elem> =
                self.p_power[i].iter().map(|&c| field.mul(&lam_p, &field.from_u64(c))).collect();
            acc = Some(match acc {
                None => (term, term_pp),
                Some((a, a_pp)) => {
                    let corr = self.jacobson_correction(field, &a, &term);
                    let sum = add_vec(field, &a, &term);
                    let pp = add_vec(field, &add_vec(field, &a_pp, &term_pp), &corr);
                    (sum, pp)
                }
            });
        }
        acc.map_or_else(|| vec![field.zero(); self.n], |(_, pp)| pp)
    }

    /// `Σ_{i=1}^{p-1} s_i(a, b)`.
    pub fn jacobson_correction<F: Field>(&self, field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
        let p = self.p() as usize;
        // w[k] = coefficient of t^k
        let mut w: Vec<Vec<F::Elem>> = vec![a.to_vec()];
        for _ in 0..p - 1 {
            let mut next = vec![vec![field.zero(); self.n]; w.len() + 1];
            for (k, wk) in w.iter().enumerate() {
                let bw = self.bracket(field, b, wk);
                next[k] = add_vec(field, &next[k], &bw);
                let aw = self.bracket(field, a, wk);
                next[k + 1] = add_vec(field, &next[k + 1], &aw);
            }
            w = next;
        }
        let mut out = vec![field.zero(); self.n];
        for i in 1..p {
            let inv_i = field.inv(&field.from_u64(i as u64)).expect("i < p");
            if let Some(coef) = w.get(i - 1) {
                for (o, c) in out.iter_mut().zip(coef) {
                    *o = field.add(o, &field.mul(c, &inv_i));
                }
            }
        }
        out
    }

    /// Checks antisymmetry, the Jacobi identity, restrictedness on the basis
    /// and agreement with the matrix realization when present.
    pub fn validate(&self) -> ValidationReport {
        let mut rep = ValidationReport::default();
        let fp = self.fp;
        let n = self.n;
        let lab = |i: usize| self.labels[i].clone();

        let mut w = None;
        'anti: for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    let a = self.structure_constant(i, j, k);
                    let b = self.structure_constant(j, i, k);
                    if fp.add(&a, &b) != 0 {
                        w = Some(format!("[{}, {}] != -[{}, {}]", lab(i), lab(j), lab(j), lab(i)));
                        break 'anti;
                    }
                }
            }
        }
        rep.push("antisymmetry", w);

        let mut w = None;
        'jac: for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (xi, xj, xk) =
                        (self.basis_vector(&fp, i), self.basis_vector(&fp, j), self.basis_vector(&fp, k));
                    let t1 = self.bracket(&fp, &xi, &self.bracket(&fp, &xj, &xk));
                    let t2 = self.bracket(&fp, &xj, &self.bracket(&fp, &xk, &xi));
                    let t3 = self.bracket(&fp, &xk, &self.bracket(&fp, &xi, &xj));
                    let s = add_vec(&fp, &add_vec(&fp, &t1, &t2), &t3);
                    if s.iter().any(|&x| x != 0) {
                        w = Some(format!("Jacobi fails on ({}, {}, {})", lab(i), lab(j), lab(k)));
                        break 'jac;
                    }
                }
            }
        }
        rep.push("jacobi", w);

        let mut w = None;
        for i in 0..n {
            let adp = self.ad(&fp, &self.p_power[i]);
            let pow = self.ad(&fp, &self.basis_vector(&fp, i)).pow(&fp, self.p()).expect("square");
            if adp != pow {
                w = Some(format!("ad({}^[p]) != ad({})^p", lab(i), lab(i)));
                break;
            }
        }
        rep.push("restricted", w);

        if let Some(mats) = &self.realization {
            let big = mats[0].rows();
            let mut w = None;
            'real: for i in 0..n {
                for j in 0..n {
                    let com = mats[i].commutator(&fp, &mats[j]).expect("square");
                    let terms: Vec<(u64, &Matrix<u64>)> =
                        self.bracket_basis(i, j).iter().copied().zip(mats.iter()).collect();
                    let lin = Matrix::combination(&fp, big, big, &terms).expect("shapes");
                    if com != lin {
                        w = Some(format!("realization: commutator of ({}, {}) disagrees", lab(i), lab(j)));
                        break 'real;
                    }
                }
            }
            rep.push("realization_bracket", w);
            let mut w = None;
            for (i, m) in mats.iter().enumerate() {
                let pw = m.pow(&fp, self.p()).expect("square");
                let terms: Vec<(u64, &Matrix<u64>)> =
                    self.p_power[i].iter().copied().zip(mats.iter()).collect();
                let lin = Matrix::combination(&fp, big, big, &terms).expect("shapes");
                if pw != lin {
                    w = Some(format!("realization: p-th power of {} disagrees", lab(i)));
                    break;
                }
            }
            rep.push("realization_p_power", w);
        }
        rep
    }

    /// Image of the algebra under a change of basis: the new basis vectors are
    /// the columns of `q` (invertible, `n x n`). Constants are recomputed.
    pub fn change_basis(&self, q: &Matrix<u64>) -> Result<(Self, Matrix<u64>)> {
        let fp = self.fp;
        let qinv = linalg::inverse(&fp, q).ok_or(Error::RankDeficient)?;
        let n = self.n;
        let cols = q.columns();
        let mut brackets = vec![vec![vec![0u64; n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let b = self.bracket(&fp, &cols[i], &cols[j]);
                brackets[i][j] = qinv.mul_vec(&fp, &b)?;
            }
        }
        let p_power = cols
            .iter()
            .map(|c| qinv.mul_vec(&fp, &self.p_power(&fp, c)))
            .collect::<Result<Vec<_>>>()?;
        let realization = match &self.realization {
            None => None,
            Some(mats) => {
                let big = mats[0].rows();
                let mut out = Vec::with_capacity(n);
                for c in &cols {
                    let terms: Vec<(u64, &Matrix<u64>)> = c.iter().copied().zip(mats.iter()).collect();
                    out.push(Matrix::combination(&fp, big, big, &terms)?);
                }
                Some(out)
            }
        };
        let labels = (0..n).map(|i| format!("b{i}")).collect();
        Ok((Self::new(fp, labels, brackets, p_power, realization)?, qinv))
    }

    pub fn to_json(&self) -> AlgebraJson {
        let n = self.n;
        let mut brackets = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v: Vec<(usize, i64)> = self
                    .bracket_basis(i, j)
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (k, c as i64))
                    .collect();
                if !v.is_empty() {
                    brackets.push((i, j, v));
                }
            }
        }
        let p_powers = (0..n)
            .filter_map(|i| {
                let v: Vec<(usize, i64)> = self.p_power[i]
                    .iter()
                    .enumerate()
                    .filter(|(_, &c)| c != 0)
                    .map(|(k, &c)| (k, c as i64))
                    .collect();
                (!v.is_empty()).then_some((i, v))
            })
            .collect();
        let matrix_realization = self.realization.as_ref().map(|ms| RealizationJson {
            size: ms[0].rows(),
            mats: ms.iter().map(|m| m.map(|&x| x as i64).to_rows()).collect(),
        });
        AlgebraJson {
            p: self.p(),
            dim: n,
            labels: self.labels.clone(),
            brackets,
            p_powers,
            matrix_realization,
        }
    }

    /// Reads the JSON form. Brackets listed for `(i, j)` imply `(j, i)` by
    /// antisymmetry unless `(j, i)` is listed too.
    pub fn from_json(j: &AlgebraJson) -> Result<Self> {
        let fp = Fp::new(j.p)?;
        let n = j.dim;
        if j.labels.len() != n {
            return Err(Error::Malformed(format!("{} labels for dimension {n}", j.labels.len())));
        }
        let red = |c: i64| fp.from_i64(c);
        let mut brackets = vec![vec![vec![0u64; n]; n]; n];
        let mut listed = vec![vec![false; n]; n];
        for (i, jj, terms) in &j.brackets {
            let (i, jj) = (*i, *jj);
            if i >= n || jj >= n {
                return Err(Error::Malformed(format!("bracket index ({i}, {jj}) out of range")));
            }
            listed[i][jj] = true;
            for &(k, c) in terms {
                if k >= n {
                    return Err(Error::Malformed(format!("bracket target {k} out of range")));
                }
                brackets[i][jj][k] = fp.add(&brackets[i][jj][k], &red(c));
            }
        }
        for i in 0..n {
            for jj in 0..n {
                if listed[i][jj] && !listed[jj][i] {
                    brackets[jj][i] = brackets[i][jj].iter().map(|x| fp.neg(x)).collect();
                }
            }
        }
        let mut p_power = vec![vec![0u64; n]; n];
        for (i, terms) in &j.p_powers {
            if *i >= n {
                return Err(Error::Malformed(format!("p-power index {i} out of range")));
            }
            for &(k, c) in terms {
                if k >= n {
                    return Err(Error::Malformed(format!("p-power target {k} out of range")));
                }
                p_power[*i][k] = fp.add(&p_power[*i][k], &red(c));
            }
        }
        let realization = match &j.matrix_realization {
            None => None,
            Some(r) => {
                if r.mats.len() != n {
                    return Err(Error::Malformed("realization needs one matrix per basis vector".into()));
                }
                let mut out = Vec::with_capacity(n);
                for m in &r.mats {
                    let m = Matrix::from_rows(m.clone())?;
                    if m.shape() != (r.size, r.size) {
                        return Err(Error::Malformed(format!("realization matrix is not {0}x{0}", r.size)));
                    }
                    out.push(m.map(|&c| red(c)));
                }
                Some(out)
            }
        };
        Self::new(fp, j.labels.clone(), brackets, p_power, realization)
    }
}

fn add_vec<F: Ring>(field: &F, a: &[F::Elem], b: &[F::Elem]) -> Vec<F::Elem> {
    a.iter().zip(b).map(|(x, y)| field.add(x, y)).collect()
}

/// Solves `M = Σ c_i B_i` for a fixed independent family `B_i`.
#[derive(Clone, Debug)]
pub struct SpanCoordinates {
    fp: Fp,
    basis: Matrix<u64>,
    left_inv: Matrix<u64>,
}

impl SpanCoordinates {
    pub fn new(fp: Fp, mats: &[Matrix<u64>]) -> Result<Self> {
        let flat: Vec<Vec<u64>> = mats.iter().map(|m| m.data().to_vec()).collect();
        let len = flat.first().map_or(0, |v| v.len());
        let basis = Matrix::from_columns(len, &flat);
        let left_inv = linalg::left_inverse(&fp, &basis)
            .map_err(|_| Error::InvalidParameter("basis matrices are linearly dependent".into()))?;
        Ok(SpanCoordinates { fp, basis, left_inv })
    }

    pub fn solve(&self, m: &Matrix<u64>) -> Option<Vec<u64>> {
        let x = self.left_inv.mul_vec(&self.fp, m.data()).ok()?;
        let back = self.basis.mul_vec(&self.fp, &x).ok()?;
        (back == m.data()).then_some(x)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct RealizationJson {
    #[serde(rename = "N")]
    pub size: usize,
    pub mats: Vec<Vec<Vec<i64>>>,
}

/// Wire format of an algebra.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct AlgebraJson {
    pub p: u64,
    pub dim: usize,
    pub labels: Vec<String>,
    pub brackets: Vec<(usize, usize, Vec<(usize, i64)>)>,
    pub p_powers: Vec<(usize, Vec<(usize, i64)>)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrix_realization: Option<RealizationJson>,
}
