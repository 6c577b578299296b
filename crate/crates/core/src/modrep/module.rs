//! Restricted modules given by the action matrices of a basis.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::{Fp, Matrix, Ring};
use crate::liealg::{RestrictedLieAlgebra, ValidationReport};

/// A finite-dimensional u(g)-module: `actions[i]` is the matrix of `x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UModule {
    fp: Fp,
    label: String,
    dim: usize,
    actions: Vec<Matrix<u64>>,
}

impl UModule {
    pub fn new(fp: Fp, label: impl Into<String>, dim: usize, actions: Vec<Matrix<u64>>) -> Result<Self> {
        if actions.iter().any(|a| a.shape() != (dim, dim)) {
            return Err(Error::DimensionMismatch(format!("every action must be {dim}x{dim}")));
        }
        let actions = actions.into_iter().map(|a| a.map(|&x| fp.reduce(x))).collect();
        Ok(UModule { fp, label: label.into(), dim, actions })
    }

    /// The module on which every basis element acts by zero.
    pub fn trivial(fp: Fp, n: usize, dim: usize) -> Self {
        UModule { fp, label: format!("trivial^{dim}"), dim, actions: vec![Matrix::zeros(&fp, dim, dim); n] }
    }

    pub fn fp(&self) -> Fp {
        self.fp
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of basis elements acting.
    pub fn n(&self) -> usize {
        self.actions.len()
    }

    pub fn actions(&self) -> &[Matrix<u64>] {
        &self.actions
    }

    /// Matrix of `Σ v_i x_i` over a field containing `F_p`.
    pub fn action<F: Ring>(&self, field: &F, v: &[F::Elem]) -> Matrix<F::Elem> {
        let mut out = Matrix::zeros(field, self.dim, self.dim);
        for (c, a) in v.iter().zip(&self.actions) {
            if field.is_zero(c) {
                continue;
            }
            for i in 0..self.dim {
                for j in 0..self.dim {
                    let x = *a.get(i, j);
                    if x != 0 {
                        let t = field.mul(c, &field.from_u64(x));
                        let s = field.add(out.get(i, j), &t);
                        out.set(i, j, s);
                    }
                }
            }
        }
        out
    }

    pub fn to_json(&self) -> ModuleJson {
        ModuleJson {
            label: self.label.clone(),
            dim: self.dim,
            actions: self.actions.iter().map(|a| a.map(|&x| x as i64).to_rows()).collect(),
        }
    }

    pub fn from_json(fp: Fp, j: &ModuleJson) -> Result<Self> {
        let mut actions = Vec::with_capacity(j.actions.len());
        for (k, rows) in j.actions.iter().enumerate() {
            if rows.is_empty() && j.dim == 0 {
                actions.push(Matrix::zeros(&fp, 0, 0));
                continue;
            }
            let m = Matrix::from_rows(rows.clone())
                .map_err(|e| Error::Malformed(format!("action {k}: {e}")))?;
            if m.shape() != (j.dim, j.dim) {
                return Err(Error::Malformed(format!("action {k} is not {0}x{0}", j.dim)));
            }
            actions.push(m.map(|&x| fp.from_i64(x)));
        }
        Self::new(fp, j.label.clone(), j.dim, actions)
    }
}

/// Checks `ρ([x_i, x_j]) = [ρ(x_i), ρ(x_j)]` and `ρ(x_i^[p]) = ρ(x_i)^p`.
pub fn validate_module(alg: &RestrictedLieAlgebra, m: &UModule) -> ValidationReport {
    let mut rep = ValidationReport::default();
    let fp = m.fp();
    if fp != alg.fp() || m.n() != alg.dim() {
        rep.push(
            "shape",
            Some(format!(
                "module has {} actions over F_{}; algebra has dimension {} over F_{}",
                m.n(),
                fp.p(),
                alg.dim(),
                alg.p()
            )),
        );
        return rep;
    }
    rep.push("shape", None);
    let labels = alg.labels();
    let mut w = None;
    'br: for i in 0..alg.dim() {
        for j in i + 1..alg.dim() {
            let com = m.actions[i].commutator(&fp, &m.actions[j]).expect("square");
            let rhs = m.action(&fp, alg.bracket_basis(i, j));
            if com != rhs {
                w = Some(format!("rho([{}, {}]) != [rho({}), rho({})]", labels[i], labels[j], labels[i], labels[j]));
                break 'br;
            }
        }
    }
    rep.push("bracket", w);
    let mut w = None;
    for i in 0..alg.dim() {
        let pw = m.actions[i].pow(&fp, alg.p()).expect("square");
        if pw != m.action(&fp, alg.p_power_basis(i)) {
            w = Some(format!("rho({}^[p]) != rho({})^p", labels[i], labels[i]));
            break;
        }
    }
    rep.push("p_power", w);
    rep
}

/// Wire format of a module.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ModuleJson {
    pub label: String,
    pub dim: usize,
    pub actions: Vec<Vec<Vec<i64>>>,
}
