//! The regular module of the restricted enveloping algebra, its
//! decomposition into projective indecomposables for `sl_2` at `p = 3`,
//! and the pullbacks of these to `sl_2^(⊕r)`.

use std::collections::HashMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{FiniteField, Fp, Gf, Matrix, Poly, PolyRing, Ring};
use crate::liealg::classical::{classical_algebra, Family};
use crate::liealg::RestrictedLieAlgebra;
use crate::modrep::constructions::{pullback, submodule};
use crate::modrep::{jordan_type, JordanType, UModule};
use crate::p1split::P1Param;

/// Left multiplication on the PBW basis `x_1^(a_1) ... x_n^(a_n)`,
/// `0 <= a_i < p`, of `u(g)`, indexed in base `p` with `a_1` most
/// significant.
pub struct PbwBasis<'a> {
    alg: &'a RestrictedLieAlgebra,
    fp: Fp,
    p: usize,
    n: usize,
    memo: HashMap<(usize, usize), Vec<u64>>,
}

impl<'a> PbwBasis<'a> {
    pub fn new(alg: &'a RestrictedLieAlgebra, limit: usize) -> Result<Self> {
        let p = alg.p() as usize;
        let n = alg.dim();
        let size = (p as u128).checked_pow(n as u32).filter(|&s| s <= limit as u128);
        if size.is_none() {
            return Err(Error::InvalidParameter(format!("u(g) has dimension {p}^{n}, above the limit {limit}")));
        }
        Ok(PbwBasis { alg, fp: alg.fp(), p, n, memo: HashMap::new() })
    }

    pub fn dim(&self) -> usize {
        self.p.pow(self.n as u32)
    }

    fn exps(&self, mut idx: usize) -> Vec<usize> {
        let mut e = vec![0; self.n];
        for k in (0..self.n).rev() {
            e[k] = idx % self.p;
            idx /= self.p;
        }
        e
    }

    fn index(&self, e: &[usize]) -> usize {
        e.iter().fold(0, |acc, &a| acc * self.p + a)
    }

    fn add_scaled(&self, acc: &mut [u64], v: &[u64], c: u64) {
        if c == 0 {
            return;
        }
        for (a, &b) in acc.iter_mut().zip(v) {
            *a = self.fp.add(a, &self.fp.mul(&b, &c));
        }
    }

    fn apply(&mut self, i: usize, v: &[u64]) -> Vec<u64> {
        let mut out = vec![0; self.dim()];
        for (m, &c) in v.iter().enumerate() {
            if c != 0 {
                let w = self.left_mul(i, m);
                self.add_scaled(&mut out, &w, c);
            }
        }
        out
    }

    /// `x_i · x^a` in the PBW basis.
    pub fn left_mul(&mut self, i: usize, m: usize) -> Vec<u64> {
        if let Some(v) = self.memo.get(&(i, m)) {
            return v.clone();
        }
        let e = self.exps(m);
        let dim = self.dim();
        let k = e.iter().position(|&a| a > 0);
        let out = match k {
            Some(k) if k < i => {
                // x_i x_k^a rest = x_k (x_i x_k^(a-1) rest) + [x_i, x_k] x_k^(a-1) rest
                let mut lower = e.clone();
                lower[k] -= 1;
                let b = self.index(&lower);
                let inner = self.left_mul(i, b);
                let mut out = self.apply(k, &inner);
                let br = self.alg.bracket_basis(i, k).to_vec();
                for (l, &c) in br.iter().enumerate() {
                    if c != 0 {
                        let w = self.left_mul(l, b);
                        self.add_scaled(&mut out, &w, c);
                    }
                }
                out
            }
            _ if e[i] + 1 < self.p => {
                let mut f = e.clone();
                f[i] += 1;
                let mut out = vec![0; dim];
                out[self.index(&f)] = 1;
                out
            }
            _ => {
                // x_i^p = x_i^[p]
                let mut rest = e.clone();
                rest[i] = 0;
                let b = self.index(&rest);
                let pw = self.alg.p_power_basis(i).to_vec();
                let mut out = vec![0; dim];
                for (l, &c) in pw.iter().enumerate() {
                    if c != 0 {
                        let w = self.left_mul(l, b);
                        self.add_scaled(&mut out, &w, c);
                    }
                }
                out
            }
        };
        self.memo.insert((i, m), out.clone());
        out
    }

    /// Matrix of left multiplication by `x_i`.
    pub fn left_matrix(&mut self, i: usize) -> Matrix<u64> {
        let dim = self.dim();
        let cols: Vec<Vec<u64>> = (0..dim).map(|m| self.left_mul(i, m)).collect();
        Matrix::from_columns(dim, &cols)
    }

    /// Right multiplication by the element `b`: column `m` is `x^m · b`.
    pub fn right_matrix(&mut self, b: &[u64]) -> Matrix<u64> {
        let dim = self.dim();
        let mut cols = Vec::with_capacity(dim);
        for m in 0..dim {
            let e = self.exps(m);
            let mut v = b.to_vec();
            for k in (0..self.n).rev() {
                for _ in 0..e[k] {
                    v = self.apply(k, &v);
                }
            }
            cols.push(v);
        }
        Matrix::from_columns(dim, &cols)
    }
}

/// `u(g)` acting on itself by left multiplication.
pub fn regular_module(alg: &RestrictedLieAlgebra, limit: usize) -> Result<UModule> {
    let mut pbw = PbwBasis::new(alg, limit)?;
    let actions = (0..alg.dim()).map(|i| pbw.left_matrix(i)).collect();
    UModule::new(alg.fp(), "regular", pbw.dim(), actions)
}

/// Splits the identity of `End(u(g))` into primitive idempotents by
/// generalized eigenspaces of random endomorphisms `e R_a e`. Returns the
/// images of the idempotents as column bases.
pub fn primitive_summands(alg: &RestrictedLieAlgebra, seed: u64, budget: usize) -> Result<Vec<Matrix<u64>>> {
    let fp = alg.fp();
    let mut pbw = PbwBasis::new(alg, 4096)?;
    let dim = pbw.dim();
    let rights: Vec<Matrix<u64>> = (0..dim)
        .map(|b| {
            let mut e = vec![0; dim];
            e[b] = 1;
            pbw.right_matrix(&e)
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pending = vec![Matrix::identity(&fp, dim)];
    let mut done = Vec::new();
    while let Some(e) = pending.pop() {
        let c = linalg::column_space(&fp, &e);
        let cinv = linalg::left_inverse(&fp, &c)?;
        let mut split = None;
        for _ in 0..budget {
            let coeffs: Vec<u64> = (0..dim).map(|_| fp.random(&mut rng)).collect();
            let terms: Vec<(u64, &Matrix<u64>)> = coeffs.iter().copied().zip(&rights).collect();
            let ra = Matrix::combination(&fp, dim, dim, &terms)?;
            let psi = e.mul(&fp, &ra)?.mul(&fp, &e)?;
            let nmat = cinv.mul(&fp, &psi)?.mul(&fp, &c)?;
            let pieces = fitting_pieces(&fp, &nmat);
            if pieces.len() > 1 {
                split = Some(pieces);
                break;
            }
        }
        match split {
            None => done.push(c),
            Some(pieces) => {
                let all = Matrix::hstack(&pieces)?;
                let inv = linalg::inverse(&fp, &all)
                    .ok_or_else(|| Error::DecompositionFailed("pieces do not span".into()))?;
                let mut off = 0;
                for piece in &pieces {
                    let w = piece.cols();
                    // projection onto this piece along the others
                    let sel = inv.select_rows(&(off..off + w).collect::<Vec<_>>());
                    let proj = piece.mul(&fp, &sel)?;
                    pending.push(c.mul(&fp, &proj)?.mul(&fp, &cinv)?.mul(&fp, &e)?);
                    off += w;
                }
            }
        }
    }
    if done.iter().map(|c| c.cols()).sum::<usize>() != dim {
        return Err(Error::DecompositionFailed("summands do not add up to u(g)".into()));
    }
    Ok(done)
}

/// Generalized eigenspaces of `n` for eigenvalues in `F_p`, plus the
/// remaining Fitting component, dropping zero pieces.
fn fitting_pieces(fp: &Fp, n: &Matrix<u64>) -> Vec<Matrix<u64>> {
    let d = n.rows();
    let id = Matrix::identity(fp, d);
    let mut rest = id.clone();
    let mut pieces = Vec::new();
    for lam in 0..fp.p() {
        let shifted = n.sub(fp, &id.scale(fp, &lam)).expect("square");
        let pw = shifted.pow(fp, d as u64).expect("square");
        let ker = linalg::kernel(fp, &pw);
        if ker.cols() > 0 {
            pieces.push(ker);
        }
        rest = rest.mul(fp, &pw).expect("square");
    }
    let im = linalg::column_space(fp, &rest);
    if im.cols() > 0 {
        pieces.push(im);
    }
    pieces
}

/// A projective indecomposable with the highest weight of its head.
#[derive(Clone, Debug)]
pub struct Pim {
    pub weight: usize,
    pub module: UModule,
    /// Copies found in the regular module.
    pub multiplicity: usize,
    pub jordan_at_e: JordanType,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PimSummary {
    pub weight: usize,
    pub dim: usize,
    pub multiplicity: usize,
    pub jordan_at_e: Vec<usize>,
}

impl Pim {
    pub fn summary(&self) -> PimSummary {
        PimSummary {
            weight: self.weight,
            dim: self.module.dim(),
            multiplicity: self.multiplicity,
            jordan_at_e: self.jordan_at_e.parts.clone(),
        }
    }
}

pub const PIM_SEED: u64 = 0x5EED_0003;
pub const PIM_BUDGET: usize = 60;

/// Indices of `e`, `f`, `h` in the `sl_2` basis.
pub const SL2_E: usize = 0;
pub const SL2_F: usize = 1;
pub const SL2_H: usize = 2;

fn highest_weight(fp: &Fp, m: &UModule) -> usize {
    // at p = 3: the Steinberg module has dimension p, and of the two
    // projectives of dimension 2p only P_0 has a fixed vector in its socle
    let p = fp.p() as usize;
    if m.dim() == p {
        return p - 1;
    }
    let stacked = Matrix::vstack(m.actions()).expect("same widths");
    if linalg::kernel(fp, &stacked).cols() > 0 {
        0
    } else {
        1
    }
}

/// The projective indecomposable `u(sl_2)`-modules at `p = 3`, one per
/// isomorphism class, ordered by highest weight.
pub fn make_sl2_pims(p: u64) -> Result<Vec<Pim>> {
    if p != 3 {
        return Err(Error::InvalidPrime(p, "projective indecomposables are extracted at p = 3 only"));
    }
    let alg = classical_algebra(Family::Sl, 2, p)?;
    let fp = alg.fp();
    let reg = regular_module(&alg, 27)?;
    let summands = primitive_summands(&alg, PIM_SEED, PIM_BUDGET)?;
    let field = Gf::new(p, 1)?;
    let e = alg.basis_vector(&field, SL2_E);
    let mut found: Vec<Pim> = Vec::new();
    for c in &summands {
        let m = submodule(&reg, c)?;
        let weight = highest_weight(&fp, &m);
        if let Some(pim) = found.iter_mut().find(|x| x.weight == weight) {
            pim.multiplicity += 1;
            continue;
        }
        let jt = jordan_type(&m, &field, &e)?;
        found.push(Pim {
            weight,
            module: m.with_label(format!("P_{weight}")),
            multiplicity: 1,
            jordan_at_e: jt,
        });
    }
    found.sort_by_key(|x| x.weight);
    Ok(found)
}

/// `s t · h + s^2 · e - t^2 · f` in the basis `(e, f, h)`: the nilpotent
/// cone of `sl_2` as a conic, entries of degree 2.
pub fn nilcone_column(ring: &PolyRing) -> Vec<Poly> {
    let fp = ring.fp();
    let s = ring.var(0);
    let t = ring.var(1);
    let mut col = vec![ring.zero(); 3];
    col[SL2_E] = ring.mul(&s, &s);
    col[SL2_F] = ring.scale(&ring.mul(&t, &t), fp.neg(&1));
    col[SL2_H] = ring.mul(&s, &t);
    col
}

pub fn sl2_nilcone_line(p: u64) -> Result<P1Param> {
    let ring = PolyRing::new(Fp::new(p)?, 2)?;
    let col = nilcone_column(&ring);
    P1Param::new(ring, 3, vec![col], "nilpotent cone of sl_2")
}

/// `sl_2^(⊕r)`, factor `k` on basis indices `3k..3k+3`.
pub fn sl2_sum(p: u64, r: usize) -> Result<RestrictedLieAlgebra> {
    if r == 0 {
        return Err(Error::InvalidParameter("r must be positive".into()));
    }
    let base = classical_algebra(Family::Sl, 2, p)?;
    let fp = base.fp();
    let n = 3 * r;
    let mut labels = Vec::with_capacity(n);
    let mut br = vec![vec![vec![0u64; n]; n]; n];
    let mut pw = vec![vec![0u64; n]; n];
    for k in 0..r {
        for i in 0..3 {
            labels.push(format!("{}_{}", base.labels()[i], k + 1));
            for j in 0..3 {
                for (l, &c) in base.bracket_basis(i, j).iter().enumerate() {
                    br[3 * k + i][3 * k + j][3 * k + l] = c;
                }
            }
            for (l, &c) in base.p_power_basis(i).iter().enumerate() {
                pw[3 * k + i][3 * k + l] = c;
            }
        }
    }
    RestrictedLieAlgebra::new(fp, labels, br, pw, None)
}

/// Projection of `sl_2^(⊕r)` onto factor `s` (0-based), as a `3 x 3r`
/// matrix.
pub fn factor_projection(r: usize, s: usize) -> Matrix<u64> {
    Matrix::from_fn(3, 3 * r, |i, c| u64::from(c == 3 * s + i))
}

pub struct Sl2Sum {
    pub alg: RestrictedLieAlgebra,
    pub module: UModule,
    /// Line `k` varies factor `k` along the nilpotent cone and keeps the
    /// other factors at `e`.
    pub lines: Vec<P1Param>,
}

/// `π_s^* P` on `sl_2^(⊕r)` for `s` in `1..=r`, with the coordinate lines
/// of `(P^1)^r`.
pub fn make_sl2_r(p: u64, r: usize, s: usize, pim: &UModule) -> Result<Sl2Sum> {
    if s == 0 || s > r {
        return Err(Error::InvalidParameter(format!("factor {s} is not in 1..={r}")));
    }
    let alg = sl2_sum(p, r)?;
    let module = pullback(pim, &factor_projection(r, s - 1))?.with_label(format!("pi_{s}^* {}", pim.label()));
    let ring = PolyRing::new(alg.fp(), 2)?;
    let cone = nilcone_column(&ring);
    let mut lines = Vec::with_capacity(r);
    for k in 0..r {
        let cols: Vec<Vec<Poly>> = (0..r)
            .map(|c| {
                let mut col = vec![ring.zero(); 3 * r];
                if c == k {
                    for i in 0..3 {
                        col[3 * c + i] = cone[i].clone();
                    }
                } else {
                    col[3 * c + SL2_E] = ring.one();
                }
                col
            })
            .collect();
        lines.push(P1Param::new(ring.clone(), 3 * r, cols, format!("coordinate line {}", k + 1))?);
    }
    Ok(Sl2Sum { alg, module, lines })
}
