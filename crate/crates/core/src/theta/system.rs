//! The operators `Θ_s = Σ_i ρ(x_i) Y_(i,s)` over a parametrized chart and
//! the stacked and concatenated product matrices built from them.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::evariety::ChartParam;
use crate::exact::linalg;
use crate::exact::{FiniteField, Gf, GfElem, Matrix, Poly, PolyRing, Ring};
use crate::liealg::RestrictedLieAlgebra;
use crate::modrep::series::{composition_count, ordered_products};
use crate::modrep::{validate_module, UModule};

/// `Σ_i ρ(x_i) c_i` for a column of polynomial coefficients.
pub fn operator_of_column(ring: &PolyRing, m: &UModule, column: &[Poly]) -> Matrix<Poly> {
    let dim = m.dim();
    let mut out = Matrix::zeros(ring, dim, dim);
    for (c, a) in column.iter().zip(m.actions()) {
        if c.is_zero() {
            continue;
        }
        for i in 0..dim {
            for k in 0..dim {
                let x = *a.get(i, k);
                if x != 0 {
                    let v = ring.add(out.get(i, k), &ring.scale(c, x));
                    out.set(i, k, v);
                }
            }
        }
    }
    out
}

/// Checks that the operators pairwise commute and have vanishing `p`-th
/// powers, naming the first failure.
pub fn check_operators(ring: &PolyRing, theta: &[Matrix<Poly>], p: u64) -> Result<()> {
    for a in 0..theta.len() {
        for b in a + 1..theta.len() {
            let com = theta[a].commutator(ring, &theta[b])?;
            if let Some((pos, e)) = first_nonzero(&com) {
                return Err(Error::NotInVariety(format!(
                    "Θ_{} and Θ_{} do not commute: entry {pos:?} is {e:?}",
                    a + 1,
                    b + 1
                )));
            }
        }
    }
    for (s, t) in theta.iter().enumerate() {
        let pw = t.pow(ring, p)?;
        if let Some((pos, e)) = first_nonzero(&pw) {
            return Err(Error::NotInVariety(format!("Θ_{}^p has entry {pos:?} = {e:?}", s + 1)));
        }
    }
    Ok(())
}

fn first_nonzero(m: &Matrix<Poly>) -> Option<((usize, usize), Poly)> {
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m.get(i, j).is_zero() {
                return Some(((i, j), m.get(i, j).clone()));
            }
        }
    }
    None
}

/// The valid range `1..=(p-1)r` of `j`.
pub fn check_degree(j: usize, p: u64, r: usize) -> Result<()> {
    let top = (p as usize - 1) * r;
    if j == 0 || j > top {
        return Err(Error::OutOfRange(format!("j = {j} must lie in 1..={top}")));
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ThetaSystem {
    alg: RestrictedLieAlgebra,
    module: UModule,
    param: ChartParam,
    p: u64,
    theta: Vec<Matrix<Poly>>,
}

/// Assembles `Θ_1, ..., Θ_r` for the module over the parametrized locus and
/// verifies commutation and `Θ_s^p = 0` identically.
pub fn build_theta(alg: &RestrictedLieAlgebra, m: &UModule, param: &ChartParam) -> Result<ThetaSystem> {
    let rep = validate_module(alg, m);
    if let Some(c) = rep.first_failure() {
        return Err(Error::InvariantViolation(format!(
            "module {} fails {}: {}",
            m.label(),
            c.name,
            c.witness.clone().unwrap_or_default()
        )));
    }
    if param.chart.n != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "chart in dimension {} for an algebra of dimension {}",
            param.chart.n,
            alg.dim()
        )));
    }
    if param.ring.fp() != alg.fp() {
        return Err(Error::InvalidParameter("parametrization over a different prime".into()));
    }
    let y = param.matrix();
    let theta: Vec<Matrix<Poly>> =
        (0..param.chart.r()).map(|s| operator_of_column(&param.ring, m, &y.column(s))).collect();
    check_operators(&param.ring, &theta, alg.p())?;
    Ok(ThetaSystem { alg: alg.clone(), module: m.clone(), param: param.clone(), p: alg.p(), theta })
}

impl ThetaSystem {
    pub fn algebra(&self) -> &RestrictedLieAlgebra {
        &self.alg
    }

    pub fn module(&self) -> &UModule {
        &self.module
    }

    pub fn param(&self) -> &ChartParam {
        &self.param
    }

    pub fn ring(&self) -> &PolyRing {
        &self.param.ring
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> usize {
        self.theta.len()
    }

    pub fn theta(&self) -> &[Matrix<Poly>] {
        &self.theta
    }

    /// `(K_j, I_j)`: the degree-`j` products stacked vertically and
    /// concatenated horizontally, compositions in decreasing lex order.
    pub fn kernel_image_matrices(&self, j: usize) -> Result<(Matrix<Poly>, Matrix<Poly>)> {
        check_degree(j, self.p, self.r())?;
        let prods = ordered_products(self.ring(), &self.theta, j)?;
        debug_assert_eq!(prods.len(), composition_count(j, self.r()));
        Ok((Matrix::vstack(&prods)?, Matrix::hstack(&prods)?))
    }

    /// `(ker_rank, im_rank)` over the function field of the parameter space.
    pub fn generic_ranks(&self, j: usize) -> Result<(usize, usize)> {
        let (k, i) = self.kernel_image_matrices(j)?;
        let rk = generic_rank(self.ring(), &k, 0xA5)?;
        let ri = generic_rank(self.ring(), &i, 0x5A)?;
        Ok((self.module.dim() - rk, ri))
    }

    /// The `Θ_s` at a parameter value.
    pub fn specialized(&self, field: &Gf, params: &[GfElem]) -> Result<Vec<Matrix<GfElem>>> {
        self.theta.iter().map(|t| linalg::specialize(self.ring(), t, field, params)).collect()
    }
}

/// Rank over the fraction field of the polynomial ring. Random
/// specializations over `F_(p^4)` give a lower bound; when it is below the
/// trivial upper bound the exact value comes from fraction-free elimination.
pub fn generic_rank(ring: &PolyRing, m: &Matrix<Poly>, seed: u64) -> Result<usize> {
    let upper = m.rows().min(m.cols());
    if ring.nvars() == 0 {
        let f = ring.fp();
        let c = linalg::specialize(ring, m, &f, &[])?;
        return Ok(linalg::rank(&f, &c));
    }
    let field = Gf::new(ring.fp().p(), 4)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut lower = 0;
    for _ in 0..3 {
        let pt: Vec<GfElem> = (0..ring.nvars()).map(|_| field.random(&mut rng)).collect();
        let s = linalg::specialize(ring, m, &field, &pt)?;
        lower = lower.max(linalg::rank(&field, &s));
        if lower == upper {
            return Ok(lower);
        }
    }
    linalg::bareiss_rank(ring, m)
}
