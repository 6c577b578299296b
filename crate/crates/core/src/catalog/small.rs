//! The Heisenberg algebra with its adjoint module, and the abelian
//! two-dimensional algebra with a four-dimensional module whose kernel
//! module is free although the socle jumps.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::evariety::{Chart, ChartParam};
use crate::exact::{Fp, PolyRing, Ring};
use crate::liealg::RestrictedLieAlgebra;
use crate::modrep::constructions::{adjoint_module, int_matrix};
use crate::modrep::UModule;
use crate::p1split::P1Param;

/// Basis `x, y, z` with `[x, y] = z` and all p-powers zero.
pub fn heisenberg_algebra(p: u64) -> Result<RestrictedLieAlgebra> {
    if p < 3 {
        return Err(Error::InvalidPrime(p, "the Heisenberg fixture needs p >= 3"));
    }
    let fp = Fp::new(p)?;
    let mut br = vec![vec![vec![0u64; 3]; 3]; 3];
    br[0][1][2] = 1;
    br[1][0][2] = fp.neg(&1);
    RestrictedLieAlgebra::new(fp, vec!["x".into(), "y".into(), "z".into()], br, vec![vec![0; 3]; 3], None)
}

pub struct Heisenberg {
    pub alg: RestrictedLieAlgebra,
    pub module: UModule,
    /// `T ↦ span(x + T y, z)`.
    pub chart: ChartParam,
    /// `(s : t) ↦ span(z, s x + t y)`.
    pub line: P1Param,
}

pub fn make_heisenberg(p: u64) -> Result<Heisenberg> {
    let alg = heisenberg_algebra(p)?;
    let fp = alg.fp();
    let module = adjoint_module(&alg).with_label("heisenberg adjoint");
    let r1 = PolyRing::new(fp, 1)?;
    let chart = ChartParam::new(
        Chart::new(3, vec![0, 2])?,
        r1.clone(),
        BTreeMap::from([((1, 0), r1.var(0))]),
        "heisenberg chart x + T y, z",
    )?;
    let r2 = PolyRing::new(fp, 2)?;
    let z = vec![r2.zero(), r2.zero(), r2.one()];
    let xy = vec![r2.var(0), r2.var(1), r2.zero()];
    let line = P1Param::new(r2, 3, vec![z, xy], "heisenberg line (s:t) -> <z, s x + t y>")?;
    Ok(Heisenberg { alg, module, chart, line })
}

pub struct TwoParameterFixture {
    pub alg: RestrictedLieAlgebra,
    pub module: UModule,
    /// `T ↦ span(x_1 + T x_2)`.
    pub chart: ChartParam,
    /// `(s : t) ↦ span(s x_1 + t x_2)`.
    pub line: P1Param,
}

/// `g_a ⊕ g_a` acting on `m_1, ..., m_4` by `x_1 m_1 = m_4`,
/// `x_2 m_1 = m_3`, `x_2 m_2 = m_4`.
pub fn make_jump_fixture(p: u64) -> Result<TwoParameterFixture> {
    let fp = Fp::new(p)?;
    let alg = RestrictedLieAlgebra::new(
        fp,
        vec!["x1".into(), "x2".into()],
        vec![vec![vec![0; 2]; 2]; 2],
        vec![vec![0; 2]; 2],
        None,
    )?;
    let x1 = int_matrix(&fp, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0]]);
    let x2 = int_matrix(&fp, &[&[0, 0, 0, 0], &[0, 0, 0, 0], &[1, 0, 0, 0], &[0, 1, 0, 0]]);
    let module = UModule::new(fp, "socle jump", 4, vec![x1, x2])?;
    let r1 = PolyRing::new(fp, 1)?;
    let chart = ChartParam::new(
        Chart::new(2, vec![0])?,
        r1.clone(),
        BTreeMap::from([((1, 0), r1.var(0))]),
        "line x1 + T x2",
    )?;
    let r2 = PolyRing::new(fp, 2)?;
    let col = vec![r2.var(0), r2.var(1)];
    let line = P1Param::new(r2, 2, vec![col], "line (s:t) -> <s x1 + t x2>")?;
    Ok(TwoParameterFixture { alg, module, chart, line })
}
