//! Named catalog entries and their JSON bundles.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use super::classical::make_classical;
use super::semidirect::{make_semidirect, semidirect_line, SemidirectKind};
use super::sl2::{make_sl2_pims, make_sl2_r, sl2_nilcone_line, SL2_E, SL2_F, SL2_H};
use super::small::{make_heisenberg, make_jump_fixture};
use crate::error::{Error, Result};
use crate::evariety::{Chart, ChartParam, LocusJson};
use crate::exact::{PolyRing, Ring};
use crate::liealg::classical::Family;
use crate::liealg::{AlgebraJson, RestrictedLieAlgebra};
use crate::modrep::constructions::adjoint_module;
use crate::modrep::{ModuleJson, UModule};
use crate::p1split::{P1LocusJson, P1Param};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatalogEntry {
    pub id: String,
    pub description: String,
    pub p: u64,
}

/// An algebra, a module and the loci that come with them.
pub struct Built {
    pub alg: RestrictedLieAlgebra,
    pub module: UModule,
    pub chart: Option<ChartParam>,
    pub lines: Vec<P1Param>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CatalogBundle {
    pub entry: CatalogEntry,
    pub algebra: AlgebraJson,
    pub module: ModuleJson,
    pub locus: Option<LocusJson>,
    pub lines: Vec<P1LocusJson>,
}

const ENTRIES: &[(&str, &str, u64)] = &[
    ("gl3", "gl_3 on its defining module", 5),
    ("gl4", "gl_4 on its defining module", 7),
    ("sp4", "sp_4 on its defining module", 7),
    ("sl2", "sl_2 on its defining module, nilpotent cone as a conic", 3),
    ("sl3-adjoint", "adjoint module of sl_3", 7),
    ("so5", "so_5 on its defining module", 7),
    ("heisenberg", "Heisenberg algebra on its adjoint module; E(2, g) is a line", 5),
    ("socle-jump", "g_a + g_a on a 4-dimensional module whose socle jumps at T = 0", 5),
    ("semidirect-n", "V x| gl_2 on S(V)/S>=3(V)", 5),
    ("semidirect-m", "V x| gl_3 on wedge^1 V + wedge^2 V", 5),
    ("semidirect-r", "V x| gl_2 on truncated S(V) in degrees p-1 and p", 5),
    ("sl2-p0", "projective cover of the trivial u(sl_2)-module", 3),
    ("sl2-p1", "projective cover of the two-dimensional simple u(sl_2)-module", 3),
    ("sl2-p2", "Steinberg module of u(sl_2)", 3),
    ("sl2x2-p0-1", "P_0 pulled back along the first projection of sl_2 + sl_2", 3),
    ("sl2x2-p0-2", "P_0 pulled back along the second projection of sl_2 + sl_2", 3),
    ("sl2x2-p1-1", "P_1 pulled back along the first projection of sl_2 + sl_2", 3),
    ("sl2x2-p1-2", "P_1 pulled back along the second projection of sl_2 + sl_2", 3),
    ("sl2x2-p2-1", "Steinberg module pulled back along the first projection of sl_2 + sl_2", 3),
    ("sl2x2-p2-2", "Steinberg module pulled back along the second projection of sl_2 + sl_2", 3),
];

pub fn catalog_list() -> Vec<CatalogEntry> {
    ENTRIES
        .iter()
        .map(|&(id, d, p)| CatalogEntry { id: id.into(), description: d.into(), p })
        .collect()
}

pub fn catalog_entry(id: &str) -> Result<CatalogEntry> {
    catalog_list()
        .into_iter()
        .find(|e| e.id == id)
        .ok_or_else(|| Error::InvalidParameter(format!("no catalog entry named {id}")))
}

/// `(s : t) ↦ span(s x_a + t x_b)`.
fn linear_line(alg: &RestrictedLieAlgebra, a: usize, b: usize) -> Result<P1Param> {
    let ring = PolyRing::new(alg.fp(), 2)?;
    let mut col = vec![ring.zero(); alg.dim()];
    col[a] = ring.var(0);
    col[b] = ring.var(1);
    let l = alg.labels();
    P1Param::new(ring, alg.dim(), vec![col], format!("(s:t) -> <s {} + t {}>", l[a], l[b]))
}

/// `T ↦ span(x_a + T x_b)`.
fn linear_chart(alg: &RestrictedLieAlgebra, a: usize, b: usize) -> Result<ChartParam> {
    let ring = PolyRing::new(alg.fp(), 1)?;
    let l = alg.labels();
    let label = format!("T -> <{} + T {}>", l[a], l[b]);
    ChartParam::new(Chart::new(alg.dim(), vec![a])?, ring.clone(), BTreeMap::from([((b, 0), ring.var(0))]), label)
}

/// `T ↦ span(e + T h - T^2 f)`.
fn sl2_nilcone_chart(alg: &RestrictedLieAlgebra) -> Result<ChartParam> {
    let ring = PolyRing::new(alg.fp(), 1)?;
    let t = ring.var(0);
    let t2 = ring.scale(&ring.mul(&t, &t), alg.fp().neg(&1));
    let coords = BTreeMap::from([((SL2_F, 0), t2), ((SL2_H, 0), t)]);
    ChartParam::new(Chart::new(3, vec![SL2_E])?, ring, coords, "T -> <e + T h - T^2 f>")
}

/// `(T_1, ..., T_r) ↦ span_k(e_k + T_k h_k - T_k^2 f_k)` on `sl_2^(⊕r)`.
fn sl2_sum_nilcone_chart(alg: &RestrictedLieAlgebra, r: usize) -> Result<ChartParam> {
    let ring = PolyRing::new(alg.fp(), r)?;
    let mut coords = BTreeMap::new();
    for k in 0..r {
        let t = ring.var(k);
        coords.insert((3 * k + SL2_F, k), ring.scale(&ring.mul(&t, &t), alg.fp().neg(&1)));
        coords.insert((3 * k + SL2_H, k), t);
    }
    let sigma = (0..r).map(|k| 3 * k + SL2_E).collect();
    ChartParam::new(Chart::new(3 * r, sigma)?, ring, coords, "product of nilpotent cones")
}

fn index_of(alg: &RestrictedLieAlgebra, label: &str) -> usize {
    alg.labels().iter().position(|l| l == label).expect("catalog label")
}

fn classical_entry(family: Family, n: usize, p: u64, a: &str, b: &str) -> Result<Built> {
    let (alg, module) = make_classical(family, n, p)?;
    let (a, b) = (index_of(&alg, a), index_of(&alg, b));
    Ok(Built { chart: Some(linear_chart(&alg, a, b)?), lines: vec![linear_line(&alg, a, b)?], alg, module })
}

fn semidirect_entry(n: usize, kind: SemidirectKind) -> Result<Built> {
    let (alg, module) = make_semidirect(n, 5, kind)?;
    let line = semidirect_line(&alg, n)?;
    Ok(Built { chart: Some(linear_chart(&alg, 0, 1)?), lines: vec![line], alg, module })
}

fn pim(weight: usize) -> Result<UModule> {
    make_sl2_pims(3)?
        .into_iter()
        .find(|x| x.weight == weight)
        .map(|x| x.module)
        .ok_or_else(|| Error::DecompositionFailed(format!("no projective of weight {weight}")))
}

pub fn build_entry(id: &str) -> Result<Built> {
    catalog_entry(id)?;
    match id {
        "gl3" => classical_entry(Family::Gl, 3, 5, "E12", "E13"),
        "gl4" => classical_entry(Family::Gl, 4, 7, "E13", "E14"),
        "sp4" => classical_entry(Family::Sp, 2, 7, "t1,3", "t1,4"),
        "sl3-adjoint" => {
            let alg = crate::liealg::classical::classical_algebra(Family::Sl, 3, 7)?;
            let module = adjoint_module(&alg).with_label("sl_3 adjoint");
            let (a, b) = (index_of(&alg, "E12"), index_of(&alg, "E13"));
            Ok(Built { chart: Some(linear_chart(&alg, a, b)?), lines: vec![linear_line(&alg, a, b)?], alg, module })
        }
        "so5" => classical_entry(Family::So, 2, 7, "X12", "X13"),
        "sl2" => {
            let (alg, module) = make_classical(Family::Sl, 2, 3)?;
            Ok(Built { chart: Some(sl2_nilcone_chart(&alg)?), lines: vec![sl2_nilcone_line(3)?], alg, module })
        }
        "heisenberg" => {
            let h = make_heisenberg(5)?;
            Ok(Built { alg: h.alg, module: h.module, chart: Some(h.chart), lines: vec![h.line] })
        }
        "socle-jump" => {
            let f = make_jump_fixture(5)?;
            Ok(Built { alg: f.alg, module: f.module, chart: Some(f.chart), lines: vec![f.line] })
        }
        "semidirect-n" => semidirect_entry(2, SemidirectKind::Truncated { j: 2 }),
        "semidirect-m" => semidirect_entry(3, SemidirectKind::Exterior { r: 1 }),
        "semidirect-r" => semidirect_entry(2, SemidirectKind::TopSymmetric { r: 1 }),
        _ if id.starts_with("sl2x2-p") => {
            let w: usize = id[7..8].parse().map_err(|_| Error::InvalidParameter(id.into()))?;
            let s: usize = id[9..].parse().map_err(|_| Error::InvalidParameter(id.into()))?;
            let x = make_sl2_r(3, 2, s, &pim(w)?)?;
            let chart = Some(sl2_sum_nilcone_chart(&x.alg, 2)?);
            Ok(Built { alg: x.alg, module: x.module, chart, lines: x.lines })
        }
        _ if id.starts_with("sl2-p") => {
            let w: usize = id[5..].parse().map_err(|_| Error::InvalidParameter(id.into()))?;
            let alg = crate::liealg::classical::classical_algebra(Family::Sl, 2, 3)?;
            let chart = Some(sl2_nilcone_chart(&alg)?);
            Ok(Built { alg, module: pim(w)?, chart, lines: vec![sl2_nilcone_line(3)?] })
        }
        _ => Err(Error::InvalidParameter(format!("no catalog entry named {id}"))),
    }
}

pub fn catalog_bundle(id: &str) -> Result<CatalogBundle> {
    let entry = catalog_entry(id)?;
    let b = build_entry(id)?;
    Ok(CatalogBundle {
        entry,
        algebra: b.alg.to_json(),
        module: b.module.to_json(),
        locus: b.chart.as_ref().map(|c| c.to_json()),
        lines: b.lines.iter().map(|l| l.to_json()).collect(),
    })
}

/// File name of the `k`-th line (0-based) of a bundle.
pub fn line_file_name(k: usize) -> String {
    if k == 0 {
        "line.json".into()
    } else {
        format!("line{}.json", k + 1)
    }
}

/// Writes `algebra.json`, `module.json`, `locus.json` (when the entry has a
/// chart) and `line.json`, `line2.json`, ... into `dir`.
pub fn emit_bundle(id: &str, dir: &Path) -> Result<Vec<PathBuf>> {
    let b = catalog_bundle(id)?;
    std::fs::create_dir_all(dir)?;
    let mut written = Vec::new();
    let mut put = |name: &str, text: String| -> Result<()> {
        let path = dir.join(name);
        std::fs::write(&path, text + "\n")?;
        written.push(path);
        Ok(())
    };
    put("algebra.json", serde_json::to_string_pretty(&b.algebra)?)?;
    put("module.json", serde_json::to_string_pretty(&b.module)?)?;
    if let Some(l) = &b.locus {
        put("locus.json", serde_json::to_string_pretty(l)?)?;
    }
    for (k, l) in b.lines.iter().enumerate() {
        put(&line_file_name(k), serde_json::to_string_pretty(l)?)?;
    }
    Ok(written)
}
