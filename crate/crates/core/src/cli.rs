//! Command implementations behind the `esheaf` binary. Each command returns
//! a JSON value and an exit status: 0 success, 1 validation failure,
//! 2 constancy or stabilization not achieved. Errors are reported by the
//! caller with status 3.

use std::collections::BTreeSet;
use std::path::Path;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog;
use crate::error::{Error, Result};
use crate::evariety::{enumerate_elementary, scan_ranks, ChartParam, LocusJson};
use crate::exact::{FiniteField, Gf, GfElem, Ring};
use crate::liealg::{AlgebraJson, EPoint, RestrictedLieAlgebra};
use crate::modrep::{validate_module, ModuleJson, UModule};
use crate::p1split::{build_p1, image_splitting, kernel_splitting, P1LocusJson, P1Param, P1System};
use crate::theta::{all_parameter_points, build_theta, bundle_certificate, fiber_compare, check_degree};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 1;
pub const EXIT_NOT_CERTIFIED: i32 = 2;
pub const EXIT_ERROR: i32 = 3;

pub struct Outcome {
    pub value: Value,
    pub status: i32,
}

impl Outcome {
    fn ok(value: Value) -> Self {
        Outcome { value, status: EXIT_OK }
    }
}

fn to_value<T: Serialize>(t: &T) -> Result<Value> {
    Ok(serde_json::to_value(t)?)
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T> {
    let text = std::fs::read_to_string(path)?;
    serde_json::from_str(&text)
        .map_err(|e| Error::Malformed(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column())))
}

pub fn load_algebra(path: &Path) -> Result<RestrictedLieAlgebra> {
    RestrictedLieAlgebra::from_json(&read_json::<AlgebraJson>(path)?)
}

pub fn load_module(alg: &RestrictedLieAlgebra, path: &Path) -> Result<UModule> {
    let m = UModule::from_json(alg.fp(), &read_json::<ModuleJson>(path)?)?;
    if m.n() != alg.dim() {
        return Err(Error::DimensionMismatch(format!(
            "module has {} actions for an algebra of dimension {}",
            m.n(),
            alg.dim()
        )));
    }
    Ok(m)
}

pub fn load_chart(alg: &RestrictedLieAlgebra, path: &Path) -> Result<ChartParam> {
    ChartParam::from_json(alg.fp(), alg.dim(), &read_json::<LocusJson>(path)?)
}

pub fn load_line(alg: &RestrictedLieAlgebra, path: &Path) -> Result<P1Param> {
    let l = P1Param::from_json(alg.fp(), &read_json::<P1LocusJson>(path)?)?;
    if l.n != alg.dim() {
        return Err(Error::DimensionMismatch("line does not match the algebra".into()));
    }
    Ok(l)
}

pub fn cmd_validate(algebra: &Path, module: Option<&Path>) -> Result<Outcome> {
    let j = read_json::<AlgebraJson>(algebra)?;
    let alg = RestrictedLieAlgebra::from_json(&j)?;
    let arep = alg.validate();
    let mrep = match module {
        Some(m) => Some(validate_module(&alg, &load_module(&alg, m)?)),
        None => None,
    };
    let passed = arep.passed() && mrep.as_ref().is_none_or(|r| r.passed());
    Ok(Outcome {
        value: json!({ "passed": passed, "algebra": arep, "module": mrep }),
        status: if passed { EXIT_OK } else { EXIT_INVALID },
    })
}

/// Where the scanned points come from.
pub enum PointSource<'a> {
    Chart(&'a Path),
    Line(&'a Path),
    Enumerate { r: usize },
}

pub struct ScanArgs<'a> {
    pub algebra: &'a Path,
    pub module: &'a Path,
    pub source: PointSource<'a>,
    pub js: Vec<usize>,
    pub k: usize,
    pub samples: usize,
    pub seed: u64,
}

/// All parameter values when there are at most `samples`, otherwise
/// `samples` distinct random ones.
pub fn chart_parameters(field: &Gf, d: usize, samples: usize, seed: u64) -> (Vec<Vec<GfElem>>, bool) {
    if let Some(all) = all_parameter_points(field, d, samples) {
        return (all, true);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::with_capacity(samples);
    while out.len() < samples {
        let q: Vec<GfElem> = (0..d).map(|_| field.random(&mut rng)).collect();
        if seen.insert(q.clone()) {
            out.push(q);
        }
    }
    (out, false)
}

/// Points `(1 : t)` and `(0 : 1)` of the line, all of them when there are at
/// most `samples`.
pub fn line_parameters(field: &Gf, samples: usize, seed: u64) -> (Vec<(GfElem, GfElem)>, bool) {
    let one = field.one();
    let zero = field.zero();
    let q = field.order() as usize;
    if q < samples {
        let mut out: Vec<_> = field.elements().map(|t| (one, t)).collect();
        out.push((zero, one));
        return (out, true);
    }
    let (ts, _) = chart_parameters(field, 1, samples, seed);
    (ts.into_iter().map(|t| (one, t[0])).collect(), false)
}

pub fn cmd_scan(a: &ScanArgs) -> Result<Outcome> {
    let alg = load_algebra(a.algebra)?;
    let m = load_module(&alg, a.module)?;
    let field = Gf::new(alg.p(), a.k)?;
    if a.js.is_empty() {
        return Err(Error::InvalidParameter("at least one j is required".into()));
    }
    match &a.source {
        PointSource::Chart(path) => {
            let param = load_chart(&alg, path)?;
            let ts = build_theta(&alg, &m, &param)?;
            for &j in &a.js {
                check_degree(j, alg.p(), param.chart.r())?;
            }
            let (params, exhaustive) = chart_parameters(&field, param.d(), a.samples, a.seed);
            let points: Vec<EPoint> =
                params.iter().map(|q| param.point_at(&field, q)).collect::<Result<_>>()?;
            let scan = scan_ranks(&alg, &m, &points, &a.js)?;
            let mut certs = Vec::new();
            let mut fibers = Vec::new();
            for &j in &a.js {
                certs.push(bundle_certificate(&ts, j, &field, &params)?);
                fibers.push(fiber_compare(&ts, j, &field, &params)?);
            }
            let certified = certs.iter().all(|c| c.certified);
            Ok(Outcome {
                value: json!({
                    "source": "chart",
                    "locus": param.label,
                    "exhaustive": exhaustive,
                    "certified": certified,
                    "scan": scan,
                    "certificates": certs,
                    "fibers": fibers,
                }),
                status: if certified { EXIT_OK } else { EXIT_NOT_CERTIFIED },
            })
        }
        PointSource::Line(path) => {
            let line = load_line(&alg, path)?;
            build_p1(&alg, &m, &line)?;
            let (params, exhaustive) = line_parameters(&field, a.samples, a.seed);
            let points: Vec<EPoint> =
                params.iter().map(|&(s, t)| line.point_at(&field, s, t)).collect::<Result<_>>()?;
            let scan = scan_ranks(&alg, &m, &points, &a.js)?;
            let constant = scan.is_constant();
            Ok(Outcome {
                value: json!({
                    "source": "line",
                    "locus": line.label,
                    "exhaustive": exhaustive,
                    "certified": constant,
                    "scan": scan,
                }),
                status: if constant { EXIT_OK } else { EXIT_NOT_CERTIFIED },
            })
        }
        PointSource::Enumerate { r } => {
            let points = enumerate_elementary(&alg, *r, &field, crate::evariety::enumerate::DEFAULT_BUDGET)?;
            let scan = scan_ranks(&alg, &m, &points, &a.js)?;
            let constant = scan.is_constant();
            Ok(Outcome {
                value: json!({
                    "source": "enumeration",
                    "r": r,
                    "count": points.len(),
                    "exhaustive": true,
                    "certified": constant,
                    "scan": scan,
                }),
                status: if constant { EXIT_OK } else { EXIT_NOT_CERTIFIED },
            })
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Sheaf {
    Kernel,
    Image,
    Both,
}

fn load_p1(algebra: &Path, module: &Path, line: &Path) -> Result<P1System> {
    let alg = load_algebra(algebra)?;
    let m = load_module(&alg, module)?;
    let l = load_line(&alg, line)?;
    build_p1(&alg, &m, &l)
}

pub fn cmd_splitting(
    algebra: &Path,
    module: &Path,
    line: &Path,
    j: usize,
    d_max: Option<usize>,
    sheaf: Sheaf,
) -> Result<Outcome> {
    let sys = load_p1(algebra, module, line)?;
    let run = |kernel: bool| -> Result<std::result::Result<Value, String>> {
        let r = if kernel { kernel_splitting(&sys, j, d_max) } else { image_splitting(&sys, j, d_max) };
        match r {
            Ok(rep) => Ok(Ok(to_value(&rep)?)),
            Err(Error::NoStableWindow(msg)) => Ok(Err(msg)),
            Err(e) => Err(e),
        }
    };
    let mut out = serde_json::Map::new();
    let mut stable = true;
    let wanted: &[(bool, &str)] = match sheaf {
        Sheaf::Kernel => &[(true, "kernel")],
        Sheaf::Image => &[(false, "image")],
        Sheaf::Both => &[(true, "kernel"), (false, "image")],
    };
    for &(kernel, name) in wanted {
        match run(kernel)? {
            Ok(v) => {
                out.insert(name.into(), v);
            }
            Err(msg) => {
                stable = false;
                out.insert(name.into(), json!({ "error": "no stable window", "detail": msg }));
            }
        }
    }
    let value = if wanted.len() == 1 { out.remove(wanted[0].1).unwrap_or(Value::Null) } else { Value::Object(out) };
    Ok(Outcome { value, status: if stable { EXIT_OK } else { EXIT_NOT_CERTIFIED } })
}

pub fn cmd_generic_rank(
    algebra: &Path,
    module: &Path,
    locus: Option<&Path>,
    line: Option<&Path>,
    j: usize,
) -> Result<Outcome> {
    let (ker, im) = match (locus, line) {
        (Some(l), None) => {
            let alg = load_algebra(algebra)?;
            let m = load_module(&alg, module)?;
            build_theta(&alg, &m, &load_chart(&alg, l)?)?.generic_ranks(j)?
        }
        (None, Some(l)) => load_p1(algebra, module, l)?.generic_ranks(j)?,
        _ => return Err(Error::InvalidParameter("give exactly one of --locus and --line".into())),
    };
    Ok(Outcome::ok(json!({ "j": j, "ker": ker, "im": im })))
}

/// Parses a field element written as `F_p`-coordinates in the power basis
/// joined by `/`, e.g. `3` or `1/2` for `1 + 2a`.
pub fn parse_elem(field: &Gf, s: &str) -> Result<GfElem> {
    let parts: Vec<&str> = s.trim().split('/').collect();
    if parts.len() > field.degree() {
        return Err(Error::Malformed(format!("{s} has more than {} coordinates", field.degree())));
    }
    let mut c = [0u64; 4];
    for (i, x) in parts.iter().enumerate() {
        let v: i64 = x.trim().parse().map_err(|_| Error::Malformed(format!("bad coordinate {x:?} in {s}")))?;
        c[i] = field.base().from_i64(v);
    }
    Ok(GfElem(c))
}

pub fn cmd_fiber(
    algebra: &Path,
    module: &Path,
    locus: Option<&Path>,
    line: Option<&Path>,
    j: usize,
    point: &str,
    k: usize,
) -> Result<Outcome> {
    let alg = load_algebra(algebra)?;
    let m = load_module(&alg, module)?;
    let field = Gf::new(alg.p(), k)?;
    let values: Vec<GfElem> = if point.trim().is_empty() {
        Vec::new()
    } else {
        point.split([',', ':']).map(|x| parse_elem(&field, x)).collect::<Result<_>>()?
    };
    match (locus, line) {
        (Some(l), None) => {
            let ts = build_theta(&alg, &m, &load_chart(&alg, l)?)?;
            if values.len() != ts.ring().nvars() {
                return Err(Error::DimensionMismatch(format!("the chart has {} parameters", ts.ring().nvars())));
            }
            let rep = fiber_compare(&ts, j, &field, &[values])?;
            let rec = rep.points[0].clone();
            let status = if rec.agree { EXIT_OK } else { EXIT_NOT_CERTIFIED };
            Ok(Outcome { value: json!({ "generic": rep.generic, "fiber": rec }), status })
        }
        (None, Some(l)) => {
            let sys = build_p1(&alg, &m, &load_line(&alg, l)?)?;
            let [s, t] = values[..] else {
                return Err(Error::Malformed("a point of the line is written s:t".into()));
            };
            let (gk, gi) = sys.generic_ranks(j)?;
            let (fk, fi) = sys.fiber_ranks(&field, s, t, j)?;
            let eps = sys.param().point_at(&field, s, t)?;
            let dims = crate::modrep::rad_soc_dims(&alg, &m, &eps, &[j])?[0];
            let agree = fk == dims.1 && fi == dims.0;
            Ok(Outcome {
                value: json!({
                    "generic": { "ker": gk, "im": gi },
                    "fiber": { "matrix_ker": fk, "matrix_im": fi, "soc": dims.1, "rad": dims.0, "agree": agree },
                }),
                status: if agree { EXIT_OK } else { EXIT_NOT_CERTIFIED },
            })
        }
        _ => Err(Error::InvalidParameter("give exactly one of --locus and --line".into())),
    }
}

pub fn cmd_catalog_list() -> Result<Outcome> {
    Ok(Outcome::ok(to_value(&catalog::catalog_list())?))
}

pub fn cmd_catalog_emit(id: &str, dir: &Path) -> Result<Outcome> {
    let files = catalog::emit_bundle(id, dir)?;
    let names: Vec<String> = files.iter().map(|f| f.display().to_string()).collect();
    Ok(Outcome::ok(json!({ "id": id, "files": names })))
}

/// Report for an error, as printed by the binary.
pub fn error_value(e: &Error) -> Value {
    json!({ "error": e.to_string() })
}
