//! Standard affine charts of the Grassmannian and polynomial
//! parametrizations of loci inside them.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::{Fp, Gf, GfElem, Matrix, Poly, PolyRing, Ring};
use crate::liealg::EPoint;

/// The chart `U_Σ` of r-planes in `F^n` whose `Σ`-minor is invertible.
/// `sigma` is a sorted list of 0-based row indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Chart {
    pub n: usize,
    pub sigma: Vec<usize>,
}

impl Chart {
    pub fn new(n: usize, mut sigma: Vec<usize>) -> Result<Self> {
        sigma.sort_unstable();
        sigma.dedup();
        if sigma.is_empty() || sigma.iter().any(|&i| i >= n) {
            return Err(Error::InvalidParameter(format!("bad chart rows {sigma:?} for n = {n}")));
        }
        Ok(Chart { n, sigma })
    }

    pub fn r(&self) -> usize {
        self.sigma.len()
    }

    /// Free coordinates `(i, j)` with `i ∉ Σ`, row-major.
    pub fn free_coords(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .filter(|i| !self.sigma.contains(i))
            .flat_map(|i| (0..self.r()).map(move |j| (i, j)))
            .collect()
    }

    pub fn contains(&self, eps: &EPoint) -> bool {
        let f = eps.field();
        let minor = eps.matrix().select_rows(&self.sigma);
        linalg::rank(f, &minor) == self.r()
    }

    /// `eps · (Σ-minor)^{-1}`, which has the identity in the `Σ` rows.
    pub fn normalize(&self, eps: &EPoint) -> Result<EPoint> {
        let f = eps.field();
        if eps.n() != self.n || eps.r() != self.r() {
            return Err(Error::DimensionMismatch("point and chart shapes differ".into()));
        }
        let minor = eps.matrix().select_rows(&self.sigma);
        let inv = linalg::inverse(f, &minor)
            .ok_or_else(|| Error::OutsideChart(format!("{eps:?} not in chart {:?}", self.sigma)))?;
        EPoint::new(f.clone(), eps.matrix().mul(f, &inv)?)
    }

    /// The chart coordinates of a point: its normalized entries at the free
    /// positions.
    pub fn coordinates(&self, eps: &EPoint) -> Result<Vec<GfElem>> {
        let norm = self.normalize(eps)?;
        Ok(self.free_coords().iter().map(|&(i, j)| *norm.matrix().get(i, j)).collect())
    }
}

/// The chart with the lexicographically first invertible minor, and the
/// normalized representative of the point in it.
pub fn chart_of_point(eps: &EPoint) -> Result<(Chart, EPoint)> {
    let sigma = linalg::independent_rows(eps.field(), eps.matrix());
    if sigma.len() != eps.r() {
        return Err(Error::RankDeficient);
    }
    let chart = Chart::new(eps.n(), sigma)?;
    let norm = chart.normalize(eps)?;
    Ok((chart, norm))
}

/// A polynomial map from affine `d`-space into a chart: free coordinate
/// `(i, j)` is `coords[(i, j)]` (zero when absent).
#[derive(Clone, Debug, PartialEq)]
pub struct ChartParam {
    pub chart: Chart,
    pub ring: PolyRing,
    pub coords: BTreeMap<(usize, usize), Poly>,
    pub label: String,
}

impl ChartParam {
    pub fn new(
        chart: Chart,
        ring: PolyRing,
        coords: BTreeMap<(usize, usize), Poly>,
        label: impl Into<String>,
    ) -> Result<Self> {
        for &(i, j) in coords.keys() {
            if i >= chart.n || j >= chart.r() || chart.sigma.contains(&i) {
                return Err(Error::InvalidParameter(format!(
                    "({i}, {j}) is not a free coordinate of chart {:?}",
                    chart.sigma
                )));
            }
        }
        Ok(ChartParam { chart, ring, coords, label: label.into() })
    }

    /// Parameter count.
    pub fn d(&self) -> usize {
        self.ring.nvars()
    }

    /// The `n x r` matrix of polynomials, identity in the `Σ` rows.
    pub fn matrix(&self) -> Matrix<Poly> {
        let r = &self.ring;
        Matrix::from_fn(self.chart.n, self.chart.r(), |i, j| {
            if let Some(k) = self.chart.sigma.iter().position(|&s| s == i) {
                if k == j {
                    r.one()
                } else {
                    r.zero()
                }
            } else {
                self.coords.get(&(i, j)).cloned().unwrap_or_else(|| r.zero())
            }
        })
    }

    /// The point at a parameter value.
    pub fn point_at(&self, field: &Gf, params: &[GfElem]) -> Result<EPoint> {
        let m = linalg::specialize(&self.ring, &self.matrix(), field, params)?;
        EPoint::new(field.clone(), m)
    }

    pub fn to_json(&self) -> LocusJson {
        LocusJson {
            sigma: self.chart.sigma.clone(),
            n: Some(self.chart.n),
            params: self.d(),
            coords: self
                .coords
                .iter()
                .map(|(&(i, j), p)| CoordJson {
                    i,
                    j,
                    poly: p.terms().iter().map(|(m, c)| (m.exps(self.d()), *c as i64)).collect(),
                })
                .collect(),
            label: self.label.clone(),
        }
    }

    pub fn from_json(fp: Fp, n: usize, j: &LocusJson) -> Result<Self> {
        if let Some(jn) = j.n {
            if jn != n {
                return Err(Error::Malformed(format!("locus ambient dimension {jn}, algebra has {n}")));
            }
        }
        let chart = Chart::new(n, j.sigma.clone())?;
        let ring = PolyRing::new(fp, j.params)?;
        let mut coords = BTreeMap::new();
        for c in &j.coords {
            let p = ring.from_terms(c.poly.iter().map(|(e, x)| (e.clone(), fp.from_i64(*x))))?;
            coords.insert((c.i, c.j), p);
        }
        Self::new(chart, ring, coords, j.label.clone())
    }
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct CoordJson {
    pub i: usize,
    pub j: usize,
    /// Sparse polynomial: `[[exponents], coefficient]` pairs.
    pub poly: Vec<(Vec<u32>, i64)>,
}

/// Wire format of a parametrized locus.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct LocusJson {
    pub sigma: Vec<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    pub params: usize,
    pub coords: Vec<CoordJson>,
    pub label: String,
}
