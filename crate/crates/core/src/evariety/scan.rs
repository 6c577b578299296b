//! Radical and socle dimensions over a finite set of points, and the
//! observed rank-jump loci.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::liealg::{EPoint, RestrictedLieAlgebra};
use crate::modrep::{rad_soc_dims, UModule};

pub const OBSERVED_NOTE: &str = "extremes are observed over the listed points only; \
points over a finite field may miss components of the variety";

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PointDims {
    /// Entries of the normalized basis matrix, as `F_p`-coordinate lists.
    pub point: Vec<Vec<Vec<u64>>>,
    pub rad: Vec<usize>,
    pub soc: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct ScanReport {
    pub module: String,
    pub js: Vec<usize>,
    pub points: Vec<PointDims>,
    /// Per `j`: the largest radical dimension seen.
    pub observed_max_rad: Vec<usize>,
    /// Per `j`: the smallest socle dimension seen.
    pub observed_min_soc: Vec<usize>,
    /// Per `j`: indices of points with radical dimension below the maximum.
    pub rad_locus: Vec<Vec<usize>>,
    /// Per `j`: indices of points with socle dimension above the minimum.
    pub soc_locus: Vec<Vec<usize>>,
    pub note: String,
}

impl ScanReport {
    /// Whether every `Rad^j` and `Soc^j` dimension is the same at all points.
    pub fn is_constant(&self) -> bool {
        self.rad_locus.iter().chain(&self.soc_locus).all(|l| l.is_empty())
    }
}

/// Scans the points in order of their encoding.
pub fn scan_ranks(alg: &RestrictedLieAlgebra, m: &UModule, points: &[EPoint], js: &[usize]) -> Result<ScanReport> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let mut sorted: Vec<&EPoint> = points.iter().collect();
    sorted.sort_by_key(|e| e.encode());
    let mut recs = Vec::with_capacity(sorted.len());
    for eps in sorted {
        let dims = rad_soc_dims(alg, m, eps, js)?;
        recs.push(PointDims {
            point: eps.entries_json(),
            rad: dims.iter().map(|d| d.0).collect(),
            soc: dims.iter().map(|d| d.1).collect(),
        });
    }
    let nj = js.len();
    let observed_max_rad: Vec<usize> =
        (0..nj).map(|k| recs.iter().map(|r| r.rad[k]).max().expect("nonempty")).collect();
    let observed_min_soc: Vec<usize> =
        (0..nj).map(|k| recs.iter().map(|r| r.soc[k]).min().expect("nonempty")).collect();
    let rad_locus = (0..nj)
        .map(|k| (0..recs.len()).filter(|&i| recs[i].rad[k] < observed_max_rad[k]).collect())
        .collect();
    let soc_locus = (0..nj)
        .map(|k| (0..recs.len()).filter(|&i| recs[i].soc[k] > observed_min_soc[k]).collect())
        .collect();
    Ok(ScanReport {
        module: m.label().to_string(),
        js: js.to_vec(),
        points: recs,
        observed_max_rad,
        observed_min_soc,
        rad_locus,
        soc_locus,
        note: OBSERVED_NOTE.to_string(),
    })
}
