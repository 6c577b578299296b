//! Hilbert functions of the graded kernel and image modules over `k[s, t]`
//! and recovery of splitting types on `P^1`.
//!
//! Both sheaves are subsheaves of the trivial bundle `O^m`, so all twists
//! are `<= 0`, and the modules of twisted global sections are free with
//! Hilbert function `h(d) = Σ max(0, d + a_i + 1)` in every degree. The
//! multiplicity of the twist `-d` is then the second difference of `h`
//! at `d`.

use serde::{Deserialize, Serialize};

use super::system::{dehomogenize_upoly, P1System};
use crate::error::{Error, Result};
use crate::exact::graded::{graded_piece_map, piece_dim};
use crate::exact::linalg;
use crate::exact::pid::{column_echelon, ColumnEchelon, UPolyRing};
use crate::exact::{Matrix, UPoly};

/// Twists `a_1 >= ... >= a_k` of `⊕ O(a_i)`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplittingType {
    pub twists: Vec<i64>,
}

impl SplittingType {
    pub fn new(mut twists: Vec<i64>) -> Self {
        twists.sort_unstable_by(|a, b| b.cmp(a));
        SplittingType { twists }
    }

    pub fn rank(&self) -> usize {
        self.twists.len()
    }

    pub fn degree(&self) -> i64 {
        self.twists.iter().sum()
    }

    /// `Σ max(0, d + a_i + 1)`.
    pub fn hilbert(&self, d: i64) -> usize {
        self.twists.iter().map(|&a| (d + a + 1).max(0) as usize).sum()
    }
}

/// Second difference of `h` at `d`, with `h(-1) = h(-2) = 0`.
fn second_difference(h: &[usize], d: usize) -> i64 {
    let at = |k: isize| if k < 0 { 0 } else { h[k as usize] as i64 };
    let d = d as isize;
    at(d) - 2 * at(d - 1) + at(d - 2)
}

/// Recovers the twists from a Hilbert function whose first difference is
/// eventually `rank`. At least the last two degrees must have that
/// difference, and the result must reproduce `h` exactly.
pub fn splitting_from_hilbert(h: &[usize], rank: usize) -> Result<SplittingType> {
    splitting_with_window(h, rank, 2)
}

/// As [`splitting_from_hilbert`], requiring `window` trailing degrees of
/// constant difference.
pub fn splitting_with_window(h: &[usize], rank: usize, window: usize) -> Result<SplittingType> {
    let stable = (0..h.len())
        .rev()
        .take_while(|&d| {
            let prev = if d == 0 { 0 } else { h[d - 1] };
            h[d] as i64 - prev as i64 == rank as i64
        })
        .count();
    if stable < window.max(1) {
        return Err(Error::NoStableWindow(format!(
            "need {window} trailing degrees with difference {rank}, found {stable} in {h:?}"
        )));
    }
    let mut twists = Vec::new();
    for d in 0..h.len() {
        let m = second_difference(h, d);
        if m < 0 {
            return Err(Error::InvariantViolation(format!(
                "negative multiplicity at degree {d} in {h:?}; the module is not free with twists <= 0"
            )));
        }
        twists.extend(std::iter::repeat(-(d as i64)).take(m as usize));
    }
    let st = SplittingType::new(twists);
    if st.rank() != rank {
        return Err(Error::NoStableWindow(format!("recovered {} twists, expected {rank}", st.rank())));
    }
    for (d, &v) in h.iter().enumerate() {
        if st.hilbert(d as i64) != v {
            return Err(Error::InvariantViolation(format!("reconstruction differs from h at degree {d}")));
        }
    }
    Ok(st)
}

/// `dim` of the degree-`d` piece of the graded kernel of `K_j`.
pub fn kernel_piece(sys: &P1System, j: usize, d: usize) -> Result<usize> {
    let (k, src, tgt) = sys.kernel_matrix(j)?;
    let f = sys.ring().fp();
    let map = graded_piece_map(sys.ring(), &k, &src, &tgt, d as i64)?;
    Ok(map.cols() - linalg::rank(&f, &map))
}

/// `h(0..=d_max)` of the graded kernel of `K_j`.
pub fn graded_kernel_hilbert(sys: &P1System, j: usize, d_max: usize) -> Result<Vec<usize>> {
    (0..=d_max).map(|d| kernel_piece(sys, j, d)).collect()
}

/// `h(0..=d_max)` of the image of `I_j` (not saturated; agrees with the
/// image bundle only for large `d`).
pub fn graded_image_hilbert(sys: &P1System, j: usize, d_max: usize) -> Result<Vec<usize>> {
    let (i, src, tgt) = sys.image_matrix(j)?;
    let f = sys.ring().fp();
    (0..=d_max)
        .map(|d| Ok(linalg::rank(&f, &graded_piece_map(sys.ring(), &i, &src, &tgt, d as i64)?)))
        .collect()
}

/// Membership tests for the image module on the two affine charts.
pub struct ImageCharts {
    /// Chart `t = 1`, polynomials in `s`.
    pub t_chart: ColumnEchelon,
    /// Chart `s = 1`, polynomials in `t`.
    pub s_chart: ColumnEchelon,
}

pub fn image_charts(sys: &P1System, j: usize) -> Result<ImageCharts> {
    let (i, _, _) = sys.image_matrix(j)?;
    let ur = UPolyRing::new(sys.ring().fp());
    let t1 = i.map(|e| dehomogenize_upoly(sys.ring(), e, 1));
    let s1 = i.map(|e| dehomogenize_upoly(sys.ring(), e, 0));
    Ok(ImageCharts { t_chart: column_echelon(&ur, &t1), s_chart: column_echelon(&ur, &s1) })
}

/// Degree-`d` piece of the saturated image: forms `v` of degree `d` whose
/// restrictions to both charts lie in the image there.
pub fn saturated_image_piece(sys: &P1System, charts: &ImageCharts, d: usize) -> Result<usize> {
    let m = sys.module().dim();
    let f = sys.ring().fp();
    let mut blocks: Vec<Vec<Vec<u64>>> = Vec::new();
    for i in 0..m {
        for u in 0..=d {
            // s^(d-u) t^u in component i
            let on_t = unit_vec(f, m, i, d - u);
            let on_s = unit_vec(f, m, i, u);
            let a = charts.t_chart.normal_form(&on_t);
            let b = charts.s_chart.normal_form(&on_s);
            blocks.push(a.iter().chain(&b).map(|p| p.coeffs().to_vec()).collect());
        }
    }
    let width: Vec<usize> = (0..2 * m)
        .map(|k| blocks.iter().map(|b| b[k].len()).max().unwrap_or(0))
        .collect();
    let rows: usize = width.iter().sum();
    let mut mat = Matrix::zeros(&f, rows, blocks.len());
    for (c, b) in blocks.iter().enumerate() {
        let mut off = 0;
        for (k, coeffs) in b.iter().enumerate() {
            for (e, &x) in coeffs.iter().enumerate() {
                mat.set(off + e, c, x);
            }
            off += width[k];
        }
    }
    Ok(blocks.len() - linalg::rank(&f, &mat))
}

fn unit_vec(f: crate::exact::Fp, m: usize, i: usize, deg: usize) -> Vec<UPoly> {
    (0..m).map(|k| if k == i { UPoly::monomial(f, 1, deg) } else { UPoly::zero(f) }).collect()
}

/// `h(0..=d_max)` of the saturated image module, the twisted global
/// sections of the image bundle.
pub fn saturated_image_hilbert(sys: &P1System, j: usize, d_max: usize) -> Result<Vec<usize>> {
    let charts = image_charts(sys, j)?;
    (0..=d_max).map(|d| saturated_image_piece(sys, &charts, d)).collect()
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SplittingReport {
    pub label: String,
    pub sheaf: String,
    pub j: usize,
    pub rank: usize,
    pub twists: Vec<i64>,
    pub hilbert: Vec<usize>,
    /// Largest column degree of the parametrization; twists are in its
    /// grading.
    pub entry_degree: u32,
    pub column_degrees: Vec<u32>,
}

/// Default cap on the degrees examined.
pub fn default_d_max(sys: &P1System, j: usize) -> usize {
    let m = sys.module().dim();
    let e = sys.column_degrees().iter().copied().max().unwrap_or(1).max(1) as usize;
    m * j * e + 2 * m + 4
}

fn stable_window(sys: &P1System) -> usize {
    sys.module().dim().max(4)
}

/// Computes `h` degree by degree until all `rank` twists have appeared and
/// a window of `max(4, m)` further degrees confirms the linear tail.
fn split_by_pieces(
    sys: &P1System,
    j: usize,
    rank: usize,
    d_max: Option<usize>,
    sheaf: &str,
    mut piece: impl FnMut(usize) -> Result<usize>,
) -> Result<SplittingReport> {
    let cap = d_max.unwrap_or_else(|| default_d_max(sys, j));
    let window = stable_window(sys);
    let mut h: Vec<usize> = Vec::new();
    let mut found: i64 = 0;
    let mut complete_at: Option<usize> = None;
    for d in 0..=cap {
        h.push(piece(d)?);
        found += second_difference(&h, d);
        if complete_at.is_none() && found == rank as i64 {
            complete_at = Some(d);
        }
        if complete_at.is_some_and(|c| d >= c + window) {
            break;
        }
    }
    let st = match complete_at {
        Some(c) if h.len() > c + window => splitting_with_window(&h, rank, window)?,
        _ => {
            return Err(Error::NoStableWindow(format!(
                "{sheaf}: no stable tail of difference {rank} within degree {cap}; partial h = {h:?}"
            )))
        }
    };
    Ok(SplittingReport {
        label: sys.param().label.clone(),
        sheaf: sheaf.to_string(),
        j,
        rank,
        twists: st.twists,
        hilbert: h,
        entry_degree: sys.column_degrees().iter().copied().max().unwrap_or(0),
        column_degrees: sys.column_degrees().to_vec(),
    })
}

/// Splitting type of `Ker^j` on the line.
pub fn kernel_splitting(sys: &P1System, j: usize, d_max: Option<usize>) -> Result<SplittingReport> {
    let (rank, _) = sys.generic_ranks(j)?;
    let (k, src, tgt) = sys.kernel_matrix(j)?;
    let f = sys.ring().fp();
    split_by_pieces(sys, j, rank, d_max, "kernel", |d| {
        let map = graded_piece_map(sys.ring(), &k, &src, &tgt, d as i64)?;
        debug_assert_eq!(map.cols(), piece_dim(&src, d as i64));
        Ok(map.cols() - linalg::rank(&f, &map))
    })
}

/// Splitting type of `Im^j` on the line, from the saturated image.
pub fn image_splitting(sys: &P1System, j: usize, d_max: Option<usize>) -> Result<SplittingReport> {
    let (_, rank) = sys.generic_ranks(j)?;
    let charts = image_charts(sys, j)?;
    split_by_pieces(sys, j, rank, d_max, "image", |d| saturated_image_piece(sys, &charts, d))
}
