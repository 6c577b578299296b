//! Fiberwise comparison of the kernel and image sheaves with socles and
//! radicals, and the constant-rank certificate.

use serde::{Deserialize, Serialize};

use super::system::{generic_rank, ThetaSystem};
use crate::error::{Error, Result};
use crate::exact::linalg;
use crate::exact::pid::{column_echelon, UPolyRing};
use crate::exact::{FiniteField, Gf, GfElem, Matrix, Poly, UPoly};
use crate::modrep::rad_soc_dims;

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct GenericRanks {
    pub ker: usize,
    pub im: usize,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct FiberRecord {
    /// Parameter values, each as its `F_p`-coordinate list.
    pub coords: Vec<Vec<u64>>,
    /// Fiber dimension of the kernel sheaf; `None` where it is not determined
    /// by the computation (several parameters and a rank drop).
    pub ker: Option<usize>,
    /// Fiber dimension of the image sheaf, with the same convention.
    pub im: Option<usize>,
    pub soc: usize,
    pub rad: usize,
    /// `m - rank K_j(q)` and `rank I_j(q)`.
    pub matrix_ker: usize,
    pub matrix_im: usize,
    /// Rank of the specialized kernel-module basis (one-parameter charts).
    pub kernel_basis_rank: Option<usize>,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct SheafReport {
    pub label: String,
    pub j: usize,
    pub generic: GenericRanks,
    pub points: Vec<FiberRecord>,
    /// `K_j` and `I_j` keep their generic rank at every tested point.
    pub certified: bool,
    pub kernel_constant: bool,
    pub image_constant: bool,
    /// Every tested fiber of the kernel module has the generic rank
    /// (decided for one-parameter charts only).
    pub sheaf_locally_free: Option<bool>,
    /// Indices of points where a sheaf fiber differs from the socle or
    /// radical.
    pub mismatches: Vec<usize>,
    pub narrative: String,
}

/// Kernel module of a one-parameter polynomial matrix as a basis over
/// `F_p[T]`.
pub fn kernel_module_basis(ts: &ThetaSystem, k: &Matrix<Poly>) -> Result<Matrix<UPoly>> {
    let ring = ts.ring();
    if ring.nvars() != 1 {
        return Err(Error::InvalidParameter("kernel modules are computed over one parameter".into()));
    }
    let ur = UPolyRing::new(ring.fp());
    let a = k.map(|e| ring.to_upoly(e));
    Ok(column_echelon(&ur, &a).kernel_basis())
}

fn elem_coords(field: &Gf, e: &GfElem) -> Vec<u64> {
    e.0[..field.degree()].to_vec()
}

/// Compares, at each parameter value, the sheaf fibers of `Ker^j` and
/// `Im^j` with `Soc^j` and `Rad^j` of the specialized point.
pub fn fiber_compare(ts: &ThetaSystem, j: usize, field: &Gf, points: &[Vec<GfElem>]) -> Result<SheafReport> {
    let m = ts.module().dim();
    let (k, i) = ts.kernel_image_matrices(j)?;
    let gk = generic_rank(ts.ring(), &k, 0xA5)?;
    let gi = generic_rank(ts.ring(), &i, 0x5A)?;
    let generic = GenericRanks { ker: m - gk, im: gi };
    let d = ts.ring().nvars();
    let kbasis = if d == 1 { Some(kernel_module_basis(ts, &k)?) } else { None };
    let mut recs = Vec::with_capacity(points.len());
    for q in points {
        let eps = ts.param().point_at(field, q)?;
        let dims = rad_soc_dims(ts.algebra(), ts.module(), &eps, &[j])?[0];
        let kq = linalg::specialize(ts.ring(), &k, field, q)?;
        let iq = linalg::specialize(ts.ring(), &i, field, q)?;
        let matrix_ker = m - linalg::rank(field, &kq);
        let matrix_im = linalg::rank(field, &iq);
        let kernel_basis_rank = kbasis.as_ref().map(|b| {
            let s = b.map(|u| u.eval(field, &q[0]));
            linalg::rank(field, &s)
        });
        let (ker, im) = match d {
            0 => (Some(matrix_ker), Some(matrix_im)),
            1 => (kernel_basis_rank, Some(generic.im)),
            _ => (
                (matrix_ker == generic.ker).then_some(matrix_ker),
                (matrix_im == generic.im).then_some(matrix_im),
            ),
        };
        let agree = ker == Some(dims.1) && im == Some(dims.0);
        recs.push(FiberRecord {
            coords: q.iter().map(|e| elem_coords(field, e)).collect(),
            ker,
            im,
            soc: dims.1,
            rad: dims.0,
            matrix_ker,
            matrix_im,
            kernel_basis_rank,
            agree,
        });
    }
    let kernel_constant = recs.iter().all(|r| r.matrix_ker == generic.ker);
    let image_constant = recs.iter().all(|r| r.matrix_im == generic.im);
    let sheaf_locally_free = (d <= 1).then(|| recs.iter().all(|r| r.ker == Some(generic.ker)));
    let mismatches: Vec<usize> = (0..recs.len()).filter(|&x| !recs[x].agree).collect();
    let narrative = narrative(generic, kernel_constant, image_constant, &recs, &mismatches);
    Ok(SheafReport {
        label: ts.param().label.clone(),
        j,
        generic,
        points: recs,
        certified: kernel_constant && image_constant,
        kernel_constant,
        image_constant,
        sheaf_locally_free,
        mismatches,
        narrative,
    })
}

fn narrative(
    g: GenericRanks,
    kc: bool,
    ic: bool,
    recs: &[FiberRecord],
    mismatches: &[usize],
) -> String {
    let mut out = Vec::new();
    if kc && ic {
        out.push(format!(
            "constant rank over tested points ({} points): socle dimension {} and radical dimension {} \
             everywhere, so the kernel and image sheaves are vector bundles on the tested locus",
            recs.len(),
            g.ker,
            g.im
        ));
    } else {
        if !kc {
            out.push(format!("socle dimension differs from the generic value {} at some tested point", g.ker));
        }
        if !ic {
            out.push(format!("radical dimension differs from the generic value {} at some tested point", g.im));
        }
        if kc {
            out.push("the socle part of the criterion holds: the kernel sheaf is a bundle on the tested locus".into());
        }
        if ic {
            out.push("the radical part of the criterion holds: the image sheaf is a bundle on the tested locus".into());
        }
    }
    if !mismatches.is_empty() {
        out.push(format!("sheaf fiber differs from socle or radical at points {mismatches:?}"));
    }
    out.join("; ")
}

/// Constant-rank verdict separately for `K_j` and `I_j`, with the first
/// witness point for each failure.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct BundleCertificate {
    pub certified: bool,
    pub kernel_constant: bool,
    pub image_constant: bool,
    pub kernel_witness: Option<Vec<Vec<u64>>>,
    pub image_witness: Option<Vec<Vec<u64>>>,
    /// Every point of the chart over the field was tested.
    pub exhaustive: bool,
    pub narrative: String,
}

pub fn bundle_certificate(ts: &ThetaSystem, j: usize, field: &Gf, points: &[Vec<GfElem>]) -> Result<BundleCertificate> {
    let rep = fiber_compare(ts, j, field, points)?;
    let kernel_witness =
        rep.points.iter().find(|r| r.matrix_ker != rep.generic.ker).map(|r| r.coords.clone());
    let image_witness = rep.points.iter().find(|r| r.matrix_im != rep.generic.im).map(|r| r.coords.clone());
    let d = ts.ring().nvars() as u32;
    let exhaustive = (field.order()).checked_pow(d).is_some_and(|n| n as usize <= distinct(points));
    let mut narrative = rep.narrative.clone();
    if rep.certified {
        if exhaustive {
            narrative.push_str("; all rational points of the chart were tested");
        } else {
            narrative.push_str("; sampled points only");
        }
    }
    Ok(BundleCertificate {
        certified: rep.certified,
        kernel_constant: rep.kernel_constant,
        image_constant: rep.image_constant,
        kernel_witness,
        image_witness,
        exhaustive,
        narrative,
    })
}

fn distinct(points: &[Vec<GfElem>]) -> usize {
    points.iter().collect::<std::collections::BTreeSet<_>>().len()
}

/// Every point of affine `d`-space over `field`, or `None` when there are
/// more than `limit`.
pub fn all_parameter_points(field: &Gf, d: usize, limit: usize) -> Option<Vec<Vec<GfElem>>> {
    let q = field.order() as usize;
    let total = q.checked_pow(d as u32)?;
    if total > limit {
        return None;
    }
    let elems: Vec<GfElem> = field.elements().collect();
    Some(
        (0..total)
            .map(|mut c| {
                (0..d)
                    .map(|_| {
                        let e = elems[c % q];
                        c /= q;
                        e
                    })
                    .collect()
            })
            .collect(),
    )
}
