//! Graded pieces of maps between graded free modules over `F_p[s, t]`.
//!
//! A free module with generator degrees `a_1, ..., a_k` is `⊕ R(-a_i)`; its
//! degree-`d` piece has basis `s^u t^(d - a_i - u) e_i`, ordered by generator
//! and then by decreasing power of `s`. A matrix defines a graded map of
//! degree zero when entry `(i, j)` is homogeneous of degree
//! `source[j] - target[i]` (or zero).

use super::field::{Fp, Ring};
use super::matrix::Matrix;
use super::poly::{Mono, Poly, PolyRing};
use crate::error::{Error, Result};

/// Dimension of the degree-`d` piece of `⊕ R(-a_i)`.
pub fn piece_dim(degrees: &[i64], d: i64) -> usize {
    degrees.iter().map(|&a| (d - a + 1).max(0) as usize).sum()
}

/// Index offsets of each generator's block within the degree-`d` piece.
fn offsets(degrees: &[i64], d: i64) -> Vec<usize> {
    let mut out = Vec::with_capacity(degrees.len());
    let mut acc = 0;
    for &a in degrees {
        out.push(acc);
        acc += (d - a + 1).max(0) as usize;
    }
    out
}

fn check_ring(ring: &PolyRing) -> Result<()> {
    if ring.nvars() != 2 {
        return Err(Error::InvalidParameter(format!(
            "graded pieces need a ring in two variables, got {}",
            ring.nvars()
        )));
    }
    Ok(())
}

/// Checks homogeneity of every entry against the generator degrees.
pub fn check_homogeneous(m: &Matrix<Poly>, source: &[i64], target: &[i64]) -> Result<()> {
    if m.cols() != source.len() || m.rows() != target.len() {
        return Err(Error::DimensionMismatch(format!(
            "{}x{} matrix with {} source and {} target degrees",
            m.rows(),
            m.cols(),
            source.len(),
            target.len()
        )));
    }
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let e = m.get(i, j);
            if e.is_zero() {
                continue;
            }
            let want = source[j] - target[i];
            match e.homogeneous_degree() {
                Some(d) if d as i64 == want => {}
                _ => {
                    return Err(Error::NotHomogeneous(format!(
                        "entry ({i}, {j}) = {e:?} should be homogeneous of degree {want}"
                    )))
                }
            }
        }
    }
    Ok(())
}

/// The `F_p`-linear map between degree-`d` pieces induced by `m`.
pub fn graded_piece_map(
    ring: &PolyRing,
    m: &Matrix<Poly>,
    source: &[i64],
    target: &[i64],
    d: i64,
) -> Result<Matrix<u64>> {
    check_ring(ring)?;
    check_homogeneous(m, source, target)?;
    if d < 0 {
        return Err(Error::InvalidParameter(format!("negative degree {d}")));
    }
    let fp: Fp = ring.fp();
    let src_off = offsets(source, d);
    let tgt_off = offsets(target, d);
    let mut out = Matrix::zeros(&fp, piece_dim(target, d), piece_dim(source, d));
    for j in 0..m.cols() {
        let sd = d - source[j];
        if sd < 0 {
            continue;
        }
        for u in 0..=sd {
            // source basis monomial s^(sd-u) t^u
            let col = src_off[j] + u as usize;
            let mono = Mono::from_exps(&[(sd - u) as u32, u as u32]);
            for i in 0..m.rows() {
                let e = m.get(i, j);
                if e.is_zero() {
                    continue;
                }
                let td = d - target[i];
                for &(mm, c) in e.terms() {
                    let prod = mm.mul(mono);
                    let tpow = prod.exp(1) as i64;
                    debug_assert_eq!(prod.exp(0) as i64 + tpow, td);
                    let row = tgt_off[i] + tpow as usize;
                    let v = fp.add(out.get(row, col), &c);
                    out.set(row, col, v);
                }
            }
        }
    }
    Ok(out)
}

/// Coordinates of a vector of degree-`d` forms in the piece basis.
pub fn piece_coordinates(v: &[Poly], degrees: &[i64], d: i64) -> Result<Vec<u64>> {
    let off = offsets(degrees, d);
    let mut out = vec![0u64; piece_dim(degrees, d)];
    for (i, e) in v.iter().enumerate() {
        for &(m, c) in e.terms() {
            if m.degree() as i64 != d - degrees[i] {
                return Err(Error::NotHomogeneous(format!("component {i} = {e:?}")));
            }
            out[off[i] + m.exp(1) as usize] = c;
        }
    }
    Ok(out)
}

/// The vector of forms with the given piece coordinates.
pub fn piece_vector(ring: &PolyRing, coords: &[u64], degrees: &[i64], d: i64) -> Vec<Poly> {
    let off = offsets(degrees, d);
    degrees
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            let k = d - a;
            let mut acc = ring.zero();
            if k >= 0 {
                for u in 0..=k {
                    let c = coords[off[i] + u as usize];
                    if c != 0 {
                        let m = Mono::from_exps(&[(k - u) as u32, u as u32]);
                        acc = ring.add(&acc, &ring.monomial(m, c));
                    }
                }
            }
            acc
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::linalg::rank;

    fn ring() -> PolyRing {
        PolyRing::new(Fp::new(5).unwrap(), 2).unwrap()
    }

    #[test]
    fn zero_map_dimensions() {
        let r = ring();
        let m = Matrix::zeros(&r, 2, 3);
        let g = graded_piece_map(&r, &m, &[0, 0, 0], &[0, 0], 2).unwrap();
        assert_eq!(g.shape(), (6, 9));
        assert!(g.is_zero(&r.fp()));
    }

    #[test]
    fn multiplication_by_s() {
        let r = ring();
        let m = Matrix::from_rows(vec![vec![r.var(0)]]).unwrap();
        let g = graded_piece_map(&r, &m, &[1], &[0], 1).unwrap();
        assert_eq!(g.shape(), (2, 1));
        assert_eq!(rank(&r.fp(), &g), 1);
        assert_eq!(g.column(0), vec![1, 0]);
    }

    #[test]
    fn rejects_inhomogeneous_entries() {
        let r = ring();
        let e = r.add(&r.var(0), &r.one());
        let m = Matrix::from_rows(vec![vec![e]]).unwrap();
        assert!(matches!(
            graded_piece_map(&r, &m, &[1], &[0], 1),
            Err(Error::NotHomogeneous(_))
        ));
    }

    #[test]
    fn coordinates_roundtrip() {
        let r = ring();
        let degs = [0i64, -1, 2];
        let d = 3;
        let coords: Vec<u64> = (0..piece_dim(&degs, d)).map(|i| (i as u64 * 3 + 1) % 5).collect();
        let v = piece_vector(&r, &coords, &degs, d);
        assert_eq!(piece_coordinates(&v, &degs, d).unwrap(), coords);
    }
}
