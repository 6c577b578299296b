mod common;

use proptest::prelude::*;

use esheaf::exact::graded::graded_piece_map;
use esheaf::exact::linalg::{self, bareiss_rank, rank_kernel_image, specialize};
use esheaf::exact::pid::{column_echelon, UPolyRing};
use esheaf::exact::{FiniteField, Field, Fp, Gf, Matrix, Poly, PolyRing, RatFuncField, Ring, UPoly};
use esheaf::theta::generic_rank;

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![3u64, 5, 7, 11])
}

fn small_matrix(p: u64, max: usize) -> impl Strategy<Value = Matrix<u64>> {
    (1..=max, 1..=max).prop_flat_map(move |(r, c)| {
        prop::collection::vec(0..p, r * c).prop_map(move |d| Matrix::from_vec(r, c, d).unwrap())
    })
}

fn poly_strategy(nvars: usize) -> impl Strategy<Value = Vec<(Vec<u32>, u64)>> {
    prop::collection::vec((prop::collection::vec(0u32..3, nvars), 0u64..7), 0..5)
}

/// A random form of degree `k` in `s, t`.
fn form(ring: &PolyRing, coeffs: &[u64], k: i64) -> Poly {
    if k < 0 {
        return ring.zero();
    }
    let k = k as u32;
    ring.from_terms((0..=k).map(|u| (vec![u, k - u], coeffs[u as usize % coeffs.len()]))).unwrap()
}

#[test]
fn identity_zero_and_known_ranks() {
    let f = Fp::new(5).unwrap();
    let id = Matrix::identity(&f, 3);
    let r = rank_kernel_image(&f, &id);
    assert_eq!((r.rank, r.kernel.cols(), r.image.cols()), (3, 0, 3));
    let z = Matrix::zeros(&f, 2, 4);
    let r = rank_kernel_image(&f, &z);
    assert_eq!((r.rank, r.kernel.cols(), r.image.cols()), (0, 4, 0));
    assert!(r.pivots.is_empty());
}

#[test]
fn rank_over_rational_functions() {
    // x_1 + T x_2 from the socle jump fixture: rank 2 over F_5(T)
    let fp = Fp::new(5).unwrap();
    let ring = PolyRing::new(fp, 1).unwrap();
    let rf = RatFuncField::new(ring.clone());
    let t = ring.var(0);
    let one = ring.one();
    let zero = ring.zero();
    let rows = vec![
        vec![zero.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![zero.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![t.clone(), zero.clone(), zero.clone(), zero.clone()],
        vec![one, t, zero.clone(), zero],
    ];
    let m = Matrix::from_rows(rows).unwrap();
    let mr = m.map(|e| rf.from_poly(e.clone()));
    assert_eq!(linalg::rank(&rf, &mr), 2);
    assert_eq!(bareiss_rank(&ring, &m).unwrap(), 2);
    assert_eq!(generic_rank(&ring, &m, 1).unwrap(), 2);
    // [[T]] at T = 3
    let single = Matrix::from_rows(vec![vec![ring.var(0)]]).unwrap();
    let s = specialize(&ring, &single, &fp, &[3]).unwrap();
    assert_eq!(*s.get(0, 0), 3);
}

#[test]
fn rational_function_arithmetic() {
    let fp = Fp::new(7).unwrap();
    let ring = PolyRing::new(fp, 2).unwrap();
    let rf = RatFuncField::new(ring.clone());
    let x = ring.var(0);
    let y = ring.var(1);
    let xy = ring.mul(&x, &y);
    // x y / y^2 = x / y
    let a = rf.make(xy.clone(), ring.mul(&y, &y)).unwrap();
    let b = rf.make(x.clone(), y.clone()).unwrap();
    assert!(rf.equal(&a, &b));
    let prod = rf.mul(&b, &rf.inv(&b).unwrap());
    assert!(rf.equal(&prod, &rf.one()));
    assert!(rf.make(x, ring.zero()).is_none());
    assert!(rf.inv(&rf.zero()).is_none());
}

#[test]
fn extension_field_frobenius() {
    for (p, k) in [(3, 2), (5, 2), (3, 4), (7, 3)] {
        let f = Gf::new(p, k).unwrap();
        assert_eq!(f.order(), p.pow(k as u32));
        for idx in (0..f.order()).step_by(7) {
            let a = f.element(idx);
            assert_eq!(f.index_of(&a), idx);
            let mut b = a;
            for _ in 0..k {
                b = f.frobenius(&b);
            }
            assert_eq!(b, a, "Frobenius^k is not the identity on F_{p}^{k}");
            if !f.is_zero(&a) {
                assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), f.one());
            }
        }
    }
}

#[test]
fn polynomial_matrix_kernel_over_pid() {
    let fp = Fp::new(5).unwrap();
    let ur = UPolyRing::new(fp);
    let t = UPoly::monomial(fp, 1, 1);
    let one = UPoly::constant(fp, 1);
    let z = UPoly::zero(fp);
    // [[1, t, t^2]]: kernel of rank 2, image generated by 1
    let a = Matrix::from_rows(vec![vec![one.clone(), t.clone(), t.mul(&t)]]).unwrap();
    let e = column_echelon(&ur, &a);
    assert_eq!(e.rank(), 1);
    let k = e.kernel_basis();
    assert_eq!(k.cols(), 2);
    let prod = a.mul(&ur, &k).unwrap();
    assert!(prod.data().iter().all(|x| x.is_zero()));
    assert!(e.contains(&[t.clone()]));
    let b = Matrix::from_rows(vec![vec![t.clone(), z]]).unwrap();
    let e = column_echelon(&ur, &b);
    assert!(!e.contains(&[one]));
    assert!(e.contains(&[t.mul(&t)]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn elimination_rank_matches_minors((p, m) in prime().prop_flat_map(|p| (Just(p), small_matrix(p, 4)))) {
        let f = Fp::new(p).unwrap();
        prop_assert_eq!(linalg::rank(&f, &m), common::rank_by_minors(p, &m.to_rows()));
        let r = rank_kernel_image(&f, &m);
        prop_assert_eq!(r.rank + r.kernel.cols(), m.cols());
        prop_assert!(m.mul(&f, &r.kernel).unwrap().is_zero(&f));
    }

    #[test]
    fn product_rank_is_bounded(p in prime(), a in prop::collection::vec(0u64..11, 12), b in prop::collection::vec(0u64..11, 12)) {
        let f = Fp::new(p).unwrap();
        let a = Matrix::from_vec(3, 4, a.into_iter().map(|x| x % p).collect()).unwrap();
        let b = Matrix::from_vec(4, 3, b.into_iter().map(|x| x % p).collect()).unwrap();
        let ab = a.mul(&f, &b).unwrap();
        let rab = linalg::rank(&f, &ab);
        prop_assert!(rab <= linalg::rank(&f, &a).min(linalg::rank(&f, &b)));
        prop_assert_eq!(rab, common::rank_mod(p, ab.to_rows()));
    }

    #[test]
    fn polynomials_form_a_commutative_ring(a in poly_strategy(3), b in poly_strategy(3), c in poly_strategy(3)) {
        let ring = PolyRing::new(Fp::new(7).unwrap(), 3).unwrap();
        let a = ring.from_terms(a).unwrap();
        let b = ring.from_terms(b).unwrap();
        let c = ring.from_terms(c).unwrap();
        prop_assert_eq!(ring.mul(&a, &b), ring.mul(&b, &a));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.add(&ring.add(&a, &b), &c), ring.add(&a, &ring.add(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &ring.add(&b, &c)), ring.add(&ring.mul(&a, &b), &ring.mul(&a, &c)));
        prop_assert!(ring.is_zero(&ring.sub(&a, &a)));
        prop_assert_eq!(ring.mul(&a, &ring.one()), a.clone());
        // evaluation is a ring map
        let f = Fp::new(7).unwrap();
        let pt = [2, 5, 3];
        let ev = |x: &Poly| ring.eval(&f, x, &pt).unwrap();
        prop_assert_eq!(ev(&ring.mul(&a, &b)), f.mul(&ev(&a), &ev(&b)));
        if !b.is_zero() {
            prop_assert_eq!(ring.exact_div(&ring.mul(&a, &b), &b), Some(a.clone()));
        }
    }

    #[test]
    fn graded_pieces_compose(
        src in prop::collection::vec(0i64..3, 1..3),
        mid in prop::collection::vec(-1i64..2, 1..3),
        tgt in prop::collection::vec(-2i64..1, 1..3),
        coeffs in prop::collection::vec(0u64..5, 4),
        d in 0i64..5,
    ) {
        let ring = PolyRing::new(Fp::new(5).unwrap(), 2).unwrap();
        let f = ring.fp();
        // B: ⊕R(-src) -> ⊕R(-mid), A: ⊕R(-mid) -> ⊕R(-tgt)
        let b = Matrix::from_fn(mid.len(), src.len(), |i, j| form(&ring, &coeffs[(i + j) % 4..], src[j] - mid[i]));
        let a = Matrix::from_fn(tgt.len(), mid.len(), |i, j| form(&ring, &coeffs[(i * 2 + j) % 4..], mid[j] - tgt[i]));
        let ab = a.mul(&ring, &b).unwrap();
        let pa = graded_piece_map(&ring, &a, &mid, &tgt, d).unwrap();
        let pb = graded_piece_map(&ring, &b, &src, &mid, d).unwrap();
        let pab = graded_piece_map(&ring, &ab, &src, &tgt, d).unwrap();
        prop_assert_eq!(pab, pa.mul(&f, &pb).unwrap());
    }

    #[test]
    fn generic_rank_bounds_specializations(entries in prop::collection::vec(poly_strategy(2), 9), seed in 0u64..1000) {
        let fp = Fp::new(5).unwrap();
        let ring = PolyRing::new(fp, 2).unwrap();
        let m = Matrix::from_vec(3, 3, entries.into_iter().map(|t| ring.from_terms(t).unwrap()).collect()).unwrap();
        let g = generic_rank(&ring, &m, seed).unwrap();
        prop_assert_eq!(g, bareiss_rank(&ring, &m).unwrap());
        let rf = RatFuncField::new(ring.clone());
        prop_assert_eq!(g, linalg::rank(&rf, &m.map(|e| rf.from_poly(e.clone()))));
        let f = Gf::new(5, 2).unwrap();
        for idx in 0..100u64 {
            let pt = [f.element(idx % 25), f.element((idx * 7 + 3) % 25)];
            let s = specialize(&ring, &m, &f, &pt).unwrap();
            prop_assert!(linalg::rank(&f, &s) <= g);
        }
    }

    #[test]
    fn gcd_divides_both(a in prop::collection::vec(0u64..5, 0..5), b in prop::collection::vec(0u64..5, 0..5)) {
        let fp = Fp::new(5).unwrap();
        let a = UPoly::new(fp, a);
        let b = UPoly::new(fp, b);
        let g = a.gcd(&b);
        if !g.is_zero() {
            prop_assert!(a.rem(&g).is_zero());
            prop_assert!(b.rem(&g).is_zero());
        }
        if !b.is_zero() {
            let (q, r) = a.div_rem(&b);
            prop_assert_eq!(q.mul(&b).add(&r), a.clone());
            prop_assert!(r.is_zero() || r.degree() < b.degree());
        }
    }
}
