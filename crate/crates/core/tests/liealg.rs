use proptest::prelude::*;

use esheaf::catalog::{heisenberg_algebra, make_classical};
use esheaf::exact::{linalg, Field, FiniteField, Fp, Gf, GfElem, Matrix, Ring};
use esheaf::liealg::classical::{classical_algebra, classical_dim, nilradical_of_parabolic, root_vector_indices, Family};
use esheaf::liealg::orbit::{adjoint_orbit_points, exp_is_automorphism, is_ad_nilpotent};
use esheaf::liealg::{is_elementary, EPoint, RestrictedLieAlgebra};
use esheaf::modrep::rad_soc_dims;

fn unit(n: usize, k: usize) -> Vec<u64> {
    (0..n).map(|i| u64::from(i == k)).collect()
}

fn realize(alg: &RestrictedLieAlgebra, v: &[u64]) -> Matrix<u64> {
    let fp = alg.fp();
    let mats = alg.realization().unwrap();
    let size = mats[0].rows();
    let terms: Vec<(u64, &Matrix<u64>)> = v.iter().copied().zip(mats.iter()).collect();
    Matrix::combination(&fp, size, size, &terms).unwrap()
}

#[test]
fn classical_algebras_validate() {
    for (fam, n, p) in [
        (Family::Gl, 2, 3),
        (Family::Gl, 3, 5),
        (Family::Sl, 2, 3),
        (Family::Sl, 3, 7),
        (Family::Sp, 2, 7),
        (Family::So, 2, 7),
    ] {
        let alg = classical_algebra(fam, n, p).unwrap();
        assert_eq!(alg.dim(), classical_dim(fam, n));
        let rep = alg.validate();
        assert!(rep.passed(), "{fam:?} {n}: {:?}", rep.first_failure());
    }
    assert!(heisenberg_algebra(5).unwrap().validate().passed());
}

#[test]
fn jacobi_failure_names_the_triple() {
    let mut alg = classical_algebra(Family::Sl, 2, 5).unwrap();
    // perturb [e, f] keeping antisymmetry
    let (e, f) = (0, 1);
    let c = alg.structure_constant(e, f, e);
    alg.set_structure_constant(e, f, e, (c + 1) % 5);
    alg.set_structure_constant(f, e, e, (5 - (c + 1) % 5) % 5);
    let rep = alg.validate();
    let fail = rep.first_failure().expect("perturbation must be detected");
    assert_eq!(fail.name, "jacobi");
    let w = fail.witness.as_deref().unwrap();
    for l in alg.labels() {
        assert!(w.contains(l.as_str()), "witness {w} does not name {l}");
    }
}

#[test]
fn rejects_even_and_composite_characteristic() {
    assert!(classical_algebra(Family::Gl, 2, 2).is_err());
    assert!(classical_algebra(Family::Gl, 2, 9).is_err());
    assert!(heisenberg_algebra(2).is_err());
}

#[test]
fn elementary_examples() {
    let f = Gf::new(3, 1).unwrap();
    let sl2 = classical_algebra(Family::Sl, 2, 3).unwrap();
    let e = EPoint::from_prime_columns(&f, 3, &[unit(3, 0)]).unwrap();
    let h = EPoint::from_prime_columns(&f, 3, &[unit(3, 2)]).unwrap();
    assert!(is_elementary(&sl2, &e).unwrap());
    assert!(!is_elementary(&sl2, &h).unwrap(), "h is toral, not p-nilpotent");
    let heis = heisenberg_algebra(5).unwrap();
    let f5 = Gf::new(5, 1).unwrap();
    let xy = EPoint::from_prime_columns(&f5, 3, &[unit(3, 0), unit(3, 1)]).unwrap();
    let xz = EPoint::from_prime_columns(&f5, 3, &[unit(3, 0), unit(3, 2)]).unwrap();
    assert!(!is_elementary(&heis, &xy).unwrap());
    assert!(is_elementary(&heis, &xz).unwrap());
    // wrong characteristic
    assert!(is_elementary(&heis, &e).is_err());
}

#[test]
fn nilradical_dimensions() {
    let f7 = Gf::new(7, 1).unwrap();
    for (fam, n, r, dim) in [
        (Family::Gl, 4, 2, 4),
        (Family::Gl, 4, 1, 3),
        (Family::Sl, 3, 1, 2),
        (Family::Sp, 2, 2, 3),
        (Family::Sp, 3, 3, 6),
        (Family::So, 2, 1, 3),
    ] {
        let alg = classical_algebra(fam, n, 7).unwrap();
        let u = nilradical_of_parabolic(fam, n, r, &f7).unwrap();
        assert_eq!(u.r(), dim, "{fam:?} {n} {r}");
        assert!(is_elementary(&alg, &u).unwrap());
    }
    assert!(nilradical_of_parabolic(Family::Gl, 3, 3, &f7).is_err());
}

#[test]
fn gl3_orbit_points() {
    let p = 5;
    let (alg, v) = make_classical(Family::Gl, 3, p).unwrap();
    let f = Gf::new(p, 1).unwrap();
    let eps = nilradical_of_parabolic(Family::Gl, 3, 1, &f).unwrap();
    let gens: Vec<Vec<u64>> = root_vector_indices(Family::Gl, 3).into_iter().map(|k| unit(9, k)).collect();
    let pts = adjoint_orbit_points(&alg, &eps, &gens, 20, 11, 2000).unwrap();
    assert_eq!(pts.len(), 20);
    for (a, pt) in pts.iter().enumerate() {
        assert!(is_elementary(&alg, pt).unwrap());
        assert_eq!(rad_soc_dims(&alg, &v, pt, &[1]).unwrap()[0].0, 1);
        for q in &pts[..a] {
            assert!(!q.same_span(pt), "repeated orbit point");
        }
    }
    // a non-nilpotent generator is refused
    let h = unit(9, 0);
    assert!(adjoint_orbit_points(&alg, &eps, &[h], 3, 0, 10).is_err());
}

#[test]
fn algebra_json_round_trip() {
    let alg = classical_algebra(Family::Sp, 2, 7).unwrap();
    let back = RestrictedLieAlgebra::from_json(&alg.to_json()).unwrap();
    assert_eq!(back.to_json(), alg.to_json());
    assert!(back.validate().passed());
}

fn random_gl(field: &Gf, r: usize, seed: &[u64]) -> Matrix<GfElem> {
    let mut k = 0;
    loop {
        let q = Matrix::from_fn(r, r, |i, j| field.element((seed[(i * r + j) % seed.len()] + k) % field.order()));
        if linalg::rank(field, &q) == r {
            return q;
        }
        k += 1;
        if k > 50 {
            return Matrix::identity(field, r);
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn elementary_is_basis_independent(seed in prop::collection::vec(0u64..1000, 9), which in 0usize..4) {
        let f = Gf::new(7, 2).unwrap();
        let cases = [(Family::Gl, 4, 2), (Family::Sp, 2, 2), (Family::So, 2, 1), (Family::Gl, 3, 1)];
        let (fam, n, r) = cases[which];
        let alg = classical_algebra(fam, n, 7).unwrap();
        let u = nilradical_of_parabolic(fam, n, r, &f).unwrap();
        let q = random_gl(&f, u.r(), &seed);
        let moved = u.rebased(&q).unwrap();
        prop_assert!(is_elementary(&alg, &moved).unwrap());
        // a basis change of a non-elementary span stays non-elementary
        let mut cols = u.columns();
        cols[0] = alg.basis_vector(&f, 0).iter().zip(&cols[0]).map(|(a, b)| f.add(a, b)).collect();
        if let Ok(bad) = EPoint::new(f.clone(), Matrix::from_columns(alg.dim(), &cols)) {
            let before = is_elementary(&alg, &bad).unwrap();
            prop_assert_eq!(is_elementary(&alg, &bad.rebased(&q).unwrap()).unwrap(), before);
        }
    }

    #[test]
    fn exponential_of_nilpotent_is_automorphism(coeffs in prop::collection::vec(0u64..7, 6), k in 1usize..3) {
        let alg = classical_algebra(Family::Gl, 4, 7).unwrap();
        // strictly upper triangular combination
        let mut x = vec![0u64; 16];
        let mut c = coeffs.iter();
        for i in 0..4 {
            for j in i + 1..4 {
                x[i * 4 + j] = *c.next().unwrap();
            }
        }
        prop_assert!(is_ad_nilpotent(&alg, &x));
        let f = Gf::new(7, k).unwrap();
        prop_assert!(exp_is_automorphism(&alg, &x, &f).unwrap());
    }

    #[test]
    fn p_power_matches_matrix_power(v in prop::collection::vec(0u64..7, 10), which in 0usize..3) {
        let cases = [(Family::Gl, 3), (Family::Sp, 2), (Family::So, 2)];
        let (fam, n) = cases[which];
        let alg = classical_algebra(fam, n, 7).unwrap();
        let fp = Fp::new(7).unwrap();
        let v: Vec<u64> = (0..alg.dim()).map(|i| v[i % v.len()] * (i as u64 + 1) % 7).collect();
        let pw = alg.p_power(&fp, &v);
        let lhs = realize(&alg, &pw);
        let rhs = realize(&alg, &v).pow(&fp, 7).unwrap();
        prop_assert_eq!(lhs, rhs);
        // and the bracket is the commutator
        let w: Vec<u64> = v.iter().rev().copied().collect();
        let br = realize(&alg, &alg.bracket(&fp, &v, &w));
        prop_assert_eq!(br, realize(&alg, &v).commutator(&fp, &realize(&alg, &w)).unwrap());
        prop_assert_eq!(fp.characteristic(), 7);
        prop_assert!(fp.is_zero(&fp.from_u64(7)));
    }
}
