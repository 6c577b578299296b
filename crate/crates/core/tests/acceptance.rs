//! End-to-end acceptance checks, one line of output per criterion.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use esheaf::catalog::{
    build_entry, catalog_list, cominuscule_identities, make_classical, make_heisenberg, make_jump_fixture,
    make_semidirect, make_sl2_pims, make_sl2_r, semidirect_line, Built, SemidirectKind,
};
use esheaf::evariety::enumerate::DEFAULT_BUDGET;
use esheaf::evariety::{chart_of_point, enumerate_elementary};
use esheaf::exact::linalg;
use esheaf::exact::{FiniteField, Gf, GfElem, Matrix, Poly, PolyRing, Ring};
use esheaf::liealg::classical::{nilradical_of_parabolic, root_vector_indices, Family};
use esheaf::liealg::orbit::adjoint_orbit_points;
use esheaf::liealg::{is_elementary, EPoint, RestrictedLieAlgebra};
use esheaf::modrep::constructions::{dual, ext_power, rebase, sym_power, tensor_power};
use esheaf::modrep::{jordan_type, rad_soc_dims, UModule};
use esheaf::p1split::{build_p1, image_splitting, kernel_splitting, splitting_from_hilbert, SplittingType};
use esheaf::theta::{all_parameter_points, build_theta, fiber_compare, operator_of_column, ThetaSystem};

use common::{kernel_twists_oracle, line_operators, rank_mod};

fn prime_rows(field: &Gf, m: &Matrix<GfElem>) -> Vec<Vec<u64>> {
    m.to_rows()
        .into_iter()
        .map(|r| r.iter().map(|e| field.as_prime(e).expect("prime field entry")).collect())
        .collect()
}

/// `Σ_i c_i ρ(x_i)` over `F_p` as plain rows.
fn action_rows(p: u64, m: &UModule, coeffs: &[u64]) -> Vec<Vec<u64>> {
    let d = m.dim();
    let mut out = common::zeros(d, d);
    for (a, &c) in m.actions().iter().zip(coeffs) {
        for (i, row) in a.to_rows().iter().enumerate() {
            for (k, &x) in row.iter().enumerate() {
                out[i][k] = (out[i][k] + c * x) % p;
            }
        }
    }
    out
}

/// Criterion 1: the Heisenberg algebra over `F_5`.
fn heisenberg() {
    let p = 5;
    let h = make_heisenberg(p).unwrap();
    let f = Gf::new(p, 1).unwrap();
    let pts = enumerate_elementary(&h.alg, 2, &f, DEFAULT_BUDGET).unwrap();
    assert_eq!(pts.len(), 6, "E(2, u_3)(F_5) should have 6 points");
    for pt in &pts {
        let cols = prime_rows(&f, pt.matrix());
        // z = basis vector 2 lies in the span
        let mut with_z = cols.clone();
        for (i, row) in with_z.iter_mut().enumerate() {
            row.push(u64::from(i == 2));
        }
        assert_eq!(rank_mod(p, with_z), 2, "point {pt:?} does not contain z");
        // Soc^1 by hand: common kernel of the two operators
        let mut stacked = Vec::new();
        for s in 0..2 {
            let c: Vec<u64> = cols.iter().map(|r| r[s]).collect();
            stacked.extend(action_rows(p, &h.module, &c));
        }
        let soc = h.module.dim() - rank_mod(p, stacked);
        assert_eq!(soc, 2);
        assert_eq!(rad_soc_dims(&h.alg, &h.module, pt, &[1]).unwrap()[0].1, 2);
    }
    let sys = build_p1(&h.alg, &h.module, &h.line).unwrap();
    let rep = kernel_splitting(&sys, 1, None).unwrap();
    assert_eq!(rep.twists, vec![0, -1]);
    let ops = line_operators(p, h.module.actions(), &h.line.columns);
    let mut oracle = kernel_twists_oracle(p, &ops, 1, 3 * 2 + 2);
    oracle.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(oracle, rep.twists);
}

/// Criterion 2: generic kernel rank against the socle jump at `T = 0`.
fn socle_jump() {
    let p = 5;
    let fx = make_jump_fixture(p).unwrap();
    let ts = build_theta(&fx.alg, &fx.module, &fx.chart).unwrap();
    // oracle: 3x3 minors of x_1 + T x_2 have degree <= 3, so the generic
    // rank is the largest rank over the five points of F_5
    let generic_rank = (0..p).map(|t| rank_mod(p, action_rows(p, &fx.module, &[1, t]))).max().unwrap();
    assert_eq!(fx.module.dim() - generic_rank, 2);
    let soc0 = fx.module.dim() - rank_mod(p, action_rows(p, &fx.module, &[1, 0]));
    assert_eq!(soc0, 3);
    for k in 1..=2 {
        let field = Gf::new(p, k).unwrap();
        let pts = all_parameter_points(&field, 1, 100).unwrap();
        let rep = fiber_compare(&ts, 1, &field, &pts).unwrap();
        assert_eq!(rep.generic.ker, 2);
        let zero = pts.iter().position(|q| field.is_zero(&q[0])).unwrap();
        assert_eq!(rep.points[zero].soc, 3);
        assert!(rep.mismatches.contains(&zero), "T = 0 not flagged over F_5^{k}");
        assert!(!rep.points[zero].agree);
        for r in &rep.points {
            assert_eq!(r.kernel_basis_rank, Some(2));
        }
    }
}

fn orbit_generators(alg: &RestrictedLieAlgebra, family: Family, n: usize) -> Vec<Vec<u64>> {
    root_vector_indices(family, n)
        .into_iter()
        .map(|k| (0..alg.dim()).map(|i| u64::from(i == k)).collect())
        .collect()
}

/// Criterion 3: `gl_4` at `u_(2,2)` and along its orbit.
fn gl4_canonical() {
    let p = 7;
    let (alg, v) = make_classical(Family::Gl, 4, p).unwrap();
    let f = Gf::new(p, 1).unwrap();
    let eps = nilradical_of_parabolic(Family::Gl, 4, 2, &f).unwrap();
    let vv = tensor_power(&v, 2).unwrap();
    let s2 = sym_power(&v, 2).unwrap();
    let l2 = ext_power(&v, 2).unwrap();
    let dims = |pt: &EPoint| {
        let a = rad_soc_dims(&alg, &v, pt, &[1, 2]).unwrap();
        [
            a[0].0,
            a[1].0,
            rad_soc_dims(&alg, &vv, pt, &[2]).unwrap()[0].0,
            rad_soc_dims(&alg, &s2, pt, &[2]).unwrap()[0].0,
            rad_soc_dims(&alg, &l2, pt, &[2]).unwrap()[0].0,
        ]
    };
    let want = [2, 0, 4, 3, 1];
    assert_eq!(dims(&eps), want);
    let gens = orbit_generators(&alg, Family::Gl, 4);
    let pts = adjoint_orbit_points(&alg, &eps, &gens, 20, 3, 2000).unwrap();
    assert_eq!(pts.len(), 20);
    for pt in &pts {
        assert!(is_elementary(&alg, pt).unwrap());
        assert_eq!(dims(pt), want, "at {pt:?}");
    }
}

/// Criterion 4: `sp_4` at the nilradical of the long-root parabolic.
fn sp4_symplectic() {
    let p = 7;
    let (alg, v) = make_classical(Family::Sp, 2, p).unwrap();
    let f = Gf::new(p, 1).unwrap();
    let eps = nilradical_of_parabolic(Family::Sp, 2, 2, &f).unwrap();
    assert_eq!(eps.r(), 3);
    assert!(is_elementary(&alg, &eps).unwrap());
    let d = rad_soc_dims(&alg, &v, &eps, &[1, 2]).unwrap();
    assert_eq!(d[0], (2, 2));
    assert_eq!(d[1].0, 0);
    for m in 1..=2 {
        let t = tensor_power(&v, m).unwrap();
        assert_eq!(rad_soc_dims(&alg, &t, &eps, &[m]).unwrap()[0].0, 1 << m);
    }
}

fn flat(m: &[Vec<u64>]) -> Vec<u64> {
    m.iter().flatten().copied().collect()
}

fn commutator(p: u64, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let ab = common::mat_mul(p, a, b);
    let ba = common::mat_mul(p, b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(&u, &w)| (u + p - w) % p).collect()).collect()
}

/// Criterion 5: bracket identities for the first maximal parabolic of
/// `sl_3`, against spans of matrix commutators.
fn cominuscule_sl3() {
    let p = 7;
    let rep = cominuscule_identities(Family::Sl, 3, 1, p).unwrap();
    let alg = esheaf::liealg::classical::classical_algebra(Family::Sl, 3, p).unwrap();
    let g: Vec<Vec<Vec<u64>>> = alg.realization().unwrap().iter().map(|m| m.to_rows()).collect();
    let unit = |i: usize, j: usize| {
        let mut m = common::zeros(3, 3);
        m[i][j] = 1;
        m
    };
    let u = [unit(0, 1), unit(0, 2)];
    let ug: Vec<Vec<Vec<u64>>> = u.iter().flat_map(|a| g.iter().map(|b| commutator(p, a, b))).collect();
    let dim_ug = rank_mod(p, ug.iter().map(|m| flat(m)).collect());
    let uug: Vec<Vec<u64>> = u.iter().flat_map(|a| ug.iter().map(|b| flat(&commutator(p, a, b)))).collect();
    let dim_uug = rank_mod(p, uug);
    // x ↦ ([x, u_1], [x, u_2]) on coordinates of g
    let cent_map: Vec<Vec<u64>> = g
        .iter()
        .map(|b| u.iter().flat_map(|a| flat(&commutator(p, b, a))).collect())
        .collect();
    let dim_cent = g.len() - rank_mod(p, cent_map);
    // normalizer: entries of [x, u_i] away from positions (0,1), (0,2)
    let norm_map: Vec<Vec<u64>> = g
        .iter()
        .map(|b| {
            u.iter()
                .flat_map(|a| {
                    let c = commutator(p, b, a);
                    (0..9).filter(|&k| k != 1 && k != 2).map(move |k| c[k / 3][k % 3]).collect::<Vec<_>>()
                })
                .collect()
        })
        .collect();
    let dim_p = g.len() - rank_mod(p, norm_map);
    assert_eq!((dim_ug, dim_p, dim_uug, dim_cent), (6, 6, 2, 2));
    assert_eq!(rep.dim_u, 2);
    assert_eq!(rep.dim_u_g, dim_ug);
    assert_eq!(rep.dim_p, dim_p);
    assert_eq!(rep.dim_u_u_g, dim_uug);
    assert_eq!(rep.dim_centralizer, dim_cent);
    assert!(rep.ug_equals_p && rep.uug_equals_u && rep.centralizer_equals_u);
}

fn random_params(field: &Gf, d: usize, rng: &mut ChaCha8Rng) -> Vec<GfElem> {
    (0..d).map(|_| field.random(rng)).collect()
}

/// A random point of a built entry: from its chart, or from one of its lines.
fn random_point(b: &Built, field: &Gf, rng: &mut ChaCha8Rng) -> EPoint {
    loop {
        let use_line = b.chart.is_none() || (!b.lines.is_empty() && rng.gen_bool(0.3));
        let pt = if use_line {
            let l = &b.lines[rng.gen_range(0..b.lines.len())];
            let (s, t) = (field.random(rng), field.random(rng));
            if field.is_zero(&s) && field.is_zero(&t) {
                continue;
            }
            l.point_at(field, s, t)
        } else {
            let c = b.chart.as_ref().unwrap();
            c.point_at(field, &random_params(field, c.d(), rng))
        };
        if let Ok(pt) = pt {
            return pt;
        }
    }
}

fn max_j(alg: &RestrictedLieAlgebra, r: usize) -> usize {
    (r * (alg.p() as usize - 1)).min(4)
}

/// Criterion 6: `dim Soc^j(ε*M^#) + dim Rad^j(ε*M) = dim M`.
fn duality() {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut triples = 0;
    for e in catalog_list() {
        let b = build_entry(&e.id).unwrap();
        let md = dual(&b.module);
        for k in 1..=2 {
            let field = Gf::new(e.p, k).unwrap();
            for _ in 0..15 {
                let pt = random_point(&b, &field, &mut rng);
                assert!(is_elementary(&b.alg, &pt).unwrap());
                let j = rng.gen_range(1..=max_j(&b.alg, pt.r()));
                let rad = rad_soc_dims(&b.alg, &b.module, &pt, &[j]).unwrap()[0].0;
                let soc = rad_soc_dims(&b.alg, &md, &pt, &[j]).unwrap()[0].1;
                assert_eq!(soc + rad, b.module.dim(), "{} at {pt:?}, j = {j}", e.id);
                triples += 1;
            }
        }
    }
    assert!(triples >= 500, "only {triples} triples");
}

/// Criterion 7: image and kernel bundles for `g_(1,n) = V ⋊ gl_n`.
fn semidirect_bundles() {
    let p = 5;
    for j in 1..=3 {
        let (alg, n) = make_semidirect(2, p, SemidirectKind::Truncated { j }).unwrap();
        let line = semidirect_line(&alg, 2).unwrap();
        let sys = build_p1(&alg, &n, &line).unwrap();
        let rep = image_splitting(&sys, j, None).unwrap();
        assert_eq!(rep.twists, vec![-(j as i64)], "Im^{j}");
        // oracle: a rank-one image agrees with its graded pieces in large
        // degree, where h(d) = d + a + 1
        let ops = line_operators(p, n.actions(), &line.columns);
        let prods = common::degree_j_products(p, &ops, j);
        let big = 4 * n.dim();
        let h1 = common::image_piece(p, &prods, big);
        let h0 = common::image_piece(p, &prods, big - 1);
        assert_eq!(h1 - h0, 1, "image rank");
        assert_eq!(h1 as i64 - big as i64 - 1, -(j as i64));
    }
    let (alg, m) = make_semidirect(3, p, SemidirectKind::Exterior { r: 1 }).unwrap();
    let line = semidirect_line(&alg, 3).unwrap();
    let sys = build_p1(&alg, &m, &line).unwrap();
    let rep = kernel_splitting(&sys, 1, None).unwrap();
    assert_eq!(rep.rank, 4);
    assert_eq!(rep.twists, vec![0, 0, 0, -1]);
    let ops = line_operators(p, m.actions(), &line.columns);
    let mut oracle = kernel_twists_oracle(p, &ops, 1, m.dim() + 2);
    oracle.sort_unstable_by(|a, b| b.cmp(a));
    assert_eq!(oracle, rep.twists);
}

/// `s^2 e - t^2 f + s t h`.
fn nilcone_point(field: &Gf, s: GfElem, t: GfElem) -> Vec<GfElem> {
    let e = field.mul(&s, &s);
    let f = field.neg(&field.mul(&t, &t));
    let h = field.mul(&s, &t);
    vec![e, f, h]
}

/// Criterion 8: projective indecomposables of `u(sl_2)` at `p = 3` and the
/// kernel bundles of their pullbacks to `sl_2 ⊕ sl_2`.
fn sl2_projectives() {
    let p = 3;
    let pims = make_sl2_pims(p).unwrap();
    let dims: Vec<(usize, usize)> = pims.iter().map(|x| (x.weight, x.module.dim())).collect();
    assert_eq!(dims, vec![(0, 6), (1, 6), (2, 3)]);
    let total: usize = pims.iter().map(|x| x.module.dim() * x.multiplicity).sum();
    assert_eq!(total, 27);
    // Jordan type [3]^(dim/3) at every nonzero nilpotent over F_9, and by
    // hand over F_3
    let f9 = Gf::new(p, 2).unwrap();
    for x in &pims {
        let m = &x.module;
        for s in f9.elements() {
            for t in f9.elements() {
                if f9.is_zero(&s) && f9.is_zero(&t) {
                    continue;
                }
                let v = nilcone_point(&f9, s, t);
                let jt = jordan_type(m, &f9, &v).unwrap();
                assert_eq!(jt.parts, vec![3; m.dim() / 3], "P_{} at ({s:?}:{t:?})", x.weight);
            }
        }
        for s in 0..p {
            for t in 0..p {
                if s == 0 && t == 0 {
                    continue;
                }
                let v = [s * s % p, (p - t * t % p) % p, s * t % p];
                let a = action_rows(p, m, &v);
                let a2 = common::mat_mul(p, &a, &a);
                let a3 = common::mat_mul(p, &a2, &a);
                assert_eq!(rank_mod(p, a.clone()), 2 * m.dim() / 3);
                assert_eq!(rank_mod(p, a2), m.dim() / 3);
                assert_eq!(rank_mod(p, a3), 0);
            }
        }
    }
    // signatures (kernel twists on line 1, kernel twists on line 2)
    let mut sigs: Vec<Vec<(Vec<i64>, Vec<i64>)>> = vec![Vec::new(); 5];
    for x in &pims {
        for s in 1..=2 {
            let sum = make_sl2_r(p, 2, s, &x.module).unwrap();
            for (j, slot) in sigs.iter_mut().enumerate().skip(1) {
                let mut per_line = Vec::new();
                for line in &sum.lines {
                    let sys = build_p1(&sum.alg, &sum.module, line).unwrap();
                    let rep = kernel_splitting(&sys, j, None).unwrap();
                    let ops = line_operators(p, sum.module.actions(), &line.columns);
                    let cap = sum.module.dim() * j * 2 + 2;
                    let mut oracle = kernel_twists_oracle(p, &ops, j, cap);
                    oracle.sort_unstable_by(|a, b| b.cmp(a));
                    assert_eq!(oracle, rep.twists, "P_{} factor {s}, j = {j}, {}", x.weight, line.label);
                    per_line.push(rep.twists);
                }
                slot.push((per_line[0].clone(), per_line[1].clone()));
            }
        }
    }
    let distinct_at = (1..=4).find(|&j| {
        let v = &sigs[j];
        (0..v.len()).all(|a| (a + 1..v.len()).all(|b| v[a] != v[b]))
    });
    assert!(distinct_at.is_some(), "no j <= 4 separates the bundles: {sigs:?}");
}

fn random_invertible(field: &Gf, r: usize, rng: &mut ChaCha8Rng) -> Matrix<GfElem> {
    loop {
        let q = Matrix::from_fn(r, r, |_, _| field.random(rng));
        if linalg::rank(field, &q) == r {
            return q;
        }
    }
}

fn random_invertible_prime(p: u64, n: usize, rng: &mut ChaCha8Rng) -> Matrix<u64> {
    loop {
        let q = Matrix::from_fn(n, n, |_, _| rng.gen_range(0..p));
        if rank_mod(p, q.to_rows()) == n {
            return q;
        }
    }
}

fn theta_identities(ring: &PolyRing, theta: &[Matrix<Poly>], p: u64) {
    for a in theta {
        for b in theta {
            assert_eq!(a.mul(ring, b).unwrap(), b.mul(ring, a).unwrap(), "operators do not commute");
        }
        assert!(a.pow(ring, p).unwrap().is_zero(ring), "p-th power is not zero");
    }
}

struct Fixture {
    id: String,
    built: Built,
    theta: Option<ThetaSystem>,
}

/// Criterion 9: invariant suites on every catalog entry and on 1000 random
/// instances.
fn invariants() {
    let fixtures: Vec<Fixture> = catalog_list()
        .into_iter()
        .map(|e| {
            let built = build_entry(&e.id).unwrap();
            let theta = built.chart.as_ref().map(|c| build_theta(&built.alg, &built.module, c).unwrap());
            Fixture { id: e.id, built, theta }
        })
        .collect();
    for fx in &fixtures {
        if let Some(ts) = &fx.theta {
            theta_identities(ts.ring(), ts.theta(), ts.p());
        }
        for line in &fx.built.lines {
            let sys = build_p1(&fx.built.alg, &fx.built.module, line).unwrap();
            theta_identities(sys.ring(), sys.theta(), fx.built.alg.p());
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..1000 {
        let fx = &fixtures[rng.gen_range(0..fixtures.len())];
        let b = &fx.built;
        let p = b.alg.p();
        let field = Gf::new(p, rng.gen_range(1..=2)).unwrap();
        let pt = random_point(b, &field, &mut rng);
        let j = rng.gen_range(1..=max_j(&b.alg, pt.r()));
        let dims = rad_soc_dims(&b.alg, &b.module, &pt, &[j]).unwrap()[0];

        // chart idempotence
        let (_, norm) = chart_of_point(&pt).unwrap();
        assert!(norm.same_span(&pt));
        assert_eq!(chart_of_point(&norm).unwrap().1, norm, "{}", fx.id);

        // basis change of the point
        let q = random_invertible(&field, pt.r(), &mut rng);
        let moved = pt.rebased(&q).unwrap();
        assert_eq!(rad_soc_dims(&b.alg, &b.module, &moved, &[j]).unwrap()[0], dims, "{}", fx.id);

        // basis change of the algebra: new basis the columns of g, point
        // coordinates g^{-1} ε
        let g = random_invertible_prime(p, b.alg.dim(), &mut rng);
        let (alg2, ginv) = b.alg.change_basis(&g).unwrap();
        let m2 = rebase(&b.module, &g).unwrap();
        let ginv_f = ginv.map(|&x| field.embed(x));
        let pt2 = EPoint::new(field.clone(), ginv_f.mul(&field, pt.matrix()).unwrap()).unwrap();
        assert_eq!(rad_soc_dims(&alg2, &m2, &pt2, &[j]).unwrap()[0], dims, "{}", fx.id);

        // semicontinuity, and the same ranks after the basis change
        if let Some(ts) = &fx.theta {
            let params = random_params(&field, ts.ring().nvars(), &mut rng);
            let (kj, ij) = ts.kernel_image_matrices(j).unwrap();
            let (gk, gi) = ts.generic_ranks(j).unwrap();
            let ks = linalg::rank(&field, &linalg::specialize(ts.ring(), &kj, &field, &params).unwrap());
            let is = linalg::rank(&field, &linalg::specialize(ts.ring(), &ij, &field, &params).unwrap());
            assert!(ks <= b.module.dim() - gk, "{}: kernel matrix rank above generic", fx.id);
            assert!(is <= gi, "{}: image matrix rank above generic", fx.id);
            let param = ts.param().matrix();
            let ring = ts.ring();
            let ginv_poly = ginv.map(|&x| ring.constant(x));
            let moved_cols = ginv_poly.mul(ring, &param).unwrap().columns();
            let theta2: Vec<Matrix<Poly>> = moved_cols.iter().map(|c| operator_of_column(ring, &m2, c)).collect();
            for (a, b2) in ts.theta().iter().zip(&theta2) {
                assert_eq!(a, b2, "{}: Θ depends on the basis", fx.id);
            }
        }

        // Hilbert reconstruction
        let rank = rng.gen_range(1..=6);
        let twists: Vec<i64> = (0..rank).map(|_| -rng.gen_range(0..=6)).collect();
        let st = SplittingType::new(twists);
        let h: Vec<usize> = (0..=12).map(|d| st.hilbert(d)).collect();
        assert_eq!(splitting_from_hilbert(&h, rank).unwrap(), st);
    }
}

fn main() {
    type Criterion = (&'static str, fn(), Duration);
    let criteria: [Criterion; 9] = [
        ("1 heisenberg: six points, socle 2, kernel twists {0, -1}", heisenberg, Duration::from_secs(1)),
        ("2 socle jump: generic kernel 2, socle 3 at T = 0 flagged", socle_jump, Duration::from_secs(1)),
        ("3 gl_4 canonical fibers at u_(2,2) and 20 orbit points", gl4_canonical, Duration::from_secs(5)),
        ("4 sp_4 fibers at the long-root nilradical", sp4_symplectic, Duration::from_secs(5)),
        ("5 sl_3 cominuscule bracket identities", cominuscule_sl3, Duration::from_secs(1)),
        ("6 duality over >= 500 random triples", duality, Duration::from_secs(30)),
        ("7 semidirect image and kernel bundles", semidirect_bundles, Duration::from_secs(10)),
        ("8 sl_2 projectives and distinct kernel bundles", sl2_projectives, Duration::from_secs(60)),
        ("9 invariant suites on the catalog and 1000 random instances", invariants, Duration::from_secs(120)),
    ];
    let mut failed = 0;
    for (name, f, limit) in criteria {
        let start = Instant::now();
        let res = catch_unwind(AssertUnwindSafe(f));
        let el = start.elapsed();
        let verdict = match res {
            Ok(()) if el <= limit => "PASS",
            Ok(()) => "FAIL (over time limit)",
            Err(_) => "FAIL",
        };
        if verdict != "PASS" {
            failed += 1;
        }
        println!("criterion {name}: {verdict} in {:.3}s (limit {}s)", el.as_secs_f64(), limit.as_secs());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
}
