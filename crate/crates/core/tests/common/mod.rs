//! Reference computations used as oracles. Everything here works on plain
//! `Vec<Vec<u64>>` rows modulo a prime and shares no code with the crate's
//! linear algebra.

#![allow(dead_code)]

use esheaf::exact::{Matrix, Poly};

pub fn add(p: u64, a: u64, b: u64) -> u64 {
    (a + b) % p
}

pub fn mul(p: u64, a: u64, b: u64) -> u64 {
    (a * b) % p
}

pub fn neg(p: u64, a: u64) -> u64 {
    (p - a % p) % p
}

pub fn inv(p: u64, a: u64) -> u64 {
    // Fermat
    let mut acc = 1;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    acc
}

pub fn rows_of(m: &Matrix<u64>) -> Vec<Vec<u64>> {
    m.to_rows()
}

/// Rank by row reduction.
pub fn rank_mod(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..ncols {
        let Some(piv) = (rank..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(rank, piv);
        let iv = inv(p, rows[rank][c]);
        for x in rows[rank].iter_mut() {
            *x = *x * iv % p;
        }
        let pivot_row = rows[rank].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == rank || row[c] == 0 {
                continue;
            }
            let f = row[c];
            for (x, &y) in row.iter_mut().zip(&pivot_row) {
                if y != 0 {
                    *x = (*x + p - f * y % p) % p;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Determinant by cofactor expansion along the first row.
pub fn det_mod(p: u64, m: &[Vec<u64>]) -> u64 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0] % p;
    }
    let mut acc = 0;
    for c in 0..n {
        if m[0][c] == 0 {
            continue;
        }
        let minor: Vec<Vec<u64>> = m[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|&(k, _)| k != c).map(|(_, &x)| x).collect())
            .collect();
        let term = mul(p, m[0][c], det_mod(p, &minor));
        acc = if c % 2 == 0 { add(p, acc, term) } else { add(p, acc, neg(p, term)) };
    }
    acc
}

fn choose(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::new(), &mut out);
    out
}

/// Largest size of a nonvanishing minor.
pub fn rank_by_minors(p: u64, m: &[Vec<u64>]) -> usize {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    for k in (1..=rows.min(cols)).rev() {
        for rs in choose(rows, k) {
            for cs in choose(cols, k) {
                let sub: Vec<Vec<u64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                if det_mod(p, &sub) != 0 {
                    return k;
                }
            }
        }
    }
    0
}

pub fn mat_mul(p: u64, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    let n = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            (0..n)
                .map(|j| row.iter().zip(b).fold(0, |acc, (&x, br)| (acc + x * br[j]) % p))
                .collect()
        })
        .collect()
}

pub fn mat_add(p: u64, a: &[Vec<u64>], b: &[Vec<u64>]) -> Vec<Vec<u64>> {
    a.iter().zip(b).map(|(x, y)| x.iter().zip(y).map(|(&u, &v)| (u + v) % p).collect()).collect()
}

pub fn zeros(r: usize, c: usize) -> Vec<Vec<u64>> {
    vec![vec![0; c]; r]
}

/// A matrix of binary forms of degree `deg`: `coeffs[a]` multiplies
/// `s^a t^(deg - a)`.
#[derive(Clone, Debug)]
pub struct FormMatrix {
    pub deg: usize,
    pub coeffs: Vec<Vec<Vec<u64>>>,
}

impl FormMatrix {
    pub fn dim(&self) -> usize {
        self.coeffs[0].len()
    }
}

pub fn form_mul(p: u64, a: &FormMatrix, b: &FormMatrix) -> FormMatrix {
    let m = a.dim();
    let deg = a.deg + b.deg;
    let mut coeffs = vec![zeros(m, m); deg + 1];
    for (i, x) in a.coeffs.iter().enumerate() {
        for (k, y) in b.coeffs.iter().enumerate() {
            coeffs[i + k] = mat_add(p, &coeffs[i + k], &mat_mul(p, x, y));
        }
    }
    FormMatrix { deg, coeffs }
}

/// Degree of a column of binary forms (largest total degree of an entry).
fn column_degree(col: &[Poly]) -> usize {
    col.iter().filter_map(|e| e.total_degree()).max().unwrap_or(0) as usize
}

/// `Σ_i ρ(x_i) c_i(s, t)` for one column of a line parametrization.
pub fn line_operator(p: u64, actions: &[Matrix<u64>], col: &[Poly]) -> FormMatrix {
    let m = actions[0].rows();
    let deg = column_degree(col);
    let mut coeffs = vec![zeros(m, m); deg + 1];
    for (x, c) in actions.iter().zip(col) {
        let rho = rows_of(x);
        for &(mono, k) in c.terms() {
            let a = mono.exp(0) as usize;
            assert_eq!(mono.exp(0) + mono.exp(1), deg as u32, "column is not homogeneous");
            let scaled: Vec<Vec<u64>> = rho.iter().map(|r| r.iter().map(|&v| v * k % p).collect()).collect();
            coeffs[a] = mat_add(p, &coeffs[a], &scaled);
        }
    }
    FormMatrix { deg, coeffs }
}

fn identity_form(m: usize) -> FormMatrix {
    let mut id = zeros(m, m);
    for (i, row) in id.iter_mut().enumerate() {
        row[i] = 1;
    }
    FormMatrix { deg: 0, coeffs: vec![id] }
}

/// Exponent vectors of length `r` summing to `j`.
pub fn exponent_vectors(j: usize, r: usize) -> Vec<Vec<usize>> {
    if r == 1 {
        return vec![vec![j]];
    }
    let mut out = Vec::new();
    for a in 0..=j {
        for mut rest in exponent_vectors(j - a, r - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

/// All monomials of degree `j` in the (commuting) operators.
pub fn degree_j_products(p: u64, ops: &[FormMatrix], j: usize) -> Vec<FormMatrix> {
    let m = ops[0].dim();
    exponent_vectors(j, ops.len())
        .into_iter()
        .map(|ex| {
            let mut acc = identity_form(m);
            for (op, &e) in ops.iter().zip(&ex) {
                for _ in 0..e {
                    acc = form_mul(p, &acc, op);
                }
            }
            acc
        })
        .collect()
}

/// The map `M ⊗ S_d -> M ⊗ S_(d + deg)` as explicit rows. Coordinates of
/// a vector of forms of degree `d` are `(c, i)`, component `i` of the
/// coefficient of `s^c t^(d - c)`, ordered by `c` then `i`.
pub fn form_map_rows(p: u64, a: &FormMatrix, d: usize) -> Vec<Vec<u64>> {
    let m = a.dim();
    let mut rows = zeros(m * (d + a.deg + 1), m * (d + 1));
    for (k, block) in a.coeffs.iter().enumerate() {
        for c in 0..=d {
            for i in 0..m {
                for l in 0..m {
                    let v = block[i][l];
                    if v != 0 {
                        let r = (c + k) * m + i;
                        rows[r][c * m + l] = (rows[r][c * m + l] + v) % p;
                    }
                }
            }
        }
    }
    rows
}

/// `dim` of the degree-`d` piece of the common kernel of `prods` on
/// `M ⊗ k[s, t]`.
pub fn kernel_piece(p: u64, prods: &[FormMatrix], d: usize) -> usize {
    let m = prods[0].dim();
    let mut rows = Vec::new();
    for a in prods {
        rows.extend(form_map_rows(p, a, d));
    }
    m * (d + 1) - rank_mod(p, rows)
}

/// `dim` of `Σ_b A_b (M ⊗ S_(d - deg A_b))` inside `M ⊗ S_d`.
pub fn image_piece(p: u64, prods: &[FormMatrix], d: usize) -> usize {
    let m = prods[0].dim();
    let mut cols: Vec<Vec<u64>> = Vec::new();
    for a in prods {
        if a.deg > d {
            continue;
        }
        let map = form_map_rows(p, a, d - a.deg);
        for c in 0..map[0].len() {
            cols.push(map.iter().map(|r| r[c]).collect());
        }
    }
    if cols.is_empty() {
        return 0;
    }
    debug_assert!(cols.iter().all(|c| c.len() == m * (d + 1)));
    rank_mod(p, cols)
}

/// Twists of `⊕ O(a_i)` with all `a_i <= 0` from its Hilbert function:
/// `-d` occurs with multiplicity `h(d) - 2 h(d-1) + h(d-2)`.
pub fn twists_from_hilbert(h: &[usize]) -> Vec<i64> {
    let at = |k: isize| if k < 0 { 0 } else { h[k as usize] as i64 };
    let mut out = Vec::new();
    for d in 0..h.len() {
        let dd = d as isize;
        let mult = at(dd) - 2 * at(dd - 1) + at(dd - 2);
        assert!(mult >= 0, "not the Hilbert function of a sum of O(a), a <= 0: {h:?}");
        for _ in 0..mult {
            out.push(-(d as i64));
        }
    }
    out
}

/// Kernel splitting type on a line by brute force. The rank is read off at
/// degree `cap`, where `cap` exceeds every possible `-a_i`; pieces are then
/// computed from degree 0 until all twists are accounted for.
pub fn kernel_twists_oracle(p: u64, ops: &[FormMatrix], j: usize, cap: usize) -> Vec<i64> {
    let prods = degree_j_products(p, ops, j);
    let rank = kernel_piece(p, &prods, cap) - kernel_piece(p, &prods, cap - 1);
    let mut h = Vec::new();
    let mut found = 0usize;
    let mut d = 0;
    while found < rank {
        h.push(kernel_piece(p, &prods, d));
        found = twists_from_hilbert(&h).len();
        d += 1;
        assert!(d <= cap, "twists not found below degree {cap}");
    }
    twists_from_hilbert(&h)
}

/// The operators of a line parametrization acting on a module.
pub fn line_operators(p: u64, actions: &[Matrix<u64>], columns: &[Vec<Poly>]) -> Vec<FormMatrix> {
    columns.iter().map(|c| line_operator(p, actions, c)).collect()
}
