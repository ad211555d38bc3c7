//! Independent reference implementations and random generators shared by the
//! integration tests. Nothing here calls the library routine it checks.

#![allow(dead_code)]

use exposg::matrix::{IntMatrix, RationalMatrix};
use exposg::rational::Rational;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    rand::SeedableRng::seed_from_u64(seed)
}

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn grid(a: &RationalMatrix) -> Vec<Vec<Rational>> {
    a.rows().map(|row| row.to_vec()).collect()
}

pub fn from_grid(g: Vec<Vec<Rational>>) -> RationalMatrix {
    RationalMatrix::from_rows(g).unwrap()
}

/// Schoolbook product on plain nested vectors.
pub fn naive_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Rational::zero(), |acc, k| acc + &a[i][k] * &b[k][j]))
                .collect()
        })
        .collect()
}

pub fn naive_pow(a: &[Vec<Rational>], n: u64) -> Vec<Vec<Rational>> {
    let d = a.len();
    let mut p: Vec<Vec<Rational>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    for _ in 0..n {
        p = naive_mul(&p, a);
    }
    p
}

pub fn all_integral(a: &[Vec<Rational>]) -> bool {
    a.iter().flatten().all(|x| x.is_integer())
}

/// `{n ≤ limit : Aⁿ integral}` by repeated schoolbook multiplication.
pub fn direct_membership(a: &RationalMatrix, limit: u64) -> Vec<bool> {
    let g = grid(a);
    let d = g.len();
    let mut p: Vec<Vec<Rational>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let mut out = Vec::with_capacity(limit as usize + 1);
    for _ in 0..=limit {
        out.push(all_integral(&p));
        p = naive_mul(&p, &g);
    }
    out
}

/// Laplace expansion along the first row.
pub fn cofactor_det(a: &[Vec<Rational>]) -> Rational {
    let n = a.len();
    if n == 1 {
        return a[0][0].clone();
    }
    let mut total = Rational::zero();
    for j in 0..n {
        if a[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> =
            a[1..].iter().map(|row| row.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, x)| x.clone()).collect()).collect();
        let term = &a[0][j] * cofactor_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Characteristic polynomial `det(xI − A)` by Faddeev–LeVerrier, constant
/// term first.
pub fn faddeev_leverrier(a: &[Vec<Rational>]) -> Vec<Rational> {
    let n = a.len();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let ident: Vec<Vec<Rational>> =
        (0..n).map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    let mut m: Vec<Vec<Rational>> = vec![vec![Rational::zero(); n]; n];
    for k in 1..=n {
        // M_k = A·M_{k-1} + c_{n-k+1} I
        let am = naive_mul(a, &m);
        m = (0..n)
            .map(|i| (0..n).map(|j| &am[i][j] + &coeffs[n - k + 1] * &ident[i][j]).collect())
            .collect();
        let amk = naive_mul(a, &m);
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &amk[i][i]);
        coeffs[n - k] = -tr / Rational::from_integer(BigInt::from(k as i64));
    }
    coeffs
}

/// Membership in the semigroup generated by `gens`, by coin-change DP.
pub fn dp_membership(gens: &[u64], limit: usize) -> Vec<bool> {
    let mut reach = vec![false; limit + 1];
    reach[0] = true;
    for n in 1..=limit {
        reach[n] = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
    }
    reach
}

/// Frobenius number from DP (assumes gcd 1); `-1` when everything is reachable.
pub fn dp_frobenius(gens: &[u64]) -> i64 {
    let m = *gens.iter().min().unwrap() as usize;
    let mut reach = vec![true];
    let mut run = 0;
    let mut last_gap = -1i64;
    let mut n = 0usize;
    while run < m {
        n += 1;
        let ok = gens.iter().any(|&g| g as usize <= n && reach[n - g as usize]);
        reach.push(ok);
        if ok {
            run += 1;
        } else {
            run = 0;
            last_gap = n as i64;
        }
    }
    last_gap
}

/// Minimal generators by definition: members not a sum of two smaller positive members.
pub fn brute_minimal_generators(gens: &[u64]) -> Vec<u64> {
    let limit = (gens.iter().max().unwrap() * 2) as usize + 2;
    let bits = dp_membership(gens, limit);
    (1..=limit)
        .filter(|&s| bits[s] && !(1..s).any(|a| bits[a] && bits[s - a]))
        .filter(|&s| s <= *gens.iter().max().unwrap() as usize)
        .map(|s| s as u64)
        .collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

pub fn random_rational(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rational {
    r(rng.gen_range(-max_num..=max_num), rng.gen_range(1..=max_den))
}

pub fn random_matrix(rng: &mut ChaCha8Rng, d: usize, max_num: i64, max_den: i64) -> RationalMatrix {
    from_grid((0..d).map(|_| (0..d).map(|_| random_rational(rng, max_num, max_den)).collect()).collect())
}

pub fn random_int_matrix(rng: &mut ChaCha8Rng, d: usize, bound: i64) -> RationalMatrix {
    random_matrix(rng, d, bound, 1)
}

/// Random matrix in GL_d(ℤ): a product of elementary row operations and sign flips.
pub fn random_unimodular(rng: &mut ChaCha8Rng, d: usize, steps: usize) -> RationalMatrix {
    let mut g: Vec<Vec<Rational>> =
        (0..d).map(|i| (0..d).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect()).collect();
    if d == 1 {
        if rng.gen_bool(0.5) {
            g[0][0] = -g[0][0].clone();
        }
        return from_grid(g);
    }
    for _ in 0..steps {
        let i = rng.gen_range(0..d);
        let mut j = rng.gen_range(0..d);
        while j == i {
            j = rng.gen_range(0..d);
        }
        let k = Rational::from_integer(BigInt::from(rng.gen_range(-2i64..=2)));
        let row_j = g[j].clone();
        for (x, y) in g[i].iter_mut().zip(&row_j) {
            *x += &k * y;
        }
        if rng.gen_ratio(1, 4) {
            for x in g[i].iter_mut() {
                *x = -x.clone();
            }
        }
    }
    from_grid(g)
}

/// `P B P⁻¹` for integral `B` and an integral `P` with small nonzero determinant,
/// so the characteristic polynomial is integral but powers need not be.
pub fn random_integral_spectrum(rng: &mut ChaCha8Rng, d: usize) -> RationalMatrix {
    loop {
        let b = random_int_matrix(rng, d, 3);
        let p = random_int_matrix(rng, d, 3);
        let det = p.det();
        if det.is_zero() || det.abs() > r(12, 1) {
            continue;
        }
        let inv = p.inverse().unwrap();
        return p.mul(&b).unwrap().mul(&inv).unwrap();
    }
}

pub fn int_matrix_to_grid(m: &IntMatrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| (0..m.cols()).map(|j| Rational::from_integer(m.get(i, j).clone())).collect()).collect()
}

/// Random subset of `lo..=hi` with gcd 1, nonempty.
pub fn random_coprime_generators(rng: &mut ChaCha8Rng, lo: u64, hi: u64, max_len: usize) -> Vec<u64> {
    loop {
        let len = rng.gen_range(1..=max_len);
        let mut gens: Vec<u64> = (0..len).map(|_| rng.gen_range(lo..=hi)).collect();
        gens.sort_unstable();
        gens.dedup();
        if gens.iter().fold(0, |g, &x| gcd(g, x)) == 1 {
            return gens;
        }
    }
}

/// Rank of a list of rational vectors by Gauss–Jordan elimination.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let mut rows: Vec<Vec<Rational>> = vectors.to_vec();
    let cols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        let pivot = rows[rank][c].clone();
        for i in 0..rows.len() {
            if i != rank && !rows[i][c].is_zero() {
                let f = &rows[i][c] / &pivot;
                let src = rows[rank].clone();
                for (x, y) in rows[i].iter_mut().zip(&src) {
                    *x -= &f * y;
                }
            }
        }
        rank += 1;
    }
    rank
}
