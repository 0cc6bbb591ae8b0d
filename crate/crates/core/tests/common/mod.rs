//! Fixtures and independent oracles shared by the integration tests.
//!
//! The oracles use plain `i128` arithmetic and exhaustive search so they do
//! not share code paths with the library under test.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_robust::lattice::is_pointed;
use toric_robust::{IntMatrix, IntVec};

pub fn mat<R: AsRef<[i64]>>(rows: &[R]) -> IntMatrix {
    IntMatrix::from_i64_rows(rows)
}

pub fn v(x: &[i64]) -> IntVec {
    IntVec::from_i64s(x)
}

pub fn to_rows(a: &IntMatrix) -> Vec<Vec<i64>> {
    (0..a.rows())
        .map(|r| a.row(r).to_i64s().expect("small fixture"))
        .collect()
}

/// The cyclic configuration with `d` rows on parameters `ts`, written out
/// directly rather than through the library constructor.
pub fn cyclic(d: u32, ts: &[i64]) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..d)
        .map(|k| ts.iter().map(|t| t.pow(k)).collect())
        .collect();
    mat(&rows)
}

pub fn t57() -> IntMatrix {
    cyclic(5, &[1, 2, 3, 4, 5, 6, 7])
}

pub fn a465() -> IntMatrix {
    mat(&[[4, 6, 5]])
}

/// `m` diagonal copies of `(n1, n2, n3)`.
pub fn block_curve(n: [i64; 3], m: usize) -> IntMatrix {
    let rows: Vec<Vec<i64>> = (0..m)
        .map(|i| {
            let mut row = vec![0; 3 * m];
            row[3 * i..3 * i + 3].copy_from_slice(&n);
            row
        })
        .collect();
    mat(&rows)
}

/// Bareiss elimination over `i128`.
pub fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    let mut a = m.to_vec();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| i128::from(x)).collect())
        .collect();
    let cols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, p);
        for r in rank + 1..a.len() {
            let (f, g) = (a[r][c], a[rank][c]);
            let pivot = a[rank].clone();
            for (x, p) in a[r].iter_mut().zip(&pivot) {
                *x = *x * g - p * f;
            }
            let content = a[r].iter().fold(0i128, |acc, &x| num_integer::gcd(acc, x));
            if content > 1 {
                a[r].iter_mut().for_each(|x| *x /= content);
            }
        }
        rank += 1;
    }
    rank
}

/// gcd of all `r × r` minors of the `n × r` matrix whose columns are `basis`.
pub fn maximal_minor_gcd(basis: &[IntVec]) -> i128 {
    let r = basis.len();
    let n = basis.first().map_or(0, IntVec::len);
    let cols: Vec<Vec<i128>> = basis
        .iter()
        .map(|b| b.to_i64s().unwrap().into_iter().map(i128::from).collect())
        .collect();
    (0..n).combinations(r).fold(0i128, |g, rows| {
        let sq: Vec<Vec<i128>> = rows
            .iter()
            .map(|&i| cols.iter().map(|c| c[i]).collect())
            .collect();
        num_integer::gcd(g, det(&sq))
    })
}

pub fn general_position(rows: &[Vec<i64>]) -> bool {
    let d = rows.len();
    let n = rows[0].len();
    n >= d + 2
        && (0..n).combinations(d).all(|cols| {
            let sq: Vec<Vec<i128>> = rows
                .iter()
                .map(|r| cols.iter().map(|&c| i128::from(r[c])).collect())
                .collect();
            det(&sq) != 0
        })
}

pub fn is_kernel(rows: &[Vec<i64>], u: &[i64]) -> bool {
    rows.iter()
        .all(|r| r.iter().zip(u).map(|(a, b)| a * b).sum::<i64>() == 0)
}

/// `u = v + w` with `v, w` sign-compatible in every coordinate.
pub fn conformal_sum(u: &[i64], v: &[i64], w: &[i64]) -> bool {
    u.iter()
        .zip(v)
        .zip(w)
        .all(|((&a, &b), &c)| a == b + c && b * c >= 0)
}

/// Every nonzero kernel vector in the box `[-k, k]^n`.
pub fn kernel_box(rows: &[Vec<i64>], k: i64) -> Vec<Vec<i64>> {
    let n = rows[0].len();
    (0..n)
        .map(|_| -k..=k)
        .multi_cartesian_product()
        .filter(|p| p.iter().any(|&x| x != 0) && is_kernel(rows, p))
        .collect()
}

/// `u` has no proper semiconformal decomposition with `‖v‖∞ ≤ k`.
pub fn indispensable_by_search(rows: &[Vec<i64>], u: &[i64], k: i64) -> bool {
    !kernel_box(rows, k).iter().any(|v| {
        let w: Vec<i64> = u.iter().zip(v).map(|(a, b)| a - b).collect();
        w.iter().any(|&x| x != 0) && v.iter().zip(&w).all(|(&vi, &wi)| !(vi > 0 && wi < 0))
    })
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A pointed `d × n` matrix in general position with entries in `[-5, 5]`.
pub fn random_general_position(rng: &mut impl Rng, d: usize, n: usize) -> IntMatrix {
    loop {
        let rows: Vec<Vec<i64>> = (0..d)
            .map(|_| (0..n).map(|_| rng.gen_range(-5..=5)).collect())
            .collect();
        if general_position(&rows) {
            let a = mat(&rows);
            if is_pointed(&a) {
                return a;
            }
        }
    }
}

pub fn random_monomial_curve(rng: &mut impl Rng) -> IntMatrix {
    let mut n: Vec<i64> = (0..3).map(|_| rng.gen_range(1..=30)).collect();
    n.sort_unstable();
    mat(&[n])
}

/// 20 random planar configurations (`n ∈ {4, 5}`) and 10 monomial curves.
pub fn general_position_fixtures() -> Vec<IntMatrix> {
    let mut r = rng(0x5eed_0bad);
    let mut out: Vec<IntMatrix> = (0..20)
        .map(|i| random_general_position(&mut r, 2, 4 + i % 2))
        .collect();
    out.extend((0..10).map(|_| random_monomial_curve(&mut r)));
    out
}

/// General-position fixtures with known structure.
pub fn cyclic_fixtures() -> Vec<IntMatrix> {
    vec![
        cyclic(1, &[1, 2, 3]),
        cyclic(2, &[1, 2, 3, 4]),
        cyclic(2, &[1, 2, 4, 5, 7]),
        cyclic(3, &[1, 2, 3, 4, 5]),
        cyclic(3, &[0, 1, 2, 3, 4, 6]),
        a465(),
    ]
}
