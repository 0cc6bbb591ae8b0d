//! Integer row reduction to Hermite normal form.
//!
//! Only unimodular row operations are used (swaps, negations, adding an
//! integer multiple of one row to another), so the row lattice is preserved
//! and any columns carried along record the transformation exactly.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

/// Reduces `rows` in place to row Hermite normal form with respect to the
/// first `pivot_cols` columns; trailing columns ride along.
///
/// Pivots are positive and entries above a pivot lie in `[0, pivot)`. Rows
/// whose leading `pivot_cols` entries vanish end up at the bottom. Returns the
/// number of pivot rows.
pub(crate) fn row_hnf(rows: &mut [Vec<BigInt>], pivot_cols: usize) -> usize {
    let n = rows.len();
    let mut p = 0;
    for col in 0..pivot_cols {
        if p == n {
            break;
        }
        loop {
            let best = (p..n)
                .filter(|&i| !rows[i][col].is_zero())
                .min_by(|&a, &b| rows[a][col].abs().cmp(&rows[b][col].abs()));
            let Some(best) = best else { break };
            rows.swap(p, best);
            let mut clean = true;
            for i in p + 1..n {
                if rows[i][col].is_zero() {
                    continue;
                }
                let q = rows[i][col].div_floor(&rows[p][col]);
                axpy(rows, i, p, &q);
                if !rows[i][col].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if rows[p][col].is_zero() {
            continue;
        }
        if rows[p][col].is_negative() {
            for x in rows[p].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..p {
            if rows[i][col].is_zero() {
                continue;
            }
            let q = rows[i][col].div_floor(&rows[p][col]);
            axpy(rows, i, p, &q);
        }
        p += 1;
    }
    p
}

/// `rows[target] -= q * rows[source]`.
fn axpy(rows: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let (t, s) = if target < source {
        let (lo, hi) = rows.split_at_mut(source);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[source])
    };
    for (x, y) in t.iter_mut().zip(s.iter()) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

pub(crate) fn rank_of(rows: usize, cols: usize, data: &[BigInt]) -> usize {
    let mut m: Vec<Vec<BigInt>> = data
        .chunks(cols.max(1))
        .take(rows)
        .map(<[BigInt]>::to_vec)
        .collect();
    if cols == 0 {
        return 0;
    }
    row_hnf(&mut m, cols)
}
