use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::matrix::IntMatrix;

/// Whether `Ker_Z(A) ∩ N^n = {0}`.
///
/// Decided exactly: `A` is pointed iff the polytope
/// `{x ≥ 0 : A x = 0, Σ x = 1}` is empty, which a phase-one simplex over the
/// rationals settles.
pub fn is_pointed(a: &IntMatrix) -> bool {
    if a.cols() == 0 {
        return true;
    }
    let mut rows: Vec<Vec<BigInt>> = (0..a.rows()).map(|r| a.row(r).into_entries()).collect();
    rows.push(vec![BigInt::one(); a.cols()]);
    let mut rhs = vec![BigInt::zero(); a.rows()];
    rhs.push(BigInt::one());
    !feasible_nonnegative(&rows, &rhs)
}

/// Phase-one simplex with Bland's rule: is `{x ≥ 0 : M x = b}` nonempty?
pub(crate) fn feasible_nonnegative(m: &[Vec<BigInt>], b: &[BigInt]) -> bool {
    let rows = m.len();
    let n = m.first().map_or(0, Vec::len);
    let width = n + rows + 1;
    let rhs = width - 1;
    let mut t: Vec<Vec<BigRational>> = Vec::with_capacity(rows);
    for (i, row) in m.iter().enumerate() {
        let flip = b[i].is_negative();
        let mut r: Vec<BigRational> = Vec::with_capacity(width);
        for x in row {
            let x = if flip { -x } else { x.clone() };
            r.push(BigRational::from_integer(x));
        }
        for k in 0..rows {
            r.push(if k == i {
                BigRational::one()
            } else {
                BigRational::zero()
            });
        }
        r.push(BigRational::from_integer(b[i].abs()));
        t.push(r);
    }
    let mut basis: Vec<usize> = (n..n + rows).collect();
    let mut obj = vec![BigRational::zero(); width];
    for r in &t {
        for j in 0..n {
            obj[j] += &r[j];
        }
        obj[rhs] += &r[rhs];
    }

    while let Some(enter) = (0..n + rows).find(|&j| obj[j].is_positive()) {
        let mut leave: Option<usize> = None;
        for i in 0..rows {
            if !t[i][enter].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs] / &t[i][enter];
            leave = match leave {
                None => Some(i),
                Some(l) => {
                    let best = &t[l][rhs] / &t[l][enter];
                    if ratio < best || (ratio == best && basis[i] < basis[l]) {
                        Some(i)
                    } else {
                        Some(l)
                    }
                }
            };
        }
        // Phase one is bounded below by zero, so an entering column always
        // has a positive entry somewhere.
        let Some(p) = leave else { break };
        let piv = t[p][enter].clone();
        for x in t[p].iter_mut() {
            *x = &*x / &piv;
        }
        let prow = t[p].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == p || row[enter].is_zero() {
                continue;
            }
            let f = row[enter].clone();
            for (x, y) in row.iter_mut().zip(&prow) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        let f = obj[enter].clone();
        for (x, y) in obj.iter_mut().zip(&prow) {
            if !y.is_zero() {
                *x -= &f * y;
            }
        }
        basis[p] = enter;
    }
    obj[rhs].is_zero()
}
