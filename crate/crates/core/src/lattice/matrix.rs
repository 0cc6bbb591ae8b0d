use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::hermite;
use super::vector::IntVec;
use crate::error::{Error, Result};

/// A dense exact integer matrix whose columns are the configuration vectors.
///
/// Matrices are immutable; the rational rank is computed once at
/// construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
    rank: usize,
}

impl IntMatrix {
    /// Builds a matrix from row-major entries.
    pub fn from_row_major(rows: usize, cols: usize, data: Vec<BigInt>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        let rank = hermite::rank_of(rows, cols, &data);
        Ok(IntMatrix {
            rows,
            cols,
            data,
            rank,
        })
    }

    pub fn from_rows(rows: &[Vec<BigInt>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::ShapeMismatch(format!(
                "ragged rows: expected {cols} entries, found {}",
                bad.len()
            )));
        }
        let data = rows.iter().flat_map(|r| r.iter().cloned()).collect();
        Self::from_row_major(rows.len(), cols, data)
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let rows: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(&rows).expect("ragged matrix literal")
    }

    /// The matrix with the given vectors as its columns.
    pub fn from_columns(rows: usize, columns: &[IntVec]) -> Result<Self> {
        for c in columns {
            if c.len() != rows {
                return Err(Error::LengthMismatch {
                    expected: rows,
                    found: c.len(),
                });
            }
        }
        let cols = columns.len();
        let mut data = Vec::with_capacity(rows * cols);
        for r in 0..rows {
            for c in columns {
                data.push(c[r].clone());
            }
        }
        Self::from_row_major(rows, cols, data)
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
            rank: 0,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `cols - rank`, the rank of the kernel lattice.
    pub fn corank(&self) -> usize {
        self.cols - self.rank
    }

    pub fn get(&self, r: usize, c: usize) -> &BigInt {
        &self.data[r * self.cols + c]
    }

    pub fn row_major(&self) -> &[BigInt] {
        &self.data
    }

    pub fn row(&self, r: usize) -> IntVec {
        IntVec::new(self.data[r * self.cols..(r + 1) * self.cols].to_vec())
    }

    pub fn column(&self, c: usize) -> IntVec {
        IntVec::new((0..self.rows).map(|r| self.get(r, c).clone()).collect())
    }

    pub fn columns(&self) -> Vec<IntVec> {
        (0..self.cols).map(|c| self.column(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        IntMatrix {
            rows: self.cols,
            cols: self.rows,
            data,
            rank: self.rank,
        }
    }

    /// `A·v`.
    pub fn mul_vec(&self, v: &IntVec) -> Result<IntVec> {
        if v.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: v.len(),
            });
        }
        Ok(IntVec::new(
            (0..self.rows)
                .map(|r| {
                    self.data[r * self.cols..(r + 1) * self.cols]
                        .iter()
                        .zip(v.iter())
                        .map(|(a, b)| a * b)
                        .sum()
                })
                .collect(),
        ))
    }

    pub fn in_kernel(&self, v: &IntVec) -> Result<bool> {
        Ok(self.mul_vec(v)?.is_zero())
    }

    /// Keeps the given zero-based columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> IntMatrix {
        let columns: Vec<IntVec> = cols.iter().map(|&c| self.column(c)).collect();
        IntMatrix::from_columns(self.rows, &columns).expect("columns have matching length")
    }

    /// Drops rows that are identically zero.
    pub fn without_zero_rows(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = (0..self.rows)
            .map(|r| self.row(r).into_entries())
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, self.cols);
        }
        IntMatrix::from_rows(&rows).expect("rows have equal length")
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "IntMatrix {}x{} (rank {})",
            self.rows, self.cols, self.rank
        )?;
        for r in 0..self.rows {
            writeln!(f, "  {}", self.row(r))?;
        }
        Ok(())
    }
}

/// Determinant of a square matrix given as rows, by fraction-free (Bareiss)
/// elimination.
pub fn determinant(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    if n == 0 {
        return BigInt::from(1);
    }
    let mut m: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = 1;
    let mut prev = BigInt::from(1);
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if sign < 0 {
        -d
    } else {
        d
    }
}
