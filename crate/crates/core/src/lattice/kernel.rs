use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::hermite::row_hnf;
use super::matrix::IntMatrix;
use super::vector::IntVec;
use crate::error::{Error, Result};

/// A basis of the saturated lattice `Ker_Z(A)`.
///
/// The basis vectors are kept in reduced row Hermite form, so the basis is a
/// canonical function of the lattice: every vector's lowest-index nonzero
/// entry is positive, and equal lattices give equal bases.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelBasis {
    source: IntMatrix,
    vectors: Vec<IntVec>,
}

impl KernelBasis {
    pub fn source(&self) -> &IntMatrix {
        &self.source
    }

    /// The basis vectors (columns of the `n × r` basis matrix).
    pub fn vectors(&self) -> &[IntVec] {
        &self.vectors
    }

    /// `r = n - rank(A)`.
    pub fn rank(&self) -> usize {
        self.vectors.len()
    }

    /// The `n × r` basis matrix.
    pub fn matrix(&self) -> IntMatrix {
        IntMatrix::from_columns(self.source.cols(), &self.vectors)
            .expect("kernel vectors have length n")
    }

    /// Row `i` of the basis matrix, the Gale transform of column `i`.
    pub fn gale_row(&self, i: usize) -> IntVec {
        IntVec::new(self.vectors.iter().map(|v| v[i].clone()).collect())
    }

    pub fn gale_rows(&self) -> Vec<IntVec> {
        (0..self.source.cols()).map(|i| self.gale_row(i)).collect()
    }

    /// Integer coordinates of `v` in this basis, or `None` if `v` is not in
    /// the lattice.
    pub fn coordinates(&self, v: &IntVec) -> Option<Vec<BigInt>> {
        if v.len() != self.source.cols() {
            return None;
        }
        // Pivot structure of the Hermite form makes this a triangular solve.
        let mut rest = v.clone();
        let mut coords = Vec::with_capacity(self.vectors.len());
        for b in &self.vectors {
            let lead = b.iter().position(|x| !x.is_zero())?;
            let (q, r) = num_integer::Integer::div_rem(&rest[lead], &b[lead]);
            if !r.is_zero() {
                return None;
            }
            rest.sub_assign_unchecked(&b.scaled(&q));
            coords.push(q);
        }
        rest.is_zero().then_some(coords)
    }
}

/// A canonical basis of the saturated kernel lattice `Ker_Z(A)`.
pub fn kernel_lattice_basis(a: &IntMatrix) -> Result<KernelBasis> {
    if a.is_zero() {
        return Err(Error::ZeroMatrix);
    }
    Ok(kernel_basis_any(a))
}

/// Same as [`kernel_lattice_basis`] but also accepts the zero matrix.
pub(crate) fn kernel_basis_any(a: &IntMatrix) -> KernelBasis {
    let (m, n) = (a.rows(), a.cols());
    // Rows [a_i^T | e_i]; unimodular reduction on the first m columns leaves
    // rows with vanishing left part whose right parts span Ker_Z(A).
    let mut rows: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let mut row = Vec::with_capacity(m + n);
            row.extend((0..m).map(|r| a.get(r, i).clone()));
            row.extend((0..n).map(|j| {
                if i == j {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            }));
            row
        })
        .collect();
    let rank = row_hnf(&mut rows, m);
    let mut kernel: Vec<Vec<BigInt>> = rows[rank..].iter().map(|r| r[m..].to_vec()).collect();
    let r = row_hnf(&mut kernel, n);
    debug_assert_eq!(r, kernel.len());
    KernelBasis {
        source: a.clone(),
        vectors: kernel.into_iter().map(IntVec::new).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_kernels() {
        let k = kernel_lattice_basis(&IntMatrix::from_i64_rows(&[[1, 2]])).unwrap();
        assert_eq!(k.vectors(), &[IntVec::from([2, -1])]);
        let k = kernel_lattice_basis(&IntMatrix::from_i64_rows(&[[1, 1, 1], [1, 2, 3]])).unwrap();
        assert_eq!(k.vectors(), &[IntVec::from([1, -2, 1])]);
        assert_eq!(
            kernel_lattice_basis(&IntMatrix::from_i64_rows(&[[0, 0]])),
            Err(Error::ZeroMatrix)
        );
    }

    #[test]
    fn identity_has_trivial_kernel() {
        let k = kernel_lattice_basis(&IntMatrix::from_i64_rows(&[[1, 0], [0, 1]])).unwrap();
        assert_eq!(k.rank(), 0);
        assert_eq!(k.gale_rows(), vec![IntVec::zeros(0), IntVec::zeros(0)]);
    }

    #[test]
    fn coordinates_detect_membership() {
        let a = IntMatrix::from_i64_rows(&[[4, 6, 5]]);
        let k = kernel_lattice_basis(&a).unwrap();
        for v in [[3, -2, 0], [1, 1, -2], [5, 0, -4], [0, 5, -6]] {
            let v = IntVec::from(v);
            let c = k.coordinates(&v).expect("in lattice");
            let mut rebuilt = IntVec::zeros(3);
            for (ci, b) in c.iter().zip(k.vectors()) {
                rebuilt.add_assign_unchecked(&b.scaled(ci));
            }
            assert_eq!(rebuilt, v);
        }
        assert!(k.coordinates(&IntVec::from([1, 0, 0])).is_none());
    }
}
