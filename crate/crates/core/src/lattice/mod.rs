//! Exact integer linear algebra: vectors with their conformal order, dense
//! matrices, saturated kernel lattices and pointedness.

mod hermite;
mod kernel;
mod matrix;
mod pointed;
mod vector;

pub(crate) use kernel::kernel_basis_any;
pub use kernel::{kernel_lattice_basis, KernelBasis};
pub use matrix::{determinant, IntMatrix};
pub use pointed::is_pointed;
pub(crate) use vector::conformal_leq_unchecked;
pub use vector::{conformal_leq, is_semiconformal_sum, primitive_part, IntVec};
