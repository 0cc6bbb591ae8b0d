//! Exact toolkit for strong robustness of toric ideals.
//!
//! The pipeline runs from kernel lattices through Graver bases, bouquet
//! decompositions and Lawrence liftings to the strongly robust simplicial
//! complex `Δ_T` of a simple configuration `T`.

pub mod bouquet;
pub mod cli;
pub mod error;
pub mod graver;
pub mod lattice;
pub mod lawrence;
pub mod robustness;

pub use error::{Error, Result};
pub use lattice::{IntMatrix, IntVec};
