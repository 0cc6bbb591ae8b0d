//! Bouquet decomposition via Gale transforms.
//!
//! Columns `i` and `j` share a bouquet exactly when their Gale rows are
//! parallel; zero Gale rows are the free vectors and form a single free
//! bouquet. Within a non-free bouquet the proportionality factors of the
//! Gale rows determine the primitive vector `c_B`, and a negative factor
//! (antiparallel rows) makes the bouquet mixed.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::lattice::{determinant, kernel_basis_any, primitive_part, IntMatrix, IntVec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BouquetClass {
    Free,
    Mixed,
    NonMixed,
}

impl fmt::Display for BouquetClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BouquetClass::Free => "free",
            BouquetClass::Mixed => "mixed",
            BouquetClass::NonMixed => "non-mixed",
        })
    }
}

/// Class of an edge of the bouquet graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EdgeClass {
    /// The supporting co-circuit has components of distinct signs.
    Plus,
    /// The supporting co-circuit has components of equal sign.
    Minus,
    /// Both endpoints are free; the co-vector is not a co-circuit.
    Zero,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bouquet {
    members: Vec<usize>,
    class: BouquetClass,
    c: Option<IntVec>,
    a: Option<IntVec>,
}

impl Bouquet {
    /// Member column indices, 1-based and ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn class(&self) -> BouquetClass {
        self.class
    }

    /// `c_B`, absent for the free bouquet.
    pub fn c_vector(&self) -> Option<&IntVec> {
        self.c.as_ref()
    }

    /// `a_B = Σ_j c_{B,j} a_j`, absent for the free bouquet.
    pub fn a_vector(&self) -> Option<&IntVec> {
        self.a.as_ref()
    }

    pub fn is_singleton(&self) -> bool {
        self.members.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BouquetDecomposition {
    source: IntMatrix,
    gale: Vec<IntVec>,
    bouquets: Vec<Bouquet>,
    // Zero-based column -> position in `bouquets`.
    owner: Vec<usize>,
}

impl BouquetDecomposition {
    pub fn source(&self) -> &IntMatrix {
        &self.source
    }

    /// Bouquets ordered by least member.
    pub fn bouquets(&self) -> &[Bouquet] {
        &self.bouquets
    }

    pub fn len(&self) -> usize {
        self.bouquets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bouquets.is_empty()
    }

    pub fn free_bouquet(&self) -> Option<&Bouquet> {
        self.bouquets.iter().find(|b| b.class == BouquetClass::Free)
    }

    /// 1-based positions of the mixed bouquets.
    pub fn mixed_positions(&self) -> Vec<usize> {
        self.bouquets
            .iter()
            .enumerate()
            .filter(|(_, b)| b.class == BouquetClass::Mixed)
            .map(|(i, _)| i + 1)
            .collect()
    }

    pub fn is_simple(&self) -> bool {
        self.bouquets.iter().all(Bouquet::is_singleton)
    }

    /// 1-based position of the bouquet containing 1-based column `j`.
    pub fn bouquet_of(&self, j: usize) -> Option<usize> {
        self.owner.get(j.checked_sub(1)?).map(|p| p + 1)
    }

    /// Class of the edge between 1-based columns `i` and `j`, or `None` if
    /// they are not adjacent in the bouquet graph.
    pub fn edge_class(&self, i: usize, j: usize) -> Option<EdgeClass> {
        let n = self.source.cols();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return None;
        }
        let (gi, gj) = (&self.gale[i - 1], &self.gale[j - 1]);
        match (gi.is_zero(), gj.is_zero()) {
            (true, true) => Some(EdgeClass::Zero),
            (false, false) if parallel(gi, gj) => {
                if same_direction(gi, gj) {
                    Some(EdgeClass::Plus)
                } else {
                    Some(EdgeClass::Minus)
                }
            }
            _ => None,
        }
    }
}

/// Row `i` of the kernel basis matrix for each column `i`.
pub fn gale_rows(a: &IntMatrix) -> Vec<IntVec> {
    kernel_basis_any(a).gale_rows()
}

/// Two nonzero vectors are parallel iff every 2×2 minor vanishes.
fn parallel(p: &IntVec, q: &IntVec) -> bool {
    let n = p.len();
    for a in 0..n {
        for b in a + 1..n {
            if &p[a] * &q[b] != &p[b] * &q[a] {
                return false;
            }
        }
    }
    true
}

/// For parallel nonzero vectors: is the proportionality factor positive?
fn same_direction(p: &IntVec, q: &IntVec) -> bool {
    let k = p.iter().position(|x| !x.is_zero()).expect("nonzero row");
    p[k].is_positive() == q[k].is_positive()
}

pub fn bouquet_decomposition(a: &IntMatrix) -> BouquetDecomposition {
    let gale = gale_rows(a);
    let n = a.cols();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut free: Vec<usize> = Vec::new();
    for i in 0..n {
        if gale[i].is_zero() {
            free.push(i);
            continue;
        }
        match groups.iter_mut().find(|g| parallel(&gale[g[0]], &gale[i])) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let columns = a.columns();
    let mut bouquets: Vec<Bouquet> = groups
        .into_iter()
        .map(|members| {
            let lead = &gale[members[0]];
            let k = lead.iter().position(|x| !x.is_zero()).expect("nonzero row");
            let sign = if lead[k].is_negative() {
                -BigInt::one()
            } else {
                BigInt::one()
            };
            let raw = IntVec::new(members.iter().map(|&j| &gale[j][k] * &sign).collect());
            let c = primitive_part(&raw).expect("lead entry is nonzero");
            let class = if c.iter().any(Signed::is_negative) {
                BouquetClass::Mixed
            } else {
                BouquetClass::NonMixed
            };
            let mut a_b = IntVec::zeros(a.rows());
            for (cj, &j) in c.iter().zip(&members) {
                a_b.add_assign_unchecked(&columns[j].scaled(cj));
            }
            Bouquet {
                members: members.iter().map(|j| j + 1).collect(),
                class,
                c: Some(c),
                a: Some(a_b),
            }
        })
        .collect();
    if !free.is_empty() {
        bouquets.push(Bouquet {
            members: free.iter().map(|j| j + 1).collect(),
            class: BouquetClass::Free,
            c: None,
            a: None,
        });
    }
    bouquets.sort_by_key(|b| b.members[0]);
    let mut owner = vec![0; n];
    for (p, b) in bouquets.iter().enumerate() {
        for &m in &b.members {
            owner[m - 1] = p;
        }
    }
    BouquetDecomposition {
        source: a.clone(),
        gale,
        bouquets,
        owner,
    }
}

/// Every bouquet is a singleton.
pub fn is_simple(a: &IntMatrix) -> bool {
    bouquet_decomposition(a).is_simple()
}

/// The bouquet matrix `A_B` (columns `a_B` in order of least member) and the
/// `c_B` vectors.
///
/// A simple configuration is returned unchanged. Otherwise all-zero rows of
/// `A_B` are dropped; they do not change the kernel.
pub fn bouquet_ideal(a: &IntMatrix) -> Result<(IntMatrix, Vec<IntVec>)> {
    let dec = bouquet_decomposition(a);
    bouquet_ideal_of(&dec)
}

pub fn bouquet_ideal_of(dec: &BouquetDecomposition) -> Result<(IntMatrix, Vec<IntVec>)> {
    if let Some(free) = dec.free_bouquet() {
        return Err(Error::FreeBouquetPresent(free.members.clone()));
    }
    let cs: Vec<IntVec> = dec
        .bouquets
        .iter()
        .map(|b| b.c.clone().expect("non-free"))
        .collect();
    if dec.is_simple() {
        return Ok((dec.source.clone(), cs));
    }
    let cols: Vec<IntVec> = dec
        .bouquets
        .iter()
        .map(|b| b.a.clone().expect("non-free"))
        .collect();
    let ab = IntMatrix::from_columns(dec.source.rows(), &cols)?;
    Ok((ab.without_zero_rows(), cs))
}

/// Every `d` columns are linearly independent (`d` = number of rows), with
/// at least `d + 2` columns.
pub fn is_general_position(a: &IntMatrix) -> Result<bool> {
    let (d, n) = (a.rows(), a.cols());
    if n < d + 2 {
        return Err(Error::TooFewColumns {
            required: d + 2,
            found: n,
        });
    }
    let combos: Vec<Vec<usize>> = (0..n).combinations(d).collect();
    let singular = combos
        .par_iter()
        .any(|cols| determinant(&square(a, cols)).is_zero());
    Ok(!singular)
}

/// The `d × d` submatrix on the given columns, as rows.
pub(crate) fn square(a: &IntMatrix, cols: &[usize]) -> Vec<Vec<BigInt>> {
    (0..a.rows())
        .map(|r| cols.iter().map(|&c| a.get(r, c).clone()).collect())
        .collect()
}

/// The `d × n` matrix with columns `(1, t, t², …, t^{d-1})` for each `t`.
pub fn cyclic_configuration(d: usize, ts: &[i64]) -> Result<IntMatrix> {
    if d == 0 {
        return Err(Error::ShapeMismatch("dimension must be positive".into()));
    }
    if let Some(p) = ts.windows(2).position(|w| w[0] >= w[1]) {
        return Err(Error::NonIncreasing(p + 2));
    }
    if ts.len() < d + 2 {
        return Err(Error::TooFewColumns {
            required: d + 2,
            found: ts.len(),
        });
    }
    let mut data = Vec::with_capacity(d * ts.len());
    for power in 0..d {
        for &t in ts {
            data.push(num_traits::pow(BigInt::from(t), power));
        }
    }
    IntMatrix::from_row_major(d, ts.len(), data)
}
