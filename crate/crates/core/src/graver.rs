//! Graver bases by completion.
//!
//! Starting from a lattice basis, sums of pairs are reduced by the current
//! set under the conformal order and every nonzero remainder is added, until
//! all pair sums reduce. The result contains the Graver basis; a final
//! auto-reduction pass keeps only the `⊑`-minimal elements.

use std::collections::VecDeque;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lattice::{conformal_leq_unchecked, is_pointed, kernel_basis_any, IntMatrix, IntVec};

/// The Graver basis of a pointed configuration.
///
/// Elements are stored one per `±` pair, sign-normalized (lowest-index
/// nonzero entry positive) and sorted; [`GraverBasis::iter_signed`] exposes
/// the negation-closed set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraverBasis {
    source: IntMatrix,
    elements: Vec<IntVec>,
}

impl GraverBasis {
    /// Wraps already-minimal elements. Signs are normalized and order is
    /// canonicalized; no minimality check is made.
    pub(crate) fn from_minimal(source: IntMatrix, elements: Vec<IntVec>) -> Self {
        let mut elements: Vec<IntVec> = elements.into_iter().map(|v| v.sign_normalized()).collect();
        elements.sort();
        elements.dedup();
        GraverBasis { source, elements }
    }

    /// Rebuilds a basis from stored elements (for example a cache entry),
    /// checking that every element is a nonzero kernel vector and that no
    /// element is conformally below another.
    pub fn from_stored(source: IntMatrix, elements: Vec<IntVec>) -> Result<Self> {
        for v in &elements {
            if v.is_zero() || !source.in_kernel(v)? {
                return Err(Error::NotInGraver);
            }
        }
        let basis = Self::from_minimal(source, elements);
        let signed: Vec<IntVec> = basis.iter_signed().collect();
        for g in &basis.elements {
            if signed
                .iter()
                .any(|h| h != g && conformal_leq_unchecked(h, g))
            {
                return Err(Error::NotInGraver);
            }
        }
        Ok(basis)
    }

    pub fn source(&self) -> &IntMatrix {
        &self.source
    }

    /// One representative per `±` pair, in canonical order.
    pub fn elements(&self) -> &[IntVec] {
        &self.elements
    }

    /// Number of `±` pairs.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// The full negation-closed set: each representative followed by its
    /// negation.
    pub fn iter_signed(&self) -> impl Iterator<Item = IntVec> + '_ {
        self.elements.iter().flat_map(|g| [g.clone(), -g])
    }

    pub fn contains(&self, u: &IntVec) -> bool {
        self.elements.binary_search(&u.sign_normalized()).is_ok()
    }

    pub fn max_norm(&self) -> BigInt {
        self.elements
            .iter()
            .map(IntVec::max_norm)
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// Representatives as the rows of a matrix.
    pub fn to_matrix(&self) -> IntMatrix {
        let rows: Vec<Vec<BigInt>> = self.elements.iter().map(|v| v.entries().to_vec()).collect();
        if rows.is_empty() {
            return IntMatrix::zeros(0, self.source.cols());
        }
        IntMatrix::from_rows(&rows).expect("elements share a length")
    }
}

/// How the completion queue is processed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompletionMode {
    /// Strictly sequential, one pair at a time.
    Reference,
    /// Pair sums are reduced in fixed-size batches on the current rayon pool,
    /// then merged in queue order. Batch boundaries do not depend on the pool
    /// size, so the result is identical for any thread count.
    Batched { batch: usize },
}

impl Default for CompletionMode {
    fn default() -> Self {
        CompletionMode::Batched { batch: 256 }
    }
}

/// Graver basis of a pointed matrix with the default (batched) completion.
pub fn graver_basis(a: &IntMatrix) -> Result<GraverBasis> {
    graver_basis_with(a, CompletionMode::default())
}

pub fn graver_basis_with(a: &IntMatrix, mode: CompletionMode) -> Result<GraverBasis> {
    if !is_pointed(a) {
        return Err(Error::NotPointed);
    }
    let kernel = kernel_basis_any(a);
    let mut completion = Completion::new(a.cols());
    for v in kernel.vectors() {
        completion.insert(v.clone());
    }
    completion.run(mode);
    let minimal = completion.minimal();
    Ok(GraverBasis::from_minimal(a.clone(), minimal))
}

/// Reduces `v` by `G ∪ -G`: while some `±g ⊑ v`, subtract it. The reducer is
/// always the first qualifying element of `g` in slice order.
pub fn normal_form(v: &IntVec, g: &[IntVec]) -> Result<IntVec> {
    for h in g {
        v.check_len(h)?;
    }
    let reducers: Vec<Entry> = g
        .iter()
        .filter(|h| !h.is_zero())
        .cloned()
        .map(Entry::new)
        .collect();
    Ok(reduce(v.clone(), &reducers))
}

/// All `⊑`-minimal nonzero kernel vectors with `‖v‖∞ ≤ k`, one per `±` pair,
/// sign-normalized and sorted. Exhaustive over the box; meant as an oracle for
/// small instances.
pub fn graver_brute_force(a: &IntMatrix, k: u32) -> Result<Vec<IntVec>> {
    if k == 0 {
        return Err(Error::InvalidIndexSet("box radius must be positive".into()));
    }
    if !is_pointed(a) {
        return Err(Error::NotPointed);
    }
    let n = a.cols();
    let k = i64::from(k);
    let cols: Vec<Vec<BigInt>> = (0..n).map(|c| a.column(c).into_entries()).collect();
    let mut kernel_points = Vec::new();
    let mut point = vec![-k; n];
    let mut image = vec![BigInt::zero(); a.rows()];
    for (c, &x) in point.iter().enumerate() {
        for (r, e) in image.iter_mut().enumerate() {
            *e += &cols[c][r] * x;
        }
    }
    'outer: loop {
        if image.iter().all(Zero::is_zero) && point.iter().any(|&x| x != 0) {
            kernel_points.push(IntVec::from_i64s(&point));
        }
        // Odometer step, keeping A·point up to date.
        for c in 0..n {
            if point[c] < k {
                point[c] += 1;
                for (r, e) in image.iter_mut().enumerate() {
                    *e += &cols[c][r];
                }
                continue 'outer;
            }
            point[c] = -k;
            for (r, e) in image.iter_mut().enumerate() {
                *e -= &cols[c][r] * (2 * k);
            }
        }
        break;
    }
    let mut minimal: Vec<IntVec> = kernel_points
        .iter()
        .filter(|v| v.leading_sign() > 0)
        .filter(|v| {
            !kernel_points
                .iter()
                .any(|h| h != *v && conformal_leq_unchecked(h, v))
        })
        .cloned()
        .collect();
    minimal.sort();
    Ok(minimal)
}

/// Per-coordinate sign bitsets used to discard reducer candidates before any
/// big-integer comparison.
#[derive(Clone, Debug)]
struct Signs {
    pos: Vec<u64>,
    neg: Vec<u64>,
}

impl Signs {
    fn of(v: &IntVec) -> Self {
        let words = v.len().div_ceil(64).max(1);
        let mut pos = vec![0u64; words];
        let mut neg = vec![0u64; words];
        for (i, x) in v.iter().enumerate() {
            if x.is_positive() {
                pos[i / 64] |= 1 << (i % 64);
            } else if x.is_negative() {
                neg[i / 64] |= 1 << (i % 64);
            }
        }
        Signs { pos, neg }
    }

    fn subset(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & !y == 0)
    }

    /// Whether `+self` could be `⊑ other`.
    fn fits(&self, other: &Signs) -> bool {
        Self::subset(&self.pos, &other.pos) && Self::subset(&self.neg, &other.neg)
    }

    /// Whether `-self` could be `⊑ other`.
    fn fits_negated(&self, other: &Signs) -> bool {
        Self::subset(&self.pos, &other.neg) && Self::subset(&self.neg, &other.pos)
    }

    /// Whether `self + other` has a coordinate where the signs cancel.
    fn conflicts(&self, other: &Signs) -> bool {
        self.pos.iter().zip(&other.neg).any(|(a, b)| a & b != 0)
            || self.neg.iter().zip(&other.pos).any(|(a, b)| a & b != 0)
    }

    /// Whether `self - other` has a coordinate where the signs cancel.
    fn conflicts_negated(&self, other: &Signs) -> bool {
        self.pos.iter().zip(&other.pos).any(|(a, b)| a & b != 0)
            || self.neg.iter().zip(&other.neg).any(|(a, b)| a & b != 0)
    }
}

#[derive(Clone, Debug)]
struct Entry {
    vec: IntVec,
    signs: Signs,
    // Cheap lower bound on the entries' magnitudes where it fits a machine word.
    l1: Option<u64>,
}

impl Entry {
    fn new(vec: IntVec) -> Self {
        let signs = Signs::of(&vec);
        let l1 = vec.l1_norm().to_u64();
        Entry { vec, signs, l1 }
    }
}

fn reduce(mut v: IntVec, g: &[Entry]) -> IntVec {
    let mut signs = Signs::of(&v);
    let mut l1 = v.l1_norm().to_u64();
    'again: loop {
        for h in g {
            if let (Some(a), Some(b)) = (h.l1, l1) {
                if a > b {
                    continue;
                }
            }
            if h.signs.fits(&signs) && conformal_leq_unchecked(&h.vec, &v) {
                v.sub_assign_unchecked(&h.vec);
            } else if h.signs.fits_negated(&signs) && conformal_leq_unchecked(&(-&h.vec), &v) {
                v.add_assign_unchecked(&h.vec);
            } else {
                continue;
            }
            if v.is_zero() {
                return v;
            }
            signs = Signs::of(&v);
            l1 = v.l1_norm().to_u64();
            continue 'again;
        }
        return v;
    }
}

struct Completion {
    elements: Vec<Entry>,
    queue: VecDeque<(usize, usize, bool)>,
}

impl Completion {
    fn new(_width: usize) -> Self {
        Completion {
            elements: Vec::new(),
            queue: VecDeque::new(),
        }
    }

    fn insert(&mut self, v: IntVec) {
        let entry = Entry::new(v.sign_normalized());
        let new = self.elements.len();
        for (i, e) in self.elements.iter().enumerate() {
            if e.signs.conflicts(&entry.signs) {
                self.queue.push_back((i, new, true));
            }
            if e.signs.conflicts_negated(&entry.signs) {
                self.queue.push_back((i, new, false));
            }
        }
        self.elements.push(entry);
    }

    fn pair_sum(&self, (i, j, plus): (usize, usize, bool)) -> IntVec {
        let (a, b) = (&self.elements[i].vec, &self.elements[j].vec);
        if plus {
            a.add_unchecked(b)
        } else {
            a.sub_unchecked(b)
        }
    }

    fn run(&mut self, mode: CompletionMode) {
        match mode {
            CompletionMode::Reference => {
                while let Some(pair) = self.queue.pop_front() {
                    let s = self.pair_sum(pair);
                    let r = reduce(s, &self.elements);
                    if !r.is_zero() {
                        self.insert(r);
                    }
                }
            }
            CompletionMode::Batched { batch } => {
                let batch = batch.max(1);
                while !self.queue.is_empty() {
                    let take = batch.min(self.queue.len());
                    let pairs: Vec<_> = self.queue.drain(..take).collect();
                    let snapshot = &self.elements;
                    let reduced: Vec<IntVec> = pairs
                        .par_iter()
                        .map(|&p| {
                            let (a, b) = (&snapshot[p.0].vec, &snapshot[p.1].vec);
                            let s = if p.2 {
                                a.add_unchecked(b)
                            } else {
                                a.sub_unchecked(b)
                            };
                            reduce(s, snapshot)
                        })
                        .collect();
                    for r in reduced {
                        if r.is_zero() {
                            continue;
                        }
                        let r = reduce(r, &self.elements);
                        if !r.is_zero() {
                            self.insert(r);
                        }
                    }
                }
            }
        }
    }

    /// Elements not reducible by any other element.
    fn minimal(&self) -> Vec<IntVec> {
        let all = &self.elements;
        (0..all.len())
            .into_par_iter()
            .filter(|&i| {
                let e = &all[i];
                !all.iter().enumerate().any(|(j, h)| {
                    j != i
                        && ((h.signs.fits(&e.signs) && conformal_leq_unchecked(&h.vec, &e.vec))
                            || (h.signs.fits_negated(&e.signs)
                                && conformal_leq_unchecked(&(-&h.vec), &e.vec)))
                })
            })
            .map(|i| all[i].vec.clone())
            .collect()
    }
}
