//! Indispensability, strong robustness and the strongly robust complex.
//!
//! A Graver element `u` has a proper semiconformal decomposition
//! `u = v +_sc w` exactly when some kernel vector `v ∉ {0, u}` has
//! `v⁺ ≤ u⁺`. Any such `v` is a conformal sum of Graver elements, each again
//! with positive part below `u⁺`, and not all equal to `u` because the
//! configuration is pointed. So `u` is indispensable iff no Graver element
//! `g ≠ u` (of either sign) has `g⁺ ≤ u⁺`, a finite check.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

use crate::bouquet::bouquet_decomposition;
use crate::error::{Error, Result};
use crate::graver::{graver_basis, GraverBasis};
use crate::lattice::{is_pointed, IntMatrix, IntVec};
use crate::lawrence::{d_omega, OmegaSet};

/// The indispensable elements of a Graver basis, one per `±` pair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndispensableSet {
    elements: Vec<IntVec>,
}

impl IndispensableSet {
    pub fn elements(&self) -> &[IntVec] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, u: &IntVec) -> bool {
        self.elements.binary_search(&u.sign_normalized()).is_ok()
    }
}

/// Positive parts of the signed Graver set, for witness scans.
struct PositiveParts {
    signed: Vec<IntVec>,
    positive: Vec<IntVec>,
}

impl PositiveParts {
    fn of(reps: &[IntVec]) -> Self {
        let signed: Vec<IntVec> = reps.iter().flat_map(|g| [g.clone(), -g]).collect();
        let positive = signed.iter().map(IntVec::positive_part).collect();
        PositiveParts { signed, positive }
    }

    fn has_witness(&self, u: &IntVec) -> bool {
        let up = u.positive_part();
        self.signed
            .iter()
            .zip(&self.positive)
            .any(|(g, gp)| g != u && gp.iter().zip(up.iter()).all(|(a, b)| a <= b))
    }
}

/// No proper semiconformal decomposition of `u` exists in the kernel.
pub fn is_indispensable(u: &IntVec, gr: &GraverBasis) -> Result<bool> {
    if !gr.contains(u) {
        return Err(Error::NotInGraver);
    }
    Ok(!PositiveParts::of(gr.elements()).has_witness(u))
}

pub fn indispensable_set(gr: &GraverBasis) -> IndispensableSet {
    let parts = PositiveParts::of(gr.elements());
    let elements = gr
        .elements()
        .iter()
        .filter(|u| !parts.has_witness(u))
        .cloned()
        .collect();
    IndispensableSet { elements }
}

fn all_indispensable(reps: &[IntVec]) -> bool {
    let parts = PositiveParts::of(reps);
    reps.iter().all(|u| !parts.has_witness(u))
}

/// `S(A) = Gr(A)`.
pub fn is_strongly_robust(a: &IntMatrix) -> Result<bool> {
    let gr = graver_basis(a)?;
    Ok(all_indispensable(gr.elements()))
}

/// Whether the Graver basis already in hand is entirely indispensable.
pub fn graver_is_strongly_robust(gr: &GraverBasis) -> bool {
    all_indispensable(gr.elements())
}

/// Checks that the base of `gr_t` is pointed, simple and free of free
/// vectors.
fn check_base(gr_t: &GraverBasis) -> Result<()> {
    let t = gr_t.source();
    if !is_pointed(t) {
        return Err(Error::NotPointed);
    }
    let dec = bouquet_decomposition(t);
    if let Some(free) = dec.free_bouquet() {
        return Err(Error::FreeVectorPresent(free.members().to_vec()));
    }
    if !dec.is_simple() {
        return Err(Error::NotSimple);
    }
    Ok(())
}

fn face_unchecked(gr_t: &GraverBasis, omega: &OmegaSet) -> Result<bool> {
    let lifted = gr_t
        .elements()
        .iter()
        .map(|g| d_omega(g, omega))
        .collect::<Result<Vec<_>>>()?;
    Ok(all_indispensable(&lifted))
}

/// Whether `ω ∈ Δ_T`, i.e. `Λ(T)_ω` is strongly robust, where `T` is the
/// source of `gr_t`. The Graver basis of the lifting is obtained through
/// `D_ω`, never recomputed.
pub fn omega_is_face(gr_t: &GraverBasis, omega: &OmegaSet) -> Result<bool> {
    if omega.ground() != gr_t.source().cols() {
        return Err(Error::InvalidIndexSet(format!(
            "index set over [{}] used with {} columns",
            omega.ground(),
            gr_t.source().cols()
        )));
    }
    check_base(gr_t)?;
    face_unchecked(gr_t, omega)
}

/// A simplicial complex on `{1, …, s}`, stored as its sorted antichain of
/// maximal faces. The void complex has no faces at all; `{∅}` has the single
/// maximal face `[]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SimplicialComplex {
    ground: usize,
    maximal: Vec<Vec<usize>>,
}

impl SimplicialComplex {
    /// The downward closure of `faces`.
    pub fn generated_by(
        ground: usize,
        faces: impl IntoIterator<Item = Vec<usize>>,
    ) -> Result<Self> {
        let mut sets: Vec<Vec<usize>> = Vec::new();
        for mut f in faces {
            f.sort_unstable();
            f.dedup();
            if let Some(&bad) = f.iter().find(|&&i| i == 0 || i > ground) {
                return Err(Error::InvalidIndexSet(format!(
                    "vertex {bad} outside 1..={ground}"
                )));
            }
            sets.push(f);
        }
        sets.sort();
        sets.dedup();
        let maximal: Vec<Vec<usize>> = sets
            .iter()
            .filter(|f| !sets.iter().any(|g| g.len() > f.len() && is_subset(f, g)))
            .cloned()
            .collect();
        Ok(SimplicialComplex { ground, maximal })
    }

    /// The full simplex on the given vertices.
    pub fn simplex(ground: usize, vertices: &[usize]) -> Result<Self> {
        Self::generated_by(ground, [vertices.to_vec()])
    }

    pub fn void(ground: usize) -> Self {
        SimplicialComplex {
            ground,
            maximal: Vec::new(),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    pub fn maximal_faces(&self) -> &[Vec<usize>] {
        &self.maximal
    }

    pub fn is_void(&self) -> bool {
        self.maximal.is_empty()
    }

    pub fn contains(&self, face: &[usize]) -> bool {
        let mut f = face.to_vec();
        f.sort_unstable();
        self.maximal.iter().any(|m| is_subset(&f, m))
    }

    /// Every face, ordered by cardinality and then lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        let mut all: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
        for m in &self.maximal {
            for k in 0..=m.len() {
                for sub in m.iter().copied().combinations(k) {
                    all.insert((k, sub));
                }
            }
        }
        all.into_iter().map(|(_, f)| f).collect()
    }

    pub fn face_count(&self) -> usize {
        self.faces().len()
    }

    /// Largest face size minus one; `None` for the void complex.
    pub fn dimension(&self) -> Option<isize> {
        self.maximal.iter().map(|m| m.len() as isize - 1).max()
    }

    pub fn is_subcomplex_of(&self, other: &SimplicialComplex) -> bool {
        self.maximal.iter().all(|m| other.contains(m))
    }

    /// Renames vertex `labels[k]` to `k + 1`; vertices not in `labels` must
    /// not occur.
    pub fn relabel(&self, labels: &[usize]) -> Result<SimplicialComplex> {
        let faces = self
            .maximal
            .iter()
            .map(|m| {
                m.iter()
                    .map(|v| {
                        labels
                            .iter()
                            .position(|l| l == v)
                            .map(|p| p + 1)
                            .ok_or_else(|| {
                                Error::InvalidIndexSet(format!("vertex {v} not relabeled"))
                            })
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        SimplicialComplex::generated_by(labels.len(), faces)
    }
}

impl fmt::Display for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let faces: Vec<String> = self
            .maximal
            .iter()
            .map(|m| format!("{{{}}}", m.iter().map(ToString::to_string).join(",")))
            .collect();
        write!(f, "<{}>", faces.join(", "))
    }
}

fn is_subset(small: &[usize], big: &[usize]) -> bool {
    let mut it = big.iter();
    small.iter().all(|x| it.any(|y| y == x))
}

/// `[Δ]_σ = {ω ∩ σ : ω ∈ Δ}`, keeping the original vertex labels.
pub fn induced_subcomplex(delta: &SimplicialComplex, sigma: &OmegaSet) -> SimplicialComplex {
    if delta.is_void() {
        return SimplicialComplex::void(delta.ground);
    }
    let traces = delta.maximal.iter().map(|m| {
        m.iter()
            .copied()
            .filter(|&v| sigma.contains(v))
            .collect::<Vec<_>>()
    });
    SimplicialComplex::generated_by(delta.ground, traces).expect("traces stay in the ground set")
}

/// `Δ_T` for a simple, pointed configuration without free vectors.
pub fn strongly_robust_complex(t: &IntMatrix) -> Result<SimplicialComplex> {
    let gr = graver_basis(t)?;
    complex_from_graver(&gr)
}

/// `Δ_T` from a precomputed `Gr(T)`.
///
/// Candidates are visited by cardinality; a set is tested only when all of
/// its codimension-one subsets are faces, which is exact because `Δ_T` is
/// downward closed. Tests within a level run on the current rayon pool.
pub fn complex_from_graver(gr_t: &GraverBasis) -> Result<SimplicialComplex> {
    check_base(gr_t)?;
    let s = gr_t.source().cols();
    let empty = OmegaSet::empty(s);
    if !face_unchecked(gr_t, &empty)? {
        return Ok(SimplicialComplex::void(s));
    }
    let mut faces: Vec<Vec<usize>> = vec![Vec::new()];
    let mut level: Vec<Vec<usize>> = vec![Vec::new()];
    while !level.is_empty() {
        let known: BTreeSet<&Vec<usize>> = level.iter().collect();
        let candidates: Vec<Vec<usize>> = level
            .iter()
            .flat_map(|f| {
                let start = f.last().map_or(1, |l| l + 1);
                (start..=s).map(move |j| {
                    let mut g = f.clone();
                    g.push(j);
                    g
                })
            })
            .filter(|g| {
                (0..g.len()).all(|skip| {
                    let sub: Vec<usize> = g
                        .iter()
                        .enumerate()
                        .filter(|&(k, _)| k != skip)
                        .map(|(_, &v)| v)
                        .collect();
                    known.contains(&sub)
                })
            })
            .collect();
        let verdicts: Vec<bool> = candidates
            .par_iter()
            .map(|g| {
                let omega = OmegaSet::new(s, g.iter().copied()).expect("candidate within ground");
                face_unchecked(gr_t, &omega)
            })
            .collect::<Result<Vec<_>>>()?;
        level = candidates
            .into_iter()
            .zip(verdicts)
            .filter(|(_, ok)| *ok)
            .map(|(g, _)| g)
            .collect();
        faces.extend(level.iter().cloned());
    }
    SimplicialComplex::generated_by(s, faces)
}
