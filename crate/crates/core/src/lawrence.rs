//! Lawrence liftings `Λ(T)`, `Λ(T)_ω`, the maps `D_ω`, and generalized
//! Lawrence matrices that realize a prescribed bouquet structure over a base
//! configuration.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::graver::GraverBasis;
use crate::lattice::{IntMatrix, IntVec};

/// A subset `ω ⊆ {1, …, s}`, stored sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OmegaSet {
    ground: usize,
    members: Vec<usize>,
}

impl OmegaSet {
    /// Rejects indices outside `1..=ground` and repeated indices.
    pub fn new(ground: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        members.sort_unstable();
        if let Some(&bad) = members.iter().find(|&&i| i == 0 || i > ground) {
            return Err(Error::InvalidIndexSet(format!(
                "index {bad} outside 1..={ground}"
            )));
        }
        if members.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidIndexSet("repeated index".into()));
        }
        Ok(OmegaSet { ground, members })
    }

    pub fn empty(ground: usize) -> Self {
        OmegaSet {
            ground,
            members: Vec::new(),
        }
    }

    pub fn full(ground: usize) -> Self {
        OmegaSet {
            ground,
            members: (1..=ground).collect(),
        }
    }

    pub fn ground(&self) -> usize {
        self.ground
    }

    /// 1-based members, ascending.
    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// 1-based indices of `[s] \ ω`, ascending.
    pub fn complement(&self) -> Vec<usize> {
        (1..=self.ground).filter(|&i| !self.contains(i)).collect()
    }

    fn check_ground(&self, s: usize) -> Result<()> {
        if self.ground != s {
            return Err(Error::InvalidIndexSet(format!(
                "index set over [{}] used with {s} columns",
                self.ground
            )));
        }
        Ok(())
    }
}

impl fmt::Display for OmegaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.members.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

/// The second Lawrence lifting `[[T, 0], [I_s, I_s]]`.
pub fn lawrence_lift(t: &IntMatrix) -> IntMatrix {
    lawrence_lift_omega(t, &OmegaSet::empty(t.cols())).expect("empty set fits any ground")
}

/// `Λ(T)` with row `m + i` and column `s + i` removed for every `i ∈ ω`.
/// Retained mirrored columns keep their ascending order.
pub fn lawrence_lift_omega(t: &IntMatrix, omega: &OmegaSet) -> Result<IntMatrix> {
    let (m, s) = (t.rows(), t.cols());
    omega.check_ground(s)?;
    let kept = omega.complement();
    let cols = s + kept.len();
    let mut data = Vec::with_capacity((m + kept.len()) * cols);
    for r in 0..m {
        data.extend((0..s).map(|c| t.get(r, c).clone()));
        data.extend(std::iter::repeat_with(BigInt::zero).take(kept.len()));
    }
    for (k, &i) in kept.iter().enumerate() {
        for c in 0..s {
            data.push(if c + 1 == i {
                BigInt::one()
            } else {
                BigInt::zero()
            });
        }
        for kk in 0..kept.len() {
            data.push(if kk == k {
                BigInt::one()
            } else {
                BigInt::zero()
            });
        }
    }
    let lifted = IntMatrix::from_row_major(m + kept.len(), cols, data)?;
    debug_assert_eq!(
        lifted.corank(),
        t.corank(),
        "lifting must preserve codimension"
    );
    Ok(lifted)
}

/// `D_ω(u) = (u, -[u]^ω)`, where `[u]^ω` drops the coordinates in `ω`.
pub fn d_omega(u: &IntVec, omega: &OmegaSet) -> Result<IntVec> {
    if u.len() != omega.ground() {
        return Err(Error::LengthMismatch {
            expected: omega.ground(),
            found: u.len(),
        });
    }
    let kept: Vec<usize> = omega.complement().iter().map(|i| i - 1).collect();
    Ok(u.concat(&-u.select(&kept)))
}

/// `[u]^ω`: the coordinates of `u` outside `ω`.
pub fn project_omega(u: &IntVec, omega: &OmegaSet) -> Result<IntVec> {
    if u.len() != omega.ground() {
        return Err(Error::LengthMismatch {
            expected: omega.ground(),
            found: u.len(),
        });
    }
    let kept: Vec<usize> = omega.complement().iter().map(|i| i - 1).collect();
    Ok(u.select(&kept))
}

/// The Graver basis of `Λ(T)_ω` as the image of `Gr(T)` under `D_ω`.
pub fn lifted_graver(gr_t: &GraverBasis, omega: &OmegaSet) -> Result<GraverBasis> {
    let lifted = lawrence_lift_omega(gr_t.source(), omega)?;
    let elements = gr_t
        .elements()
        .iter()
        .map(|g| d_omega(g, omega))
        .collect::<Result<Vec<_>>>()?;
    Ok(GraverBasis::from_minimal(lifted, elements))
}

/// Integers `λ` with `λ · c = 1`, by extended Euclid folded left to right.
/// Coefficients after the point where the running gcd reaches 1 are zero.
pub fn bezout_coefficients(c: &IntVec) -> Result<IntVec> {
    let g = c.content();
    if !g.is_one() {
        return Err(Error::GcdNotOne {
            index: 0,
            gcd: g.to_string(),
        });
    }
    let n = c.len();
    let mut lambda = vec![BigInt::zero(); n];
    let first = c.iter().position(|x| !x.is_zero()).expect("gcd is one");
    let mut running = c[first].abs();
    lambda[first] = if c[first].is_negative() {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    for k in first + 1..n {
        if running.is_one() {
            break;
        }
        if c[k].is_zero() {
            continue;
        }
        let (g, x, y) = ext_gcd(&running, &c[k]);
        for l in lambda[..k].iter_mut() {
            *l *= &x;
        }
        lambda[k] = y;
        running = g;
    }
    Ok(IntVec::new(lambda))
}

/// `(g, x, y)` with `a x + b y = g = gcd(a, b) ≥ 0`.
fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (BigInt::one(), BigInt::zero());
    let (mut old_t, mut t) = (BigInt::zero(), BigInt::one());
    while !r.is_zero() {
        let q = &old_r / &r;
        let next_r = &old_r - &q * &r;
        old_r = std::mem::replace(&mut r, next_r);
        let next_s = &old_s - &q * &s;
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &q * &t;
        old_t = std::mem::replace(&mut t, next_t);
    }
    if old_r.is_negative() {
        (-old_r, -old_s, -old_t)
    } else {
        (old_r, old_s, old_t)
    }
}

/// Input of the generalized Lawrence construction: a base configuration
/// `T` (`m × s`) and one c-vector per column, with optional λ-vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlmSpec {
    base: IntMatrix,
    cs: Vec<IntVec>,
    lambdas: Vec<IntVec>,
}

impl GlmSpec {
    /// Validates the c-vectors (full support, gcd 1, positive first entry)
    /// and derives λ with [`bezout_coefficients`].
    pub fn new(base: IntMatrix, cs: Vec<IntVec>) -> Result<Self> {
        Self::validate_cs(&base, &cs)?;
        let lambdas = cs
            .iter()
            .map(bezout_coefficients)
            .collect::<Result<Vec<_>>>()?;
        Ok(GlmSpec { base, cs, lambdas })
    }

    /// As [`GlmSpec::new`] but with caller-chosen λ-vectors.
    pub fn with_lambdas(base: IntMatrix, cs: Vec<IntVec>, lambdas: Vec<IntVec>) -> Result<Self> {
        Self::validate_cs(&base, &cs)?;
        if lambdas.len() != cs.len() {
            return Err(Error::LengthMismatch {
                expected: cs.len(),
                found: lambdas.len(),
            });
        }
        for (i, (l, c)) in lambdas.iter().zip(&cs).enumerate() {
            if l.len() != c.len() || !l.dot(c)?.is_one() {
                return Err(Error::BezoutMismatch(i + 1));
            }
        }
        Ok(GlmSpec { base, cs, lambdas })
    }

    fn validate_cs(base: &IntMatrix, cs: &[IntVec]) -> Result<()> {
        if cs.len() != base.cols() {
            return Err(Error::LengthMismatch {
                expected: base.cols(),
                found: cs.len(),
            });
        }
        for (i, c) in cs.iter().enumerate() {
            if c.is_empty() || c.iter().any(Zero::is_zero) {
                return Err(Error::FullSupportViolated(i + 1));
            }
            let g = c.content();
            if !g.is_one() {
                return Err(Error::GcdNotOne {
                    index: i + 1,
                    gcd: g.to_string(),
                });
            }
            if !c[0].is_positive() {
                return Err(Error::FirstComponentNotPositive(i + 1));
            }
        }
        Ok(())
    }

    pub fn base(&self) -> &IntMatrix {
        &self.base
    }

    pub fn c_vectors(&self) -> &[IntVec] {
        &self.cs
    }

    pub fn lambdas(&self) -> &[IntVec] {
        &self.lambdas
    }
}

/// The generalized Lawrence matrix of `spec`.
///
/// Columns come in blocks, one per base column `t_i`, of width `m_i = |c_i|`.
/// The top `m` rows hold `λ_{ik} t_i` in column `(i, k)`. Each block then
/// contributes `m_i - 1` rows, the `k`-th carrying `-c_{ik}` in column
/// `(i, 1)` and `c_{i1}` in column `(i, k)`.
pub fn build_generalized_lawrence(spec: &GlmSpec) -> Result<IntMatrix> {
    let t = &spec.base;
    let m = t.rows();
    let widths: Vec<usize> = spec.cs.iter().map(IntVec::len).collect();
    let cols: usize = widths.iter().sum();
    let extra: usize = widths.iter().map(|w| w - 1).sum();
    let rows = m + extra;
    let mut data = vec![BigInt::zero(); rows * cols];
    let mut offset = 0;
    let mut row = m;
    for (i, (c, lambda)) in spec.cs.iter().zip(&spec.lambdas).enumerate() {
        for (k, l) in lambda.iter().enumerate() {
            for r in 0..m {
                data[r * cols + offset + k] = l * t.get(r, i);
            }
        }
        for k in 1..c.len() {
            data[row * cols + offset] = -&c[k];
            data[row * cols + offset + k] = c[0].clone();
            row += 1;
        }
        offset += c.len();
    }
    IntMatrix::from_row_major(rows, cols, data)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVec {
        IntVec::from_i64s(x)
    }

    #[test]
    fn lift_shapes() {
        let t = IntMatrix::from_i64_rows(&[[4, 6, 5]]);
        let l = lawrence_lift(&t);
        assert_eq!((l.rows(), l.cols()), (4, 6));
        assert_eq!(
            l,
            IntMatrix::from_i64_rows(&[
                [4, 6, 5, 0, 0, 0],
                [1, 0, 0, 1, 0, 0],
                [0, 1, 0, 0, 1, 0],
                [0, 0, 1, 0, 0, 1],
            ])
        );
        let l3 = lawrence_lift_omega(&t, &OmegaSet::new(3, [3]).unwrap()).unwrap();
        assert_eq!(
            l3,
            IntMatrix::from_i64_rows(&[[4, 6, 5, 0, 0], [1, 0, 0, 1, 0], [0, 1, 0, 0, 1]])
        );
        assert_eq!(lawrence_lift_omega(&t, &OmegaSet::empty(3)).unwrap(), l);
        assert!(lawrence_lift_omega(&t, &OmegaSet::empty(4)).is_err());
    }

    #[test]
    fn d_omega_examples() {
        let u = v(&[1, 1, -2]);
        assert_eq!(
            d_omega(&u, &OmegaSet::empty(3)).unwrap(),
            v(&[1, 1, -2, -1, -1, 2])
        );
        assert_eq!(
            d_omega(&u, &OmegaSet::new(3, [3]).unwrap()).unwrap(),
            v(&[1, 1, -2, -1, -1])
        );
        assert_eq!(d_omega(&u, &OmegaSet::full(3)).unwrap(), u);
        assert!(d_omega(&v(&[1, 2]), &OmegaSet::empty(3)).is_err());
    }

    #[test]
    fn omega_validation() {
        assert!(OmegaSet::new(3, [0]).is_err());
        assert!(OmegaSet::new(3, [4]).is_err());
        assert!(OmegaSet::new(3, [2, 2]).is_err());
        let w = OmegaSet::new(5, [4, 1]).unwrap();
        assert_eq!(w.members(), &[1, 4]);
        assert_eq!(w.complement(), vec![2, 3, 5]);
        assert_eq!(w.to_string(), "{1,4}");
    }

    #[test]
    fn bezout_examples() {
        assert_eq!(
            bezout_coefficients(&v(&[7, 1, 2027])).unwrap(),
            v(&[0, 1, 0])
        );
        assert_eq!(bezout_coefficients(&v(&[2, 3, 7])).unwrap(), v(&[-1, 1, 0]));
        assert_eq!(bezout_coefficients(&v(&[1, -1])).unwrap(), v(&[1, 0]));
        assert_eq!(bezout_coefficients(&v(&[11, 1])).unwrap(), v(&[0, 1]));
        assert_eq!(
            bezout_coefficients(&v(&[4, -1, -27])).unwrap(),
            v(&[0, -1, 0])
        );
        assert!(matches!(
            bezout_coefficients(&v(&[2, 4])),
            Err(Error::GcdNotOne { .. })
        ));
        let c = v(&[6, 10, 15]);
        assert!(bezout_coefficients(&c).unwrap().dot(&c).unwrap().is_one());
        let c = v(&[0, -3, 5]);
        assert!(bezout_coefficients(&c).unwrap().dot(&c).unwrap().is_one());
    }

    #[test]
    fn glm_validation() {
        let t = IntMatrix::from_i64_rows(&[[4, 6, 5]]);
        let ok = vec![v(&[1]), v(&[1]), v(&[1])];
        assert_eq!(
            build_generalized_lawrence(&GlmSpec::new(t.clone(), ok).unwrap()).unwrap(),
            t
        );
        let bad = |cs: Vec<IntVec>| GlmSpec::new(t.clone(), cs).unwrap_err();
        assert_eq!(
            bad(vec![v(&[7, 0, 2027]), v(&[1]), v(&[1])]),
            Error::FullSupportViolated(1)
        );
        assert!(matches!(
            bad(vec![v(&[1]), v(&[2, 4]), v(&[1])]),
            Error::GcdNotOne { index: 2, .. }
        ));
        assert_eq!(
            bad(vec![v(&[1]), v(&[1]), v(&[-1, 2])]),
            Error::FirstComponentNotPositive(3)
        );
        let err = GlmSpec::with_lambdas(
            t.clone(),
            vec![v(&[2, 3]), v(&[1]), v(&[1])],
            vec![v(&[1, 1]), v(&[1]), v(&[1])],
        )
        .unwrap_err();
        assert_eq!(err, Error::BezoutMismatch(1));
    }
}
