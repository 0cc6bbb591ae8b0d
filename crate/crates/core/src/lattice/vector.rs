use std::fmt;
use std::ops::{Index, Neg};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// An exact integer vector.
///
/// Ordering is lexicographic on the entries, which is what every canonical
/// sort in this crate relies on.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct IntVec(Vec<BigInt>);

impl IntVec {
    pub fn new(entries: Vec<BigInt>) -> Self {
        IntVec(entries)
    }

    pub fn zeros(len: usize) -> Self {
        IntVec(vec![BigInt::zero(); len])
    }

    pub fn from_i64s(entries: &[i64]) -> Self {
        IntVec(entries.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[BigInt] {
        &self.0
    }

    pub fn into_entries(self) -> Vec<BigInt> {
        self.0
    }

    pub fn iter(&self) -> std::slice::Iter<'_, BigInt> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// `u⁺`: the componentwise maximum of `u` and `0`.
    pub fn positive_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|x| {
                    if x.is_positive() {
                        x.clone()
                    } else {
                        BigInt::zero()
                    }
                })
                .collect(),
        )
    }

    /// `u⁻`: the componentwise maximum of `-u` and `0`, so that `u = u⁺ - u⁻`.
    pub fn negative_part(&self) -> IntVec {
        IntVec(
            self.0
                .iter()
                .map(|x| if x.is_negative() { -x } else { BigInt::zero() })
                .collect(),
        )
    }

    /// Zero-based indices of the nonzero entries.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }

    pub fn check_len(&self, other: &IntVec) -> Result<()> {
        if self.len() != other.len() {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &IntVec) -> Result<IntVec> {
        self.check_len(other)?;
        Ok(self.add_unchecked(other))
    }

    pub fn checked_sub(&self, other: &IntVec) -> Result<IntVec> {
        self.check_len(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub(crate) fn sub_unchecked(&self, other: &IntVec) -> IntVec {
        IntVec(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub(crate) fn sub_assign_unchecked(&mut self, other: &IntVec) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a -= b;
        }
    }

    pub(crate) fn add_assign_unchecked(&mut self, other: &IntVec) {
        for (a, b) in self.0.iter_mut().zip(&other.0) {
            *a += b;
        }
    }

    pub fn scaled(&self, k: &BigInt) -> IntVec {
        IntVec(self.0.iter().map(|x| x * k).collect())
    }

    pub fn dot(&self, other: &IntVec) -> Result<BigInt> {
        self.check_len(other)?;
        Ok(self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum())
    }

    /// `‖u‖∞`.
    pub fn max_norm(&self) -> BigInt {
        self.0
            .iter()
            .map(|x| x.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }

    /// `‖u‖₁`.
    pub fn l1_norm(&self) -> BigInt {
        self.0.iter().map(|x| x.abs()).sum()
    }

    /// Gcd of the entries (nonnegative; zero for the zero vector).
    pub fn content(&self) -> BigInt {
        self.0.iter().fold(BigInt::zero(), |g, x| g.gcd(x))
    }

    /// Sign of the lowest-index nonzero entry, or `0` for the zero vector.
    pub fn leading_sign(&self) -> i32 {
        match self.0.iter().find(|x| !x.is_zero()) {
            Some(x) if x.is_positive() => 1,
            Some(_) => -1,
            None => 0,
        }
    }

    /// The vector or its negation, whichever has a positive lowest-index
    /// nonzero entry.
    pub fn sign_normalized(&self) -> IntVec {
        if self.leading_sign() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Entries restricted to the given zero-based positions, in that order.
    pub fn select(&self, positions: &[usize]) -> IntVec {
        IntVec(positions.iter().map(|&i| self.0[i].clone()).collect())
    }

    pub fn concat(&self, other: &IntVec) -> IntVec {
        let mut v = self.0.clone();
        v.extend(other.0.iter().cloned());
        IntVec(v)
    }

    /// Entries as `i64`, failing if any entry is out of range.
    pub fn to_i64s(&self) -> Result<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.0
            .iter()
            .map(|x| x.to_i64().ok_or(Error::Overflow))
            .collect()
    }
}

impl Neg for &IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.iter().map(|x| -x).collect())
    }
}

impl Neg for IntVec {
    type Output = IntVec;
    fn neg(self) -> IntVec {
        IntVec(self.0.into_iter().map(|x| -x).collect())
    }
}

impl Index<usize> for IntVec {
    type Output = BigInt;
    fn index(&self, i: usize) -> &BigInt {
        &self.0[i]
    }
}

impl From<Vec<BigInt>> for IntVec {
    fn from(v: Vec<BigInt>) -> Self {
        IntVec(v)
    }
}

impl From<&[i64]> for IntVec {
    fn from(v: &[i64]) -> Self {
        IntVec::from_i64s(v)
    }
}

impl<const N: usize> From<[i64; N]> for IntVec {
    fn from(v: [i64; N]) -> Self {
        IntVec::from_i64s(&v)
    }
}

impl fmt::Debug for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// `g ⊑ u`: `g⁺ ≤ u⁺` and `g⁻ ≤ u⁻` componentwise.
pub fn conformal_leq(g: &IntVec, u: &IntVec) -> Result<bool> {
    g.check_len(u)?;
    Ok(conformal_leq_unchecked(g, u))
}

pub(crate) fn conformal_leq_unchecked(g: &IntVec, u: &IntVec) -> bool {
    g.0.iter().zip(&u.0).all(|(a, b)| {
        if a.is_positive() {
            b >= a
        } else if a.is_negative() {
            b <= a
        } else {
            true
        }
    })
}

/// Whether `u = v + w` is a semiconformal decomposition: `u = v + w`, and for
/// every index, `v_i > 0` implies `w_i ≥ 0` and `w_i < 0` implies `v_i ≤ 0`.
///
/// The two implications are contrapositives of each other; both are checked.
pub fn is_semiconformal_sum(u: &IntVec, v: &IntVec, w: &IntVec) -> Result<bool> {
    u.check_len(v)?;
    u.check_len(w)?;
    if u.0
        .iter()
        .zip(&v.0)
        .zip(&w.0)
        .any(|((a, b), c)| *a != b + c)
    {
        return Ok(false);
    }
    let ok = v.0.iter().zip(&w.0).all(|(vi, wi)| {
        let first = !vi.is_positive() || !wi.is_negative();
        let second = !wi.is_negative() || !vi.is_positive();
        first && second
    });
    Ok(ok)
}

/// `v` divided by the gcd of its entries. The sign is kept; use
/// [`IntVec::sign_normalized`] on the result for the canonical sign.
pub fn primitive_part(v: &IntVec) -> Result<IntVec> {
    let g = v.content();
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(IntVec(v.0.iter().map(|x| x / &g).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> IntVec {
        IntVec::from_i64s(x)
    }

    #[test]
    fn parts_and_support() {
        let u = v(&[5, 0, -4]);
        assert_eq!(u.positive_part(), v(&[5, 0, 0]));
        assert_eq!(u.negative_part(), v(&[0, 0, 4]));
        assert_eq!(u.support(), vec![0, 2]);
        assert_eq!(u.positive_part().sub_unchecked(&u.negative_part()), u);
    }

    #[test]
    fn conformal_order_examples() {
        assert!(conformal_leq(&v(&[1, -1, 0]), &v(&[2, -1, 0])).unwrap());
        assert!(!conformal_leq(&v(&[1, 1, -2]), &v(&[5, 0, -4])).unwrap());
        let u = v(&[3, -2, 7]);
        assert!(conformal_leq(&u, &u).unwrap());
        assert!(matches!(
            conformal_leq(&v(&[1]), &v(&[1, 2])),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn semiconformal_examples() {
        assert!(is_semiconformal_sum(&v(&[5, 0, -4]), &v(&[3, -2, 0]), &v(&[2, 2, -4])).unwrap());
        assert!(!is_semiconformal_sum(&v(&[1, 0]), &v(&[1, 0]), &v(&[1, 0])).unwrap());
        let u = v(&[4, -7, 0, 2]);
        assert!(is_semiconformal_sum(&u, &u, &IntVec::zeros(4)).unwrap());
        assert!(is_semiconformal_sum(&v(&[1]), &v(&[1]), &v(&[1, 2])).is_err());
    }

    #[test]
    fn primitive_part_examples() {
        assert_eq!(primitive_part(&v(&[4, -2])).unwrap(), v(&[2, -1]));
        assert_eq!(primitive_part(&v(&[7, 1, 2027])).unwrap(), v(&[7, 1, 2027]));
        assert_eq!(primitive_part(&v(&[0, 0])), Err(Error::ZeroVector));
        assert_eq!(primitive_part(&v(&[-6, 4])).unwrap(), v(&[-3, 2]));
        assert_eq!(v(&[0, -3, 2]).sign_normalized(), v(&[0, 3, -2]));
    }
}
