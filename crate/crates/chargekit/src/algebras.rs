//! The interval algebra on Ω = [0, 1).
//!
//! A set of the algebra is a finite union of half-open intervals `[a, b)`
//! with rational endpoints, stored in canonical form: sorted, pairwise
//! disjoint, with strict gaps between consecutive intervals. The family is
//! closed under finite unions, intersections and complements, but not under
//! countable unions — singletons and closed intervals are deliberately not
//! representable, which is what makes purely finitely additive charges and
//! the completion machinery non-trivial.

use crate::rational::Rational;
use num::Zero;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("endpoint or point {0} lies outside the admissible range")]
    OutOfRange(Rational),
    #[error("interval [{0}, {1}) is reversed")]
    Reversed(Rational, Rational),
}

/// Half-open interval `[lo, hi)` with `0 <= lo < hi <= 1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    pub lo: Rational,
    pub hi: Rational,
}

impl Interval {
    pub fn length(&self) -> Rational {
        &self.hi - &self.lo
    }
}

/// Canonical element of the interval algebra.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct CanonicalSet {
    intervals: Vec<Interval>,
}

/// The four Boolean operations of the algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BooleanOp {
    Union,
    Intersect,
    Difference,
    SymmetricDifference,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

impl CanonicalSet {
    pub fn empty() -> Self {
        CanonicalSet { intervals: Vec::new() }
    }

    /// The whole space Ω = [0, 1).
    pub fn omega() -> Self {
        CanonicalSet {
            intervals: vec![Interval { lo: Rational::zero(), hi: one() }],
        }
    }

    /// Canonicalizes an arbitrary list of interval pairs: validates ranges,
    /// drops empty pairs, sorts and merges overlapping or adjacent pieces.
    /// Idempotent on already-canonical input.
    pub fn canonicalize(raw: &[(Rational, Rational)]) -> Result<Self, AlgebraError> {
        let zero = Rational::zero();
        let one = one();
        for (a, b) in raw {
            if a < &zero || a > &one {
                return Err(AlgebraError::OutOfRange(a.clone()));
            }
            if b < &zero || b > &one {
                return Err(AlgebraError::OutOfRange(b.clone()));
            }
            if a > b {
                return Err(AlgebraError::Reversed(a.clone(), b.clone()));
            }
        }
        let mut pairs: Vec<(Rational, Rational)> =
            raw.iter().filter(|(a, b)| a < b).cloned().collect();
        pairs.sort();
        let mut intervals: Vec<Interval> = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            match intervals.last_mut() {
                Some(last) if lo <= last.hi => {
                    if hi > last.hi {
                        last.hi = hi;
                    }
                }
                _ => intervals.push(Interval { lo, hi }),
            }
        }
        Ok(CanonicalSet { intervals })
    }

    /// Single interval `[lo, hi)`.
    pub fn interval(lo: Rational, hi: Rational) -> Result<Self, AlgebraError> {
        Self::canonicalize(&[(lo, hi)])
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    /// Total Lebesgue length.
    pub fn length(&self) -> Rational {
        self.intervals.iter().map(Interval::length).sum()
    }

    pub fn boolean(op: BooleanOp, a: &CanonicalSet, b: &CanonicalSet) -> CanonicalSet {
        match op {
            BooleanOp::Union => a.union(b),
            BooleanOp::Intersect => a.intersect(b),
            BooleanOp::Difference => a.difference(b),
            BooleanOp::SymmetricDifference => a.symmetric_difference(b),
        }
    }

    pub fn union(&self, other: &CanonicalSet) -> CanonicalSet {
        let mut pairs: Vec<(Rational, Rational)> = self
            .intervals
            .iter()
            .chain(other.intervals.iter())
            .map(|iv| (iv.lo.clone(), iv.hi.clone()))
            .collect();
        pairs.sort();
        let mut intervals: Vec<Interval> = Vec::with_capacity(pairs.len());
        for (lo, hi) in pairs {
            match intervals.last_mut() {
                Some(last) if lo <= last.hi => {
                    if hi > last.hi {
                        last.hi = hi;
                    }
                }
                _ => intervals.push(Interval { lo, hi }),
            }
        }
        CanonicalSet { intervals }
    }

    pub fn intersect(&self, other: &CanonicalSet) -> CanonicalSet {
        let (xs, ys) = (&self.intervals, &other.intervals);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < xs.len() && j < ys.len() {
            let lo = xs[i].lo.clone().max(ys[j].lo.clone());
            let hi = xs[i].hi.clone().min(ys[j].hi.clone());
            if lo < hi {
                out.push(Interval { lo, hi });
            }
            if xs[i].hi <= ys[j].hi {
                i += 1;
            } else {
                j += 1;
            }
        }
        CanonicalSet { intervals: out }
    }

    pub fn difference(&self, other: &CanonicalSet) -> CanonicalSet {
        let mut out = Vec::new();
        for iv in &self.intervals {
            let mut cursor = iv.lo.clone();
            for cut in &other.intervals {
                if cut.hi <= cursor {
                    continue;
                }
                if cut.lo >= iv.hi {
                    break;
                }
                if cut.lo > cursor {
                    out.push(Interval { lo: cursor.clone(), hi: cut.lo.clone().min(iv.hi.clone()) });
                }
                cursor = cursor.max(cut.hi.clone());
                if cursor >= iv.hi {
                    break;
                }
            }
            if cursor < iv.hi {
                out.push(Interval { lo: cursor, hi: iv.hi.clone() });
            }
        }
        CanonicalSet { intervals: out }
    }

    pub fn symmetric_difference(&self, other: &CanonicalSet) -> CanonicalSet {
        self.difference(other).union(&other.difference(self))
    }

    pub fn complement(&self) -> CanonicalSet {
        CanonicalSet::omega().difference(self)
    }

    pub fn is_subset_of(&self, other: &CanonicalSet) -> bool {
        self.difference(other).is_empty()
    }

    pub fn intersects(&self, other: &CanonicalSet) -> bool {
        !self.intersect(other).is_empty()
    }

    /// Set membership of a point of Ω; errors outside `[0, 1)`.
    pub fn contains_point(&self, x: &Rational) -> Result<bool, AlgebraError> {
        if x < &Rational::zero() || x >= &one() {
            return Err(AlgebraError::OutOfRange(x.clone()));
        }
        Ok(self.contains(x))
    }

    /// True iff some right neighborhood `(c, c+ε)` lies inside the set;
    /// requires `0 <= c < 1`.
    pub fn right_neighborhood(&self, c: &Rational) -> Result<bool, AlgebraError> {
        if c < &Rational::zero() || c >= &one() {
            return Err(AlgebraError::OutOfRange(c.clone()));
        }
        Ok(self.covers_right(c))
    }

    /// True iff some left neighborhood `(c−ε, c)` lies inside the set;
    /// requires `0 < c <= 1`.
    pub fn left_neighborhood(&self, c: &Rational) -> Result<bool, AlgebraError> {
        if c <= &Rational::zero() || c > &one() {
            return Err(AlgebraError::OutOfRange(c.clone()));
        }
        Ok(self.covers_left(c))
    }

    pub(crate) fn contains(&self, x: &Rational) -> bool {
        self.intervals.iter().any(|iv| &iv.lo <= x && x < &iv.hi)
    }

    // For unions of half-open intervals a right neighborhood of c is covered
    // exactly when c itself is a member.
    pub(crate) fn covers_right(&self, c: &Rational) -> bool {
        self.contains(c)
    }

    pub(crate) fn covers_left(&self, c: &Rational) -> bool {
        self.intervals.iter().any(|iv| &iv.lo < c && c <= &iv.hi)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;

    fn set(pairs: &[(i64, i64, i64, i64)]) -> CanonicalSet {
        let raw: Vec<_> = pairs
            .iter()
            .map(|(an, ad, bn, bd)| (rat(*an, *ad), rat(*bn, *bd)))
            .collect();
        CanonicalSet::canonicalize(&raw).unwrap()
    }

    #[test]
    fn adjacent_intervals_merge() {
        let s = set(&[(0, 1, 1, 2), (1, 2, 1, 1)]);
        assert_eq!(s, CanonicalSet::omega());
    }

    #[test]
    fn empty_input_gives_empty_set() {
        assert!(CanonicalSet::canonicalize(&[]).unwrap().is_empty());
        // degenerate pairs are allowed and dropped
        let s = CanonicalSet::canonicalize(&[(rat(1, 4), rat(1, 4))]).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn overlapping_intervals_merge() {
        let s = set(&[(1, 4, 3, 4), (1, 2, 7, 8)]);
        assert_eq!(s, set(&[(1, 4, 7, 8)]));
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(CanonicalSet::canonicalize(&[(rat(-1, 4), rat(1, 2))]).is_err());
        assert!(CanonicalSet::canonicalize(&[(rat(1, 2), rat(9, 8))]).is_err());
        assert!(CanonicalSet::canonicalize(&[(rat(3, 4), rat(1, 4))]).is_err());
    }

    #[test]
    fn intersect_basic() {
        let a = set(&[(0, 1, 1, 2)]);
        let b = set(&[(1, 4, 3, 4)]);
        assert_eq!(a.intersect(&b), set(&[(1, 4, 1, 2)]));
    }

    #[test]
    fn complement_is_difference_from_omega() {
        let a = set(&[(1, 4, 1, 2)]);
        assert_eq!(a.complement(), set(&[(0, 1, 1, 4), (1, 2, 1, 1)]));
    }

    #[test]
    fn symmetric_difference_with_self_is_empty() {
        let a = set(&[(1, 8, 1, 2), (3, 4, 7, 8)]);
        assert!(a.symmetric_difference(&a).is_empty());
    }

    #[test]
    fn point_predicates() {
        let a = set(&[(1, 4, 1, 2)]);
        assert!(a.contains_point(&rat(1, 4)).unwrap());
        assert!(!a.contains_point(&rat(1, 2)).unwrap());
        assert!(a.left_neighborhood(&rat(1, 2)).unwrap());
        assert!(!a.left_neighborhood(&rat(1, 4)).unwrap());
        assert!(a.right_neighborhood(&rat(1, 4)).unwrap());
        assert!(!a.right_neighborhood(&rat(1, 2)).unwrap());
        assert!(a.contains_point(&rat(3, 2)).is_err());
        assert!(a.left_neighborhood(&rat(0, 1)).is_err());
    }

    #[test]
    fn length_adds_up() {
        let a = set(&[(0, 1, 1, 4), (1, 2, 5, 8)]);
        assert_eq!(a.length(), rat(3, 8));
    }
}
