//! The λ-completion of the interval algebra and its unique extension.
//!
//! An `ExtendedSet` is a finite union of intervals with independently open or
//! closed endpoints plus isolated points — sets generally outside the algebra.
//! A set belongs to the completion A(λ) when its inner and outer λ-measures
//! agree; the common value is the extension bar-λ. The module also constructs
//! the disjoint algebra sequence along which bar-λ is σ-additive, and a
//! verifier that measures the σ-additivity defect of any candidate sequence.

use num::Zero;
use thiserror::Error;

use crate::algebras::CanonicalSet;
use crate::charges::{Charge, Primitive};
use crate::domination::exhaust;
use crate::rational::{rat_pow2_inv, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CompletionError {
    #[error("coordinate {0} lies outside [0, 1] or the set leaves omega")]
    OutOfRange(Rational),
    #[error("interval bounds {0}, {1} are reversed")]
    Reversed(Rational, Rational),
    #[error("operation requires a positive charge")]
    NotPositive,
    #[error("sequence members are not pairwise disjoint")]
    NotDisjoint,
    #[error("a test set is not a member of the completion")]
    NotMember,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// One component of an extended set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Part {
    Interval {
        lo: Rational,
        lo_closed: bool,
        hi: Rational,
        hi_closed: bool,
    },
    Point(Rational),
}

// (lo, lo_closed, hi, hi_closed); points are degenerate closed intervals.
type Bounds = (Rational, bool, Rational, bool);

fn part_bounds(p: &Part) -> Bounds {
    match p {
        Part::Interval { lo, lo_closed, hi, hi_closed } => {
            (lo.clone(), *lo_closed, hi.clone(), *hi_closed)
        }
        Part::Point(x) => (x.clone(), true, x.clone(), true),
    }
}

fn is_empty_bounds(b: &Bounds) -> bool {
    b.0 > b.2 || (b.0 == b.2 && !(b.1 && b.3))
}

/// A subset of Ω outside the algebra in general: disjoint sorted intervals
/// with arbitrary endpoint closure, plus isolated points, in a canonical
/// merged form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExtendedSet {
    parts: Vec<Part>,
}

impl ExtendedSet {
    pub fn empty() -> Self {
        ExtendedSet::default()
    }

    pub fn omega() -> Self {
        Self::from_canonical(&CanonicalSet::omega())
    }

    /// Validates coordinates (inside [0, 1], the point 1 excluded since
    /// Ω = [0, 1)) and canonicalizes: sorts, merges touching parts, absorbs
    /// points into adjacent intervals.
    pub fn new(parts: Vec<Part>) -> Result<Self, CompletionError> {
        let zero = Rational::zero();
        let one = one();
        for p in &parts {
            let bounds = part_bounds(p);
            let (lo, hi) = (bounds.0.clone(), bounds.2.clone());
            if lo < zero || hi > one {
                return Err(CompletionError::OutOfRange(if lo < zero { lo } else { hi }));
            }
            if lo > hi {
                return Err(CompletionError::Reversed(lo, hi));
            }
            // a nonempty part containing the point 1 would leave omega
            if !is_empty_bounds(&bounds) && hi == one && bounds.3 {
                return Err(CompletionError::OutOfRange(one.clone()));
            }
        }
        Ok(Self::assemble(parts.iter().map(part_bounds).collect()))
    }

    fn assemble(mut items: Vec<Bounds>) -> Self {
        items.retain(|b| !is_empty_bounds(b));
        items.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| b.1.cmp(&a.1)));
        let mut merged: Vec<Bounds> = Vec::with_capacity(items.len());
        for item in items {
            match merged.last_mut() {
                Some(cur) if item.0 < cur.2 || (item.0 == cur.2 && (cur.3 || item.1)) => {
                    if item.2 > cur.2 {
                        cur.2 = item.2;
                        cur.3 = item.3;
                    } else if item.2 == cur.2 {
                        cur.3 |= item.3;
                    }
                }
                _ => merged.push(item),
            }
        }
        let parts = merged
            .into_iter()
            .map(|(lo, lo_closed, hi, hi_closed)| {
                if lo == hi {
                    Part::Point(lo)
                } else {
                    Part::Interval { lo, lo_closed, hi, hi_closed }
                }
            })
            .collect();
        ExtendedSet { parts }
    }

    pub fn from_canonical(set: &CanonicalSet) -> Self {
        ExtendedSet {
            parts: set
                .intervals()
                .iter()
                .map(|iv| Part::Interval {
                    lo: iv.lo.clone(),
                    lo_closed: true,
                    hi: iv.hi.clone(),
                    hi_closed: false,
                })
                .collect(),
        }
    }

    pub fn parts(&self) -> &[Part] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn union(&self, other: &ExtendedSet) -> ExtendedSet {
        Self::assemble(
            self.parts
                .iter()
                .chain(other.parts.iter())
                .map(part_bounds)
                .collect(),
        )
    }

    pub fn intersect(&self, other: &ExtendedSet) -> ExtendedSet {
        let mut items = Vec::new();
        for p in &self.parts {
            let (alo, alc, ahi, ahc) = part_bounds(p);
            for q in &other.parts {
                let (blo, blc, bhi, bhc) = part_bounds(q);
                let (lo, lc) = match alo.cmp(&blo) {
                    std::cmp::Ordering::Less => (blo.clone(), blc),
                    std::cmp::Ordering::Greater => (alo.clone(), alc),
                    std::cmp::Ordering::Equal => (alo.clone(), alc && blc),
                };
                let (hi, hc) = match ahi.cmp(&bhi) {
                    std::cmp::Ordering::Less => (ahi.clone(), ahc),
                    std::cmp::Ordering::Greater => (bhi.clone(), bhc),
                    std::cmp::Ordering::Equal => (ahi.clone(), ahc && bhc),
                };
                let bound = (lo, lc, hi, hc);
                if !is_empty_bounds(&bound) {
                    items.push(bound);
                }
            }
        }
        Self::assemble(items)
    }

    pub fn intersect_canonical(&self, set: &CanonicalSet) -> ExtendedSet {
        self.intersect(&Self::from_canonical(set))
    }

    /// Complement within Ω = [0, 1).
    pub fn complement(&self) -> ExtendedSet {
        let one = one();
        let mut items: Vec<Bounds> = Vec::new();
        let mut pos = Rational::zero();
        let mut pos_included = true;
        for p in &self.parts {
            let (lo, lo_closed, hi, hi_closed) = part_bounds(p);
            if pos < lo || (pos == lo && pos_included && !lo_closed) {
                items.push((pos, pos_included, lo, !lo_closed));
            }
            pos = hi;
            pos_included = !hi_closed;
        }
        if pos < one {
            items.push((pos, pos_included, one, false));
        }
        Self::assemble(items)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        self.parts.iter().any(|p| {
            let (lo, lc, hi, hc) = part_bounds(p);
            (&lo < x || (&lo == x && lc)) && (x < &hi || (x == &hi && hc))
        })
    }

    /// True iff [x, x+ε) ⊆ B for some ε > 0.
    pub fn covers_right_neighborhood(&self, x: &Rational) -> bool {
        self.parts.iter().any(|p| match p {
            Part::Interval { lo, lo_closed, hi, .. } => {
                (lo < x || (lo == x && *lo_closed)) && x < hi
            }
            Part::Point(_) => false,
        })
    }

    /// True iff B meets (x, x+ε) for every ε > 0.
    pub fn accumulates_from_right(&self, x: &Rational) -> bool {
        self.parts.iter().any(|p| match p {
            Part::Interval { lo, hi, .. } => lo <= x && x < hi,
            Part::Point(_) => false,
        })
    }

    /// True iff (c−ε, c) ⊆ B for some ε > 0; for these finite unions this is
    /// also exactly accumulation at c from the left.
    pub fn covers_left_neighborhood(&self, c: &Rational) -> bool {
        self.parts.iter().any(|p| match p {
            Part::Interval { lo, hi, .. } => lo < c && c <= hi,
            Part::Point(_) => false,
        })
    }

    /// Lebesgue length of the intersection with [a, b).
    pub fn interval_length_within(&self, a: &Rational, b: &Rational) -> Rational {
        let mut total = Rational::zero();
        for p in &self.parts {
            if let Part::Interval { lo, hi, .. } = p {
                let lo = lo.clone().max(a.clone());
                let hi = hi.clone().min(b.clone());
                if lo < hi {
                    total += hi - lo;
                }
            }
        }
        total
    }
}

/// Inner and outer measure of an extended set, with the extension value when
/// they agree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionStatus {
    pub inner: Rational,
    pub outer: Rational,
    pub member: bool,
    pub extension: Option<Rational>,
}

/// Computes sup{λ(A) : A ⊆ B} and inf{λ(A') : A' ⊇ B} in closed form per
/// primitive: density contributes the exact overlap length to both; a point
/// mass reaches the inner value only when B contains a right neighborhood of
/// the point, and the outer value as soon as B contains or right-accumulates
/// at it; a left-limit mass needs a covered left neighborhood either way.
pub fn completion_status(
    lambda: &Charge,
    set: &ExtendedSet,
) -> Result<CompletionStatus, CompletionError> {
    if !lambda.is_positive() {
        return Err(CompletionError::NotPositive);
    }
    let mut inner = Rational::zero();
    let mut outer = Rational::zero();
    for (p, w) in lambda.terms() {
        match p {
            Primitive::Density(a, b) => {
                let v = w * set.interval_length_within(a, b);
                inner += &v;
                outer += v;
            }
            Primitive::PointMass(x) => {
                if set.covers_right_neighborhood(x) {
                    inner += w;
                }
                if set.contains(x) || set.accumulates_from_right(x) {
                    outer += w;
                }
            }
            Primitive::LeftLimit(c) => {
                if set.covers_left_neighborhood(c) {
                    inner += w;
                    outer += w;
                }
            }
        }
    }
    let member = inner == outer;
    let extension = member.then(|| inner.clone());
    Ok(CompletionStatus { inner, outer, member, extension })
}

/// Tuning of the completion-sequence generator.
#[derive(Debug, Clone)]
pub struct CompletionParams {
    /// Width of the caps placed at point and left-limit locations.
    pub cap_epsilon: Rational,
    /// Cell width of the grid covering the density support.
    pub grid_width: Rational,
}

impl Default for CompletionParams {
    fn default() -> Self {
        CompletionParams { cap_epsilon: rat_pow2_inv(10), grid_width: rat_pow2_inv(8) }
    }
}

/// Builds a finite disjoint algebra sequence capturing all of λ's mass:
/// caps at every point and left-limit location plus a grid cover of the
/// density support, drained by greedy exhaustion and then disjointified in
/// the chosen order. The union is an algebra set, hence trivially a member
/// of the completion, and Σ λ(Aₙ) = λ(Ω).
pub fn completion_sequence(
    lambda: &Charge,
    params: &CompletionParams,
) -> Result<Vec<CanonicalSet>, CompletionError> {
    if !lambda.is_positive() {
        return Err(CompletionError::NotPositive);
    }
    let support = lambda.support();
    let one = one();
    let mut generators: Vec<CanonicalSet> = Vec::new();
    for x in &support.points {
        let hi = (x + &params.cap_epsilon).min(one.clone());
        generators.push(CanonicalSet::interval(x.clone(), hi).unwrap());
    }
    for c in &support.left_limits {
        let lo = (c - &params.cap_epsilon).max(Rational::zero());
        generators.push(CanonicalSet::interval(lo, c.clone()).unwrap());
    }
    let mut k = Rational::zero();
    while k < one {
        let hi = (k.clone() + &params.grid_width).min(one.clone());
        let cell = CanonicalSet::interval(k.clone(), hi.clone()).unwrap();
        if cell.intersects(&support.density) {
            generators.push(cell);
        }
        k = hi;
    }
    if generators.is_empty() {
        return Ok(Vec::new());
    }
    let trace = exhaust(lambda, &generators).map_err(|_| CompletionError::NotPositive)?;
    let mut sequence = Vec::new();
    let mut acc = CanonicalSet::empty();
    for chosen in &trace.chosen {
        let piece = chosen.difference(&acc);
        if !piece.is_empty() {
            sequence.push(piece);
        }
        acc = acc.union(chosen);
    }
    Ok(sequence)
}

/// An infinite tail of pieces [t − 1/n, t − 1/(n+1)) for n ≥ start_index,
/// clipped at 0. The pieces tile [t − 1/start_index, t) ∩ Ω while no single
/// piece ever covers a left neighborhood of t — the classic family along
/// which a left-limit charge loses its mass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ShrinkingTail {
    pub target: Rational,
    pub start_index: u64,
}

impl ShrinkingTail {
    /// The region ⋃ₙ pieces = [max(0, t − 1/start), t).
    fn region(&self) -> CanonicalSet {
        let start = Rational::from_integer(self.start_index.into());
        let lo = (&self.target - Rational::from_integer(1.into()) / start).max(Rational::zero());
        if lo >= self.target {
            CanonicalSet::empty()
        } else {
            CanonicalSet::interval(lo, self.target.clone()).unwrap()
        }
    }
}

/// A pairwise disjoint sequence of algebra sets: a finite head, optionally
/// followed by a symbolic shrinking tail whose infinite sum is evaluated in
/// closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointSequence {
    pub head: Vec<CanonicalSet>,
    pub tail: Option<ShrinkingTail>,
}

impl DisjointSequence {
    pub fn finite(head: Vec<CanonicalSet>) -> Self {
        DisjointSequence { head, tail: None }
    }

    pub fn with_tail(head: Vec<CanonicalSet>, tail: ShrinkingTail) -> Self {
        DisjointSequence { head, tail: Some(tail) }
    }
}

/// Per-test outcome of the σ-additivity verifier.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SequenceDefect {
    pub test: ExtendedSet,
    /// bar-λ(B).
    pub total: Rational,
    /// Σₙ bar-λ(B ∩ Aₙ).
    pub summed: Rational,
    /// total − summed; zero exactly when σ-additivity holds at B.
    pub defect: Rational,
}

/// Reports bar-λ(B) − Σₙ bar-λ(B ∩ Aₙ) for each test set B, a nonnegative
/// rational for positive λ. Every test must be a member of the completion
/// and the sequence pairwise disjoint.
pub fn verify_sigma_additivity(
    lambda: &Charge,
    sequence: &DisjointSequence,
    tests: &[ExtendedSet],
) -> Result<Vec<SequenceDefect>, CompletionError> {
    if !lambda.is_positive() {
        return Err(CompletionError::NotPositive);
    }
    let mut acc = CanonicalSet::empty();
    for piece in &sequence.head {
        if acc.intersects(piece) {
            return Err(CompletionError::NotDisjoint);
        }
        acc = acc.union(piece);
    }
    let region = sequence.tail.as_ref().map(|t| {
        if t.target <= Rational::zero() || t.target > one() || t.start_index == 0 {
            Err(CompletionError::OutOfRange(t.target.clone()))
        } else {
            Ok(t.region())
        }
    });
    let region = match region {
        Some(r) => {
            let r = r?;
            if acc.intersects(&r) {
                return Err(CompletionError::NotDisjoint);
            }
            Some(r)
        }
        None => None,
    };

    let mut out = Vec::with_capacity(tests.len());
    for test in tests {
        let status = completion_status(lambda, test)?;
        if !status.member {
            return Err(CompletionError::NotMember);
        }
        let total = status.extension.expect("member has an extension");

        let mut summed = Rational::zero();
        for piece in &sequence.head {
            let part = test.intersect_canonical(piece);
            let part_status = completion_status(lambda, &part)?;
            debug_assert!(part_status.member, "algebra cut of a member is a member");
            summed += part_status.inner;
        }
        if let (Some(region), Some(tail)) = (&region, &sequence.tail) {
            // Closed form of the infinite tail sum: bar-λ on B ∩ region,
            // minus any left-limit mass at the tail target itself — that mass
            // is never captured by a single piece.
            let cut = test.intersect_canonical(region);
            let cut_status = completion_status(lambda, &cut)?;
            debug_assert!(cut_status.member);
            summed += cut_status.inner;
            if let Some(w) = lambda.left_limit_coeff(&tail.target) {
                if cut.covers_left_neighborhood(&tail.target) {
                    summed -= w;
                }
            }
        }
        out.push(SequenceDefect {
            test: test.clone(),
            defect: &total - &summed,
            total,
            summed,
        });
    }
    Ok(out)
}

/// Deterministic member probe sets derived from λ's primitives: Ω, decorated
/// caps and closures around every primitive location, and their complements,
/// filtered down to completion members.
pub fn member_probe_sets(lambda: &Charge) -> Vec<ExtendedSet> {
    let support = lambda.support();
    let eps = rat_pow2_inv(6);
    let mut candidates = vec![ExtendedSet::omega(), ExtendedSet::empty()];
    let interval = |lo: Rational, lc: bool, hi: Rational, hc: bool| {
        ExtendedSet::new(vec![Part::Interval { lo, lo_closed: lc, hi, hi_closed: hc }]).ok()
    };
    for x in &support.points {
        let hi = (x + &eps).min(one());
        candidates.extend(interval(x.clone(), true, hi.clone(), false));
        candidates.extend(interval(x.clone(), false, hi, false));
        if x > &Rational::zero() {
            candidates.extend(interval((x - &eps).max(Rational::zero()), false, x.clone(), true));
        }
        candidates.extend(ExtendedSet::new(vec![Part::Point(x.clone())]).ok());
    }
    for c in &support.left_limits {
        let lo = (c - &eps).max(Rational::zero());
        candidates.extend(interval(lo.clone(), true, c.clone(), false));
        candidates.extend(interval(lo, false, c.clone(), false));
    }
    for iv in support.density.intervals() {
        candidates.extend(interval(iv.lo.clone(), true, iv.hi.clone(), iv.hi < one()));
        candidates.extend(interval(iv.lo.clone(), false, iv.hi.clone(), false));
        candidates.extend(ExtendedSet::new(vec![Part::Point(iv.lo.clone())]).ok());
    }
    let complements: Vec<ExtendedSet> = candidates.iter().map(ExtendedSet::complement).collect();
    candidates.extend(complements);
    candidates
        .into_iter()
        .filter(|set| {
            completion_status(lambda, set)
                .map(|s| s.member)
                .unwrap_or(false)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn point(n: i64, d: i64) -> Primitive {
        Primitive::point(rat(n, d)).unwrap()
    }

    fn density(an: i64, ad: i64, bn: i64, bd: i64) -> Primitive {
        Primitive::density(rat(an, ad), rat(bn, bd)).unwrap()
    }

    fn leftlim(n: i64, d: i64) -> Primitive {
        Primitive::left_limit(rat(n, d)).unwrap()
    }

    fn closed(an: i64, ad: i64, bn: i64, bd: i64) -> ExtendedSet {
        ExtendedSet::new(vec![Part::Interval {
            lo: rat(an, ad),
            lo_closed: true,
            hi: rat(bn, bd),
            hi_closed: true,
        }])
        .unwrap()
    }

    fn singleton(n: i64, d: i64) -> ExtendedSet {
        ExtendedSet::new(vec![Part::Point(rat(n, d))]).unwrap()
    }

    #[test]
    fn canonical_merge_absorbs_points() {
        let set = ExtendedSet::new(vec![
            Part::Interval { lo: rat(0, 1), lo_closed: true, hi: rat(1, 2), hi_closed: false },
            Part::Point(rat(1, 2)),
            Part::Interval { lo: rat(1, 2), lo_closed: false, hi: rat(3, 4), hi_closed: false },
        ])
        .unwrap();
        assert_eq!(
            set.parts(),
            &[Part::Interval {
                lo: rat(0, 1),
                lo_closed: true,
                hi: rat(3, 4),
                hi_closed: false
            }]
        );
    }

    #[test]
    fn omega_keeps_the_endpoint_out() {
        assert!(ExtendedSet::new(vec![Part::Point(rat(1, 1))]).is_err());
        assert!(ExtendedSet::new(vec![Part::Interval {
            lo: rat(1, 2),
            lo_closed: true,
            hi: rat(1, 1),
            hi_closed: true,
        }])
        .is_err());
        assert!(ExtendedSet::new(vec![Part::Interval {
            lo: rat(1, 2),
            lo_closed: true,
            hi: rat(1, 1),
            hi_closed: false,
        }])
        .is_ok());
    }

    #[test]
    fn complement_flips_closures() {
        let set = closed(1, 4, 1, 2);
        let comp = set.complement();
        assert_eq!(
            comp.parts(),
            &[
                Part::Interval { lo: rat(0, 1), lo_closed: true, hi: rat(1, 4), hi_closed: false },
                Part::Interval { lo: rat(1, 2), lo_closed: false, hi: rat(1, 1), hi_closed: false },
            ]
        );
        assert_eq!(comp.complement(), set);

        // the complement of omega minus a point is the point
        let hole = ExtendedSet::new(vec![
            Part::Interval { lo: rat(0, 1), lo_closed: true, hi: rat(1, 2), hi_closed: false },
            Part::Interval { lo: rat(1, 2), lo_closed: false, hi: rat(1, 1), hi_closed: false },
        ])
        .unwrap();
        assert_eq!(hole.complement(), singleton(1, 2));
    }

    #[test]
    fn density_ignores_null_singleton() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1))]);
        let status = completion_status(&lam, &singleton(1, 2)).unwrap();
        assert_eq!(status.inner, rat_int(0));
        assert_eq!(status.outer, rat_int(0));
        assert!(status.member);
        assert_eq!(status.extension, Some(rat_int(0)));
    }

    #[test]
    fn point_mass_rejects_its_singleton() {
        let lam = Charge::from_terms([(point(1, 2), rat_int(1))]);
        let status = completion_status(&lam, &singleton(1, 2)).unwrap();
        assert_eq!(status.inner, rat_int(0));
        assert_eq!(status.outer, rat_int(1));
        assert!(!status.member);
        assert_eq!(status.extension, None);
    }

    #[test]
    fn closed_interval_is_density_member() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1))]);
        let status = completion_status(&lam, &closed(1, 4, 1, 2)).unwrap();
        assert_eq!(status.inner, rat(1, 4));
        assert_eq!(status.outer, rat(1, 4));
        assert!(status.member);
    }

    #[test]
    fn completion_requires_positive_charge() {
        let lam = Charge::from_terms([(point(1, 2), rat_int(-1))]);
        assert_eq!(
            completion_status(&lam, &ExtendedSet::omega()),
            Err(CompletionError::NotPositive)
        );
    }

    #[test]
    fn complement_duality() {
        let lam = Charge::from_terms([
            (density(0, 1, 1, 1), rat_int(1)),
            (leftlim(1, 1), rat_int(1)),
            (point(1, 4), rat(1, 2)),
        ]);
        let total = lam.evaluate(&CanonicalSet::omega());
        for set in member_probe_sets(&lam) {
            let comp = set.complement();
            let a = completion_status(&lam, &set).unwrap();
            let b = completion_status(&lam, &comp).unwrap();
            assert!(a.member && b.member);
            assert_eq!(a.extension.unwrap() + b.extension.unwrap(), total);
        }
    }

    #[test]
    fn sequence_captures_all_mass() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1)), (leftlim(1, 1), rat_int(1))]);
        let seq = completion_sequence(&lam, &CompletionParams::default()).unwrap();
        let total: Rational = seq.iter().map(|s| lam.evaluate(s)).sum();
        assert_eq!(total, rat_int(2));
        // the first chosen piece captures the left-limit mass
        assert_eq!(lam.evaluate(&seq[0]), rat_int(1) + seq[0].length());
        assert!(seq[0].covers_left(&rat(1, 1)));
        // disjointness
        let mut acc = CanonicalSet::empty();
        for s in &seq {
            assert!(!acc.intersects(s));
            acc = acc.union(s);
        }
    }

    #[test]
    fn sequence_for_single_density_is_trivial() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1))]);
        let seq = completion_sequence(&lam, &CompletionParams::default()).unwrap();
        let union = seq.iter().fold(CanonicalSet::empty(), |a, s| a.union(&s));
        assert_eq!(union, CanonicalSet::omega());
        let total: Rational = seq.iter().map(|s| lam.evaluate(s)).sum();
        assert_eq!(total, rat_int(1));
    }

    #[test]
    fn sequence_for_point_mass() {
        let lam = Charge::from_terms([(point(1, 2), rat_int(1))]);
        let seq = completion_sequence(&lam, &CompletionParams::default()).unwrap();
        assert_eq!(seq.len(), 1);
        assert_eq!(lam.evaluate(&seq[0]), rat_int(1));
    }

    #[test]
    fn failing_tail_sequence_has_defect_one() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1)), (leftlim(1, 1), rat_int(1))]);
        let seq = DisjointSequence::with_tail(
            Vec::new(),
            ShrinkingTail { target: rat_int(1), start_index: 1 },
        );
        let defects = verify_sigma_additivity(&lam, &seq, &[ExtendedSet::omega()]).unwrap();
        assert_eq!(defects[0].total, rat_int(2));
        assert_eq!(defects[0].summed, rat_int(1));
        assert_eq!(defects[0].defect, rat_int(1));
    }

    #[test]
    fn constructed_sequence_has_zero_defect() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1)), (leftlim(1, 1), rat_int(1))]);
        let seq = DisjointSequence::finite(
            completion_sequence(&lam, &CompletionParams::default()).unwrap(),
        );
        let tests = member_probe_sets(&lam);
        assert!(!tests.is_empty());
        let defects = verify_sigma_additivity(&lam, &seq, &tests).unwrap();
        for d in &defects {
            assert_eq!(d.defect, rat_int(0));
        }
    }

    #[test]
    fn countably_additive_charge_never_defects() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1))]);
        let halves = DisjointSequence::finite(vec![
            CanonicalSet::interval(rat(0, 1), rat(1, 2)).unwrap(),
            CanonicalSet::interval(rat(1, 2), rat(1, 1)).unwrap(),
        ]);
        let defects =
            verify_sigma_additivity(&lam, &halves, &[closed(0, 1, 1, 2)]).unwrap();
        assert_eq!(defects[0].defect, rat_int(0));
    }

    #[test]
    fn verifier_rejects_overlap_and_nonmembers() {
        let lam = Charge::from_terms([(density(0, 1, 1, 1), rat_int(1)), (point(1, 2), rat_int(1))]);
        let overlapping = DisjointSequence::finite(vec![
            CanonicalSet::interval(rat(0, 1), rat(3, 4)).unwrap(),
            CanonicalSet::interval(rat(1, 2), rat(1, 1)).unwrap(),
        ]);
        assert_eq!(
            verify_sigma_additivity(&lam, &overlapping, &[]),
            Err(CompletionError::NotDisjoint)
        );
        let fine = DisjointSequence::finite(vec![CanonicalSet::omega()]);
        assert_eq!(
            verify_sigma_additivity(&lam, &fine, &[singleton(1, 2)]),
            Err(CompletionError::NotMember)
        );
    }
}
