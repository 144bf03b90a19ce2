//! Charges: bounded, finitely additive set functions on the interval algebra.
//!
//! A `Charge` is a finite rational linear combination of three primitive
//! kinds, each pairwise singular with the others:
//!
//! * `PointMass(x)` — unit mass at `x ∈ [0, 1)`; countably additive.
//! * `Density(a, b)` — Lebesgue length restricted to `[a, b)`; countably
//!   additive.
//! * `LeftLimit(c)` — unit mass on every left neighborhood of `c ∈ (0, 1]`;
//!   purely finitely additive (its mass escapes every disjoint sequence
//!   approaching `c` from the left).
//!
//! The class is closed under linear combination, total variation, lattice
//! meet of positive charges and multiplication by simple functions, and both
//! absolute continuity and singularity are decidable on it.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Neg, Sub};

use num::{Signed, Zero};
use thiserror::Error;

use crate::algebras::CanonicalSet;
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChargeError {
    #[error("location {0} lies outside the admissible range for this primitive")]
    OutOfRange(Rational),
    #[error("density interval [{0}, {1}) is empty or reversed")]
    BadDensityInterval(Rational, Rational),
    #[error("operation requires positive charges")]
    NotPositive,
    #[error("pieces do not form a partition of omega")]
    NotPartition,
}

fn one() -> Rational {
    Rational::from_integer(1.into())
}

/// Generators of the computable charge class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Primitive {
    PointMass(Rational),
    Density(Rational, Rational),
    LeftLimit(Rational),
}

impl Primitive {
    pub fn point(x: Rational) -> Result<Self, ChargeError> {
        if x < Rational::zero() || x >= one() {
            return Err(ChargeError::OutOfRange(x));
        }
        Ok(Primitive::PointMass(x))
    }

    pub fn density(a: Rational, b: Rational) -> Result<Self, ChargeError> {
        if a < Rational::zero() || b > one() {
            return Err(ChargeError::OutOfRange(if a < Rational::zero() { a } else { b }));
        }
        if a >= b {
            return Err(ChargeError::BadDensityInterval(a, b));
        }
        Ok(Primitive::Density(a, b))
    }

    pub fn left_limit(c: Rational) -> Result<Self, ChargeError> {
        if c <= Rational::zero() || c > one() {
            return Err(ChargeError::OutOfRange(c));
        }
        Ok(Primitive::LeftLimit(c))
    }
}

fn overlap_length(set: &CanonicalSet, a: &Rational, b: &Rational) -> Rational {
    let mut total = Rational::zero();
    for iv in set.intervals() {
        let lo = iv.lo.clone().max(a.clone());
        let hi = iv.hi.clone().min(b.clone());
        if lo < hi {
            total += hi - lo;
        }
    }
    total
}

/// A charge in canonical form: at most one term per point or left-limit
/// location, density terms pairwise disjoint with adjacent equal-coefficient
/// pieces merged, and no zero coefficients. Equal set functions of this class
/// have equal canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Charge {
    terms: BTreeMap<Primitive, Rational>,
}

impl Charge {
    pub fn zero() -> Self {
        Charge::default()
    }

    /// Canonicalizing constructor; accepts arbitrary repetitions and
    /// overlapping density terms and refines them.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Primitive, Rational)>,
    {
        let mut points: BTreeMap<Rational, Rational> = BTreeMap::new();
        let mut lefts: BTreeMap<Rational, Rational> = BTreeMap::new();
        let mut dens: Vec<(Rational, Rational, Rational)> = Vec::new();
        for (p, w) in terms {
            if w.is_zero() {
                continue;
            }
            match p {
                Primitive::PointMass(x) => *points.entry(x).or_insert_with(Rational::zero) += w,
                Primitive::LeftLimit(c) => *lefts.entry(c).or_insert_with(Rational::zero) += w,
                Primitive::Density(a, b) => dens.push((a, b, w)),
            }
        }

        let mut map = BTreeMap::new();
        for (x, w) in points {
            if !w.is_zero() {
                map.insert(Primitive::PointMass(x), w);
            }
        }
        for (c, w) in lefts {
            if !w.is_zero() {
                map.insert(Primitive::LeftLimit(c), w);
            }
        }

        // Refine overlapping density pieces on the grid of all endpoints,
        // then merge adjacent pieces that carry the same coefficient.
        let mut cuts: BTreeSet<Rational> = BTreeSet::new();
        for (a, b, _) in &dens {
            cuts.insert(a.clone());
            cuts.insert(b.clone());
        }
        let cuts: Vec<Rational> = cuts.into_iter().collect();
        let mut pieces: Vec<(Rational, Rational, Rational)> = Vec::new();
        for pair in cuts.windows(2) {
            let (lo, hi) = (&pair[0], &pair[1]);
            let mut w = Rational::zero();
            for (a, b, coeff) in &dens {
                if a <= lo && hi <= b {
                    w += coeff;
                }
            }
            if w.is_zero() {
                continue;
            }
            match pieces.last_mut() {
                Some(last) if &last.1 == lo && last.2 == w => last.1 = hi.clone(),
                _ => pieces.push((lo.clone(), hi.clone(), w)),
            }
        }
        for (a, b, w) in pieces {
            map.insert(Primitive::Density(a, b), w);
        }

        Charge { terms: map }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Primitive, &Rational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All coefficients strictly positive (the zero charge is positive).
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|w| w > &Rational::zero())
    }

    /// No left-limit terms: in this class that is exactly countable additivity.
    pub fn is_countably_additive(&self) -> bool {
        !self
            .terms
            .keys()
            .any(|p| matches!(p, Primitive::LeftLimit(_)))
    }

    pub fn point_coeff(&self, x: &Rational) -> Option<&Rational> {
        self.terms.get(&Primitive::PointMass(x.clone()))
    }

    pub fn left_limit_coeff(&self, c: &Rational) -> Option<&Rational> {
        self.terms.get(&Primitive::LeftLimit(c.clone()))
    }

    pub fn point_locations(&self) -> BTreeSet<Rational> {
        self.terms
            .keys()
            .filter_map(|p| match p {
                Primitive::PointMass(x) => Some(x.clone()),
                _ => None,
            })
            .collect()
    }

    pub fn left_limit_locations(&self) -> BTreeSet<Rational> {
        self.terms
            .keys()
            .filter_map(|p| match p {
                Primitive::LeftLimit(c) => Some(c.clone()),
                _ => None,
            })
            .collect()
    }

    /// Union of the density intervals, as a canonical set.
    pub fn density_support(&self) -> CanonicalSet {
        let pairs: Vec<(Rational, Rational)> = self
            .terms
            .keys()
            .filter_map(|p| match p {
                Primitive::Density(a, b) => Some((a.clone(), b.clone())),
                _ => None,
            })
            .collect();
        CanonicalSet::canonicalize(&pairs).expect("density intervals are validated")
    }

    pub fn support(&self) -> Support {
        Support {
            points: self.point_locations(),
            left_limits: self.left_limit_locations(),
            density: self.density_support(),
        }
    }

    /// μ(A), exact and finitely additive in A.
    pub fn evaluate(&self, set: &CanonicalSet) -> Rational {
        let mut total = Rational::zero();
        for (p, w) in &self.terms {
            match p {
                Primitive::PointMass(x) => {
                    if set.contains(x) {
                        total += w;
                    }
                }
                Primitive::Density(a, b) => total += w * overlap_length(set, a, b),
                Primitive::LeftLimit(c) => {
                    if set.covers_left(c) {
                        total += w;
                    }
                }
            }
        }
        total
    }

    pub fn scale(&self, k: &Rational) -> Charge {
        Charge::from_terms(self.terms.iter().map(|(p, w)| (p.clone(), w * k)))
    }

    /// (|μ|, ‖μ‖): coefficientwise absolute value, and its total mass.
    /// Coefficientwise is exact here because distinct primitives are pairwise
    /// singular, so no cancellation survives refinement.
    pub fn total_variation(&self) -> (Charge, Rational) {
        let tv = Charge {
            terms: self
                .terms
                .iter()
                .map(|(p, w)| (p.clone(), w.abs()))
                .collect(),
        };
        let norm = tv.evaluate(&CanonicalSet::omega());
        (tv, norm)
    }

    pub fn norm(&self) -> Rational {
        self.total_variation().1
    }
}

impl Add for &Charge {
    type Output = Charge;
    fn add(self, rhs: &Charge) -> Charge {
        Charge::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(p, w)| (p.clone(), w.clone())),
        )
    }
}

impl Sub for &Charge {
    type Output = Charge;
    fn sub(self, rhs: &Charge) -> Charge {
        self + &(-rhs)
    }
}

impl Neg for &Charge {
    type Output = Charge;
    fn neg(self) -> Charge {
        Charge {
            terms: self
                .terms
                .iter()
                .map(|(p, w)| (p.clone(), -w.clone()))
                .collect(),
        }
    }
}

/// Σ coeffs[i] · charges[i]; the slices must have equal length.
pub fn linear_combine(coeffs: &[Rational], charges: &[Charge]) -> Charge {
    assert_eq!(coeffs.len(), charges.len(), "coefficient/charge length mismatch");
    Charge::from_terms(coeffs.iter().zip(charges).flat_map(|(k, ch)| {
        ch.terms
            .iter()
            .map(move |(p, w)| (p.clone(), w * k))
            .collect::<Vec<_>>()
    }))
}

/// Primitive support of a charge, split by kind. Absolute continuity and the
/// decomposition both depend on charges only through this profile.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Support {
    pub points: BTreeSet<Rational>,
    pub left_limits: BTreeSet<Rational>,
    pub density: CanonicalSet,
}

impl Support {
    pub fn union(&self, other: &Support) -> Support {
        Support {
            points: self.points.union(&other.points).cloned().collect(),
            left_limits: self.left_limits.union(&other.left_limits).cloned().collect(),
            density: self.density.union(&other.density),
        }
    }

    pub fn covers(&self, other: &Support) -> bool {
        other.points.is_subset(&self.points)
            && other.left_limits.is_subset(&self.left_limits)
            && other.density.is_subset_of(&self.density)
    }
}

/// Decides μ ≪ ν. Both decisions route through total variations, so signs of
/// the coefficients never matter. For this charge class the ε–δ definition
/// reduces to key coverage: every point and left-limit location of μ must be
/// one of ν, and μ's density support must be contained in ν's.
pub fn abs_continuous(mu: &Charge, nu: &Charge) -> bool {
    nu.support().covers(&mu.support())
}

/// Witness that μ ≪ ν fails: a family `A_k` with |ν|(A_k) → 0 while
/// |μ|(A_k) stays bounded away from zero.
#[derive(Debug, Clone)]
pub enum AcWitness {
    /// μ has a point mass at `location` uncovered by ν; `A_k = [x, x + δ/k)`.
    PointCap { location: Rational, scale: Rational },
    /// μ has a left-limit mass at `location` uncovered by ν;
    /// `A_k = [c − δ/k, c)`.
    LeftCap { location: Rational, scale: Rational },
    /// μ has density mass on a fixed set that is |ν|-null; the family is
    /// constant.
    DensityGap { set: CanonicalSet },
}

impl AcWitness {
    pub fn set_at(&self, k: u64) -> CanonicalSet {
        assert!(k >= 1);
        let k = Rational::from_integer(k.into());
        match self {
            AcWitness::PointCap { location, scale } => {
                let hi = location + scale / &k;
                CanonicalSet::interval(location.clone(), hi).expect("cap stays inside omega")
            }
            AcWitness::LeftCap { location, scale } => {
                let lo = location - scale / &k;
                CanonicalSet::interval(lo, location.clone()).expect("cap stays inside omega")
            }
            AcWitness::DensityGap { set } => set.clone(),
        }
    }
}

// Half the least positive distance from `loc` to any entry of `others`,
// further clamped by `limit` (distance to the domain boundary).
fn cap_scale(loc: &Rational, others: &BTreeSet<Rational>, limit: Rational) -> Rational {
    let two = Rational::from_integer(2.into());
    let mut scale = limit;
    for other in others {
        let gap = (loc - other).abs();
        if !gap.is_zero() && gap.clone() / &two < scale {
            scale = gap / &two;
        }
    }
    scale
}

/// `None` iff μ ≪ ν; otherwise a witness family for the failure.
pub fn abs_continuity_witness(mu: &Charge, nu: &Charge) -> Option<AcWitness> {
    let mu_sup = mu.support();
    let nu_sup = nu.support();
    let nu_locs: BTreeSet<Rational> = nu_sup
        .points
        .iter()
        .chain(nu_sup.left_limits.iter())
        .cloned()
        .collect();

    if let Some(x) = mu_sup.points.difference(&nu_sup.points).next() {
        let scale = cap_scale(x, &nu_locs, one() - x);
        return Some(AcWitness::PointCap { location: x.clone(), scale });
    }
    if let Some(c) = mu_sup.left_limits.difference(&nu_sup.left_limits).next() {
        let scale = cap_scale(c, &nu_locs, c.clone());
        return Some(AcWitness::LeftCap { location: c.clone(), scale });
    }
    let gap = mu_sup.density.difference(&nu_sup.density);
    if !gap.is_empty() {
        // Remove small caps around ν's point and left-limit locations so the
        // remaining set is exactly |ν|-null.
        let caps = nu_locs.len();
        let delta = gap.length() / Rational::from_integer((4 * (caps as i64 + 1)).into());
        let mut set = gap;
        for p in &nu_sup.points {
            let hi = (p + &delta).min(one());
            set = set.difference(&CanonicalSet::interval(p.clone(), hi).unwrap());
        }
        for d in &nu_sup.left_limits {
            let lo = (d - &delta).max(Rational::zero());
            set = set.difference(&CanonicalSet::interval(lo, d.clone()).unwrap());
        }
        return Some(AcWitness::DensityGap { set });
    }
    None
}

/// Lattice meet of two positive charges: termwise minimum after refining the
/// density pieces to a common disjoint family.
pub fn meet(a: &Charge, b: &Charge) -> Result<Charge, ChargeError> {
    if !a.is_positive() || !b.is_positive() {
        return Err(ChargeError::NotPositive);
    }
    let mut terms = Vec::new();
    for (p, wa) in a.terms() {
        match p {
            Primitive::PointMass(_) | Primitive::LeftLimit(_) => {
                if let Some(wb) = b.terms.get(p) {
                    terms.push((p.clone(), wa.clone().min(wb.clone())));
                }
            }
            Primitive::Density(la, ha) => {
                for (q, wb) in b.terms() {
                    if let Primitive::Density(lb, hb) = q {
                        let lo = la.clone().max(lb.clone());
                        let hi = ha.clone().min(hb.clone());
                        if lo < hi {
                            terms.push((
                                Primitive::Density(lo, hi),
                                wa.clone().min(wb.clone()),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(Charge::from_terms(terms))
}

/// Decides μ ⊥ ν via the meet of the total variations.
pub fn singular(mu: &Charge, nu: &Charge) -> bool {
    let (mu_tv, _) = mu.total_variation();
    let (nu_tv, _) = nu.total_variation();
    meet(&mu_tv, &nu_tv)
        .expect("total variations are positive")
        .is_zero()
}

/// For singular μ, ν and ε > 0, a set B with |μ|(Bᶜ) + |ν|(B) < ε; `None`
/// when the charges are not singular. B collects μ's density support plus
/// shrinking caps at μ's point and left-limit locations, minus caps that
/// evict ν's point and left-limit mass.
pub fn split_witness(mu: &Charge, nu: &Charge, eps: &Rational) -> Option<CanonicalSet> {
    assert!(eps > &Rational::zero(), "eps must be positive");
    if !singular(mu, nu) {
        return None;
    }
    let mu_sup = mu.support();
    let nu_sup = nu.support();

    let density_weight = |ch: &Charge| -> Rational {
        ch.terms()
            .filter_map(|(p, w)| match p {
                Primitive::Density(_, _) => Some(w.abs()),
                _ => None,
            })
            .sum()
    };
    let weight = density_weight(mu) + density_weight(nu) + one();
    let caps = mu_sup.points.len()
        + mu_sup.left_limits.len()
        + nu_sup.points.len()
        + nu_sup.left_limits.len();
    let mut delta =
        eps / (Rational::from_integer(2.into()) * weight * Rational::from_integer((caps as i64 + 1).into()));

    // Keep all caps pairwise clear of each other and inside the domain.
    let all_locs: Vec<&Rational> = mu_sup
        .points
        .iter()
        .chain(mu_sup.left_limits.iter())
        .chain(nu_sup.points.iter())
        .chain(nu_sup.left_limits.iter())
        .collect();
    let two = Rational::from_integer(2.into());
    for (i, a) in all_locs.iter().enumerate() {
        for b in &all_locs[i + 1..] {
            let gap = (*a - *b).abs();
            if !gap.is_zero() && gap.clone() / &two < delta {
                delta = gap / &two;
            }
        }
    }
    for x in mu_sup.points.iter().chain(nu_sup.points.iter()) {
        delta = delta.min(one() - x);
    }
    for c in mu_sup.left_limits.iter().chain(nu_sup.left_limits.iter()) {
        delta = delta.min(c.clone());
    }

    let mut b = mu_sup.density;
    for x in &mu_sup.points {
        b = b.union(&CanonicalSet::interval(x.clone(), x + &delta).unwrap());
    }
    for c in &mu_sup.left_limits {
        b = b.union(&CanonicalSet::interval(c - &delta, c.clone()).unwrap());
    }
    for p in &nu_sup.points {
        b = b.difference(&CanonicalSet::interval(p.clone(), p + &delta).unwrap());
    }
    for d in &nu_sup.left_limits {
        b = b.difference(&CanonicalSet::interval(d - &delta, d.clone()).unwrap());
    }
    Some(b)
}

/// A simple function: a finite partition of Ω with a rational value on each
/// piece. The representation is not unique; all operations are
/// representation-independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleFunction {
    pieces: Vec<(CanonicalSet, Rational)>,
}

impl SimpleFunction {
    pub fn new(pieces: Vec<(CanonicalSet, Rational)>) -> Result<Self, ChargeError> {
        let mut acc = CanonicalSet::empty();
        for (set, _) in &pieces {
            if acc.intersects(set) {
                return Err(ChargeError::NotPartition);
            }
            acc = acc.union(set);
        }
        if acc != CanonicalSet::omega() {
            return Err(ChargeError::NotPartition);
        }
        Ok(SimpleFunction { pieces })
    }

    pub fn constant(value: Rational) -> Self {
        SimpleFunction { pieces: vec![(CanonicalSet::omega(), value)] }
    }

    /// `inside` on the set, `outside` elsewhere.
    pub fn step(set: &CanonicalSet, inside: Rational, outside: Rational) -> Self {
        SimpleFunction {
            pieces: vec![(set.clone(), inside), (set.complement(), outside)],
        }
    }

    pub fn pieces(&self) -> &[(CanonicalSet, Rational)] {
        &self.pieces
    }

    pub fn value_at(&self, x: &Rational) -> Rational {
        self.pieces
            .iter()
            .find(|(set, _)| set.contains(x))
            .map(|(_, v)| v.clone())
            .expect("partition covers omega")
    }

    /// The left-limit value at c: the value on the unique piece containing a
    /// left neighborhood of c.
    pub fn left_value(&self, c: &Rational) -> Rational {
        self.pieces
            .iter()
            .find(|(set, _)| set.covers_left(c))
            .map(|(_, v)| v.clone())
            .expect("some piece covers a left neighborhood")
    }

    /// f · 1_A as a simple function (zero off A).
    pub fn restrict(&self, set: &CanonicalSet) -> SimpleFunction {
        let mut pieces: Vec<(CanonicalSet, Rational)> = self
            .pieces
            .iter()
            .map(|(s, v)| (s.intersect(set), v.clone()))
            .collect();
        pieces.push((set.complement(), Rational::zero()));
        SimpleFunction { pieces }
    }
}

/// ∫ f dμ for simple f.
pub fn integrate_simple(charge: &Charge, f: &SimpleFunction) -> Rational {
    f.pieces
        .iter()
        .map(|(set, v)| v * charge.evaluate(set))
        .sum()
}

/// The charge μ_f with μ_f(A) = ∫_A f dμ: point masses scale by the value of
/// f at the point, left limits by the left-limit value of f, and density
/// pieces by the value of f piecewise.
pub fn density_transform(charge: &Charge, f: &SimpleFunction) -> Charge {
    let mut terms = Vec::new();
    for (p, w) in charge.terms() {
        match p {
            Primitive::PointMass(x) => {
                terms.push((p.clone(), w * f.value_at(x)));
            }
            Primitive::LeftLimit(c) => {
                terms.push((p.clone(), w * f.left_value(c)));
            }
            Primitive::Density(a, b) => {
                let base = CanonicalSet::interval(a.clone(), b.clone()).unwrap();
                for (set, v) in &f.pieces {
                    for iv in set.intersect(&base).intervals() {
                        terms.push((
                            Primitive::Density(iv.lo.clone(), iv.hi.clone()),
                            w * v,
                        ));
                    }
                }
            }
        }
    }
    Charge::from_terms(terms)
}
