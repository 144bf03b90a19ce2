//! Domination of charge families, greedy exhaustion and atom enumeration.
//!
//! A finite family is always dominated by its own aggregate; the interesting
//! artifacts are the equivalent subfamily (an irredundant subset whose
//! aggregate has the same primitive support), the pivot property that
//! domination by an external λ is equivalent to domination by the part of λ
//! that is continuous with respect to the family, and the greedy exhaustion
//! of a set family that drains all reachable mass in finitely many steps.

use num::Zero;
use thiserror::Error;

use crate::algebras::CanonicalSet;
use crate::charges::{abs_continuous, Charge, Support};
use crate::decomposition::{aggregate, lebesgue_decompose, ChargeFamily};
use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DominationError {
    #[error("the family is empty")]
    EmptyFamily,
    #[error("operation requires a positive charge")]
    NotPositive,
}

/// Outcome of `dominate`.
#[derive(Debug, Clone)]
pub struct DominationReport {
    /// The aggregate m of the family.
    pub dominating: Charge,
    /// μ ≪ m per member.
    pub per_member: Vec<bool>,
    /// Irredundant member indices (0-based) whose aggregate has the same
    /// primitive support as m.
    pub equivalent_subfamily: Vec<usize>,
    /// Present when an external λ was supplied.
    pub pivot: Option<PivotReport>,
}

/// Per-member comparison of domination by λ against domination by the part
/// of λ continuous with respect to the family.
#[derive(Debug, Clone)]
pub struct PivotReport {
    pub against_lambda: Vec<bool>,
    pub against_continuous: Vec<bool>,
}

impl PivotReport {
    pub fn consistent(&self) -> bool {
        self.against_lambda == self.against_continuous
    }
}

pub fn dominate(
    family: &ChargeFamily,
    lambda: Option<&Charge>,
) -> Result<DominationReport, DominationError> {
    if family.is_empty() {
        return Err(DominationError::EmptyFamily);
    }
    let m = aggregate(family).expect("family is nonempty");
    let per_member: Vec<bool> = family
        .members()
        .iter()
        .map(|mu| abs_continuous(mu, &m))
        .collect();

    let full = m.support();
    let supports: Vec<Support> = family.members().iter().map(Charge::support).collect();
    let mut kept: Vec<usize> = (0..family.len()).collect();
    for idx in 0..family.len() {
        let Some(pos) = kept.iter().position(|&i| i == idx) else {
            continue;
        };
        let mut rest = Support::default();
        for &i in kept.iter().filter(|&&i| i != idx) {
            rest = rest.union(&supports[i]);
        }
        if rest == full {
            kept.remove(pos);
        }
    }

    let pivot = lambda.map(|lam| {
        let continuous = lebesgue_decompose(lam, family).continuous_part;
        PivotReport {
            against_lambda: family
                .members()
                .iter()
                .map(|mu| abs_continuous(mu, lam))
                .collect(),
            against_continuous: family
                .members()
                .iter()
                .map(|mu| abs_continuous(mu, &continuous))
                .collect(),
        }
    });

    Ok(DominationReport { dominating: m, per_member, equivalent_subfamily: kept, pivot })
}

/// Trace of the greedy exhaustion: the sets chosen in order and the residual
/// mass λ(⋃H ∖ ⋃ chosen) after each step.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExhaustionTrace {
    pub chosen_indices: Vec<usize>,
    pub chosen: Vec<CanonicalSet>,
    /// λ(⋃H) before any set is chosen.
    pub initial_residual: Rational,
    pub residuals: Vec<Rational>,
}

impl ExhaustionTrace {
    pub fn final_residual(&self) -> Rational {
        self.residuals
            .last()
            .unwrap_or(&self.initial_residual)
            .clone()
    }
}

/// Greedy exhaustion: at each step pick the set with the largest λ-mass
/// outside the running union (ties broken by smallest input index), stopping
/// when no set adds mass. For a finite input family the final residual is
/// exactly zero in at most |H| steps.
pub fn exhaust(lambda: &Charge, sets: &[CanonicalSet]) -> Result<ExhaustionTrace, DominationError> {
    if !lambda.is_positive() {
        return Err(DominationError::NotPositive);
    }
    if sets.is_empty() {
        return Err(DominationError::EmptyFamily);
    }
    let total_union = sets
        .iter()
        .fold(CanonicalSet::empty(), |acc, s| acc.union(s));
    let mut running = CanonicalSet::empty();
    let mut trace = ExhaustionTrace {
        chosen_indices: Vec::new(),
        chosen: Vec::new(),
        initial_residual: lambda.evaluate(&total_union),
        residuals: Vec::new(),
    };
    let mut remaining: Vec<usize> = (0..sets.len()).collect();
    while !remaining.is_empty() {
        let mut best: Option<(usize, Rational)> = None;
        for &i in &remaining {
            let gain = lambda.evaluate(&sets[i].difference(&running));
            match &best {
                Some((_, g)) if &gain <= g => {}
                _ => best = Some((i, gain)),
            }
        }
        let (idx, gain) = best.expect("remaining is nonempty");
        if gain.is_zero() {
            break;
        }
        running = running.union(&sets[idx]);
        remaining.retain(|&i| i != idx);
        trace.chosen_indices.push(idx);
        trace.chosen.push(sets[idx].clone());
        trace
            .residuals
            .push(lambda.evaluate(&total_union.difference(&running)));
    }
    Ok(trace)
}

/// Membership in A_H for a finite generator family: λ(A ∖ ⋃H) = 0.
pub fn in_ah(
    lambda: &Charge,
    sets: &[CanonicalSet],
    candidate: &CanonicalSet,
) -> Result<bool, DominationError> {
    if !lambda.is_positive() {
        return Err(DominationError::NotPositive);
    }
    if sets.is_empty() {
        return Err(DominationError::EmptyFamily);
    }
    let union = sets
        .iter()
        .fold(CanonicalSet::empty(), |acc, s| acc.union(s));
    Ok(lambda.evaluate(&candidate.difference(&union)).is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AtomKind {
    PointMass,
    LeftLimit,
}

/// A λ-atom together with a representative algebra set carrying exactly its
/// mass.
#[derive(Debug, Clone)]
pub struct Atom {
    pub kind: AtomKind,
    pub location: Rational,
    pub representative: CanonicalSet,
}

/// Enumerates the atoms of a positive charge. In this class an atom must sit
/// on a point-mass or left-limit key whose neighborhood on the relevant side
/// is free of density support; keys failing that isolation test are
/// splittable and yield no atom. Representatives are shrunk to exclude every
/// other primitive location, which makes them pairwise disjoint.
pub fn enumerate_atoms(lambda: &Charge) -> Result<Vec<Atom>, DominationError> {
    if !lambda.is_positive() {
        return Err(DominationError::NotPositive);
    }
    let support = lambda.support();
    let two = Rational::from_integer(2.into());
    let one = Rational::from_integer(1.into());

    // All endpoints an atom representative must stay clear of.
    let mut boundaries: Vec<Rational> = Vec::new();
    boundaries.extend(support.points.iter().cloned());
    boundaries.extend(support.left_limits.iter().cloned());
    for iv in support.density.intervals() {
        boundaries.push(iv.lo.clone());
        boundaries.push(iv.hi.clone());
    }
    boundaries.push(Rational::zero());
    boundaries.push(one.clone());
    boundaries.sort();
    boundaries.dedup();

    let next_after = |x: &Rational| -> Rational {
        boundaries
            .iter()
            .find(|b| *b > x)
            .cloned()
            .expect("1 bounds every location from above")
    };
    let prev_before = |x: &Rational| -> Rational {
        boundaries
            .iter()
            .rev()
            .find(|b| *b < x)
            .cloned()
            .expect("0 bounds every location from below")
    };

    let mut atoms = Vec::new();
    for x in &support.points {
        if support.density.contains(x) {
            continue;
        }
        let eps = (next_after(x) - x) / &two;
        let rep = CanonicalSet::interval(x.clone(), x + eps).unwrap();
        atoms.push(Atom { kind: AtomKind::PointMass, location: x.clone(), representative: rep });
    }
    for c in &support.left_limits {
        if support.density.covers_left(c) {
            continue;
        }
        let eps = (c - prev_before(c)) / &two;
        let rep = CanonicalSet::interval(c - eps, c.clone()).unwrap();
        atoms.push(Atom { kind: AtomKind::LeftLimit, location: c.clone(), representative: rep });
    }
    atoms.sort_by(|a, b| {
        a.location
            .cmp(&b.location)
            .then_with(|| (a.kind == AtomKind::LeftLimit).cmp(&(b.kind == AtomKind::LeftLimit)))
    });
    Ok(atoms)
}
