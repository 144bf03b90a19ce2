//! Aggregates of charge families and the generalized Lebesgue decomposition.
//!
//! A family M of charges induces the aggregate m = Σ αₙ·|μₙ|/(1 ∨ ‖μₙ‖),
//! a single positive charge whose null sets are exactly the common null sets
//! of the family. Any charge λ then splits uniquely into a part absolutely
//! continuous with respect to m and a part singular to every member of M.

use num::Zero;
use thiserror::Error;

use crate::algebras::CanonicalSet;
use crate::charges::{abs_continuous, Charge, Primitive};
use crate::rational::{rat_pow2_inv, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("the charge family is empty")]
    EmptyFamily,
    #[error("invalid weights: {0}")]
    BadWeights(String),
}

/// An ordered finite family of charges with optional convex weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChargeFamily {
    members: Vec<Charge>,
    weights: Option<Vec<Rational>>,
}

impl ChargeFamily {
    pub fn new(members: Vec<Charge>) -> Self {
        ChargeFamily { members, weights: None }
    }

    /// Weights must be strictly positive and sum to exactly 1.
    pub fn with_weights(members: Vec<Charge>, weights: Vec<Rational>) -> Result<Self, FamilyError> {
        if weights.len() != members.len() {
            return Err(FamilyError::BadWeights(format!(
                "{} weights for {} members",
                weights.len(),
                members.len()
            )));
        }
        if weights.iter().any(|w| w <= &Rational::zero()) {
            return Err(FamilyError::BadWeights("weights must be positive".into()));
        }
        let total: Rational = weights.iter().cloned().sum();
        if total != Rational::from_integer(1.into()) {
            return Err(FamilyError::BadWeights(format!("weights sum to {total}, not 1")));
        }
        Ok(ChargeFamily { members, weights: Some(weights) })
    }

    pub fn members(&self) -> &[Charge] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// The weights used by `aggregate`: the explicit ones when given,
    /// otherwise αₙ = 2⁻ⁿ with the last weight doubled so the sum is
    /// exactly 1.
    pub fn effective_weights(&self) -> Vec<Rational> {
        if let Some(w) = &self.weights {
            return w.clone();
        }
        let n = self.members.len();
        (1..=n)
            .map(|i| {
                if i == n {
                    rat_pow2_inv(n.saturating_sub(1) as u32)
                } else {
                    rat_pow2_inv(i as u32)
                }
            })
            .collect()
    }
}

/// The aggregate Σ αₙ·|μₙ|/(1 ∨ ‖μₙ‖) of a nonempty family.
pub fn aggregate(family: &ChargeFamily) -> Result<Charge, FamilyError> {
    if family.is_empty() {
        return Err(FamilyError::EmptyFamily);
    }
    let one = Rational::from_integer(1.into());
    let weights = family.effective_weights();
    let mut total = Charge::zero();
    for (member, alpha) in family.members().iter().zip(&weights) {
        let (tv, norm) = member.total_variation();
        let scale = alpha / norm.max(one.clone());
        total = &total + &tv.scale(&scale);
    }
    Ok(total)
}

/// Membership in L(M): ν ≪ m for the aggregate m. For a finite family the
/// answer does not depend on the choice of strictly positive weights. By
/// convention the empty family admits only the zero charge.
pub fn in_l(nu: &Charge, family: &ChargeFamily) -> bool {
    if family.is_empty() {
        return nu.is_zero();
    }
    let m = aggregate(family).expect("family is nonempty");
    abs_continuous(nu, &m)
}

/// λ = continuous_part + singular_part with continuous_part ≪ aggregate and
/// singular_part ⊥ |μ| for every member μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub continuous_part: Charge,
    pub singular_part: Charge,
    /// The witnessing aggregate m; zero for the empty family.
    pub aggregate: Charge,
}

/// Splits λ against the aggregate support: point and left-limit terms go to
/// the continuous part exactly when their location is carried by the
/// aggregate, and each density piece is cut along the aggregate's density
/// support.
pub fn lebesgue_decompose(target: &Charge, family: &ChargeFamily) -> Decomposition {
    let m = if family.is_empty() {
        Charge::zero()
    } else {
        aggregate(family).expect("family is nonempty")
    };
    let support = m.support();

    let mut continuous = Vec::new();
    let mut singularous = Vec::new();
    for (p, w) in target.terms() {
        match p {
            Primitive::PointMass(x) => {
                if support.points.contains(x) {
                    continuous.push((p.clone(), w.clone()));
                } else {
                    singularous.push((p.clone(), w.clone()));
                }
            }
            Primitive::LeftLimit(c) => {
                if support.left_limits.contains(c) {
                    continuous.push((p.clone(), w.clone()));
                } else {
                    singularous.push((p.clone(), w.clone()));
                }
            }
            Primitive::Density(a, b) => {
                let piece = CanonicalSet::interval(a.clone(), b.clone()).unwrap();
                for iv in piece.intersect(&support.density).intervals() {
                    continuous.push((
                        Primitive::Density(iv.lo.clone(), iv.hi.clone()),
                        w.clone(),
                    ));
                }
                for iv in piece.difference(&support.density).intervals() {
                    singularous.push((
                        Primitive::Density(iv.lo.clone(), iv.hi.clone()),
                        w.clone(),
                    ));
                }
            }
        }
    }
    Decomposition {
        continuous_part: Charge::from_terms(continuous),
        singular_part: Charge::from_terms(singularous),
        aggregate: m,
    }
}
