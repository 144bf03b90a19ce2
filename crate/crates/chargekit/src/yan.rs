//! Separation certificates on finite sample spaces.
//!
//! A model carries reference weights λ over n points and a finite list of
//! generators spanning a convex set K (their hull together with 0, or the
//! cone they generate). Writing C = K − Sim₊ for the set of vectors dominated
//! coordinatewise by some element of K, three statements are equivalent:
//! no nonnegative f with λ(f) > 0 scales into C indefinitely; no indicator
//! does; and there is a probability vector P, equivalent to λ with bounded
//! ratio, under which K is bounded above. The module decides the second by
//! exhaustive enumeration, constructs the third by a single exact LP, and
//! samples the first, so the equivalence itself is machine-checkable.
//!
//! Off-support coordinates are quotiented away before every test: vectors
//! equal λ-almost everywhere are the same element of the model.

use num::Zero;
use thiserror::Error;

use crate::ratlp::{solve_lp, Constraint, LinearProgram, LpOutcome, Relation};
use crate::rational::{rat, Rational};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum YanError {
    #[error("invalid model: {0}")]
    BadModel(String),
    #[error("invalid input: {0}")]
    BadInput(String),
    #[error("sample space of size {0} exceeds the exhaustive-enumeration cap of 12")]
    TooLarge(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// K is the convex hull of the generators and 0.
    Hull,
    /// K is the convex cone generated by the generators.
    Cone,
}

/// A finite sample space with reference weights and the generators of K.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YanModel {
    n: usize,
    weights: Vec<Rational>,
    generators: Vec<Vec<Rational>>,
    mode: Mode,
}

impl YanModel {
    pub fn new(
        weights: Vec<Rational>,
        generators: Vec<Vec<Rational>>,
        mode: Mode,
    ) -> Result<Self, YanError> {
        let n = weights.len();
        if n == 0 {
            return Err(YanError::BadModel("empty sample space".into()));
        }
        if weights.iter().any(|w| w < &Rational::zero()) {
            return Err(YanError::BadModel("negative reference weight".into()));
        }
        if weights.iter().all(Rational::is_zero) {
            return Err(YanError::BadModel("no point has positive weight".into()));
        }
        for (j, g) in generators.iter().enumerate() {
            if g.len() != n {
                return Err(YanError::BadModel(format!(
                    "generator {j} has {} entries, expected {n}",
                    g.len()
                )));
            }
        }
        Ok(YanModel { n, weights, generators, mode })
    }

    pub fn space_size(&self) -> usize {
        self.n
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn generators(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    fn support(&self) -> Vec<usize> {
        (0..self.n).filter(|&i| !self.weights[i].is_zero()).collect()
    }

    fn lambda_of(&self, f: &[Rational]) -> Rational {
        f.iter().zip(&self.weights).map(|(a, b)| a * b).sum()
    }
}

/// sup{t ≥ 0 : t·f ∈ C}, finite or not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SupScale {
    Finite(Rational),
    Infinite,
}

impl SupScale {
    pub fn is_finite(&self) -> bool {
        matches!(self, SupScale::Finite(_))
    }
}

/// Largest t with t·f dominated by an element of K on the support of λ,
/// computed by LP over the generator coefficients. `f` must be nonnegative
/// with λ(f) > 0.
pub fn sup_scale(model: &YanModel, f: &[Rational]) -> Result<SupScale, YanError> {
    if f.len() != model.n {
        return Err(YanError::BadInput(format!(
            "vector has {} entries, expected {}",
            f.len(),
            model.n
        )));
    }
    if f.iter().any(|v| v < &Rational::zero()) {
        return Err(YanError::BadInput("f must be nonnegative".into()));
    }
    if model.lambda_of(f).is_zero() {
        return Err(YanError::BadInput("lambda(f) must be positive".into()));
    }
    let g = model.generators.len();
    // variables: t, theta_1 .. theta_g, all nonnegative
    let mut objective = vec![Rational::zero(); 1 + g];
    objective[0] = Rational::from_integer(1.into());
    let mut constraints = Vec::new();
    for &omega in &model.support() {
        let mut coeffs = vec![Rational::zero(); 1 + g];
        coeffs[0] = f[omega].clone();
        for (j, gen) in model.generators.iter().enumerate() {
            coeffs[1 + j] = -gen[omega].clone();
        }
        constraints.push(Constraint { coeffs, relation: Relation::Le, rhs: Rational::zero() });
    }
    if model.mode == Mode::Hull {
        let mut coeffs = vec![Rational::from_integer(1.into()); 1 + g];
        coeffs[0] = Rational::zero();
        constraints.push(Constraint {
            coeffs,
            relation: Relation::Le,
            rhs: Rational::from_integer(1.into()),
        });
    }
    let lp = LinearProgram::with_nonnegative_vars(objective, constraints);
    match solve_lp(&lp).expect("generated program is well-formed") {
        LpOutcome::Optimal { value, .. } => Ok(SupScale::Finite(value)),
        LpOutcome::Unbounded { .. } => Ok(SupScale::Infinite),
        LpOutcome::Infeasible { .. } => unreachable!("t = 0 with zero coefficients is feasible"),
    }
}

/// Outcome of the exhaustive indicator test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionII {
    pub holds: bool,
    /// First subset (by mask order over the support) whose indicator scales
    /// into C indefinitely.
    pub witness: Option<Vec<usize>>,
}

/// Checks the indicator condition for every nonempty subset of supp(λ).
/// Exhaustive, hence capped at 12 points.
pub fn check_condition_ii(model: &YanModel) -> Result<ConditionII, YanError> {
    if model.n > 12 {
        return Err(YanError::TooLarge(model.n));
    }
    let support = model.support();
    for mask in 1u32..(1u32 << support.len()) {
        let subset: Vec<usize> = support
            .iter()
            .enumerate()
            .filter(|(bit, _)| mask & (1 << bit) != 0)
            .map(|(_, &i)| i)
            .collect();
        let mut f = vec![Rational::zero(); model.n];
        for &i in &subset {
            f[i] = Rational::from_integer(1.into());
        }
        if sup_scale(model, &f)? == SupScale::Infinite {
            return Ok(ConditionII { holds: false, witness: Some(subset) });
        }
    }
    Ok(ConditionII { holds: true, witness: None })
}

/// A separating probability with its bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Probability weight per sample point; zero exactly off supp(λ).
    pub probabilities: Vec<Rational>,
    /// sup over K of P(k): 0 in cone mode, max(0, max_j p·k_j) in hull mode.
    pub k_bound: Rational,
    /// max over supp(λ) of P({ω})/λ({ω}); on a finite space this equals the
    /// supremum of P(A)/λ(A) over all A with λ(A) > 0.
    pub ratio_bound: Rational,
    /// min over supp(λ) of P({ω})/λ({ω}), strictly positive.
    pub margin: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CertificateOutcome {
    Found(Certificate),
    /// No certificate exists; the subset's indicator witnesses the failure.
    Witness(Vec<usize>),
}

fn dot_on(p: &[Rational], g: &[Rational]) -> Rational {
    p.iter().zip(g).map(|(a, b)| a * b).sum()
}

/// Builds the probability of the separation certificate by a single LP:
/// maximize the worst ratio p_ω/λ_ω subject to Σp = 1, p vanishing off the
/// support, and — in cone mode — p·k_j ≤ 0 for every generator (the finite
/// K-bound of the hull needs no constraint). A positive optimum yields the
/// certificate; otherwise the exhaustive indicator search supplies a witness.
pub fn find_certificate(model: &YanModel) -> Result<CertificateOutcome, YanError> {
    let support = model.support();
    let s = support.len();
    // variables: t, p_omega for omega in support
    let mut objective = vec![Rational::zero(); 1 + s];
    objective[0] = Rational::from_integer(1.into());
    let mut constraints = Vec::new();
    let mut norm = vec![Rational::zero(); 1 + s];
    for k in 0..s {
        norm[1 + k] = Rational::from_integer(1.into());
    }
    constraints.push(Constraint {
        coeffs: norm,
        relation: Relation::Eq,
        rhs: Rational::from_integer(1.into()),
    });
    if model.mode == Mode::Cone {
        for gen in &model.generators {
            let mut coeffs = vec![Rational::zero(); 1 + s];
            for (k, &omega) in support.iter().enumerate() {
                coeffs[1 + k] = gen[omega].clone();
            }
            constraints.push(Constraint {
                coeffs,
                relation: Relation::Le,
                rhs: Rational::zero(),
            });
        }
    }
    for (k, &omega) in support.iter().enumerate() {
        let mut coeffs = vec![Rational::zero(); 1 + s];
        coeffs[0] = model.weights[omega].clone();
        coeffs[1 + k] = Rational::from_integer((-1).into());
        constraints.push(Constraint { coeffs, relation: Relation::Le, rhs: Rational::zero() });
    }
    let lp = LinearProgram::with_nonnegative_vars(objective, constraints);
    let solved = solve_lp(&lp).expect("generated program is well-formed");
    let optimum = match &solved {
        LpOutcome::Optimal { point, value, .. } if value > &Rational::zero() => Some(point),
        _ => None,
    };
    match optimum {
        Some(point) => {
            let mut probabilities = vec![Rational::zero(); model.n];
            for (k, &omega) in support.iter().enumerate() {
                probabilities[omega] = point[1 + k].clone();
            }
            let k_bound = match model.mode {
                Mode::Cone => Rational::zero(),
                Mode::Hull => model
                    .generators
                    .iter()
                    .map(|g| dot_on(&probabilities, g))
                    .fold(Rational::zero(), Rational::max),
            };
            let ratios: Vec<Rational> = support
                .iter()
                .map(|&omega| &probabilities[omega] / &model.weights[omega])
                .collect();
            let ratio_bound = ratios.iter().cloned().reduce(Rational::max).expect("support");
            let margin = ratios.into_iter().reduce(Rational::min).expect("support");
            Ok(CertificateOutcome::Found(Certificate {
                probabilities,
                k_bound,
                ratio_bound,
                margin,
            }))
        }
        None => {
            let cond = check_condition_ii(model)?;
            let witness = cond
                .witness
                .expect("a failed certificate implies an indicator witness");
            Ok(CertificateOutcome::Witness(witness))
        }
    }
}

/// Re-checks every clause of the certificate against the model.
pub fn verify_certificate(model: &YanModel, cert: &Certificate) -> bool {
    let p = &cert.probabilities;
    if p.len() != model.n {
        return false;
    }
    if p.iter().sum::<Rational>() != Rational::from_integer(1.into()) {
        return false;
    }
    // support equality: p_omega > 0 exactly where lambda_omega > 0
    for (pi, wi) in p.iter().zip(&model.weights) {
        let ok = if wi.is_zero() { pi.is_zero() } else { pi > &Rational::zero() };
        if !ok {
            return false;
        }
    }
    match model.mode {
        Mode::Cone => {
            if !cert.k_bound.is_zero() {
                return false;
            }
            if model
                .generators
                .iter()
                .any(|g| dot_on(p, g) > Rational::zero())
            {
                return false;
            }
        }
        Mode::Hull => {
            let bound = model
                .generators
                .iter()
                .map(|g| dot_on(p, g))
                .fold(Rational::zero(), Rational::max);
            if cert.k_bound != bound {
                return false;
            }
        }
    }
    let mut ratios = model
        .weights
        .iter()
        .zip(p)
        .filter(|(w, _)| !w.is_zero())
        .map(|(w, pi)| pi / w);
    let first = match ratios.next() {
        Some(r) => r,
        None => return false,
    };
    let (mut lo, mut hi) = (first.clone(), first);
    for r in ratios {
        if r < lo {
            lo = r.clone();
        }
        if r > hi {
            hi = r;
        }
    }
    cert.ratio_bound == hi && cert.margin == lo && lo > Rational::zero()
}

/// Cross-check of the three equivalent conditions on one model.
#[derive(Debug, Clone)]
pub struct EquivalenceReport {
    /// Every sampled nonnegative f with λ(f) > 0 had a finite sup-scale.
    pub condition_i_sampled: bool,
    pub condition_ii: bool,
    pub condition_iii: bool,
    pub certificate: Option<Certificate>,
    pub witness: Option<Vec<usize>>,
    /// A sampled f whose sup-scale finiteness disagrees with condition (ii).
    pub failing_sample: Option<Vec<Rational>>,
    pub consistent: bool,
}

// Deterministic 64-bit mixer for the seeded sample vectors.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }
}

/// Decides (ii) by enumeration and (iii) by certificate construction, then
/// samples (i) on indicators, their pairwise mixtures and 100 seeded random
/// nonnegative vectors. Any disagreement between the three is reported with
/// the offending sample.
pub fn check_equivalence(model: &YanModel) -> Result<EquivalenceReport, YanError> {
    if model.n > 12 {
        return Err(YanError::TooLarge(model.n));
    }
    let cond_ii = check_condition_ii(model)?;
    let outcome = find_certificate(model)?;
    let (certificate, witness) = match outcome {
        CertificateOutcome::Found(c) => (Some(c), None),
        CertificateOutcome::Witness(w) => (None, Some(w)),
    };
    let condition_iii = certificate.is_some();
    let cert_ok = certificate
        .as_ref()
        .map_or(true, |c| verify_certificate(model, c));

    let support = model.support();
    let mut samples: Vec<Vec<Rational>> = Vec::new();
    for mask in 1u32..(1u32 << support.len()) {
        let mut f = vec![Rational::zero(); model.n];
        for (bit, &i) in support.iter().enumerate() {
            if mask & (1 << bit) != 0 {
                f[i] = Rational::from_integer(1.into());
            }
        }
        samples.push(f);
    }
    let indicators = samples.clone();
    for pair in indicators.windows(2) {
        let mixed: Vec<Rational> = pair[0]
            .iter()
            .zip(&pair[1])
            .map(|(a, b)| a * rat(1, 3) + b * rat(2, 3))
            .collect();
        samples.push(mixed);
    }
    let mut mixer = SplitMix64(0x59414e);
    for _ in 0..100 {
        let f: Vec<Rational> = (0..model.n)
            .map(|_| {
                let num = (mixer.next() % 4) as i64;
                let den = (mixer.next() % 3) as i64 + 1;
                rat(num, den)
            })
            .collect();
        if !model.lambda_of(&f).is_zero() {
            samples.push(f);
        }
    }

    let mut condition_i_sampled = true;
    let mut failing_sample = None;
    for f in &samples {
        let finite = sup_scale(model, f)?.is_finite();
        if !finite {
            condition_i_sampled = false;
        }
        if finite != cond_ii.holds && failing_sample.is_none() && !finite {
            failing_sample = Some(f.clone());
        }
    }
    if cond_ii.holds != condition_i_sampled && failing_sample.is_none() {
        // (ii) failed yet every sample stayed finite; record the witness
        failing_sample = witness.as_ref().map(|w| {
            let mut f = vec![Rational::zero(); model.n];
            for &i in w {
                f[i] = Rational::from_integer(1.into());
            }
            f
        });
    }

    let consistent =
        cond_ii.holds == condition_iii && cond_ii.holds == condition_i_sampled && cert_ok;
    Ok(EquivalenceReport {
        condition_i_sampled,
        condition_ii: cond_ii.holds,
        condition_iii,
        certificate,
        witness,
        failing_sample,
        consistent,
    })
}
