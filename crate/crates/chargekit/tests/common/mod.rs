//! Shared generators and independent oracles for the integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use chargekit::*;
use num::{Signed, Zero};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

const DENOMS: [i64; 10] = [2, 3, 4, 5, 6, 8, 12, 16, 24, 32];

/// Random rational in [0, 1].
pub fn unit_rational(rng: &mut ChaCha8Rng) -> Rational {
    let d = *DENOMS.choose(rng).unwrap();
    let n = rng.gen_range(0..=d);
    rat(n, d)
}

fn nonzero_coeff(rng: &mut ChaCha8Rng, positive: bool) -> Rational {
    let num = loop {
        let v = rng.gen_range(-3i64..=3);
        if v != 0 {
            break v;
        }
    };
    let den = rng.gen_range(1i64..=4);
    let c = rat(num, den);
    if positive {
        c.abs()
    } else {
        c
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub struct ChargeShape {
    pub max_primitives: usize,
    pub positive: bool,
    pub allow_left_limits: bool,
}

impl ChargeShape {
    pub fn any(max_primitives: usize) -> Self {
        ChargeShape { max_primitives, positive: false, allow_left_limits: true }
    }

    pub fn positive(max_primitives: usize) -> Self {
        ChargeShape { max_primitives, positive: true, allow_left_limits: true }
    }

    pub fn countably_additive(max_primitives: usize) -> Self {
        ChargeShape { max_primitives, positive: false, allow_left_limits: false }
    }
}

pub fn random_charge(rng: &mut ChaCha8Rng, shape: ChargeShape) -> Charge {
    let count = rng.gen_range(1..=shape.max_primitives.max(1));
    let mut terms = Vec::with_capacity(count);
    for _ in 0..count {
        let coeff = nonzero_coeff(rng, shape.positive);
        let kind_max = if shape.allow_left_limits { 3 } else { 2 };
        let prim = match rng.gen_range(0..kind_max) {
            0 => {
                let d = *DENOMS.choose(rng).unwrap();
                Primitive::point(rat(rng.gen_range(0..d), d)).unwrap()
            }
            1 => loop {
                let a = unit_rational(rng);
                let b = unit_rational(rng);
                if a < b {
                    break Primitive::density(a, b).unwrap();
                }
                if b < a {
                    break Primitive::density(b, a).unwrap();
                }
            },
            _ => {
                let d = *DENOMS.choose(rng).unwrap();
                Primitive::left_limit(rat(rng.gen_range(1..=d), d)).unwrap()
            }
        };
        terms.push((prim, coeff));
    }
    Charge::from_terms(terms)
}

/// Random positive charge guaranteed nonzero.
pub fn random_positive_charge(rng: &mut ChaCha8Rng, max_primitives: usize) -> Charge {
    loop {
        let c = random_charge(rng, ChargeShape::positive(max_primitives));
        if !c.is_zero() {
            return c;
        }
    }
}

pub fn random_canonical_set(rng: &mut ChaCha8Rng, max_intervals: usize) -> CanonicalSet {
    let count = rng.gen_range(0..=max_intervals);
    let mut pairs = Vec::with_capacity(count);
    for _ in 0..count {
        let a = unit_rational(rng);
        let b = unit_rational(rng);
        if a <= b {
            pairs.push((a, b));
        } else {
            pairs.push((b, a));
        }
    }
    CanonicalSet::canonicalize(&pairs).unwrap()
}

pub fn random_family(rng: &mut ChaCha8Rng, members: usize, max_primitives: usize) -> ChargeFamily {
    ChargeFamily::new(
        (0..members)
            .map(|_| random_charge(rng, ChargeShape::any(max_primitives)))
            .collect(),
    )
}

/// Strictly positive rational weights summing to exactly 1.
pub fn random_weights(rng: &mut ChaCha8Rng, len: usize) -> Vec<Rational> {
    let raw: Vec<Rational> = (0..len)
        .map(|_| rat(rng.gen_range(1i64..=9), rng.gen_range(1i64..=4)))
        .collect();
    let total: Rational = raw.iter().cloned().sum();
    raw.into_iter().map(|w| w / &total).collect()
}

/// Grid supremum of Σ |μ(Aᵢ)| over the partition refined at every primitive
/// location with caps of shrinking width. Never exceeds ‖μ‖ and reaches it up
/// to the density mass trapped inside the point/left-limit caps.
pub fn tv_grid_supremum(mu: &Charge, shrink: u32) -> Rational {
    let support = mu.support();
    let mut base: BTreeSet<Rational> = BTreeSet::new();
    base.insert(rat_int(0));
    base.insert(rat_int(1));
    // refine at the piece boundaries, not the merged support: adjacent
    // pieces may carry coefficients of opposite sign
    for (p, _) in mu.terms() {
        if let Primitive::Density(a, b) = p {
            base.insert(a.clone());
            base.insert(b.clone());
        }
    }
    for x in &support.points {
        base.insert(x.clone());
    }
    for c in &support.left_limits {
        base.insert(c.clone());
    }
    let sorted: Vec<Rational> = base.iter().cloned().collect();
    let mut eps = rat_int(1);
    for pair in sorted.windows(2) {
        let gap = &pair[1] - &pair[0];
        if gap < eps {
            eps = gap;
        }
    }
    eps /= rat_int(2i64.pow(shrink.min(20)));

    let mut cuts = base;
    for x in &support.points {
        cuts.insert(x + &eps);
    }
    for c in &support.left_limits {
        cuts.insert(c - &eps);
    }
    let cuts: Vec<Rational> = cuts.into_iter().collect();
    let mut total = rat_int(0);
    for pair in cuts.windows(2) {
        let cell = CanonicalSet::interval(pair[0].clone(), pair[1].clone()).unwrap();
        total += mu.evaluate(&cell).abs();
    }
    total
}

/// Density mass that the grid supremum can lose to cancellation inside the
/// caps: 2ε per point-like location times the total density weight.
pub fn tv_grid_slack(mu: &Charge, shrink: u32) -> Rational {
    let support = mu.support();
    let density_weight: Rational = mu
        .terms()
        .filter_map(|(p, w)| match p {
            Primitive::Density(_, _) => Some(w.abs()),
            _ => None,
        })
        .sum();
    let locations = support.points.len() + support.left_limits.len();
    let mut eps = rat_int(1);
    eps /= rat_int(2i64.pow(shrink.min(20)));
    rat_int(2) * rat_int(locations as i64) * density_weight * eps
}

/// Deterministic test sets derived from the primitive locations of both
/// charges: caps on either side of every location, the density supports and
/// their Boolean combinations.
pub fn structured_sets(a: &Charge, b: &Charge) -> Vec<CanonicalSet> {
    let eps = rat(1, 64);
    let mut out = vec![CanonicalSet::empty(), CanonicalSet::omega()];
    let sup_a = a.support();
    let sup_b = b.support();
    let mut locations: BTreeSet<Rational> = BTreeSet::new();
    locations.extend(sup_a.points.iter().cloned());
    locations.extend(sup_a.left_limits.iter().cloned());
    locations.extend(sup_b.points.iter().cloned());
    locations.extend(sup_b.left_limits.iter().cloned());
    for l in &locations {
        let hi = (l + &eps).min(rat_int(1));
        if l < &hi {
            out.push(CanonicalSet::interval(l.clone(), hi).unwrap());
        }
        let lo = (l - &eps).max(rat_int(0));
        if &lo < l {
            out.push(CanonicalSet::interval(lo, l.clone()).unwrap());
        }
    }
    out.push(sup_a.density.clone());
    out.push(sup_b.density.clone());
    out.push(sup_a.density.difference(&sup_b.density));
    out.push(sup_b.density.difference(&sup_a.density));
    out.push(sup_a.density.union(&sup_b.density).complement());
    out
}

/// Brute-force atom check over a refining grid: true iff every union of grid
/// cells inside `candidate` carries either none or all of its λ-mass.
pub fn atom_grid_oracle(lambda: &Charge, candidate: &CanonicalSet) -> bool {
    let mass = lambda.evaluate(candidate);
    if mass.is_zero() {
        return false;
    }
    let support = lambda.support();
    let mut cuts: BTreeSet<Rational> = BTreeSet::new();
    for iv in candidate.intervals() {
        cuts.insert(iv.lo.clone());
        cuts.insert(iv.hi.clone());
        let two = rat_int(2);
        let four = rat_int(4);
        cuts.insert((&iv.lo + &iv.hi) / &two);
        cuts.insert((&iv.lo + &iv.hi + &iv.hi + &iv.hi) / &four);
        cuts.insert((&iv.lo + &iv.lo + &iv.lo + &iv.hi) / &four);
    }
    for loc in support
        .points
        .iter()
        .chain(support.left_limits.iter())
    {
        if candidate.contains_point(loc).unwrap_or(false) {
            cuts.insert(loc.clone());
        }
    }
    for iv in support.density.intervals() {
        cuts.insert(iv.lo.clone());
        cuts.insert(iv.hi.clone());
    }
    let cuts: Vec<Rational> = cuts.into_iter().collect();
    let mut cells = Vec::new();
    for pair in cuts.windows(2) {
        let cell = CanonicalSet::interval(pair[0].clone(), pair[1].clone())
            .unwrap()
            .intersect(candidate);
        if !cell.is_empty() {
            cells.push(lambda.evaluate(&cell));
        }
    }
    assert!(cells.len() <= 16, "oracle grid too fine");
    // finite additivity lets subset masses be summed per cell
    for mask in 0u32..(1u32 << cells.len()) {
        let part: Rational = cells
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .sum();
        if !part.is_zero() && part != mass {
            return false;
        }
    }
    true
}

// ---- exact LP oracle ------------------------------------------------------

pub enum OracleOutcome {
    Feasible { max: Rational },
    Infeasible,
}

fn gauss_solve(mut a: Vec<Vec<Rational>>, mut b: Vec<Rational>) -> Option<Vec<Rational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        let p = a[col][col].clone();
        for v in &mut a[col] {
            *v /= &p;
        }
        b[col] /= &p;
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c2 in 0..n {
                let delta = &f * &a[col][c2];
                a[r][c2] -= delta;
            }
            let delta = &f * &b[col];
            b[r] -= delta;
        }
    }
    Some(b)
}

fn feasible(lp: &LinearProgram, x: &[Rational]) -> bool {
    if x.iter().any(|v| v < &rat_int(0)) {
        return false;
    }
    lp.constraints.iter().all(|c| {
        let lhs: Rational = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
        match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        }
    })
}

/// Enumerates every basic solution (all n-subsets of constraint rows and
/// x_j = 0 hyperplanes), keeps the feasible ones and returns the best
/// objective. Exact, exponential, and completely independent of the simplex
/// path. Only meaningful for all-nonnegative variables, where a feasible
/// pointed polyhedron always has a vertex.
pub fn lp_vertex_oracle(lp: &LinearProgram) -> OracleOutcome {
    let n = lp.num_vars();
    let m = lp.constraints.len();
    let total = n + m;
    let mut best: Option<Rational> = None;
    let mut combo: Vec<usize> = (0..n).collect();
    loop {
        // rows of the candidate active set: indices < m are constraints,
        // the rest are coordinate hyperplanes
        let mut a = Vec::with_capacity(n);
        let mut b = Vec::with_capacity(n);
        for &idx in &combo {
            if idx < m {
                a.push(lp.constraints[idx].coeffs.clone());
                b.push(lp.constraints[idx].rhs.clone());
            } else {
                let mut row = vec![rat_int(0); n];
                row[idx - m] = rat_int(1);
                a.push(row);
                b.push(rat_int(0));
            }
        }
        if let Some(x) = gauss_solve(a, b) {
            if feasible(lp, &x) {
                let value: Rational = lp.objective.iter().zip(&x).map(|(c, v)| c * v).sum();
                best = Some(match best {
                    Some(cur) => cur.max(value),
                    None => value,
                });
            }
        }
        // next combination of size n out of total
        let mut i = n;
        loop {
            if i == 0 {
                return match best {
                    Some(max) => OracleOutcome::Feasible { max },
                    None => OracleOutcome::Infeasible,
                };
            }
            i -= 1;
            if combo[i] != i + total - n {
                combo[i] += 1;
                for j in i + 1..n {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn random_lp(rng: &mut ChaCha8Rng, max_vars: usize, max_rows: usize) -> LinearProgram {
    let n = rng.gen_range(1..=max_vars);
    let m = rng.gen_range(1..=max_rows);
    let entry = |rng: &mut ChaCha8Rng| rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2));
    let objective: Vec<Rational> = (0..n).map(|_| entry(rng)).collect();
    let constraints: Vec<Constraint> = (0..m)
        .map(|_| Constraint {
            coeffs: (0..n).map(|_| entry(rng)).collect(),
            relation: match rng.gen_range(0..4) {
                0 => Relation::Ge,
                1 => Relation::Eq,
                _ => Relation::Le,
            },
            rhs: rat(rng.gen_range(-4i64..=4), 1),
        })
        .collect();
    LinearProgram::with_nonnegative_vars(objective, constraints)
}

pub fn random_yan_model(rng: &mut ChaCha8Rng, max_points: usize, max_gens: usize) -> YanModel {
    let n = rng.gen_range(1..=max_points);
    let weights: Vec<Rational> = loop {
        let w: Vec<Rational> = (0..n)
            .map(|_| {
                if rng.gen_range(0..5) == 0 {
                    rat_int(0)
                } else {
                    rat(rng.gen_range(1i64..=4), rng.gen_range(1i64..=4))
                }
            })
            .collect();
        if w.iter().any(|v| !v.is_zero()) {
            break w;
        }
    };
    let gens = rng.gen_range(0..=max_gens);
    let generators: Vec<Vec<Rational>> = (0..gens)
        .map(|_| {
            (0..n)
                .map(|_| rat(rng.gen_range(-3i64..=3), rng.gen_range(1i64..=2)))
                .collect()
        })
        .collect();
    let mode = if rng.gen_bool(0.5) { Mode::Cone } else { Mode::Hull };
    YanModel::new(weights, generators, mode).unwrap()
}
