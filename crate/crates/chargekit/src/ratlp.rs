//! Exact rational linear programming.
//!
//! A dense two-phase primal simplex over arbitrary-precision rationals with
//! Bland's smallest-index pivot rule, which guarantees termination without
//! any tolerance machinery. Every outcome carries a certificate that
//! `check_certificate` re-verifies by plain arithmetic, independently of the
//! solver path: equal primal and dual objectives for optimality, a Farkas row
//! for infeasibility, and a feasible point plus improving recession ray for
//! unboundedness.

use num::Zero;
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LpError {
    #[error("malformed program: {0}")]
    Malformed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBound {
    NonNegative,
    Free,
}

#[derive(Debug, Clone)]
pub struct Constraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub rhs: Rational,
}

/// maximize `objective · x` subject to the constraints and variable bounds.
#[derive(Debug, Clone)]
pub struct LinearProgram {
    pub objective: Vec<Rational>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBound>,
}

impl LinearProgram {
    pub fn new(
        objective: Vec<Rational>,
        constraints: Vec<Constraint>,
        bounds: Vec<VarBound>,
    ) -> Self {
        LinearProgram { objective, constraints, bounds }
    }

    /// All variables nonnegative.
    pub fn with_nonnegative_vars(objective: Vec<Rational>, constraints: Vec<Constraint>) -> Self {
        let n = objective.len();
        LinearProgram { objective, constraints, bounds: vec![VarBound::NonNegative; n] }
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    fn validate(&self) -> Result<(), LpError> {
        if self.bounds.len() != self.objective.len() {
            return Err(LpError::Malformed(format!(
                "{} bounds for {} variables",
                self.bounds.len(),
                self.objective.len()
            )));
        }
        for (i, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.objective.len() {
                return Err(LpError::Malformed(format!(
                    "constraint {i} has {} coefficients, expected {}",
                    c.coeffs.len(),
                    self.objective.len()
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    Optimal {
        point: Vec<Rational>,
        value: Rational,
        /// One multiplier per constraint; `value == dual · rhs`.
        dual: Vec<Rational>,
    },
    Infeasible {
        /// Farkas row proving emptiness.
        farkas: Vec<Rational>,
    },
    Unbounded {
        point: Vec<Rational>,
        ray: Vec<Rational>,
    },
}

#[derive(Clone, Copy)]
enum ColKind {
    Plus(usize),
    Minus(usize),
    Slack,
}

struct Standardized {
    cols: Vec<ColKind>,
    matrix: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    negated: Vec<bool>,
    costs: Vec<Rational>,
}

impl Standardized {
    fn build(lp: &LinearProgram) -> Self {
        let mut cols = Vec::new();
        for (j, bound) in lp.bounds.iter().enumerate() {
            cols.push(ColKind::Plus(j));
            if *bound == VarBound::Free {
                cols.push(ColKind::Minus(j));
            }
        }
        let m = lp.constraints.len();
        let mut slack_col: Vec<Option<usize>> = vec![None; m];
        for (i, c) in lp.constraints.iter().enumerate() {
            if c.relation != Relation::Eq {
                slack_col[i] = Some(cols.len());
                cols.push(ColKind::Slack);
            }
        }
        let mut matrix = Vec::with_capacity(m);
        let mut rhs = Vec::with_capacity(m);
        let mut negated = Vec::with_capacity(m);
        for (i, c) in lp.constraints.iter().enumerate() {
            let mut row = vec![Rational::zero(); cols.len()];
            for (k, kind) in cols.iter().enumerate() {
                row[k] = match kind {
                    ColKind::Plus(j) => c.coeffs[*j].clone(),
                    ColKind::Minus(j) => -c.coeffs[*j].clone(),
                    ColKind::Slack => Rational::zero(),
                };
            }
            if let Some(k) = slack_col[i] {
                row[k] = match c.relation {
                    Relation::Le => Rational::from_integer(1.into()),
                    Relation::Ge => Rational::from_integer((-1).into()),
                    Relation::Eq => unreachable!(),
                };
            }
            let flip = c.rhs < Rational::zero();
            if flip {
                for v in &mut row {
                    *v = -v.clone();
                }
                rhs.push(-c.rhs.clone());
            } else {
                rhs.push(c.rhs.clone());
            }
            negated.push(flip);
            matrix.push(row);
        }
        let costs = cols
            .iter()
            .map(|kind| match kind {
                ColKind::Plus(j) => lp.objective[*j].clone(),
                ColKind::Minus(j) => -lp.objective[*j].clone(),
                ColKind::Slack => Rational::zero(),
            })
            .collect();
        Standardized { cols, matrix, rhs, negated, costs }
    }
}

enum End {
    Optimal,
    Unbounded { entering: usize },
}

struct Tableau {
    m: usize,
    nz: usize,
    ncols: usize,
    a: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
    basis: Vec<usize>,
    is_basic: Vec<bool>,
}

impl Tableau {
    fn new(std: &Standardized) -> Self {
        let m = std.rhs.len();
        let nz = std.cols.len();
        let ncols = nz + m;
        let mut a = Vec::with_capacity(m);
        for (i, row) in std.matrix.iter().enumerate() {
            let mut full = row.clone();
            full.extend((0..m).map(|k| {
                if k == i {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                }
            }));
            a.push(full);
        }
        let basis: Vec<usize> = (0..m).map(|i| nz + i).collect();
        let mut is_basic = vec![false; ncols];
        for &b in &basis {
            is_basic[b] = true;
        }
        Tableau { m, nz, ncols, a, rhs: std.rhs.clone(), basis, is_basic }
    }

    fn reduced_cost(&self, costs: &[Rational], j: usize) -> Rational {
        let mut r = costs[j].clone();
        for i in 0..self.m {
            let cb = &costs[self.basis[i]];
            if !cb.is_zero() && !self.a[i][j].is_zero() {
                r -= cb * &self.a[i][j];
            }
        }
        r
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let p = self.a[row][col].clone();
        for v in &mut self.a[row] {
            if !v.is_zero() {
                *v /= &p;
            }
        }
        self.rhs[row] /= &p;
        for i in 0..self.m {
            if i == row || self.a[i][col].is_zero() {
                continue;
            }
            let factor = self.a[i][col].clone();
            for j in 0..self.ncols {
                if !self.a[row][j].is_zero() {
                    let delta = &factor * &self.a[row][j];
                    self.a[i][j] -= delta;
                }
            }
            let delta = &factor * &self.rhs[row];
            self.rhs[i] -= delta;
        }
        self.is_basic[self.basis[row]] = false;
        self.basis[row] = col;
        self.is_basic[col] = true;
    }

    /// Bland's rule: enter the smallest-index improving column, leave on the
    /// smallest-index basic variable among minimum ratios.
    fn optimize(&mut self, costs: &[Rational], allow_artificial: bool) -> End {
        let limit = if allow_artificial { self.ncols } else { self.nz };
        loop {
            let mut entering = None;
            for j in 0..limit {
                if self.is_basic[j] {
                    continue;
                }
                if self.reduced_cost(costs, j) > Rational::zero() {
                    entering = Some(j);
                    break;
                }
            }
            let Some(e) = entering else {
                return End::Optimal;
            };
            let mut leaving: Option<(usize, Rational)> = None;
            for i in 0..self.m {
                if self.a[i][e] <= Rational::zero() {
                    continue;
                }
                let ratio = &self.rhs[i] / &self.a[i][e];
                let better = match &leaving {
                    None => true,
                    Some((li, lr)) => {
                        ratio < *lr || (ratio == *lr && self.basis[i] < self.basis[*li])
                    }
                };
                if better {
                    leaving = Some((i, ratio));
                }
            }
            let Some((row, _)) = leaving else {
                return End::Unbounded { entering: e };
            };
            self.pivot(row, e);
        }
    }

    fn objective_value(&self, costs: &[Rational]) -> Rational {
        (0..self.m)
            .map(|i| &costs[self.basis[i]] * &self.rhs[i])
            .sum()
    }

    /// y = c_B B⁻¹, read off the artificial columns.
    fn multipliers(&self, costs: &[Rational]) -> Vec<Rational> {
        (0..self.m)
            .map(|k| {
                let col = self.nz + k;
                (0..self.m)
                    .map(|i| &costs[self.basis[i]] * &self.a[i][col])
                    .sum()
            })
            .collect()
    }
}

fn point_from(std: &Standardized, tab: &Tableau, n: usize) -> Vec<Rational> {
    let mut z = vec![Rational::zero(); tab.nz];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < tab.nz {
            z[b] = tab.rhs[i].clone();
        }
    }
    let mut x = vec![Rational::zero(); n];
    for (k, kind) in std.cols.iter().enumerate() {
        match kind {
            ColKind::Plus(j) => x[*j] += &z[k],
            ColKind::Minus(j) => x[*j] -= &z[k],
            ColKind::Slack => {}
        }
    }
    x
}

fn ray_from(std: &Standardized, tab: &Tableau, entering: usize, n: usize) -> Vec<Rational> {
    let mut dz = vec![Rational::zero(); tab.nz];
    dz[entering] = Rational::from_integer(1.into());
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < tab.nz {
            dz[b] = -tab.a[i][entering].clone();
        }
    }
    let mut d = vec![Rational::zero(); n];
    for (k, kind) in std.cols.iter().enumerate() {
        match kind {
            ColKind::Plus(j) => d[*j] += &dz[k],
            ColKind::Minus(j) => d[*j] -= &dz[k],
            ColKind::Slack => {}
        }
    }
    d
}

fn unflip(std: &Standardized, y: Vec<Rational>) -> Vec<Rational> {
    y.into_iter()
        .zip(&std.negated)
        .map(|(v, &neg)| if neg { -v } else { v })
        .collect()
}

/// Solves the program exactly. Deterministic: two-phase start and Bland
/// pivoting leave no choice points.
pub fn solve_lp(lp: &LinearProgram) -> Result<LpOutcome, LpError> {
    lp.validate()?;
    let n = lp.num_vars();
    let std = Standardized::build(lp);
    let mut tab = Tableau::new(&std);
    let m = tab.m;

    // Phase 1: maximize minus the sum of artificials.
    let mut costs1 = vec![Rational::zero(); tab.ncols];
    for k in tab.nz..tab.ncols {
        costs1[k] = Rational::from_integer((-1).into());
    }
    match tab.optimize(&costs1, true) {
        End::Optimal => {}
        End::Unbounded { .. } => unreachable!("phase 1 is bounded above by zero"),
    }
    if tab.objective_value(&costs1) < Rational::zero() {
        let farkas = unflip(&std, tab.multipliers(&costs1));
        return Ok(LpOutcome::Infeasible { farkas });
    }

    // Drive artificials out of the basis; rows whose basic artificial cannot
    // leave are identically zero on real columns and stay pinned at zero.
    for row in 0..m {
        if tab.basis[row] >= tab.nz {
            if let Some(col) = (0..tab.nz).find(|&j| !tab.a[row][j].is_zero()) {
                tab.pivot(row, col);
            }
        }
    }

    // Phase 2 over the real columns only.
    let mut costs2 = vec![Rational::zero(); tab.ncols];
    costs2[..tab.nz].clone_from_slice(&std.costs);
    match tab.optimize(&costs2, false) {
        End::Optimal => {
            let point = point_from(&std, &tab, n);
            let value = tab.objective_value(&costs2);
            let dual = unflip(&std, tab.multipliers(&costs2));
            Ok(LpOutcome::Optimal { point, value, dual })
        }
        End::Unbounded { entering } => {
            let point = point_from(&std, &tab, n);
            let ray = ray_from(&std, &tab, entering, n);
            Ok(LpOutcome::Unbounded { point, ray })
        }
    }
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primal_feasible(lp: &LinearProgram, point: &[Rational]) -> bool {
    if point.len() != lp.num_vars() {
        return false;
    }
    for (bound, x) in lp.bounds.iter().zip(point) {
        if *bound == VarBound::NonNegative && x < &Rational::zero() {
            return false;
        }
    }
    lp.constraints.iter().all(|c| {
        let lhs = dot(&c.coeffs, point);
        match c.relation {
            Relation::Le => lhs <= c.rhs,
            Relation::Eq => lhs == c.rhs,
            Relation::Ge => lhs >= c.rhs,
        }
    })
}

fn multiplier_signs_ok(lp: &LinearProgram, y: &[Rational]) -> bool {
    lp.constraints.iter().zip(y).all(|(c, yi)| match c.relation {
        Relation::Le => yi >= &Rational::zero(),
        Relation::Ge => yi <= &Rational::zero(),
        Relation::Eq => true,
    })
}

/// Re-verifies an outcome's certificate with exact arithmetic only.
pub fn check_certificate(lp: &LinearProgram, outcome: &LpOutcome) -> bool {
    if lp.validate().is_err() {
        return false;
    }
    let m = lp.constraints.len();
    match outcome {
        LpOutcome::Optimal { point, value, dual } => {
            if dual.len() != m || !primal_feasible(lp, point) {
                return false;
            }
            if &dot(&lp.objective, point) != value {
                return false;
            }
            if !multiplier_signs_ok(lp, dual) {
                return false;
            }
            // dual feasibility: c_j − y·A_j ≤ 0 on nonnegative variables,
            // = 0 on free ones
            for j in 0..lp.num_vars() {
                let mut slack = lp.objective[j].clone();
                for (c, yi) in lp.constraints.iter().zip(dual) {
                    slack -= yi * &c.coeffs[j];
                }
                let ok = match lp.bounds[j] {
                    VarBound::NonNegative => slack <= Rational::zero(),
                    VarBound::Free => slack.is_zero(),
                };
                if !ok {
                    return false;
                }
            }
            let dual_value: Rational =
                lp.constraints.iter().zip(dual).map(|(c, yi)| yi * &c.rhs).sum();
            &dual_value == value
        }
        LpOutcome::Infeasible { farkas } => {
            if farkas.len() != m || !multiplier_signs_ok(lp, farkas) {
                return false;
            }
            for j in 0..lp.num_vars() {
                let mut t = Rational::zero();
                for (c, yi) in lp.constraints.iter().zip(farkas) {
                    t += yi * &c.coeffs[j];
                }
                let ok = match lp.bounds[j] {
                    VarBound::NonNegative => t >= Rational::zero(),
                    VarBound::Free => t.is_zero(),
                };
                if !ok {
                    return false;
                }
            }
            let value: Rational =
                lp.constraints.iter().zip(farkas).map(|(c, yi)| yi * &c.rhs).sum();
            value < Rational::zero()
        }
        LpOutcome::Unbounded { point, ray } => {
            if ray.len() != lp.num_vars() || !primal_feasible(lp, point) {
                return false;
            }
            for (bound, d) in lp.bounds.iter().zip(ray) {
                if *bound == VarBound::NonNegative && d < &Rational::zero() {
                    return false;
                }
            }
            let recession = lp.constraints.iter().all(|c| {
                let lhs = dot(&c.coeffs, ray);
                match c.relation {
                    Relation::Le => lhs <= Rational::zero(),
                    Relation::Eq => lhs.is_zero(),
                    Relation::Ge => lhs >= Rational::zero(),
                }
            });
            recession && dot(&lp.objective, ray) > Rational::zero()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn r(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rat_int(v)).collect()
    }

    fn le(coeffs: &[i64], rhs: i64) -> Constraint {
        Constraint { coeffs: r(coeffs), relation: Relation::Le, rhs: rat_int(rhs) }
    }

    #[test]
    fn bounded_maximum() {
        let lp = LinearProgram::with_nonnegative_vars(r(&[1]), vec![le(&[1], 1)]);
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Optimal { point, value, .. } => {
                assert_eq!(point, &r(&[1]));
                assert_eq!(value, &rat_int(1));
            }
            other => panic!("expected optimal, got {other:?}"),
        }
        assert!(check_certificate(&lp, &out));
    }

    #[test]
    fn infeasible_with_farkas() {
        let lp = LinearProgram::with_nonnegative_vars(r(&[1]), vec![le(&[1], -1)]);
        let out = solve_lp(&lp).unwrap();
        assert!(matches!(out, LpOutcome::Infeasible { .. }));
        assert!(check_certificate(&lp, &out));
        // negating the right-hand side invalidates the Farkas row
        let mut tampered = lp.clone();
        tampered.constraints[0].rhs = rat_int(1);
        assert!(!check_certificate(&tampered, &out));
    }

    #[test]
    fn unbounded_with_ray() {
        let lp = LinearProgram::with_nonnegative_vars(r(&[1, 1]), vec![le(&[1, -1], 0)]);
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Unbounded { point, ray } => {
                assert!(primal_feasible(&lp, point));
                // the ray is feasible for every scaling: a·d ≤ 0, c·d > 0
                assert!(dot(&lp.constraints[0].coeffs, ray) <= rat_int(0));
                assert!(dot(&lp.objective, ray) > rat_int(0));
            }
            other => panic!("expected unbounded, got {other:?}"),
        }
        assert!(check_certificate(&lp, &out));
    }

    #[test]
    fn tampered_objective_value_fails() {
        let lp = LinearProgram::with_nonnegative_vars(r(&[1]), vec![le(&[1], 1)]);
        let out = solve_lp(&lp).unwrap();
        if let LpOutcome::Optimal { point, dual, .. } = out {
            let forged = LpOutcome::Optimal { point, value: rat_int(2), dual };
            assert!(!check_certificate(&lp, &forged));
        } else {
            panic!("expected optimal");
        }
    }

    #[test]
    fn equality_and_free_variables() {
        // max x + y subject to x + y = 2, x - y >= -4, y free
        let lp = LinearProgram::new(
            r(&[1, 1]),
            vec![
                Constraint { coeffs: r(&[1, 1]), relation: Relation::Eq, rhs: rat_int(2) },
                Constraint { coeffs: r(&[1, -1]), relation: Relation::Ge, rhs: rat_int(-4) },
            ],
            vec![VarBound::NonNegative, VarBound::Free],
        );
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, &rat_int(2)),
            other => panic!("expected optimal, got {other:?}"),
        }
        assert!(check_certificate(&lp, &out));
    }

    #[test]
    fn degenerate_cycling_candidate_terminates() {
        // Beale's classic example; Bland's rule must reach value 1/20.
        let lp = LinearProgram::with_nonnegative_vars(
            vec![rat(3, 4), rat_int(-150), rat(1, 50), rat_int(-6)],
            vec![
                Constraint {
                    coeffs: vec![rat(1, 4), rat_int(-60), rat(-1, 25), rat_int(9)],
                    relation: Relation::Le,
                    rhs: rat_int(0),
                },
                Constraint {
                    coeffs: vec![rat(1, 2), rat_int(-90), rat(-1, 50), rat_int(3)],
                    relation: Relation::Le,
                    rhs: rat_int(0),
                },
                Constraint {
                    coeffs: r(&[0, 0, 1, 0]),
                    relation: Relation::Le,
                    rhs: rat_int(1),
                },
            ],
        );
        let out = solve_lp(&lp).unwrap();
        match &out {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, &rat(1, 20)),
            other => panic!("expected optimal, got {other:?}"),
        }
        assert!(check_certificate(&lp, &out));
    }

    #[test]
    fn no_constraints() {
        let lp = LinearProgram::with_nonnegative_vars(r(&[0, -1]), vec![]);
        match solve_lp(&lp).unwrap() {
            LpOutcome::Optimal { value, .. } => assert_eq!(value, rat_int(0)),
            other => panic!("expected optimal, got {other:?}"),
        }
        let lp2 = LinearProgram::with_nonnegative_vars(r(&[1]), vec![]);
        let out = solve_lp(&lp2).unwrap();
        assert!(matches!(out, LpOutcome::Unbounded { .. }));
        assert!(check_certificate(&lp2, &out));
    }

    #[test]
    fn malformed_dimensions() {
        let lp = LinearProgram::new(r(&[1, 2]), vec![le(&[1], 1)], vec![VarBound::NonNegative; 2]);
        assert!(solve_lp(&lp).is_err());
    }
}
