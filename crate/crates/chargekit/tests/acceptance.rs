//! Acceptance suite: seeded, exact, zero-tolerance checks for every
//! mathematical guarantee the crate makes. One test per criterion; each
//! prints a single PASS line when it completes.

mod common;

use chargekit::*;
use common::*;
use num::Zero;
use rand::prelude::*;

fn pass(line: &str) {
    println!("acceptance {line}: PASS");
}

#[test]
fn criterion_1_lebesgue_decomposition() {
    let mut rng = rng(0xC0FFEE01);
    for iter in 0..1000u32 {
        let shape = match iter % 3 {
            0 => ChargeShape::positive(8),
            1 => ChargeShape::countably_additive(8),
            _ => ChargeShape::any(8),
        };
        let lambda = random_charge(&mut rng, shape);
        let size = if iter % 25 == 0 { 0 } else { rng.gen_range(1..=4) };
        let family = random_family(&mut rng, size, 8);
        let d = lebesgue_decompose(&lambda, &family);

        assert_eq!(&d.continuous_part + &d.singular_part, lambda, "iter {iter}: sum identity");
        assert!(
            abs_continuous(&d.continuous_part, &d.aggregate),
            "iter {iter}: continuous part must be dominated by the aggregate"
        );
        for member in family.members() {
            assert!(
                singular(&d.singular_part, member),
                "iter {iter}: singular part must be singular to every member"
            );
        }

        // invariance under permutation of the family
        let mut order: Vec<usize> = (0..family.len()).collect();
        order.shuffle(&mut rng);
        let permuted =
            ChargeFamily::new(order.iter().map(|&i| family.members()[i].clone()).collect());
        let dp = lebesgue_decompose(&lambda, &permuted);
        assert_eq!(dp.continuous_part, d.continuous_part, "iter {iter}: permutation invariance");
        assert_eq!(dp.singular_part, d.singular_part, "iter {iter}: permutation invariance");

        // invariance under strictly positive reweighting
        if !family.is_empty() {
            let reweighted = ChargeFamily::with_weights(
                family.members().to_vec(),
                random_weights(&mut rng, family.len()),
            )
            .unwrap();
            let dw = lebesgue_decompose(&lambda, &reweighted);
            assert_eq!(dw.continuous_part, d.continuous_part, "iter {iter}: weight invariance");
            assert_eq!(dw.singular_part, d.singular_part, "iter {iter}: weight invariance");
        }

        if lambda.is_positive() {
            assert!(
                d.continuous_part.is_positive() && d.singular_part.is_positive(),
                "iter {iter}: positivity preserved"
            );
        }
        if lambda.is_countably_additive() {
            assert!(
                d.continuous_part.is_countably_additive()
                    && d.singular_part.is_countably_additive(),
                "iter {iter}: countable additivity preserved"
            );
        }
    }
    pass("criterion 1 (lebesgue decomposition, 1000 seeded cases)");
}

#[test]
fn criterion_2_halmos_savage() {
    let mut rng = rng(0xC0FFEE02);
    for iter in 0..500u32 {
        let size = rng.gen_range(1..=5);
        let family = random_family(&mut rng, size, 8);
        let report = dominate(&family, None).unwrap();
        assert!(
            report.per_member.iter().all(|&f| f),
            "iter {iter}: every member must be dominated by the aggregate"
        );
        let sub_members: Vec<Charge> = report
            .equivalent_subfamily
            .iter()
            .map(|&i| family.members()[i].clone())
            .collect();
        let sub_support = if sub_members.is_empty() {
            Charge::zero().support()
        } else {
            aggregate(&ChargeFamily::new(sub_members)).unwrap().support()
        };
        assert_eq!(
            sub_support,
            report.dominating.support(),
            "iter {iter}: equivalent subfamily must span the same primitive support"
        );
    }
    for iter in 0..200u32 {
        let size = rng.gen_range(1..=4);
        let family = random_family(&mut rng, size, 8);
        let lambda = random_charge(&mut rng, ChargeShape::any(8));
        let report = dominate(&family, Some(&lambda)).unwrap();
        let pivot = report.pivot.expect("lambda was supplied");
        assert!(
            pivot.consistent(),
            "iter {iter}: domination by lambda must match domination by its continuous part"
        );
    }
    pass("criterion 2 (halmos-savage, 500 families + 200 pivots)");
}

#[test]
fn criterion_3_exhaustion() {
    let mut rng = rng(0xC0FFEE03);
    for iter in 0..300u32 {
        let lambda = random_positive_charge(&mut rng, 6);
        let count = rng.gen_range(1..=40);
        let sets: Vec<CanonicalSet> =
            (0..count).map(|_| random_canonical_set(&mut rng, 3)).collect();
        let trace = exhaust(&lambda, &sets).unwrap();

        assert!(trace.chosen.len() <= sets.len());
        assert_eq!(trace.final_residual(), rat_int(0), "iter {iter}: residual must vanish");
        let mut prev = trace.initial_residual.clone();
        for r in &trace.residuals {
            assert!(r <= &prev, "iter {iter}: residuals must be non-increasing");
            prev = r.clone();
        }

        // replay: every chosen set must maximize the increment, ties by index
        let mut running = CanonicalSet::empty();
        let mut remaining: Vec<usize> = (0..sets.len()).collect();
        for &chosen_idx in &trace.chosen_indices {
            let gains: Vec<(usize, Rational)> = remaining
                .iter()
                .map(|&i| (i, lambda.evaluate(&sets[i].difference(&running))))
                .collect();
            let best = gains
                .iter()
                .map(|(_, g)| g.clone())
                .max()
                .expect("remaining nonempty");
            let first_best = gains
                .iter()
                .find(|(_, g)| g == &best)
                .map(|(i, _)| *i)
                .unwrap();
            assert_eq!(chosen_idx, first_best, "iter {iter}: greedy choice must be maximal");
            assert!(!best.is_zero(), "iter {iter}: greedy never picks a zero increment");
            running = running.union(&sets[chosen_idx]);
            remaining.retain(|&i| i != chosen_idx);
        }
    }
    pass("criterion 3 (greedy exhaustion, 300 seeded traces)");
}

#[test]
fn criterion_4_pure_finite_additivity_witness() {
    let mut rng = rng(0xC0FFEE04);
    for iter in 0..20u32 {
        let den = rng.gen_range(2i64..=24);
        let c = rat(rng.gen_range(1..=den), den);
        let eta = Charge::from_terms([(Primitive::left_limit(c.clone()).unwrap(), rat_int(1))]);

        let mut sum = rat_int(0);
        let mut partial_union = CanonicalSet::empty();
        for n in 1..=12i64 {
            let lo = (&c - rat(1, n)).max(rat_int(0));
            let hi = (&c - rat(1, n + 1)).max(rat_int(0));
            if lo >= hi {
                continue;
            }
            let piece = CanonicalSet::interval(lo, hi).unwrap();
            let v = eta.evaluate(&piece);
            assert_eq!(v, rat_int(0), "iter {iter}: every shrinking piece is eta-null");
            sum += v;
            partial_union = partial_union.union(&piece);
            assert_eq!(
                eta.evaluate(&partial_union),
                rat_int(0),
                "iter {iter}: every finite partial union stays eta-null"
            );
        }
        assert_eq!(sum, rat_int(0));
        let full_union = CanonicalSet::interval(rat_int(0), c.clone()).unwrap();
        assert_eq!(
            eta.evaluate(&full_union),
            rat_int(1),
            "iter {iter}: the union carries the whole mass"
        );
    }
    pass("criterion 4 (sigma-additivity failure of left limits, 20 locations)");
}

fn random_member_candidates(
    rng: &mut rand_chacha::ChaCha8Rng,
    lambda: &Charge,
    attempts: usize,
) -> Vec<ExtendedSet> {
    let mut out = member_probe_sets(lambda);
    for _ in 0..attempts {
        let base = random_canonical_set(rng, 3);
        let mut parts: Vec<Part> = Vec::new();
        for iv in base.intervals() {
            parts.push(Part::Interval {
                lo: iv.lo.clone(),
                lo_closed: rng.gen_bool(0.5),
                hi: iv.hi.clone(),
                hi_closed: if iv.hi == rat_int(1) { false } else { rng.gen_bool(0.5) },
            });
        }
        if rng.gen_bool(0.3) {
            let d = rng.gen_range(2i64..=16);
            parts.push(Part::Point(rat(rng.gen_range(0..d), d)));
        }
        if let Ok(set) = ExtendedSet::new(parts) {
            let status = completion_status(lambda, &set).unwrap();
            assert!(status.inner <= status.outer, "inner measure may not exceed outer");
            if status.member {
                out.push(set);
            }
        }
    }
    out
}

#[test]
fn criterion_5_completion() {
    let mut rng = rng(0xC0FFEE05);
    let omega_mass = |lambda: &Charge| lambda.evaluate(&CanonicalSet::omega());

    let mut members_checked = 0usize;
    while members_checked < 300 {
        let lambda = random_positive_charge(&mut rng, 6);
        let total = omega_mass(&lambda);
        for set in random_member_candidates(&mut rng, &lambda, 12) {
            let status = completion_status(&lambda, &set).unwrap();
            assert!(status.inner <= status.outer);
            assert!(status.member);
            let comp = set.complement();
            let comp_status = completion_status(&lambda, &comp).unwrap();
            assert!(comp_status.member, "completion must be closed under complement");
            assert_eq!(
                status.extension.clone().unwrap() + comp_status.extension.unwrap(),
                total,
                "complement duality"
            );
            members_checked += 1;
        }
    }

    // shipped failing fixture: the shrinking tail misses the left-limit mass
    let lambda = Charge::from_terms([
        (Primitive::density(rat_int(0), rat_int(1)).unwrap(), rat_int(1)),
        (Primitive::left_limit(rat_int(1)).unwrap(), rat_int(1)),
    ]);
    let failing = DisjointSequence::with_tail(
        Vec::new(),
        ShrinkingTail { target: rat_int(1), start_index: 1 },
    );
    let defects =
        verify_sigma_additivity(&lambda, &failing, &[ExtendedSet::omega()]).unwrap();
    assert_eq!(defects[0].defect, rat_int(1), "fixture defect must be exactly 1");

    // the constructed sequence has no defect on the full probe list
    let constructed = DisjointSequence::finite(
        completion_sequence(&lambda, &CompletionParams::default()).unwrap(),
    );
    let tests = member_probe_sets(&lambda);
    assert!(tests.len() >= 4);
    for d in verify_sigma_additivity(&lambda, &constructed, &tests).unwrap() {
        assert_eq!(d.defect, rat_int(0), "constructed sequence must be sigma-additive");
    }
    pass("criterion 5 (completion: 300 member sets, fixture defects exact)");
}

#[test]
fn criterion_6_yan_equivalence() {
    let mut rng = rng(0xC0FFEE06);
    for iter in 0..500u32 {
        let model = random_yan_model(&mut rng, 6, 5);
        let cond = check_condition_ii(&model).unwrap();
        let outcome = find_certificate(&model).unwrap();
        match &outcome {
            CertificateOutcome::Found(cert) => {
                assert!(cond.holds, "iter {iter}: certificate implies condition (ii)");
                assert!(
                    verify_certificate(&model, cert),
                    "iter {iter}: returned certificate must verify"
                );
            }
            CertificateOutcome::Witness(witness) => {
                assert!(!cond.holds, "iter {iter}: witness implies condition (ii) fails");
                assert!(!witness.is_empty());
            }
        }
        // sampled condition (i): nonnegative vectors with positive mass
        for _ in 0..5 {
            let f: Vec<Rational> = (0..model.space_size())
                .map(|_| rat(rng.gen_range(0i64..=3), rng.gen_range(1i64..=3)))
                .collect();
            let mass: Rational = f
                .iter()
                .zip(model.weights())
                .map(|(a, b)| a * b)
                .sum();
            if mass.is_zero() {
                continue;
            }
            let finite = sup_scale(&model, &f).unwrap().is_finite();
            if cond.holds {
                assert!(finite, "iter {iter}: condition (ii) bounds every sampled f");
            }
            if !finite {
                assert!(!cond.holds, "iter {iter}: an unbounded sample refutes condition (ii)");
            }
        }
    }

    // hand-worked fixtures
    let balanced = YanModel::new(
        vec![rat(1, 2), rat(1, 2)],
        vec![vec![rat_int(1), rat_int(-1)]],
        Mode::Cone,
    )
    .unwrap();
    match find_certificate(&balanced).unwrap() {
        CertificateOutcome::Found(cert) => {
            assert_eq!(cert.probabilities, vec![rat(1, 2), rat(1, 2)]);
            assert_eq!(cert.margin, rat_int(1));
            assert_eq!(cert.k_bound, rat_int(0));
            assert_eq!(cert.ratio_bound, rat_int(1));
        }
        other => panic!("balanced cone fixture must certify, got {other:?}"),
    }
    let lopsided = YanModel::new(
        vec![rat(1, 2), rat(1, 2)],
        vec![vec![rat_int(1), rat_int(0)]],
        Mode::Cone,
    )
    .unwrap();
    assert_eq!(
        find_certificate(&lopsided).unwrap(),
        CertificateOutcome::Witness(vec![0]),
        "lopsided cone fixture must produce the witness {{0}}"
    );
    pass("criterion 6 (yan equivalence, 500 seeded models + fixtures)");
}

#[test]
fn criterion_7_lp_engine() {
    let mut rng = rng(0xC0FFEE07);
    for iter in 0..1000u32 {
        let lp = if iter < 800 {
            random_lp(&mut rng, 3, 3)
        } else {
            random_lp(&mut rng, 5, 4)
        };
        let outcome = solve_lp(&lp).unwrap();
        assert!(
            check_certificate(&lp, &outcome),
            "iter {iter}: every outcome must carry a valid certificate"
        );
        match (&outcome, lp_vertex_oracle(&lp)) {
            (LpOutcome::Optimal { value, .. }, OracleOutcome::Feasible { max }) => {
                assert_eq!(value, &max, "iter {iter}: optimal value must match the vertex oracle");
            }
            (LpOutcome::Infeasible { .. }, OracleOutcome::Infeasible) => {}
            (LpOutcome::Unbounded { .. }, OracleOutcome::Feasible { .. }) => {
                // the verified improving ray is the unboundedness proof
            }
            (outcome, _) => panic!("iter {iter}: solver and oracle disagree on {outcome:?}"),
        }
    }
    pass("criterion 7 (exact simplex vs vertex enumeration, 1000 programs)");
}

#[test]
fn criterion_8_atoms() {
    let mut rng = rng(0xC0FFEE08);
    for iter in 0..300u32 {
        let lambda = random_positive_charge(&mut rng, 6);
        let atoms = enumerate_atoms(&lambda).unwrap();
        for (i, atom) in atoms.iter().enumerate() {
            assert!(
                atom_grid_oracle(&lambda, &atom.representative),
                "iter {iter}: representative {i} must pass the grid atom oracle"
            );
            for other in &atoms[i + 1..] {
                assert!(
                    atom.representative.intersect(&other.representative).is_empty(),
                    "iter {iter}: representatives must be pairwise disjoint"
                );
            }
        }
        // synthetic atoms built from the isolated keys match exactly one G_n
        for atom in &atoms {
            let synthetic = match atom.kind {
                AtomKind::PointMass => {
                    let iv = &atom.representative.intervals()[0];
                    let width = (&iv.hi - &iv.lo) * rat(2, 3);
                    CanonicalSet::interval(iv.lo.clone(), &iv.lo + width).unwrap()
                }
                AtomKind::LeftLimit => {
                    let iv = &atom.representative.intervals()[0];
                    let width = (&iv.hi - &iv.lo) * rat(2, 3);
                    CanonicalSet::interval(&iv.hi - width, iv.hi.clone()).unwrap()
                }
            };
            let matches = atoms
                .iter()
                .filter(|g| {
                    lambda
                        .evaluate(&synthetic.symmetric_difference(&g.representative))
                        .is_zero()
                })
                .count();
            assert_eq!(matches, 1, "iter {iter}: synthetic atom must match exactly one G_n");
        }
    }

    // abutting density makes the point key splittable
    let fixture = Charge::from_terms([
        (Primitive::point(rat(1, 2)).unwrap(), rat_int(1)),
        (Primitive::density(rat(1, 2), rat_int(1)).unwrap(), rat_int(1)),
    ]);
    assert!(enumerate_atoms(&fixture).unwrap().is_empty());
    let candidate = CanonicalSet::interval(rat(1, 2), rat(3, 4)).unwrap();
    assert!(!atom_grid_oracle(&fixture, &candidate));
    pass("criterion 8 (atom enumeration vs grid oracle, 300 seeded charges)");
}
