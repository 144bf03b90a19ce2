//! Verb implementations. Each returns a `Report` (exit 0 or 1) or a
//! `CliFailure` carrying exit code 2 (grammar) or 3 (range/semantic/io).

use std::fs;
use std::path::Path;

use chargekit::*;
use num::Zero;

use crate::report::{CliFailure, Report, Status};
use crate::text::{
    charge_inline, format_extended_set, format_set, fraction, parse_charge, parse_extended_set_expr,
    parse_rational, parse_set_expr, parse_yan_model, format_vector,
};

const DEFAULT_FAMILY_CAP: usize = 10_000;

/// Family size cap, overridable through `CHARGEKIT_MAX_FAMILY`.
pub fn family_cap() -> usize {
    std::env::var("CHARGEKIT_MAX_FAMILY")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_FAMILY_CAP)
}

fn read(path: &Path) -> Result<String, CliFailure> {
    fs::read_to_string(path)
        .map_err(|e| CliFailure::semantic(format!("cannot read {}: {e}", path.display())))
}

fn load_charge(path: &Path) -> Result<Charge, CliFailure> {
    Ok(parse_charge(&read(path)?)?)
}

fn load_family(paths: &[std::path::PathBuf]) -> Result<Vec<Charge>, CliFailure> {
    if paths.len() > family_cap() {
        return Err(CliFailure::semantic(format!(
            "family of {} members exceeds the cap of {}",
            paths.len(),
            family_cap()
        )));
    }
    paths.iter().map(|p| load_charge(p)).collect()
}

pub fn cmd_eval(charge_path: &Path, set_expr: &str) -> Result<Report, CliFailure> {
    let charge = load_charge(charge_path)?;
    let set = parse_set_expr(set_expr)?;
    let value = charge.evaluate(&set);
    let mut report = Report::new("eval");
    report
        .section(
            "input",
            format!("charge: {}\nset: {}", charge_inline(&charge), format_set(&set)),
        )
        .section("value", fraction(&value))
        .kv("charge", charge_inline(&charge))
        .kv("set", format_set(&set))
        .kv("value", fraction(&value));
    Ok(report)
}

pub fn cmd_tv(charge_path: &Path) -> Result<Report, CliFailure> {
    let charge = load_charge(charge_path)?;
    let (tv, norm) = charge.total_variation();
    let mut report = Report::new("tv");
    report
        .section("input", charge_inline(&charge))
        .section(
            "total variation",
            format!("|mu|: {}\nnorm: {}", charge_inline(&tv), fraction(&norm)),
        )
        .kv("charge", charge_inline(&charge))
        .kv("tv", charge_inline(&tv))
        .kv("norm", fraction(&norm));
    Ok(report)
}

pub fn cmd_relate(mu_path: &Path, nu_path: &Path) -> Result<Report, CliFailure> {
    let mu = load_charge(mu_path)?;
    let nu = load_charge(nu_path)?;
    let mu_ll_nu = abs_continuous(&mu, &nu);
    let nu_ll_mu = abs_continuous(&nu, &mu);
    let mutually_singular = singular(&mu, &nu);

    let mut body = format!(
        "mu << nu: {mu_ll_nu}\nnu << mu: {nu_ll_mu}\nmu _|_ nu: {mutually_singular}"
    );
    let mut report = Report::new("relate");
    report
        .kv("mu", charge_inline(&mu))
        .kv("nu", charge_inline(&nu))
        .kv("mu_ll_nu", mu_ll_nu.to_string())
        .kv("nu_ll_mu", nu_ll_mu.to_string())
        .kv("singular", mutually_singular.to_string());
    if let Some(witness) = abs_continuity_witness(&mu, &nu) {
        let sample = witness.set_at(8);
        body.push_str(&format!("\nmu << nu fails on the family A_k; A_8 = {}", format_set(&sample)));
        report.kv("mu_ll_nu_witness_a8", format_set(&sample));
    }
    if mutually_singular {
        let eps = rat(1, 1024);
        if let Some(split) = split_witness(&mu, &nu, &eps) {
            body.push_str(&format!(
                "\nsplitting set B (eps=1/1024): {}",
                format_set(&split)
            ));
            report.kv("split_witness_eps_1/1024", format_set(&split));
        }
    }
    report.section("relations", body);
    Ok(report)
}

pub fn cmd_decompose(
    lambda_path: &Path,
    against: &[std::path::PathBuf],
    weights: &[String],
) -> Result<Report, CliFailure> {
    let lambda = load_charge(lambda_path)?;
    let members = load_family(against)?;
    let family = if weights.is_empty() {
        ChargeFamily::new(members)
    } else {
        let parsed: Vec<Rational> = weights
            .iter()
            .map(|w| parse_rational(w).map_err(CliFailure::semantic))
            .collect::<Result<_, _>>()?;
        ChargeFamily::with_weights(members, parsed)
            .map_err(|e| CliFailure::semantic(e.to_string()))?
    };
    let decomposition = lebesgue_decompose(&lambda, &family);

    let mut report = Report::new("decompose");
    let weights_used = family.effective_weights();
    let mut input = format!("lambda: {}\n", charge_inline(&lambda));
    for (i, member) in family.members().iter().enumerate() {
        input.push_str(&format!("member[{i}]: {}\n", charge_inline(member)));
    }
    input.push_str(&format!("weights: {}", format_vector(&weights_used)));
    report.section("input", input);
    report.section(
        "decomposition",
        format!(
            "continuous: {}\nsingular: {}\naggregate: {}",
            charge_inline(&decomposition.continuous_part),
            charge_inline(&decomposition.singular_part),
            charge_inline(&decomposition.aggregate)
        ),
    );

    let mut checks = String::new();
    let mut all_ok = true;
    let continuous_ok =
        abs_continuous(&decomposition.continuous_part, &decomposition.aggregate);
    checks.push_str(&format!(
        "continuous<<aggregate: {}\n",
        if continuous_ok { "OK" } else { "VIOLATION" }
    ));
    all_ok &= continuous_ok;
    let eps = rat(1, 1024);
    for (i, member) in family.members().iter().enumerate() {
        match split_witness(&decomposition.singular_part, member, &eps) {
            Some(b) => checks.push_str(&format!(
                "singular_vs[{i}]: OK (B={}, eps=1/1024)\n",
                format_set(&b)
            )),
            None => {
                checks.push_str(&format!("singular_vs[{i}]: VIOLATION\n"));
                all_ok = false;
            }
        }
    }
    report.section("verification", checks.clone());

    report
        .kv("lambda", charge_inline(&lambda))
        .kv("weights", format_vector(&weights_used))
        .kv("continuous", charge_inline(&decomposition.continuous_part))
        .kv("singular", charge_inline(&decomposition.singular_part))
        .kv("aggregate", charge_inline(&decomposition.aggregate))
        .kv("checks_ok", all_ok.to_string());
    if !all_ok {
        report.status = Status::Violation;
    }
    Ok(report)
}

pub fn cmd_dominate(
    member_paths: &[std::path::PathBuf],
    lambda_path: Option<&Path>,
) -> Result<Report, CliFailure> {
    let members = load_family(member_paths)?;
    let family = ChargeFamily::new(members);
    let lambda = lambda_path.map(load_charge).transpose()?;
    let outcome =
        dominate(&family, lambda.as_ref()).map_err(|e| CliFailure::semantic(e.to_string()))?;

    let mut report = Report::new("dominate");
    let mut body = format!("aggregate m: {}\n", charge_inline(&outcome.dominating));
    for (i, flag) in outcome.per_member.iter().enumerate() {
        body.push_str(&format!("member[{i}] << m: {flag}\n"));
    }
    let subfamily = outcome
        .equivalent_subfamily
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join(",");
    body.push_str(&format!("equivalent subfamily (0-based): {{{subfamily}}}"));
    report.section("domination", body);

    report
        .kv("aggregate", charge_inline(&outcome.dominating))
        .kv(
            "per_member",
            outcome
                .per_member
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .kv("subfamily", subfamily);
    if let Some(pivot) = &outcome.pivot {
        let consistent = pivot.consistent();
        report.section(
            "pivot",
            format!(
                "against lambda:     {:?}\nagainst continuous: {:?}\nconsistent: {consistent}",
                pivot.against_lambda, pivot.against_continuous
            ),
        );
        report.kv("pivot_consistent", consistent.to_string());
        if !consistent {
            report.status = Status::Violation;
        }
    }
    Ok(report)
}

pub fn cmd_exhaust(lambda_path: &Path, set_exprs: &[String]) -> Result<Report, CliFailure> {
    let lambda = load_charge(lambda_path)?;
    let sets: Vec<CanonicalSet> = set_exprs
        .iter()
        .map(|e| parse_set_expr(e))
        .collect::<Result<_, _>>()?;
    let trace = exhaust(&lambda, &sets).map_err(|e| CliFailure::semantic(e.to_string()))?;

    let mut report = Report::new("exhaust");
    let mut chosen = String::new();
    for (step, (idx, set)) in trace
        .chosen_indices
        .iter()
        .zip(&trace.chosen)
        .enumerate()
    {
        chosen.push_str(&format!("H_{} = input[{idx}] = {}\n", step + 1, format_set(set)));
    }
    if chosen.is_empty() {
        chosen.push_str("nothing chosen: no input set carries mass\n");
    }
    report.section("chosen", chosen);

    let mut table = format!("0 {}\n", fraction(&trace.initial_residual));
    for (step, r) in trace.residuals.iter().enumerate() {
        table.push_str(&format!("{} {}\n", step + 1, fraction(r)));
    }
    report.section("residuals (k residual_k)", table);

    report
        .kv(
            "chosen_indices",
            trace
                .chosen_indices
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(","),
        )
        .kv("initial_residual", fraction(&trace.initial_residual))
        .kv(
            "residuals",
            trace.residuals.iter().map(fraction).collect::<Vec<_>>().join(","),
        )
        .kv("final_residual", fraction(&trace.final_residual()));
    if !trace.final_residual().is_zero() {
        report.status = Status::Violation;
    }
    Ok(report)
}

pub fn cmd_atoms(lambda_path: &Path) -> Result<Report, CliFailure> {
    let lambda = load_charge(lambda_path)?;
    let atoms = enumerate_atoms(&lambda).map_err(|e| CliFailure::semantic(e.to_string()))?;
    let mut report = Report::new("atoms");
    if atoms.is_empty() {
        report.section("atoms", "none");
    } else {
        let mut body = String::new();
        for (i, atom) in atoms.iter().enumerate() {
            let kind = match atom.kind {
                AtomKind::PointMass => "point",
                AtomKind::LeftLimit => "leftlim",
            };
            body.push_str(&format!(
                "G_{i}: {kind} at {} representative {}\n",
                fraction(&atom.location),
                format_set(&atom.representative)
            ));
            report.kv(
                format!("atom.{i}"),
                format!("{kind} {} {}", fraction(&atom.location), format_set(&atom.representative)),
            );
        }
        report.section("atoms", body);
    }
    report.kv("count", atoms.len().to_string());
    Ok(report)
}

pub fn cmd_complete(
    lambda_path: &Path,
    set_expr: Option<&str>,
    sequence: bool,
) -> Result<Report, CliFailure> {
    let lambda = load_charge(lambda_path)?;
    let mut report = Report::new("complete");
    if sequence {
        let seq = completion_sequence(&lambda, &CompletionParams::default())
            .map_err(|e| CliFailure::semantic(e.to_string()))?;
        let mut body = String::new();
        for (i, set) in seq.iter().enumerate() {
            body.push_str(&format!("A_{} = {}\n", i + 1, format_set(set)));
            report.kv(format!("sequence.{i}"), format_set(set));
        }
        let mass_sum: Rational = seq.iter().map(|s| lambda.evaluate(s)).sum();
        body.push_str(&format!("sum of lambda(A_n): {}", fraction(&mass_sum)));
        report.section("sequence", body);
        report.kv("mass_sum", fraction(&mass_sum));

        let tests = member_probe_sets(&lambda);
        let defects =
            verify_sigma_additivity(&lambda, &DisjointSequence::finite(seq), &tests)
                .map_err(|e| CliFailure::semantic(e.to_string()))?;
        let mut table = String::from("test | bar | summed | defect\n");
        let mut all_zero = true;
        for (i, d) in defects.iter().enumerate() {
            table.push_str(&format!(
                "{} | {} | {} | {}\n",
                format_extended_set(&d.test),
                fraction(&d.total),
                fraction(&d.summed),
                fraction(&d.defect)
            ));
            report.kv(format!("defect.{i}"), fraction(&d.defect));
            all_zero &= d.defect.is_zero();
        }
        report.section("sigma-additivity", table);
        report.kv("all_defects_zero", all_zero.to_string());
        if !all_zero {
            report.status = Status::Violation;
        }
        return Ok(report);
    }

    let expr = set_expr
        .ok_or_else(|| CliFailure::semantic("an extended-set expression is required"))?;
    let set = parse_extended_set_expr(expr)?;
    let status = completion_status(&lambda, &set)
        .map_err(|e| CliFailure::semantic(e.to_string()))?;
    let extension = status
        .extension
        .as_ref()
        .map(fraction)
        .unwrap_or_else(|| "undefined".into());
    report
        .section(
            "completion",
            format!(
                "set: {}\ninner: {}\nouter: {}\nmember: {}\nbar-lambda: {extension}",
                format_extended_set(&set),
                fraction(&status.inner),
                fraction(&status.outer),
                status.member
            ),
        )
        .kv("set", format_extended_set(&set))
        .kv("inner", fraction(&status.inner))
        .kv("outer", fraction(&status.outer))
        .kv("member", status.member.to_string())
        .kv("extension", extension);
    Ok(report)
}

pub fn cmd_yan(model_path: &Path) -> Result<Report, CliFailure> {
    let model = parse_yan_model(&read(model_path)?)?;
    let outcome =
        find_certificate(&model).map_err(|e| CliFailure::semantic(e.to_string()))?;
    let mut report = Report::new("yan");
    match outcome {
        CertificateOutcome::Found(cert) => {
            let verified = verify_certificate(&model, &cert);
            report.section(
                "result",
                format!(
                    "PASS\np: {}\nmargin: {}\nk_bound: {}\nratio_bound: {}\nre-verified: {verified}",
                    format_vector(&cert.probabilities),
                    fraction(&cert.margin),
                    fraction(&cert.k_bound),
                    fraction(&cert.ratio_bound)
                ),
            );
            report
                .kv("result", "certificate")
                .kv("p", format_vector(&cert.probabilities))
                .kv("margin", fraction(&cert.margin))
                .kv("k_bound", fraction(&cert.k_bound))
                .kv("ratio_bound", fraction(&cert.ratio_bound))
                .kv("verified", verified.to_string());
            if !verified {
                report.status = Status::Violation;
            }
        }
        CertificateOutcome::Witness(witness) => {
            let set = witness
                .iter()
                .map(|i| i.to_string())
                .collect::<Vec<_>>()
                .join(",");
            report.section("result", format!("FAIL\nwitness A = {{{set}}}"));
            report.kv("result", "witness").kv("witness", set);
            report.status = Status::Violation;
        }
    }
    Ok(report)
}

pub fn cmd_selftest() -> Result<Report, CliFailure> {
    let results = crate::selftest::run();
    let mut report = Report::new("selftest");
    let mut body = String::new();
    let mut failures = 0usize;
    for check in &results {
        match &check.failure {
            None => body.push_str(&format!("{}: OK\n", check.name)),
            Some(msg) => {
                failures += 1;
                body.push_str(&format!("{}: FAIL ({msg})\n", check.name));
            }
        }
    }
    body.push_str(&format!("{} checks, {failures} failures", results.len()));
    report.section("selftest", body);
    report
        .kv("checks", results.len().to_string())
        .kv("failures", failures.to_string());
    if failures > 0 {
        report.status = Status::Violation;
    }
    Ok(report)
}
