//! Acceptance suite: one test per criterion, each printing a pass/fail line.
//!
//! Every criterion is an exact integer statement (tolerance zero). Run with
//! `cargo test -p brim --test acceptance -- --nocapture` to see the lines.

use num_bigint::BigInt;
use num_traits::Zero;

use brim::theorems::{
    builtin_corpus, check_cell_sum, check_coeff_ideal_identities, check_fiber_count,
    check_last_multiplicity, check_multiplicity_sum, check_nested_chain,
    check_oracle_equivalence, check_overflow_bound, check_power_containment, check_structural,
    check_top_stratum, CheckConfig, Verdict,
};
use brim::{
    br_multiplicity_sequence, hs_multiplicity, lambda, lambda_pq_brute, lambda_pq_fast,
    mixed_multiplicities, IdealFamily,
};

fn acceptance_config() -> CheckConfig {
    CheckConfig {
        p_max: 3,
        q_max: 18,
        min_samples: 200,
        budget: 8,
        fiber_k_max: 3,
        fiber_p_max: 3,
        fiber_q_max: 20,
        ..CheckConfig::default()
    }
}

fn verdict_line(criterion: usize, what: &str, problems: &[String]) {
    let status = if problems.is_empty() { "PASS" } else { "FAIL" };
    println!("criterion {criterion} [{status}] {what}");
    for p in problems {
        println!("    {p}");
    }
    assert!(problems.is_empty(), "criterion {criterion} failed: {problems:?}");
}

fn family_by_name(name: &str) -> IdealFamily {
    builtin_corpus()
        .into_iter()
        .find(|nf| nf.name == name)
        .expect("corpus family")
        .family
}

#[test]
fn criterion_1_last_multiplicity_formula() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_last_multiplicity(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{}: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    // the non-nested witness: both sides equal 1
    let f = family_by_name("d2-cross-pair");
    let seq = br_multiplicity_sequence(&f).expect("sequence");
    let hs = hs_multiplicity(&f.sum_all()).expect("hs");
    if seq.value(1) != &BigInt::from(1) || hs.value != BigInt::from(1) {
        problems.push(format!(
            "witness d2-cross-pair: e^1 = {}, e(sum) = {}",
            seq.value(1),
            hs.value
        ));
    }
    verdict_line(
        1,
        "e^(r-1) from the two-variable function equals e(I_1 + ... + I_r) on the corpus",
        &problems,
    );
}

#[test]
fn criterion_2_multiplicity_sum() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_multiplicity_sum(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{}: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    // frozen witnesses: (m, m) -> 3 = 1+1+1 and (m, m^2) -> 7 = 1+2+4
    for (name, expect_entries, expect_total) in [
        ("d2-max-pair", vec![1i64, 1, 1], 3i64),
        ("d2-max-square", vec![1, 2, 4], 7),
    ] {
        let f = family_by_name(name);
        let mm = mixed_multiplicities(&f).expect("mixed table");
        let got: Vec<BigInt> = [[2u64, 0], [1, 1], [0, 2]]
            .iter()
            .map(|i| mm.get(i).expect("entry").clone())
            .collect();
        let want: Vec<BigInt> = expect_entries.iter().map(|&v| BigInt::from(v)).collect();
        if got != want || mm.total() != BigInt::from(expect_total) {
            problems.push(format!("{name}: entries {got:?}, total {}", mm.total()));
        }
    }
    verdict_line(
        2,
        "e(C) equals the sum of all mixed multiplicities on the corpus",
        &problems,
    );
}

#[test]
fn criterion_3_nested_chain() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    let mut applicable = 0usize;
    for nf in builtin_corpus() {
        match check_nested_chain(&nf.name, &nf.family, &cfg) {
            Ok(report) => match report.verdict {
                Verdict::Pass => applicable += 1,
                Verdict::Inapplicable => {}
                Verdict::Fail => problems.push(format!("{}: {:?}", nf.name, report.details)),
            },
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    if applicable < 4 {
        problems.push(format!("only {applicable} nested families in corpus"));
    }
    verdict_line(
        3,
        "e^j equals the tail multiplicity on every nested corpus family",
        &problems,
    );
}

#[test]
fn criterion_4_evaluator_oracle_equivalence() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_oracle_equivalence(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{}: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    verdict_line(
        4,
        "stratified and brute evaluators agree for p <= 3, (p+1)r <= q <= 18",
        &problems,
    );
}

#[test]
fn criterion_5_coefficient_ideal_identities() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_coeff_ideal_identities(&nf.name, &nf.family, &cfg) {
            Ok(reports) => {
                for report in reports {
                    if report.verdict != Verdict::Pass {
                        problems.push(format!(
                            "{} {}: {:?}",
                            nf.name, report.check, report.details
                        ));
                    } else {
                        let sampled: usize = report.details[0]
                            .split_whitespace()
                            .next()
                            .and_then(|s| s.parse().ok())
                            .unwrap_or(0);
                        if report.check == "reduced-form" && sampled < 200 {
                            problems.push(format!(
                                "{}: only {sampled} samples for {}",
                                nf.name, report.check
                            ));
                        }
                    }
                }
            }
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    verdict_line(
        5,
        "closed-form and reduced coefficient ideals match brute force on >= 200 indices per family",
        &problems,
    );
}

#[test]
fn criterion_6_top_stratum_and_fiber_counts() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_top_stratum(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{}: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    match check_fiber_count(&cfg) {
        Ok(report) if report.verdict == Verdict::Pass => {}
        Ok(report) => problems.push(format!("fiber-count: {:?}", report.details)),
        Err(e) => problems.push(format!("fiber-count: computation error {e}")),
    }
    verdict_line(
        6,
        "top-stratum identity and fiber counts vs direct enumeration (k <= 3, p <= 3, q <= 20)",
        &problems,
    );
}

#[test]
fn criterion_7_cell_sum_containment_and_overflow_bound() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    let mut containment_applicable = 0usize;
    for nf in builtin_corpus() {
        match check_cell_sum(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{} cell-sum: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
        match check_power_containment(&nf.name, &nf.family, &cfg) {
            Ok(report) => match report.verdict {
                Verdict::Pass => containment_applicable += 1,
                Verdict::Inapplicable => {}
                Verdict::Fail => {
                    problems.push(format!("{} containment: {:?}", nf.name, report.details))
                }
            },
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    if containment_applicable == 0 {
        problems.push("no family exercised the containment check".to_string());
    }
    for r in [2usize, 3] {
        match check_overflow_bound(r, &cfg) {
            Ok(report) if report.verdict != Verdict::Fail => {}
            Ok(report) => problems.push(format!("overflow-bound r={r}: {:?}", report.details)),
            Err(e) => problems.push(format!("overflow-bound r={r}: computation error {e}")),
        }
    }
    verdict_line(
        7,
        "cell-sum identity and bound, power containment, and overflow-cell count bound",
        &problems,
    );
}

#[test]
fn criterion_8_structural_invariants() {
    let cfg = acceptance_config();
    let mut problems = Vec::new();
    for nf in builtin_corpus() {
        match check_structural(&nf.name, &nf.family, &cfg) {
            Ok(report) if report.verdict == Verdict::Pass => {}
            Ok(report) => problems.push(format!("{}: {:?}", nf.name, report.details)),
            Err(e) => problems.push(format!("{}: computation error {e}", nf.name)),
        }
    }
    verdict_line(
        8,
        "colength oracle agreement, Lambda(p, 0) = lambda(p), and sequence shape on every family",
        &problems,
    );
}

#[test]
fn criterion_9_closed_form_regression() {
    let mut problems = Vec::new();
    let f = family_by_name("d1-pair-equal"); // ((x), (x)) in one variable
    for p in 0..=4u64 {
        for q in 0..=18u64 {
            let expect = BigInt::from(p * p + p * q + p);
            match lambda_pq_brute(&f, p, q) {
                Ok(v) if v == expect => {}
                Ok(v) => problems.push(format!("brute (p={p}, q={q}): {v} != {expect}")),
                Err(e) => problems.push(format!("brute (p={p}, q={q}): {e}")),
            }
            if brim::in_region(p, q, 2) {
                match lambda_pq_fast(&f, p, q) {
                    Ok(v) if v == expect => {}
                    Ok(v) => problems.push(format!("fast (p={p}, q={q}): {v} != {expect}")),
                    Err(e) => problems.push(format!("fast (p={p}, q={q}): {e}")),
                }
            }
        }
        match lambda(&f, p) {
            Ok(v) if v == BigInt::from(p * p + p) => {}
            other => problems.push(format!("lambda({p}): {other:?}")),
        }
    }
    match br_multiplicity_sequence(&f) {
        Ok(report) => {
            let want = vec![BigInt::from(2), BigInt::from(1), BigInt::zero()];
            if report.values() != want {
                problems.push(format!("sequence {:?} != (2, 1, 0)", report.values()));
            }
        }
        Err(e) => problems.push(format!("sequence: {e}")),
    }
    verdict_line(
        9,
        "d=1 ((x), (x)): Lambda = p^2 + pq + p on the grid and sequence (2, 1, 0)",
        &problems,
    );
}
