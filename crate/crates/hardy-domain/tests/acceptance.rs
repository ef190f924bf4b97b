//! One test per acceptance criterion. Each prints a single pass/fail line
//! (visible with `--nocapture`) and asserts the verdict.

use hardy_domain::verify::{run, Status, VerifyConfig, CHECKS};

fn criterion(id: &str) {
    let cfg = VerifyConfig::default();
    let r = run(&cfg, Some(id)).pop().expect("check exists");
    println!(
        "{} {} {} lhs={} rhs={} tol={} ({})",
        r.id,
        r.anchor,
        r.status.as_str(),
        r.lhs,
        r.rhs,
        r.tol,
        r.detail
    );
    assert_eq!(r.status, Status::Pass, "{}: {}", r.id, r.detail);
}

#[test]
fn criterion_01_weak_l1_equality() {
    criterion("a01");
}

#[test]
fn criterion_02_levelset_identity() {
    criterion("a02");
}

#[test]
fn criterion_03_closed_form_transforms() {
    criterion("a03");
}

#[test]
fn criterion_04_endpoint_verdicts() {
    criterion("a04");
}

#[test]
fn criterion_05_theta_closed_form() {
    criterion("a05");
}

#[test]
fn criterion_06_theta_integral_identity() {
    criterion("a06");
}

#[test]
fn criterion_07_fundamental_sandwich() {
    criterion("a07");
}

#[test]
fn criterion_08_condition_classifier() {
    criterion("a08");
}

#[test]
fn criterion_09_measure_norms() {
    criterion("a09");
}

#[test]
fn criterion_10_doubling_construction() {
    criterion("a10");
}

#[test]
fn criterion_11_domain_identification() {
    criterion("a11");
}

#[test]
fn criterion_12_randomized_invariants() {
    criterion("a12");
}

#[test]
fn check_table_lists_twelve_unique_ids_in_order() {
    let ids: Vec<&str> = CHECKS.iter().map(|(id, _)| *id).collect();
    let expected: Vec<String> = (1..=12).map(|i| format!("a{i:02}")).collect();
    assert_eq!(ids, expected);
    let mut anchors: Vec<&str> = CHECKS.iter().map(|(_, a)| *a).collect();
    anchors.sort_unstable();
    anchors.dedup();
    assert_eq!(anchors.len(), 12);
}
