//! Acceptance suite: one test per criterion, each printing a single
//! pass/fail line (run with `cargo test --test acceptance -- --nocapture`
//! to see the lines on success).

use std::time::Instant;

use goeritz::verify::{
    verify_isometries, verify_membership, verify_normal_forms, verify_orders,
    verify_presentation, verify_primitivity, verify_tree,
};
use goeritz::Check;

fn run_criterion(label: &str, checks: Vec<Check>) {
    let passed = checks.iter().all(|c| c.passed);
    println!("{label}: {}", if passed { "PASS" } else { "FAIL" });
    for c in checks.iter().filter(|c| !c.passed) {
        println!("  failed check: {} ({})", c.name, c.detail);
    }
    assert!(passed, "{label} failed");
}

#[test]
fn criterion_1_relation_suite() {
    run_criterion(
        "criterion 1 (relation suite and substitution round trips)",
        verify_presentation(),
    );
}

#[test]
fn criterion_2_order_facts() {
    run_criterion("criterion 2 (order facts)", verify_orders());
}

#[test]
fn criterion_3_normal_form_collision_freeness() {
    run_criterion(
        "criterion 3 (normal-form collision-freeness and homomorphism)",
        verify_normal_forms(),
    );
}

#[test]
fn criterion_4_primitivity_oracle_equivalence() {
    run_criterion(
        "criterion 4 (primitivity oracle equivalence, filter soundness, gcd necessity)",
        verify_primitivity(6).unwrap(),
    );
}

#[test]
fn criterion_5_tree_structure() {
    let start = Instant::now();
    let checks = verify_tree(4, 6).unwrap();
    let elapsed = start.elapsed();
    run_criterion("criterion 5 (tree structure at radius 4, branch bound 6)", checks);
    assert!(
        elapsed.as_secs() < 60,
        "tree checks took {elapsed:?}, expected under one minute"
    );
}

#[test]
fn criterion_6_subgroup_predicates() {
    run_criterion(
        "criterion 6 (subgroup predicates, index facts, coset family)",
        verify_membership(8),
    );
}

#[test]
fn criterion_7_isometry_classification() {
    run_criterion(
        "criterion 7 (amalgam soundness and isometry classification)",
        verify_isometries(4, 6, 100).unwrap(),
    );
}
