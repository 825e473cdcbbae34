//! End-to-end tests driving the built binary.

use std::process::{Command, Output};

fn goeritz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goeritz"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = goeritz(args);
    assert!(
        out.status.success(),
        "exit {:?}, stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn order_of_the_relator_root_is_two() {
    assert_eq!(stdout(&["order", "gbs"]), "2\n");
}

#[test]
fn equal_accepts_the_empty_word() {
    assert_eq!(stdout(&["equal", "bB", ""]), "true\n");
    assert_eq!(stdout(&["equal", "b", "B"]), "false\n");
}

#[test]
fn primitive_words() {
    assert_eq!(stdout(&["primitive", "xxy"]), "true\n");
    assert_eq!(stdout(&["primitive", "xyxY"]), "false\n");
}

#[test]
fn disk_class_trichotomy() {
    assert_eq!(stdout(&["disk-class", "xX"]), "reducing\n");
    assert_eq!(stdout(&["disk-class", "y"]), "primitive\n");
    assert_eq!(stdout(&["disk-class", "yxYx"]), "non-primitive\n");
}

#[test]
fn normalize_format() {
    assert_eq!(stdout(&["normalize", "gb"]), "e^0 a^0 | ts\n");
    assert_eq!(stdout(&["normalize", ""]), "e^0 a^0 | 1\n");
    assert_eq!(stdout(&["normalize", "baeB"]), "e^1 a^1 | 1\n");
}

#[test]
fn member_subcommand() {
    assert_eq!(stdout(&["member", "gb", "stab-pair-pointwise"]), "true\n");
    assert_eq!(stdout(&["member", "s", "stab-pair-pointwise"]), "false\n");
    assert_eq!(stdout(&["member", "s", "stab-pair-setwise"]), "true\n");
}

#[test]
fn amalgam_and_classify() {
    let amalgam = stdout(&["amalgam", "gs"]);
    assert!(amalgam.contains("syllables: 2"));
    assert!(amalgam.contains("1 black"));
    assert!(amalgam.contains("2 white"));
    assert_eq!(
        stdout(&["classify", "gs"]),
        "hyperbolic translation-length 2\n"
    );
    assert_eq!(
        stdout(&["classify", "a"]),
        "elliptic fixed-vertex black e^0 a^0 | 1\n"
    );
}

#[test]
fn ball_output_is_deterministic() {
    let first = stdout(&["ball", "--radius", "2", "--branch-bound", "4"]);
    let second = stdout(&["ball", "--radius", "2", "--branch-bound", "4"]);
    assert_eq!(first, second);
    assert!(first.starts_with("graph goeritz_ball {"));
}

#[test]
fn parse_errors_exit_nonzero() {
    let out = goeritz(&["normalize", "gz"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid letter"));

    let out = goeritz(&["ball", "--radius", "9"]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("resource cap"));

    let out = goeritz(&["member", "g", "stab-nonsense"]);
    assert!(!out.status.success());
}

#[test]
fn ball_writes_dot_to_a_file() {
    let path = std::env::temp_dir().join("goeritz_cli_test_ball.dot");
    let _ = std::fs::remove_file(&path);
    stdout(&[
        "ball",
        "--radius",
        "1",
        "--branch-bound",
        "3",
        "--out",
        path.to_str().unwrap(),
    ]);
    let written = std::fs::read_to_string(&path).unwrap();
    assert!(written.starts_with("graph goeritz_ball {"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn verify_fast_configuration_passes() {
    // small caps keep this test quick; the full defaults run in the
    // acceptance suite
    let out = stdout(&[
        "verify",
        "--radius",
        "2",
        "--branch-bound",
        "4",
        "--oracle-length",
        "4",
        "--samples",
        "25",
    ]);
    assert!(out.contains("verification:"));
    assert!(!out.contains("[FAIL]"));
}

#[test]
fn verify_output_is_byte_identical_across_runs() {
    // radius must leave room for a translation length of 2, otherwise the
    // displacement check is vacuous and verify rightly fails
    let args = [
        "verify",
        "--radius",
        "2",
        "--branch-bound",
        "4",
        "--oracle-length",
        "3",
        "--samples",
        "25",
    ];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn verify_exits_nonzero_when_a_check_fails() {
    // at radius 1 no hyperbolic axis fits in the ball, so the displacement
    // check reports failure rather than passing vacuously
    let out = goeritz(&[
        "verify",
        "--radius",
        "1",
        "--branch-bound",
        "3",
        "--oracle-length",
        "3",
        "--samples",
        "10",
    ]);
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("[FAIL]"));
}

#[test]
fn verify_json_records_are_parseable() {
    let out = stdout(&[
        "verify",
        "--radius",
        "2",
        "--branch-bound",
        "4",
        "--oracle-length",
        "3",
        "--samples",
        "10",
        "--json",
    ]);
    for line in out.lines() {
        let record: serde_json::Value = serde_json::from_str(line).unwrap();
        assert!(record.get("check").is_some());
        assert!(record.get("passed").is_some());
        assert!(record.get("detail").is_some());
        assert_eq!(record["passed"], serde_json::Value::Bool(true));
    }
}
