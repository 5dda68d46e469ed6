//! End-to-end runs of the `logconvex` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn spec(file: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "specs", file].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_logconvex")).args(args).output().unwrap()
}

fn code(args: &[&str]) -> i32 {
    run(args).status.code().unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let out = run(&full);
    let v = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!("{e}: {}{}", String::from_utf8_lossy(&out.stdout), String::from_utf8_lossy(&out.stderr))
    });
    (out.status.code().unwrap(), v)
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn generate_prints_terms() {
    let lines: Vec<String> = stdout(&["generate", "motzkin", "--n", "6"]).lines().map(str::to_string).collect();
    assert_eq!(lines, ["1", "1", "2", "4", "9", "21", "51"]);
    let s = stdout(&["generate", &spec("schroder.json"), "--n", "4"]);
    assert_eq!(s.split_whitespace().collect::<Vec<_>>(), ["1", "1", "3", "11", "45"]);
}

#[test]
fn unknown_targets_are_usage_errors() {
    let out = run(&["generate", "nosuch"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown sequence"));
    assert_eq!(code(&["conjecture", "nosuch"]), 2);
    assert_eq!(code(&["identity", "nosuch"]), 2);
    assert_eq!(code(&["frobnicate"]), 2);
}

#[test]
fn check_exit_codes_and_witness() {
    assert_eq!(code(&["check", "catalan", "--mode", "logconvex"]), 0);
    assert_eq!(code(&["check", "bell", "--mode", "qlogconvex", "--n", "40"]), 0);
    let (c, v) = json(&["check", "fibonacci", "--mode", "logconvex"]);
    assert_eq!(c, 1);
    assert_eq!(v["status"], "fails");
    assert_eq!(v["witness"]["indices"], serde_json::json!([1, 2, 3]));
    assert_eq!(code(&["check", "fine", "--mode", "logconvex"]), 1);
    assert_eq!(code(&["--from", "2", "check", "fine", "--mode", "logconvex"]), 0);
}

#[test]
fn analyze_examples() {
    let (c, v) = json(&["analyze", &spec("delannoy.json"), "--theorem", "c_minus"]);
    assert_eq!(c, 0);
    let vals = &v["certificate"]["values"];
    assert_eq!((vals["A"].as_str(), vals["B"].as_str(), vals["C"].as_str()), (Some("3"), Some("-1"), Some("3")));
    assert_eq!(vals["condition"], "ii");

    assert_eq!(code(&["analyze", &spec("motzkin.json"), "--theorem", "crit_plus", "--n", "200"]), 0);
    assert_eq!(code(&["analyze", &spec("derangements.json"), "--theorem", "c_plus", "--mu", "(2n+5)/2"]), 0);
    // plus-form recurrence offered to a minus criterion
    assert_eq!(code(&["analyze", &spec("motzkin.json"), "--theorem", "c_minus"]), 2);
}

#[test]
fn polyhexes_needs_anchor_one() {
    let (c, v) = json(&["analyze", &spec("polyhexes.json"), "--theorem", "c_minus"]);
    assert_eq!(c, 1);
    assert_eq!(v["witness"]["hypothesis"], "condition");
    assert_eq!(code(&["analyze", &spec("polyhexes.json"), "--theorem", "c_minus", "--anchor", "1"]), 0);
}

#[test]
fn malformed_input_is_a_usage_error() {
    assert_eq!(code(&["analyze", &spec("derangements.json"), "--theorem", "c_plus", "--mu", "abc"]), 2);
    let bad = std::env::temp_dir().join(format!("logconvex-bad-{}.json", std::process::id()));
    std::fs::write(&bad, "{\"kind\":").unwrap();
    assert_eq!(code(&["check", bad.to_str().unwrap()]), 2);
    std::fs::remove_file(&bad).unwrap();
}

#[test]
fn json_output_is_deterministic() {
    for args in [
        &["check", "motzkin", "--mode", "logconvex"][..],
        &["analyze", &spec("cubic_walks.json"), "--theorem", "c_minus"][..],
        &["conjecture", "narayana_transform", "--n", "20", "--corpus", "30"][..],
    ] {
        let mut full = vec!["--format", "json"];
        full.extend_from_slice(args);
        assert_eq!(run(&full).stdout, run(&full).stdout, "{args:?}");
    }
}

#[test]
fn conjectures_find_nothing_at_small_bounds() {
    for name in ["narayana_qlcx", "squared_binomial_c1c2", "narayana_transform", "eulerian_transform"] {
        let (c, v) = json(&["conjecture", name, "--n", "20", "--corpus", "20", "--len", "10"]);
        assert_eq!(c, 0, "{name}");
        assert!(v.get("counterexample").is_none_or(Value::is_null), "{name}: {v}");
    }
}

#[test]
fn identities_all_hold() {
    let (c, v) = json(&["identity", "all", "--n", "30"]);
    assert_eq!(c, 0);
    let items = v.as_array().unwrap();
    assert_eq!(items.len(), 13);
    assert!(items.iter().all(|r| r["status"] == "holds"), "{v}");
}

#[test]
fn transform_of_fibonacci() {
    let s = stdout(&["transform", "binomial", "fibonacci", "--n", "6"]);
    assert_eq!(s.split_whitespace().collect::<Vec<_>>(), ["1", "2", "5", "13", "34", "89", "233"]);
}
