use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn run(dir: &Path, job: &str, args: &[&str]) -> (Output, Option<Value>) {
    let job_path = dir.join("job.json");
    let out_path = dir.join("report.json");
    let _ = std::fs::remove_file(&out_path);
    std::fs::write(&job_path, job).unwrap();
    let output = Command::new(env!("CARGO_BIN_EXE_twisted-mackey"))
        .arg(&job_path)
        .arg("--json-out")
        .arg(&out_path)
        .args(args)
        .output()
        .unwrap();
    let report = std::fs::read_to_string(&out_path).ok().map(|s| serde_json::from_str(&s).unwrap());
    (output, report)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

const K0_GF5_C2: &str = r#"{"group": {"cyclic": 2}, "ring": {"gf": {"p": 5, "k": 1}}, "action": "trivial",
 "task": {"verify-mackey": {"instance": "k0"}}}"#;

#[test]
fn k0_job_lists_values_and_seven_axioms() {
    let dir = TempDir::new().unwrap();
    let (out, report) = run(dir.path(), K0_GF5_C2, &[]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    assert!(text.contains("Z^2"));
    let report = report.unwrap();
    for key in ["spec_echo", "results", "verdicts", "timings"] {
        assert!(report.get(key).is_some(), "missing {key}");
    }
    let verdicts = report["verdicts"].as_array().unwrap();
    let names: Vec<&str> = verdicts.iter().map(|v| v["check"].as_str().unwrap()).collect();
    assert_eq!(names, ["MF0", "MF1", "MF2", "MF3", "MF4", "MF5", "MF6"]);
    let labels: Vec<&str> =
        report["results"]["mackey"]["values"].as_array().unwrap().iter().map(|v| v["label"].as_str().unwrap()).collect();
    assert_eq!(labels, ["Z", "Z^2"]);
    assert_eq!(report["timings"], serde_json::json!({}));
}

#[test]
fn auslander_job_reports_an_isomorphism_of_rank_four() {
    let dir = TempDir::new().unwrap();
    let job = r#"{"group": {"cyclic": 2}, "ring": {"gf": {"p": 3, "k": 2}}, "action": {"frobenius": 1}, "task": "auslander"}"#;
    let (out, report) = run(dir.path(), job, &[]);
    assert_eq!(out.status.code(), Some(0));
    let whole = &report.unwrap()["results"]["subgroups"][1];
    assert_eq!(whole["verdict"], "isomorphism");
    assert_eq!(whole["data"]["image_rank"], 4);
}

#[test]
fn double_cosets_outside_h_is_a_validation_error() {
    let dir = TempDir::new().unwrap();
    let job = r#"{"group": {"symmetric": 3}, "subgroups": {"T": ["(1 2)"]},
 "task": {"double-cosets": {"j": "G", "k": "T", "h": "T"}}}"#;
    let (out, report) = run(dir.path(), job, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not contained"));
    assert!(report.is_none());
}

#[test]
fn parse_errors_carry_line_and_column() {
    let dir = TempDir::new().unwrap();
    let (out, _) = run(dir.path(), "{\"group\": {\"cyclic\": 2},\n \"task\": \"k1\"}", &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("line 2, column"), "{}", stderr(&out));
}

#[test]
fn invertibility_gate_quotes_the_hypothesis() {
    let dir = TempDir::new().unwrap();
    let (out, _) = run(dir.path(), r#"{"group": {"cyclic": 2}, "ring": {"zmod": 4}, "task": "k0"}"#, &[]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("|G| is invertible in R"));
}

#[test]
fn constant_functor_fails_with_witnesses() {
    let dir = TempDir::new().unwrap();
    let (out, report) = run(dir.path(), r#"{"group": {"symmetric": 3}, "task": {"verify-mackey": {"instance": "constant"}}}"#, &[]);
    assert_eq!(out.status.code(), Some(1));
    let report = report.unwrap();
    let failing: Vec<&str> =
        report["verdicts"].as_array().unwrap().iter().filter(|v| v["pass"] == false).map(|v| v["check"].as_str().unwrap()).collect();
    assert_eq!(failing, ["MF6"]);
    assert!(!report["results"]["axioms"]["verdicts"][6]["witnesses"].as_array().unwrap().is_empty());
}

#[test]
fn unsupported_instances_exit_three() {
    let dir = TempDir::new().unwrap();
    let job = r#"{"group": {"cyclic": 2}, "ring": {"gf": {"p": 3, "k": 2}}, "action": {"frobenius": 1},
 "task": {"verify-mackey": {"instance": "dress-kuku"}}}"#;
    let (out, _) = run(dir.path(), job, &[]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn quillen_instance_needs_the_external_data_flag() {
    let dir = TempDir::new().unwrap();
    let job = r#"{"group": {"cyclic": 2}, "ring": {"gf": {"p": 3, "k": 2}}, "action": {"frobenius": 1},
 "task": {"verify-mackey": {"instance": {"quillen": {"degree": 2}}}}}"#;
    let (out, _) = run(dir.path(), job, &[]);
    assert_eq!(out.status.code(), Some(2));
    let (out, report) = run(dir.path(), job, &["--allow-external-data"]);
    assert_eq!(out.status.code(), Some(0));
    let report = report.unwrap();
    assert_eq!(report["results"]["mackey"]["external_data"], true);
    assert_eq!(report["results"]["mackey"]["values"][0]["label"], "K_3(GF(3^2)) = Z/80");
}

#[test]
fn group_order_bound_is_enforced() {
    let dir = TempDir::new().unwrap();
    let (out, _) = run(dir.path(), r#"{"group": {"symmetric": 3}, "task": "burnside"}"#, &["--max-group-order", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("exceeds"));
}

#[test]
fn reports_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let job = r#"{"group": {"symmetric": 3}, "ring": {"gf": {"p": 7, "k": 1}}, "subgroups": {"T": ["(1 2)"]},
 "task": {"decompose": {"j": "T", "k": "T", "h": "G"}}}"#;
    let (first, _) = run(dir.path(), job, &[]);
    let a = std::fs::read(dir.path().join("report.json")).unwrap();
    let (second, _) = run(dir.path(), job, &[]);
    let b = std::fs::read(dir.path().join("report.json")).unwrap();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(a, b);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn timings_are_opt_in() {
    let dir = TempDir::new().unwrap();
    let (_, report) = run(dir.path(), K0_GF5_C2, &["--timings"]);
    let timings = report.unwrap()["timings"].as_object().unwrap().clone();
    assert!(timings.contains_key("build") && timings.contains_key("task"));
}

/// Every integer printed in the tables also occurs in the JSON report.
#[test]
fn text_numbers_appear_in_the_json() {
    let dir = TempDir::new().unwrap();
    let jobs = [
        r#"{"group": {"dihedral": 4}, "subgroups": {"R": [2]}, "task": {"double-cosets": {"j": "R", "k": [1], "h": "G"}}}"#,
        r#"{"group": {"symmetric": 3}, "task": "burnside"}"#,
        r#"{"group": {"cyclic": 6}, "ring": {"gf": {"p": 2, "k": 6}}, "action": {"frobenius": 1}, "task": "k0"}"#,
    ];
    for job in jobs {
        let (out, report) = run(dir.path(), job, &[]);
        let json = serde_json::to_string(&report.unwrap()).unwrap();
        let numbers: std::collections::BTreeSet<String> = stdout(&out)
            .split(|c: char| !c.is_ascii_digit())
            .filter(|s| !s.is_empty())
            .map(String::from)
            .collect();
        for n in numbers {
            assert!(json.contains(&n), "{n} is missing from the report of {job}");
        }
    }
}
