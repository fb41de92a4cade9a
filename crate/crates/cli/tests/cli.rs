use std::process::{Command, Output};

use serde_json::Value;

fn normcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_normcat"))
        .args(args)
        .env_remove("NORMCAT_BOUND")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn full_run_at_three_passes() {
    let out = normcat(&["run", "--n", "3"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    let passing = text.lines().filter(|l| l.contains(" PASS ")).count();
    assert!(passing >= 20, "{text}");
    assert!(!text.contains(" FAIL "));
}

#[test]
fn degenerate_size_two_passes() {
    let out = normcat(&["run", "--n", "2", "--suite", "pi-normal"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(normcat(&["run", "--n", "1"]).status.code(), Some(2));
    assert_eq!(
        normcat(&["run", "--n", "3", "--suite", "bogus"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        normcat(&["run", "--n", "3", "--bound", "0"]).status.code(),
        Some(2)
    );
    assert_eq!(
        normcat(&["enumerate", "bogus", "--n", "3"]).status.code(),
        Some(2)
    );
    assert_eq!(normcat(&["factorize", "{}"]).status.code(), Some(2));
}

#[test]
fn json_reports_are_byte_identical() {
    let args = [
        "run", "--n", "3", "--suite", "core", "--suite", "iso-G", "--format", "json",
    ];
    let first = normcat(&args);
    let second = normcat(&args);
    assert_eq!(first.stdout, second.stdout);
    let report: Value = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(report["summary"]["status"], "pass");
    assert_eq!(report["suites"], serde_json::json!(["core", "iso-G"]));
    assert!(report["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass" && c.get("elapsed").is_none()));
}

#[test]
fn bound_exceeded_is_skipped_with_its_own_exit_code() {
    let out = normcat(&[
        "run", "--n", "3", "--suite", "powerset", "--bound", "10", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["summary"]["fail"], 0);
    assert!(report["summary"]["skipped"].as_u64().unwrap() > 0);
}

#[test]
fn bound_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_normcat"))
        .args(["run", "--n", "3", "--suite", "cones", "--format", "json"])
        .env("NORMCAT_BOUND", "5")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(3));
    let report: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(report["bound"], 5);
}

#[test]
fn report_goes_to_file() {
    let path = std::env::temp_dir().join(format!("normcat-report-{}.json", std::process::id()));
    let out = normcat(&[
        "run",
        "--n",
        "3",
        "--suite",
        "dual",
        "--format",
        "json",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(report["n"], 3);
    std::fs::remove_file(path).ok();
}

#[test]
fn enumerations_have_known_sizes() {
    for (kind, n, expected) in [
        ("partitions", "4", 14),
        ("idempotents", "3", 9),
        ("transformations", "3", 21),
        ("dual-objects", "3", 4),
        ("cones", "3", 21),
    ] {
        let out = normcat(&["enumerate", kind, "--n", n]);
        assert_eq!(out.status.code(), Some(0), "{kind}");
        let lines: Vec<Value> = stdout(&out)
            .lines()
            .map(|l| serde_json::from_str(l).unwrap())
            .collect();
        assert_eq!(lines.len(), expected, "{kind} at n={n}");
    }
    let first = stdout(&normcat(&["enumerate", "partitions", "--n", "3"]));
    assert_eq!(first.lines().next(), Some("[[0,1,2]]"));
}

#[test]
fn cone_enumeration_respects_the_bound() {
    let out = normcat(&["enumerate", "cones", "--n", "4"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("bound"));
}

#[test]
fn factorize_worked_example() {
    let out = normcat(&[
        "factorize",
        r#"{"source":[[0,1],[2]],"target":[[0,1,2]],"eta":[1]}"#,
    ]);
    assert_eq!(out.status.code(), Some(0));
    let fact: Value = serde_json::from_slice(&out.stdout).unwrap();
    let factors = &fact["factors"];
    assert_eq!(
        factors["inclusion"]["target"],
        serde_json::json!([[0, 1, 2]])
    );
    assert_eq!(
        factors["epimorphic_part"]["source"],
        serde_json::json!([[0, 1], [2]])
    );
}
