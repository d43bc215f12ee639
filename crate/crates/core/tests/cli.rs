use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn leray(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_leray"))
        .args(args)
        .env_remove("LERAY_WORKERS")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn lines(out: &Output) -> Vec<Value> {
    String::from_utf8(out.stdout.clone())
        .unwrap()
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect()
}

#[test]
fn homology_of_the_hollow_triangle() {
    let out = leray(&["homology"], r#"{"facets":[[0,1],[1,2],[0,2]]}"#);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "{\"reduced\":[0,1],\"euler\":0}\n"
    );
}

#[test]
fn leray_of_a_simplex_is_zero_by_both_methods() {
    let out = leray(&["leray", "--method", "both"], r#"{"facets":[[0,1,2,3]]}"#);
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(v["value"], 0);
    assert_eq!(v["agree"], true);
}

#[test]
fn extremal_example_is_tight() {
    let ex = leray(&["example", "--r", "2", "--d", "2"], "");
    assert_eq!(ex.status.code(), Some(0));
    let out = leray(
        &["check", "lproj", "--no-timings"],
        &String::from_utf8(ex.stdout).unwrap(),
    );
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(v["claim"], "lproj");
    assert_eq!(v["tight"], true);
    assert_eq!(v["holds"], true);
    assert_eq!((v["lhs"].as_i64(), v["rhs"].as_i64()), (Some(3), Some(3)));
}

#[test]
fn hmps_batch_passes() {
    let out = leray(&["check", "hmps", "--seed", "9", "--count", "50", "--no-timings"], "");
    assert_eq!(out.status.code(), Some(0));
    let rows = lines(&out);
    assert_eq!(rows.len(), 50);
    assert!(rows.iter().all(|r| r["holds"] == true && r["version"].is_string()));
    let seeds: Vec<u64> = rows.iter().map(|r| r["instance"]["seed"].as_u64().unwrap()).collect();
    assert_eq!(seeds, (9..59).collect::<Vec<_>>());
}

#[test]
fn reports_are_identical_across_runs_and_worker_counts() {
    let args = ["check", "lproj", "--seed", "3", "--count", "20", "--no-timings"];
    let a = leray(&args, "");
    let b = leray(&[&args[..], &["--workers", "1"]].concat(), "");
    let c = leray(&[&args[..], &["--workers", "3"]].concat(), "");
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn timings_are_reported_unless_disabled() {
    let out = leray(&["check", "inter", "--seed", "1", "--count", "2"], "");
    assert!(lines(&out).iter().all(|r| r["elapsed_ms"].is_u64()));
    let out = leray(&["check", "inter", "--seed", "1", "--count", "2", "--no-timings"], "");
    assert!(lines(&out).iter().all(|r| r.get("elapsed_ms").is_none()));
}

#[test]
fn malformed_rational_is_a_format_error() {
    let out = leray(&["helly"], r#"{"d":1,"members":{"A":[[["1/0","1"]]]}}"#);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("members.A[0][0][0]"), "{err}");
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(leray(&["frobnicate"], "").status.code(), Some(2));
    assert_eq!(leray(&["leray", "--method", "guess"], "").status.code(), Some(2));
    assert_eq!(leray(&["homology"], "not json").status.code(), Some(2));
    assert_eq!(leray(&["homology"], r#"{"facets":[]}"#).status.code(), Some(2));
    assert_eq!(leray(&["--help"], "").status.code(), Some(0));
}

#[test]
fn project_reports_image_and_fiber_bound() {
    let px = r#"{"facets":[[0],[1]],"parts":[[0,1]]}"#;
    let out = leray(&["project"], px);
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(v["fiber_bound"], 2);
    assert_eq!(v["image"]["facets"], serde_json::json!([[0]]));
}

#[test]
fn icss_page_of_two_points() {
    let px = r#"{"facets":[[0],[1]],"parts":[[0,1]]}"#;
    let out = leray(&["icss"], px);
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(v["page"], serde_json::json!([[2], [1]]));
    assert_eq!(v["euler"]["page_sum"], 1);
    assert_eq!(v["holds"], true);
}

#[test]
fn mps_writes_a_loadable_complex() {
    let px = r#"{"facets":[[0],[1]],"parts":[[0,1]]}"#;
    let out = leray(&["mps", "--k", "2"], px);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let x = leray::io::complex_from_json(&text).unwrap();
    assert_eq!(x.vertex_count(), 4);
    let out = leray(&["homology"], &text);
    assert_eq!(lines(&out)[0]["reduced"], serde_json::json!([3]));
}

#[test]
fn helly_and_amenta_commands() {
    let tri = r#"{"atoms":3,"members":{"ab":[0,1],"bc":[1,2],"ca":[2,0]}}"#;
    let out = leray(&["check", "hl", "--no-timings"], tri);
    assert_eq!(out.status.code(), Some(0));
    let v = &lines(&out)[0];
    assert_eq!(
        (v["lhs"].as_i64(), v["rhs"].as_i64(), v["tight"].as_bool()),
        (Some(3), Some(3), Some(true))
    );

    let out = leray(&["helly", "--seed", "4", "--count", "3", "--d", "2"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out).len(), 3);

    let out = leray(
        &[
            "check",
            "amenta",
            "--seed",
            "0",
            "--count",
            "5",
            "--d",
            "1",
            "--r",
            "2",
            "--no-timings",
        ],
        "",
    );
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out).len(), 15);
}

#[test]
fn input_files_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("hollow.json");
    std::fs::write(
        &path,
        "{\"vertices\":[\"a\",\"b\",\"c\"],\"facets\":[[0,1],[0,2],[1,2]]}\n",
    )
    .unwrap();
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(
        leray::io::complex_to_json(&leray::io::complex_from_json(&text).unwrap()),
        text
    );
    let out = leray(&["leray", path.to_str().unwrap(), "--method", "links"], "");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(lines(&out)[0]["value"], 2);
    let missing = dir.path().join("missing.json");
    assert_eq!(
        leray(&["homology", missing.to_str().unwrap()], "").status.code(),
        Some(2)
    );
}

#[test]
fn in_process_runner_matches_the_binary() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = leray::cli::run_with(
        ["leray", "check", "inter", "--seed", "5", "--count", "4", "--no-timings"],
        &mut std::io::empty(),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0);
    let bin = leray(&["check", "inter", "--seed", "5", "--count", "4", "--no-timings"], "");
    assert_eq!(out, bin.stdout);
}
