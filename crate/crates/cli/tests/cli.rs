//! End-to-end tests of the `h43` binary: flag handling, exit codes, and
//! the shape and determinism of the report files.

use std::path::PathBuf;
use std::process::{Command, Output};

fn h43(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_h43"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let mut p = std::env::temp_dir();
    p.push(format!("h43-cli-test-{}-{name}", std::process::id()));
    p
}

#[test]
fn rho_prime_prints_value_and_interval() {
    let out = h43(&["rho-prime", "--m", "18"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("4.593888315670"), "{text}");
    assert!(text.contains("interval: ["), "{text}");

    let out = h43(&["rho-prime", "--m", "20"]);
    assert!(stdout(&out).contains("4.83117011985"));
}

#[test]
fn rho_prime_rejects_odd_m() {
    let out = h43(&["rho-prime", "--m", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("even"));
}

#[test]
fn unknown_flag_is_usage_error() {
    let out = h43(&["rho-prime", "--edges", "18"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_all_passes_and_writes_reports() {
    let json_path = tmp("verify.json");
    let csv_path = tmp("verify.csv");
    let out = h43(&[
        "verify",
        "--suite",
        "all",
        "--m-max",
        "60",
        "--out",
        json_path.to_str().unwrap(),
        "--csv",
        csv_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));

    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&json_path).unwrap()).unwrap();
    assert_eq!(doc["schema_version"], "1");
    assert_eq!(doc["command"], "verify");
    assert_eq!(doc["flags"]["m-max"], "60");
    assert!(doc["results"].as_array().unwrap().len() > 50);

    let csv_text = std::fs::read_to_string(&csv_path).unwrap();
    assert!(csv_text.starts_with("id,status,m_lo,m_hi,detail"));
    assert_eq!(
        csv_text.lines().count(),
        doc["results"].as_array().unwrap().len() + 1,
        "CSV mirrors the JSON rows"
    );
    std::fs::remove_file(json_path).ok();
    std::fs::remove_file(csv_path).ok();
}

#[test]
fn verify_thresholds_reports_the_m22_boundary() {
    let out = h43(&["verify", "--suite", "thresholds", "--m-max", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("expected-fail-below-24"));
}

#[test]
fn search_small_m_does_not_crash() {
    let out = h43(&["search", "--m", "14"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("rho'(m)"));
}

#[test]
fn search_reports_are_deterministic_across_jobs() {
    let a_path = tmp("search-a.json");
    let b_path = tmp("search-b.json");
    let run = |path: &PathBuf, jobs: &str| {
        let out = h43(&[
            "search",
            "--m",
            "16,18",
            "--jobs",
            jobs,
            "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0));
        let doc: serde_json::Value =
            serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        doc["results"].clone()
    };
    let a = run(&a_path, "1");
    let b = run(&b_path, "4");
    assert_eq!(a, b, "results must not depend on parallelism");
    std::fs::remove_file(a_path).ok();
    std::fs::remove_file(b_path).ok();
}

#[test]
fn search_dump_writes_graph6_lines() {
    let dump = tmp("survivors.g6");
    let out = h43(&[
        "search",
        "--m",
        "18",
        "--dump-graphs",
        dump.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&dump).unwrap();
    assert!(text.lines().count() > 100);
    assert!(text
        .lines()
        .all(|l| l.bytes().all(|b| (63..=126).contains(&b))));
    std::fs::remove_file(dump).ok();
}

#[test]
fn family_verdicts() {
    let out = h43(&["family", "--name", "t", "--m", "18"]);
    assert!(
        stdout(&out).contains("verdict   = below"),
        "{}",
        stdout(&out)
    );
    let out = h43(&["family", "--name", "t", "--m", "16"]);
    assert!(stdout(&out).contains("verdict   = above"));
    let out = h43(&["family", "--name", "s-minus", "--m", "18"]);
    assert!(stdout(&out).contains("verdict   = equal-within-margin"));
    let out = h43(&["family", "--name", "same", "--m", "18"]);
    assert!(stdout(&out).contains("verdict   = below"));
}

#[test]
fn family_rejects_out_of_range_m() {
    let out = h43(&["family", "--name", "t", "--m", "8"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn family_json_export_has_adjacency_lists() {
    let path = tmp("family.json");
    let out = h43(&[
        "family",
        "--name",
        "dist",
        "--m",
        "18",
        "--json",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["n"], 12);
    assert_eq!(doc["edges"], 18);
    let adj = doc["adjacency"].as_array().unwrap();
    assert_eq!(adj.len(), 12);
    // Symmetric: vertex 0 lists 5 and vice versa.
    assert!(adj[0].as_array().unwrap().iter().any(|v| v == 5));
    assert!(adj[5].as_array().unwrap().iter().any(|v| v == 0));
    std::fs::remove_file(path).ok();
}
