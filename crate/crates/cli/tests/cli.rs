//! End-to-end runs of the `pgl2` binary.

use std::fs;
use std::os::unix::fs::PermissionsExt;
use std::path::Path;
use std::process::{Command, Output};

use pgl2_core::catalog::{case, CaseId};
use pgl2_core::fieldlab::specialize;

fn pgl2(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgl2"))
        .args(args)
        .env_remove("PGL2_CAS")
        .env_remove("PGL2_CAS_CONFIG")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn fake_cas(dir: &Path, reply: &str) -> String {
    let path = dir.join("cas");
    fs::write(&path, format!("#!/bin/sh\ncat > /dev/null\necho 'version: [0, 0, 0]'\necho '{reply}'\n")).unwrap();
    fs::set_permissions(&path, fs::Permissions::from_mode(0o755)).unwrap();
    path.to_str().unwrap().to_string()
}

#[test]
fn verify_paper_passes() {
    let o = pgl2(&["verify-paper"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains(", 0 failed"));
}

#[test]
fn verify_paper_filters_by_case() {
    let o = pgl2(&["verify-paper", "--case", "C4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let checks: Vec<&str> = out.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).collect();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|l| l.split_whitespace().nth(1) == Some("C4")), "{out}");
}

#[test]
fn tampered_catalog_names_the_failed_identity() {
    let dir = tempfile::tempdir().unwrap();
    let mut cat: serde_json::Value = serde_json::from_str(&stdout(&pgl2(&["catalog"]))).unwrap();
    let c4 = cat.as_array_mut().unwrap().iter_mut().find(|c| c["id"] == "C4").unwrap();
    c4["a"] = match &c4["a"] {
        serde_json::Value::String(_) => "3".into(),
        _ => 3.into(),
    };
    let path = dir.path().join("catalog.json");
    fs::write(&path, serde_json::to_string(&cat).unwrap()).unwrap();

    let o = pgl2(&["verify-paper", "--catalog", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    let failed: Vec<&str> = out.lines().filter(|l| l.starts_with("FAIL")).collect();
    assert!(!failed.is_empty(), "{out}");
    assert!(failed.iter().all(|l| l.starts_with("FAIL C4 ")), "{out}");
    assert!(failed.iter().any(|l| l.contains("reconstruction")), "{out}");
}

#[test]
fn unreadable_catalog_is_a_config_error() {
    let o = pgl2(&["verify-paper", "--catalog", "/nonexistent/catalog.json"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn quadratic_family_includes_the_example() {
    let o = pgl2(&["family", "--case", "C2", "--n", "5", "--count", "5", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let rows: Vec<serde_json::Value> = stdout(&o).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 5);
    let y7 = rows.iter().find(|r| r["y"] == 7).unwrap();
    assert_eq!(y7["poly"], serde_json::json!(["1", "8401", "1"]));
    let ys: Vec<u64> = rows.iter().map(|r| r["y"].as_u64().unwrap()).collect();
    assert!(ys.windows(2).all(|w| w[0] < w[1]));
}

#[test]
fn empty_range_is_empty_output() {
    let o = pgl2(&["family", "--case", "C3", "--n", "5", "--range", "2..3", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).trim().is_empty());
}

#[test]
fn invalid_exponent_is_a_config_error() {
    let o = pgl2(&["family", "--case", "C4", "--n", "4", "--count", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n"));
}

#[test]
fn output_is_deterministic() {
    for format in ["json", "csv"] {
        let args = ["family", "--case", "D3", "--n", "5", "--count", "6", "--format", format, "--parallel", "3"];
        let a = pgl2(&args);
        let b = pgl2(&args);
        assert_eq!(a.status.code(), Some(0));
        assert_eq!(a.stdout, b.stdout, "{format}");
    }
}

#[test]
fn csv_has_the_summary_columns() {
    let o = pgl2(&["family", "--case", "C2", "--n", "5", "--count", "2", "--format", "csv"]);
    let out = stdout(&o);
    assert_eq!(out.lines().next(), Some("case,y,n,degree,r1,r2,disc_bits,all_checks_pass"));
    assert_eq!(out.lines().count(), 3);
}

#[test]
fn json_matches_the_library() {
    for id in [CaseId::C3, CaseId::D2, CaseId::C6] {
        let c = case(id);
        let ys = c.conditions.admissible_ys(5, 2, 3);
        let range = format!("{}..{}", ys[0], ys[2]);
        let o = pgl2(&["family", "--case", id.as_str(), "--n", "5", "--range", &range, "--format", "json"]);
        let want: String = ys
            .iter()
            .map(|&y| serde_json::to_string(&specialize(&c, y, 5).unwrap()).unwrap() + "\n")
            .collect();
        assert_eq!(stdout(&o), want, "{id}");
    }
}

#[test]
fn out_file_receives_the_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c2.jsonl");
    let o = pgl2(&["family", "--case", "C2", "--n", "5", "--count", "3", "--format", "json", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(fs::read_to_string(&path).unwrap().lines().count(), 3);
}

#[test]
fn classgroup_without_cas_is_a_config_error() {
    let o = pgl2(&["classgroup", "--intro", "--rank-n", "42"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(!String::from_utf8_lossy(&o.stderr).is_empty());
}

#[test]
fn classgroup_expectations_set_the_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let cas = fake_cas(dir.path(), "[210, 42, 42, 42, 42, 6]");
    let run = |extra: &[&str]| {
        let mut args = vec!["classgroup", "--intro", "--rank-n", "42", "--cas-path", &cas];
        args.extend_from_slice(extra);
        pgl2(&args).status.code()
    };
    assert_eq!(run(&["--expect-rank", "5"]), Some(0));
    assert_eq!(run(&["--expect-rank", "4"]), Some(1));
    assert_eq!(run(&["--expect-rank-ge", "5"]), Some(0));
    assert_eq!(run(&["--expect-rank-ge", "6"]), Some(1));
}

#[test]
fn classgroup_of_a_family_member() {
    let dir = tempfile::tempdir().unwrap();
    let cas = fake_cas(dir.path(), "[5, 5, 5, 5, 5, 10]");
    let o = pgl2(&[
        "classgroup", "--case", "D3", "--y", "199", "--n", "5", "--expect-rank-ge", "5", "--cas-path", &cas,
        "--format", "json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let r: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(r["computed_rank_n"], 6);
}
