use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;
use sharpmax::atlas::AtlasRecord;
use sharpmax::constants::ConstantReport;
use sharpmax::search::{star_norm_formula, StarFormula};
use sharpmax::zline::{BoundReport, ConjectureReport};
use sharpmax::SearchResult;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sharpmax"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn norm_formula_matches_library() {
    let v = json(&["norm", "--graph", "star:5", "--p", "2", "--method", "formula"]);
    let expected = star_norm_formula(5, 2.0).unwrap();
    assert_eq!(v["value"].as_f64().unwrap(), expected.value);
    let parsed: StarFormula = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(parsed, expected);
}

#[test]
fn var_oracle_on_complete_graph() {
    let v = json(&["var", "--graph", "complete:4", "--p", "1", "--method", "oracle", "--step", "0.25"]);
    assert!(v["value"].as_f64().unwrap() >= 0.75 - 1e-12);
    let r: SearchResult = serde_json::from_value(v["result"].clone()).unwrap();
    assert_eq!(r.best_value, v["value"].as_f64().unwrap());
    assert_eq!(r.argmax.len(), 4);
}

#[test]
fn var_formula_values() {
    let v = json(&["var", "--graph", "star:5", "--p", "2", "--method", "formula"]);
    assert!((v["value"].as_f64().unwrap() - 19f64.sqrt() / 5.0).abs() < 1e-15);
    let out = run(&["var", "--graph", "path:5", "--p", "2", "--method", "formula"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lipschitz_half_on_delta() {
    let v = json(&["zline-check", "--op", "lipschitz-half", "--f", "delta"]);
    assert_eq!(v["ratio"].as_f64().unwrap(), 1.0);
    let r: BoundReport = serde_json::from_value(v).unwrap();
    assert!(r.holds);
}

#[test]
fn var_norm_and_cp() {
    let v = json(&["zline-check", "--op", "var-norm", "--f", "delta", "--p", "1"]);
    assert!((v["ratio"].as_f64().unwrap() - 1.0).abs() < 1e-6);
    let v = json(&["zline-check", "--op", "cp", "--p", "1"]);
    assert!((v["value"].as_f64().unwrap() - 2.0).abs() < 1e-9);
    let out = run(&["zline-check", "--op", "cp", "--p", "0.5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn lattice_function_from_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("f.json");
    std::fs::write(&path, r#"{"offset": -1, "values": [0.5, 2.0, 0.25]}"#).unwrap();
    let v = json(&["zline-check", "--op", "lipschitz-half", "--f", path.to_str().unwrap()]);
    assert!(v["ratio"].as_f64().unwrap() <= 1.0 + 1e-12);
}

#[test]
fn validation_and_budget_exit_codes() {
    assert_eq!(run(&["norm", "--graph", "star:2", "--p", "2", "--method", "formula"]).status.code(), Some(2));
    assert_eq!(run(&["norm", "--graph", "wheel:5", "--p", "2"]).status.code(), Some(2));
    assert_eq!(run(&["norm", "--p", "2"]).status.code(), Some(2));
    assert_eq!(run(&["norm", "--graph", "star:5", "--p", "-1"]).status.code(), Some(2));
    assert_eq!(run(&["atlas", "--n", "8"]).status.code(), Some(3));
    let out = run(&["var", "--graph", "complete:8", "--p", "1", "--method", "oracle", "--step", "0.01"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(run(&["sweep", "--n", "5", "--p-range", "1:2:0"]).status.code(), Some(2));
}

#[test]
fn fixed_seed_gives_identical_bytes() {
    let args = ["norm", "--graph", "cycle:5", "--p", "1.5", "--method", "ascent", "--seed", "7", "--restarts", "6"];
    let a = run(&args);
    let b = run(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let jobs = run(&[&["--jobs", "1"][..], &args[..]].concat());
    assert_eq!(a.stdout, jobs.stdout);
}

#[test]
fn graph_files_in_both_formats() {
    let dir = tempfile::tempdir().unwrap();
    let text = dir.path().join("p4.txt");
    std::fs::write(&text, "4 3\n0 1\n1 2\n2 3\n").unwrap();
    let js = dir.path().join("p4.json");
    std::fs::write(&js, r#"{"n": 4, "edges": [[0, 1], [1, 2], [2, 3]]}"#).unwrap();
    let named = json(&["norm", "--graph", "path:4", "--p", "2", "--method", "oracle", "--step", "0.1"]);
    for path in [&text, &js] {
        let v = json(&["norm", "--graph-file", path.to_str().unwrap(), "--p", "2", "--method", "oracle", "--step", "0.1"]);
        assert_eq!(v["value"], named["value"]);
    }
    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "3 1\n0 1\n").unwrap();
    assert_eq!(run(&["norm", "--graph-file", bad.to_str().unwrap(), "--p", "2"]).status.code(), Some(2));
}

#[test]
fn constants_and_asymptotics_round_trip() {
    for cmd in ["constants", "asymptotics"] {
        let v = json(&[cmd, "--n", "4", "--p", "2"]);
        let rows: Vec<ConstantReport> = serde_json::from_value(v["rows"].clone()).unwrap();
        assert!(!rows.is_empty());
    }
    let v = json(&["asymptotics", "--n", "25"]);
    let rows: Vec<ConstantReport> = serde_json::from_value(v["rows"].clone()).unwrap();
    let star = rows.iter().find(|r| r.name == "star_limit").unwrap();
    assert_eq!(star.value, 3.0);
    assert!(star.exact);
}

#[test]
fn atlas_writes_json_lines_and_summary() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("atlas.jsonl");
    let summary = dir.path().join("summary.csv");
    let status = run(&[
        "atlas",
        "--n",
        "3",
        "--scan-p",
        "1",
        "--output",
        out.to_str().unwrap(),
        "--summary",
        summary.to_str().unwrap(),
    ]);
    assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
    let text = std::fs::read_to_string(&out).unwrap();
    let records: Vec<AtlasRecord> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(records.len(), 2);
    let csv = std::fs::read_to_string(&summary).unwrap();
    let mut lines = csv.lines();
    assert_eq!(lines.next(), Some("n,p,c_hat,C_hat,argmin,argmax"));
    let cells: Vec<&str> = lines.next().unwrap().split(',').collect();
    assert!((cells[2].parse::<f64>().unwrap() - 2.0 / 3.0).abs() < 1e-3);
    assert!((cells[3].parse::<f64>().unwrap() - 2.0 / 3.0).abs() < 1e-3);

    let plain = run(&["atlas", "--n", "5"]);
    assert_eq!(String::from_utf8_lossy(&plain.stdout).lines().count(), 21);
    let csv = run(&["atlas", "--n", "4", "--format", "csv", "--edge-disjoint"]);
    assert_eq!(String::from_utf8_lossy(&csv.stdout).lines().count(), 7);
}

#[test]
fn conjecture_scan_round_trip() {
    let v = json(&["conjecture-scan", "--p", "1", "--samples", "40"]);
    let r: ConjectureReport = serde_json::from_value(v).unwrap();
    assert_eq!(r.violations, 0);
    assert!(r.max_ratio <= r.conjectured_constant + 1e-9);
}

fn csv_rows(bytes: &[u8]) -> Vec<Vec<String>> {
    String::from_utf8_lossy(bytes)
        .lines()
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn sweep_from_flags_and_spec() {
    let out = run(&["sweep", "--n", "5", "--p-range", "1:3:0.5", "--format", "csv"]);
    let rows = csv_rows(&out.stdout);
    assert_eq!(rows[0], vec!["p", "value"]);
    assert_eq!(rows.len(), 6);
    assert!(rows.iter().skip(1).all(|r| r.len() == 2));

    let dir = tempfile::tempdir().unwrap();
    let spec = dir.path().join("run.json");
    std::fs::write(&spec, r#"{"n": 5, "p_start": 1, "p_end": 3, "p_step": 0.5, "bounds": true}"#).unwrap();
    let target = dir.path().join("sweep.csv");
    let out = run(&["sweep", "--spec", spec.to_str().unwrap(), "--format", "csv", "-o", target.to_str().unwrap()]);
    assert!(out.status.success());
    let rows = csv_rows(std::fs::read(Path::new(&target)).unwrap().as_slice());
    assert_eq!(rows[0], vec!["p", "value", "lower", "upper"]);
    for r in rows.iter().skip(1) {
        let v: Vec<f64> = r.iter().map(|c| c.parse().unwrap()).collect();
        assert!(v[2] <= v[1] + 1e-12 && v[1] <= v[3], "{r:?}");
    }
    std::fs::write(&spec, r#"{"n": 5, "p_start": 1, "p_end": 3, "p_step": 0.5, "typo": 1}"#).unwrap();
    assert_eq!(run(&["sweep", "--spec", spec.to_str().unwrap()]).status.code(), Some(2));
}
