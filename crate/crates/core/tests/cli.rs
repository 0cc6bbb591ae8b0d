use std::fs;
use std::path::Path;
use std::process::Command;

use serde_json::Value;
use toric_robust::cli::{execute, parse_matrix, write_matrix, Outcome};
use toric_robust::IntMatrix;

fn run(args: &[&str]) -> Outcome {
    execute(std::iter::once("toric-robust").chain(args.iter().copied()))
}

fn write_fixture(dir: &Path, name: &str, text: &str) -> String {
    let path = dir.join(name);
    fs::write(&path, text).unwrap();
    path.to_str().unwrap().to_string()
}

fn t57_text() -> String {
    let mut text = String::from("5 7\n");
    for k in 0..5u32 {
        let row: Vec<String> = (1..=7i64).map(|t| t.pow(k).to_string()).collect();
        text.push_str(&row.join(" "));
        text.push('\n');
    }
    text
}

#[test]
fn complex_report_on_t57() {
    let dir = tempfile::tempdir().unwrap();
    let t57 = write_fixture(dir.path(), "T57.mat", &t57_text());
    let out = run(&["complex", &t57, "--json"]);
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["schema"], "toric-robust/report/v1");
    assert_eq!(
        v["result"]["maximal_faces"],
        serde_json::json!([[1, 3, 4, 5, 7]])
    );
    assert_eq!(v["result"]["dimension"], 4);
    assert_eq!(v["result"]["face_count"], 32);
    assert!(v.get("timing_ms").is_none());
}

#[test]
fn check_dimension_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let t57 = write_fixture(dir.path(), "T57.mat", &t57_text());
    assert_eq!(run(&["check-dimension", &t57]).exit_code, 0);
}

#[test]
fn graver_output_file_and_oracle() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_fixture(dir.path(), "A465.mat", "1 3\n4 6 5\n");
    let out_path = dir.path().join("gr.mat");
    let out = run(&[
        "graver",
        &a,
        "-o",
        out_path.to_str().unwrap(),
        "--oracle",
        "--json",
    ]);
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let text = fs::read_to_string(&out_path).unwrap();
    let m = parse_matrix(&text).unwrap();
    assert_eq!(write_matrix(&m), text);
    assert_eq!((m.rows(), m.cols()), (7, 3));
    let v: Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(v["result"]["oracle"]["agrees"], true);
}

#[test]
fn cache_hit_matches_cold_run() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("cache");
    let t57 = write_fixture(dir.path(), "T57.mat", &t57_text());
    let args = [
        "complex",
        &t57,
        "--json",
        "--cache-dir",
        cache.to_str().unwrap(),
    ];
    let cold = run(&args);
    assert_eq!(fs::read_dir(&cache).unwrap().count(), 1);
    let warm = run(&args);
    assert_eq!(cold.stdout, warm.stdout);
    let uncached = run(&["complex", &t57, "--json"]);
    assert_eq!(cold.stdout, uncached.stdout);
}

#[test]
fn thread_count_does_not_change_reports() {
    let dir = tempfile::tempdir().unwrap();
    let t57 = write_fixture(dir.path(), "T57.mat", &t57_text());
    let a = write_fixture(dir.path(), "A465.mat", "1 3\n4 6 5\n");
    for args in [
        vec!["complex", t57.as_str(), "--json"],
        vec!["graver", t57.as_str(), "--json"],
        vec!["robust", a.as_str(), "--json"],
        vec!["bouquets", t57.as_str(), "--json"],
    ] {
        let mut one = args.clone();
        one.extend(["--threads", "1"]);
        let mut eight = args.clone();
        eight.extend(["--threads", "8"]);
        assert_eq!(run(&one).stdout, run(&eight).stdout, "{args:?}");
    }
}

#[test]
fn matrix_producing_commands() {
    let dir = tempfile::tempdir().unwrap();
    let out = run(&["cyclic", "--d", "5", "--ts", "1,2,3,4,5,6,7"]);
    assert_eq!(out.stdout, t57_text());

    let a = write_fixture(dir.path(), "A465.mat", "1 3\n4 6 5\n");
    let out = run(&["lift", &a, "--omega", "1,3"]);
    assert_eq!(out.stdout, "2 4\n4 6 5 0\n0 1 0 1\n");

    let base = write_fixture(dir.path(), "B.mat", "1 2\n1 2\n");
    let out = run(&["glm", &base, "--c", "1,-1", "--c", "2,3"]);
    assert_eq!(out.exit_code, 0, "{}", out.stderr);
    let m = parse_matrix(&out.stdout).unwrap();
    assert_eq!(
        m,
        IntMatrix::from_i64_rows(&[[1, 0, -2, 2], [1, 1, 0, 0], [0, 0, -3, 2]])
    );
}

#[test]
fn errors_are_json_on_stderr() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_fixture(dir.path(), "bad.mat", "2 2\n1 2 3\n");
    let out = run(&["graver", &bad]);
    assert_eq!(out.exit_code, 51);
    let v: Value = serde_json::from_str(out.stderr.trim()).unwrap();
    assert_eq!(v["error"]["kind"], "EntryCountMismatch");
    assert_eq!(v["status"], "error");

    let cone = write_fixture(dir.path(), "cone.mat", "1 2\n1 -1\n");
    let out = run(&["graver", &cone]);
    let v: Value = serde_json::from_str(out.stderr.trim()).unwrap();
    assert_eq!(v["error"]["kind"], "NotPointed");

    assert_eq!(run(&["frobnicate"]).exit_code, 2);
    assert_eq!(run(&["lift", &bad]).exit_code, 51);
}

#[test]
fn binary_end_to_end() {
    let dir = tempfile::tempdir().unwrap();
    let a = write_fixture(dir.path(), "A465.mat", "1 3\n4 6 5\n");
    let out = Command::new(env!("CARGO_BIN_EXE_toric-robust"))
        .args(["robust", &a, "--json"])
        .env_remove("TORIC_ROBUST_CACHE_DIR")
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["result"]["strongly_robust"], false);
    assert_eq!(v["result"]["indispensable_size"], 2);
}

#[test]
fn env_cache_dir_is_honored_and_flag_wins() {
    let dir = tempfile::tempdir().unwrap();
    let env_cache = dir.path().join("env");
    let flag_cache = dir.path().join("flag");
    let a = write_fixture(dir.path(), "A465.mat", "1 3\n4 6 5\n");
    let bin = env!("CARGO_BIN_EXE_toric-robust");
    let status = Command::new(bin)
        .args(["graver", &a])
        .env("TORIC_ROBUST_CACHE_DIR", &env_cache)
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    assert!(env_cache.is_dir());
    let status = Command::new(bin)
        .args(["graver", &a, "--cache-dir", flag_cache.to_str().unwrap()])
        .env("TORIC_ROBUST_CACHE_DIR", dir.path().join("unused"))
        .output()
        .unwrap()
        .status;
    assert!(status.success());
    assert!(flag_cache.is_dir());
    assert!(!dir.path().join("unused").exists());
}
