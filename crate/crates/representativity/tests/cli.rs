//! End-to-end checks of the `upsilon` binary: flags, JSON output, and the
//! exit-code contract (0 ok, 1 violation/failed re-validation, 2 bad input).

use serde_json::Value;
use std::process::{Command, Output};

fn upsilon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is one JSON value")
}

#[test]
fn analyze_named_host() {
    let out = upsilon(&["analyze", "--graph", "k5", "--pattern", "d5"]);
    assert!(out.status.success());
    let cert = stdout_json(&out);
    assert_eq!(cert["upsilon_v"], 1);
    assert_eq!(cert["upsilon_sym"], 5);
    assert_eq!(cert["pattern"], "d5");
}

#[test]
fn analyze_inline_graph6() {
    let out = upsilon(&["analyze", "--graph6", "Bw", "--pattern", "k3"]);
    assert!(out.status.success());
    let cert = stdout_json(&out);
    assert_eq!(cert["upsilon_v"], 1);
    assert_eq!(cert["upsilon_sym"], 3);
}

#[test]
fn invalid_inputs_exit_2() {
    let out = upsilon(&["analyze", "--graph6", "Bw$", "--pattern", "k3"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());

    let out = upsilon(&["analyze", "--graph", "k5", "--pattern", "zork9"]);
    assert_eq!(out.status.code(), Some(2));

    // clap usage errors share the same code
    let out = upsilon(&["analyze", "--pattern", "d5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn sweep_small_corpus_passes() {
    let out = upsilon(&["sweep", "--n", "5", "--pattern", "d5", "--check", "theorem22"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    assert_eq!(report["violations"].as_array().unwrap().len(), 0);
    assert_eq!(report["k5_excluded"], 1);
    assert_eq!(report["per_n_counts"]["5"], 21);
}

#[test]
fn sweep_reads_corpus_files_and_reports_bad_lines() {
    let dir = std::env::temp_dir().join(format!("upsilon-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("corpus.g6");
    // K6, one junk line, C5
    std::fs::write(&corpus, "E~~w\nnot graph6\nDqK\n").unwrap();
    let out = upsilon(&[
        "sweep",
        "--input",
        corpus.to_str().unwrap(),
        "--pattern",
        "d5",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["graphs_scanned"], 2);
    assert_eq!(report["corpus_errors"].as_array().unwrap().len(), 1);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn generate_counts_connected_classes() {
    let out = upsilon(&["generate", "--n", "4"]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout)
        .unwrap()
        .lines()
        .collect();
    assert_eq!(lines.len(), 6);

    let out = upsilon(&["generate", "--n", "9"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certify_round_trip_and_tamper_detection() {
    let dir = std::env::temp_dir().join(format!("upsilon-certify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let certs = dir.join("certs.jsonl");

    let out = upsilon(&[
        "analyze",
        "--graph",
        "k6",
        "--pattern",
        "d5",
        "--output",
        certs.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let out = upsilon(&["certify", "--input", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));

    let tampered = std::fs::read_to_string(&certs)
        .unwrap()
        .replace("\"upsilon_v\":2", "\"upsilon_v\":1");
    std::fs::write(&certs, tampered).unwrap();
    let out = upsilon(&["certify", "--input", certs.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn demo_subcommands() {
    let out = upsilon(&["demo", "equality", "--m", "3"]);
    assert!(out.status.success());
    let cert = stdout_json(&out);
    assert_eq!(cert["upsilon_v"], 3);
    assert_eq!(cert["upsilon_sym"], 15);

    let out = upsilon(&["demo", "chess", "--graph", "k5", "--k", "3"]);
    assert!(out.status.success());
    let cert = stdout_json(&out);
    assert_eq!(cert["upsilon_v"], 3);
    assert_eq!(cert["upsilon_sym"], 5);
    assert_eq!(cert["pattern"], "k3");
}

#[test]
fn lemma22_sweep_mode() {
    let out = upsilon(&["sweep", "--n", "4", "--check", "lemma22", "--trials", "8"]);
    assert!(out.status.success());
    let text = std::str::from_utf8(&out.stdout).unwrap();
    // one JSON report per corpus graph: 1 + 1 + 2 + 6
    assert_eq!(text.lines().count(), 10);
    for line in text.lines() {
        let report: Value = serde_json::from_str(line).unwrap();
        assert_eq!(report["failures"].as_array().unwrap().len(), 0);
    }
}

#[test]
fn worker_count_env_is_accepted() {
    let out = Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .env("UPSILON_WORKERS", "2")
        .args(["sweep", "--n", "4", "--pattern", "d5"])
        .output()
        .unwrap();
    assert!(out.status.success());
}
