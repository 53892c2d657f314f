//! End-to-end tests of the binary: exit codes, report shapes, agreement
//! between text and JSON modes, and the cache flow.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

use seqsat::bounds::BoundReport;
use seqsat::predicates::{Verdict, VerdictStatus};
use seqsat::search::{ConjectureReport, PointStatus, SearchResult};

fn run(args: &[&str]) -> (i32, String, String) {
    run_with(args, &[])
}

fn run_with(args: &[&str], envs: &[(&str, &str)]) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_seqsat"));
    cmd.args(args).env_remove("SEQSAT_CACHE");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let out = cmd.output().expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).expect("stdout is utf-8"),
        String::from_utf8(out.stderr).expect("stderr is utf-8"),
    )
}

fn temp_file(tag: &str) -> PathBuf {
    std::env::temp_dir().join(format!("seqsat-cli-{tag}-{}", std::process::id()))
}

/// Emitted JSON re-parses to an equal value (through the typed schema).
fn round_trips<T: serde::de::DeserializeOwned + serde::Serialize>(json: &str) {
    let typed: T = serde_json::from_str(json).expect("stdout parses into the report type");
    let reparsed: Value = serde_json::from_str(json).unwrap();
    assert_eq!(serde_json::to_value(&typed).unwrap(), reparsed);
}

#[test]
fn check_accepts_a_saturated_host() {
    let seq = "0,1,2,1,3,1,4,5,4,1,6,1,0";
    let (code, stdout, _) =
        run(&["check", "--kind", "sat", "--pattern", "abab", "--n", "7", "--sequence", seq]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert_eq!(stdout.trim(), "SATURATED");

    let (code, stdout, _) = run(&[
        "check", "--kind", "sat", "--pattern", "abab", "--n", "7", "--sequence", seq,
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    round_trips::<Verdict>(&stdout);
    let verdict: Verdict = serde_json::from_str(&stdout).unwrap();
    assert_eq!(verdict.status, VerdictStatus::Saturated);
}

#[test]
fn check_reports_failures_with_exit_one() {
    let (code, stdout, _) =
        run(&["check", "--kind", "sat", "--pattern", "abab", "--n", "3", "--sequence", "0,1,0"]);
    assert_eq!(code, 1);
    assert!(stdout.contains("ADMISSIBLE_INSERTION"), "stdout: {stdout}");

    // Over a 2-letter alphabet the same sequence blocks every insertion.
    let (code, stdout, _) =
        run(&["check", "--kind", "ssat", "--pattern", "abab", "--n", "2", "--sequence", "0,1,0"]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert_eq!(stdout.trim(), "SEMISATURATED");
}

#[test]
fn check_anchored_and_structure_kinds() {
    // A bundled row that blocks insertions only under anchored alternations.
    let row = "0,1,2,0,1,2,0,3,4,3,4";
    let (code, _, _) =
        run(&["check", "--kind", "ssat", "--pattern", "ababa", "--n", "5", "--sequence", row]);
    assert_eq!(code, 1);
    let (code, stdout, _) =
        run(&["check", "--kind", "ssat-anchored", "--s", "3", "--n", "5", "--sequence", row]);
    assert_eq!(code, 0, "stdout: {stdout}");

    let host = "0,1,2,1,3,1,4,5,4,1,6,1,0";
    let (code, stdout, _) =
        run(&["check", "--kind", "structure", "--s", "2", "--n", "7", "--sequence", host]);
    assert_eq!(code, 0, "stdout: {stdout}");
    assert!(stdout.contains("all checks hold"));
}

#[test]
fn bounds_reports_the_alternation_window() {
    let (code, stdout, _) =
        run(&["bounds", "--target", "xi", "--n", "7", "--s", "3", "--format", "json"]);
    assert_eq!(code, 0);
    round_trips::<BoundReport>(&stdout);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["lower"], 10);
    assert_eq!(v["upper"], 19);

    // Text and JSON agree on the headline numbers.
    let (code, text, _) = run(&["bounds", "--target", "xi", "--n", "7", "--s", "3"]);
    assert_eq!(code, 0);
    let headline = text.lines().next().unwrap();
    assert!(headline.contains("lower 10") && headline.contains("upper 19"), "{headline}");

    let (code, stdout, _) =
        run(&["bounds", "--target", "sat", "--pattern", "abca", "--n", "6", "--format", "json"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["lower"], 6);
    assert_eq!(v["upper"], 6);
    assert_eq!(v["exact"], true);
}

#[test]
fn search_computes_the_known_minimum() {
    let (code, stdout, _) =
        run(&["search", "--pattern", "abab", "--n", "4", "--kind", "sat", "--format", "json"]);
    assert_eq!(code, 0);
    round_trips::<SearchResult>(&stdout);
    let result: SearchResult = serde_json::from_str(&stdout).unwrap();
    assert_eq!(result.exact(), Some(7));

    let (code, text, _) = run(&["search", "--pattern", "abab", "--n", "4", "--kind", "sat"]);
    assert_eq!(code, 0);
    assert!(text.contains("value 7 (exact)"), "text: {text}");
}

#[test]
fn search_budget_exhaustion_exits_three() {
    let (code, stdout, _) = run(&[
        "search", "--pattern", "abab", "--n", "5", "--kind", "sat", "--budget", "10",
        "--format", "json",
    ]);
    assert_eq!(code, 3);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["value"]["status"], "BUDGET_EXCEEDED");
}

#[test]
fn search_enumerate_returns_every_witness() {
    let (code, stdout, _) = run(&[
        "search", "--pattern", "abab", "--n", "3", "--kind", "ssat", "--enumerate",
        "--format", "json",
    ]);
    assert_eq!(code, 0);
    let result: SearchResult = serde_json::from_str(&stdout).unwrap();
    assert_eq!(result.witnesses.len() as u64, result.witness_count);
    assert!(result.witness_count > 0);
}

#[test]
fn search_cache_serves_the_second_run() {
    let path = temp_file("cache");
    let path_str = path.to_str().unwrap();
    let args =
        ["search", "--pattern", "abab", "--n", "5", "--kind", "ssat", "--cache", path_str,
         "--format", "json"];
    let (code, first, stderr) = run(&args);
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(stderr.contains("stored result"), "stderr: {stderr}");

    let (code, second, stderr) = run(&args);
    assert_eq!(code, 0);
    assert!(stderr.contains("cache: hit"), "stderr: {stderr}");
    assert_eq!(first, second, "cached run must reproduce the report exactly");

    // A doctored witness invalidates the entry; the value is recomputed.
    // (Canonical 2-sparse witnesses always open with 0,1; 0,0 breaks
    // sparsity while staying inside the alphabet, so only the semantic
    // re-verification can catch it.)
    let doctored = std::fs::read_to_string(&path)
        .unwrap()
        .replace("\"witnesses\":[[0,1,", "\"witnesses\":[[0,0,");
    std::fs::write(&path, doctored).unwrap();
    let (code, third, stderr) = run(&args);
    assert_eq!(code, 0);
    assert!(stderr.contains("dropped"), "stderr: {stderr}");
    assert!(!stderr.contains("cache: hit"), "stderr: {stderr}");
    assert_eq!(first, third);
    let _ = std::fs::remove_file(&path);
}

#[test]
fn cache_path_comes_from_the_environment_too() {
    let path = temp_file("env-cache");
    let (code, _, stderr) = run_with(
        &["search", "--pattern", "ab", "--n", "4", "--kind", "ex"],
        &[("SEQSAT_CACHE", path.to_str().unwrap())],
    );
    assert_eq!(code, 0, "stderr: {stderr}");
    assert!(path.exists(), "the env-configured cache file was not written");
    let _ = std::fs::remove_file(&path);
}

#[test]
fn conjecture_sweeps_confirm_and_refute() {
    let (code, stdout, _) = run(&[
        "conjectures", "--which", "sat-alt", "--s", "2", "--n-max", "4", "--format", "json",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    round_trips::<ConjectureReport>(&stdout);
    let report: ConjectureReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.all_confirmed());

    let (code, stdout, _) = run(&[
        "conjectures", "--which", "ssat-alt", "--s", "2", "--n-max", "3", "--format", "json",
    ]);
    assert_eq!(code, 1, "a formula that overshoots the computed minimum must refute");
    let report: ConjectureReport = serde_json::from_str(&stdout).unwrap();
    assert!(report.refuted());
    assert!(report
        .points
        .iter()
        .all(|p| p.status == PointStatus::Refuted && p.counterexample.is_some()));

    let (code, stdout, _) = run(&["conjectures", "--which", "tables", "--format", "json"]);
    assert_eq!(code, 0);
    let report: ConjectureReport = serde_json::from_str(&stdout).unwrap();
    assert_eq!(report.points.len(), 32);
    assert!(report.all_confirmed());
}

#[test]
fn tables_render_in_all_three_formats() {
    let (code, csv, _) = run(&["tables", "--which", "sat", "--format", "csv"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = csv.trim().lines().collect();
    assert_eq!(lines[0], "s,n,length,conjectured_length,verification,sequence");
    assert_eq!(lines.len(), 17, "16 rows plus the header");
    assert!(lines[1..].iter().all(|l| l.contains(",STRICT,")));

    let (code, json, _) = run(&["tables", "--which", "ssat", "--format", "json"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = serde_json::from_str(&json).unwrap();
    assert_eq!(rows.len(), 16);
    for row in &rows {
        assert_eq!(row["length"], row["conjectured_length"]);
        let v = row["verification"].as_str().unwrap();
        assert!(v == "STRICT" || v == "ANCHORED", "row failed: {row}");
    }

    let (code, text, _) = run(&["tables", "--which", "ssat"]);
    assert_eq!(code, 0);
    assert!(text.lines().count() == 17 && text.contains("sequence"));
}

#[test]
fn construct_emits_verified_sequences() {
    let (code, stdout, _) = run(&[
        "construct", "--construction", "alt-sat", "--n", "5", "--s", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verified"], true);
    assert_eq!(v["length"], 9);
    assert_eq!(v["sequence"], "0,1,0,2,0,3,0,4,0");

    // Text mode: sequence line, then the same metadata as JSON.
    let (code, text, _) = run(&["construct", "--construction", "alt-sat", "--n", "5", "--s", "2"]);
    assert_eq!(code, 0);
    let mut lines = text.trim().lines();
    assert_eq!(lines.next().unwrap(), "0,1,0,2,0,3,0,4,0");
    let meta: Value = serde_json::from_str(lines.next().unwrap()).unwrap();
    assert_eq!(meta["claimed_length"], 9);

    let (code, stdout, _) = run(&[
        "construct", "--construction", "double-last", "--pattern", "ab", "--n", "3",
        "--host", "0", "--format", "json",
    ]);
    assert_eq!(code, 0, "stdout: {stdout}");
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verified"], true);

    let (code, stdout, _) = run(&[
        "construct", "--construction", "ssat-alt", "--n", "6", "--s", "3", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["verified"], true);
}

#[test]
fn usage_errors_exit_two() {
    // clap-level: unknown subcommand and missing required flag.
    let (code, _, _) = run(&["frobnicate"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["search", "--pattern", "abab", "--n", "4"]);
    assert_eq!(code, 2);
    // application-level: missing dependent flag, bad pattern, bad letters.
    let (code, _, stderr) = run(&["bounds", "--target", "xi", "--n", "7"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("--s is required"), "stderr: {stderr}");
    let (code, _, _) = run(&[
        "check", "--kind", "sat", "--pattern", "a,,b", "--n", "3", "--sequence", "0",
    ]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&[
        "check", "--kind", "sat", "--pattern", "ab", "--n", "2", "--sequence", "0,5",
    ]);
    assert_eq!(code, 2);
    // csv is reserved for the tables.
    let (code, _, _) =
        run(&["bounds", "--target", "xi", "--n", "7", "--s", "3", "--format", "csv"]);
    assert_eq!(code, 2);
}
