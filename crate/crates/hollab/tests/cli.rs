//! End-to-end checks of the binary: subcommands, formats, and exit codes.

use std::process::Command;

fn run(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_hollab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn homology_both_mode_agrees_and_exits_zero() {
    let (stdout, _, code) = run(&[
        "homology", "--p", "2", "--r", "3", "--qmax", "6", "--mode", "both",
    ]);
    assert_eq!(code, 0);
    // seven data rows, one per degree, all agreeing
    assert_eq!(stdout.matches("| agree |").count(), 7);
    assert!(stdout.contains("| 3 | Z/2 + Z/2 + Z/2 + Z/2 + Z/8 |"));
}

#[test]
fn homology_csv_round_trips_through_the_emitted_file() {
    let (stdout, _, code) = run(&[
        "homology", "--p", "3", "--r", "1", "--qmax", "4", "--format", "csv",
    ]);
    assert_eq!(code, 0);
    let parsed = hollab::cli::Table::parse_csv(&stdout).unwrap();
    let (table, _) = hollab::cli::cmd_homology(3, 1, 4, hollab::cli::HomologyMode::Both).unwrap();
    assert_eq!(parsed, table);
    assert_eq!(parsed.rows[3][2], "Z/2 + Z/3");
}

#[test]
fn json_output_round_trips() {
    let (stdout, _, code) = run(&[
        "cohomology-ranks",
        "--p",
        "2",
        "--r",
        "4",
        "--qmax",
        "8",
        "--format",
        "json",
    ]);
    assert_eq!(code, 0);
    let parsed = hollab::cli::Table::parse_json(&stdout).unwrap();
    let direct = hollab::cli::cmd_cohomology_ranks(2, 4, 8).unwrap();
    assert_eq!(parsed, direct);
}

#[test]
fn usage_errors_exit_two() {
    let (_, stderr, code) = run(&["homology", "--p", "2", "--r", "1"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no closed-form table"));

    let (_, _, code) = run(&["homology", "--p", "2"]);
    assert_eq!(code, 2); // missing required flag

    let (_, _, code) = run(&["dickson", "--n", "2", "--p", "3", "--mode", "r3"]);
    assert_eq!(code, 2);

    let (_, _, code) = run(&["verify", "--suite", "bogus"]);
    assert_eq!(code, 2);

    let (_, _, code) = run(&["homology", "--p", "2", "--r", "3", "--format", "bogus"]);
    assert_eq!(code, 2);
}

#[test]
fn verify_suite_passes_and_respects_thread_cap() {
    let (stdout, _, code) = run(&["verify", "--suite", "number-theory-lemmas"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("5/5 checks passed"));

    let out = Command::new(env!("CARGO_BIN_EXE_hollab"))
        .args(["verify", "--suite", "ring-hilbert", "--format", "json"])
        .env("HOLLAB_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let reports: Vec<serde_json::Value> = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(reports[0]["suite"], "ring-hilbert");
    assert!(reports[0]["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
}

#[test]
fn dickson_prints_witness() {
    let (stdout, _, code) = run(&["dickson", "--n", "2", "--p", "2", "--mode", "r3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("v1*v2^2 + v1^2*v2"));
    assert!(stdout.contains("nonzero: yes"));
}

#[test]
fn congruence_checks_pass() {
    let (stdout, _, code) = run(&["congruence", "--n", "1", "--k", "2", "--p", "3"]);
    assert_eq!(code, 0);
    assert!(!stdout.contains("fail"));
}
