//! Runs every verification suite and prints one line per check, then the
//! canonical JSON of one report.
//!
//!     cargo run --example verify_suites

use hollab::suites::{run_all_suites, run_suite};

fn main() {
    let reports = run_all_suites(0).unwrap();
    for r in &reports {
        print!("{}", r.render_text());
    }
    let total: usize = reports.iter().map(|r| r.checks.len()).sum();
    let failed: usize = reports.iter().map(|r| r.failed().len()).sum();
    println!(
        "\n{} suites, {total} checks, {failed} failures",
        reports.len()
    );

    let sample = run_suite("number-theory-lemmas", 0).unwrap();
    println!(
        "\ncanonical JSON of one report:\n{}",
        sample.canonical_json()
    );
}
