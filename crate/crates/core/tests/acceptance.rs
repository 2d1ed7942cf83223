//! Acceptance suite: one line per criterion, non-zero exit on any failure.
//!
//! Set `ACCEPTANCE_ONLY=1,8` to run a subset.

use std::process::ExitCode;

use psi_forge::shell::suites::{criteria, run};

fn main() -> ExitCode {
    let only: Option<Vec<u8>> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|s| s.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    // libtest-style flags from `cargo test` are ignored.
    let mut failures = 0;
    let mut ran = 0;
    for c in criteria() {
        if only.as_ref().is_some_and(|ids| !ids.contains(&c.id)) {
            continue;
        }
        let report = run(&c);
        println!("{}", report.line());
        ran += 1;
        if !report.passed() {
            failures += 1;
        }
    }
    println!("acceptance: {} of {ran} criteria passed", ran - failures);
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
