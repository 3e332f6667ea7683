//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use flagsbs::verify::{run_criterion, VerifyConfig, CRITERIA};

const BUDGET: Duration = Duration::from_secs(60);

fn pinned() -> VerifyConfig {
    VerifyConfig {
        tol: 1e-8,
        clearance_threshold: 0.4,
        grid: 24,
        samples: 1000,
        random_trials: 1000,
        equivariance_trials: 200,
        seed: 0,
    }
}

fn main() -> ExitCode {
    let cfg = pinned();
    let start = Instant::now();
    let mut failed = Vec::new();
    for id in CRITERIA {
        let outcome = run_criterion(id, &cfg).expect("criterion exists");
        println!("{outcome}");
        if !outcome.passed {
            failed.push(id);
        }
    }
    let elapsed = start.elapsed();
    let in_budget = elapsed < BUDGET;
    println!(
        "[{}] runtime: {:.2} s (budget {} s)",
        if in_budget { "PASS" } else { "FAIL" },
        elapsed.as_secs_f64(),
        BUDGET.as_secs()
    );
    if !in_budget {
        failed.push(0);
    }
    if failed.is_empty() {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failed {failed:?}");
        ExitCode::FAILURE
    }
}
