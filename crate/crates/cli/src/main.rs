use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use flagsbs::verify::VerifyConfig;
use flagsbs_cli::{
    cmd_classify, cmd_fiber, cmd_moduli, cmd_sample, cmd_spheres, cmd_verify, parse_complex,
    parse_point, to_json, verify_status, CliError, DivisorInput, SpheresOptions,
};
use num_complex::Complex64;
use serde::Serialize;

/// Divisors on the flag threefold and the lagrangian spheres in their complements.
#[derive(Debug, Parser)]
#[command(name = "flagsbs", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Common {
    /// Divisor JSON file (`-` for stdin).
    #[arg(long)]
    input: PathBuf,
    /// Relative tolerance for clustering and rank decisions.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Stratum, eigenvalues, centers and reducibility of a divisor.
    Classify {
        #[command(flatten)]
        common: Common,
    },
    /// Clearance, lagrangian residual and homology class of the three GZ spheres.
    Spheres {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 24)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// The point of D over [x].
    Fiber {
        #[command(flatten)]
        common: Common,
        /// Three coordinates `re,im;re,im;re,im`.
        #[arg(long, value_parser = parse_point, allow_hyphen_values = true)]
        x: [Complex64; 3],
    },
    /// Covering fiber and moduli points, or membership of (A, z) in Y and Δ.
    Moduli {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
        z: Option<Complex64>,
    },
    /// Stratum frequencies over a seeded random ensemble.
    Sample {
        #[arg(long, default_value_t = 1000)]
        count: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// ginibre, jordan2, jordan3, rank1 or eigenspace.
        #[arg(long, default_value = "ginibre")]
        ensemble: String,
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
    },
    /// Run the built-in acceptance suite.
    Verify {
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        #[arg(long, default_value_t = 24)]
        grid: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 0.4, hide = true)]
        clearance_threshold: f64,
    },
}

fn emit<T: Serialize>(report: &T) {
    emit_line(&to_json(report));
}

fn emit_line(line: &str) {
    // a closed pipe on stdout is not an error worth reporting
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Classify { common } => {
            emit(&cmd_classify(
                &DivisorInput::load(&common.input)?,
                common.tol,
            )?);
        }
        Command::Spheres {
            common,
            samples,
            grid,
            seed,
        } => {
            let opts = SpheresOptions {
                samples,
                grid,
                seed,
                tol: common.tol,
            };
            emit(&cmd_spheres(&DivisorInput::load(&common.input)?, &opts)?);
        }
        Command::Fiber { common, x } => {
            emit(&cmd_fiber(
                &DivisorInput::load(&common.input)?,
                x,
                common.tol,
            )?);
        }
        Command::Moduli { common, z } => {
            emit(&cmd_moduli(
                &DivisorInput::load(&common.input)?,
                z,
                common.tol,
            )?);
        }
        Command::Sample {
            count,
            seed,
            ensemble,
            tol,
        } => {
            emit(&cmd_sample(count, seed, &ensemble, tol)?);
        }
        Command::Verify {
            tol,
            samples,
            grid,
            seed,
            clearance_threshold,
        } => {
            let cfg = VerifyConfig {
                tol,
                samples,
                grid,
                seed,
                clearance_threshold,
                ..VerifyConfig::default()
            };
            let report = cmd_verify(&cfg);
            for outcome in &report.outcomes {
                eprintln!("{outcome}");
            }
            emit(&report);
            verify_status(&report)?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            if let Some(report) = e.report() {
                emit_line(report);
            }
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
