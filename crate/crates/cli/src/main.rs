use std::io::Write;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand};
use skeinlab::diagram::{from_json, DEFAULT_MAX_STATES};
use skeinlab::rings::{specialize_skein, RootSpec};
use skeinlab::verify::{verify_suites, Config, SuiteReport, SUITE_NAMES};

/// Exact Kauffman bracket skein computations and identity checks.
#[derive(Parser)]
#[command(name = "skeinlab", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites; exits non-zero if any check fails.
    Verify {
        /// Suite names, or `all`.
        #[arg(required = true)]
        suites: Vec<String>,
        /// Restrict root-of-unity sweeps to zeta_n^a, written `n/a`.
        #[arg(long)]
        xi: Option<RootSpec>,
        /// Largest threading order N.
        #[arg(long = "N-max")]
        big_n_max: Option<u32>,
        /// Largest cyclotomic level in root sweeps.
        #[arg(long = "n-max")]
        n_max: Option<u32>,
        #[arg(long = "k-max")]
        k_max: Option<u32>,
        /// Run a single k.
        #[arg(long)]
        k: Option<u32>,
        /// Emit reports as JSON.
        #[arg(long)]
        json: bool,
        /// Refuse state sums with more states than this (at most 2^30).
        #[arg(long = "max-states", default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
        /// Include wall times in reports.
        #[arg(long)]
        timings: bool,
    },
    /// Evaluate a diagram file.
    Eval {
        #[arg(long)]
        diagram: std::path::PathBuf,
        /// Specialize at t = zeta_n^a.
        #[arg(long)]
        xi: Option<RootSpec>,
        #[arg(long = "max-states", default_value_t = DEFAULT_MAX_STATES)]
        max_states: u64,
    },
}

fn configure_workers() -> Result<()> {
    if let Ok(v) = std::env::var("SKEINLAB_WORKERS") {
        let n: usize = v.parse().with_context(|| format!("SKEINLAB_WORKERS={v:?} is not a count"))?;
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn print_reports(reports: &[SuiteReport], json: bool) -> Result<()> {
    let text = if json {
        serde_json::to_string_pretty(reports)? + "\n"
    } else {
        reports.iter().map(|r| r.to_string()).collect()
    };
    match std::io::stdout().lock().write_all(text.as_bytes()) {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

fn run(cli: Cli) -> Result<bool> {
    configure_workers()?;
    match cli.command {
        Command::Verify { suites, xi, big_n_max, n_max, k_max, k, json, max_states, timings } => {
            let names: Vec<String> = if suites.iter().any(|s| s == "all") {
                SUITE_NAMES.iter().map(|s| s.to_string()).collect()
            } else {
                suites
            };
            let cfg = Config { xi, n_max, big_n_max, k_max, k, max_states, timings };
            let reports = verify_suites(&names, &cfg)?;
            print_reports(&reports, json)?;
            Ok(reports.iter().all(SuiteReport::passed))
        }
        Command::Eval { diagram, xi, max_states } => {
            let text = std::fs::read_to_string(&diagram).with_context(|| format!("reading {}", diagram.display()))?;
            let d = from_json(&text)?;
            let v = d.evaluate_with(max_states)?;
            match xi {
                Some(xi) => println!("{}", specialize_skein(&v, xi)),
                None => println!("{v}"),
            }
            Ok(true)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
