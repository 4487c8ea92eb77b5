//! Verification workbench CLI for lattice 2-gauge theory: exact checks over
//! finite crossed modules and numeric checks for represented 2-R-matrices.
//!
//! Exit codes: 0 all selected checks pass; 1 at least one check fails;
//! 2 schema violation in an input file; 3 enumeration budget exceeded.
//! Thread count is controlled by the `L2CS_THREADS` environment variable.

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use l2cs_core::report::Report;
use l2cs_core::CoreError;
use std::path::PathBuf;
use std::process::ExitCode;

mod suites;

#[derive(Debug, Parser)]
#[command(
    name = "l2cs",
    version,
    about = "Lattice 2-gauge theory verification workbench"
)]
struct Cli {
    /// Output format for the report.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for the sampled checks.
    #[arg(long, global = true, default_value_t = 7)]
    seed: u64,
    /// Raw-enumeration budget (number of candidate decorations).
    #[arg(long, global = true, default_value_t = 1u128 << 34)]
    budget: u128,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Validate a crossed-module file: group axioms, Peiffer identities,
    /// interchange and inversion laws.
    #[command(name = "validate-2group")]
    Validate2group {
        #[arg(long)]
        group: PathBuf,
    },
    /// Enumerate flat decorations of a lattice and cross-check against the
    /// raw brute-force filter.
    EnumerateFlat {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        group: PathBuf,
        /// Skip the brute-force cross-check.
        #[arg(long)]
        no_oracle: bool,
    },
    /// Gauge-orbit partition of the flat set, with projector-rank and
    /// observable-dimension agreement.
    Orbits {
        #[arg(long)]
        lattice: PathBuf,
        #[arg(long)]
        group: PathBuf,
    },
    /// Hopf identity suite on the coordinate ring of a finite 2-group.
    HopfCheck {
        #[arg(long)]
        group: PathBuf,
        /// coassoc | cointerchange | antipode | equivariance | all
        #[arg(long, default_value = "all")]
        suite: String,
        /// Extra state file (sparse configuration-index map) to include in
        /// the identity sweep.
        #[arg(long)]
        state: Option<PathBuf>,
    },
    /// Hopf suite on the 2-gauge parameters.
    GaugeHopfCheck {
        #[arg(long)]
        group: PathBuf,
        /// sec | covariance | antipode | bimonoid | all
        #[arg(long, default_value = "all")]
        suite: String,
    },
    /// Graded Yang-Baxter suite for a quantum 2-R-matrix file.
    YbeCheck {
        #[arg(long)]
        rmatrix: PathBuf,
        /// Also run the represented coproduct checks (quasitriangularity and
        /// the antipode contraction) for the standard 2-dimensional family.
        #[arg(long)]
        with_coproduct: bool,
    },
    /// Fock-Rosly bracket suite for a classical 2-r-matrix file.
    FockRosly {
        #[arg(long)]
        lie2: PathBuf,
        #[arg(long)]
        r: PathBuf,
        #[arg(long, default_value_t = 4.0)]
        k: f64,
    },
    /// Semiclassical ladder for the standard quantum family.
    Semiclassical {
        #[arg(long, default_value_t = 7)]
        ladder: usize,
        #[arg(long, default_value_t = 0.1)]
        hbar0: f64,
        /// Run the deliberately mismatched-target control as well.
        #[arg(long)]
        with_control: bool,
    },
    /// Lattice 2-algebra suite on the fundamental lattice.
    Lattice2 {
        #[arg(long)]
        group: PathBuf,
        /// covariance | braid | star | observables | all
        #[arg(long, default_value = "all")]
        check: String,
    },
    /// Run the full suite over the built-in example library.
    Report,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Ok(threads) = std::env::var("L2CS_THREADS") {
        if let Ok(n) = threads.parse::<usize>() {
            let _ = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build_global();
        }
    }
    match run(&cli) {
        Ok(report) => {
            let passed = report.all_passed();
            if let Err(e) = emit(&cli, &report) {
                eprintln!("error writing report: {e}");
                return ExitCode::from(2);
            }
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            let code = match e.downcast_ref::<CoreError>() {
                Some(CoreError::BudgetExceeded { .. }) => 3,
                Some(CoreError::Schema(_))
                | Some(CoreError::Json(_))
                | Some(CoreError::Io(_))
                | Some(CoreError::MalformedTable(_)) => 2,
                _ => 1,
            };
            ExitCode::from(code)
        }
    }
}

fn emit(cli: &Cli, report: &Report) -> anyhow::Result<()> {
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv(),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).context("writing report file")?,
        None => print!("{text}"),
    }
    Ok(())
}

fn run(cli: &Cli) -> anyhow::Result<Report> {
    let started = std::time::Instant::now();
    let mut report = match &cli.command {
        Command::Validate2group { group } => suites::validate_2group(group)?,
        Command::EnumerateFlat {
            lattice,
            group,
            no_oracle,
        } => suites::enumerate_flat(lattice, group, cli.budget, !no_oracle)?,
        Command::Orbits { lattice, group } => suites::orbits(lattice, group, cli.budget)?,
        Command::HopfCheck { group, suite, state } => {
            suites::hopf_check(group, suite, state.as_deref())?
        }
        Command::GaugeHopfCheck { group, suite } => suites::gauge_hopf_check(group, suite)?,
        Command::YbeCheck {
            rmatrix,
            with_coproduct,
        } => suites::ybe_check(rmatrix, *with_coproduct)?,
        Command::FockRosly { lie2, r, k } => suites::fock_rosly(lie2, r, *k, cli.seed)?,
        Command::Semiclassical {
            ladder,
            hbar0,
            with_control,
        } => suites::semiclassical(*ladder, *hbar0, *with_control)?,
        Command::Lattice2 { group, check } => suites::lattice2(group, check)?,
        Command::Report => suites::full_report(cli.budget, cli.seed)?,
    };
    report.seed = cli.seed;
    report.header.timestamp = unix_now();
    report
        .header
        .wall_time_ms
        .insert("total".into(), started.elapsed().as_millis());
    Ok(report)
}

/// Timestamp isolated to the header: seconds since the epoch.
fn unix_now() -> String {
    let now = std::time::SystemTime::now()
        .duration_since(std::time::UNIX_EPOCH)
        .map(|d| d.as_secs())
        .unwrap_or(0);
    format!("unix:{now}")
}
