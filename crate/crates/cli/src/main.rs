//! `hessenberg`: Betti numbers of regular Hessenberg varieties from the
//! command line.
//!
//! Exit codes: 0 success, 1 usage or parse error, 2 budget exceeded,
//! 3 mathematical invariant violated.

mod commands;
mod spec;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hessenberg_core::sweep::{DEFAULT_ORACLE_MAX_M_H, DEFAULT_RANK_CAP};
use hessenberg_core::{Error, DEFAULT_GROUP_BUDGET};

#[derive(Parser, Debug)]
#[command(
    name = "hessenberg",
    version,
    about = "Betti numbers of regular Hessenberg varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of the variety for one (system, H, J).
    Betti(JobArgs),
    /// Subsets of Weyl type, their representatives and witness counts.
    WeylType(JobArgs),
    /// The witness bijection W(J, S) → W(K, Sᶜ), with intermediates.
    Bijection(JobArgs),
    /// Exhaustive check of every system, Hessenberg space and J.
    Verify(VerifyArgs),
    /// The root table of a system.
    Roots(RootsArgs),
}

#[derive(Args, Debug)]
struct JobArgs {
    /// Root system label such as A2, B3, G2.
    system: String,
    /// full | borel | afunc:h1,…,hn | height:N | roots:c1,…;c1,…
    #[arg(long)]
    hess: String,
    /// all | none | comma-separated 1-based simple-root indices.
    #[arg(long, default_value = "all")]
    j: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value_t = 3)]
    max_rank: usize,
    /// Type letters to include, e.g. ABG. All types by default.
    #[arg(long)]
    types: Option<String>,
    /// Extra system to include regardless of the rank and type filters.
    #[arg(long = "system")]
    systems: Vec<String>,
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Largest Weyl group order allowed.
    #[arg(long, default_value_t = DEFAULT_GROUP_BUDGET)]
    group_budget: usize,
    #[arg(long, default_value_t = DEFAULT_RANK_CAP)]
    rank_cap: usize,
    /// Largest m_H for the brute-force Weyl-type oracle.
    #[arg(long, default_value_t = DEFAULT_ORACLE_MAX_M_H)]
    oracle_max_m_h: usize,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug)]
struct RootsArgs {
    system: String,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args, Debug, Clone)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    #[value(alias = "json-like")]
    Json,
}

/// A command failure carrying its exit code.
pub enum Failure {
    Core(Error),
    /// The computation finished but found violations; the report is still
    /// written.
    Violations(String),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::BudgetExceeded { .. }) => 2,
            Failure::Core(Error::Invariant(_)) | Failure::Violations(_) => 3,
            Failure::Core(_) | Failure::Io(_) => 1,
        }
    }

    fn message(&self) -> String {
        match self {
            Failure::Core(e) => e.to_string(),
            Failure::Violations(s) => s.clone(),
            Failure::Io(e) => format!("i/o error: {e}"),
        }
    }
}

fn emit(output: &OutputArgs, body: &str) -> std::io::Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, body),
        None => std::io::stdout().lock().write_all(body.as_bytes()),
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Betti(a) => {
            let job = commands::Job::parse(&a.system, &a.hess, &a.j)?;
            emit(&a.output, &commands::betti(&job, a.output.format)?)?;
        }
        Command::WeylType(a) => {
            let job = commands::Job::parse(&a.system, &a.hess, &a.j)?;
            emit(&a.output, &commands::weyl_type(&job, a.output.format)?)?;
        }
        Command::Bijection(a) => {
            let job = commands::Job::parse(&a.system, &a.hess, &a.j)?;
            emit(&a.output, &commands::bijection(&job, a.output.format)?)?;
        }
        Command::Roots(a) => {
            emit(&a.output, &commands::roots(&a.system, a.output.format)?)?;
        }
        Command::Verify(a) => {
            let config = commands::verify_config(
                a.max_rank,
                a.types.as_deref(),
                &a.systems,
                a.jobs,
                a.group_budget,
                a.rank_cap,
                a.oracle_max_m_h,
            )?;
            let report = hessenberg_core::run_sweep(&config)?;
            eprintln!(
                "checked {} cases in {:.2?}",
                report.cases_checked, report.wall_time
            );
            emit(
                &a.output,
                &commands::render_report(&report, a.output.format),
            )?;
            if !report.passed() {
                return Err(Failure::Violations(format!(
                    "{} invariant violations",
                    report.violations.len()
                )));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.exit_code())
        }
    }
}
