//! `skewgb`: batch front end. Reads a problem file, computes the truncated
//! Gröbner basis it describes and prints one element per line.
//!
//! Exit status: 0 on success, 1 for usage and parse errors, 2 when the
//! computation is refused on mathematical grounds, 3 when `--certify` or
//! `--oracle` finds a discrepancy.

mod problem;
mod run;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use thiserror::Error;

use problem::Problem;
use run::{Flags, EXIT_REFUSED};

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{0}")]
    Refused(String),
}

impl CliError {
    pub fn parse(line: usize, column: usize, message: impl Into<String>) -> CliError {
        CliError::Parse {
            line,
            column,
            message: message.into(),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } => 1,
            CliError::Refused(_) => EXIT_REFUSED,
        }
    }
}

/// Truncated Gröbner bases of difference ideals, skew polynomial ideals and
/// homogeneous ideals of the free algebra.
#[derive(Debug, Parser)]
#[command(name = "skewgb", version)]
struct Cli {
    /// Problem file: `key: value` header, blank line, one generator per line.
    problem: PathBuf,
    /// Check every in-window critical pair of the result.
    #[arg(long)]
    certify: bool,
    /// Compare the leading monomial ideal with a brute-force computation.
    #[arg(long)]
    oracle: bool,
    /// Print one line per processed pair.
    #[arg(long)]
    trace: bool,
    /// Worker threads for pair reduction.
    #[arg(long, value_name = "N")]
    threads: Option<usize>,
    /// Print pair statistics.
    #[arg(long)]
    stats: bool,
}

fn execute(cli: &Cli) -> Result<run::Report, CliError> {
    let src = std::fs::read_to_string(&cli.problem)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", cli.problem.display())))?;
    let problem = Problem::parse(&src, cli.problem.parent())?;
    let flags = Flags {
        certify: cli.certify,
        oracle: cli.oracle,
        trace: cli.trace,
        stats: cli.stats,
        threads: cli.threads,
    };
    run::run(&problem, &flags)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match execute(&cli) {
        Ok(report) => {
            print!("{}", report.stdout);
            eprint!("{}", report.stderr);
            let _ = std::io::stdout().flush();
            ExitCode::from(report.code)
        }
        Err(e) => {
            eprintln!("error: {}: {e}", cli.problem.display());
            ExitCode::from(e.exit_code())
        }
    }
}
