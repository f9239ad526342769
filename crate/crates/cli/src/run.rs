//! Runs a parsed problem and renders the textual report.

use std::fmt::Write as _;

use skewgb::engine::{
    certify_left, certify_sigma, certify_skew, compare_left, compare_sigma, compare_skew,
    left_gbasis, sigma_gbasis, skew_gbasis, CertReport, GbConfig, GbError, GbResult, Mode,
    OracleReport,
};
use skewgb::letterplace::{certify_free, compare_free, free_gbasis, free_gbasis2};

use crate::problem::{Generators, Problem};
use crate::CliError;

/// Command line switches that affect a run.
#[derive(Debug, Clone, Copy, Default)]
pub struct Flags {
    pub certify: bool,
    pub oracle: bool,
    pub trace: bool,
    pub stats: bool,
    pub threads: Option<usize>,
}

/// What to print and the exit status.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

pub const EXIT_REFUSED: u8 = 2;
pub const EXIT_CERTIFICATION: u8 = 3;

fn refused(e: GbError) -> CliError {
    CliError::Refused(e.to_string())
}

struct Checks<T> {
    result: GbResult<T>,
    certificate: Option<CertReport>,
    oracle: Option<OracleReport>,
}

fn checked<T>(
    result: GbResult<T>,
    flags: &Flags,
    certify: impl FnOnce(&GbResult<T>) -> CertReport,
    compare: impl FnOnce(&GbResult<T>) -> Result<OracleReport, GbError>,
) -> Result<Checks<T>, CliError> {
    let certificate = flags.certify.then(|| certify(&result));
    let oracle = if flags.oracle {
        Some(compare(&result).map_err(refused)?)
    } else {
        None
    };
    Ok(Checks { result, certificate, oracle })
}

fn render<T>(checks: Checks<T>, flags: &Flags, show: impl Fn(&T) -> String) -> Report {
    let mut report = Report::default();
    let Checks { result, certificate, oracle } = checks;
    for line in &result.trace {
        let _ = writeln!(report.stdout, "trace: {line}");
    }
    for g in &result.basis {
        let _ = writeln!(report.stdout, "{}", show(g));
    }
    for w in &result.warnings {
        let _ = writeln!(report.stderr, "warning: {w}");
    }
    if flags.stats {
        let _ = writeln!(report.stdout, "basis_size: {}", result.basis.len());
        let _ = writeln!(report.stdout, "{}", result.stats);
    }
    if let Some(cert) = certificate {
        if cert.passed() {
            let _ = writeln!(report.stdout, "certification: passed ({} pairs)", cert.pairs);
        } else {
            let _ = writeln!(
                report.stdout,
                "certification: failed ({} of {} pairs)",
                cert.failures.len(),
                cert.pairs
            );
            for f in &cert.failures {
                let _ = writeln!(report.stderr, "certification failure: {f}");
            }
            report.code = EXIT_CERTIFICATION;
        }
    }
    if let Some(o) = oracle {
        if o.matches {
            let _ = writeln!(report.stdout, "oracle lm-ideals match");
        } else {
            let _ = writeln!(report.stdout, "oracle lm-ideals differ");
            for m in &o.main_only {
                let _ = writeln!(report.stderr, "only in the basis: {m}");
            }
            for m in &o.oracle_only {
                let _ = writeln!(report.stderr, "only in the oracle: {m}");
            }
            report.code = EXIT_CERTIFICATION;
        }
    }
    if result.unit_ideal {
        let _ = writeln!(report.stderr, "error: the ideal contains a nonzero constant");
        report.code = EXIT_REFUSED;
    }
    report
}

/// Runs the problem. Mathematical refusals come back as
/// [`CliError::Refused`]; a failed certification or oracle comparison sets
/// the report's exit code.
pub fn run(problem: &Problem, flags: &Flags) -> Result<Report, CliError> {
    let mut cfg: GbConfig = problem.config.clone();
    cfg.trace |= flags.trace;
    if flags.threads.is_some() {
        cfg.threads = flags.threads;
    }
    let alphabet = cfg.alphabet.clone();
    let report = match (&problem.generators, cfg.mode) {
        (Generators::Commutative(h), Mode::Sigma) => {
            let r = sigma_gbasis(h, &cfg).map_err(refused)?;
            let checks = checked(r, flags, |r| certify_sigma(r, &cfg), |r| compare_sigma(h, r, &cfg))?;
            render(checks, flags, |g| alphabet.polynomial_to_string(g))
        }
        (Generators::Skew(h), Mode::TwoSidedSkew) => {
            let r = skew_gbasis(h, &cfg).map_err(refused)?;
            let checks = checked(r, flags, |r| certify_skew(r, &cfg), |r| compare_skew(h, r, &cfg))?;
            render(checks, flags, |g| alphabet.skew_to_string(g))
        }
        (Generators::Skew(h), Mode::LeftSkew) => {
            let r = left_gbasis(h, &cfg).map_err(refused)?;
            let checks = checked(r, flags, |r| certify_left(r, &cfg), |r| compare_left(h, r, &cfg))?;
            render(checks, flags, |g| alphabet.skew_to_string(g))
        }
        (Generators::Free(h), Mode::Free | Mode::Free2) => {
            let r = if cfg.mode == Mode::Free {
                free_gbasis(h, &cfg)
            } else {
                free_gbasis2(h, &cfg)
            }
            .map_err(refused)?;
            let checks = checked(r, flags, |r| certify_free(r, &cfg), |r| compare_free(h, r, &cfg))?;
            render(checks, flags, |g| alphabet.free_to_string(g))
        }
        _ => unreachable!("generators are parsed according to the mode"),
    };
    Ok(report)
}
