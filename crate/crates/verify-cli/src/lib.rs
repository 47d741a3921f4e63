//! Verification suites over the desmic-kit crates, with text and JSON reports.

mod report;
mod runner;
pub mod suites;

pub use report::{Check, Counts, RunOptionsEcho, RunReport, Status, VerificationReport, SCHEMA_VERSION};
pub use runner::{Options, SUITES};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("data file missing: {0}")]
    DataMissing(String),
    #[error("cannot write {0}: {1}")]
    Write(String, String),
}

/// Runs one suite by name.
pub fn run_suite(name: &str, opts: &Options) -> Result<VerificationReport, CliError> {
    let specs = match name {
        "identities" => suites::identities::checks(),
        "desmic-surface" => suites::desmic::checks(),
        "line-complex" => suites::line_complex::checks(opts),
        "symmetry" => suites::symmetry::checks(),
        "projection" => suites::projection::checks(),
        "cremona" => suites::cremona::checks(),
        "char2" => {
            opts.data_file(suites::char2::DATA)?;
            suites::char2::checks()
        }
        "supersingular" => {
            suites::supersingular::ensure_cache(opts)?;
            suites::supersingular::checks()
        }
        "lattices" => {
            opts.data_file(suites::lattices::DATA)?;
            suites::lattices::checks()
        }
        other => return Err(CliError::UnknownSuite(other.to_string())),
    };
    Ok(runner::run_checks(name, specs, opts))
}

/// Runs a list of suites; "all" expands to every suite.
pub fn run(names: &[String], opts: &Options) -> Result<RunReport, CliError> {
    let mut list: Vec<&str> = Vec::new();
    for n in names {
        if n == "all" {
            list.extend(SUITES);
        } else if !list.contains(&n.as_str()) {
            list.push(n);
        }
    }
    let reports = list.iter().map(|n| run_suite(n, opts)).collect::<Result<Vec<_>, _>>()?;
    Ok(RunReport::new(RunOptionsEcho { primes: opts.primes.clone(), budget_seconds: opts.budget_seconds }, reports))
}
