use std::path::PathBuf;
use std::time::Instant;

use rayon::prelude::*;

use crate::report::{Check, Status, VerificationReport};
use crate::CliError;

pub const SUITES: [&str; 9] =
    ["identities", "desmic-surface", "line-complex", "symmetry", "projection", "cremona", "char2", "supersingular", "lattices"];

#[derive(Clone, Debug)]
pub struct Options {
    pub primes: Vec<u64>,
    pub data_dir: PathBuf,
    pub budget_seconds: u64,
    pub timings: bool,
}

impl Default for Options {
    fn default() -> Self {
        Options { primes: vec![13, 17], data_dir: PathBuf::from("data"), budget_seconds: 600, timings: false }
    }
}

impl Options {
    pub fn data_file(&self, name: &str) -> Result<PathBuf, CliError> {
        let p = self.data_dir.join(name);
        if p.is_file() {
            Ok(p)
        } else {
            Err(CliError::DataMissing(p.display().to_string()))
        }
    }
}

pub struct Outcome {
    pub status: Status,
    pub details: String,
}

impl Outcome {
    pub fn pass(details: impl Into<String>) -> Self {
        Outcome { status: Status::Pass, details: details.into() }
    }

    pub fn fail(details: impl Into<String>) -> Self {
        Outcome { status: Status::Fail, details: details.into() }
    }

    pub fn evidence(details: impl Into<String>) -> Self {
        Outcome { status: Status::EvidenceOnly, details: details.into() }
    }

    pub fn verdict(ok: bool, details: impl Into<String>) -> Self {
        if ok {
            Self::pass(details)
        } else {
            Self::fail(details)
        }
    }
}

type CheckFn = Box<dyn Fn(&Options) -> Result<Outcome, String> + Send + Sync>;

pub struct CheckSpec {
    pub id: String,
    pub anchor: &'static str,
    run: CheckFn,
}

pub fn check(
    id: impl Into<String>,
    anchor: &'static str,
    run: impl Fn(&Options) -> Result<Outcome, String> + Send + Sync + 'static,
) -> CheckSpec {
    CheckSpec { id: id.into(), anchor, run: Box::new(run) }
}

/// Runs the checks on the current rayon pool; results keep declaration order.
pub fn run_checks(suite: &str, specs: Vec<CheckSpec>, opts: &Options) -> VerificationReport {
    let checks: Vec<Check> = specs
        .par_iter()
        .map(|s| {
            let t = Instant::now();
            let out = match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| (s.run)(opts))) {
                Ok(Ok(o)) => o,
                Ok(Err(e)) => Outcome::fail(format!("error: {e}")),
                Err(_) => Outcome::fail("panicked"),
            };
            Check {
                id: s.id.clone(),
                anchor: s.anchor.to_string(),
                status: out.status,
                details: out.details,
                elapsed_ms: opts.timings.then(|| t.elapsed().as_millis() as u64),
            }
        })
        .collect();
    VerificationReport::new(suite, checks)
}

/// Turns any displayable error into the check error string.
pub fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}
