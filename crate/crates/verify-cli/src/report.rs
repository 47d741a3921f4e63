use std::fmt::Write as _;

use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// Finite-field scan results: consistent with the claim but not a proof of it.
    EvidenceOnly,
    Skipped,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::EvidenceOnly => "evidence-only",
            Status::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub details: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub evidence_only: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub checks: Vec<Check>,
    pub counts: Counts,
}

impl VerificationReport {
    pub fn new(suite: &str, checks: Vec<Check>) -> Self {
        let mut counts = Counts::default();
        for c in &checks {
            match c.status {
                Status::Pass => counts.pass += 1,
                Status::Fail => counts.fail += 1,
                Status::EvidenceOnly => counts.evidence_only += 1,
                Status::Skipped => counts.skipped += 1,
            }
        }
        VerificationReport { suite: suite.to_string(), checks, counts }
    }

    pub fn failed(&self) -> bool {
        self.counts.fail > 0
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunOptionsEcho {
    pub primes: Vec<u64>,
    pub budget_seconds: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub options: RunOptionsEcho,
    pub suites: Vec<VerificationReport>,
    pub failed: usize,
}

impl RunReport {
    pub fn new(options: RunOptionsEcho, suites: Vec<VerificationReport>) -> Self {
        let failed = suites.iter().map(|s| s.counts.fail).sum();
        RunReport { schema: SCHEMA_VERSION, options, suites, failed }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        for suite in &self.suites {
            let c = &suite.counts;
            let _ = writeln!(
                s,
                "== {} ({} pass, {} fail, {} evidence-only, {} skipped)",
                suite.suite, c.pass, c.fail, c.evidence_only, c.skipped
            );
            for ch in &suite.checks {
                let t = ch.elapsed_ms.map(|ms| format!(" [{ms} ms]")).unwrap_or_default();
                let _ = writeln!(s, "  {:<13} {:<28} {}{}", ch.status.label(), ch.id, ch.anchor, t);
                if !ch.details.is_empty() {
                    for line in ch.details.lines() {
                        let _ = writeln!(s, "                {line}");
                    }
                }
            }
        }
        let _ = writeln!(s, "{} failed check(s)", self.failed);
        s
    }
}
