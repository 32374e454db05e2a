//! Check reports, corpora, the claim-verification suite, the order-7
//! exception enumeration, and the parameter sweep.

pub mod checks;
pub mod corpus;
pub mod exceptions;
pub mod sweep;

pub use checks::{verify_paper, VerifyOptions};
pub use corpus::{build_corpus, CorpusGraph, CorpusSpec};
pub use exceptions::{enumerate_exceptions, ExceptionClass, ExceptionsReport};
pub use sweep::{sweep, sweep_graphs, SweepRow, SweepTable};

use serde::Serialize;
use std::fmt::Write as _;
use std::time::Duration;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

/// One verified claim. `claim` states the mathematical fact being checked;
/// `expected`/`actual` are exact renderings (rationals as `p/q`, never
/// decimals); `witness` carries the certificate or the first counterexample.
#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub claim: String,
    pub status: CheckStatus,
    pub expected: String,
    pub actual: String,
    pub witness: String,
    /// Excluded from the machine-readable report so identical inputs give
    /// byte-identical output at any worker count.
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub checks: Vec<Check>,
}

impl CheckReport {
    pub fn push(&mut self, check: Check) {
        self.checks.push(check);
    }

    /// Deterministic order: checks merge by name regardless of how they ran.
    pub fn finalize(&mut self) {
        self.checks.sort_by(|a, b| a.name.cmp(&b.name));
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status == CheckStatus::Pass)
    }

    pub fn count(&self, status: CheckStatus) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// Human-readable table, including timings.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                CheckStatus::Pass => "pass",
                CheckStatus::Fail => "FAIL",
                CheckStatus::Skipped => "skip",
            };
            let _ = writeln!(
                out,
                "[{tag}] {}  ({} ms)\n       claim: {}\n       expected {} | actual {}",
                c.name,
                c.elapsed.as_millis(),
                c.claim,
                c.expected,
                c.actual
            );
            if !c.witness.is_empty() {
                let _ = writeln!(out, "       witness: {}", c.witness);
            }
        }
        let _ = writeln!(
            out,
            "{} checks: {} passed, {} failed, {} skipped",
            self.checks.len(),
            self.count(CheckStatus::Pass),
            self.count(CheckStatus::Fail),
            self.count(CheckStatus::Skipped)
        );
        out
    }

    /// Machine-readable report: JSON array of checks without timings.
    /// Byte-identical across runs with equal inputs and seeds.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.checks).expect("checks serialize")
    }
}
