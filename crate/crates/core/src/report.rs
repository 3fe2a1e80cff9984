//! Verification reports shared by the library checks and the CLI.

use std::fmt;
use std::time::Instant;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Assertion {
    /// Instance and property, e.g. `"A2~1 B^{1,1}: u unique"`.
    pub name: String,
    /// Module-level invariant the assertion belongs to.
    pub invariant: String,
    pub status: Status,
    #[serde(skip_serializing_if = "String::is_empty")]
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub assertions: Vec<Assertion>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub wall_time_ms: u128,
    #[serde(skip)]
    started: Option<Instant>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport {
            suite: suite.to_string(),
            assertions: Vec::new(),
            passed: 0,
            failed: 0,
            skipped: 0,
            wall_time_ms: 0,
            started: Some(Instant::now()),
        }
    }

    pub fn push(&mut self, name: impl Into<String>, invariant: &str, status: Status, detail: impl Into<String>) {
        match status {
            Status::Pass => self.passed += 1,
            Status::Fail => self.failed += 1,
            Status::Skipped => self.skipped += 1,
        }
        self.assertions.push(Assertion { name: name.into(), invariant: invariant.to_string(), status, detail: detail.into() });
    }

    /// Records `Ok` as a pass and `Err(detail)` as a failure.
    pub fn check<E: fmt::Display>(&mut self, name: impl Into<String>, invariant: &str, r: Result<(), E>) {
        match r {
            Ok(()) => self.push(name, invariant, Status::Pass, ""),
            Err(e) => self.push(name, invariant, Status::Fail, e.to_string()),
        }
    }

    pub fn merge(&mut self, other: VerificationReport) {
        for a in other.assertions {
            self.push(a.name, &a.invariant, a.status, a.detail);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }

    pub fn finish(mut self) -> Self {
        if let Some(t) = self.started.take() {
            self.wall_time_ms = t.elapsed().as_millis();
        }
        self
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for a in &self.assertions {
            let tag = match a.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            write!(f, "[{tag}] {} ({})", a.name, a.invariant)?;
            if !a.detail.is_empty() {
                write!(f, ": {}", a.detail.replace('\n', "\n       "))?;
            }
            writeln!(f)?;
        }
        write!(
            f,
            "suite {}: {} passed, {} failed, {} skipped in {} ms",
            self.suite, self.passed, self.failed, self.skipped, self.wall_time_ms
        )
    }
}
