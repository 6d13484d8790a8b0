//! Check results and their JSON and text renderings.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

impl Status {
    pub fn label(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub status: Status,
    /// Failure detail or skip reason; empty on pass.
    pub details: String,
    pub exact: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl CheckReport {
    pub fn from_result(check_id: &str, exact: bool, r: Outcome) -> Self {
        let (status, details) = match r {
            Outcome::Pass => (Status::Pass, String::new()),
            Outcome::Fail(d) => (Status::Fail, d),
            Outcome::Skip(d) => (Status::Skip, d),
        };
        CheckReport { check_id: check_id.to_string(), status, details, exact, elapsed_ms: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

impl From<Result<(), String>> for Outcome {
    fn from(r: Result<(), String>) -> Self {
        match r {
            Ok(()) => Outcome::Pass,
            Err(e) => Outcome::Fail(e),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: &str, seed: u64, mut checks: Vec<CheckReport>) -> Self {
        checks.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        SuiteReport { suite: suite.to_string(), seed, checks }
    }

    pub fn any_failed(&self) -> bool {
        self.checks.iter().any(|c| c.status == Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_json(&self) -> String {
        crate::io::to_json(self)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let kind = if c.exact { "exact" } else { "numeric" };
            let _ = write!(out, "{} {} [{kind}]", c.status.label(), c.check_id);
            if let Some(ms) = c.elapsed_ms {
                let _ = write!(out, " {ms}ms");
            }
            if !c.details.is_empty() {
                let _ = write!(out, ": {}", c.details);
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} passed, {} failed, {} skipped",
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::Skip)
        );
        out
    }
}
