//! Deterministic machine-readable verification reports.
//!
//! A report is a list of per-check records. Checks that are expected to
//! come out negative (the oracle must return non-membership for the suite
//! to be healthy) are first class: their status is `pass` when the
//! negative outcome occurs, so an exit code of 0 always means "everything
//! behaved as predicted". Timing is recorded but excluded from the
//! canonical body, which is a pure function of the configuration.

use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CheckRecord {
    pub id: String,
    /// Stable label of the identity or property being checked.
    pub anchor: String,
    pub status: Status,
    /// True when the healthy outcome is a negative oracle answer.
    #[serde(default)]
    pub expected_negative: bool,
    /// Witness on success, minimal counterexample on failure.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Wall time; excluded from the canonical body.
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub suite: String,
    pub config: serde_json::Value,
    pub checks: Vec<CheckRecord>,
}

impl Report {
    pub fn new(suite: &str, config: serde_json::Value) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            suite: suite.to_string(),
            config,
            checks: Vec::new(),
        }
    }

    pub fn push(&mut self, rec: CheckRecord) {
        self.checks.push(rec);
    }

    pub fn all_ok(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// The deterministic part: everything except timings.
    pub fn canonical_body(&self) -> serde_json::Value {
        let checks: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| {
                serde_json::json!({
                    "id": c.id,
                    "anchor": c.anchor,
                    "status": c.status,
                    "expected_negative": c.expected_negative,
                    "detail": c.detail,
                })
            })
            .collect();
        serde_json::json!({
            "schema_version": self.schema_version,
            "suite": self.suite,
            "config": self.config,
            "checks": checks,
        })
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut v = self.canonical_body();
        let timings: Vec<serde_json::Value> = self
            .checks
            .iter()
            .map(|c| serde_json::json!({"id": c.id, "millis": c.millis}))
            .collect();
        v["timings"] = serde_json::Value::Array(timings);
        v
    }

    pub fn summary(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            let neg = if c.expected_negative {
                " [expected-negative]"
            } else {
                ""
            };
            out.push_str(&format!("{tag}  {}{neg}\n", c.id));
        }
        let (p, f) = (
            self.checks.iter().filter(|c| c.status == Status::Pass).count(),
            self.checks.iter().filter(|c| c.status == Status::Fail).count(),
        );
        out.push_str(&format!("{} checks: {p} passed, {f} failed\n", self.checks.len()));
        out
    }
}

/// Helper for timing a single check.
pub fn timed_check(
    id: &str,
    anchor: &str,
    expected_negative: bool,
    f: impl FnOnce() -> (bool, Option<String>),
) -> CheckRecord {
    let start = std::time::Instant::now();
    let (ok, detail) = f();
    CheckRecord {
        id: id.to_string(),
        anchor: anchor.to_string(),
        status: if ok { Status::Pass } else { Status::Fail },
        expected_negative,
        detail,
        millis: start.elapsed().as_millis(),
    }
}
