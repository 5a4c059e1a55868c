//! Exhaustive property suites over the censuses of [`crate::enumerate`].
//!
//! Every suite returns a [`SuiteResult`] listing each failing object by key
//! and serialization, so a failure can be replayed through the CLI.

mod suites;

pub use suites::{
    verify_balance, verify_choice_independence, verify_compilation, verify_counts,
    verify_roundtrip, verify_triangle, UNBALANCED_SPLIT_COUNTS,
};

use serde::Serialize;
use serde_json::Value;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Canonical key of the offending input, in hex.
    pub input: String,
    /// The input as one line of graph6 or JSON; empty for table checks.
    pub object: String,
    pub expected: String,
    pub observed: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteResult {
    pub suite: String,
    pub params: Value,
    pub checked: usize,
    pub failures: Vec<Failure>,
    /// Set for suites that only report; their failures do not fail a run.
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub informational: bool,
    /// Extra measurements, e.g. the count table.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub data: Option<Value>,
}

impl SuiteResult {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Fails the run: an asserting suite with at least one failure.
    pub fn fails_run(&self) -> bool {
        !self.informational && !self.passed()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("suite results serialize")
    }
}

#[cfg(test)]
mod tests;
