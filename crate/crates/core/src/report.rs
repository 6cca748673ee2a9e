//! Machine-readable verification reports and search configuration.
//!
//! Reports are deterministic: two runs with the same configuration produce
//! identical contents apart from the `elapsed` field, regardless of worker
//! count. Failure witnesses carry the full problem instance so they can be
//! replayed against the underlying predicate.

use std::time::Duration;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{GroupElement, PointSet};

pub const REPORT_SCHEMA: u32 = 1;

#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchMode {
    Exhaustive,
    Sampled,
}

/// How a verification sweep explores its candidate space.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Serialize)]
pub struct SearchConfig {
    pub mode: SearchMode,
    pub sample_count: u64,
    pub seed: u64,
    /// Worker threads; 0 means use all available cores.
    pub workers: usize,
}

impl SearchConfig {
    pub fn exhaustive() -> Self {
        SearchConfig {
            mode: SearchMode::Exhaustive,
            sample_count: 0,
            seed: 0,
            workers: 0,
        }
    }

    pub fn sampled(sample_count: u64, seed: u64) -> Self {
        SearchConfig {
            mode: SearchMode::Sampled,
            sample_count,
            seed,
            workers: 0,
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.mode == SearchMode::Sampled && self.sample_count == 0 {
            return Err(Error::InvalidArgument(
                "sampled mode requires sample_count >= 1".into(),
            ));
        }
        Ok(())
    }
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig::exhaustive()
    }
}

/// A replayable problem instance on which a predicate failed (or, for
/// counterexample sweeps, on which the searched-for phenomenon occurred).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug, Serialize)]
pub struct Witness {
    pub n: u32,
    pub description: String,
    /// Named sets of the instance, e.g. `[("A", ...), ("H", ...)]`.
    pub sets: Vec<(String, PointSet)>,
    pub offender: Option<GroupElement>,
}

impl Witness {
    pub fn set(&self, name: &str) -> Option<&PointSet> {
        self.sets.iter().find(|(k, _)| k == name).map(|(_, v)| v)
    }
}

/// Outcome of a verification suite.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub schema: u32,
    pub suite: String,
    pub config: SearchConfig,
    pub notes: Vec<String>,
    pub instances_checked: u64,
    pub skipped: u64,
    /// Assertion violations; empty iff the suite passes.
    pub failures: Vec<Witness>,
    /// Phenomena a counterexample sweep was looking for; data, not failures.
    pub findings: Vec<Witness>,
    #[serde(serialize_with = "serialize_elapsed")]
    pub elapsed: Duration,
}

fn serialize_elapsed<S: serde::Serializer>(
    d: &Duration,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn new(suite: impl Into<String>, config: SearchConfig) -> Self {
        VerificationReport {
            schema: REPORT_SCHEMA,
            suite: suite.into(),
            config,
            notes: Vec::new(),
            instances_checked: 0,
            skipped: 0,
            failures: Vec::new(),
            findings: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Canonical order for merged worker output.
    pub fn sort_witnesses(&mut self) {
        self.failures.sort();
        self.findings.sort();
    }

    /// Equality of everything except the timing field.
    pub fn outcome_eq(&self, other: &Self) -> bool {
        self.schema == other.schema
            && self.suite == other.suite
            && self.config == other.config
            && self.notes == other.notes
            && self.instances_checked == other.instances_checked
            && self.skipped == other.skipped
            && self.failures == other.failures
            && self.findings == other.findings
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
