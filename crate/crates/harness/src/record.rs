use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Pass,
    NotApplicable,
    Counterexample,
    Error,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::NotApplicable => "NOT_APPLICABLE",
            Verdict::Counterexample => "COUNTEREXAMPLE",
            Verdict::Error => "ERROR",
        })
    }
}

impl From<tough_closure::Outcome> for Verdict {
    fn from(o: tough_closure::Outcome) -> Self {
        match o {
            tough_closure::Outcome::Pass => Verdict::Pass,
            tough_closure::Outcome::NotApplicable => Verdict::NotApplicable,
            tough_closure::Outcome::Counterexample => Verdict::Counterexample,
        }
    }
}

/// One JSONL line. `timestamp` and `runtime_ms` are the only fields that
/// differ between reruns of a seeded sweep.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub schema: u32,
    pub experiment_id: String,
    pub timestamp: String,
    /// graph6; empty when the instance could not be produced.
    pub instance: String,
    /// Position of the instance in its sweep.
    pub index: u64,
    pub parameters: Value,
    pub verdict: Verdict,
    pub detail: Value,
    pub runtime_ms: u64,
}

pub fn now_utc() -> String {
    chrono::Utc::now().to_rfc3339_opts(chrono::SecondsFormat::Millis, true)
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub processed: u64,
    pub pass: u64,
    pub not_applicable: u64,
    pub counterexample: u64,
    pub error: u64,
    /// Dropped by plan filters before the target ran; not in `processed`.
    pub filtered_out: u64,
    /// Experiment-specific tallies, e.g. which route certified a cycle.
    pub tags: BTreeMap<String, u64>,
}

impl Summary {
    pub fn add(&mut self, verdict: Verdict) {
        self.processed += 1;
        *match verdict {
            Verdict::Pass => &mut self.pass,
            Verdict::NotApplicable => &mut self.not_applicable,
            Verdict::Counterexample => &mut self.counterexample,
            Verdict::Error => &mut self.error,
        } += 1;
    }

    pub fn tag(&mut self, tag: &str) {
        *self.tags.entry(tag.to_string()).or_default() += 1;
    }

    pub fn is_conserved(&self) -> bool {
        self.processed == self.pass + self.not_applicable + self.counterexample + self.error
    }

    pub fn merge(&mut self, other: &Summary) {
        self.processed += other.processed;
        self.pass += other.pass;
        self.not_applicable += other.not_applicable;
        self.counterexample += other.counterexample;
        self.error += other.error;
        self.filtered_out += other.filtered_out;
        for (k, v) in &other.tags {
            *self.tags.entry(k.clone()).or_default() += v;
        }
    }
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "processed={} pass={} not_applicable={} counterexample={} error={} filtered_out={}",
            self.processed, self.pass, self.not_applicable, self.counterexample, self.error, self.filtered_out
        )?;
        for (k, v) in &self.tags {
            write!(f, " {k}={v}")?;
        }
        Ok(())
    }
}
