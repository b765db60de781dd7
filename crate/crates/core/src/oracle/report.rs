use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// One failed instance, replayable from its fields alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub n: usize,
    /// The edge under test, or the subject of a lemma check.
    pub edge: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub length: Option<usize>,
    pub faults: Vec<String>,
    pub reason: String,
}

/// Result of one instance inside a campaign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Outcome {
    pub labels: Vec<String>,
    pub failure: Option<Failure>,
}

impl Outcome {
    pub fn pass(labels: Vec<String>) -> Self {
        Self {
            labels,
            failure: None,
        }
    }

    pub fn fail(labels: Vec<String>, failure: Failure) -> Self {
        Self {
            labels,
            failure: Some(failure),
        }
    }
}

/// Totals, coverage and failures of a verification campaign.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignReport {
    pub n: usize,
    pub domain: String,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    /// How often each case label was entered at the top level.
    pub histogram: BTreeMap<String, usize>,
    pub failures: Vec<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_seconds: Option<f64>,
}

impl CampaignReport {
    pub fn new(n: usize, domain: impl Into<String>, seed: Option<u64>) -> Self {
        Self {
            n,
            domain: domain.into(),
            total: 0,
            passed: 0,
            failed: 0,
            histogram: BTreeMap::new(),
            failures: Vec::new(),
            seed,
            elapsed_seconds: None,
        }
    }

    pub(crate) fn record(&mut self, outcome: Outcome) {
        self.total += 1;
        for l in outcome.labels {
            *self.histogram.entry(l).or_default() += 1;
        }
        match outcome.failure {
            Some(f) => {
                self.failed += 1;
                self.failures.push(f);
            }
            None => self.passed += 1,
        }
    }

    pub(crate) fn collect(mut self, outcomes: impl IntoIterator<Item = Outcome>) -> Self {
        for o in outcomes {
            self.record(o);
        }
        self
    }

    /// Adds the counts and failures of `other`; the result does not depend
    /// on how instances were grouped.
    pub fn merge(&mut self, other: CampaignReport) {
        self.total += other.total;
        self.passed += other.passed;
        self.failed += other.failed;
        for (k, v) in other.histogram {
            *self.histogram.entry(k).or_default() += v;
        }
        self.failures.extend(other.failures);
    }

    pub fn is_clean(&self) -> bool {
        self.failed == 0 && self.passed == self.total
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Human-readable summary.
    pub fn to_text(&self) -> String {
        let mut out = format!(
            "{} (n = {})\ntotal {}  passed {}  failed {}\n",
            self.domain, self.n, self.total, self.passed, self.failed
        );
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed {seed}\n"));
        }
        if let Some(t) = self.elapsed_seconds {
            out.push_str(&format!("elapsed {t:.3} s\n"));
        }
        for (k, v) in &self.histogram {
            out.push_str(&format!("  {k:<28} {v}\n"));
        }
        for f in &self.failures {
            let len = f.length.map(|l| format!(" length {l}")).unwrap_or_default();
            out.push_str(&format!(
                "FAIL {}{len} faults [{}]: {}\n",
                f.edge,
                f.faults.join(", "),
                f.reason
            ));
        }
        out
    }
}
