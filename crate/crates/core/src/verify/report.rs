//! JSON report structures.

use serde::Serialize;

use crate::radical::RadicalSum;

pub const ARTIFACT_VERSION: &str = "1";

/// Outcome of one exhaustive extremal search.
#[derive(Debug, Clone, Serialize)]
pub struct ExtremalReport {
    pub theorem_id: String,
    pub n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    pub class_size: usize,
    pub extremal_value: RadicalSum,
    pub expected_value: RadicalSum,
    /// Canonical graph6 codes of every graph attaining the value.
    pub argext: Vec<String>,
    pub expected_argext: Vec<String>,
    pub pass: bool,
    pub runtime_ms: u64,
}

/// Outcome of checking an inequality over a batch of instances.
#[derive(Debug, Clone, Serialize)]
pub struct LemmaCheckReport {
    pub check_id: String,
    pub instances: usize,
    /// Instances where the equality case was hit.
    pub equalities: usize,
    pub failure_count: usize,
    /// First few failing instances.
    pub failures: Vec<String>,
    pub pass: bool,
    pub runtime_ms: u64,
}

/// Accumulates instance outcomes for a [`LemmaCheckReport`].
#[derive(Debug)]
pub struct LemmaTally {
    id: String,
    instances: usize,
    equalities: usize,
    failure_count: usize,
    failures: Vec<String>,
    start: std::time::Instant,
}

/// Failure messages kept per check; the count is still exact.
const MAX_RECORDED_FAILURES: usize = 20;

impl LemmaTally {
    pub fn new(id: &str) -> Self {
        LemmaTally {
            id: id.to_string(),
            instances: 0,
            equalities: 0,
            failure_count: 0,
            failures: Vec::new(),
            start: std::time::Instant::now(),
        }
    }

    pub fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.instances += 1;
        if !ok {
            self.failure_count += 1;
            if self.failures.len() < MAX_RECORDED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    pub fn equality(&mut self) {
        self.equalities += 1;
    }

    pub fn finish(self) -> LemmaCheckReport {
        LemmaCheckReport {
            pass: self.failure_count == 0 && self.instances > 0,
            check_id: self.id,
            instances: self.instances,
            equalities: self.equalities,
            failure_count: self.failure_count,
            failures: self.failures,
            runtime_ms: self.start.elapsed().as_millis() as u64,
        }
    }
}

/// Top-level report file.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub artifact_version: &'static str,
    pub reports: Vec<ExtremalReport>,
    pub lemma_checks: Vec<LemmaCheckReport>,
    /// Some requested orders were skipped because they exceed the budget.
    pub budget_exceeded: bool,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(mut reports: Vec<ExtremalReport>, lemma_checks: Vec<LemmaCheckReport>, budget_exceeded: bool) -> Self {
        reports.sort_by(|a, b| (&a.theorem_id, a.n, a.m).cmp(&(&b.theorem_id, b.n, b.m)));
        let pass = !budget_exceeded
            && reports.iter().all(|r| r.pass)
            && lemma_checks.iter().all(|r| r.pass);
        VerificationReport {
            artifact_version: ARTIFACT_VERSION,
            reports,
            lemma_checks,
            budget_exceeded,
            pass,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
