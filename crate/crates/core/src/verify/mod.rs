//! Verification harness: closed forms, exhaustive extremal searches and
//! inequality checks, gathered into a JSON report.

pub mod closed_form;
pub mod extremal;
pub mod lemmas;
pub mod report;

use rayon::prelude::*;

pub use closed_form::{closed_form, CLOSED_FORM_NAMES};
pub use extremal::{value_levels, verify_max_over_class, verify_min_over_class, Census, Direction};
pub use lemmas::{
    check_matching_oracle, check_restricted_perfect_matching, check_scalar_lemmas, check_transform_lemmas,
    matching_number_by_subsets, spot_check_cited_lemmas,
};
pub use report::{ExtremalReport, LemmaCheckReport, VerificationReport, ARTIFACT_VERSION};

use crate::enumerate::Budget;
use crate::error::Result;

/// Random instances per check in the cited and rewrite suites.
pub const DEFAULT_SAMPLES: usize = 200;
pub const DEFAULT_SEED: u64 = 20_240_601;
/// Upper end of the scalar range when it is not given explicitly.
pub const DEFAULT_SCALAR_MAX: usize = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    All,
    Min,
    Max,
    Matching,
    Scalar,
    Cited,
}

impl Suite {
    pub const NAMES: [&'static str; 6] = ["all", "min", "max", "matching", "scalar", "cited"];

    pub fn parse(name: &str) -> Option<Suite> {
        Some(match name {
            "all" => Suite::All,
            "min" => Suite::Min,
            "max" => Suite::Max,
            "matching" => Suite::Matching,
            "scalar" => Suite::Scalar,
            "cited" => Suite::Cited,
            _ => return None,
        })
    }

    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// Orders `first..=n_max` that the budget allows, and whether any were cut.
fn orders(first: usize, n_max: usize, budget: Budget) -> (Vec<usize>, bool) {
    let top = n_max.min(budget.max_n);
    ((first..=top).collect(), n_max > budget.max_n)
}

fn min_suite(n: usize, budget: Budget) -> Result<(Vec<ExtremalReport>, Vec<LemmaCheckReport>)> {
    let census = Census::build(n, budget)?;
    let mut reports = verify_min_over_class(&census, None)?;
    if n >= 6 {
        reports.extend(verify_min_over_class(&census, Some(2))?);
        for m in 3..=n / 2 {
            reports.extend(verify_min_over_class(&census, Some(m))?);
        }
    }
    Ok((reports, check_restricted_perfect_matching(&census).into_iter().collect()))
}

fn max_suite(n: usize, budget: Budget) -> Result<(Vec<ExtremalReport>, Vec<LemmaCheckReport>)> {
    let census = Census::build(n, budget)?;
    let (reports, below) = verify_max_over_class(&census)?;
    Ok((reports, vec![below]))
}

fn matching_suite(n: usize, budget: Budget) -> Result<(Vec<ExtremalReport>, Vec<LemmaCheckReport>)> {
    let census = Census::build(n, budget)?;
    Ok((Vec::new(), vec![check_matching_oracle(&census)]))
}

type Job = fn(usize, Budget) -> Result<(Vec<ExtremalReport>, Vec<LemmaCheckReport>)>;

/// Runs `suite` for orders up to `n_max`. When the scalar suite runs alone
/// `n_max` is the upper end of its integer range; otherwise the range ends
/// at [`DEFAULT_SCALAR_MAX`]. Orders past the budget are skipped and
/// flagged.
pub fn run_suite(suite: Suite, n_max: usize, budget: Budget) -> Result<VerificationReport> {
    let mut jobs: Vec<(Job, usize)> = Vec::new();
    let mut exceeded = false;
    let per_order: [(Suite, usize, Job); 3] = [
        (Suite::Min, 5, min_suite),
        (Suite::Max, 5, max_suite),
        (Suite::Matching, 4, matching_suite),
    ];
    for (kind, first, job) in per_order {
        if suite.includes(kind) {
            let (ns, cut) = orders(first, n_max, budget);
            exceeded |= cut;
            jobs.extend(ns.into_iter().map(|n| (job, n)));
        }
    }
    let results: Vec<_> = jobs.par_iter().map(|&(job, n)| job(n, budget)).collect();
    let mut reports = Vec::new();
    let mut checks = Vec::new();
    for r in results {
        let (rep, chk) = r?;
        reports.extend(rep);
        checks.extend(chk);
    }
    if suite.includes(Suite::Scalar) {
        let range = if suite == Suite::Scalar { n_max } else { DEFAULT_SCALAR_MAX };
        checks.extend(check_scalar_lemmas(range));
    }
    if suite.includes(Suite::Cited) {
        checks.extend(spot_check_cited_lemmas(DEFAULT_SAMPLES, DEFAULT_SEED, budget));
        checks.extend(check_transform_lemmas(DEFAULT_SAMPLES, DEFAULT_SEED));
    }
    Ok(VerificationReport::new(reports, checks, exceeded))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        let report = run_suite(Suite::Min, 8, Budget::default()).unwrap();
        assert!(report.pass, "{}", report.to_json());
        let report = run_suite(Suite::Max, 8, Budget::default()).unwrap();
        assert!(report.pass);
        assert_eq!(report.reports.len(), 8);
    }

    #[test]
    fn budget_cut_is_flagged() {
        let report = run_suite(Suite::Matching, 9, Budget { max_n: 7 }).unwrap();
        assert!(report.budget_exceeded);
        assert!(!report.pass);
        assert_eq!(report.lemma_checks.len(), 4);
        assert!(report.lemma_checks.iter().all(|c| c.pass));
    }

    #[test]
    fn json_shape() {
        let report = run_suite(Suite::Max, 5, Budget::default()).unwrap();
        let v: serde_json::Value = serde_json::from_str(&report.to_json()).unwrap();
        assert_eq!(v["artifact_version"], ARTIFACT_VERSION);
        let first = &v["reports"][0];
        for key in ["theorem_id", "n", "class_size", "extremal_value", "argext", "expected_argext", "pass", "runtime_ms"] {
            assert!(!first[key].is_null(), "{key}");
        }
        assert!(first["extremal_value"]["terms"].is_array());
        assert!(first["extremal_value"]["float"].is_number());
        assert!(Suite::NAMES.iter().all(|s| Suite::parse(s).is_some()));
    }
}
