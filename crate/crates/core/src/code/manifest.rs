//! JSON summary of a constructed code.

use serde::{Deserialize, Serialize};

use super::{Report, RateReport};
use crate::graph::Girth;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationSummary {
    pub mode: String,
    pub patterns: u64,
    pub failures: u64,
    pub passed: bool,
}

impl From<&Report> for VerificationSummary {
    fn from(r: &Report) -> Self {
        VerificationSummary {
            mode: r.mode.to_string(),
            patterns: r.patterns,
            failures: r.failure_count,
            passed: r.passed(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CodeManifest {
    pub n: usize,
    pub k: usize,
    pub r: usize,
    pub t: usize,
    /// Exact rate as `k/n` in lowest terms.
    pub rate: String,
    pub optimal_rate: String,
    pub rate_is_optimal: bool,
    /// `null` for a forest.
    pub girth: Option<usize>,
    pub seed: u64,
    pub verification: Option<VerificationSummary>,
}

impl CodeManifest {
    pub fn new(rate: &RateReport, r: usize, t: usize, girth: Girth, seed: u64, report: Option<&Report>) -> Self {
        CodeManifest {
            n: rate.n,
            k: rate.k,
            r,
            t,
            rate: rate.rate.to_string(),
            optimal_rate: rate.optimal.to_string(),
            rate_is_optimal: rate.equals_optimal,
            girth: girth.finite(),
            seed,
            verification: report.map(VerificationSummary::from),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("manifest serialises") + "\n"
    }
}
