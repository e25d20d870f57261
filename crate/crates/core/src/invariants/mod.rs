//! Degree-based indices and the matching number.

mod matching;

use std::collections::BTreeMap;

use serde::Serialize;

use crate::graph::Graph;
use crate::radical::{int, RadicalSum};

pub use matching::{has_perfect_matching, matching_number, maximum_matching, Matching};

/// Multiset of end-degree sums `d(u) + d(v)` over all edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EdgeSumSignature {
    counts: BTreeMap<u32, u32>,
}

impl EdgeSumSignature {
    pub fn counts(&self) -> &BTreeMap<u32, u32> {
        &self.counts
    }

    pub fn edge_count(&self) -> usize {
        self.counts.values().map(|&c| c as usize).sum()
    }

    pub fn from_counts<I: IntoIterator<Item = (u32, u32)>>(pairs: I) -> Self {
        let mut counts = BTreeMap::new();
        for (s, c) in pairs {
            if c > 0 {
                *counts.entry(s).or_insert(0) += c;
            }
        }
        EdgeSumSignature { counts }
    }

    pub fn sum_connectivity(&self) -> RadicalSum {
        weighted_inverse_roots(&self.counts)
    }
}

fn weighted_inverse_roots(counts: &BTreeMap<u32, u32>) -> RadicalSum {
    counts
        .iter()
        .map(|(&s, &c)| RadicalSum::from_inverse_sqrt(u64::from(s), int(i64::from(c))).expect("positive"))
        .sum()
}

fn edge_statistic(g: &Graph, combine: impl Fn(u32, u32) -> u32) -> BTreeMap<u32, u32> {
    let mut counts = BTreeMap::new();
    for (u, v) in g.edges() {
        *counts
            .entry(combine(g.deg(u) as u32, g.deg(v) as u32))
            .or_insert(0) += 1;
    }
    counts
}

pub fn edge_sum_signature(g: &Graph) -> EdgeSumSignature {
    EdgeSumSignature {
        counts: edge_statistic(g, |a, b| a + b),
    }
}

/// Sum-connectivity index: `sum over edges of 1 / sqrt(d(u) + d(v))`.
pub fn sum_connectivity(g: &Graph) -> RadicalSum {
    edge_sum_signature(g).sum_connectivity()
}

/// Randić index: `sum over edges of 1 / sqrt(d(u) d(v))`.
pub fn randic(g: &Graph) -> RadicalSum {
    weighted_inverse_roots(&edge_statistic(g, |a, b| a * b))
}

/// Plain per-edge float evaluation of the sum-connectivity index.
pub fn sum_connectivity_f64(g: &Graph) -> f64 {
    g.edges()
        .map(|(u, v)| 1.0 / ((g.deg(u) + g.deg(v)) as f64).sqrt())
        .sum()
}
