//! Canonical labeling by colour refinement and individualization.
//!
//! The search tree branches on the first non-singleton cell of an equitable
//! colouring. Vertices of a cell that are twins of an already explored
//! vertex are skipped: swapping two twins is an automorphism fixing every
//! individualized vertex, so both subtrees yield the same leaf codes. The
//! canonical labeling is the leaf whose graph6 body is lexicographically
//! smallest.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};
use crate::graph6;

/// Default vertex cap for [`canonical_code`].
pub const DEFAULT_CANONICAL_CAP: usize = 16;

/// graph6 string of the canonically relabeled graph. Ordering is plain
/// byte order of that string.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CanonicalCode(String);

impl CanonicalCode {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Decodes the code back into the canonical representative.
    pub fn to_graph(&self) -> Graph {
        graph6::from_graph6(&self.0).expect("canonical codes are valid graph6")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({})", self.0)
    }
}

pub fn canonical_code(g: &Graph) -> Result<CanonicalCode> {
    canonical_form_with_cap(g, DEFAULT_CANONICAL_CAP).map(|(_, c)| c)
}

/// Canonical representative and its code.
pub fn canonical_form(g: &Graph) -> Result<(Graph, CanonicalCode)> {
    canonical_form_with_cap(g, DEFAULT_CANONICAL_CAP)
}

pub fn canonical_form_with_cap(g: &Graph, cap: usize) -> Result<(Graph, CanonicalCode)> {
    let n = g.order();
    if n > cap {
        return Err(Error::CanonicalCap { n, cap });
    }
    let mut search = Search {
        g,
        best: None,
        scratch: Vec::with_capacity(n),
    };
    let mut colors = vec![0u32; n];
    refine(g, &mut colors);
    search.descend(colors);
    let (body, perm) = search.best.expect("search reaches at least one leaf");
    let canon = g.permute_unchecked(&perm);
    let text = graph6::to_graph6_bytes(&canon);
    debug_assert!(text.ends_with(&body));
    let code = CanonicalCode(String::from_utf8(text).expect("graph6 is ASCII"));
    Ok((canon, code))
}

struct Search<'a> {
    g: &'a Graph,
    best: Option<(Vec<u8>, Vec<usize>)>,
    scratch: Vec<u8>,
}

impl Search<'_> {
    fn descend(&mut self, colors: Vec<u32>) {
        let n = self.g.order();
        let Some(cell) = target_cell(&colors) else {
            self.leaf(&colors);
            return;
        };
        let mut explored = 0u64;
        for v in Bits(cell) {
            if Bits(explored).any(|r| twins(self.g, r, v)) {
                continue;
            }
            explored |= bit(v);
            let mut child = individualize(&colors, v);
            refine(self.g, &mut child);
            debug_assert_eq!(child.len(), n);
            self.descend(child);
        }
    }

    fn leaf(&mut self, colors: &[u32]) {
        let perm: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let n = perm.len();
        let mut rows = vec![0u64; n];
        for v in 0..n {
            for u in self.g.neighbors(v) {
                rows[perm[v]] |= bit(perm[u]);
            }
        }
        self.scratch.clear();
        graph6::encode_body(n, &rows, &mut self.scratch);
        match &self.best {
            Some((body, _)) if *body <= self.scratch => {}
            _ => self.best = Some((self.scratch.clone(), perm)),
        }
    }
}

/// Swapping `u` and `v` is an automorphism.
#[inline]
fn twins(g: &Graph, u: usize, v: usize) -> bool {
    g.row(u) & !bit(v) == g.row(v) & !bit(u)
}

/// Smallest-coloured cell with more than one vertex, as a bitmask.
fn target_cell(colors: &[u32]) -> Option<u64> {
    let n = colors.len();
    let mut count = vec![0u32; n];
    for &c in colors {
        count[c as usize] += 1;
    }
    let c = (0..n).find(|&c| count[c] > 1)? as u32;
    Some(
        colors
            .iter()
            .enumerate()
            .filter(|&(_, &k)| k == c)
            .fold(0u64, |m, (v, _)| m | bit(v)),
    )
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let keyed: Vec<(u32, u32)> = colors
        .iter()
        .enumerate()
        .map(|(u, &c)| (c, u32::from(u != v)))
        .collect();
    rank(&keyed)
}

/// Replaces each key by its index among the sorted distinct keys.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<u32> {
    let mut distinct: Vec<K> = keys.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    keys.iter()
        .map(|k| distinct.binary_search(k).expect("present") as u32)
        .collect()
}

/// Colour refinement to the coarsest equitable partition finer than
/// `colors`. Cell indices depend only on the isomorphism type of the
/// coloured graph.
fn refine(g: &Graph, colors: &mut Vec<u32>) {
    let n = g.order();
    let mut classes = distinct_count(colors);
    loop {
        if classes == n {
            return;
        }
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<u32> = g.neighbors(v).map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let next = rank(&keys);
        let next_classes = distinct_count(&next);
        *colors = next;
        if next_classes == classes {
            return;
        }
        classes = next_classes;
    }
}

fn distinct_count(colors: &[u32]) -> usize {
    let mut seen = 0u64;
    for &c in colors {
        seen |= bit(c as usize);
    }
    seen.count_ones() as usize
}
