//! Isomorphism-free enumeration of connected bicyclic graphs.
//!
//! Every bicyclic graph either has minimum degree two, in which case it
//! belongs to one of the five pendant-free classes, or it loses a pendant
//! vertex and stays bicyclic. So the graphs on `n` vertices are the
//! pendant-free ones plus every single-leaf extension of the graphs on
//! `n - 1` vertices. Levels are built bottom-up, deduplicated by canonical
//! code and cached for the life of the process.

use std::sync::{Arc, Mutex};

use rayon::prelude::*;

use crate::canon::{canonical_form, CanonicalCode};
use crate::error::{Error, Result};
use crate::families::{cycle, pendant_free_members};
use crate::graph::Graph;
use crate::invariants::matching_number;

/// Default largest order enumerated without an explicit override.
pub const DEFAULT_BUDGET_N: usize = 12;

/// Environment variable that raises the enumeration cap.
pub const BUDGET_ENV: &str = "CHI_BUDGET_N";

/// Largest order the enumerator may be asked for.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub max_n: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_n: DEFAULT_BUDGET_N }
    }
}

impl Budget {
    /// Default cap, or the value of `CHI_BUDGET_N` when it parses.
    pub fn from_env() -> Self {
        std::env::var(BUDGET_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map(|max_n| Budget { max_n })
            .unwrap_or_default()
    }

    pub fn check(&self, n: usize) -> Result<()> {
        if n > self.max_n {
            Err(Error::Budget { n, cap: self.max_n })
        } else {
            Ok(())
        }
    }

    /// Whether `n` is past the default and only allowed by an override.
    pub fn is_raised_for(&self, n: usize) -> bool {
        n > DEFAULT_BUDGET_N && n <= self.max_n
    }
}

/// A graph in canonical labelling together with its code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub code: CanonicalCode,
    pub graph: Graph,
}

fn canonicalize(g: &Graph) -> Canonical {
    let (graph, code) = canonical_form(g).expect("order within canonical cap");
    Canonical { code, graph }
}

fn sort_dedup(mut all: Vec<Canonical>) -> Vec<Canonical> {
    all.par_sort_unstable_by(|a, b| a.code.cmp(&b.code));
    all.dedup_by(|a, b| a.code == b.code);
    all
}

/// Graph family closed under deleting a pendant vertex, grown one leaf at a
/// time from its pendant-free members.
struct Tower {
    first: usize,
    seeds: fn(usize) -> Vec<Graph>,
    levels: Mutex<Vec<Arc<Vec<Canonical>>>>,
}

impl Tower {
    const fn new(first: usize, seeds: fn(usize) -> Vec<Graph>) -> Self {
        Tower {
            first,
            seeds,
            levels: Mutex::new(Vec::new()),
        }
    }

    fn level(&self, n: usize) -> Arc<Vec<Canonical>> {
        if n < self.first {
            return Arc::new(Vec::new());
        }
        let mut levels = self.levels.lock().unwrap_or_else(|e| e.into_inner());
        while levels.len() <= n - self.first {
            let k = self.first + levels.len();
            let mut next: Vec<Canonical> = (self.seeds)(k).par_iter().map(canonicalize).collect();
            if let Some(prev) = levels.last() {
                next.par_extend(prev.par_iter().flat_map_iter(|c| {
                    (0..c.graph.order()).map(move |v| canonicalize(&c.graph.add_pendant(v).expect("room")))
                }));
            }
            levels.push(Arc::new(sort_dedup(next)));
        }
        Arc::clone(&levels[n - self.first])
    }
}

static BICYCLIC: Tower = Tower::new(4, pendant_free_members);
static UNICYCLIC: Tower = Tower::new(3, |k| vec![cycle(k).expect("k >= 3")]);

/// Canonical representatives of all connected bicyclic graphs on `n`
/// vertices, in increasing code order, within the default budget.
pub fn all_bicyclic(n: usize) -> Result<Arc<Vec<Canonical>>> {
    all_bicyclic_within(n, Budget::default())
}

pub fn all_bicyclic_within(n: usize, budget: Budget) -> Result<Arc<Vec<Canonical>>> {
    budget.check(n)?;
    Ok(BICYCLIC.level(n))
}

/// Bicyclic graphs on `n` vertices with matching number `m`; empty unless
/// `2 <= m <= n/2`.
pub fn bicyclic_with_matching(n: usize, m: usize) -> Result<Vec<Canonical>> {
    bicyclic_with_matching_within(n, m, Budget::default())
}

pub fn bicyclic_with_matching_within(n: usize, m: usize, budget: Budget) -> Result<Vec<Canonical>> {
    let all = all_bicyclic_within(n, budget)?;
    if m < 2 || 2 * m > n {
        return Ok(Vec::new());
    }
    Ok(all
        .iter()
        .filter(|c| matching_number(&c.graph) == m)
        .cloned()
        .collect())
}

/// Bicyclic graphs on `n` vertices without pendant vertices, built directly
/// from the five pendant-free classes.
pub fn base_graphs(n: usize) -> Vec<Canonical> {
    sort_dedup(pendant_free_members(n).iter().map(canonicalize).collect())
}

/// Connected unicyclic graphs on `n` vertices, used by the unicyclic matching
/// checks.
pub fn all_unicyclic(n: usize) -> Result<Arc<Vec<Canonical>>> {
    Budget::default().check(n)?;
    Ok(UNICYCLIC.level(n))
}

pub mod oracle {
    //! Slow enumerators that share nothing with the leaf-growing scheme,
    //! kept as cross-checks for small orders.

    use std::collections::BTreeSet;

    use crate::canon::{canonical_code, CanonicalCode};
    use crate::graph::{bit, Graph};

    /// Connected graphs with `n + 1` edges found by scanning every edge set
    /// of that size whose degrees are non-increasing in label order.
    pub fn filter_bicyclic(n: usize) -> BTreeSet<CanonicalCode> {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let k = n + 1;
        let total = pairs.len();
        let mut out = BTreeSet::new();
        if k > total {
            return out;
        }
        let mut mask: u64 = (1 << k) - 1;
        let limit: u64 = 1 << total;
        while mask < limit {
            let mut deg = [0u8; 16];
            let mut rows = vec![0u64; n];
            let mut m = mask;
            while m != 0 {
                let (u, v) = pairs[m.trailing_zeros() as usize];
                deg[u] += 1;
                deg[v] += 1;
                rows[u] |= bit(v);
                rows[v] |= bit(u);
                m &= m - 1;
            }
            if deg[..n].windows(2).all(|w| w[0] >= w[1]) && deg[n - 1] > 0 {
                let g = Graph::from_rows(rows).expect("symmetric");
                if g.is_connected() {
                    out.insert(canonical_code(&g).unwrap());
                }
            }
            // next mask with the same popcount
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        out
    }

    fn link(edges: &mut Vec<(usize, usize)>, next: &mut usize, from: usize, to: usize, interior: usize) {
        let mut prev = from;
        for _ in 0..interior {
            edges.push((prev, *next));
            prev = *next;
            *next += 1;
        }
        edges.push((prev, to));
    }

    /// Pendant-free bicyclic graphs as subdivisions of the theta, dumbbell
    /// and figure-eight multigraphs.
    pub fn subdivisions(n: usize) -> BTreeSet<CanonicalCode> {
        let mut out = BTreeSet::new();
        let mut add = |edges: Vec<(usize, usize)>| {
            let g = Graph::from_edges(n, &edges).unwrap();
            assert!(g.is_bicyclic());
            out.insert(canonical_code(&g).unwrap());
        };
        // theta: poles 0, 1 and three routes with i <= j <= l interior
        // vertices; at most one direct edge
        for i in 0..=n {
            for j in i.max(1)..=n {
                for l in j..=n {
                    if 2 + i + j + l != n {
                        continue;
                    }
                    let (mut e, mut next) = (Vec::new(), 2);
                    for r in [i, j, l] {
                        link(&mut e, &mut next, 0, 1, r);
                    }
                    add(e);
                }
            }
        }
        // figure eight: loops with c <= d interior vertices at vertex 0
        for c in 2..n {
            for d in c..n {
                if 1 + c + d != n {
                    continue;
                }
                let mut e = Vec::new();
                let mut next = 1;
                link(&mut e, &mut next, 0, 0, c);
                link(&mut e, &mut next, 0, 0, d);
                add(e);
            }
        }
        // dumbbell: loops at 0 and 1 joined by a bridge with b interior
        for c in 2..n {
            for d in c..n {
                for b in 0..n {
                    if 2 + c + d + b != n {
                        continue;
                    }
                    let mut e = Vec::new();
                    let mut next = 2;
                    link(&mut e, &mut next, 0, 0, c);
                    link(&mut e, &mut next, 1, 1, d);
                    link(&mut e, &mut next, 0, 1, b);
                    add(e);
                }
            }
        }
        out
    }
}
