//! Inequality checks: scalar bounds over integer ranges, the restricted
//! perfect-matching bound, cited bounds on random or enumerated instances,
//! the rewrite inequalities, and the matching-number oracle.

use std::cmp::Ordering;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::closed_form::closed_form;
use super::extremal::Census;
use super::report::{LemmaCheckReport, LemmaTally};
use crate::canon::canonical_code;
use crate::enumerate::{all_unicyclic, bicyclic_with_matching_within, Budget};
use crate::families::{build_bnm, build_h6, build_unm};
use crate::graph::{bit, Bits, Graph};
use crate::invariants::{has_perfect_matching, matching_number, maximum_matching, sum_connectivity};
use crate::radical::{int, RadicalSum};
use crate::transforms::instances::{contraction_instance, merge_instance, random_connected, rewire_instance};
use crate::transforms::{contract_and_pendant, merge_paths, rewire, RewireCase};

fn q(num: i64, s: u64) -> RadicalSum {
    RadicalSum::over_sqrt(num, s)
}

fn rational(num: i64, den: i64) -> RadicalSum {
    RadicalSum::rational(crate::radical::rat(num, den))
}

/// `(x-1)/sqrt(x+2) - (x-3)/sqrt(x+1) - 1/sqrt(x)`.
pub fn pendant_path_gain(x: u64) -> RadicalSum {
    let xi = x as i64;
    q(xi - 1, x + 2) - q(xi - 3, x + 1) - q(1, x)
}

/// `(x-a)/sqrt(x+2) + (2a-x)/sqrt(x+1) - (a-1)/sqrt(x)`.
pub fn pendant_gain(x: u64, a: u64) -> RadicalSum {
    let (xi, ai) = (x as i64, a as i64);
    q(xi - ai, x + 2) + q(2 * ai - xi, x + 1) - q(ai - 1, x)
}

/// Scalar inequalities in `m` checked exactly for every integer up to
/// `m_max`, and strict decrease of the two pendant-gain functions on
/// consecutive integers.
pub fn check_scalar_lemmas(m_max: usize) -> Vec<LemmaCheckReport> {
    let m_max = m_max.max(5) as u64;
    let th1 = |m: u64| closed_form("th1", 0, m as usize).expect("m >= 3");

    let mut linear = LemmaTally::new("linear_upper_bound");
    for m in 3..=m_max {
        let lhs = RadicalSum::rational(int(m as i64)) + q(4, 6) - rational(3, 2);
        let rhs = th1(m);
        linear.record(lhs > rhs, || format!("m = {m}"));
    }

    let mut steep = LemmaTally::new("steep_linear_upper_bound");
    for m in 5..=m_max {
        let mi = m as i64;
        let lhs = rational(mi, 2) + q(mi, 6) - rational(1, 2) - q(2, 6) + RadicalSum::from_sqrt(2, int(1));
        steep.record(lhs > th1(m), || format!("m = {m}"));
    }

    let mut floor = LemmaTally::new("shifted_difference_floor");
    let bound = q(-4, 7) + q(2, 6) + q(1, 5);
    for m in 3..=m_max {
        let mi = m as i64;
        let lhs = q(-(mi + 1), m + 4) + q(mi - 1, m + 3) + q(1, m + 2);
        let ok = match lhs.cmp(&bound) {
            Ordering::Equal => {
                floor.equality();
                m == 3
            }
            Ordering::Greater => m != 3,
            Ordering::Less => false,
        };
        floor.record(ok, || format!("m = {m}: {lhs} vs {bound}"));
    }

    let mut path_gain = LemmaTally::new("pendant_path_gain_decreasing");
    let mut prev = pendant_path_gain(2);
    for x in 3..=m_max {
        let next = pendant_path_gain(x);
        path_gain.record(next < prev, || format!("x = {}", x - 1));
        prev = next;
    }

    let mut gain = LemmaTally::new("pendant_gain_decreasing");
    for a in 1..=10u64 {
        let mut prev = pendant_gain(a + 1, a);
        for x in a + 2..=m_max {
            let next = pendant_gain(x, a);
            gain.record(next < prev, || format!("a = {a}, x = {}", x - 1));
            prev = next;
        }
    }

    vec![linear.finish(), steep.finish(), floor.finish(), path_gain.finish(), gain.finish()]
}

fn has_pendant_on_degree_two(g: &Graph) -> bool {
    (0..g.order()).any(|v| g.deg(v) == 1 && g.neighbors(v).any(|w| g.deg(w) == 2))
}

/// Over bicyclic graphs on `2m` vertices with a perfect matching and no
/// pendant vertex hanging from a degree-two vertex, the index is at least
/// the perfect-matching minimum, with equality only for `B_{6,3}`.
pub fn check_restricted_perfect_matching(census: &Census) -> Option<LemmaCheckReport> {
    let n = census.n;
    if n % 2 == 1 || n < 6 {
        return None;
    }
    let m = n / 2;
    let bound = closed_form("th1", 0, m).expect("m >= 3");
    let b63 = canonical_code(&build_bnm(6, 3).expect("valid")).expect("small");
    let mut tally = LemmaTally::new(&format!("perfect_matching_no_pendant_on_degree_two/n={n}"));
    for i in census.class(Some(m)) {
        let g = &census.graphs[i];
        if has_pendant_on_degree_two(&g.graph) {
            continue;
        }
        let chi = &census.values[i];
        let ok = match chi.cmp(&bound) {
            Ordering::Greater => g.code != b63,
            Ordering::Equal => {
                tally.equality();
                g.code == b63
            }
            Ordering::Less => false,
        };
        tally.record(ok, || format!("{}: {chi}", g.code));
    }
    Some(tally.finish())
}

fn delete_vertices(g: &Graph, mut vs: Vec<usize>) -> Graph {
    vs.sort_unstable_by(|a, b| b.cmp(a));
    vs.into_iter().fold(g.clone(), |h, v| h.delete_vertex(v).expect("in range"))
}

/// Random connected graph with a pendant vertex, its neighbour and the
/// neighbour's other neighbours, for the deletion bounds.
fn pendant_instance(rng: &mut ChaCha8Rng, path_end: bool) -> (Graph, usize, usize) {
    loop {
        let k = rng.gen_range(3..=9);
        let extra = rng.gen_range(0..=3);
        let mut g = random_connected(rng, k, extra);
        let w = rng.gen_range(0..k);
        if path_end {
            let (h, u) = g.attach_path(w, 2).expect("room");
            return (h, u, u - 1);
        }
        for _ in 0..rng.gen_range(0..=3) {
            g = g.add_pendant(w).expect("room");
        }
        let (h, u) = g.attach_path(w, 1).expect("room");
        if h.order() >= 4 {
            return (h, u, w);
        }
    }
}

/// Deletion bounds on random graphs, the unicyclic perfect-matching bound
/// on every unicyclic graph of orders six and eight, and an unsaturated
/// pendant for every pendant-bearing graph in the given matching classes.
pub fn spot_check_cited_lemmas(samples: usize, seed: u64, budget: Budget) -> Vec<LemmaCheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut path_deletion = LemmaTally::new("pendant_path_deletion");
    let mut drawn = 0;
    while drawn < samples {
        let (g, u, v) = pendant_instance(&mut rng, true);
        let w = g.neighbors(v).find(|&x| x != u).expect("path");
        let pendant_nbrs = g.neighbors(w).filter(|&x| g.deg(x) == 1).count();
        if pendant_nbrs > 1 {
            continue;
        }
        drawn += 1;
        let dw = g.deg(w) as u64;
        let delta = sum_connectivity(&g) - sum_connectivity(&delete_vertices(&g, vec![u, v]));
        let bound = pendant_path_gain(dw) + q(1, 3);
        let tight = pendant_nbrs == 1 && g.neighbors(w).all(|x| x == v || g.deg(x) <= 2);
        let ok = match delta.cmp(&bound) {
            Ordering::Equal => {
                path_deletion.equality();
                tight
            }
            Ordering::Greater => !tight,
            Ordering::Less => false,
        };
        path_deletion.record(ok, || format!("{g:?}, u = {u}"));
    }

    let mut deletion = LemmaTally::new("pendant_deletion");
    for _ in 0..samples {
        let (g, u, v) = pendant_instance(&mut rng, false);
        let d = g.deg(v) as u64;
        let pendants = g.neighbors(v).filter(|&x| g.deg(x) == 1).count() as u64;
        let k = rng.gen_range(pendants..=d);
        let delta = sum_connectivity(&g) - sum_connectivity(&delete_vertices(&g, vec![u]));
        let bound = pendant_gain(d, k);
        let tight = pendants == k && g.neighbors(v).all(|x| g.deg(x) <= 2);
        let ok = match delta.cmp(&bound) {
            Ordering::Equal => {
                deletion.equality();
                tight
            }
            Ordering::Greater => !tight,
            Ordering::Less => false,
        };
        deletion.record(ok, || format!("{g:?}, u = {u}, k = {k}"));
    }

    let mut unicyclic = LemmaTally::new("unicyclic_perfect_matching_min");
    let h6 = canonical_code(&build_h6()).expect("small");
    for m in [3usize, 4] {
        let n = 2 * m;
        let mi = m as i64;
        let mu = m as u64;
        let bound = q(mi, mu + 3) + q(1, mu + 2) + q(mi - 2, 3) + rational(1, 2);
        let extremal = canonical_code(&build_unm(n, m).expect("valid")).expect("small");
        for c in all_unicyclic(n).expect("within budget").iter() {
            if c.code == h6 || !has_perfect_matching(&c.graph) {
                continue;
            }
            let chi = sum_connectivity(&c.graph);
            let ok = match chi.cmp(&bound) {
                Ordering::Equal => {
                    unicyclic.equality();
                    c.code == extremal
                }
                Ordering::Greater => c.code != extremal,
                Ordering::Less => false,
            };
            unicyclic.record(ok, || format!("{}: {chi}", c.code));
        }
    }

    let mut unsaturated = LemmaTally::new("unsaturated_pendant");
    for n in 7..=budget.max_n.min(10) {
        for m in 3..=(n - 1) / 2 {
            for c in bicyclic_with_matching_within(n, m, budget).expect("within budget") {
                let g = &c.graph;
                let pendants = g.pendent_vertices();
                if pendants.is_empty() {
                    continue;
                }
                let witness = pendants.iter().find_map(|&u| {
                    let rest = delete_vertices(g, vec![u]);
                    let found = maximum_matching(&rest);
                    if found.len() != m {
                        return None;
                    }
                    // undo the relabel of the last vertex into slot u
                    let last = g.order() - 1;
                    let relabel = |x: usize| if x == u { last } else { x };
                    let edges: Vec<(usize, usize)> = found.edges().iter().map(|&(a, b)| (relabel(a), relabel(b))).collect();
                    let covered = edges.iter().fold(0u64, |s, &(a, b)| s | bit(a) | bit(b));
                    let valid = edges.iter().all(|&(a, b)| g.has_edge(a, b)) && covered & bit(u) == 0;
                    valid.then_some(u)
                });
                unsaturated.record(witness.is_some(), || format!("{} (m = {m})", c.code));
            }
        }
    }

    vec![path_deletion.finish(), deletion.finish(), unicyclic.finish(), unsaturated.finish()]
}

/// The three strict rewrite inequalities on `samples` seeded random
/// instances each.
pub fn check_transform_lemmas(samples: usize, seed: u64) -> Vec<LemmaCheckReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let chi = sum_connectivity;

    let mut merge = LemmaTally::new("merge_paths");
    for _ in 0..samples {
        let inst = merge_instance(&mut rng);
        let (two, one) = merge_paths(&inst.host, inst.vertex, inst.long, inst.short).expect("valid instance");
        merge.record(chi(&two) < chi(&one), || format!("{:?} at {} ({}, {})", inst.host, inst.vertex, inst.long, inst.short));
    }

    let mut contract = LemmaTally::new("contract_and_pendant");
    for _ in 0..samples {
        let (g, u, v) = contraction_instance(&mut rng);
        let g1 = contract_and_pendant(&g, u, v).expect("valid instance");
        contract.record(chi(&g) > chi(&g1), || format!("{g:?} at {u}-{v}"));
    }

    let mut reports = vec![merge.finish(), contract.finish()];
    for (case, id) in [
        (RewireCase::DegreeTwo, "rewire_host_degree_two"),
        (RewireCase::DegreeThree, "rewire_host_degree_three"),
        (RewireCase::DegreeFour, "rewire_host_degree_four"),
    ] {
        let mut tally = LemmaTally::new(id);
        for _ in 0..samples {
            let inst = rewire_instance(&mut rng, case);
            let (h2, got) = rewire(&inst.graph, inst.u, inst.u2, inst.u_prime, false).expect("valid instance");
            tally.record(got == Some(case) && chi(&h2) > chi(&inst.graph), || {
                format!("{:?}, u = {}, u2 = {}, end = {}", inst.graph, inst.u, inst.u2, inst.u_prime)
            });
        }
        reports.push(tally.finish());
    }
    reports
}

/// Largest matching by trying every edge subset, largest first.
pub fn matching_number_by_subsets(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    assert!(edges.len() < 32, "edge subsets only enumerable for small graphs");
    let mut best = 0;
    for mask in 0u32..1 << edges.len() {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let mut covered = 0u64;
        let disjoint = Bits(u64::from(mask)).all(|i| {
            let (a, b) = edges[i];
            let fresh = covered & (bit(a) | bit(b)) == 0;
            covered |= bit(a) | bit(b);
            fresh
        });
        if disjoint {
            best = size;
        }
    }
    best
}

/// The blossom matching number against the subset oracle on every graph in
/// the census.
pub fn check_matching_oracle(census: &Census) -> LemmaCheckReport {
    let mut tally = LemmaTally::new(&format!("matching_number_oracle/n={}", census.n));
    for (c, &fast) in census.graphs.iter().zip(&census.matching) {
        let slow = matching_number_by_subsets(&c.graph);
        tally.record(slow == fast && fast == matching_number(&c.graph), || {
            format!("{}: blossom {fast}, subsets {slow}", c.code)
        });
    }
    tally.finish()
}
