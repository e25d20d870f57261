//! Acceptance suite. Prints one line per criterion and exits nonzero if any
//! criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use sumconn::canon::canonical_code;
use sumconn::enumerate::{all_bicyclic, bicyclic_with_matching, oracle, Budget, Canonical};
use sumconn::families::{
    build_b4_plus_pendant, build_bnab, build_bnm, k4_minus_edge, members_b1_1, members_b1_2, members_b2,
    members_b3_1, members_b3_2,
};
use sumconn::graph::Graph;
use sumconn::invariants::{matching_number, sum_connectivity, sum_connectivity_f64};
use sumconn::radical::rat;
use sumconn::verify::{check_scalar_lemmas, check_transform_lemmas, run_suite, Suite};
use sumconn::RadicalSum;

type Outcome = Result<String, String>;

fn inv(num: i64, s: usize) -> RadicalSum {
    RadicalSum::over_sqrt(num, s as u64)
}

fn frac(num: i64, den: i64) -> RadicalSum {
    RadicalSum::rational(rat(num, den))
}

fn code(g: &Graph) -> String {
    canonical_code(g).unwrap().as_str().to_string()
}

fn code_set<'a>(graphs: impl IntoIterator<Item = &'a Graph>) -> BTreeSet<String> {
    graphs.into_iter().map(code).collect()
}

/// Distinct values in increasing order, each with the codes attaining it.
fn levels(class: &[Canonical]) -> Vec<(RadicalSum, BTreeSet<String>)> {
    let mut scored: Vec<(RadicalSum, String)> = class
        .iter()
        .map(|c| (sum_connectivity(&c.graph), c.code.as_str().to_string()))
        .collect();
    scored.sort();
    let mut out: Vec<(RadicalSum, BTreeSet<String>)> = Vec::new();
    for (v, c) in scored {
        match out.last_mut() {
            Some((last, set)) if *last == v => {
                set.insert(c);
            }
            _ => out.push((v, BTreeSet::from([c]))),
        }
    }
    out
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

/// Asserts a level is exactly `expected` with value `value`.
fn check_level(
    what: &str,
    level: Option<&(RadicalSum, BTreeSet<String>)>,
    expected: &BTreeSet<String>,
    value: &RadicalSum,
) -> Result<(), String> {
    let (v, set) = level.ok_or_else(|| format!("{what}: class too small"))?;
    ensure(set == expected, || format!("{what}: attained by {set:?}, expected {expected:?}"))?;
    ensure(v == value, || format!("{what}: value {v}, expected {value}"))
}

fn enumeration_ground_truth() -> Outcome {
    let four = all_bicyclic(4).unwrap();
    ensure(four.len() == 1, || format!("|B(4)| = {}", four.len()))?;
    ensure(four[0].code == canonical_code(&k4_minus_edge()).unwrap(), || "B(4) is not K4-e".into())?;
    let five = all_bicyclic(5).unwrap().len();
    ensure(five == 5, || format!("|B(5)| = {five}"))?;
    let mut counts = Vec::new();
    for n in 4..=8 {
        let grown: BTreeSet<_> = all_bicyclic(n).unwrap().iter().map(|c| c.code.clone()).collect();
        let filtered = oracle::filter_bicyclic(n);
        ensure(grown == filtered, || format!("n = {n}: {} grown vs {} filtered", grown.len(), filtered.len()))?;
        counts.push(grown.len());
    }
    Ok(format!("counts n=4..8: {counts:?}"))
}

/// `(m+1)/sqrt(n-m+4) + (n-2m+1)/sqrt(n-m+3) + (m-3)/sqrt(3) + 1`.
fn matching_minimum(n: usize, m: usize) -> RadicalSum {
    let (ni, mi) = (n as i64, m as i64);
    inv(mi + 1, n - m + 4) + inv(ni - 2 * mi + 1, n - m + 3) + inv(mi - 3, 3) + frac(1, 1)
}

fn matching_minimum_all() -> Outcome {
    let mut cases = 0;
    for n in 6..=12 {
        for m in 3..=n / 2 {
            let class = bicyclic_with_matching(n, m).unwrap();
            let lv = levels(&class);
            check_level(
                &format!("n = {n}, m = {m}"),
                lv.first(),
                &code_set([&build_bnm(n, m).unwrap()]),
                &matching_minimum(n, m),
            )?;
            cases += 1;
        }
    }
    Ok(format!("{cases} (n, m) classes"))
}

fn perfect_matching_minimum() -> Outcome {
    for m in 3..=6usize {
        let mi = m as i64;
        let value = inv(mi + 1, m + 4) + inv(1, m + 3) + inv(mi - 3, 3) + frac(1, 1);
        let lv = levels(&bicyclic_with_matching(2 * m, m).unwrap());
        check_level(&format!("m = {m}"), lv.first(), &code_set([&build_bnm(2 * m, m).unwrap()]), &value)?;
    }
    Ok("m = 3..6".into())
}

fn matching_two() -> Outcome {
    for n in 6..=12usize {
        let ni = n as i64;
        let lv = levels(&bicyclic_with_matching(n, 2).unwrap());
        let first = inv(1, n + 2) + inv(ni - 4, n) + inv(2, n + 1) + inv(2, 5);
        let second = inv(1, n + 2) + inv(2, n) + inv(ni - 5, n - 1) + inv(2, 6) + inv(1, 5);
        check_level(&format!("min n = {n}"), lv.first(), &code_set([&build_bnab(n, n - 1, 3).unwrap()]), &first)?;
        check_level(&format!("second n = {n}"), lv.get(1), &code_set([&build_bnab(n, n - 2, 4).unwrap()]), &second)?;
    }
    Ok("n = 6..12".into())
}

fn global_minimum() -> Outcome {
    for n in 5..=12usize {
        let ni = n as i64;
        let all = all_bicyclic(n).unwrap();
        let lv = levels(&all);
        let first = inv(1, n + 2) + inv(ni - 4, n) + inv(2, n + 1) + inv(2, 5);
        check_level(&format!("min n = {n}"), lv.first(), &code_set([&build_bnab(n, n - 1, 3).unwrap()]), &first)?;
        let (graph, value) = match n {
            5 => (build_b4_plus_pendant(), inv(3, 6) + inv(2, 5) + frac(1, 2)),
            6 | 7 => (
                build_bnab(n, n - 2, 4).unwrap(),
                inv(1, n + 2) + inv(2, n) + inv(ni - 5, n - 1) + inv(2, 6) + inv(1, 5),
            ),
            _ => (build_bnm(n, 3).unwrap(), inv(4, n + 1) + inv(ni - 5, n) + frac(1, 1)),
        };
        check_level(&format!("second n = {n}"), lv.get(1), &code_set([&graph]), &value)?;
    }
    Ok("n = 5..12".into())
}

fn global_maximum() -> Outcome {
    for n in 5..=12usize {
        let ni = n as i64;
        let mut lv = levels(&all_bicyclic(n).unwrap());
        lv.reverse();
        let top_members: Vec<Graph> = members_b1_1(n).into_iter().chain(members_b3_1(n)).collect();
        let second_members: Vec<Graph> = members_b1_2(n).into_iter().chain(members_b3_2(n)).collect();
        let top = frac(ni - 4, 2) + inv(1, 6) + inv(4, 5);
        let second = frac(ni - 5, 2) + inv(6, 5);
        check_level(&format!("max n = {n}"), lv.first(), &code_set(&top_members), &top)?;
        check_level(&format!("second n = {n}"), lv.get(1), &code_set(&second_members), &second)?;
        // exact ties inside each set
        for (set, value) in [(&top_members, &top), (&second_members, &second)] {
            ensure(set.iter().all(|g| sum_connectivity(g) == *value), || format!("n = {n}: tie broken"))?;
        }
        let b2 = frac(ni - 3, 2) + inv(4, 6);
        for g in members_b2(n) {
            let v = sum_connectivity(&g);
            ensure(v == b2 && v < second, || format!("n = {n}: B2 member {} at {v}", code(&g)))?;
        }
    }
    Ok("n = 5..12".into())
}

fn scalar_lemmas() -> Outcome {
    let reports = check_scalar_lemmas(1000);
    let mut summary = Vec::new();
    for r in &reports {
        ensure(r.pass, || format!("{}: {} failures {:?}", r.check_id, r.failure_count, r.failures))?;
        summary.push(format!("{}={}", r.check_id, r.instances));
    }
    let floor = reports.iter().find(|r| r.check_id == "shifted_difference_floor").unwrap();
    ensure(floor.equalities == 1, || format!("{} equalities", floor.equalities))?;
    ensure(
        floor.instances == 998 && reports[0].instances == 998 && reports[1].instances == 996,
        || "ranges not covered".into(),
    )?;
    ensure(reports[4].instances == (1..=10u64).map(|a| 1000 - a - 1).sum::<u64>() as usize, || {
        "gain range not covered".into()
    })?;
    Ok(summary.join(" "))
}

fn transform_lemmas() -> Outcome {
    let reports = check_transform_lemmas(150, 0x5eed);
    for r in &reports {
        ensure(r.pass && r.instances >= 100, || format!("{}: {} of {} failed", r.check_id, r.failure_count, r.instances))?;
    }
    Ok(format!("{} rewrites x 150 instances", reports.len()))
}

/// Largest subset of edges forming a matching.
fn subset_matching(g: &Graph) -> usize {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    (0u32..1 << edges.len())
        .filter(|mask| {
            let mut seen = 0u64;
            (0..edges.len()).filter(|i| mask >> i & 1 == 1).all(|i| {
                let (a, b) = edges[i];
                let clash = seen & (1 << a | 1 << b) != 0;
                seen |= 1 << a | 1 << b;
                !clash
            })
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn matching_oracle() -> Outcome {
    let mut total = 0;
    for n in 4..=10 {
        for c in all_bicyclic(n).unwrap().iter() {
            let (fast, slow) = (matching_number(&c.graph), subset_matching(&c.graph));
            ensure(fast == slow, || format!("{}: blossom {fast}, subsets {slow}", c.code))?;
            total += 1;
        }
    }
    Ok(format!("{total} graphs"))
}

fn float_consistency() -> Outcome {
    let mut worst = 0f64;
    let mut total = 0;
    for n in 4..=10 {
        for c in all_bicyclic(n).unwrap().iter() {
            let err = (sum_connectivity(&c.graph).to_f64() - sum_connectivity_f64(&c.graph)).abs();
            worst = worst.max(err);
            total += 1;
        }
    }
    ensure(worst <= 1e-9, || format!("max error {worst:e}"))?;
    // ties are exact term equality: two members of the max tie set agree
    // exactly while a value one ulp-scale away does not
    let a = sum_connectivity(&members_b1_1(8)[0]);
    let b = sum_connectivity(&members_b3_1(8)[0]);
    ensure(a == b, || "tie not exact".into())?;
    ensure(a != a.clone() + RadicalSum::rational(rat(1, 1_000_000_000_000_000)), || "inexact tie".into())?;
    Ok(format!("{total} graphs, max error {worst:.1e}"))
}

fn harness_agrees() -> Outcome {
    for suite in [Suite::Min, Suite::Max, Suite::Matching] {
        let report = run_suite(suite, 12, Budget::default()).unwrap();
        ensure(report.pass, || format!("{suite:?} suite failed"))?;
    }
    Ok("min, max and matching suites pass at n <= 12".into())
}

/// Id, name, check and time limit in seconds.
type Criterion = (&'static str, &'static str, fn() -> Outcome, u64);

fn main() -> ExitCode {
    let criteria: [Criterion; 11] = [
        ("1", "enumeration ground truth", enumeration_ground_truth, 300),
        ("2", "minimum over fixed matching number m >= 3", matching_minimum_all, 1800),
        ("3", "minimum with a perfect matching", perfect_matching_minimum, 1800),
        ("4", "minimum and second minimum at matching number two", matching_two, 1800),
        ("5", "minimum and second minimum over all bicyclic graphs", global_minimum, 1800),
        ("6", "maximum and second maximum tie sets", global_maximum, 1800),
        ("7", "scalar inequalities", scalar_lemmas, 60),
        ("8", "rewrite inequalities on random instances", transform_lemmas, 600),
        ("9", "matching number against subset oracle", matching_oracle, 600),
        ("10", "exact and float evaluation agree", float_consistency, 600),
        ("-", "verification harness reports agree", harness_agrees, 1800),
    ];
    let mut failed = 0;
    for (id, name, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|detail| {
            if elapsed > Duration::from_secs(limit) {
                Err(format!("took {elapsed:.1?}, limit {limit}s"))
            } else {
                Ok(detail)
            }
        });
        match outcome {
            Ok(detail) => println!("[PASS] {id:>2} {name} ({elapsed:.2?}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("[FAIL] {id:>2} {name} ({elapsed:.2?}): {why}");
            }
        }
    }
    if failed == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
