//! Constructors for the named bicyclic (and a few unicyclic) families.
//!
//! Labeling conventions are fixed so graph6 output is reproducible:
//!
//! * `B_{n,m}`: 0 is the shared vertex of the triangles `{0,1,2}` and
//!   `{0,3,4}`; then the `n-2m+1` pendants; then the `m-3` two-vertex paths,
//!   each as `(near, far)`.
//! * `B_n(a,b)`: `K4 - e` on `{0,1,2,3}` with `0,1` of degree three;
//!   `a-3` pendants on 0, then `b-3` pendants on 1.
//! * `U_{n,m}`: triangle `{0,1,2}`, pendants and two-vertex paths on 0.
//! * `H6`: triangle `{0,1,2}` with pendant `i+3` on vertex `i`.
//!
//! Member sets of the five pendant-free classes are parameter sweeps,
//! deduplicated by canonical code and returned in sweep order.

use std::collections::HashSet;
use std::fmt;

use crate::canon::canonical_code;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn family_error(family: &'static str, valid: &'static str, reason: impl Into<String>) -> Error {
    Error::Family {
        family,
        reason: reason.into(),
        valid,
    }
}

fn with_edges(n: usize, edges: &[(usize, usize)]) -> Graph {
    Graph::from_edges(n, edges).expect("family constructions are simple graphs")
}

pub fn cycle(n: usize) -> Result<Graph> {
    if !(3..=64).contains(&n) {
        return Err(family_error("cycle", "3 <= n <= 64", format!("n = {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(with_edges(n, &edges))
}

pub fn path(n: usize) -> Result<Graph> {
    if !(1..=64).contains(&n) {
        return Err(family_error("path", "1 <= n <= 64", format!("n = {n}")));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(with_edges(n, &edges))
}

/// The unique 4-vertex bicyclic graph; 0 and 1 have degree three.
pub fn k4_minus_edge() -> Graph {
    with_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Hanging `paths` two-vertex paths and `pendants` single vertices on `hub`.
fn decorate(base: &[(usize, usize)], base_n: usize, hub: usize, pendants: usize, paths: usize) -> Graph {
    let mut edges = base.to_vec();
    let mut next = base_n;
    for _ in 0..pendants {
        edges.push((hub, next));
        next += 1;
    }
    for _ in 0..paths {
        edges.push((hub, next));
        edges.push((next, next + 1));
        next += 2;
    }
    with_edges(next, &edges)
}

/// Two triangles sharing vertex 0, with `n-2m+1` pendants and `m-3`
/// two-vertex paths on the shared vertex.
pub fn build_bnm(n: usize, m: usize) -> Result<Graph> {
    const VALID: &str = "3 <= m <= floor(n/2), n <= 64";
    if m < 3 || 2 * m > n || n > 64 {
        return Err(family_error("bnm", VALID, format!("n = {n}, m = {m}")));
    }
    let triangles = [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)];
    Ok(decorate(&triangles, 5, 0, n - 2 * m + 1, m - 3))
}

/// `K4 - e` with `a-3` and `b-3` pendants on its two degree-three vertices.
pub fn build_bnab(n: usize, a: usize, b: usize) -> Result<Graph> {
    const VALID: &str = "a >= b >= 3, a + b = n + 2, 4 <= n <= 64";
    if b < 3 || a < b || a + b != n + 2 || !(4..=64).contains(&n) {
        return Err(family_error("bnab", VALID, format!("n = {n}, a = {a}, b = {b}")));
    }
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    let mut next = 4;
    for _ in 0..a - 3 {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..b - 3 {
        edges.push((1, next));
        next += 1;
    }
    Ok(with_edges(n, &edges))
}

/// Triangle with `n-2m+1` pendants and `m-2` two-vertex paths on vertex 0.
pub fn build_unm(n: usize, m: usize) -> Result<Graph> {
    const VALID: &str = "2 <= m <= floor(n/2), n <= 64";
    if m < 2 || 2 * m > n || n > 64 {
        return Err(family_error("unm", VALID, format!("n = {n}, m = {m}")));
    }
    Ok(decorate(&[(0, 1), (0, 2), (1, 2)], 3, 0, n - 2 * m + 1, m - 2))
}

/// Triangle with one pendant on every vertex.
pub fn build_h6() -> Graph {
    with_edges(6, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 4), (2, 5)])
}

/// `K4 - e` with a pendant on a degree-two vertex (vertex 2, pendant 4).
pub fn build_b4_plus_pendant() -> Graph {
    with_edges(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4)])
}

fn push_cycle(edges: &mut Vec<(usize, usize)>, vertices: &[usize]) {
    for i in 0..vertices.len() {
        edges.push((vertices[i], vertices[(i + 1) % vertices.len()]));
    }
}

fn push_path(edges: &mut Vec<(usize, usize)>, vertices: &[usize]) {
    for w in vertices.windows(2) {
        edges.push((w[0], w[1]));
    }
}

/// Cycles `C_a` on `0..a` and `C_b` on `a..a+b`, joined from 0 to `a` by a
/// path with `internal` interior vertices.
fn joined_cycles(a: usize, b: usize, internal: usize) -> Graph {
    let n = a + b + internal;
    let mut edges = Vec::with_capacity(n + 1);
    push_cycle(&mut edges, &(0..a).collect::<Vec<_>>());
    push_cycle(&mut edges, &(a..a + b).collect::<Vec<_>>());
    let mut link = vec![0];
    link.extend(a + b..n);
    link.push(a);
    push_path(&mut edges, &link);
    with_edges(n, &edges)
}

/// Cycle on `0..a` with vertices 0 and `d` joined by a path with
/// `internal` interior vertices (`internal = 0` is a chord).
fn cycle_with_ear(a: usize, d: usize, internal: usize) -> Graph {
    let n = a + internal;
    let mut edges = Vec::with_capacity(n + 1);
    push_cycle(&mut edges, &(0..a).collect::<Vec<_>>());
    let mut ear = vec![0];
    ear.extend(a..n);
    ear.push(d);
    push_path(&mut edges, &ear);
    with_edges(n, &edges)
}

fn dedup(graphs: impl IntoIterator<Item = Graph>) -> Vec<Graph> {
    let mut seen = HashSet::new();
    graphs
        .into_iter()
        .filter(|g| seen.insert(canonical_code(g).expect("within canonical cap")))
        .collect()
}

/// Two disjoint cycles `C_a`, `C_b` with `a + b = n` joined by an edge.
pub fn members_b1_1(n: usize) -> Vec<Graph> {
    if n < 6 {
        return Vec::new();
    }
    dedup((3..=n / 2).map(|b| joined_cycles(n - b, b, 0)))
}

/// Two disjoint cycles with `a + b < n` joined by a path of length
/// `n - a - b + 1`.
pub fn members_b1_2(n: usize) -> Vec<Graph> {
    if n < 7 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 3..n {
        for b in 3..=a {
            if a + b < n {
                out.push(joined_cycles(a, b, n - a - b));
            }
        }
    }
    dedup(out)
}

/// Cycles `C_a`, `C_b` with `a + b = n + 1` sharing one vertex.
pub fn members_b2(n: usize) -> Vec<Graph> {
    if n < 5 {
        return Vec::new();
    }
    dedup((3..=n.div_ceil(2)).map(|b| {
        let a = n + 1 - b;
        let mut edges = Vec::with_capacity(n + 1);
        push_cycle(&mut edges, &(0..a).collect::<Vec<_>>());
        let mut second = vec![0];
        second.extend(a..n);
        push_cycle(&mut edges, &second);
        with_edges(n, &edges)
    }))
}

/// `C_n` plus a chord between two non-adjacent vertices.
pub fn members_b3_1(n: usize) -> Vec<Graph> {
    if n < 4 {
        return Vec::new();
    }
    dedup((2..=n / 2).map(|d| cycle_with_ear(n, d, 0)))
}

/// `C_a`, `4 <= a <= n-1`, with two non-adjacent vertices joined by a path
/// of length `n - a + 1`.
pub fn members_b3_2(n: usize) -> Vec<Graph> {
    if n < 5 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for a in 4..n {
        for d in 2..=a / 2 {
            out.push(cycle_with_ear(a, d, n - a));
        }
    }
    dedup(out)
}

/// Every pendant-free bicyclic graph on `n` vertices, as the union of the
/// five classes.
pub fn pendant_free_members(n: usize) -> Vec<Graph> {
    let mut all = members_b1_1(n);
    all.extend(members_b1_2(n));
    all.extend(members_b2(n));
    all.extend(members_b3_1(n));
    all.extend(members_b3_2(n));
    dedup(all)
}

/// One named family with its parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilySpec {
    Bnm { n: usize, m: usize },
    Bnab { n: usize, a: usize, b: usize },
    Unm { n: usize, m: usize },
    H6,
    Cycle { n: usize },
    Path { n: usize },
    B1_1 { n: usize },
    B1_2 { n: usize },
    B2 { n: usize },
    B3_1 { n: usize },
    B3_2 { n: usize },
    B4PlusPendant,
}

/// Stable family names accepted by [`FamilySpec::parse`].
pub const FAMILY_NAMES: [&str; 12] = [
    "bnm",
    "bnab",
    "unm",
    "h6",
    "cycle",
    "path",
    "b1-1",
    "b1-2",
    "b2",
    "b3-1",
    "b3-2",
    "b4-plus-pendant",
];

/// Raw named parameters as they arrive from a command line.
#[derive(Debug, Clone, Copy, Default)]
pub struct FamilyParams {
    pub n: Option<usize>,
    pub m: Option<usize>,
    pub a: Option<usize>,
    pub b: Option<usize>,
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        match self {
            FamilySpec::Bnm { .. } => "bnm",
            FamilySpec::Bnab { .. } => "bnab",
            FamilySpec::Unm { .. } => "unm",
            FamilySpec::H6 => "h6",
            FamilySpec::Cycle { .. } => "cycle",
            FamilySpec::Path { .. } => "path",
            FamilySpec::B1_1 { .. } => "b1-1",
            FamilySpec::B1_2 { .. } => "b1-2",
            FamilySpec::B2 { .. } => "b2",
            FamilySpec::B3_1 { .. } => "b3-1",
            FamilySpec::B3_2 { .. } => "b3-2",
            FamilySpec::B4PlusPendant => "b4-plus-pendant",
        }
    }

    /// Human-readable parameter ranges.
    pub fn valid_ranges(name: &str) -> &'static str {
        match name {
            "bnm" => "--n N --m M with 3 <= M <= floor(N/2)",
            "bnab" => "--n N --a A --b B with A >= B >= 3, A + B = N + 2, N >= 4",
            "unm" => "--n N --m M with 2 <= M <= floor(N/2)",
            "h6" | "b4-plus-pendant" => "no parameters",
            "cycle" => "--n N with N >= 3",
            "path" => "--n N with N >= 1",
            "b1-1" => "--n N with N >= 6",
            "b1-2" => "--n N with N >= 7",
            "b2" => "--n N with N >= 5",
            "b3-1" => "--n N with N >= 4",
            "b3-2" => "--n N with N >= 5",
            _ => "one of: bnm bnab unm h6 cycle path b1-1 b1-2 b2 b3-1 b3-2 b4-plus-pendant",
        }
    }

    pub fn parse(name: &str, p: FamilyParams) -> Result<FamilySpec> {
        let need = |v: Option<usize>, what: &str| {
            v.ok_or_else(|| Error::Family {
                family: FAMILY_NAMES.iter().copied().find(|&f| f == name).unwrap_or("family"),
                reason: format!("missing --{what}"),
                valid: FamilySpec::valid_ranges(name),
            })
        };
        Ok(match name {
            "bnm" => FamilySpec::Bnm { n: need(p.n, "n")?, m: need(p.m, "m")? },
            "bnab" => FamilySpec::Bnab {
                n: need(p.n, "n")?,
                a: need(p.a, "a")?,
                b: need(p.b, "b")?,
            },
            "unm" => FamilySpec::Unm { n: need(p.n, "n")?, m: need(p.m, "m")? },
            "h6" => FamilySpec::H6,
            "cycle" => FamilySpec::Cycle { n: need(p.n, "n")? },
            "path" => FamilySpec::Path { n: need(p.n, "n")? },
            "b1-1" => FamilySpec::B1_1 { n: need(p.n, "n")? },
            "b1-2" => FamilySpec::B1_2 { n: need(p.n, "n")? },
            "b2" => FamilySpec::B2 { n: need(p.n, "n")? },
            "b3-1" => FamilySpec::B3_1 { n: need(p.n, "n")? },
            "b3-2" => FamilySpec::B3_2 { n: need(p.n, "n")? },
            "b4-plus-pendant" => FamilySpec::B4PlusPendant,
            _ => {
                return Err(Error::Family {
                    family: "family",
                    reason: format!("unknown family `{name}`"),
                    valid: FamilySpec::valid_ranges(""),
                })
            }
        })
    }

    /// Smallest `n` for which a member set is nonempty.
    pub fn class_min_order(&self) -> Option<usize> {
        match self {
            FamilySpec::B1_1 { .. } => Some(6),
            FamilySpec::B1_2 { .. } => Some(7),
            FamilySpec::B2 { .. } => Some(5),
            FamilySpec::B3_1 { .. } => Some(4),
            FamilySpec::B3_2 { .. } => Some(5),
            _ => None,
        }
    }

    /// The constructed graph, or every member for a class.
    pub fn build(&self) -> Result<Vec<Graph>> {
        let class = |n: usize, f: fn(usize) -> Vec<Graph>| -> Result<Vec<Graph>> {
            let min = self.class_min_order().expect("class");
            if n < min || n > 64 {
                return Err(family_error(self.name(), FamilySpec::valid_ranges(self.name()), format!("n = {n}")));
            }
            Ok(f(n))
        };
        match *self {
            FamilySpec::Bnm { n, m } => Ok(vec![build_bnm(n, m)?]),
            FamilySpec::Bnab { n, a, b } => Ok(vec![build_bnab(n, a, b)?]),
            FamilySpec::Unm { n, m } => Ok(vec![build_unm(n, m)?]),
            FamilySpec::H6 => Ok(vec![build_h6()]),
            FamilySpec::Cycle { n } => Ok(vec![cycle(n)?]),
            FamilySpec::Path { n } => Ok(vec![path(n)?]),
            FamilySpec::B1_1 { n } => class(n, members_b1_1),
            FamilySpec::B1_2 { n } => class(n, members_b1_2),
            FamilySpec::B2 { n } => class(n, members_b2),
            FamilySpec::B3_1 { n } => class(n, members_b3_1),
            FamilySpec::B3_2 { n } => class(n, members_b3_2),
            FamilySpec::B4PlusPendant => Ok(vec![build_b4_plus_pendant()]),
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::Bnm { n, m } => write!(f, "B_{{{n},{m}}}"),
            FamilySpec::Bnab { n, a, b } => write!(f, "B_{n}({a},{b})"),
            FamilySpec::Unm { n, m } => write!(f, "U_{{{n},{m}}}"),
            FamilySpec::H6 => f.write_str("H6"),
            FamilySpec::Cycle { n } => write!(f, "C_{n}"),
            FamilySpec::Path { n } => write!(f, "P_{n}"),
            FamilySpec::B1_1 { n } => write!(f, "B1^(1)({n})"),
            FamilySpec::B1_2 { n } => write!(f, "B1^(2)({n})"),
            FamilySpec::B2 { n } => write!(f, "B2({n})"),
            FamilySpec::B3_1 { n } => write!(f, "B3^(1)({n})"),
            FamilySpec::B3_2 { n } => write!(f, "B3^(2)({n})"),
            FamilySpec::B4PlusPendant => f.write_str("K4-e+pendant"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::{matching_number, sum_connectivity};
    use crate::radical::{rat, RadicalSum};

    fn r(num: i64, s: u64) -> RadicalSum {
        RadicalSum::over_sqrt(num, s)
    }

    fn q(num: i64, den: i64) -> RadicalSum {
        RadicalSum::rational(rat(num, den))
    }

    #[test]
    fn bnm_shape() {
        let g = build_bnm(6, 3).unwrap();
        let mut degs = g.degrees();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![5, 2, 2, 2, 2, 1]);
        assert_eq!(sum_connectivity(&g), r(4, 7) + r(1, 6) + q(1, 1));
        for n in 6..=14 {
            for m in 3..=n / 2 {
                let g = build_bnm(n, m).unwrap();
                assert_eq!(g.order(), n);
                assert!(g.is_bicyclic());
                assert_eq!(g.deg(0), n - m + 2);
                assert_eq!(matching_number(&g), m);
            }
        }
        assert!(build_bnm(5, 3).is_err());
        assert!(build_bnm(8, 2).is_err());
    }

    #[test]
    fn bnm_perfect_matching_closed_form() {
        let m = 4i64;
        let expected = r(m + 1, (m + 4) as u64) + r(1, (m + 3) as u64) + r(m - 3, 3) + q(1, 1);
        assert_eq!(sum_connectivity(&build_bnm(8, 4).unwrap()), expected);
    }

    #[test]
    fn bnab_shape() {
        assert_eq!(build_bnab(4, 3, 3).unwrap(), k4_minus_edge());
        let n = 8i64;
        let g = build_bnab(8, 7, 3).unwrap();
        assert_eq!(
            sum_connectivity(&g),
            r(1, (n + 2) as u64) + r(n - 4, n as u64) + r(2, (n + 1) as u64) + r(2, 5)
        );
        let g = build_bnab(8, 6, 4).unwrap();
        assert_eq!(
            sum_connectivity(&g),
            r(1, (n + 2) as u64) + r(2, n as u64) + r(n - 5, (n - 1) as u64) + r(2, 6) + r(1, 5)
        );
        assert_eq!(matching_number(&g), 2);
        assert!(g.is_bicyclic());
        assert_eq!(g.pendent_vertices().len(), 4);
        assert_eq!(build_bnab(6, 5, 3).unwrap().pendent_vertices().len(), 2);
        assert!(build_bnab(8, 4, 6).is_err());
        assert!(build_bnab(8, 5, 4).is_err());
    }

    #[test]
    fn unicyclic_constructions() {
        let m = 4i64;
        let u = build_unm(8, 4).unwrap();
        assert_eq!(u.cyclomatic_number().unwrap(), 1);
        assert_eq!(
            sum_connectivity(&u),
            r(m, (m + 3) as u64) + r(1, (m + 2) as u64) + r(m - 2, 3) + q(1, 2)
        );
        assert_eq!(matching_number(&build_unm(6, 3).unwrap()), 3);
        let h6 = build_h6();
        assert_eq!(h6.cyclomatic_number().unwrap(), 1);
        assert_eq!(h6.pendent_vertices().len(), 3);
        assert_eq!(sum_connectivity(&h6), r(3, 6) + q(3, 2));
        assert!(build_unm(7, 4).is_err());
    }

    #[test]
    fn b4_plus_pendant_value() {
        let g = build_b4_plus_pendant();
        assert!(g.is_bicyclic());
        assert_eq!(sum_connectivity(&g), r(3, 6) + r(2, 5) + q(1, 2));
    }

    #[test]
    fn class_members_are_pendant_free_bicyclic() {
        for n in 4..=12 {
            for g in pendant_free_members(n) {
                assert_eq!(g.order(), n);
                assert!(g.is_bicyclic());
                assert!(g.pendent_vertices().is_empty());
            }
        }
        assert_eq!(members_b3_1(5).len(), 1);
        let b31 = members_b3_1(4);
        assert_eq!(b31.len(), 1);
        assert_eq!(canonical_code(&b31[0]).unwrap(), canonical_code(&k4_minus_edge()).unwrap());
        assert!(members_b1_1(5).is_empty());
        assert!(members_b1_2(6).is_empty());
    }

    #[test]
    fn class_values_at_eight() {
        let n = 8i64;
        let top = q(n - 4, 2) + r(1, 6) + r(4, 5);
        let second = q(n - 5, 2) + r(6, 5);
        for g in members_b1_1(8).into_iter().chain(members_b3_1(8)) {
            assert_eq!(sum_connectivity(&g), top);
        }
        for g in members_b1_2(8).into_iter().chain(members_b3_2(8)) {
            assert_eq!(sum_connectivity(&g), second);
        }
    }

    #[test]
    fn spec_parsing() {
        let p = FamilyParams { n: Some(6), m: Some(3), ..Default::default() };
        let spec = FamilySpec::parse("bnm", p).unwrap();
        assert_eq!(spec, FamilySpec::Bnm { n: 6, m: 3 });
        assert_eq!(spec.build().unwrap()[0], build_bnm(6, 3).unwrap());
        assert!(FamilySpec::parse("bnab", p).is_err());
        assert!(FamilySpec::parse("zzz", p).is_err());
        assert!(FamilySpec::B1_2 { n: 6 }.build().is_err());
        for name in FAMILY_NAMES {
            assert!(!FamilySpec::valid_ranges(name).is_empty());
        }
        assert_eq!(FamilySpec::Cycle { n: 5 }.build().unwrap()[0].size(), 5);
    }
}
