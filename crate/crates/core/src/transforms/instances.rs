//! Seeded random instances satisfying the preconditions of each rewrite.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{analyze_rewire, RewireCase};
use crate::graph::{bit, Bits, Graph};

/// Largest host order produced by the generators.
pub const MAX_INSTANCE_ORDER: usize = 12;

/// Random tree on `n` vertices plus up to `extra` additional edges, randomly
/// relabelled.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        edges.push((rng.gen_range(0..v), v));
    }
    let mut g = Graph::from_edges(n, &edges).expect("valid tree");
    let mut missing: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    missing.shuffle(rng);
    for &(u, v) in missing.iter().take(extra) {
        g = g.add_edge(u, v).expect("absent edge");
    }
    shuffle_labels(rng, &g)
}

pub fn shuffle_labels<R: Rng>(rng: &mut R, g: &Graph) -> Graph {
    let mut perm: Vec<usize> = (0..g.order()).collect();
    perm.shuffle(rng);
    g.permute_unchecked(&perm)
}

/// Host, attachment vertex and path lengths `a >= b >= 1`.
#[derive(Debug, Clone)]
pub struct MergeInstance {
    pub host: Graph,
    pub vertex: usize,
    pub long: usize,
    pub short: usize,
}

pub fn merge_instance<R: Rng>(rng: &mut R) -> MergeInstance {
    let n = rng.gen_range(2..=8);
    let extra = rng.gen_range(0..=3);
    let host = random_connected(rng, n, extra);
    let room = MAX_INSTANCE_ORDER - n;
    let short = rng.gen_range(1..=room / 2);
    let long = rng.gen_range(short..=room - short);
    MergeInstance {
        vertex: rng.gen_range(0..n),
        host,
        long,
        short,
    }
}

/// Graph and an edge whose endpoints both have degree at least two and no
/// common neighbour.
pub fn contraction_instance<R: Rng>(rng: &mut R) -> (Graph, usize, usize) {
    loop {
        let n = rng.gen_range(4..=MAX_INSTANCE_ORDER);
        let extra = rng.gen_range(0..=4);
        let g = random_connected(rng, n, extra);
        let choices: Vec<(usize, usize)> = g
            .edges()
            .filter(|&(u, v)| g.deg(u) >= 2 && g.deg(v) >= 2 && g.row(u) & g.row(v) == 0)
            .collect();
        if let Some(&(u, v)) = choices.choose(rng) {
            return if rng.gen_bool(0.5) { (g, u, v) } else { (g, v, u) };
        }
    }
}

/// Host with a path hanging from `u`, the host neighbour `u2` whose edge is
/// moved, and the pendant end `u_prime`.
#[derive(Debug, Clone)]
pub struct RewireInstance {
    pub graph: Graph,
    pub u: usize,
    pub u2: usize,
    pub u_prime: usize,
}

fn hang_path<R: Rng>(rng: &mut R, host: &Graph, u: usize, u2: usize) -> RewireInstance {
    let len = rng.gen_range(1..=MAX_INSTANCE_ORDER - host.order());
    let (graph, u_prime) = host.attach_path(u, len).expect("room for the path");
    RewireInstance { graph, u, u2, u_prime }
}

/// Degree-four host vertex whose neighbours all have degree two: each
/// neighbour is paired with another or tied into a random remainder.
fn degree_four_host<R: Rng>(rng: &mut R) -> (Graph, usize) {
    let rest = rng.gen_range(0..=5);
    let n = 5 + rest;
    let mut edges = Vec::new();
    if rest > 0 {
        let extra = rng.gen_range(0..=2);
        let r = random_connected(rng, rest, extra);
        edges.extend(r.edges().map(|(a, b)| (a + 5, b + 5)));
    }
    let mut spokes: Vec<usize> = (1..5).collect();
    spokes.shuffle(rng);
    let mut pending = None;
    for (i, &w) in spokes.iter().enumerate() {
        edges.push((0, w));
        if let Some(p) = pending.take() {
            edges.push((p, w));
        } else if rest > 0 && (i == 0 || rng.gen_bool(0.6)) {
            edges.push((w, 5 + rng.gen_range(0..rest)));
        } else {
            pending = Some(w);
        }
    }
    if let Some(p) = pending {
        debug_assert!(rest > 0, "an even number of spokes pairs off");
        edges.push((p, 5 + rng.gen_range(0..rest)));
    }
    let g = Graph::from_edges(n, &edges).expect("simple");
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    (g.permute_unchecked(&perm), perm[0])
}

/// Random instance of the requested rewiring case.
pub fn rewire_instance<R: Rng>(rng: &mut R, case: RewireCase) -> RewireInstance {
    loop {
        let (host, u, u2) = match case {
            RewireCase::DegreeFour => {
                let (host, u) = degree_four_host(rng);
                let spokes: Vec<usize> = host.neighbors(u).collect();
                let u2 = *spokes.choose(rng).expect("four spokes");
                (host, u, u2)
            }
            RewireCase::DegreeTwo | RewireCase::DegreeThree => {
                let target = if case == RewireCase::DegreeTwo { 2 } else { 3 };
                let n = rng.gen_range(target + 1..=10);
                let extra = rng.gen_range(1..=3);
                let host = random_connected(rng, n, extra);
                if case == RewireCase::DegreeTwo && host.max_degree() > 5 {
                    continue;
                }
                let centres: Vec<usize> = (0..n).filter(|&v| host.deg(v) == target).collect();
                let Some(&u) = centres.choose(rng) else { continue };
                let pool: Vec<usize> = if case == RewireCase::DegreeTwo {
                    host.neighbors(u).collect()
                } else {
                    Bits(host.row(u)).filter(|&w| host.deg(w) == 2).collect()
                };
                if case == RewireCase::DegreeThree && pool.len() < 2 {
                    continue;
                }
                let u2 = *pool.choose(rng).expect("nonempty");
                (host, u, u2)
            }
        };
        debug_assert!(host.row(u) & bit(u2) != 0);
        let inst = hang_path(rng, &host, u, u2);
        let shape = analyze_rewire(&inst.graph, inst.u, inst.u2, inst.u_prime).expect("well formed");
        debug_assert_eq!(shape.case, Some(case));
        return inst;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{contract_and_pendant, merge_paths, rewire};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn generators_meet_preconditions() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let m = merge_instance(&mut rng);
            assert!(m.host.order() + m.long + m.short <= MAX_INSTANCE_ORDER);
            merge_paths(&m.host, m.vertex, m.long, m.short).unwrap();
            let (g, u, v) = contraction_instance(&mut rng);
            contract_and_pendant(&g, u, v).unwrap();
            for case in [RewireCase::DegreeTwo, RewireCase::DegreeThree, RewireCase::DegreeFour] {
                let r = rewire_instance(&mut rng, case);
                assert!(r.graph.order() <= MAX_INSTANCE_ORDER);
                assert_eq!(rewire(&r.graph, r.u, r.u2, r.u_prime, false).unwrap().1, Some(case));
            }
        }
    }

    #[test]
    fn degree_four_hosts_vary() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let orders: std::collections::BTreeSet<usize> =
            (0..100).map(|_| degree_four_host(&mut rng).0.order()).collect();
        assert!(orders.len() >= 4);
    }
}
