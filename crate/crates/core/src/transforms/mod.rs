//! Graph rewrites that move the sum-connectivity index in a known
//! direction: merging two hanging paths, contracting an edge into a
//! pendant, and moving a cycle edge onto the end of a hanging path.

pub mod instances;

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, Graph};

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

/// `q` with paths on `a` and `b` vertices hung from `u`, and `q` with one
/// path on `a + b` vertices hung from `u`. The first has strictly smaller
/// sum-connectivity index.
pub fn merge_paths(q: &Graph, u: usize, a: usize, b: usize) -> Result<(Graph, Graph)> {
    if q.order() < 2 || !q.is_connected() {
        return Err(precondition("host must be connected with at least two vertices"));
    }
    q.degree(u)?;
    if b < 1 || a < b {
        return Err(precondition(format!("need a >= b >= 1, got a = {a}, b = {b}")));
    }
    let (two, _) = q.attach_path(u, a)?;
    let (two, _) = two.attach_path(u, b)?;
    let (one, _) = q.attach_path(u, a + b)?;
    Ok((two, one))
}

/// Deletes `uv`, identifies `u` and `v` into `u`, and reuses label `v` for
/// a new pendant on the merged vertex. Vertex count is unchanged and the
/// index strictly drops.
pub fn contract_and_pendant(g: &Graph, u: usize, v: usize) -> Result<Graph> {
    g.degree(u)?;
    g.degree(v)?;
    if !g.has_edge(u, v) {
        return Err(Error::EdgeMissing(u, v));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    if g.deg(u) < 2 || g.deg(v) < 2 {
        return Err(precondition("both endpoints need degree at least two"));
    }
    if g.row(u) & g.row(v) != 0 {
        return Err(precondition(format!("{u} and {v} have a common neighbour")));
    }
    let mut rows = g.rows().to_vec();
    let moved = g.row(v) & !bit(u);
    for x in Bits(moved) {
        rows[x] = (rows[x] & !bit(v)) | bit(u);
    }
    rows[u] = (g.row(u) & !bit(v)) | moved | bit(v);
    rows[v] = bit(u);
    Graph::from_rows(rows)
}

/// Which case of the cycle-edge rewiring inequality an instance satisfies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RewireCase {
    /// `d_M(u) = 2` and the host has maximum degree at most five.
    DegreeTwo,
    /// `d_M(u) = 3`, two neighbours of `u` have degree two, `d_M(u2) = 2`.
    DegreeThree,
    /// `d_M(u) = 4` and every neighbour of `u` has degree two.
    DegreeFour,
}

/// Decomposition of `h` into a host `M` and a path hanging from `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HangingPath {
    /// Path vertices from the one next to `u` out to the pendant end.
    pub vertices: Vec<usize>,
    /// Degree of `u` in the host.
    pub host_degree: usize,
    pub case: Option<RewireCase>,
}

/// Recovers the path from `u_prime` back to `u` and classifies the rewiring
/// of `u u2` by the host degrees.
pub fn analyze_rewire(h: &Graph, u: usize, u2: usize, u_prime: usize) -> Result<HangingPath> {
    h.degree(u)?;
    h.degree(u2)?;
    h.degree(u_prime)?;
    if !h.is_connected() {
        return Err(Error::Disconnected);
    }
    if u_prime == u || h.deg(u_prime) != 1 {
        return Err(precondition(format!("{u_prime} is not a pendant vertex distinct from {u}")));
    }
    let mut vertices = vec![u_prime];
    let mut prev = u_prime;
    let mut cur = h.neighbors(u_prime).next().expect("degree one");
    while cur != u {
        if h.deg(cur) != 2 {
            return Err(precondition(format!(
                "{u_prime} does not hang from {u} by a bare path (vertex {cur} has degree {})",
                h.deg(cur)
            )));
        }
        vertices.push(cur);
        let next = Bits(h.row(cur) & !bit(prev)).next().expect("degree two");
        prev = cur;
        cur = next;
    }
    vertices.reverse();
    let attach = vertices[0];
    if u2 == attach || !h.has_edge(u, u2) {
        return Err(precondition(format!("{u2} is not a host neighbour of {u}")));
    }
    let host_degree = h.deg(u) - 1;
    if !(2..=4).contains(&host_degree) {
        return Err(precondition(format!("host degree of {u} is {host_degree}, need 2..=4")));
    }
    let path_mask = vertices.iter().fold(0u64, |m, &x| m | bit(x));
    let host_neighbors: Vec<usize> = Bits(h.row(u) & !path_mask).collect();
    // host degrees equal graph degrees away from u
    let host_max = (0..h.order())
        .filter(|x| path_mask & bit(*x) == 0)
        .map(|x| if x == u { host_degree } else { h.deg(x) })
        .max()
        .unwrap_or(0);
    let deg_two = host_neighbors.iter().filter(|&&x| h.deg(x) == 2).count();
    let case = match host_degree {
        2 if host_max <= 5 => Some(RewireCase::DegreeTwo),
        3 if deg_two >= 2 && h.deg(u2) == 2 => Some(RewireCase::DegreeThree),
        4 if deg_two == 4 => Some(RewireCase::DegreeFour),
        _ => None,
    };
    Ok(HangingPath {
        vertices,
        host_degree,
        case,
    })
}

/// `H' = H - u u2 + u' u2`. Fails unless a case applies, except when
/// `forced`, in which case the rewiring is done anyway and the returned case
/// is `None`.
pub fn rewire(
    h: &Graph,
    u: usize,
    u2: usize,
    u_prime: usize,
    forced: bool,
) -> Result<(Graph, Option<RewireCase>)> {
    let shape = analyze_rewire(h, u, u2, u_prime)?;
    if shape.case.is_none() && !forced {
        return Err(precondition(format!(
            "no rewiring case applies at u = {u} (host degree {})",
            shape.host_degree
        )));
    }
    let out = h.remove_edge(u, u2)?.add_edge(u_prime, u2)?;
    Ok((out, shape.case))
}
