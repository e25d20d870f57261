//! Labeled simple undirected graphs on at most 64 vertices.
//!
//! Each vertex owns one `u64` adjacency row, so adjacency tests, degree
//! queries and neighbourhood intersections are single word operations.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// Iterator over the set bits of a word, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Bits {}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

#[inline]
pub(crate) const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Immutable labeled simple graph on vertices `0..n`.
///
/// Invariants: no loops, symmetric rows, no bits at or above `n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::EdgePresent(u, v));
            }
            g.link(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, validating every invariant.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        for (v, &row) in rows.iter().enumerate() {
            if row & bit(v) != 0 {
                return Err(Error::SelfLoop(v));
            }
            if row & !low_mask(n) != 0 {
                return Err(Error::VertexOutOfRange {
                    vertex: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            for u in Bits(row) {
                if rows[u] & bit(v) == 0 {
                    return Err(Error::Precondition(format!(
                        "adjacency rows are not symmetric at {v}-{u}"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    fn link(&mut self, u: usize, v: usize) {
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    #[inline]
    fn unlink(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    /// Number of vertices.
    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] & bit(v) != 0
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.deg(v))
    }

    /// Degree without the range check; panics on out-of-range `v`.
    #[inline]
    pub fn deg(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.deg(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.deg(v)).max().unwrap_or(0)
    }

    pub fn neighbors(&self, v: usize) -> Bits {
        Bits(self.adj[v])
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let all = low_mask(self.n);
        let mut seen = 1u64;
        let mut frontier = 1u64;
        while frontier != 0 {
            let mut next = 0u64;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen & all == all
    }

    /// `|E| - |V| + 1`, defined only for connected graphs.
    pub fn cyclomatic_number(&self) -> Result<i64> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        Ok(self.size() as i64 - self.n as i64 + 1)
    }

    pub fn is_bicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.n + 1
    }

    pub fn is_unicyclic(&self) -> bool {
        self.is_connected() && self.size() == self.n
    }

    /// Vertices of degree one, ascending.
    pub fn pendent_vertices(&self) -> Vec<usize> {
        (0..self.n).filter(|&v| self.deg(v) == 1).collect()
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        if self.has_edge(u, v) {
            return Err(Error::EdgePresent(u, v));
        }
        let mut g = self.clone();
        g.link(u, v);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Graph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if !self.has_edge(u, v) {
            return Err(Error::EdgeMissing(u, v));
        }
        let mut g = self.clone();
        g.unlink(u, v);
        Ok(g)
    }

    /// Deletes `v` and its edges. The highest label moves into the gap so
    /// the remaining vertices stay contiguous.
    pub fn delete_vertex(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == 1 {
            return Err(Error::InvalidOrder(0));
        }
        let last = self.n - 1;
        let mut g = self.clone();
        for u in Bits(g.adj[v]) {
            g.unlink(u, v);
        }
        if v != last {
            for u in Bits(g.adj[last]) {
                g.adj[u] = (g.adj[u] & !bit(last)) | bit(v);
            }
            g.adj[v] = g.adj[last];
        }
        g.adj.pop();
        g.n = last;
        Ok(g)
    }

    /// Appends a new vertex (label `n`) adjacent only to `v`.
    pub fn add_pendant(&self, v: usize) -> Result<Graph> {
        self.check_vertex(v)?;
        if self.n == MAX_VERTICES {
            return Err(Error::InvalidOrder(self.n + 1));
        }
        let mut g = self.clone();
        g.adj.push(0);
        g.n += 1;
        g.link(v, self.n);
        Ok(g)
    }

    /// Appends `len` new vertices forming a path hanging from `v`.
    /// Returns the new graph and the label of the far end (`v` when `len = 0`).
    pub fn attach_path(&self, v: usize, len: usize) -> Result<(Graph, usize)> {
        let mut g = self.clone();
        let mut end = v;
        for _ in 0..len {
            g = g.add_pendant(end)?;
            end = g.n - 1;
        }
        Ok((g, end))
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::Precondition(format!(
                "permutation has length {} for a graph on {} vertices",
                perm.len(),
                self.n
            )));
        }
        let mut seen = 0u64;
        for &p in perm {
            self.check_vertex(p)?;
            seen |= bit(p);
        }
        if seen != low_mask(self.n) {
            return Err(Error::Precondition("not a permutation".into()));
        }
        Ok(self.permute_unchecked(perm))
    }

    pub(crate) fn permute_unchecked(&self, perm: &[usize]) -> Graph {
        let mut rows = vec![0u64; self.n];
        for v in 0..self.n {
            let mut r = 0u64;
            for u in Bits(self.adj[v]) {
                r |= bit(perm[u]);
            }
            rows[perm[v]] = r;
        }
        Graph { n: self.n, adj: rows }
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::InvalidOrder(n));
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph { n, adj: rows })
    }

    /// Graphviz DOT rendering.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in 0..self.n {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_bnm, cycle, path};

    fn k4_minus_e() -> Graph {
        Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
    }

    #[test]
    fn degrees() {
        let c5 = cycle(5).unwrap();
        assert!((0..5).all(|v| c5.degree(v).unwrap() == 2));
        assert_eq!(k4_minus_e().degree(0).unwrap(), 3);
        assert_eq!(build_bnm(6, 3).unwrap().degree(0).unwrap(), 5);
        assert!(matches!(c5.degree(5), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        for g in [cycle(7).unwrap(), k4_minus_e(), build_bnm(10, 4).unwrap()] {
            assert_eq!(g.degrees().iter().sum::<usize>(), 2 * g.size());
        }
    }

    #[test]
    fn connectivity() {
        assert!(cycle(6).unwrap().is_connected());
        let two_triangles = cycle(3).unwrap().disjoint_union(&cycle(3).unwrap()).unwrap();
        assert!(!two_triangles.is_connected());
        assert_eq!(two_triangles.cyclomatic_number(), Err(Error::Disconnected));
        assert!(Graph::empty(1).unwrap().is_connected());
    }

    #[test]
    fn cyclomatic() {
        assert_eq!(path(5).unwrap().cyclomatic_number().unwrap(), 0);
        assert_eq!(cycle(7).unwrap().cyclomatic_number().unwrap(), 1);
        assert_eq!(k4_minus_e().cyclomatic_number().unwrap(), 2);
        assert!(!cycle(5).unwrap().is_bicyclic());
        assert!(k4_minus_e().is_bicyclic());
        assert!(build_bnm(10, 4).unwrap().is_bicyclic());
    }

    #[test]
    fn pendants() {
        assert!(cycle(6).unwrap().pendent_vertices().is_empty());
        assert_eq!(path(4).unwrap().pendent_vertices(), vec![0, 3]);
    }

    #[test]
    fn edit_operations() {
        let c3 = cycle(3).unwrap();
        let with_pendant = c3.add_pendant(1).unwrap();
        assert_eq!(with_pendant.delete_vertex(3).unwrap(), c3);

        let c4 = k4_minus_e().remove_edge(0, 1).unwrap();
        assert_eq!(c4.degrees(), vec![2, 2, 2, 2]);
        assert!(c4.is_connected() && c4.size() == 4);

        assert!(matches!(c3.add_edge(0, 1), Err(Error::EdgePresent(0, 1))));
        assert!(matches!(c4.remove_edge(0, 1), Err(Error::EdgeMissing(0, 1))));
        assert!(matches!(c3.add_edge(1, 1), Err(Error::SelfLoop(1))));
    }

    #[test]
    fn delete_vertex_moves_last_label_into_gap() {
        // path 0-1-2-3, delete 1: vertex 3 becomes 1, edges {0}, {1-2}
        let p = path(4).unwrap();
        let g = p.delete_vertex(1).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn from_rows_rejects_asymmetry() {
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
        assert!(Graph::from_rows(vec![0b10, 0b01]).is_ok());
    }

    #[test]
    fn order_limits() {
        assert!(Graph::empty(0).is_err());
        assert!(Graph::empty(65).is_err());
        let big = Graph::empty(64).unwrap();
        assert!(big.add_pendant(0).is_err());
        assert_eq!(big.add_edge(0, 63).unwrap().size(), 1);
    }
}
