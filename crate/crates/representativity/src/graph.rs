//! Finite simple undirected graphs over dense vertex labels `0..n-1`,
//! stored as one adjacency bit row per vertex.

use crate::error::{Error, Result};
use std::fmt;

/// Largest vertex count a [`Graph`] can hold (one `u64` bit row per vertex).
pub const MAX_VERTICES: usize = 64;

/// A subset of the vertices `0..n-1` of some graph, with set semantics.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn full(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    /// Ascending iterator over members.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Flags recording what ingestion normalized away.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct NormalizationFlags {
    pub loops_dropped: bool,
    pub multi_edges_collapsed: bool,
}

impl NormalizationFlags {
    pub fn as_strings(&self) -> Vec<String> {
        let mut out = Vec::new();
        if self.loops_dropped {
            out.push("loops_dropped".to_string());
        }
        if self.multi_edges_collapsed {
            out.push("multi_edges_collapsed".to_string());
        }
        out
    }
}

/// Finite simple undirected graph on vertices `0..n-1`.
///
/// Adjacency is symmetric with an empty diagonal; row `v` has bit `u` set
/// iff `{u, v}` is an edge.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

/// Named graph families accepted by [`Graph::make_named`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedKind {
    Complete,
    Cycle,
    Path,
    ChairD5,
    Edgeless,
}

impl Graph {
    pub fn edgeless(n: usize) -> Self {
        assert!(n <= MAX_VERTICES);
        Graph { n, adj: vec![0; n] }
    }

    /// Builds a graph from an edge list, asserting the input is already simple.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let (g, flags) = Graph::from_edges_normalized(n, edges);
        assert_eq!(flags, NormalizationFlags::default(), "input was not simple");
        g
    }

    /// Builds a graph from a possibly loopy/multi edge list, dropping loops and
    /// collapsing parallel edges. Returns what was normalized.
    pub fn from_edges_normalized(n: usize, edges: &[(usize, usize)]) -> (Self, NormalizationFlags) {
        let mut g = Graph::edgeless(n);
        let mut flags = NormalizationFlags::default();
        for &(u, v) in edges {
            assert!(u < n && v < n, "edge ({u},{v}) out of range for n={n}");
            if u == v {
                flags.loops_dropped = true;
            } else if g.has_edge(u, v) {
                flags.multi_edges_collapsed = true;
            } else {
                g.add_edge(u, v);
            }
        }
        (g, flags)
    }

    /// Rebuilds a graph from adjacency rows (must be symmetric, empty diagonal).
    pub(crate) fn from_rows(adj: Vec<u64>) -> Self {
        let n = adj.len();
        debug_assert!((0..n).all(|v| adj[v] >> v & 1 == 0));
        debug_assert!((0..n).all(|v| VertexSet(adj[v]).iter().all(|u| adj[u] >> v & 1 == 1)));
        Graph { n, adj }
    }

    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbors of `v` as a bit set.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        0..self.n
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in VertexSet(self.adj[u] >> u << u).iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::edgeless(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!(
                "cycle needs at least 3 vertices, got {n}"
            )));
        }
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0);
        Ok(g)
    }

    /// The chair D5: five vertices, center 2 of degree 3 adjacent to the two
    /// leaves 0, 1 and to the pendant path 3-4.
    pub fn chair_d5() -> Self {
        Graph::from_edges(5, &[(0, 2), (1, 2), (2, 3), (3, 4)])
    }

    /// Circulant graph C_n(steps): vertex i adjacent to i +/- s for each step s.
    pub fn circulant(n: usize, steps: &[usize]) -> Result<Self> {
        let mut g = Graph::edgeless(n);
        for &s in steps {
            if s == 0 || s >= n {
                return Err(Error::InvalidParameter(format!(
                    "circulant step {s} out of range for n={n}"
                )));
            }
            for v in 0..n {
                let w = (v + s) % n;
                if w != v && !g.has_edge(v, w) {
                    g.add_edge(v, w);
                }
            }
        }
        Ok(g)
    }

    /// The Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
    pub fn petersen() -> Self {
        let mut g = Graph::edgeless(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
            g.add_edge(i, i + 5);
        }
        g
    }

    pub fn make_named(kind: NamedKind, n: usize) -> Result<Self> {
        if n < 1 && kind != NamedKind::ChairD5 {
            return Err(Error::InvalidParameter("n must be at least 1".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::UnsupportedSize { n, limit: MAX_VERTICES });
        }
        match kind {
            NamedKind::Complete => Ok(Graph::complete(n)),
            NamedKind::Cycle => Graph::cycle(n),
            NamedKind::Path => Ok(Graph::path(n)),
            NamedKind::ChairD5 => Ok(Graph::chair_d5()),
            NamedKind::Edgeless => Ok(Graph::edgeless(n)),
        }
    }

    /// Induced subgraph on `V \ s`, relabeled densely preserving the relative
    /// order of surviving labels. The returned map sends new labels to the
    /// original ones.
    pub fn delete_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        if !s.is_subset_of(self.vertex_set()) {
            return Err(Error::Domain(format!(
                "deletion set {s:?} not contained in the vertex range 0..{}",
                self.n
            )));
        }
        let survivors: Vec<usize> = self.vertex_set().difference(s).to_vec();
        let mut g = Graph::edgeless(survivors.len());
        for (new_u, &old_u) in survivors.iter().enumerate() {
            for (new_v, &old_v) in survivors.iter().enumerate().skip(new_u + 1) {
                if self.has_edge(old_u, old_v) {
                    g.add_edge(new_u, new_v);
                }
            }
        }
        Ok((g, survivors))
    }

    /// Block-diagonal union; part `i` is shifted by the prefix sum of earlier sizes.
    pub fn disjoint_union(parts: &[Graph]) -> Result<Graph> {
        if parts.is_empty() {
            return Err(Error::InvalidParameter("disjoint_union of no parts".into()));
        }
        let total: usize = parts.iter().map(|p| p.n).sum();
        if total > MAX_VERTICES {
            return Err(Error::UnsupportedSize { n: total, limit: MAX_VERTICES });
        }
        let mut g = Graph::edgeless(total);
        let mut offset = 0;
        for part in parts {
            for (u, v) in part.edges() {
                g.add_edge(offset + u, offset + v);
            }
            offset += part.n;
        }
        Ok(g)
    }

    /// Maximal connected vertex sets, ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = VertexSet::EMPTY;
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen.contains(start) {
                continue;
            }
            let mut comp = VertexSet::singleton(start);
            let mut frontier = VertexSet::singleton(start);
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next.union(self.neighbors(v));
                }
                frontier = next.difference(comp);
                comp = comp.union(frontier);
            }
            seen = seen.union(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Edge-preserving-bijection test, pruned by degrees and refinement colors.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        crate::iso::find_isomorphism(self, other, &[]).is_some()
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chair_d5_shape() {
        let d5 = Graph::chair_d5();
        assert_eq!(d5.n(), 5);
        assert_eq!(d5.edge_count(), 4);
        assert_eq!(d5.degree_sequence(), vec![3, 2, 1, 1, 1]);
        assert!(d5.is_connected());
    }

    #[test]
    fn named_graphs() {
        assert_eq!(Graph::make_named(NamedKind::Complete, 5).unwrap().edge_count(), 10);
        let p2 = Graph::make_named(NamedKind::Path, 2).unwrap();
        assert!(p2.is_isomorphic(&Graph::complete(2)));
        assert!(Graph::make_named(NamedKind::Cycle, 2).is_err());
    }

    #[test]
    fn delete_vertices_examples() {
        let k5 = Graph::complete(5);
        let (k4, map) = k5.delete_vertices(VertexSet::singleton(0)).unwrap();
        assert!(k4.is_isomorphic(&Graph::complete(4)));
        assert_eq!(map, vec![1, 2, 3, 4]);

        // Removing the chair's center leaves exactly the pendant edge 3-4.
        let (rest, map) = Graph::chair_d5().delete_vertices(VertexSet::singleton(2)).unwrap();
        assert_eq!(map, vec![0, 1, 3, 4]);
        assert_eq!(rest.edges(), vec![(2, 3)]);

        let g = Graph::cycle(4).unwrap();
        let (same, map) = g.delete_vertices(VertexSet::EMPTY).unwrap();
        assert_eq!(same, g);
        assert_eq!(map, vec![0, 1, 2, 3]);

        assert!(Graph::complete(3).delete_vertices(VertexSet::singleton(7)).is_err());
    }

    #[test]
    fn delete_preserves_preimage_edges() {
        let g = Graph::petersen();
        let s: VertexSet = [1, 4, 6].into_iter().collect();
        let (h, map) = g.delete_vertices(s).unwrap();
        assert_eq!(h.n(), 7);
        for u in 0..h.n() {
            for v in 0..h.n() {
                assert_eq!(h.has_edge(u, v), g.has_edge(map[u], map[v]));
            }
        }
    }

    #[test]
    fn disjoint_union_examples() {
        let k5 = Graph::complete(5);
        let two = Graph::disjoint_union(&[k5.clone(), k5.clone()]).unwrap();
        assert_eq!(two.n(), 10);
        assert_eq!(two.edge_count(), 20);
        assert_eq!(two.connected_components().len(), 2);

        let p3 = Graph::path(3);
        assert_eq!(Graph::disjoint_union(std::slice::from_ref(&p3)).unwrap(), p3);

        let mixed = Graph::disjoint_union(&[k5, Graph::complete(6)]).unwrap();
        assert_eq!(mixed.n(), 11);
        assert_eq!(mixed.edge_count(), 25);
    }

    #[test]
    fn components_examples() {
        let g = Graph::disjoint_union(&[Graph::complete(5), Graph::complete(5)]).unwrap();
        assert_eq!(
            g.connected_components(),
            vec![(0..5).collect::<VertexSet>(), (5..10).collect::<VertexSet>()]
        );
        assert_eq!(Graph::edgeless(3).connected_components().len(), 3);
        assert!(Graph::chair_d5().is_connected());
    }

    #[test]
    fn isomorphism_examples() {
        assert!(Graph::complete(5).is_isomorphic(&Graph::make_named(NamedKind::Complete, 5).unwrap()));
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]);
        assert!(!Graph::path(4).is_isomorphic(&star));
        let two_triangles = Graph::disjoint_union(&[Graph::complete(3), Graph::complete(3)]).unwrap();
        assert!(!Graph::cycle(6).unwrap().is_isomorphic(&two_triangles));
    }

    #[test]
    fn normalization_flags() {
        let (g, flags) = Graph::from_edges_normalized(3, &[(0, 0), (0, 1), (1, 0), (1, 2)]);
        assert_eq!(g.edge_count(), 2);
        assert!(flags.loops_dropped && flags.multi_edges_collapsed);
        assert_eq!(flags.as_strings(), vec!["loops_dropped", "multi_edges_collapsed"]);
    }
}
