//! Simple undirected labeled graphs on at most 64 vertices.
//!
//! Adjacency is kept as one `u64` bitset per vertex, which keeps component
//! counting and subset sweeps branch-light.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices `< 64`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub const fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = VertexSet::EMPTY;
        for v in iter {
            set.insert(v);
        }
        set
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let members = Vec::<usize>::deserialize(d)?;
        if let Some(&bad) = members.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {bad} out of range")));
        }
        Ok(members.into_iter().collect())
    }
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics if `n > 64`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graphs are limited to {MAX_VERTICES} vertices");
        Graph { n, adj: vec![0; n] }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!(
                "order {n} exceeds the supported maximum of {MAX_VERTICES}"
            )));
        }
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidParameter(format!("edge ({u}, {v}) out of range for n = {n}")));
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency bitsets, validating symmetry and loops.
    pub fn from_adjacency(adj: Vec<u64>) -> Result<Self> {
        let n = adj.len();
        if n > MAX_VERTICES {
            return Err(Error::InvalidParameter(format!("order {n} exceeds {MAX_VERTICES}")));
        }
        let full = VertexSet::full(n).bits();
        for (u, &row) in adj.iter().enumerate() {
            if row & !full != 0 {
                return Err(Error::InvalidParameter(format!("vertex {u} has an out-of-range neighbour")));
            }
            if row >> u & 1 == 1 {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            for v in VertexSet(row).iter() {
                if adj[v] >> u & 1 == 0 {
                    return Err(Error::InvalidParameter(format!("asymmetric edge ({u}, {v})")));
                }
            }
        }
        Ok(Graph { n, adj })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !(1 << v);
        self.adj[v] &= !(1 << u);
    }

    /// Copy of `self` with the edge `uv` added.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut g = self.clone();
        g.add_edge(u, v);
        g
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Nonadjacent pairs `(u, v)` with `u < v` in lexicographic order.
    pub fn non_edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            ((u + 1)..self.n)
                .filter(move |&v| !self.has_edge(u, v))
                .map(move |v| (u, v))
        })
    }

    pub fn is_complete(&self) -> bool {
        self.edge_count() == self.n * self.n.saturating_sub(1) / 2
    }

    pub fn is_connected(&self) -> bool {
        self.n == 0 || self.components(VertexSet::EMPTY).len() == 1
    }

    /// Raw adjacency bitsets, one row per vertex.
    pub fn adjacency(&self) -> &[u64] {
        &self.adj
    }

    /// Closed reach of `start` inside `allowed`.
    pub fn reach(&self, start: usize, allowed: VertexSet) -> VertexSet {
        let allowed = allowed.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & allowed & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        VertexSet(seen)
    }

    /// Connected components of `G - removed`, ordered by smallest member.
    pub fn components(&self, removed: VertexSet) -> Vec<VertexSet> {
        let mut rest = self.vertices().difference(removed);
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reach(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// Number of components of `G - removed`.
    pub fn component_count(&self, removed: VertexSet) -> usize {
        let mut rest = self.vertices().difference(removed).bits();
        let mut count = 0;
        while rest != 0 {
            let mut frontier = rest & rest.wrapping_neg();
            let mut comp = frontier;
            while frontier != 0 {
                let v = frontier.trailing_zeros() as usize;
                frontier &= frontier - 1;
                let fresh = self.adj[v] & rest & !comp;
                comp |= fresh;
                frontier |= fresh;
            }
            rest &= !comp;
            count += 1;
        }
        count
    }

    /// Subgraph induced on `keep`, relabelled `0..|keep|` in ascending order.
    /// Returns the graph and the new-index-to-old-vertex map.
    pub fn induced(&self, keep: VertexSet) -> (Graph, Vec<usize>) {
        let map = keep.to_vec();
        let mut g = Graph::empty(map.len());
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        (g, map)
    }

    /// Degrees sorted non-decreasingly with the position-to-vertex map.
    pub fn degree_sequence(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Sorted degree sequence `d_1 <= ... <= d_n` together with the vertex `x_i`
/// realising each position. Ties are broken by ascending vertex index.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeProfile {
    pub seq: Vec<usize>,
    pub position_to_vertex: Vec<usize>,
}

impl DegreeProfile {
    pub fn of(g: &Graph) -> Self {
        let degrees = g.degrees();
        let mut order: Vec<usize> = (0..g.order()).collect();
        order.sort_by_key(|&v| (degrees[v], v));
        DegreeProfile {
            seq: order.iter().map(|&v| degrees[v]).collect(),
            position_to_vertex: order,
        }
    }

    /// Profile from a bare sequence (sorted on entry); positions map to `0..n`.
    pub fn from_sequence(mut seq: Vec<usize>) -> Self {
        seq.sort_unstable();
        let position_to_vertex = (0..seq.len()).collect();
        DegreeProfile { seq, position_to_vertex }
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    /// `d_i` with 1-based `i`.
    pub fn d(&self, i: usize) -> usize {
        self.seq[i - 1]
    }

    /// `x_i` with 1-based `i`.
    pub fn x(&self, i: usize) -> usize {
        self.position_to_vertex[i - 1]
    }

    /// 1-based position of vertex `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.position_to_vertex
            .iter()
            .position(|&u| u == v)
            .map(|p| p + 1)
            .expect("vertex not in profile")
    }
}
