//! Simple undirected graphs on at most 64 vertices, stored as adjacency
//! bitmasks, plus the exact combinatorics the decision engine needs.

pub(crate) mod chordal;
mod cliques;

pub use chordal::{chordality, is_ktree, is_simplicial, EliminationOrdering};
pub use cliques::{
    clique_cover_number, enumerate_clique_covers, independence_number, maximal_cliques, min_clique_cover, CliqueCover,
    CliqueCovers,
};

use std::fmt;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Hard cap on vertex count for the bitmask representation.
pub const MAX_VERTICES: usize = 64;
/// Cap for the exact (exponential) searches.
pub const EXACT_LIMIT: usize = 20;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GraphError {
    #[error("graph has {0} vertices, more than the supported {1}")]
    TooLarge(usize, usize),
    #[error("edge ({0}, {1}) is invalid for a graph on {2} vertices")]
    BadEdge(usize, usize, usize),
    #[error("no clique cover of size at most {0} exists")]
    ExceedsLimit(usize),
    #[error("lower graph is not a subgraph of the upper graph")]
    NotSubgraph,
}

/// A set of vertices packed into a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn all(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn contains(self, v: usize) -> bool {
        self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
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

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(v)
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

/// Simple graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "GraphRepr", into = "GraphRepr")]
pub struct SimpleGraph {
    n: usize,
    adj: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<[usize; 2]>,
}

impl TryFrom<GraphRepr> for SimpleGraph {
    type Error = GraphError;

    fn try_from(r: GraphRepr) -> Result<Self, GraphError> {
        SimpleGraph::from_edges(r.n, r.edges.iter().map(|&[u, v]| (u, v)))
    }
}

impl From<SimpleGraph> for GraphRepr {
    fn from(g: SimpleGraph) -> Self {
        GraphRepr { n: g.n, edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl SimpleGraph {
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n, MAX_VERTICES));
        }
        Ok(Self { n, adj: vec![0; n] })
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Self::empty(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        Self::empty(n).map(|g| g.complement())
    }

    /// `P_n`: `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Result<Self, GraphError> {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    /// `C_n` for `n ≥ 3`.
    pub fn cycle(n: usize) -> Result<Self, GraphError> {
        let mut g = Self::path(n)?;
        if n >= 3 {
            g.add_edge(n - 1, 0)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<(), GraphError> {
        if u == v || u >= self.n || v >= self.n {
            return Err(GraphError::BadEdge(u, v, self.n));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        if u < self.n && v < self.n {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::all(self.n)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    pub fn neighbours(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| VertexSet(self.adj[u]).iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Self {
        let all = VertexSet::all(self.n).0;
        let adj = (0..self.n).map(|v| all & !self.adj[v] & !(1 << v)).collect();
        Self { n: self.n, adj }
    }

    /// Same vertex count and every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &SimpleGraph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a & !b == 0)
    }

    /// Induced subgraph on `keep`, relabelled to `0..keep.len()` in
    /// increasing vertex order.
    pub fn induced(&self, keep: VertexSet) -> SimpleGraph {
        let map: Vec<usize> = keep.to_vec();
        let mut g = SimpleGraph { n: map.len(), adj: vec![0; map.len()] };
        for (i, &u) in map.iter().enumerate() {
            for (j, &v) in map.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter().all(|v| set.difference(VertexSet::singleton(v)).is_subset(self.neighbours(v)))
    }

    /// Image of the graph under the vertex map `v ↦ perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Result<SimpleGraph, GraphError> {
        SimpleGraph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.neighbours(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen == self.vertices()
    }
}

impl fmt::Debug for SimpleGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimpleGraph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}

/// Every graph `G` with `low ≤ G ≤ high`, ordered by the number of added
/// edges and then lexicographically by the added edge set. `low` comes
/// first; at most `budget` graphs are produced.
pub fn intermediate_graphs(
    low: &SimpleGraph,
    high: &SimpleGraph,
    budget: usize,
) -> Result<impl Iterator<Item = SimpleGraph>, GraphError> {
    if !low.is_subgraph_of(high) {
        return Err(GraphError::NotSubgraph);
    }
    let gap: Vec<(usize, usize)> = high.edges().filter(|&(u, v)| !low.has_edge(u, v)).collect();
    let base = low.clone();
    Ok((0..=gap.len()).flat_map(move |k| gap.clone().into_iter().combinations(k)).take(budget).map(move |extra| {
        let mut g = base.clone();
        for (u, v) in extra {
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        g
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Square 0-1-2-3 with roof 4 on the 2-3 side; isomorphic to the
    /// complement of P_5.
    pub(crate) fn house() -> SimpleGraph {
        SimpleGraph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn complement_examples() {
        assert_eq!(SimpleGraph::complete(3).unwrap().complement(), SimpleGraph::empty(3).unwrap());
        assert_eq!(SimpleGraph::empty(4).unwrap().complement(), SimpleGraph::complete(4).unwrap());
        let cp5 = SimpleGraph::path(5).unwrap().complement();
        assert_eq!(cp5.edge_count(), 6);
        // One triangle, the rest of the house is a 4-cycle.
        assert_eq!(maximal_cliques(&cp5).iter().filter(|c| c.len() == 3).count(), 1);
        assert_eq!(maximal_cliques(&house()).iter().filter(|c| c.len() == 3).count(), 1);
        let g = house();
        assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn bad_edges_are_rejected() {
        assert!(SimpleGraph::from_edges(3, [(1, 1)]).is_err());
        assert!(SimpleGraph::from_edges(3, [(0, 3)]).is_err());
        assert!(SimpleGraph::empty(65).is_err());
    }

    #[test]
    fn edges_are_sorted() {
        let g = SimpleGraph::from_edges(4, [(3, 2), (1, 0), (0, 3)]).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn json_shape() {
        let g = SimpleGraph::from_edges(3, [(2, 1), (0, 1)]).unwrap();
        let s = serde_json::to_string(&g).unwrap();
        assert_eq!(s, r#"{"n":3,"edges":[[0,1],[1,2]]}"#);
        let back: SimpleGraph = serde_json::from_str(&s).unwrap();
        assert_eq!(back, g);
        assert!(serde_json::from_str::<SimpleGraph>(r#"{"n":2,"edges":[[0,0]]}"#).is_err());
    }

    #[test]
    fn intermediate_graph_examples() {
        let g = SimpleGraph::path(3).unwrap();
        assert_eq!(intermediate_graphs(&g, &g, 10).unwrap().count(), 1);

        let high = SimpleGraph::complete(3).unwrap();
        let all: Vec<_> = intermediate_graphs(&g, &high, 10).unwrap().collect();
        assert_eq!(all.len(), 2);
        assert_eq!(all[0], g);
        assert_eq!(all[1], high);

        assert!(intermediate_graphs(&high, &g, 10).is_err());
        assert_eq!(
            intermediate_graphs(&SimpleGraph::empty(4).unwrap(), &SimpleGraph::complete(4).unwrap(), 5)
                .unwrap()
                .count(),
            5
        );
    }

    #[test]
    fn intermediate_graphs_are_ordered_by_added_edges() {
        let low = SimpleGraph::empty(4).unwrap();
        let high = SimpleGraph::complete(4).unwrap();
        let sizes: Vec<usize> = intermediate_graphs(&low, &high, 100).unwrap().map(|g| g.edge_count()).collect();
        assert_eq!(sizes.len(), 64);
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn induced_relabels() {
        let g = SimpleGraph::cycle(5).unwrap();
        let h = g.induced([0, 1, 2].into_iter().collect());
        assert_eq!(h, SimpleGraph::path(3).unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(SimpleGraph::path(4).unwrap().is_connected());
        assert!(!SimpleGraph::empty(2).unwrap().is_connected());
    }
}
