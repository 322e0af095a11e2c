//! Simplicial vertices, perfect elimination orderings and k-trees.

use serde::{Deserialize, Serialize};

use super::{SimpleGraph, VertexSet};

/// A vertex ordering in which each vertex is simplicial in the subgraph
/// induced by itself and the vertices after it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationOrdering {
    pub order: Vec<usize>,
}

impl EliminationOrdering {
    /// Checks the perfect-elimination property against `g`.
    pub fn is_perfect_for(&self, g: &SimpleGraph) -> bool {
        let mut seen = VertexSet::EMPTY;
        let mut remaining = g.vertices();
        for &v in &self.order {
            if v >= g.n() || seen.contains(v) || !simplicial_within(g, v, remaining) {
                return false;
            }
            seen.insert(v);
            remaining.remove(v);
        }
        remaining.is_empty()
    }
}

/// True when the neighbours of `v` are pairwise adjacent.
pub fn is_simplicial(g: &SimpleGraph, v: usize) -> bool {
    simplicial_within(g, v, g.vertices())
}

/// Simplicial test in the subgraph induced by `within` (which contains `v`).
pub(crate) fn simplicial_within(g: &SimpleGraph, v: usize, within: VertexSet) -> bool {
    g.is_clique(g.neighbours(v).intersection(within))
}

/// Lowest-index simplicial vertex of the subgraph induced by `within`.
pub(crate) fn first_simplicial(g: &SimpleGraph, within: VertexSet) -> Option<usize> {
    within.iter().find(|&v| simplicial_within(g, v, within))
}

/// A perfect elimination ordering when `g` is chordal, found by repeatedly
/// removing the lowest-index simplicial vertex.
pub fn chordality(g: &SimpleGraph) -> Option<EliminationOrdering> {
    let mut remaining = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while !remaining.is_empty() {
        let v = first_simplicial(g, remaining)?;
        order.push(v);
        remaining.remove(v);
    }
    Some(EliminationOrdering { order })
}

/// An ordering witnessing that `g` is a k-tree: every eliminated vertex is
/// simplicial of degree exactly `k` in what remains, and the last `k + 1`
/// vertices form a clique.
pub fn is_ktree(g: &SimpleGraph, k: usize) -> Option<EliminationOrdering> {
    if k == 0 || g.n() < k + 1 {
        return None;
    }
    let mut remaining = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    while remaining.len() > k + 1 {
        let v = remaining
            .iter()
            .find(|&v| g.neighbours(v).intersection(remaining).len() == k && simplicial_within(g, v, remaining))?;
        order.push(v);
        remaining.remove(v);
    }
    if !g.is_clique(remaining) {
        return None;
    }
    order.extend(remaining.iter());
    Some(EliminationOrdering { order })
}

#[cfg(test)]
mod tests {
    use super::super::tests::house;
    use super::*;

    /// Target graph of the chordal walk-through, vertices v1..v5 as 0..4:
    /// triangle v1 v3 v5 plus the path v3 - v4 - v2.
    fn chordal_example() -> SimpleGraph {
        SimpleGraph::from_edges(5, [(0, 2), (0, 4), (2, 4), (2, 3), (3, 1)]).unwrap()
    }

    #[test]
    fn simplicial_examples() {
        let p5 = SimpleGraph::path(5).unwrap();
        assert!(is_simplicial(&p5, 0));
        assert!(is_simplicial(&p5, 4));
        assert!(!is_simplicial(&SimpleGraph::path(3).unwrap(), 1));
        let g = chordal_example();
        let simplicial: Vec<usize> = (0..5).filter(|&v| is_simplicial(&g, v)).collect();
        assert_eq!(simplicial, vec![0, 1, 4]);
    }

    #[test]
    fn chordality_examples() {
        let p5 = SimpleGraph::path(5).unwrap();
        let peo = chordality(&p5).unwrap();
        assert_eq!(peo.order[0], 0);
        assert!(peo.is_perfect_for(&p5));
        assert!(chordality(&SimpleGraph::cycle(4).unwrap()).is_none());
        assert!(chordality(&house()).is_none());
        assert!(chordality(&SimpleGraph::path(5).unwrap().complement()).is_none());
        assert!(chordality(&SimpleGraph::complete(5).unwrap()).is_some());
        assert!(chordality(&SimpleGraph::empty(0).unwrap()).is_some());
    }

    #[test]
    fn ktree_examples() {
        let k3 = SimpleGraph::complete(3).unwrap();
        let w = is_ktree(&k3, 2).unwrap();
        assert_eq!(w.order, vec![0, 1, 2]);
        assert!(is_ktree(&SimpleGraph::path(4).unwrap(), 1).is_some());
        assert!(is_ktree(&SimpleGraph::cycle(4).unwrap(), 1).is_none());
        assert!(is_ktree(&SimpleGraph::empty(1).unwrap(), 1).is_none());
        assert!(is_ktree(&SimpleGraph::complete(2).unwrap(), 1).is_some());
        // Two triangles glued on an edge form a 2-tree.
        let diamond = SimpleGraph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
        let w = is_ktree(&diamond, 2).unwrap();
        assert!(w.is_perfect_for(&diamond));
        assert!(is_ktree(&diamond, 1).is_none());
    }

    #[test]
    fn bad_orderings_are_rejected() {
        let p3 = SimpleGraph::path(3).unwrap();
        assert!(!EliminationOrdering { order: vec![1, 0, 2] }.is_perfect_for(&p3));
        assert!(!EliminationOrdering { order: vec![0, 1] }.is_perfect_for(&p3));
        assert!(EliminationOrdering { order: vec![0, 1, 2] }.is_perfect_for(&p3));
    }
}
