//! Cliques, clique covers and independent sets.
//!
//! A clique cover must cover every vertex and every edge. Only the edges and
//! the isolated vertices need explicit covering (any other vertex is covered
//! by one of its edges), so those are the "elements" the searches track.
//! Both searches build covers out of maximal cliques: any cover can be
//! enlarged clique by clique to one of them without growing in size.

use serde::{Deserialize, Serialize};

use super::{GraphError, SimpleGraph, VertexSet, EXACT_LIMIT};

/// A family of cliques covering every vertex and edge of some graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "Vec<Vec<usize>>", from = "Vec<Vec<usize>>")]
pub struct CliqueCover {
    pub cliques: Vec<VertexSet>,
}

impl From<CliqueCover> for Vec<Vec<usize>> {
    fn from(c: CliqueCover) -> Self {
        c.cliques.iter().map(|s| s.to_vec()).collect()
    }
}

impl From<Vec<Vec<usize>>> for CliqueCover {
    fn from(v: Vec<Vec<usize>>) -> Self {
        CliqueCover { cliques: v.into_iter().map(|c| c.into_iter().collect()).collect() }
    }
}

impl CliqueCover {
    pub fn len(&self) -> usize {
        self.cliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cliques.is_empty()
    }

    /// Every member is a clique of `g` and together they cover all vertices
    /// and edges of `g`.
    pub fn covers(&self, g: &SimpleGraph) -> bool {
        let all = g.vertices();
        let covered = self.cliques.iter().fold(VertexSet::EMPTY, |acc, c| acc.union(*c));
        self.cliques.iter().all(|&c| c.is_subset(all) && g.is_clique(c))
            && covered == all
            && g.edges().all(|(u, v)| self.cliques.iter().any(|c| c.contains(u) && c.contains(v)))
    }
}

/// Bitset over at most 256 cover elements.
#[derive(Clone, Copy, Default, PartialEq, Eq, Debug)]
struct Bits([u64; 4]);

impl Bits {
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn or(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] | o.0[k]))
    }

    fn and_not(self, o: Bits) -> Bits {
        Bits(std::array::from_fn(|k| self.0[k] & !o.0[k]))
    }

    fn intersects(self, o: Bits) -> bool {
        (0..4).any(|k| self.0[k] & o.0[k] != 0)
    }

    fn contains_all(self, o: Bits) -> bool {
        (0..4).all(|k| o.0[k] & !self.0[k] == 0)
    }

    fn is_empty(self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }

    fn iter(self) -> impl Iterator<Item = usize> {
        (0..4).flat_map(move |k| VertexSet(self.0[k]).iter().map(move |b| k * 64 + b))
    }
}

/// Maximal cliques in lexicographic order of their sorted vertex lists.
pub fn maximal_cliques(g: &SimpleGraph) -> Vec<VertexSet> {
    let mut out = Vec::new();
    if g.n() > 0 {
        bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut out);
    }
    out.sort_by_key(|c| c.to_vec());
    out
}

fn bron_kerbosch(g: &SimpleGraph, r: VertexSet, mut p: VertexSet, mut x: VertexSet, out: &mut Vec<VertexSet>) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = p.union(x).iter().max_by_key(|&u| p.intersection(g.neighbours(u)).len()).expect("p is nonempty");
    for v in p.difference(g.neighbours(pivot)).iter() {
        let nv = g.neighbours(v);
        let mut rv = r;
        rv.insert(v);
        bron_kerbosch(g, rv, p.intersection(nv), x.intersection(nv), out);
        p.remove(v);
        x.insert(v);
    }
}

/// The covering problem for one graph: which elements each maximal clique
/// covers.
struct CoverProblem {
    cliques: Vec<VertexSet>,
    clique_bits: Vec<Bits>,
    all: Bits,
    /// Per element, indices of the cliques that cover it.
    candidates: Vec<Vec<usize>>,
    /// Per element, the elements that share some clique with it.
    compatible: Vec<Bits>,
}

impl CoverProblem {
    fn new(g: &SimpleGraph) -> Result<Self, GraphError> {
        if g.n() > EXACT_LIMIT {
            return Err(GraphError::TooLarge(g.n(), EXACT_LIMIT));
        }
        let elements: Vec<VertexSet> = g
            .edges()
            .map(|(u, v)| [u, v].into_iter().collect())
            .chain((0..g.n()).filter(|&v| g.degree(v) == 0).map(VertexSet::singleton))
            .collect();
        let cliques = maximal_cliques(g);
        let mut clique_bits = vec![Bits::default(); cliques.len()];
        let mut candidates = vec![Vec::new(); elements.len()];
        let mut all = Bits::default();
        for (e, &needs) in elements.iter().enumerate() {
            all.set(e);
            for (c, &clique) in cliques.iter().enumerate() {
                if needs.is_subset(clique) {
                    clique_bits[c].set(e);
                    candidates[e].push(c);
                }
            }
        }
        let compatible = elements
            .iter()
            .map(|&a| {
                let mut bits = Bits::default();
                for (f, &b) in elements.iter().enumerate() {
                    if g.is_clique(a.union(b)) {
                        bits.set(f);
                    }
                }
                bits
            })
            .collect();
        Ok(Self { cliques, clique_bits, all, candidates, compatible })
    }

    /// Size of a greedily chosen set of elements no two of which fit in a
    /// common clique; each needs its own clique.
    fn lower_bound(&self, uncovered: Bits) -> usize {
        let mut chosen = Bits::default();
        let mut count = 0;
        for e in uncovered.iter() {
            if !self.compatible[e].intersects(chosen) {
                chosen.set(e);
                count += 1;
            }
        }
        count
    }

    fn search(&self, uncovered: Bits, k: usize, chosen: &mut Vec<usize>) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        if chosen.len() + self.lower_bound(uncovered) > k {
            return false;
        }
        let e = uncovered.iter().min_by_key(|&e| self.candidates[e].len()).expect("uncovered is nonempty");
        for &c in &self.candidates[e] {
            chosen.push(c);
            if self.search(uncovered.and_not(self.clique_bits[c]), k, chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// A minimum clique cover, found by exact branch and bound over maximal
/// cliques. Fails when more than `limit` cliques would be needed.
pub fn min_clique_cover(g: &SimpleGraph, limit: usize) -> Result<CliqueCover, GraphError> {
    let problem = CoverProblem::new(g)?;
    let start = problem.lower_bound(problem.all);
    for k in start..=limit {
        let mut chosen = Vec::new();
        if problem.search(problem.all, k, &mut chosen) {
            chosen.sort_unstable();
            return Ok(CliqueCover { cliques: chosen.into_iter().map(|c| problem.cliques[c]).collect() });
        }
    }
    Err(GraphError::ExceedsLimit(limit))
}

/// `cc(G)`, exactly.
pub fn clique_cover_number(g: &SimpleGraph) -> Result<usize, GraphError> {
    min_clique_cover(g, usize::MAX).map(|c| c.len())
}

/// Size of a maximum independent set.
pub fn independence_number(g: &SimpleGraph) -> usize {
    fn grow(h: &SimpleGraph, cand: VertexSet, size: usize, best: &mut usize) {
        if cand.is_empty() {
            *best = (*best).max(size);
            return;
        }
        if size + cand.len() <= *best {
            return;
        }
        let v = cand.first().expect("nonempty");
        grow(h, cand.intersection(h.neighbours(v)), size + 1, best);
        let mut rest = cand;
        rest.remove(v);
        grow(h, rest, size, best);
    }
    let h = g.complement();
    let mut best = 0;
    grow(&h, h.vertices(), 0, &mut best);
    best
}

/// Lazy stream of clique covers assembled from maximal cliques.
///
/// Covers come in nondecreasing size, lexicographically by clique index
/// within a size, with no duplicates. Created by [`enumerate_clique_covers`].
pub struct CliqueCovers {
    problem: CoverProblem,
    suffix: Vec<Bits>,
    max_size: usize,
    remaining: usize,
    size: usize,
    pos: Vec<usize>,
    covered: Vec<Bits>,
    cursor: usize,
    done: bool,
}

impl CliqueCovers {
    fn next_of_size(&mut self) -> Option<Vec<usize>> {
        let m = self.problem.cliques.len();
        let k = self.size;
        loop {
            let depth = self.pos.len();
            if depth == k {
                let found = self.covered[depth].contains_all(self.problem.all);
                let snapshot = found.then(|| self.pos.clone());
                if !self.backtrack() {
                    self.done = true;
                }
                if snapshot.is_some() {
                    return snapshot;
                }
                if self.done {
                    return None;
                }
                continue;
            }
            let feasible = self.cursor + (k - depth) <= m
                && self.covered[depth].or(self.suffix[self.cursor]).contains_all(self.problem.all);
            if !feasible {
                if !self.backtrack() {
                    self.done = true;
                    return None;
                }
                continue;
            }
            let c = self.cursor;
            self.pos.push(c);
            self.covered.push(self.covered[depth].or(self.problem.clique_bits[c]));
            self.cursor = c + 1;
        }
    }

    fn backtrack(&mut self) -> bool {
        match self.pos.pop() {
            Some(last) => {
                self.covered.pop();
                self.cursor = last + 1;
                true
            }
            None => false,
        }
    }
}

impl Iterator for CliqueCovers {
    type Item = CliqueCover;

    fn next(&mut self) -> Option<CliqueCover> {
        while self.remaining > 0 && self.size <= self.max_size {
            if self.size == 0 {
                self.size = 1;
                if self.problem.all.is_empty() {
                    self.remaining -= 1;
                    return Some(CliqueCover { cliques: Vec::new() });
                }
                continue;
            }
            if !self.done {
                if let Some(idx) = self.next_of_size() {
                    self.remaining -= 1;
                    return Some(CliqueCover { cliques: idx.into_iter().map(|c| self.problem.cliques[c]).collect() });
                }
            }
            self.size += 1;
            self.done = false;
            self.pos.clear();
            self.covered.truncate(1);
            self.cursor = 0;
        }
        None
    }
}

/// Clique covers of `g` made of at most `max_size` maximal cliques; at most
/// `budget` of them.
pub fn enumerate_clique_covers(g: &SimpleGraph, max_size: usize, budget: usize) -> Result<CliqueCovers, GraphError> {
    let problem = CoverProblem::new(g)?;
    let m = problem.cliques.len();
    let mut suffix = vec![Bits::default(); m + 1];
    for c in (0..m).rev() {
        suffix[c] = suffix[c + 1].or(problem.clique_bits[c]);
    }
    Ok(CliqueCovers {
        problem,
        suffix,
        max_size: max_size.min(m),
        remaining: budget,
        size: 0,
        pos: Vec::new(),
        covered: vec![Bits::default()],
        cursor: 0,
        done: false,
    })
}
