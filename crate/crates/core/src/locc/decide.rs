use std::collections::hash_map::Entry;
use std::collections::{HashMap, HashSet};

use itertools::Itertools;
use serde::Serialize;

use super::greedy::{assign, kernel};
use super::{chordal_protocol, verify_protocol, Decomposition, LoccError, MeasurementWitness};
use crate::graphs::{clique_cover_number, enumerate_clique_covers, intermediate_graphs, CliqueCover, SimpleGraph};
use crate::numerics::{orthonormalize, CVector, Subspace};
use crate::states::{Party, ProductStateSet, SpanRestriction};

/// Search limits for [`decide_one_way`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Budget {
    pub max_intermediate_graphs: usize,
    pub max_covers_per_graph: usize,
    pub max_orderings_per_cover: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_intermediate_graphs: 256, max_covers_per_graph: 512, max_orderings_per_cover: 5040 }
    }
}

impl Budget {
    pub fn new(graphs: usize, covers: usize, orderings: usize) -> Result<Self, LoccError> {
        if graphs == 0 || covers == 0 || orderings == 0 {
            return Err(LoccError::Precondition("budget limits must be positive".into()));
        }
        Ok(Self { max_intermediate_graphs: graphs, max_covers_per_graph: covers, max_orderings_per_cover: orderings })
    }
}

/// Proof that no one-way protocol exists: `G_A` is the complement of `G_B`
/// and its clique cover number exceeds the dimension of the first party's
/// space (the span of its vectors).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Certificate {
    pub kind: &'static str,
    pub cc: usize,
    pub dim: usize,
    pub graph: SimpleGraph,
    #[serde(skip)]
    pub equality_checked: bool,
}

impl Certificate {
    pub const KIND: &'static str = "clique_cover_bound";

    /// Recomputes the cover number and checks the bound.
    pub fn is_valid(&self) -> bool {
        self.kind == Self::KIND
            && self.equality_checked
            && self.cc > self.dim
            && clique_cover_number(&self.graph).is_ok_and(|cc| cc == self.cc)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("certificates always serialize")
    }
}

/// How far an inconclusive search got.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub graphs_tried: usize,
    pub covers_tried: usize,
    pub orderings_tried: usize,
    /// Some limit cut the search short. When false every intermediate graph,
    /// cover and ordering was tried.
    pub budget_exhausted: bool,
    pub complement_equality: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "method", rename_all = "snake_case")]
pub enum SynthesisPath {
    Chordal,
    Greedy { cover: CliqueCover, order: Vec<usize> },
}

/// A verified protocol and where it came from.
#[derive(Debug, Clone, PartialEq)]
pub struct Success {
    pub witness: MeasurementWitness,
    /// Decomposition of the first party's space, in its original coordinates.
    pub decomposition: Decomposition,
    /// The intermediate graph the decomposition was found for.
    pub graph: SimpleGraph,
    pub path: SynthesisPath,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Verdict {
    Yes(Box<Success>),
    No(Certificate),
    Unknown(SearchStats),
}

impl Verdict {
    pub fn kind(&self) -> &'static str {
        match self {
            Verdict::Yes(_) => "yes",
            Verdict::No(_) => "no",
            Verdict::Unknown(_) => "unknown",
        }
    }
}

/// Can the states be perfectly distinguished when `first` measures first and
/// then announces the outcome?
pub fn decide_one_way(set: &ProductStateSet, first: Party, budget: Budget) -> Result<Verdict, LoccError> {
    let violations = set.check_mutual_orthogonality();
    if !violations.is_empty() {
        return Err(LoccError::NotOrthogonal(violations));
    }
    let oriented = set.oriented(first);
    let restriction = oriented.restrict_to_alice_span()?;
    let local = &restriction.states;
    let tol = local.tol();
    let d = local.dim_a();
    let graphs = local.confusability_graphs()?;
    let high = graphs.g_b.complement();
    let equality = graphs.g_a == high;

    if equality {
        if let Ok(cc) = clique_cover_number(&high) {
            if cc > d {
                return Ok(Verdict::No(Certificate {
                    kind: Certificate::KIND,
                    cc,
                    dim: d,
                    graph: high,
                    equality_checked: true,
                }));
            }
        }
    }

    let phi = local.vectors(Party::Alice);
    let mut stats = SearchStats { complement_equality: equality, ..SearchStats::default() };
    let gap = high.edge_count() - graphs.g_a.edge_count();
    if gap >= usize::BITS as usize || (1usize << gap) > budget.max_intermediate_graphs {
        stats.budget_exhausted = true;
    }
    let mut tried: HashSet<Vec<u64>> = HashSet::new();
    let mut kernels: HashMap<u64, Subspace> = HashMap::new();
    let emit = |dec: Decomposition, g: SimpleGraph, path: SynthesisPath| -> Result<Option<Verdict>, LoccError> {
        if !dec.check(d, &phi)?.is_valid() {
            return Ok(None);
        }
        let decomposition = to_original(&dec, &restriction);
        let witness = MeasurementWitness::from_operators(&oriented, Party::Alice, decomposition.projectors())?;
        let witness = MeasurementWitness { first_party: first, ..witness };
        if !verify_protocol(set, &witness)? {
            return Ok(None);
        }
        Ok(Some(Verdict::Yes(Box::new(Success { witness, decomposition, graph: g, path }))))
    };

    for g in intermediate_graphs(&graphs.g_a, &high, budget.max_intermediate_graphs)? {
        stats.graphs_tried += 1;
        if let Some(dec) = chordal_protocol(d, &phi, &g, tol)? {
            if let Some(v) = emit(dec, g.clone(), SynthesisPath::Chordal)? {
                return Ok(v);
            }
        }
        let mut covers = enumerate_clique_covers(&g, usize::MAX, budget.max_covers_per_graph)?;
        let mut taken = 0;
        for cover in covers.by_ref() {
            taken += 1;
            stats.covers_tried += 1;
            let m = cover.len();
            let mut ks = Vec::with_capacity(m);
            for &c in &cover.cliques {
                let k = match kernels.entry(c.0) {
                    Entry::Occupied(e) => e.into_mut(),
                    Entry::Vacant(e) => e.insert(kernel(d, &phi, c, tol)?),
                };
                ks.push(k.clone());
            }
            // Every part sits inside its clique's kernel, so the kernels must
            // span the space for any ordering to succeed.
            let all: Vec<CVector> = ks.iter().flat_map(|k| k.basis().iter().cloned()).collect();
            if orthonormalize(d, &all, tol)?.dim() < d {
                continue;
            }
            if factorial_exceeds(m, budget.max_orderings_per_cover) {
                stats.budget_exhausted = true;
            }
            for order in (0..m).permutations(m).take(budget.max_orderings_per_cover) {
                let key: Vec<u64> = order.iter().map(|&i| cover.cliques[i].0).collect();
                if !tried.insert(key) {
                    continue;
                }
                stats.orderings_tried += 1;
                if let Some(dec) = assign(d, &ks, &cover.cliques, &order, tol)? {
                    let path = SynthesisPath::Greedy { cover: cover.clone(), order };
                    if let Some(v) = emit(dec, g.clone(), path)? {
                        return Ok(v);
                    }
                }
            }
        }
        if taken == budget.max_covers_per_graph
            && enumerate_clique_covers(&g, usize::MAX, taken + 1)?.nth(taken).is_some()
        {
            stats.budget_exhausted = true;
        }
    }
    Ok(Verdict::Unknown(stats))
}

fn factorial_exceeds(m: usize, limit: usize) -> bool {
    let mut f: usize = 1;
    for i in 2..=m {
        f = f.saturating_mul(i);
        if f > limit {
            return true;
        }
    }
    false
}

/// Maps a decomposition of the span back to the full space, adding the
/// span's complement as an extra part with no clique.
fn to_original(dec: &Decomposition, r: &SpanRestriction) -> Decomposition {
    if r.discarded.is_zero() {
        return dec.clone();
    }
    let full = r.span.ambient_dim();
    let b = r.span.basis_matrix();
    let lift = |s: &Subspace| -> Subspace {
        let vs: Vec<CVector> = s.basis().iter().map(|x| &b * x).collect();
        crate::numerics::orthonormalize(full, &vs, crate::numerics::Tolerance::default())
            .expect("lifted vectors have the full dimension")
    };
    let mut parts: Vec<Subspace> = dec.parts.iter().map(lift).collect();
    let mut cliques = dec.cliques.clone();
    parts.push(r.discarded.clone());
    cliques.push(crate::graphs::VertexSet::EMPTY);
    Decomposition { parts, cliques }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{ket, real_vector, Tolerance};
    use crate::states::builtin;

    #[test]
    fn example1_alice_first_is_the_standard_basis() {
        let set = builtin("example1").unwrap();
        let Verdict::Yes(s) = decide_one_way(&set, Party::Alice, Budget::default()).unwrap() else { panic!() };
        assert_eq!(s.path, SynthesisPath::Chordal);
        assert_eq!(s.graph, SimpleGraph::path(5).unwrap());
        assert_eq!(s.witness.outcomes.len(), 4);
        for (j, o) in s.witness.outcomes.iter().enumerate() {
            let p = ket(4, j) * ket(4, j).adjoint();
            assert!((&o.operator - p).norm() < 1e-9);
        }
        assert!(verify_protocol(&set, &s.witness).unwrap());
    }

    #[test]
    fn example1_bob_first_has_a_certificate() {
        let set = builtin("example1").unwrap();
        let Verdict::No(c) = decide_one_way(&set, Party::Bob, Budget::default()).unwrap() else { panic!() };
        assert_eq!((c.cc, c.dim), (4, 3));
        assert!(c.is_valid());
        let v: serde_json::Value = serde_json::from_str(&c.to_json()).unwrap();
        assert_eq!(v["kind"], "clique_cover_bound");
        assert_eq!(v["cc"], 4);
    }

    #[test]
    fn example3_alice_measures_zero_and_plus_minus() {
        let set = builtin("example3").unwrap();
        let Verdict::Yes(s) = decide_one_way(&set, Party::Alice, Budget::default()).unwrap() else { panic!() };
        let tol = Tolerance::default();
        let expected = [real_vector(&[1., 0., 0.]), real_vector(&[0., 1., 1.]), real_vector(&[0., 1., -1.])];
        let nonzero: Vec<_> = s.decomposition.parts.iter().filter(|p| !p.is_zero()).collect();
        assert_eq!(nonzero.len(), 3);
        for e in &expected {
            assert!(nonzero.iter().any(|p| p.contains(e, tol).unwrap()), "{e:?}");
        }
        assert_eq!(s.graph.edge_count(), set.confusability_graphs().unwrap().g_a.edge_count() + 1);
    }

    #[test]
    fn non_spanning_vectors_get_an_inert_outcome() {
        let set = ProductStateSet::from_real(3, 2, &[(&[1., 0., 0.], &[1., 0.]), (&[1., 0., 0.], &[0., 1.])]).unwrap();
        let Verdict::Yes(s) = decide_one_way(&set, Party::Alice, Budget::default()).unwrap() else { panic!() };
        assert!(s.witness.outcomes.iter().any(|o| o.survivors.is_empty()));
        assert_eq!(s.decomposition.ambient_dim(), Some(3));
        assert!(verify_protocol(&set, &s.witness).unwrap());
    }

    #[test]
    fn non_orthogonal_sets_are_rejected() {
        let set = ProductStateSet::from_real(2, 2, &[(&[1., 0.], &[1., 0.]), (&[1., 1.], &[1., 1.])]).unwrap();
        assert!(matches!(decide_one_way(&set, Party::Alice, Budget::default()), Err(LoccError::NotOrthogonal(_))));
    }

    #[test]
    fn budgets_must_be_positive() {
        assert!(Budget::new(0, 1, 1).is_err());
        assert_eq!(Budget::new(256, 512, 5040).unwrap(), Budget::default());
    }
}
