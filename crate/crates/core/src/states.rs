//! Sets of bipartite product states `|a_k⟩ ⊗ |b_k⟩` and the graphs they induce
//! on each side.

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{GraphError, SimpleGraph};
use crate::json::{vector_from_json, vector_to_json, Scalar};
use crate::numerics::{inner, orthonormalize, real_vector, CVector, NumericsError, Subspace, Tolerance};

#[derive(Debug, Error)]
pub enum StateError {
    #[error("state {label}: {party} vector is zero")]
    ZeroVector { label: String, party: Party },
    #[error("state {label}: {party} vector has {found} entries, expected {expected}")]
    WrongDimension { label: String, party: Party, expected: usize, found: usize },
    #[error("duplicate state label {0}")]
    DuplicateLabel(String),
    #[error("unknown built-in state set {0:?}")]
    UnknownBuiltin(String),
    #[error("invalid state file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The two parties. Which one measures first is a parameter of every
/// protocol question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Party {
    Alice,
    Bob,
}

impl Party {
    pub fn other(self) -> Party {
        match self {
            Party::Alice => Party::Bob,
            Party::Bob => Party::Alice,
        }
    }
}

impl fmt::Display for Party {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Party::Alice => "alice",
            Party::Bob => "bob",
        })
    }
}

impl std::str::FromStr for Party {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "alice" | "a" => Ok(Party::Alice),
            "bob" | "b" => Ok(Party::Bob),
            other => Err(format!("unknown party {other:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductState {
    pub label: String,
    /// Alice's factor, unit norm.
    pub a: CVector,
    /// Bob's factor, unit norm.
    pub b: CVector,
}

impl ProductState {
    pub fn vector(&self, party: Party) -> &CVector {
        match party {
            Party::Alice => &self.a,
            Party::Bob => &self.b,
        }
    }
}

/// Alice's and Bob's confusability graphs.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConfusabilityGraphs {
    pub g_a: SimpleGraph,
    pub g_b: SimpleGraph,
}

/// A pair of states that is not orthogonal as a product.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrthogonalityViolation {
    pub first: String,
    pub second: String,
    /// `|⟨a_i,a_j⟩⟨b_i,b_j⟩|` for the normalized factors.
    pub overlap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ProductStateSet {
    dim_a: usize,
    dim_b: usize,
    states: Vec<ProductState>,
    tol: Tolerance,
}

/// Result of re-expressing Alice's vectors inside their own span.
#[derive(Debug, Clone)]
pub struct SpanRestriction {
    /// The same states with Alice's factors in coordinates of `span`.
    pub states: ProductStateSet,
    /// Orthonormal basis of the span, in the original coordinates. The
    /// standard basis when the vectors already span.
    pub span: Subspace,
    /// Orthogonal complement of the span; zero when the vectors span.
    pub discarded: Subspace,
}

impl ProductStateSet {
    /// Validates and normalizes the states. Missing labels become
    /// `psi1..psiN`.
    pub fn new<I>(dim_a: usize, dim_b: usize, states: I, tol: Tolerance) -> Result<Self, StateError>
    where
        I: IntoIterator<Item = (Option<String>, CVector, CVector)>,
    {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for (k, (label, a, b)) in states.into_iter().enumerate() {
            let label = label.unwrap_or_else(|| format!("psi{}", k + 1));
            if !seen.insert(label.clone()) {
                return Err(StateError::DuplicateLabel(label));
            }
            let a = normalized(&label, Party::Alice, dim_a, a, tol)?;
            let b = normalized(&label, Party::Bob, dim_b, b, tol)?;
            out.push(ProductState { label, a, b });
        }
        Ok(Self { dim_a, dim_b, states: out, tol })
    }

    /// Shorthand for real-coefficient states with default labels.
    pub fn from_real(dim_a: usize, dim_b: usize, states: &[(&[f64], &[f64])]) -> Result<Self, StateError> {
        Self::new(
            dim_a,
            dim_b,
            states.iter().map(|(a, b)| (None, real_vector(a), real_vector(b))),
            Tolerance::default(),
        )
    }

    pub fn dim(&self, party: Party) -> usize {
        match party {
            Party::Alice => self.dim_a,
            Party::Bob => self.dim_b,
        }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    pub fn tol(&self) -> Tolerance {
        self.tol
    }

    pub fn with_tol(mut self, tol: Tolerance) -> Self {
        self.tol = tol;
        self
    }

    pub fn states(&self) -> &[ProductState] {
        &self.states
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    pub fn labels(&self) -> Vec<String> {
        self.states.iter().map(|s| s.label.clone()).collect()
    }

    pub fn vectors(&self, party: Party) -> Vec<CVector> {
        self.states.iter().map(|s| s.vector(party).clone()).collect()
    }

    /// The same states with Alice and Bob exchanged.
    pub fn swapped(&self) -> Self {
        Self {
            dim_a: self.dim_b,
            dim_b: self.dim_a,
            states: self
                .states
                .iter()
                .map(|s| ProductState { label: s.label.clone(), a: s.b.clone(), b: s.a.clone() })
                .collect(),
            tol: self.tol,
        }
    }

    /// Seen from `first`: Alice's side is `first`'s side.
    pub fn oriented(&self, first: Party) -> Self {
        match first {
            Party::Alice => self.clone(),
            Party::Bob => self.swapped(),
        }
    }

    fn graph_of(&self, party: Party) -> Result<SimpleGraph, StateError> {
        let mut g = SimpleGraph::empty(self.len())?;
        for i in 0..self.len() {
            for j in i + 1..self.len() {
                let z = inner(self.states[i].vector(party), self.states[j].vector(party))?;
                if z.norm() > self.tol.eps() {
                    g.add_edge(i, j)?;
                }
            }
        }
        Ok(g)
    }

    /// `G_A` and `G_B`: an edge joins two states whose factors on that side
    /// are not orthogonal.
    pub fn confusability_graphs(&self) -> Result<ConfusabilityGraphs, StateError> {
        Ok(ConfusabilityGraphs { g_a: self.graph_of(Party::Alice)?, g_b: self.graph_of(Party::Bob)? })
    }

    /// Pairs whose product overlap `⟨a_i,a_j⟩⟨b_i,b_j⟩` is nonzero. Empty
    /// exactly when the states are mutually orthogonal.
    pub fn check_mutual_orthogonality(&self) -> Vec<OrthogonalityViolation> {
        let mut out = Vec::new();
        for (i, s) in self.states.iter().enumerate() {
            for t in &self.states[i + 1..] {
                let overlap = (s.a.dotc(&t.a) * s.b.dotc(&t.b)).norm();
                let side_a = s.a.dotc(&t.a).norm();
                let side_b = s.b.dotc(&t.b).norm();
                if side_a > self.tol.eps() && side_b > self.tol.eps() {
                    out.push(OrthogonalityViolation { first: s.label.clone(), second: t.label.clone(), overlap });
                }
            }
        }
        out
    }

    /// True when `G_A` is the complement of `G_B`.
    pub fn complement_equality(&self) -> Result<bool, StateError> {
        let g = self.confusability_graphs()?;
        Ok(g.g_a == g.g_b.complement())
    }

    /// Re-expresses Alice's vectors in an orthonormal basis of their span.
    /// When they already span `C^{dim_a}` the set is returned unchanged.
    pub fn restrict_to_alice_span(&self) -> Result<SpanRestriction, StateError> {
        let span = orthonormalize(self.dim_a, &self.vectors(Party::Alice), self.tol)?;
        if span.dim() == self.dim_a {
            return Ok(SpanRestriction {
                states: self.clone(),
                span: Subspace::full(self.dim_a),
                discarded: Subspace::zero(self.dim_a),
            });
        }
        let basis = span.basis_matrix();
        let coords = basis.adjoint();
        let states = self
            .states
            .iter()
            .map(|s| ProductState { label: s.label.clone(), a: &coords * &s.a, b: s.b.clone() })
            .collect();
        let discarded = span.complement(self.tol);
        Ok(SpanRestriction {
            states: Self { dim_a: span.dim(), dim_b: self.dim_b, states, tol: self.tol },
            span,
            discarded,
        })
    }

    /// Index of the state with this label.
    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.states.iter().position(|s| s.label == label)
    }

    pub fn from_json(text: &str) -> Result<Self, StateError> {
        let file: StateSetFile = serde_json::from_str(text)?;
        file.into_set()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&StateSetFile::from(self)).expect("state sets always serialize")
    }
}

fn normalized(label: &str, party: Party, dim: usize, v: CVector, tol: Tolerance) -> Result<CVector, StateError> {
    if v.len() != dim {
        return Err(StateError::WrongDimension { label: label.to_owned(), party, expected: dim, found: v.len() });
    }
    let norm = v.norm();
    if norm <= tol.eps() || !norm.is_finite() {
        return Err(StateError::ZeroVector { label: label.to_owned(), party });
    }
    Ok(v.unscale(norm))
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StateSetFile {
    pub dim_a: usize,
    pub dim_b: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tol: Option<f64>,
    pub states: Vec<StateEntry>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct StateEntry {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
}

impl StateSetFile {
    pub fn into_set(self) -> Result<ProductStateSet, StateError> {
        let tol = match self.tol {
            Some(eps) => Tolerance::new(eps)?,
            None => Tolerance::default(),
        };
        ProductStateSet::new(
            self.dim_a,
            self.dim_b,
            self.states.into_iter().map(|s| (s.label, vector_from_json(&s.a), vector_from_json(&s.b))),
            tol,
        )
    }
}

impl From<&ProductStateSet> for StateSetFile {
    fn from(s: &ProductStateSet) -> Self {
        StateSetFile {
            dim_a: s.dim_a,
            dim_b: s.dim_b,
            tol: (s.tol != Tolerance::default()).then(|| s.tol.eps()),
            states: s
                .states
                .iter()
                .map(|st| StateEntry {
                    label: Some(st.label.clone()),
                    a: vector_to_json(&st.a),
                    b: vector_to_json(&st.b),
                })
                .collect(),
        }
    }
}

/// Named instances: `example1` (five states in C⁴⊗C³ whose Alice graph is
/// P₅ and Bob graph the house) and `example3` (seven states in C³⊗C³ with
/// both graphs C₃ ∪ C₄).
pub fn builtin(name: &str) -> Result<ProductStateSet, StateError> {
    match name {
        "example1" => ProductStateSet::from_real(
            4,
            3,
            &[
                (&[1., 0., 0., 0.], &[1., 0., 1.]),
                (&[1., 1., 0., 0.], &[0., 1., 0.]),
                (&[0., 1., 1., 0.], &[0., 0., 1.]),
                (&[0., 0., 1., 1.], &[1., -1., 0.]),
                (&[0., 0., 0., 1.], &[1., 1., 1.]),
            ],
        ),
        "example3" => ProductStateSet::from_real(
            3,
            3,
            &[
                (&[1., 0., 0.], &[1., 0., 0.]),
                (&[0., 1., 1.], &[1., 0., 0.]),
                (&[0., 1., -1.], &[1., 0., 0.]),
                (&[1., 0., 0.], &[0., 1., 1.]),
                (&[1., 0., 0.], &[0., 1., -1.]),
                (&[0., 1., 0.], &[0., 1., 0.]),
                (&[0., 0., 1.], &[0., 0., 1.]),
            ],
        ),
        other => Err(StateError::UnknownBuiltin(other.to_owned())),
    }
}
