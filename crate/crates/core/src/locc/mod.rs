//! One-way LOCC: measurement witnesses, their verifier, protocol synthesis
//! and the decision engine.
//!
//! Throughout, the party that measures first plays the role of "Alice": a
//! Bob-first question is answered on the swapped state set.

mod chordal;
mod decide;
mod greedy;
mod ktree;
mod nonspanning;
mod product;
mod witness;

pub use chordal::chordal_protocol;
pub use decide::{decide_one_way, Budget, Certificate, SearchStats, Success, SynthesisPath, Verdict};
pub use greedy::greedy_assignment;
pub use ktree::ktree_protocol;
pub use nonspanning::{nonspanning_analysis, NonspanningReport};
pub use product::{product_measurement, ProductCheck};
pub use witness::{verify_protocol, verify_report, MeasurementWitness, Outcome, VerifyReport, WitnessFile};

use serde::Serialize;
use thiserror::Error;

use crate::graphs::{GraphError, VertexSet};
use crate::numerics::{CVector, NumericsError, Subspace, Tolerance};
use crate::states::{OrthogonalityViolation, StateError};

/// Threshold used by the verifier: operator completeness, "this outcome can
/// occur for this state", and orthogonality of the second party's vectors.
pub const VERIFY_TOL: f64 = 1e-8;

#[derive(Debug, Error)]
pub enum LoccError {
    #[error("states are not mutually orthogonal ({} violating pairs)", .0.len())]
    NotOrthogonal(Vec<OrthogonalityViolation>),
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("witness refers to unknown state {0:?}")]
    UnknownLabel(String),
    #[error("invalid witness file: {0}")]
    Parse(#[from] serde_json::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    States(#[from] StateError),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Orthogonal direct-sum decomposition of the first party's space, one part
/// per clique.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Decomposition {
    #[serde(serialize_with = "serialize_parts")]
    pub parts: Vec<Subspace>,
    #[serde(serialize_with = "serialize_cliques")]
    pub cliques: Vec<VertexSet>,
}

fn serialize_parts<S: serde::Serializer>(parts: &[Subspace], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(parts.len()))?;
    for p in parts {
        let basis: Vec<_> = p.basis().iter().map(crate::json::vector_to_json).collect();
        seq.serialize_element(&basis)?;
    }
    seq.end()
}

fn serialize_cliques<S: serde::Serializer>(cliques: &[VertexSet], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(cliques.len()))?;
    for c in cliques {
        seq.serialize_element(&c.to_vec())?;
    }
    seq.end()
}

/// Numerical check of the decomposition invariants.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DecompositionReport {
    /// Largest `|⟨x, y⟩|` between basis vectors of different parts.
    pub cross_overlap: f64,
    pub dim_sum: usize,
    pub ambient_dim: usize,
    /// Largest `‖P_j φ(v)‖` over pairs with `v ∉ V_j`.
    pub support_leak: f64,
}

impl DecompositionReport {
    pub fn is_valid(&self) -> bool {
        self.cross_overlap <= VERIFY_TOL && self.dim_sum == self.ambient_dim && self.support_leak <= VERIFY_TOL
    }
}

impl Decomposition {
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn ambient_dim(&self) -> Option<usize> {
        self.parts.first().map(|p| p.ambient_dim())
    }

    /// Measures how far the parts are from an orthogonal direct sum that
    /// respects the supports of `phi`.
    pub fn check(&self, ambient_dim: usize, phi: &[CVector]) -> Result<DecompositionReport, LoccError> {
        let mut cross_overlap: f64 = 0.0;
        for (i, p) in self.parts.iter().enumerate() {
            if p.ambient_dim() != ambient_dim {
                return Err(LoccError::DimensionMismatch { expected: ambient_dim, found: p.ambient_dim() });
            }
            for q in &self.parts[i + 1..] {
                for x in p.basis() {
                    for y in q.basis() {
                        cross_overlap = cross_overlap.max(x.dotc(y).norm());
                    }
                }
            }
        }
        let mut support_leak: f64 = 0.0;
        for (part, clique) in self.parts.iter().zip(&self.cliques) {
            for (v, f) in phi.iter().enumerate() {
                if !clique.contains(v) {
                    support_leak = support_leak.max(part.project(f)?.norm() / f.norm());
                }
            }
        }
        Ok(DecompositionReport {
            cross_overlap,
            dim_sum: self.parts.iter().map(Subspace::dim).sum(),
            ambient_dim,
            support_leak,
        })
    }

    /// States whose vector has a component in each part.
    pub fn survivors(&self, phi: &[CVector], tol: Tolerance) -> Result<Vec<VertexSet>, LoccError> {
        self.parts
            .iter()
            .map(|p| {
                let mut set = VertexSet::EMPTY;
                for (v, f) in phi.iter().enumerate() {
                    if p.touches(f, tol)? {
                        set.insert(v);
                    }
                }
                Ok(set)
            })
            .collect()
    }

    /// Projectors onto the nonzero parts, in order.
    pub fn projectors(&self) -> Vec<crate::numerics::CMatrix> {
        self.parts.iter().filter(|p| !p.is_zero()).map(Subspace::projector).collect()
    }
}
