use super::{verify_protocol, LoccError, MeasurementWitness};
use crate::graphs::{is_ktree, SimpleGraph};
use crate::numerics::CMatrix;
use crate::states::{Party, ProductStateSet};

/// Alice-first protocol for a k-tree `g` with `G_A ≤ g ≤ complement(G_B)`.
///
/// Alice peels vertices off in k-tree elimination order, each time asking
/// "is the state along the current image of this vertex's vector?". The
/// sequence of two-outcome measurements is flattened into one witness with
/// operators `P_j C_{j-1}` and the final remainder `C`, where
/// `C_j = (I - P_j) C_{j-1}`. `None` only if the result fails verification.
pub fn ktree_protocol(
    set: &ProductStateSet,
    g: &SimpleGraph,
    k: usize,
) -> Result<Option<MeasurementWitness>, LoccError> {
    let violations = set.check_mutual_orthogonality();
    if !violations.is_empty() {
        return Err(LoccError::NotOrthogonal(violations));
    }
    if g.n() != set.len() {
        return Err(LoccError::DimensionMismatch { expected: set.len(), found: g.n() });
    }
    let graphs = set.confusability_graphs()?;
    if !graphs.g_a.is_subgraph_of(g) || !g.is_subgraph_of(&graphs.g_b.complement()) {
        return Err(LoccError::Precondition("graph is not between G_A and the complement of G_B".into()));
    }
    let order = is_ktree(g, k).ok_or_else(|| LoccError::Precondition(format!("graph is not a {k}-tree")))?;

    let d = set.dim_a();
    let tol = set.tol().eps().max(1e-12);
    let phi = set.vectors(Party::Alice);
    let mut remainder = CMatrix::identity(d, d);
    let mut operators = Vec::new();
    for &v in &order.order[..g.n() - (k + 1)] {
        let image = &remainder * &phi[v];
        let norm = image.norm();
        if norm <= tol {
            continue;
        }
        let psi = image.unscale(norm);
        let p = &psi * psi.adjoint();
        operators.push(&p * &remainder);
        remainder = (CMatrix::identity(d, d) - p) * remainder;
    }
    operators.push(remainder);
    operators.retain(|m| m.norm() > tol);

    let witness = MeasurementWitness::from_operators(set, Party::Alice, operators)?;
    Ok(verify_protocol(set, &witness)?.then_some(witness))
}
