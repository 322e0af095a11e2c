use super::{Decomposition, LoccError};
use crate::graphs::{CliqueCover, VertexSet};
use crate::numerics::{orthonormalize, CVector, Subspace, Tolerance};

/// Greedy maximal subspace assignment for a clique cover.
///
/// Cliques are visited in `order`. Clique `V_j` receives everything left in
/// the residual space that is orthogonal to all vectors outside `V_j`, and
/// the residual shrinks accordingly. Succeeds when nothing is left over;
/// cliques that receive nothing keep a zero part.
pub fn greedy_assignment(
    ambient_dim: usize,
    phi: &[CVector],
    cover: &CliqueCover,
    order: &[usize],
    tol: Tolerance,
) -> Result<Option<Decomposition>, LoccError> {
    let mut seen = vec![false; cover.len()];
    if order.len() != cover.len() || order.iter().any(|&i| i >= cover.len() || std::mem::replace(&mut seen[i], true)) {
        return Err(LoccError::Precondition("order is not a permutation of the cover".into()));
    }
    let kernels = cover.cliques.iter().map(|&c| kernel(ambient_dim, phi, c, tol)).collect::<Result<Vec<_>, _>>()?;
    assign(ambient_dim, &kernels, &cover.cliques, order, tol)
}

/// `K = span{φ(v) : v ∉ clique}⊥`, the largest subspace the clique may own.
pub(crate) fn kernel(
    ambient_dim: usize,
    phi: &[CVector],
    clique: VertexSet,
    tol: Tolerance,
) -> Result<Subspace, LoccError> {
    let outside: Vec<CVector> =
        phi.iter().enumerate().filter(|(v, _)| !clique.contains(*v)).map(|(_, f)| f.clone()).collect();
    Ok(orthonormalize(ambient_dim, &outside, tol)?.complement(tol))
}

/// The greedy pass with precomputed kernels.
pub(crate) fn assign(
    ambient_dim: usize,
    kernels: &[Subspace],
    cliques: &[VertexSet],
    order: &[usize],
    tol: Tolerance,
) -> Result<Option<Decomposition>, LoccError> {
    let mut residual = Subspace::full(ambient_dim);
    let mut parts = Vec::with_capacity(order.len());
    let mut picked = Vec::with_capacity(order.len());
    for &i in order {
        let s = kernels[i].intersect(&residual, tol)?;
        if !s.is_zero() {
            residual = residual.intersect(&s.complement(tol), tol)?;
        }
        parts.push(s);
        picked.push(cliques[i]);
    }
    Ok(residual.is_zero().then_some(Decomposition { parts, cliques: picked }))
}
