use super::{Decomposition, LoccError};
use crate::graphs::chordal::{chordality, first_simplicial};
use crate::graphs::{SimpleGraph, VertexSet};
use crate::numerics::{orthonormalize, CVector, Subspace, Tolerance};

/// Decomposition for a chordal target graph `g`.
///
/// Repeatedly picks the lowest simplicial vertex `v` among the vertices that
/// still have a component in the residual space, gives the next part
/// everything in the residual orthogonal to the non-neighbours of `v`, and
/// records as its clique the vertices touching that part. `None` when `g` is
/// not chordal or a step makes no progress.
pub fn chordal_protocol(
    ambient_dim: usize,
    phi: &[CVector],
    g: &SimpleGraph,
    tol: Tolerance,
) -> Result<Option<Decomposition>, LoccError> {
    if phi.len() != g.n() {
        return Err(LoccError::DimensionMismatch { expected: g.n(), found: phi.len() });
    }
    if chordality(g).is_none() {
        return Ok(None);
    }
    let touching = |s: &Subspace| -> Result<VertexSet, LoccError> {
        let mut out = VertexSet::EMPTY;
        for (v, f) in phi.iter().enumerate() {
            if s.touches(f, tol)? {
                out.insert(v);
            }
        }
        Ok(out)
    };

    let mut residual = Subspace::full(ambient_dim);
    let mut active = touching(&residual)?;
    let mut parts = Vec::new();
    let mut cliques = Vec::new();
    while !active.is_empty() {
        let Some(v) = first_simplicial(g, active) else { return Ok(None) };
        let far = active.difference(g.neighbours(v)).difference(VertexSet::singleton(v));
        let k: Vec<CVector> = far.iter().map(|u| phi[u].clone()).collect();
        let s = orthonormalize(ambient_dim, &k, tol)?.complement(tol).intersect(&residual, tol)?;
        if s.is_zero() {
            return Ok(None);
        }
        residual = residual.intersect(&s.complement(tol), tol)?;
        cliques.push(touching(&s)?);
        parts.push(s);
        active = touching(&residual)?;
    }
    if !residual.is_zero() {
        parts.push(residual);
        cliques.push(VertexSet::EMPTY);
    }
    Ok(Some(Decomposition { parts, cliques }))
}
