use itertools::Itertools;
use serde::Serialize;

use super::LoccError;
use crate::numerics::{rank, CVector};
use crate::states::{Party, ProductStateSet};

/// One way of removing states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub removed: Vec<String>,
    pub kept: Vec<String>,
}

/// Counting report for first measurements that rule out all but `keep`
/// states.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NonspanningReport {
    pub first_party: Party,
    pub keep: usize,
    /// Removals whose first-party vectors do not span that party's space.
    pub non_spanning: Vec<Removal>,
    /// Those among `non_spanning` whose kept states are pairwise orthogonal
    /// on the second party's side.
    pub second_party_orthogonal: Vec<Removal>,
}

/// An outcome that excludes a set of states must annihilate their
/// first-party vectors, so those vectors cannot span. Lists every
/// `(r - keep)`-subset for which that is possible, then keeps the ones after
/// which the second party can finish.
pub fn nonspanning_analysis(set: &ProductStateSet, first: Party, keep: usize) -> Result<NonspanningReport, LoccError> {
    let r = set.len();
    if keep == 0 || keep > r {
        return Err(LoccError::Precondition(format!("keep must be between 1 and {r}")));
    }
    let tol = set.tol();
    let d = set.dim(first);
    let labels = set.labels();
    let own = set.vectors(first);
    let other = set.vectors(first.other());
    let names = |ix: &[usize]| ix.iter().map(|&i| labels[i].clone()).collect::<Vec<_>>();

    let mut non_spanning = Vec::new();
    let mut second_party_orthogonal = Vec::new();
    for removed in (0..r).combinations(r - keep) {
        let vs: Vec<CVector> = removed.iter().map(|&i| own[i].clone()).collect();
        if rank(d, &vs, tol)? == d {
            continue;
        }
        let kept: Vec<usize> = (0..r).filter(|i| !removed.contains(i)).collect();
        let entry = Removal { removed: names(&removed), kept: names(&kept) };
        let orthogonal = kept.iter().tuple_combinations().all(|(&i, &j)| other[i].dotc(&other[j]).norm() <= tol.eps());
        if orthogonal {
            second_party_orthogonal.push(entry.clone());
        }
        non_spanning.push(entry);
    }
    Ok(NonspanningReport { first_party: first, keep, non_spanning, second_party_orthogonal })
}
