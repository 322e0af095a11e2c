//! Deciding one-way LOCC distinguishability of bipartite product states.
//!
//! A set of orthogonal product states `|a_k⟩ ⊗ |b_k⟩` induces two
//! confusability graphs, one per party. Alice can measure first and let Bob
//! finish exactly when some graph `G` between her graph and the complement of
//! Bob's graph has a clique cover whose cliques can be matched with an
//! orthogonal decomposition of her space that respects the supports of her
//! vectors. This crate searches for such decompositions, turns them into
//! verifiable measurement witnesses, and emits clique-cover certificates when
//! the dimension count rules a protocol out.
//!
//! Modules:
//! - [`numerics`]: subspaces, complements, intersections, projections.
//! - [`graphs`]: clique covers, chordality, k-trees, intermediate graphs.
//! - [`states`]: product state sets and their confusability graphs.
//! - [`locc`]: witnesses, the decision engine and protocol synthesis.
//! - [`domino`]: domino diagrams on the torus and their product bases.
//! - [`cli`]: the command implementations behind the `locc` binary.

pub mod cli;
pub mod domino;
pub mod graphs;
pub mod json;
pub mod locc;
pub mod numerics;
pub mod states;

pub use graphs::{CliqueCover, SimpleGraph, VertexSet};
pub use locc::{decide_one_way, verify_protocol, Budget, Certificate, Decomposition, MeasurementWitness, Verdict};
pub use numerics::{CMatrix, CVector, Subspace, Tolerance};
pub use states::{builtin, Party, ProductStateSet};
