//! Measurement witnesses and the independent verifier.

use serde::{Deserialize, Serialize};

use super::{LoccError, VERIFY_TOL};
use crate::json::{matrix_from_json, matrix_to_json, vector_from_json, vector_to_json, Scalar};
use crate::numerics::{identity_residual, CMatrix, CVector};
use crate::states::{Party, ProductStateSet};

/// One outcome of the first party's measurement.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    /// Kraus operator on the first party's space.
    pub operator: CMatrix,
    /// Labels of the states that can produce this outcome.
    pub survivors: Vec<String>,
    /// Orthonormal vectors the second party measures against after this
    /// outcome, one per survivor in the same order.
    pub second_basis: Vec<CVector>,
}

/// A one-way protocol: the first party's measurement plus, per outcome, the
/// states that remain and how the second party tells them apart.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasurementWitness {
    pub first_party: Party,
    pub outcomes: Vec<Outcome>,
}

impl MeasurementWitness {
    /// Builds a witness from the first party's operators, filling in the
    /// survivor sets and second-party vectors from `set`.
    pub fn from_operators(set: &ProductStateSet, first: Party, operators: Vec<CMatrix>) -> Result<Self, LoccError> {
        let d = set.dim(first);
        let outcomes = operators
            .into_iter()
            .map(|op| {
                if op.nrows() != d || op.ncols() != d {
                    return Err(LoccError::DimensionMismatch { expected: d, found: op.ncols() });
                }
                let (survivors, second_basis) = set
                    .states()
                    .iter()
                    .filter(|s| (&op * s.vector(first)).norm() > VERIFY_TOL)
                    .map(|s| (s.label.clone(), s.vector(first.other()).clone()))
                    .unzip();
                Ok(Outcome { operator: op, survivors, second_basis })
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { first_party: first, outcomes })
    }

    pub fn operators(&self) -> impl Iterator<Item = &CMatrix> {
        self.outcomes.iter().map(|o| &o.operator)
    }

    /// `Σ M†M`.
    pub fn operator_sum(&self) -> Option<CMatrix> {
        let mut it = self.operators();
        let first = it.next()?;
        let mut acc = first.adjoint() * first;
        for m in it {
            acc += m.adjoint() * m;
        }
        Some(acc)
    }

    pub fn to_file(&self) -> WitnessFile {
        WitnessFile {
            first_party: self.first_party,
            outcomes: self
                .outcomes
                .iter()
                .map(|o| OutcomeEntry {
                    operator: matrix_to_json(&o.operator),
                    survivors: o.survivors.clone(),
                    bob_basis: o.second_basis.iter().map(vector_to_json).collect(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("witnesses always serialize")
    }

    pub fn from_json(text: &str) -> Result<Self, LoccError> {
        let file: WitnessFile = serde_json::from_str(text)?;
        file.into_witness()
    }
}

/// On-disk witness. `bob_basis` holds the second party's vectors, which are
/// Alice's when Bob goes first.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessFile {
    pub first_party: Party,
    pub outcomes: Vec<OutcomeEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OutcomeEntry {
    pub operator: Vec<Vec<Scalar>>,
    pub survivors: Vec<String>,
    #[serde(default)]
    pub bob_basis: Vec<Vec<Scalar>>,
}

impl WitnessFile {
    pub fn into_witness(self) -> Result<MeasurementWitness, LoccError> {
        let outcomes = self
            .outcomes
            .into_iter()
            .map(|o| {
                let operator = matrix_from_json(&o.operator)
                    .ok_or_else(|| LoccError::Precondition("ragged operator matrix".into()))?;
                Ok(Outcome {
                    operator,
                    survivors: o.survivors,
                    second_basis: o.bob_basis.iter().map(|v| vector_from_json(v)).collect(),
                })
            })
            .collect::<Result<_, LoccError>>()?;
        Ok(MeasurementWitness { first_party: self.first_party, outcomes })
    }
}

/// What the verifier found.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerifyReport {
    /// Largest entry of `|Σ M†M − I|`; infinite when there are no outcomes.
    pub completeness_residual: f64,
    /// Outcomes whose declared survivors differ from the states that can
    /// actually produce them.
    pub survivor_mismatches: Vec<usize>,
    /// `(outcome, label, label)` for surviving pairs the second party cannot
    /// separate.
    pub confusable_pairs: Vec<(usize, String, String)>,
}

impl VerifyReport {
    pub fn is_complete(&self) -> bool {
        self.completeness_residual <= VERIFY_TOL
    }

    pub fn is_sound(&self) -> bool {
        self.survivor_mismatches.is_empty() && self.confusable_pairs.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        self.is_complete() && self.is_sound()
    }
}

/// Checks completeness and soundness of `witness` against `set`, using only
/// the operators and declared survivors.
pub fn verify_report(set: &ProductStateSet, witness: &MeasurementWitness) -> Result<VerifyReport, LoccError> {
    let first = witness.first_party;
    let d = set.dim(first);
    for m in witness.operators() {
        if m.nrows() != d || m.ncols() != d {
            return Err(LoccError::DimensionMismatch {
                expected: d,
                found: if m.nrows() != d { m.nrows() } else { m.ncols() },
            });
        }
    }
    for o in &witness.outcomes {
        if let Some(bad) = o.survivors.iter().find(|l| set.index_of(l).is_none()) {
            return Err(LoccError::UnknownLabel(bad.clone()));
        }
    }
    let completeness_residual = witness.operator_sum().map_or(f64::INFINITY, |s| identity_residual(&s));

    let mut survivor_mismatches = Vec::new();
    let mut confusable_pairs = Vec::new();
    for (k, o) in witness.outcomes.iter().enumerate() {
        let actual: Vec<usize> = set
            .states()
            .iter()
            .enumerate()
            .filter(|(_, s)| (&o.operator * s.vector(first)).norm() > VERIFY_TOL)
            .map(|(i, _)| i)
            .collect();
        let mut declared: Vec<usize> = o.survivors.iter().filter_map(|l| set.index_of(l)).collect();
        declared.sort_unstable();
        declared.dedup();
        if declared != actual || declared.len() != o.survivors.len() {
            survivor_mismatches.push(k);
        }
        for (x, &i) in actual.iter().enumerate() {
            for &j in &actual[x + 1..] {
                let (si, sj) = (&set.states()[i], &set.states()[j]);
                if si.vector(first.other()).dotc(sj.vector(first.other())).norm() > VERIFY_TOL {
                    confusable_pairs.push((k, si.label.clone(), sj.label.clone()));
                }
            }
        }
    }
    Ok(VerifyReport { completeness_residual, survivor_mismatches, confusable_pairs })
}

/// True iff the witness is a complete measurement after each of whose
/// outcomes the second party can perfectly distinguish the survivors.
pub fn verify_protocol(set: &ProductStateSet, witness: &MeasurementWitness) -> Result<bool, LoccError> {
    Ok(verify_report(set, witness)?.is_valid())
}
