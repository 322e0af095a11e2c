use serde::Serialize;

use super::{Decomposition, LoccError};
use crate::states::{Party, ProductStateSet};

/// Outcome of combining an Alice-side and a Bob-side decomposition into one
/// simultaneous product measurement.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum ProductCheck {
    /// `cells[j][i]` is the state identified by Alice's outcome `j` and Bob's
    /// outcome `i`, if any.
    Table { cells: Vec<Vec<Option<String>>> },
    /// The first cell (row-major) holding more than one state.
    Conflict { alice_outcome: usize, bob_outcome: usize, states: Vec<String> },
}

impl ProductCheck {
    pub fn is_table(&self) -> bool {
        matches!(self, ProductCheck::Table { .. })
    }
}

/// Both parties measure at once, each projecting onto the parts of their own
/// decomposition. This identifies the state iff no pair of outcomes can be
/// produced by two different states.
pub fn product_measurement(
    set: &ProductStateSet,
    d_a: &Decomposition,
    d_b: &Decomposition,
) -> Result<ProductCheck, LoccError> {
    for (d, party) in [(d_a, Party::Alice), (d_b, Party::Bob)] {
        if let Some(found) = d.ambient_dim().filter(|&n| n != set.dim(party)) {
            return Err(LoccError::DimensionMismatch { expected: set.dim(party), found });
        }
    }
    let tol = set.tol();
    let rows = d_a.survivors(&set.vectors(Party::Alice), tol)?;
    let cols = d_b.survivors(&set.vectors(Party::Bob), tol)?;
    let labels = set.labels();
    let mut cells = Vec::with_capacity(rows.len());
    for (j, v) in rows.iter().enumerate() {
        let mut row = Vec::with_capacity(cols.len());
        for (i, w) in cols.iter().enumerate() {
            let cell = v.intersection(*w);
            if cell.len() > 1 {
                return Ok(ProductCheck::Conflict {
                    alice_outcome: j,
                    bob_outcome: i,
                    states: cell.iter().map(|s| labels[s].clone()).collect(),
                });
            }
            row.push(cell.first().map(|s| labels[s].clone()));
        }
        cells.push(row);
    }
    Ok(ProductCheck::Table { cells })
}
