//! JSON encodings shared by the file formats: a complex scalar is `[re, im]`
//! (a bare real is accepted on input), a vector is an array of scalars and a
//! matrix an array of rows.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::numerics::{CMatrix, CVector};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Scalar {
    Pair([f64; 2]),
    Real(f64),
}

impl From<Scalar> for Complex64 {
    fn from(s: Scalar) -> Self {
        match s {
            Scalar::Pair([re, im]) => Complex64::new(re, im),
            Scalar::Real(re) => Complex64::new(re, 0.0),
        }
    }
}

impl From<Complex64> for Scalar {
    fn from(z: Complex64) -> Self {
        Scalar::Pair([z.re, z.im])
    }
}

pub fn vector_to_json(v: &CVector) -> Vec<Scalar> {
    v.iter().map(|&z| z.into()).collect()
}

pub fn vector_from_json(v: &[Scalar]) -> CVector {
    CVector::from_iterator(v.len(), v.iter().map(|&s| s.into()))
}

pub fn matrix_to_json(m: &CMatrix) -> Vec<Vec<Scalar>> {
    m.row_iter().map(|row| row.iter().map(|&z| z.into()).collect()).collect()
}

/// Parses a row-major matrix; `None` when rows are ragged.
pub fn matrix_from_json(rows: &[Vec<Scalar>]) -> Option<CMatrix> {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != ncols) {
        return None;
    }
    Some(CMatrix::from_fn(nrows, ncols, |i, j| rows[i][j].into()))
}
