//! Small dense complex linear algebra over coordinate spaces.
//!
//! Everything here works on tiny dimensions (a handful of coordinates), so the
//! routines favour clarity over speed. A single absolute [`Tolerance`] decides
//! when a vector counts as zero; it is applied to unit-normalized inputs.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

pub type CVector = DVector<Complex64>;
pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum NumericsError {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("tolerance {0} outside [0, 1e-3)")]
    BadTolerance(f64),
}

/// Absolute threshold below which a norm or inner product is treated as zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(f64);

impl Tolerance {
    pub const DEFAULT: f64 = 1e-9;

    pub fn new(eps: f64) -> Result<Self, NumericsError> {
        if !(0.0..1e-3).contains(&eps) {
            return Err(NumericsError::BadTolerance(eps));
        }
        Ok(Self(eps))
    }

    pub fn eps(self) -> f64 {
        self.0
    }

    pub fn is_zero(self, x: f64) -> bool {
        x.abs() <= self.0
    }
}

impl Default for Tolerance {
    fn default() -> Self {
        Self(Self::DEFAULT)
    }
}

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Builds a vector from real coefficients.
pub fn real_vector(xs: &[f64]) -> CVector {
    CVector::from_iterator(xs.len(), xs.iter().map(|&x| c(x, 0.0)))
}

/// Standard basis vector `|i⟩` in `C^dim`.
pub fn ket(dim: usize, i: usize) -> CVector {
    let mut v = CVector::zeros(dim);
    v[i] = c(1.0, 0.0);
    v
}

/// `Σ conj(u_i) v_i`, conjugate-linear in the first argument.
pub fn inner(u: &CVector, v: &CVector) -> Result<Complex64, NumericsError> {
    check_dim(u.len(), v.len())?;
    Ok(u.dotc(v))
}

fn check_dim(expected: usize, found: usize) -> Result<(), NumericsError> {
    if expected != found {
        return Err(NumericsError::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Removes from `v` its components along the orthonormal vectors `basis`,
/// twice, which is enough to recover orthogonality lost to rounding.
fn reorthogonalize(basis: &[CVector], v: &mut CVector) {
    for _ in 0..2 {
        for b in basis {
            let coeff = b.dotc(v);
            v.axpy(-coeff, b, c(1.0, 0.0));
        }
    }
}

/// An orthonormal basis of a subspace of `C^ambient_dim`.
#[derive(Debug, Clone, PartialEq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<CVector>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self { ambient_dim, basis: (0..ambient_dim).map(|i| ket(ambient_dim, i)).collect() }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[CVector] {
        &self.basis
    }

    /// Orthogonal complement inside the ambient space.
    pub fn complement(&self, tol: Tolerance) -> Subspace {
        let mut basis = self.basis.clone();
        let own = basis.len();
        for i in 0..self.ambient_dim {
            if basis.len() == self.ambient_dim {
                break;
            }
            let mut v = ket(self.ambient_dim, i);
            reorthogonalize(&basis, &mut v);
            let norm = v.norm();
            if norm > tol.eps().max(1e-12) {
                basis.push(v.unscale(norm));
            }
        }
        Subspace { ambient_dim: self.ambient_dim, basis: basis.split_off(own) }
    }

    /// `S ∩ T`, computed as the complement of `span(S⊥ ∪ T⊥)`.
    pub fn intersect(&self, other: &Subspace, tol: Tolerance) -> Result<Subspace, NumericsError> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut perps = self.complement(tol).basis;
        perps.extend(other.complement(tol).basis);
        Ok(orthonormalize(self.ambient_dim, &perps, tol)?.complement(tol))
    }

    /// Orthogonal projection of `v` onto this subspace.
    pub fn project(&self, v: &CVector) -> Result<CVector, NumericsError> {
        check_dim(self.ambient_dim, v.len())?;
        let mut out = CVector::zeros(self.ambient_dim);
        for b in &self.basis {
            out.axpy(b.dotc(v), b, c(1.0, 0.0));
        }
        Ok(out)
    }

    /// True when `v` has a component in this subspace larger than `tol`
    /// relative to its own norm.
    pub fn touches(&self, v: &CVector, tol: Tolerance) -> Result<bool, NumericsError> {
        let p = self.project(v)?;
        Ok(p.norm() > tol.eps() * v.norm().max(1.0))
    }

    /// True when `v` lies in this subspace up to `tol` relative to its norm.
    pub fn contains(&self, v: &CVector, tol: Tolerance) -> Result<bool, NumericsError> {
        let p = self.project(v)?;
        Ok((v - p).norm() <= tol.eps() * v.norm().max(1.0))
    }

    /// Orthogonal projector `Σ |b⟩⟨b|`.
    pub fn projector(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.ambient_dim, self.ambient_dim);
        for b in &self.basis {
            m += b * b.adjoint();
        }
        m
    }

    /// Direct sum with a subspace assumed orthogonal to this one.
    pub fn extend_orthogonal(&self, other: &Subspace, tol: Tolerance) -> Result<Subspace, NumericsError> {
        check_dim(self.ambient_dim, other.ambient_dim)?;
        let mut all = self.basis.clone();
        all.extend(other.basis.iter().cloned());
        orthonormalize(self.ambient_dim, &all, tol)
    }

    /// Matrix whose columns are the basis vectors (`ambient_dim × dim`).
    pub fn basis_matrix(&self) -> CMatrix {
        let mut m = CMatrix::zeros(self.ambient_dim, self.basis.len());
        for (j, b) in self.basis.iter().enumerate() {
            m.set_column(j, b);
        }
        m
    }
}

/// Orthonormal basis of `span(vs)` via two-pass Gram–Schmidt.
///
/// A vector is dropped when its residual after projection is at most
/// `tol` times its input norm. An empty list yields the zero subspace.
pub fn orthonormalize(ambient_dim: usize, vs: &[CVector], tol: Tolerance) -> Result<Subspace, NumericsError> {
    let mut basis: Vec<CVector> = Vec::new();
    for v in vs {
        check_dim(ambient_dim, v.len())?;
        let input_norm = v.norm();
        if input_norm == 0.0 {
            continue;
        }
        let mut r = v.unscale(input_norm);
        reorthogonalize(&basis, &mut r);
        let norm = r.norm();
        if norm > tol.eps().max(1e-12) {
            basis.push(r.unscale(norm));
        }
    }
    Ok(Subspace { ambient_dim, basis })
}

/// Dimension of `span(vs)`.
pub fn rank(ambient_dim: usize, vs: &[CVector], tol: Tolerance) -> Result<usize, NumericsError> {
    Ok(orthonormalize(ambient_dim, vs, tol)?.dim())
}

/// Largest entry modulus of `m - I`.
pub fn identity_residual(m: &CMatrix) -> f64 {
    let id = CMatrix::identity(m.nrows(), m.ncols());
    (m - id).iter().map(|z| z.norm()).fold(0.0, f64::max)
}
