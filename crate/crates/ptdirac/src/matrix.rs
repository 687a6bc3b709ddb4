//! Dense complex square matrices of dimension 2 or 4.
//!
//! Everything downstream (Hamiltonians, metric operators, spectra) lives in
//! these small matrices, so the operations here are plain loops over
//! row-major storage. Values are immutable; every operation returns a fresh
//! matrix.

use num_complex::Complex64;

use crate::error::{PtDiracError, Result};

/// Dense complex square matrix, row-major, dim 2 or 4.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl OperatorMatrix {
    pub fn new(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim != 2 && dim != 4 {
            return Err(PtDiracError::UnsupportedDimension(dim));
        }
        assert_eq!(entries.len(), dim * dim, "entry count must be dim^2");
        Ok(Self { dim, entries })
    }

    /// Build from real entries (imaginary parts zero).
    pub fn from_real(dim: usize, entries: &[f64]) -> Result<Self> {
        Self::new(
            dim,
            entries.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    pub fn zero(dim: usize) -> Result<Self> {
        Self::new(dim, vec![Complex64::ZERO; dim * dim])
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut m = Self::zero(dim)?;
        for i in 0..dim {
            m.entries[i * dim + i] = Complex64::ONE;
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    fn check_dim(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(PtDiracError::DimensionMismatch(self.dim, other.dim));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a + b)
            .collect();
        Self::new(self.dim, entries)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a - b)
            .collect();
        Self::new(self.dim, entries)
    }

    pub fn scale(&self, factor: Complex64) -> Self {
        Self {
            dim: self.dim,
            entries: self.entries.iter().map(|a| a * factor).collect(),
        }
    }

    pub fn scale_re(&self, factor: f64) -> Self {
        self.scale(Complex64::new(factor, 0.0))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_dim(other)?;
        let n = self.dim;
        let mut out = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for k in 0..n {
                let aik = self.entries[i * n + k];
                if aik == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    out[i * n + j] += aik * other.entries[k * n + j];
                }
            }
        }
        Self::new(n, out)
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let n = self.dim;
        let mut out = vec![Complex64::ZERO; n * n];
        for i in 0..n {
            for j in 0..n {
                out[j * n + i] = self.entries[i * n + j].conj();
            }
        }
        Self {
            dim: n,
            entries: out,
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    pub fn anticommutator(&self, other: &Self) -> Result<Self> {
        self.mul(other)?.add(&other.mul(self)?)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries
            .iter()
            .map(|z| z.norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    pub fn trace(&self) -> Complex64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    /// Relative deviation from Hermiticity, ||A - A^+|| / max(||A||, eps).
    pub fn hermiticity_residual(&self) -> f64 {
        let diff = self.sub(&self.adjoint()).expect("same dim");
        diff.frobenius_norm() / self.frobenius_norm().max(f64::EPSILON)
    }

    /// Inverse by Gauss-Jordan with partial pivoting.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut inv = Self::identity(n)?.entries;
        let scale = self.frobenius_norm().max(f64::EPSILON);
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r1, &r2| {
                    a[r1 * n + col]
                        .norm()
                        .total_cmp(&a[r2 * n + col].norm())
                })
                .unwrap();
            let pivot = a[pivot_row * n + col];
            if pivot.norm() <= 1e-14 * scale {
                return Err(PtDiracError::SingularMatrix(pivot.norm()));
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                    inv.swap(col * n + j, pivot_row * n + j);
                }
            }
            let inv_pivot = pivot.inv();
            for j in 0..n {
                a[col * n + j] *= inv_pivot;
                inv[col * n + j] *= inv_pivot;
            }
            for row in 0..n {
                if row == col {
                    continue;
                }
                let factor = a[row * n + col];
                if factor == Complex64::ZERO {
                    continue;
                }
                for j in 0..n {
                    let ac = a[col * n + j];
                    let ic = inv[col * n + j];
                    a[row * n + j] -= factor * ac;
                    inv[row * n + j] -= factor * ic;
                }
            }
        }
        Self::new(n, inv)
    }

    pub fn determinant(&self) -> Complex64 {
        // LU with partial pivoting; the matrices here are tiny.
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut det = Complex64::ONE;
        for col in 0..n {
            let pivot_row = (col..n)
                .max_by(|&r1, &r2| {
                    a[r1 * n + col]
                        .norm()
                        .total_cmp(&a[r2 * n + col].norm())
                })
                .unwrap();
            let pivot = a[pivot_row * n + col];
            if pivot == Complex64::ZERO {
                return Complex64::ZERO;
            }
            if pivot_row != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot_row * n + j);
                }
                det = -det;
            }
            det *= pivot;
            for row in col + 1..n {
                let factor = a[row * n + col] / pivot;
                for j in col..n {
                    let ac = a[col * n + j];
                    a[row * n + j] -= factor * ac;
                }
            }
        }
        det
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn rejects_odd_dimensions() {
        assert!(matches!(
            OperatorMatrix::zero(3),
            Err(PtDiracError::UnsupportedDimension(3))
        ));
        assert!(OperatorMatrix::zero(2).is_ok());
        assert!(OperatorMatrix::zero(4).is_ok());
    }

    #[test]
    fn identity_norm() {
        let id = OperatorMatrix::identity(2).unwrap();
        assert!((id.frobenius_norm() - 2f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn adjoint_is_involutive() {
        let m = OperatorMatrix::new(2, vec![c(1.0, 2.0), c(0.5, -1.0), c(0.0, 3.0), c(-2.0, 0.1)])
            .unwrap();
        assert_eq!(m.adjoint().adjoint(), m);
    }

    #[test]
    fn dimension_mismatch_rejected() {
        let a = OperatorMatrix::identity(2).unwrap();
        let b = OperatorMatrix::identity(4).unwrap();
        assert!(matches!(
            a.mul(&b),
            Err(PtDiracError::DimensionMismatch(2, 4))
        ));
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn inverse_round_trip() {
        let m = OperatorMatrix::new(2, vec![c(1.0, 1.0), c(2.0, 0.0), c(0.0, -1.0), c(3.0, 0.5)])
            .unwrap();
        let prod = m.mul(&m.inverse().unwrap()).unwrap();
        let id = OperatorMatrix::identity(2).unwrap();
        assert!(prod.sub(&id).unwrap().frobenius_norm() < 1e-13);
    }

    #[test]
    fn singular_matrix_rejected() {
        let m = OperatorMatrix::from_real(2, &[1.0, 2.0, 2.0, 4.0]).unwrap();
        assert!(m.inverse().is_err());
    }

    fn arb_matrix(dim: usize) -> impl Strategy<Value = OperatorMatrix> {
        prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), dim * dim).prop_map(move |v| {
            OperatorMatrix::new(dim, v.into_iter().map(|(re, im)| c(re, im)).collect()).unwrap()
        })
    }

    proptest! {
        #[test]
        fn adjoint_reverses_products(a in arb_matrix(4), b in arb_matrix(4)) {
            let lhs = a.mul(&b).unwrap().adjoint();
            let rhs = b.adjoint().mul(&a.adjoint()).unwrap();
            let scale = lhs.frobenius_norm().max(1.0);
            prop_assert!(lhs.sub(&rhs).unwrap().frobenius_norm() <= 1e-13 * scale);
        }

        #[test]
        fn trace_of_commutator_vanishes(a in arb_matrix(2), b in arb_matrix(2)) {
            let t = a.commutator(&b).unwrap().trace();
            let scale = a.frobenius_norm() * b.frobenius_norm() + 1.0;
            prop_assert!(t.norm() <= 1e-12 * scale);
        }
    }
}
