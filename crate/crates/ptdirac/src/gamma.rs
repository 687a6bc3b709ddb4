//! Gamma-matrix representations in 1+1 and 3+1 dimensions.
//!
//! The 2d basis is
//!   gamma0 = [[0,1],[1,0]],  gamma1 = [[0,1],[-1,0]],  gamma5 = -gamma0*gamma1.
//! The 4d basis is the Dirac representation: beta = diag(1,1,-1,-1) and
//! gamma5 with identity blocks on the antidiagonal, so beta and gamma5
//! checks are exact in floating point.

use num_complex::Complex64;

use crate::error::{PtDiracError, Result};
use crate::matrix::OperatorMatrix;

/// A concrete gamma-matrix representation together with the derived
/// alpha matrices alpha_i = gamma0 * gamma_i.
#[derive(Debug, Clone)]
pub struct GammaBasis {
    dim: usize,
    gamma0: OperatorMatrix,
    gamma_spatial: Vec<OperatorMatrix>,
    gamma5: OperatorMatrix,
    alpha_matrices: Vec<OperatorMatrix>,
}

impl GammaBasis {
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// gamma0, also written beta.
    pub fn gamma0(&self) -> &OperatorMatrix {
        &self.gamma0
    }

    pub fn gamma_spatial(&self) -> &[OperatorMatrix] {
        &self.gamma_spatial
    }

    pub fn gamma5(&self) -> &OperatorMatrix {
        &self.gamma5
    }

    /// alpha_i = gamma0 * gamma_i; these multiply the momentum components.
    pub fn alpha_matrices(&self) -> &[OperatorMatrix] {
        &self.alpha_matrices
    }

    pub fn spatial_count(&self) -> usize {
        self.gamma_spatial.len()
    }
}

/// Build the gamma basis for dim 2 or 4.
pub fn build_basis(dim: usize) -> Result<GammaBasis> {
    match dim {
        2 => {
            let gamma0 = OperatorMatrix::from_real(2, &[0.0, 1.0, 1.0, 0.0])?;
            let gamma1 = OperatorMatrix::from_real(2, &[0.0, 1.0, -1.0, 0.0])?;
            // gamma5 = -gamma0*gamma1 = diag(1, -1)
            let gamma5 = OperatorMatrix::from_real(2, &[1.0, 0.0, 0.0, -1.0])?;
            let alpha1 = gamma0.mul(&gamma1)?;
            Ok(GammaBasis {
                dim: 2,
                gamma0,
                gamma_spatial: vec![gamma1],
                gamma5,
                alpha_matrices: vec![alpha1],
            })
        }
        4 => {
            let gamma0 = OperatorMatrix::from_real(
                4,
                &[
                    1.0, 0.0, 0.0, 0.0, //
                    0.0, 1.0, 0.0, 0.0, //
                    0.0, 0.0, -1.0, 0.0, //
                    0.0, 0.0, 0.0, -1.0,
                ],
            )?;
            // Pauli sigma_x, sigma_y, sigma_z in the off-diagonal blocks:
            // gamma_i = [[0, sigma_i], [-sigma_i, 0]].
            let i = Complex64::I;
            let z = Complex64::ZERO;
            let one = Complex64::ONE;
            let gamma1 = OperatorMatrix::new(
                4,
                vec![
                    z, z, z, one, //
                    z, z, one, z, //
                    z, -one, z, z, //
                    -one, z, z, z,
                ],
            )?;
            let gamma2 = OperatorMatrix::new(
                4,
                vec![
                    z, z, z, -i, //
                    z, z, i, z, //
                    z, i, z, z, //
                    -i, z, z, z,
                ],
            )?;
            let gamma3 = OperatorMatrix::new(
                4,
                vec![
                    z, z, one, z, //
                    z, z, z, -one, //
                    -one, z, z, z, //
                    z, one, z, z,
                ],
            )?;
            let gamma5 = OperatorMatrix::from_real(
                4,
                &[
                    0.0, 0.0, 1.0, 0.0, //
                    0.0, 0.0, 0.0, 1.0, //
                    1.0, 0.0, 0.0, 0.0, //
                    0.0, 1.0, 0.0, 0.0,
                ],
            )?;
            let alpha_matrices = vec![
                gamma0.mul(&gamma1)?,
                gamma0.mul(&gamma2)?,
                gamma0.mul(&gamma3)?,
            ];
            Ok(GammaBasis {
                dim: 4,
                gamma0,
                gamma_spatial: vec![gamma1, gamma2, gamma3],
                gamma5,
                alpha_matrices,
            })
        }
        other => Err(PtDiracError::UnsupportedDimension(other)),
    }
}

/// exp(a * gamma5) in closed form: cosh(a) 1 + sinh(a) gamma5, valid because
/// gamma5^2 = 1. Hermitian and positive definite for real a; the inverse is
/// the same map at -a.
pub fn gamma5_exponential(basis: &GammaBasis, a: f64) -> Result<OperatorMatrix> {
    if !a.is_finite() {
        return Err(PtDiracError::NonFinite("gamma5 exponent"));
    }
    let id = OperatorMatrix::identity(basis.dim())?;
    id.scale_re(a.cosh()).add(&basis.gamma5().scale_re(a.sinh()))
}
