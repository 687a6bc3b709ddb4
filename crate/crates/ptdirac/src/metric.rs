//! The pseudo-Hermiticity metric eta = exp(a gamma5) with tanh(a) = m2/m1.
//!
//! eta intertwines H with its conjugate transpose, eta H eta^-1 = H^+, and
//! its Hermitian square root rho = exp(a/2 gamma5) produces the Hermitian
//! counterpart rho H rho^-1.

use crate::error::{PtDiracError, Result};
use crate::gamma::{gamma5_exponential, GammaBasis};
use crate::hamiltonian::Momentum;
use crate::matrix::OperatorMatrix;

/// Hermitian positive-definite metric of the form exp(a gamma5).
#[derive(Debug, Clone)]
pub struct MetricOperator {
    eta: OperatorMatrix,
    alpha_exponent: f64,
    basis_dim: usize,
}

impl MetricOperator {
    pub fn eta(&self) -> &OperatorMatrix {
        &self.eta
    }

    pub fn alpha_exponent(&self) -> f64 {
        self.alpha_exponent
    }

    pub fn basis_dim(&self) -> usize {
        self.basis_dim
    }

    /// eta^-1 = exp(-a gamma5), in closed form.
    pub fn eta_inverse(&self, basis: &GammaBasis) -> Result<OperatorMatrix> {
        gamma5_exponential(basis, -self.alpha_exponent)
    }
}

/// Metric exponent a = artanh(m2/m1); requires |m2| < |m1| so that eta stays
/// positive definite.
pub fn metric_exponent(m1: f64, m2: f64) -> Result<f64> {
    if !(m1.is_finite() && m2.is_finite()) {
        return Err(PtDiracError::NonFinite("mass parameter"));
    }
    if m1 <= 0.0 {
        return Err(PtDiracError::NonPositiveM1(m1));
    }
    if m2.abs() >= m1.abs() {
        return Err(PtDiracError::MetricOutOfDomain { m1, m2 });
    }
    Ok((m2 / m1).atanh())
}

/// Build eta = exp(artanh(m2/m1) gamma5).
pub fn metric_operator(basis: &GammaBasis, m1: f64, m2: f64) -> Result<MetricOperator> {
    let a = metric_exponent(m1, m2)?;
    Ok(MetricOperator {
        eta: gamma5_exponential(basis, a)?,
        alpha_exponent: a,
        basis_dim: basis.dim(),
    })
}

/// Relative Frobenius residual ||eta H eta^-1 - H_adj|| / max(||H||, eps).
/// Diagnostic only; a large residual is returned, not raised.
pub fn verify_intertwining(
    h: &OperatorMatrix,
    h_adj: &OperatorMatrix,
    eta: &OperatorMatrix,
) -> Result<f64> {
    let transformed = eta.mul(h)?.mul(&eta.inverse()?)?;
    let diff = transformed.sub(h_adj)?;
    Ok(diff.frobenius_norm() / h.frobenius_norm().max(f64::EPSILON))
}

/// h = rho H rho^-1 with rho = exp(a/2 gamma5): Hermitian and isospectral
/// with H on the unbroken region.
pub fn hermitian_counterpart(
    basis: &GammaBasis,
    p: &Momentum,
    m1: f64,
    m2: f64,
) -> Result<OperatorMatrix> {
    let a = metric_exponent(m1, m2)?;
    let rho = gamma5_exponential(basis, a / 2.0)?;
    let rho_inv = gamma5_exponential(basis, -a / 2.0)?;
    let h = crate::hamiltonian::build_hamiltonian(basis, p, m1, m2)?;
    rho.mul(h.matrix())?.mul(&rho_inv)
}
