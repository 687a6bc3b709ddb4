//! Mass maps: the bound m_max = m1^2/(2|m2|), the hyperbolic
//! parametrization m1 = m cosh(alpha), m2 = m sinh(alpha), the two-branch
//! inverse in the reduced variables nu = m/m_max, and the geometric
//! (de Sitter angle) parametrization with its ordinary and exotic members.

use crate::error::{PtDiracError, Result};

const SQRT_2: f64 = std::f64::consts::SQRT_2;

/// The mass pair (m1, m2) with its derived quantities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassParams {
    pub m1: f64,
    pub m2: f64,
}

impl MassParams {
    pub fn new(m1: f64, m2: f64) -> Result<Self> {
        if !(m1.is_finite() && m2.is_finite()) {
            return Err(PtDiracError::NonFinite("mass parameter"));
        }
        if m1 <= 0.0 {
            return Err(PtDiracError::NonPositiveM1(m1));
        }
        Ok(Self { m1, m2 })
    }

    /// Physical mass sqrt(m1^2 - m2^2) as a real number; `None` in the
    /// broken phase m2^2 > m1^2.
    pub fn mass(&self) -> Option<f64> {
        let sq = self.m1 * self.m1 - self.m2 * self.m2;
        (sq >= 0.0).then(|| sq.sqrt())
    }

    /// m1^2/(2|m2|); `Err(UnboundedMass)` on the Hermitian axis m2 = 0.
    pub fn mass_bound(&self) -> Result<f64> {
        mass_bound(self.m1, self.m2)
    }

    /// Hyperbolic (and metric) exponent artanh(m2/m1); `None` at or beyond
    /// the exceptional line |m2| = m1.
    pub fn alpha(&self) -> Option<f64> {
        (self.m2.abs() < self.m1).then(|| (self.m2 / self.m1).atanh())
    }

    /// Mixing angle arcsin(|m2|/m1) in [0, pi/2]; `None` in the broken phase.
    pub fn theta(&self) -> Option<f64> {
        let r = self.m2.abs() / self.m1;
        (r <= 1.0).then(|| r.asin())
    }
}

/// Fundamental mass M and de Sitter angle mu with sin(mu) = m/M.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeometricParams {
    pub fundamental_mass: f64,
    pub mu: f64,
}

impl GeometricParams {
    pub fn new(fundamental_mass: f64, mu: f64) -> Result<Self> {
        if fundamental_mass <= 0.0 || !fundamental_mass.is_finite() {
            return Err(PtDiracError::NonPositiveM1(fundamental_mass));
        }
        if !(0.0..=std::f64::consts::FRAC_PI_2).contains(&mu) {
            return Err(PtDiracError::OutOfRange {
                name: "mu",
                value: mu,
                lo: 0.0,
                hi: std::f64::consts::FRAC_PI_2,
            });
        }
        Ok(Self {
            fundamental_mass,
            mu,
        })
    }

    /// m = M sin(mu).
    pub fn mass(&self) -> f64 {
        self.fundamental_mass * self.mu.sin()
    }

    /// Fifth momentum component on the mass shell, p5 = M cos(mu).
    pub fn p5(&self) -> f64 {
        self.fundamental_mass * self.mu.cos()
    }
}

/// The two solutions of the parametrization inversion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    /// Upper sign: reduces to the standard Dirac theory as m_max -> infinity.
    Ordinary,
    /// Lower sign: no flat limit.
    Exotic,
}

impl Branch {
    pub fn name(&self) -> &'static str {
        match self {
            Branch::Ordinary => "ordinary",
            Branch::Exotic => "exotic",
        }
    }
}

impl std::str::FromStr for Branch {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ordinary" => Ok(Branch::Ordinary),
            "exotic" => Ok(Branch::Exotic),
            other => Err(format!("unknown branch '{other}'")),
        }
    }
}

/// Masses rescaled by m_max: nu = m/m_max, nu1 = m1/m_max, nu2 = m2/m_max.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NuPoint {
    pub nu: f64,
    pub nu1: f64,
    pub nu2: f64,
}

/// m_max = m1^2 / (2 |m2|); infinite on the Hermitian axis, reported as a
/// distinct error instead of an IEEE infinity.
pub fn mass_bound(m1: f64, m2: f64) -> Result<f64> {
    if !(m1.is_finite() && m2.is_finite()) {
        return Err(PtDiracError::NonFinite("mass parameter"));
    }
    if m2 == 0.0 {
        return Err(PtDiracError::UnboundedMass);
    }
    Ok(m1 * m1 / (2.0 * m2.abs()))
}

/// m1 = m cosh(alpha), m2 = m sinh(alpha).
pub fn hyperbolic_params(m: f64, alpha: f64) -> Result<MassParams> {
    if m <= 0.0 || !m.is_finite() || !alpha.is_finite() {
        return Err(PtDiracError::NonFinite("hyperbolic parameters"));
    }
    MassParams::new(m * alpha.cosh(), m * alpha.sinh())
}

fn check_nu(nu: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&nu) {
        return Err(PtDiracError::OutOfRange {
            name: "nu",
            value: nu,
            lo: 0.0,
            hi: 1.0,
        });
    }
    Ok(())
}

/// Both roots of tanh(alpha) = sqrt((1 +- sqrt(1 - nu^2))/2), returned as
/// (ordinary, exotic) = (lower, upper).
pub fn tanh_alpha_branches(nu: f64) -> Result<(f64, f64)> {
    check_nu(nu)?;
    let s = (1.0 - nu * nu).max(0.0).sqrt();
    let lower = ((1.0 - s) / 2.0).sqrt();
    let upper = ((1.0 + s) / 2.0).sqrt();
    Ok((lower, upper))
}

/// One branch of nu1 = sqrt(2) sqrt(1 -+ sqrt(1 - nu^2)),
/// nu2 = 1 -+ sqrt(1 - nu^2); Ordinary takes the upper (minus) sign.
pub fn branch_point(nu: f64, branch: Branch) -> Result<NuPoint> {
    check_nu(nu)?;
    let s = (1.0 - nu * nu).max(0.0).sqrt();
    let inner = match branch {
        Branch::Ordinary => 1.0 - s,
        Branch::Exotic => 1.0 + s,
    };
    Ok(NuPoint {
        nu,
        nu1: SQRT_2 * inner.sqrt(),
        nu2: inner,
    })
}

/// Ordinary member of the geometric parametrization:
/// m1 = 2M sin(mu/2), m2 = 2M sin^2(mu/2).
pub fn geometric_ordinary(params: &GeometricParams) -> Result<MassParams> {
    let half = params.mu / 2.0;
    let s = half.sin();
    let m = params.fundamental_mass;
    if params.mu == 0.0 {
        // Massless endpoint: m1 = m2 = 0 is outside MassParams' m1 > 0
        // domain, keep the raw pair.
        return Ok(MassParams { m1: 0.0, m2: 0.0 });
    }
    MassParams::new(2.0 * m * s, 2.0 * m * s * s)
}

/// Exotic member: m3 = 2M cos(mu/2), m4 = 2M cos^2(mu/2).
pub fn geometric_exotic(params: &GeometricParams) -> Result<MassParams> {
    let half = params.mu / 2.0;
    let c = half.cos();
    let m = params.fundamental_mass;
    MassParams::new(2.0 * m * c, 2.0 * m * c * c)
}

/// One row of the alpha -> (nu, nu1, nu2) curves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig1Row {
    pub alpha: f64,
    pub nu: f64,
    pub nu1: f64,
    pub nu2: f64,
}

/// nu1 = 2 tanh(alpha), nu2 = 2 tanh^2(alpha), nu = 2 sinh(alpha)/cosh^2(alpha);
/// the closed forms after dividing the hyperbolic parametrization by m_max.
pub fn fig1_curves(alpha_grid: &[f64]) -> Result<Vec<Fig1Row>> {
    alpha_grid
        .iter()
        .map(|&alpha| {
            if !alpha.is_finite() || alpha < 0.0 {
                return Err(PtDiracError::OutOfRange {
                    name: "alpha",
                    value: alpha,
                    lo: 0.0,
                    hi: f64::INFINITY,
                });
            }
            let t = alpha.tanh();
            Ok(Fig1Row {
                alpha,
                nu: 2.0 * alpha.sinh() / alpha.cosh().powi(2),
                nu1: 2.0 * t,
                nu2: 2.0 * t * t,
            })
        })
        .collect()
}

/// One row of the nu -> branches table: (nu1, nu2) ordinary, (nu3, nu4) exotic.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Fig2Row {
    pub nu: f64,
    pub nu1: f64,
    pub nu2: f64,
    pub nu3: f64,
    pub nu4: f64,
}

pub fn fig2_curves(nu_grid: &[f64]) -> Result<Vec<Fig2Row>> {
    nu_grid
        .iter()
        .map(|&nu| {
            let ord = branch_point(nu, Branch::Ordinary)?;
            let exo = branch_point(nu, Branch::Exotic)?;
            Ok(Fig2Row {
                nu,
                nu1: ord.nu1,
                nu2: ord.nu2,
                nu3: exo.nu1,
                nu4: exo.nu2,
            })
        })
        .collect()
}

/// Evenly spaced grid with both endpoints included; steps >= 2.
pub fn linear_grid(min: f64, max: f64, steps: usize) -> Vec<f64> {
    assert!(steps >= 2, "grid needs at least two points");
    let h = (max - min) / (steps - 1) as f64;
    (0..steps).map(|i| min + h * i as f64).collect()
}
