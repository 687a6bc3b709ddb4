//! Phase classification of the (m1, m2) half-plane: the ordinary region,
//! the two exotic regions, the maximon boundary m2 = +-m1/sqrt(2), the
//! Hermitian axis m2 = 0, the exceptional line |m2| = m1 and the broken
//! phase beyond it.

use crate::error::{PtDiracError, Result};

const FRAC_1_SQRT_2: f64 = std::f64::consts::FRAC_1_SQRT_2;
const FRAC_PI_4: f64 = std::f64::consts::FRAC_PI_4;
const FRAC_PI_2: f64 = std::f64::consts::FRAC_PI_2;

pub const DEFAULT_REGION_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegionLabel {
    /// Region I: m1/sqrt(2) < m2 < m1.
    ExoticI,
    /// Region II: |m2| < m1/sqrt(2).
    OrdinaryII,
    /// Region III: -m1 < m2 < -m1/sqrt(2).
    ExoticIII,
    /// m2 = +m1/sqrt(2): the mass bound is attained.
    MaximonBoundaryUpper,
    /// m2 = -m1/sqrt(2).
    MaximonBoundaryLower,
    /// m2 = 0: the Hamiltonian is Hermitian and the bound is infinite.
    HermitianAxis,
    /// |m2| > m1: complex spectrum.
    BrokenPT,
    /// |m2| = m1: eigenvalues coalesce; nondiagonalizable at p = 0.
    ExceptionalLine,
}

impl RegionLabel {
    pub fn name(&self) -> &'static str {
        match self {
            RegionLabel::ExoticI => "ExoticI",
            RegionLabel::OrdinaryII => "OrdinaryII",
            RegionLabel::ExoticIII => "ExoticIII",
            RegionLabel::MaximonBoundaryUpper => "MaximonBoundaryUpper",
            RegionLabel::MaximonBoundaryLower => "MaximonBoundaryLower",
            RegionLabel::HermitianAxis => "HermitianAxis",
            RegionLabel::BrokenPT => "BrokenPT",
            RegionLabel::ExceptionalLine => "ExceptionalLine",
        }
    }

    /// Boundary labels sit between the open regions; the raster mask tests
    /// skip them when checking the region sequence.
    pub fn is_boundary(&self) -> bool {
        matches!(
            self,
            RegionLabel::MaximonBoundaryUpper
                | RegionLabel::MaximonBoundaryLower
                | RegionLabel::HermitianAxis
                | RegionLabel::ExceptionalLine
        )
    }
}

impl std::fmt::Display for RegionLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Classify (m1, m2) with a relative boundary band of half-width tol*m1.
pub fn classify(m1: f64, m2: f64, tol: f64) -> Result<RegionLabel> {
    if !(m1.is_finite() && m2.is_finite()) {
        return Err(PtDiracError::NonFinite("mass parameter"));
    }
    if m1 <= 0.0 {
        return Err(PtDiracError::NonPositiveM1(m1));
    }
    let band = tol.max(0.0) * m1;
    let abs2 = m2.abs();
    if abs2 <= band {
        return Ok(RegionLabel::HermitianAxis);
    }
    if (abs2 - m1).abs() <= band {
        return Ok(RegionLabel::ExceptionalLine);
    }
    if abs2 > m1 {
        return Ok(RegionLabel::BrokenPT);
    }
    let maximon = m1 * FRAC_1_SQRT_2;
    if (abs2 - maximon).abs() <= band {
        return Ok(if m2 > 0.0 {
            RegionLabel::MaximonBoundaryUpper
        } else {
            RegionLabel::MaximonBoundaryLower
        });
    }
    if abs2 < maximon {
        Ok(RegionLabel::OrdinaryII)
    } else if m2 > 0.0 {
        Ok(RegionLabel::ExoticI)
    } else {
        Ok(RegionLabel::ExoticIII)
    }
}

/// Classify by the mixing angle theta = arcsin(|m2|/m1) in [0, pi/2].
pub fn classify_by_theta(theta: f64, tol: f64) -> Result<RegionLabel> {
    if !(0.0..=FRAC_PI_2).contains(&theta) {
        return Err(PtDiracError::OutOfRange {
            name: "theta",
            value: theta,
            lo: 0.0,
            hi: FRAC_PI_2,
        });
    }
    let band = tol.max(0.0);
    if theta <= band {
        return Ok(RegionLabel::HermitianAxis);
    }
    if (FRAC_PI_2 - theta) <= band {
        return Ok(RegionLabel::ExceptionalLine);
    }
    if (theta - FRAC_PI_4).abs() <= band {
        return Ok(RegionLabel::MaximonBoundaryUpper);
    }
    if theta < FRAC_PI_4 {
        Ok(RegionLabel::OrdinaryII)
    } else {
        Ok(RegionLabel::ExoticI)
    }
}

/// Row-major region mask over a rectangular (nu1, nu2) grid, classified
/// with tol = 0 (open-region convention for raster output).
pub fn fig3_mask(nu1_grid: &[f64], nu2_grid: &[f64]) -> Result<Vec<Vec<RegionLabel>>> {
    nu2_grid
        .iter()
        .map(|&nu2| {
            nu1_grid
                .iter()
                .map(|&nu1| classify(nu1, nu2, 0.0))
                .collect()
        })
        .collect()
}

/// Default raster for the region figure: nu1 in (0, 2], nu2 in [-2, 2],
/// 401 cells each way.
pub fn fig3_default_grids() -> (Vec<f64>, Vec<f64>) {
    let n = 401usize;
    let nu1: Vec<f64> = (0..n).map(|i| 2.0 * (i + 1) as f64 / n as f64).collect();
    let nu2: Vec<f64> = (0..n).map(|j| -2.0 + 4.0 * j as f64 / (n - 1) as f64).collect();
    (nu1, nu2)
}
