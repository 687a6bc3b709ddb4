//! Non-Hermitian Dirac Hamiltonians with a gamma5-dependent mass term.
//!
//! The crate builds H = alpha.p + beta (m1 + m2 gamma5) in 1+1 or 3+1
//! dimensions, computes its spectrum and exceptional-point status, the
//! pseudo-Hermiticity metric eta = exp(artanh(m2/m1) gamma5), the mass
//! bound m_max = m1^2/(2|m2|) with its ordinary/exotic parametrization
//! branches, and the phase-region classification of the (m1, m2) plane.
//! The `ptdirac` binary exposes all of it as deterministic CSV/JSON
//! subcommands.

pub mod eigen;
pub mod error;
pub mod gamma;
pub mod hamiltonian;
pub mod mass;
pub mod matrix;
pub mod metric;
pub mod region;

pub use error::{PtDiracError, Result};
pub use gamma::{build_basis, gamma5_exponential, GammaBasis};
pub use hamiltonian::{
    build_adjoint_hamiltonian, build_hamiltonian, dispersion, physical_mass, spectrum,
    spectrum_of_matrix, DiracHamiltonian, Momentum, SpectralResult, DEFAULT_TOL,
};
pub use mass::{
    branch_point, fig1_curves, fig2_curves, geometric_exotic, geometric_ordinary,
    hyperbolic_params, linear_grid, mass_bound, tanh_alpha_branches, Branch, GeometricParams,
    MassParams, NuPoint,
};
pub use matrix::OperatorMatrix;
pub use metric::{
    hermitian_counterpart, metric_exponent, metric_operator, verify_intertwining, MetricOperator,
};
pub use region::{classify, classify_by_theta, fig3_default_grids, fig3_mask, RegionLabel};
