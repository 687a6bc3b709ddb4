//! Python bindings: thin wrappers over the ptdirac crate, converting
//! errors to ValueError and matrices to nested lists of Python complex.

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ptdirac::{Branch, GeometricParams, Momentum, OperatorMatrix, PtDiracError};

fn err(e: PtDiracError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn matrix_to_rows(m: &OperatorMatrix) -> Vec<Vec<Complex64>> {
    let n = m.dim();
    (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j)).collect())
        .collect()
}

fn momentum(dim: usize, p: &[f64]) -> PyResult<Momentum> {
    if p.len() == 1 {
        Momentum::along_axis(dim, p[0]).map_err(err)
    } else {
        Momentum::new(p.to_vec()).map_err(err)
    }
}

fn parse_branch(branch: &str) -> PyResult<Branch> {
    branch.parse().map_err(PyValueError::new_err)
}

/// The matrix of H = alpha.p + beta (m1 + m2 gamma5) as nested lists.
#[pyfunction]
fn hamiltonian_matrix(dim: usize, p: Vec<f64>, m1: f64, m2: f64) -> PyResult<Vec<Vec<Complex64>>> {
    let basis = ptdirac::build_basis(dim).map_err(err)?;
    let mom = momentum(dim, &p)?;
    let h = ptdirac::build_hamiltonian(&basis, &mom, m1, m2).map_err(err)?;
    Ok(matrix_to_rows(h.matrix()))
}

/// The matrix of H^+ = alpha.p + beta (m1 - m2 gamma5).
#[pyfunction]
fn adjoint_hamiltonian_matrix(
    dim: usize,
    p: Vec<f64>,
    m1: f64,
    m2: f64,
) -> PyResult<Vec<Vec<Complex64>>> {
    let basis = ptdirac::build_basis(dim).map_err(err)?;
    let mom = momentum(dim, &p)?;
    let h = ptdirac::build_adjoint_hamiltonian(&basis, &mom, m1, m2).map_err(err)?;
    Ok(matrix_to_rows(&h))
}

/// Eigenvalues plus reality/diagonalizability flags as a dict.
#[pyfunction]
#[pyo3(signature = (dim, p, m1, m2, tol = ptdirac::DEFAULT_TOL))]
fn spectrum<'py>(py: Python<'py>, dim: usize, p: Vec<f64>, m1: f64, m2: f64, tol: f64) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let basis = ptdirac::build_basis(dim).map_err(err)?;
    let mom = momentum(dim, &p)?;
    let h = ptdirac::build_hamiltonian(&basis, &mom, m1, m2).map_err(err)?;
    let s = ptdirac::spectrum(&h, tol).map_err(err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("eigenvalues", s.eigenvalues)?;
    dict.set_item("is_real", s.is_real)?;
    dict.set_item("is_diagonalizable", s.is_diagonalizable)?;
    dict.set_item("pairing", s.pairing)?;
    Ok(dict)
}

/// The dispersion pair +-sqrt(p^2 + m1^2 - m2^2).
#[pyfunction]
fn dispersion(p_mag: f64, m1: f64, m2: f64) -> (Complex64, Complex64) {
    ptdirac::dispersion(p_mag, m1, m2)
}

/// Klein-Gordon mass sqrt(m1^2 - m2^2), imaginary in the broken phase.
#[pyfunction]
fn physical_mass(m1: f64, m2: f64) -> Complex64 {
    ptdirac::physical_mass(m1, m2)
}

/// m_max = m1^2/(2 |m2|); None on the Hermitian axis m2 = 0.
#[pyfunction]
fn mass_bound(m1: f64, m2: f64) -> PyResult<Option<f64>> {
    match ptdirac::mass_bound(m1, m2) {
        Ok(b) => Ok(Some(b)),
        Err(PtDiracError::UnboundedMass) => Ok(None),
        Err(e) => Err(err(e)),
    }
}

/// Metric exponent artanh(m2/m1).
#[pyfunction]
fn metric_exponent(m1: f64, m2: f64) -> PyResult<f64> {
    ptdirac::metric_exponent(m1, m2).map_err(err)
}

/// Metric diagnostics: exponent, intertwining residual and the
/// Hermiticity residual of rho H rho^-1.
#[pyfunction]
#[pyo3(signature = (dim, p, m1, m2))]
fn metric_report<'py>(py: Python<'py>, dim: usize, p: Vec<f64>, m1: f64, m2: f64) -> PyResult<Bound<'py, pyo3::types::PyDict>> {
    let basis = ptdirac::build_basis(dim).map_err(err)?;
    let mom = momentum(dim, &p)?;
    let metric = ptdirac::metric_operator(&basis, m1, m2).map_err(err)?;
    let h = ptdirac::build_hamiltonian(&basis, &mom, m1, m2).map_err(err)?;
    let h_adj = ptdirac::build_adjoint_hamiltonian(&basis, &mom, m1, m2).map_err(err)?;
    let residual = ptdirac::verify_intertwining(h.matrix(), &h_adj, metric.eta()).map_err(err)?;
    let counterpart = ptdirac::hermitian_counterpart(&basis, &mom, m1, m2).map_err(err)?;
    let dict = pyo3::types::PyDict::new(py);
    dict.set_item("alpha_exponent", metric.alpha_exponent())?;
    dict.set_item("intertwining_residual", residual)?;
    dict.set_item(
        "counterpart_hermiticity_residual",
        counterpart.hermiticity_residual(),
    )?;
    Ok(dict)
}

/// Phase-region name for (m1, m2).
#[pyfunction]
#[pyo3(signature = (m1, m2, tol = ptdirac::region::DEFAULT_REGION_TOL))]
fn classify(m1: f64, m2: f64, tol: f64) -> PyResult<String> {
    ptdirac::classify(m1, m2, tol)
        .map(|l| l.name().to_string())
        .map_err(err)
}

/// Phase-region name from the mixing angle theta in [0, pi/2].
#[pyfunction]
#[pyo3(signature = (theta, tol = ptdirac::region::DEFAULT_REGION_TOL))]
fn classify_by_theta(theta: f64, tol: f64) -> PyResult<String> {
    ptdirac::classify_by_theta(theta, tol)
        .map(|l| l.name().to_string())
        .map_err(err)
}

/// (nu1, nu2) on the chosen branch ("ordinary" or "exotic").
#[pyfunction]
fn branch_point(nu: f64, branch: &str) -> PyResult<(f64, f64)> {
    let b = parse_branch(branch)?;
    let p = ptdirac::branch_point(nu, b).map_err(err)?;
    Ok((p.nu1, p.nu2))
}

/// Both roots of tanh(alpha), (ordinary, exotic).
#[pyfunction]
fn tanh_alpha_branches(nu: f64) -> PyResult<(f64, f64)> {
    ptdirac::tanh_alpha_branches(nu).map_err(err)
}

/// (m1, m2) = (m cosh(alpha), m sinh(alpha)).
#[pyfunction]
fn hyperbolic_params(m: f64, alpha: f64) -> PyResult<(f64, f64)> {
    let p = ptdirac::hyperbolic_params(m, alpha).map_err(err)?;
    Ok((p.m1, p.m2))
}

/// Geometric (de Sitter angle) mass pair on the chosen branch.
#[pyfunction]
fn geometric_params(fundamental_mass: f64, mu: f64, branch: &str) -> PyResult<(f64, f64)> {
    let g = GeometricParams::new(fundamental_mass, mu).map_err(err)?;
    let p = match parse_branch(branch)? {
        Branch::Ordinary => ptdirac::geometric_ordinary(&g).map_err(err)?,
        Branch::Exotic => ptdirac::geometric_exotic(&g).map_err(err)?,
    };
    Ok((p.m1, p.m2))
}

/// Rows (alpha, nu, nu1, nu2) of the curves behind figure 1.
#[pyfunction]
fn fig1_curves(alphas: Vec<f64>) -> PyResult<Vec<(f64, f64, f64, f64)>> {
    let rows = ptdirac::fig1_curves(&alphas).map_err(err)?;
    Ok(rows.iter().map(|r| (r.alpha, r.nu, r.nu1, r.nu2)).collect())
}

/// One figure-2 row: (nu, nu1, nu2, nu3, nu4).
type Fig2Row = (f64, f64, f64, f64, f64);

/// Rows (nu, nu1, nu2, nu3, nu4) of the branch curves behind figure 2.
#[pyfunction]
fn fig2_curves(nus: Vec<f64>) -> PyResult<Vec<Fig2Row>> {
    let rows = ptdirac::fig2_curves(&nus).map_err(err)?;
    Ok(rows
        .iter()
        .map(|r| (r.nu, r.nu1, r.nu2, r.nu3, r.nu4))
        .collect())
}

#[pymodule]
fn ptdirac_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(hamiltonian_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(adjoint_hamiltonian_matrix, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum, m)?)?;
    m.add_function(wrap_pyfunction!(dispersion, m)?)?;
    m.add_function(wrap_pyfunction!(physical_mass, m)?)?;
    m.add_function(wrap_pyfunction!(mass_bound, m)?)?;
    m.add_function(wrap_pyfunction!(metric_exponent, m)?)?;
    m.add_function(wrap_pyfunction!(metric_report, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(classify_by_theta, m)?)?;
    m.add_function(wrap_pyfunction!(branch_point, m)?)?;
    m.add_function(wrap_pyfunction!(tanh_alpha_branches, m)?)?;
    m.add_function(wrap_pyfunction!(hyperbolic_params, m)?)?;
    m.add_function(wrap_pyfunction!(geometric_params, m)?)?;
    m.add_function(wrap_pyfunction!(fig1_curves, m)?)?;
    m.add_function(wrap_pyfunction!(fig2_curves, m)?)?;
    Ok(())
}
