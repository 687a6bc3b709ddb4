//! The modified Dirac Hamiltonian H = alpha.p + beta (m1 + m2 gamma5),
//! its adjoint, dispersion relation and spectral classification.

use num_complex::Complex64;

use crate::eigen;
use crate::error::{PtDiracError, Result};
use crate::gamma::GammaBasis;
use crate::matrix::OperatorMatrix;

/// Default tolerance for the reality classification; the CLI can override it.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Spatial momentum, one component in 1+1 dimensions, three in 3+1.
#[derive(Debug, Clone, PartialEq)]
pub struct Momentum {
    components: Vec<f64>,
}

impl Momentum {
    pub fn new(components: Vec<f64>) -> Result<Self> {
        if components.iter().any(|c| !c.is_finite()) {
            return Err(PtDiracError::NonFinite("momentum component"));
        }
        Ok(Self { components })
    }

    /// Momentum along the first axis only; works for both dimensions.
    pub fn along_axis(dim: usize, p: f64) -> Result<Self> {
        let len = if dim == 4 { 3 } else { 1 };
        let mut components = vec![0.0; len];
        components[0] = p;
        Self::new(components)
    }

    pub fn components(&self) -> &[f64] {
        &self.components
    }

    pub fn magnitude(&self) -> f64 {
        self.components
            .iter()
            .map(|c| c * c)
            .sum::<f64>()
            .sqrt()
    }
}

/// A Hamiltonian built by `build_hamiltonian`, carrying the generating
/// parameters so the spectrum can be cross-checked against the closed form.
#[derive(Debug, Clone)]
pub struct DiracHamiltonian {
    matrix: OperatorMatrix,
    p_mag: f64,
    m1: f64,
    m2: f64,
}

impl DiracHamiltonian {
    pub fn matrix(&self) -> &OperatorMatrix {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.dim()
    }

    pub fn params(&self) -> (f64, f64, f64) {
        (self.p_mag, self.m1, self.m2)
    }
}

/// Eigenvalues with the reality and diagonalizability verdicts.
#[derive(Debug, Clone)]
pub struct SpectralResult {
    /// Sorted ascending by (real part, imaginary part).
    pub eigenvalues: Vec<Complex64>,
    /// All imaginary parts within tolerance of zero.
    pub is_real: bool,
    /// Geometric multiplicity equals algebraic multiplicity for every
    /// eigenvalue.
    pub is_diagonalizable: bool,
    /// Index pairs (i, j) with eigenvalue[j] = conj(eigenvalue[i]).
    pub pairing: Vec<(usize, usize)>,
}

fn momentum_term(basis: &GammaBasis, p: &Momentum) -> Result<OperatorMatrix> {
    let want = basis.spatial_count();
    if p.components().len() != want {
        return Err(PtDiracError::MomentumMismatch {
            dim: basis.dim(),
            got: p.components().len(),
            want,
        });
    }
    let mut acc = OperatorMatrix::zero(basis.dim())?;
    for (alpha, &pi) in basis.alpha_matrices().iter().zip(p.components()) {
        acc = acc.add(&alpha.scale_re(pi))?;
    }
    Ok(acc)
}

fn build_matrix(basis: &GammaBasis, p: &Momentum, m1: f64, m2: f64) -> Result<OperatorMatrix> {
    if !m1.is_finite() || !m2.is_finite() {
        return Err(PtDiracError::NonFinite("mass parameter"));
    }
    let kinetic = momentum_term(basis, p)?;
    let mass = basis.gamma0().scale_re(m1);
    let g5_mass = basis.gamma0().mul(basis.gamma5())?.scale_re(m2);
    kinetic.add(&mass)?.add(&g5_mass)
}

/// H = alpha.p + beta m1 + beta gamma5 m2.
pub fn build_hamiltonian(
    basis: &GammaBasis,
    p: &Momentum,
    m1: f64,
    m2: f64,
) -> Result<DiracHamiltonian> {
    Ok(DiracHamiltonian {
        matrix: build_matrix(basis, p, m1, m2)?,
        p_mag: p.magnitude(),
        m1,
        m2,
    })
}

/// H^+ = alpha.p + beta (m1 - gamma5 m2); equals the conjugate transpose of
/// `build_hamiltonian`'s output, which the tests assert.
pub fn build_adjoint_hamiltonian(
    basis: &GammaBasis,
    p: &Momentum,
    m1: f64,
    m2: f64,
) -> Result<OperatorMatrix> {
    build_matrix(basis, p, m1, -m2)
}

/// Principal branch with Re >= 0 and, on the imaginary axis, Im >= 0.
fn positive_branch_sqrt(x: f64) -> Complex64 {
    if x >= 0.0 {
        Complex64::new(x.sqrt(), 0.0)
    } else {
        Complex64::new(0.0, (-x).sqrt())
    }
}

/// The dispersion pair +-sqrt(p^2 + m1^2 - m2^2).
pub fn dispersion(p_mag: f64, m1: f64, m2: f64) -> (Complex64, Complex64) {
    let root = positive_branch_sqrt(p_mag * p_mag + m1 * m1 - m2 * m2);
    (root, -root)
}

/// Klein-Gordon mass sqrt(m1^2 - m2^2); imaginary in the broken phase.
pub fn physical_mass(m1: f64, m2: f64) -> Complex64 {
    positive_branch_sqrt(m1 * m1 - m2 * m2)
}

fn sort_spectrum(eigs: &mut [Complex64]) {
    eigs.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
}

/// Greedy nearest-neighbour distance between two equally sized spectra.
fn spectra_mismatch(a: &[Complex64], b: &[Complex64]) -> f64 {
    let mut used = vec![false; b.len()];
    let mut worst = 0.0f64;
    for &x in a {
        let mut best = f64::INFINITY;
        let mut best_j = 0;
        for (j, &y) in b.iter().enumerate() {
            if !used[j] {
                let d = (x - y).norm();
                if d < best {
                    best = d;
                    best_j = j;
                }
            }
        }
        used[best_j] = true;
        worst = worst.max(best);
    }
    worst
}

fn conjugate_pairing(eigs: &[Complex64], tol: f64) -> Vec<(usize, usize)> {
    let mut pairing = Vec::new();
    let mut used = vec![false; eigs.len()];
    for (i, &lam) in eigs.iter().enumerate() {
        if used[i] {
            continue;
        }
        for (j, &mu) in eigs.iter().enumerate().skip(i) {
            if used[j] && j != i {
                continue;
            }
            if (mu - lam.conj()).norm() <= tol {
                if j == i && lam.im.abs() > tol {
                    continue;
                }
                pairing.push((i, j));
                used[i] = true;
                used[j] = true;
                break;
            }
        }
    }
    pairing
}

fn diagonalizable(matrix: &OperatorMatrix, eigs: &[Complex64]) -> bool {
    let n = matrix.dim();
    let scale = matrix.frobenius_norm().max(f64::EPSILON);
    // Cluster eigenvalues; the closed-form values repeat exactly, so a loose
    // relative radius is enough.
    let cluster_tol = 1e-7 * scale.max(1.0);
    let mut remaining: Vec<Complex64> = eigs.to_vec();
    while let Some(lam) = remaining.pop() {
        let mut mult = 1usize;
        remaining.retain(|&mu| {
            if (mu - lam).norm() <= cluster_tol {
                mult += 1;
                false
            } else {
                true
            }
        });
        if mult == 1 {
            continue;
        }
        let shifted = matrix
            .sub(&OperatorMatrix::identity(n).unwrap().scale(lam))
            .unwrap();
        let rank = eigen::rank(&shifted, 1e-8 * scale);
        let geometric = n - rank;
        if geometric < mult {
            return false;
        }
    }
    true
}

/// Spectrum of a builder-produced Hamiltonian: closed form
/// +-sqrt(p^2 + m1^2 - m2^2) cross-checked against the generic dense
/// eigenvalue routine on the raw matrix.
pub fn spectrum(h: &DiracHamiltonian, tol: f64) -> Result<SpectralResult> {
    let tol = if tol > 0.0 { tol } else { DEFAULT_TOL };
    let (plus, minus) = dispersion(h.p_mag, h.m1, h.m2);
    let copies = h.dim() / 2;
    let mut eigs = Vec::with_capacity(h.dim());
    for _ in 0..copies {
        eigs.push(minus);
        eigs.push(plus);
    }
    sort_spectrum(&mut eigs);

    let numeric = eigen::eigenvalues(h.matrix())?;
    let scale = h.matrix().frobenius_norm().max(1.0);
    // Near eigenvalue coalescence (the exceptional set) any backward-stable
    // dense routine can only locate the eigenvalues to O(sqrt(eps) * scale),
    // so the cross-check widens there.
    let disc = h.p_mag * h.p_mag + h.m1 * h.m1 - h.m2 * h.m2;
    let cross_tol = if disc.abs() <= f64::EPSILON.sqrt() * scale * scale {
        1e-7 * scale
    } else {
        1e-9 * scale
    };
    let mismatch = spectra_mismatch(&eigs, &numeric);
    if mismatch > cross_tol {
        return Err(PtDiracError::SpectrumCrossCheck {
            mismatch,
            tol: cross_tol,
        });
    }

    let is_real = eigs.iter().all(|z| z.im.abs() <= tol);
    let is_diagonalizable = diagonalizable(h.matrix(), &eigs);
    let pairing = conjugate_pairing(&eigs, tol.max(1e-12 * scale));
    Ok(SpectralResult {
        eigenvalues: eigs,
        is_real,
        is_diagonalizable,
        pairing,
    })
}

/// Spectrum of an arbitrary matrix (no closed form available): the generic
/// routine plus the same classification flags.
pub fn spectrum_of_matrix(matrix: &OperatorMatrix, tol: f64) -> Result<SpectralResult> {
    let tol = if tol > 0.0 { tol } else { DEFAULT_TOL };
    let mut eigs = eigen::eigenvalues(matrix)?;
    sort_spectrum(&mut eigs);
    let scale = matrix.frobenius_norm().max(1.0);
    let is_real = eigs.iter().all(|z| z.im.abs() <= tol);
    let is_diagonalizable = diagonalizable(matrix, &eigs);
    let pairing = conjugate_pairing(&eigs, tol.max(1e-12 * scale));
    Ok(SpectralResult {
        eigenvalues: eigs,
        is_real,
        is_diagonalizable,
        pairing,
    })
}
