use thiserror::Error;

/// Errors raised by matrix construction, spectral routines and the
/// parametrization maps.
#[derive(Debug, Error)]
pub enum PtDiracError {
    #[error("unsupported dimension {0}: only 2 and 4 are available")]
    UnsupportedDimension(usize),

    #[error("dimension mismatch: {0}x{0} vs {1}x{1}")]
    DimensionMismatch(usize, usize),

    #[error("momentum has {got} components but the basis dimension {dim} needs {want}")]
    MomentumMismatch { dim: usize, got: usize, want: usize },

    #[error("matrix is numerically singular (pivot {0:.3e})")]
    SingularMatrix(f64),

    #[error("non-finite input: {0}")]
    NonFinite(&'static str),

    #[error("no positive-definite metric exists for |m2| >= |m1| (m1 = {m1}, m2 = {m2})")]
    MetricOutOfDomain { m1: f64, m2: f64 },

    #[error("{name} = {value} is outside [{lo}, {hi}]")]
    OutOfRange {
        name: &'static str,
        value: f64,
        lo: f64,
        hi: f64,
    },

    #[error("m2 = 0: the mass bound is infinite on the Hermitian axis")]
    UnboundedMass,

    #[error("m1 must be positive, got {0}")]
    NonPositiveM1(f64),

    #[error(
        "closed-form/numeric spectrum cross-check failed: max mismatch {mismatch:.3e} > {tol:.3e}"
    )]
    SpectrumCrossCheck { mismatch: f64, tol: f64 },

    #[error("eigenvalue iteration failed to converge")]
    EigenNoConvergence,
}

pub type Result<T> = std::result::Result<T, PtDiracError>;
