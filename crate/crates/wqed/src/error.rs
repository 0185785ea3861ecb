use num_complex::Complex64;
use thiserror::Error;

/// Errors produced by the waveguide model and its numerical kernels.
#[derive(Debug, Error)]
pub enum WqedError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("energy {omega} lies outside the open band ({lo}, {hi})")]
    OutOfBand { omega: f64, lo: f64, hi: f64 },

    #[error("no bound states at zero coupling")]
    NoBoundStates,

    #[error("bound-state branch selection failed: {details}; candidate roots {roots:?}")]
    BranchSelection {
        details: String,
        roots: Vec<Complex64>,
    },

    #[error("degenerate scattering state: g = 0 with omega_k = delta leaves the exciton amplitude undefined")]
    DegenerateScattering,

    #[error("quadrature did not converge: requested {requested:.3e}, achieved {achieved:.3e}")]
    QuadratureNonConvergence { requested: f64, achieved: f64 },

    #[error("spectral expansion of the emission kernel did not converge at {max_points} sample points")]
    SeriesNonConvergence { max_points: usize },

    #[error("pole search did not converge: {0}")]
    PoleDivergence(String),

    #[error("fit window is not monotonically decreasing in amplitude")]
    NonMonotoneWindow,

    #[error("time-series mismatch: {0}")]
    GridMismatch(String),

    #[error("finite chain: {0}")]
    ChainBuild(String),

    #[error("LAPACK {routine} failed with info = {info}")]
    Lapack { routine: &'static str, info: i32 },

    #[error("{0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, WqedError>;
