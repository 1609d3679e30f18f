use thiserror::Error;

use crate::glfield::PeriodicField;

#[derive(Debug, Error)]
pub enum Error {
    #[error("non-finite input: {name} = {value}")]
    NonFinite { name: &'static str, value: f64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("quadrature budget exhausted after {panels} panels (estimate {estimate:e}, error {error:e})")]
    QuadratureBudget { panels: usize, estimate: f64, error: f64 },

    #[error("integrand is not finite at q = {0}")]
    IntegrandNotFinite(f64),

    #[error("no sign change on [{lo}, {hi}]: f(lo) = {f_lo:e}, f(hi) = {f_hi:e}")]
    NoSignChange { lo: f64, hi: f64, f_lo: f64, f_hi: f64 },

    #[error("function value is not finite at x = {0}")]
    RootNotFinite(f64),

    #[error("root finder exhausted {iterations} iterations (bracket [{lo}, {hi}])")]
    RootIterations { iterations: usize, lo: f64, hi: f64 },

    #[error("could not bracket the root: {0}")]
    Bracketing(String),

    #[error("grid of {points} points undersamples a field with cutoff {n_max} (need {required})")]
    Undersampled { points: usize, n_max: usize, required: usize },

    #[error("field cutoff {field} exceeds the plane-wave cutoff {modes}")]
    CutoffViolation { field: usize, modes: usize },

    #[error("momentum coverage h*2*pi*N = {coverage} is below the required {required}")]
    Resolution { coverage: f64, required: f64 },

    #[error("incompatible discretizations: {0}")]
    Mismatch(String),

    #[error("state is not admissible at theta index {theta_index}: eigenvalue {value}")]
    NotAdmissible { theta_index: usize, value: f64 },

    #[error("reference state is singular at theta index {theta_index}: eigenvalue {value}")]
    SingularReference { theta_index: usize, value: f64 },

    #[error("eigendecomposition produced non-finite values at theta index {0}")]
    Eigen(usize),

    #[error("GL minimization stopped after {iterations} iterations with gradient norm {gradient_norm:e}")]
    GlNotConverged {
        iterations: usize,
        gradient_norm: f64,
        energy: f64,
        best: Box<PeriodicField>,
    },

    #[error("self-consistency did not converge in {} iterations (last change {:e})", .history.len(), .history.last().copied().unwrap_or(f64::NAN))]
    ScfNotConverged { history: Vec<f64> },

    #[error("order fit needs at least 3 usable rows, found {usable} (others below noise floor)")]
    BelowNoiseFloor { usable: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
