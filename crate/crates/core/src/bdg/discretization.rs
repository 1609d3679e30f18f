use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default number of quasimomenta.
pub const DEFAULT_N_THETA: usize = 64;

/// Momentum coverage `h 2 pi N` required per unit of `max(1, sqrt(mu + T))`.
pub const DEFAULT_COVERAGE: f64 = 25.0;

/// `25 max(1, sqrt(mu + T))`.
pub fn default_coverage(mu: f64, temperature: f64) -> f64 {
    DEFAULT_COVERAGE * (mu + temperature).max(1.0).sqrt()
}

/// Plane-wave cutoff `N`, quasimomentum count `M` and semiclassical parameter `h`.
///
/// Quasimomenta are the midpoints `theta_j = -pi + 2 pi (j + 1/2)/M`, so the
/// grid is closed under `theta -> -theta` (`j -> M - 1 - j`).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochDiscretization {
    pub n_modes: usize,
    pub n_theta: usize,
    pub h: f64,
}

impl BlochDiscretization {
    pub fn new(n_modes: usize, n_theta: usize, h: f64) -> Result<Self> {
        if n_modes < 1 || n_theta < 1 {
            return Err(Error::InvalidParameter(format!(
                "need N >= 1 and M >= 1, got N = {n_modes}, M = {n_theta}"
            )));
        }
        if !(h > 0.0 && h.is_finite()) {
            return Err(Error::InvalidParameter(format!("h must be positive, got {h}")));
        }
        Ok(Self { n_modes, n_theta, h })
    }

    /// Smallest `N` with `h 2 pi N >= coverage`.
    pub fn with_coverage(h: f64, n_theta: usize, coverage: f64) -> Result<Self> {
        if !(coverage > 0.0 && coverage.is_finite()) {
            return Err(Error::InvalidParameter(format!("coverage must be positive, got {coverage}")));
        }
        let n = (coverage / (2.0 * PI * h)).ceil().max(1.0) as usize;
        Self::new(n, n_theta, h)
    }

    /// Modes per component, `2N + 1`.
    #[inline]
    pub fn dim(&self) -> usize {
        2 * self.n_modes + 1
    }

    #[inline]
    pub fn theta(&self, j: usize) -> f64 {
        -PI + 2.0 * PI * (j as f64 + 0.5) / self.n_theta as f64
    }

    /// Index of the quasimomentum `-theta_j`.
    #[inline]
    pub fn partner(&self, j: usize) -> usize {
        self.n_theta - 1 - j
    }

    /// `2 pi n + theta_j` for the row index `i = n + N`.
    #[inline]
    pub fn momentum(&self, i: usize, j: usize) -> f64 {
        2.0 * PI * (i as f64 - self.n_modes as f64) + self.theta(j)
    }

    /// `h 2 pi N`.
    pub fn coverage(&self) -> f64 {
        self.h * 2.0 * PI * self.n_modes as f64
    }

    pub fn check_coverage(&self, required: f64) -> Result<()> {
        let coverage = self.coverage();
        if coverage < required {
            return Err(Error::Resolution { coverage, required });
        }
        Ok(())
    }

    /// Same `h` with `N` and `M` doubled.
    pub fn refined(&self) -> Self {
        Self { n_modes: 2 * self.n_modes, n_theta: 2 * self.n_theta, h: self.h }
    }

    pub(crate) fn ensure_same(&self, other: &Self) -> Result<()> {
        if self != other {
            return Err(Error::Mismatch(format!("{self:?} vs {other:?}")));
        }
        Ok(())
    }
}
