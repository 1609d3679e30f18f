//! Scalar special functions of the semiclassical expansion.
//!
//! All functions are pure. Small arguments switch to Taylor series below
//! [`SERIES_THRESHOLD`]; large arguments are written in terms of `e^{-|z|}`
//! so nothing overflows.

use crate::error::{Error, Result};

/// Below this `|z|` the even/odd kernels use their Taylor expansions.
pub const SERIES_THRESHOLD: f64 = 1e-4;

/// Below this value of `E/2T` the dispersion symbol uses its series.
pub const KT0_SERIES_THRESHOLD: f64 = 1e-6;

/// Beyond this `|z|` the logistic-type expressions are rewritten with `e^{-|z|}`.
pub const LARGE_ARGUMENT: f64 = 40.0;

fn finite(name: &'static str, z: f64) -> Result<f64> {
    if z.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite { name, value: z })
    }
}

/// `f(z) = -ln(1 + e^{-z})`.
pub fn f_log(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(f_log_unchecked(z))
}

#[inline]
pub(crate) fn f_log_unchecked(z: f64) -> f64 {
    if z >= 0.0 {
        -(-z).exp().ln_1p()
    } else {
        // -ln(1+e^{-z}) = z - ln(1+e^{z})
        z - z.exp().ln_1p()
    }
}

/// Fermi function `rho(z) = 1/(1 + e^z)`.
pub fn rho_fermi(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(rho_unchecked(z))
}

#[inline]
pub(crate) fn rho_unchecked(z: f64) -> f64 {
    if z >= 0.0 {
        let e = (-z).exp();
        e / (1.0 + e)
    } else {
        1.0 / (1.0 + z.exp())
    }
}

/// `g0(z) = tanh(z/2)/z`, continuously extended by `1/2` at the origin.
pub fn g0(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(g0_unchecked(z))
}

#[inline]
pub(crate) fn g0_unchecked(z: f64) -> f64 {
    let a = z.abs();
    if a < SERIES_THRESHOLD {
        let z2 = z * z;
        0.5 - z2 / 24.0 + z2 * z2 / 240.0
    } else {
        (0.5 * a).tanh() / a
    }
}

// sinh(z) - z for |z| < 1, by its Maclaurin series.
fn sinh_minus_identity(z: f64) -> f64 {
    let z2 = z * z;
    let mut term = z * z2 / 6.0;
    let mut sum = term;
    let mut k = 3.0;
    while term.abs() > 1e-18 * sum.abs() {
        term *= z2 / ((2.0 * k - 2.0) * (2.0 * k - 1.0));
        sum += term;
        k += 1.0;
    }
    sum
}

/// `g1(z) = -g0'(z) = (e^{2z} - 2z e^z - 1) / (z^2 (1 + e^z)^2)`; odd.
pub fn g1(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(g1_unchecked(z))
}

#[inline]
pub(crate) fn g1_unchecked(z: f64) -> f64 {
    let a = z.abs();
    let value = if a < SERIES_THRESHOLD {
        a / 12.0 - a * a * a / 60.0
    } else if a < 1.0 {
        let c = (0.5 * a).cosh();
        sinh_minus_identity(a) / (2.0 * a * a * c * c)
    } else {
        let e = (-a).exp();
        let d = 1.0 + e;
        (1.0 - 2.0 * a * e - e * e) / (a * a * d * d)
    };
    value.copysign(z)
}

/// `g1(z)/z`, extended by `1/12` at the origin. Even and strictly positive.
pub fn g1_over_z(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(g1_over_z_unchecked(z))
}

#[inline]
pub(crate) fn g1_over_z_unchecked(z: f64) -> f64 {
    let a = z.abs();
    if a < SERIES_THRESHOLD {
        1.0 / 12.0 - a * a / 60.0
    } else {
        g1_unchecked(a) / a
    }
}

/// `g2(z) = g1'(z) + 2 g1(z)/z = 2e^z (e^z - 1) / (z (e^z + 1)^3)`; even.
pub fn g2(z: f64) -> Result<f64> {
    finite("z", z)?;
    Ok(g2_unchecked(z))
}

#[inline]
pub(crate) fn g2_unchecked(z: f64) -> f64 {
    let a = z.abs();
    if a < SERIES_THRESHOLD {
        let z2 = a * a;
        0.25 - z2 / 12.0 + 17.0 * z2 * z2 / 960.0
    } else {
        let e = (-a).exp();
        let d = 1.0 + e;
        // 2 e^{-a} (1 - e^{-a}) / (a (1 + e^{-a})^3), with expm1 for small a
        2.0 * e * (-(-a).exp_m1()) / (a * d * d * d)
    }
}

/// Parameters of the translation-invariant dispersion symbol.
#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize, serde::Deserialize)]
pub struct DispersionParams {
    pub mu: f64,
    pub temperature: f64,
    pub delta0: f64,
}

impl DispersionParams {
    pub fn new(mu: f64, temperature: f64, delta0: f64) -> Result<Self> {
        finite("mu", mu)?;
        finite("temperature", temperature)?;
        finite("delta0", delta0)?;
        if temperature <= 0.0 {
            return Err(Error::InvalidParameter(format!(
                "temperature must be positive, got {temperature}"
            )));
        }
        if delta0 < 0.0 {
            return Err(Error::InvalidParameter(format!(
                "delta0 must be non-negative, got {delta0}"
            )));
        }
        Ok(Self { mu, temperature, delta0 })
    }

    /// Quasiparticle energy `sqrt((p^2 - mu)^2 + delta0^2)`.
    #[inline]
    pub fn energy(&self, p: f64) -> f64 {
        (p * p - self.mu).hypot(self.delta0)
    }
}

/// `K_T^0(p) = E / tanh(E / 2T)`, bounded below by `2T`.
pub fn k_t0(p: f64, params: &DispersionParams) -> Result<f64> {
    finite("p", p)?;
    Ok(k_t0_unchecked(p, params))
}

#[inline]
pub(crate) fn k_t0_unchecked(p: f64, params: &DispersionParams) -> f64 {
    let t = params.temperature;
    let e = params.energy(p);
    let x = e / (2.0 * t);
    if x < KT0_SERIES_THRESHOLD {
        2.0 * t + e * e / (6.0 * t)
    } else {
        e / x.tanh()
    }
}

/// `1/K_T^0(p) = beta * g0(beta * E)`, which never divides by a small number.
#[inline]
pub(crate) fn inverse_k_t0(p: f64, params: &DispersionParams) -> f64 {
    let beta = 1.0 / params.temperature;
    beta * g0_unchecked(beta * params.energy(p))
}
