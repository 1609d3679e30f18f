//! Ginzburg-Landau coefficients `b1`, `b2`, `b3` and the constant `c`.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{integrate_even_line, QuadratureSettings};
use crate::specfun::{g1_over_z_unchecked, g1_unchecked, g2_unchecked};
use crate::tinv::{constant_c_at, critical_temperature_with, q_scale, SolverSettings};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GLCoefficients {
    pub b1: f64,
    pub b2: f64,
    pub b3: f64,
    pub c: f64,
    pub beta_c: f64,
    pub mu: f64,
    pub d: f64,
}

impl GLCoefficients {
    /// Coefficient set with `b2 = 0`, which decouples the external potential.
    pub fn without_potential(&self) -> Self {
        Self { b2: 0.0, ..*self }
    }
}

/// The three line integrals shared by the coefficient formulas and `E2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct KernelIntegrals {
    /// `int (g1 + 2 beta q^2 g2)(beta xi) dq/2pi`
    pub gradient: f64,
    /// `int g1(beta xi) dq/2pi`
    pub potential: f64,
    /// `int g1(beta xi)/xi dq/2pi`
    pub quartic: f64,
}

pub(crate) fn kernel_integrals(beta: f64, mu: f64, settings: &QuadratureSettings) -> Result<KernelIntegrals> {
    let scale = q_scale(mu, 1.0 / beta, 0.0);
    let two_pi = 2.0 * PI;
    let gradient = integrate_even_line(
        |q| {
            let z = beta * (q * q - mu);
            (g1_unchecked(z) + 2.0 * beta * q * q * g2_unchecked(z)) / two_pi
        },
        scale,
        settings,
    )?
    .value;
    let potential =
        integrate_even_line(|q| g1_unchecked(beta * (q * q - mu)) / two_pi, scale, settings)?.value;
    let quartic = integrate_even_line(
        |q| beta * g1_over_z_unchecked(beta * (q * q - mu)) / two_pi,
        scale,
        settings,
    )?
    .value;
    Ok(KernelIntegrals { gradient, potential, quartic })
}

fn check_d(d: f64) -> Result<()> {
    if !(d > 0.0 && d.is_finite()) {
        return Err(Error::InvalidParameter(format!("D must be positive, got {d}")));
    }
    Ok(())
}

pub fn compute_coefficients(a: f64, mu: f64, d: f64) -> Result<GLCoefficients> {
    compute_coefficients_with(a, mu, d, &SolverSettings::default())
}

pub fn compute_coefficients_with(a: f64, mu: f64, d: f64, settings: &SolverSettings) -> Result<GLCoefficients> {
    check_d(d)?;
    let beta_c = critical_temperature_with(a, mu, settings)?.beta_c;
    let c = constant_c_at(beta_c, mu, &settings.quadrature)?;
    let k = kernel_integrals(beta_c, mu, &settings.quadrature)?;
    let b2c = beta_c * beta_c;
    Ok(GLCoefficients {
        b1: c * d * b2c / 16.0 * k.gradient,
        b2: c * d * b2c / 4.0 * k.potential,
        b3: (c * d).powi(2) * b2c / 16.0 * k.quartic,
        c,
        beta_c,
        mu,
        d,
    })
}

/// `b1` in its integrated-by-parts form `cD beta_c^2/4 int q^2 g1(beta_c xi)/xi dq/2pi`.
pub fn b1_alternative(a: f64, mu: f64, d: f64) -> Result<f64> {
    b1_alternative_with(a, mu, d, &SolverSettings::default())
}

pub fn b1_alternative_with(a: f64, mu: f64, d: f64, settings: &SolverSettings) -> Result<f64> {
    check_d(d)?;
    let beta_c = critical_temperature_with(a, mu, settings)?.beta_c;
    let c = constant_c_at(beta_c, mu, &settings.quadrature)?;
    let integral = integrate_even_line(
        |q| q * q * beta_c * g1_over_z_unchecked(beta_c * (q * q - mu)) / (2.0 * PI),
        q_scale(mu, 1.0 / beta_c, 0.0),
        &settings.quadrature,
    )?
    .value;
    Ok(c * d * beta_c * beta_c / 4.0 * integral)
}
