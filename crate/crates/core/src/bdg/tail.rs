//! Contribution of plane waves outside the window `|n| <= N`.
//!
//! A pairing field couples the mode `n` to the hole mode `n - l`. Pairs with at
//! least one partner outside the window are absent from the truncated blocks;
//! to second order in the pairing they add
//! `sum_l |Delta_l|^2 S_l` to `Tr f(beta H)` and `Delta_l S_l / beta` to the
//! Fourier coefficient `l` of `alpha(x, x)`, where `S_l` averages
//! `Phi(k_n, k_{n-l}) = -(beta/2)(tanh(beta k_n/2) + tanh(beta k_{n-l}/2))/(k_n + k_{n-l})`
//! over the missing pairs. The potential `W` is negligible that far out and is ignored.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::BlochDiscretization;
use crate::glfield::PeriodicField;
use crate::numerics::CompensatedSum;

/// Beyond this `beta k` both hyperbolic tangents equal 1 in double precision.
const SATURATED: f64 = 60.0;
/// Euler-Maclaurin starts once the shifted momentum exceeds this many periods.
const MIN_PERIODS: f64 = 20.0;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TailCorrection {
    /// Missing part of `Tr [f(beta H_delta) - f(beta H_0)]` per unit volume.
    pub trace: f64,
    /// Missing part of the Fourier coefficients of `alpha(x, x)`.
    pub alpha: PeriodicField,
}

#[inline]
fn phi(k: f64, kp: f64, beta: f64) -> f64 {
    let s = k + kp;
    if (beta * s).abs() < 1e-8 {
        let c = (0.5 * beta * k).cosh();
        return -0.25 * beta * beta / (c * c);
    }
    -0.5 * beta * ((0.5 * beta * k).tanh() + (0.5 * beta * kp).tanh()) / s
}

/// `int_u^inf dv / (v^2 + sigma)` for `u > 0`, `u^2 + sigma > 0`.
fn lorentz_tail(u: f64, sigma: f64) -> f64 {
    let x = sigma / (u * u);
    if x.abs() < 1e-3 {
        (1.0 - x / 3.0 + x * x / 5.0 - x * x * x / 7.0 + x.powi(4) / 9.0) / u
    } else if sigma > 0.0 {
        let r = sigma.sqrt();
        (r / u).atan() / r
    } else {
        let r = (-sigma).sqrt();
        (r / u).atanh() / r
    }
}

/// `n`-th derivative of `1/(v^2 + sigma)` from the expansion in `sigma / v^2` (needs `|sigma| < v^2`).
fn lorentz_derivative(v: f64, sigma: f64, n: u32) -> f64 {
    let x = -sigma / (v * v);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    // (2k+n+1)! / (2k+1)! for k = 0
    let mut factor: f64 = (2..=n + 1).map(f64::from).product();
    let mut power = 1.0;
    let mut sum = 0.0;
    for k in 0..200u32 {
        let term = power * factor;
        sum += term;
        if term.abs() <= 1e-18 * sum.abs() {
            break;
        }
        let (a, b) = (f64::from(2 * k + n + 2), f64::from(2 * k + n + 3));
        let (c, d) = (f64::from(2 * k + 2), f64::from(2 * k + 3));
        factor *= a * b / (c * d);
        power *= x;
    }
    sign * sum / v.powi(n as i32 + 2)
}

/// `sum_{i >= 0} 1/((v0 + 2 pi i)^2 + sigma)` by Euler-Maclaurin, for `v0^2 >= 100 |sigma|`.
fn lorentz_lattice_sum(v0: f64, sigma: f64) -> f64 {
    let step = 2.0 * PI;
    lorentz_tail(v0, sigma) / step + 0.5 * lorentz_derivative(v0, sigma, 0)
        - step / 12.0 * lorentz_derivative(v0, sigma, 1)
        + step.powi(3) / 720.0 * lorentz_derivative(v0, sigma, 3)
        - step.powi(5) / 30240.0 * lorentz_derivative(v0, sigma, 5)
}

/// One half-line of missing pairs: `n = n0, n0 + dir, n0 + 2 dir, ...`.
fn half_line(disc: &BlochDiscretization, mu: f64, beta: f64, l: i64, theta: f64, n0: i64, dir: i64) -> f64 {
    let h = disc.h;
    let c = 2.0 * PI * l as f64;
    let sigma = 0.25 * c * c - mu / (h * h);
    let mut sum = CompensatedSum::new();
    let mut n = n0;
    loop {
        let q = 2.0 * PI * n as f64 + theta;
        let k = (h * q).powi(2) - mu;
        let kp = (h * (q - c)).powi(2) - mu;
        // distance from the symmetric point of the pair, growing along the sweep
        let v = dir as f64 * (q - 0.5 * c);
        let ready = beta * k > SATURATED
            && beta * kp > SATURATED
            && v > MIN_PERIODS * 2.0 * PI
            && v * v > 100.0 * sigma.abs();
        if ready {
            sum.add(-beta / (2.0 * h * h) * lorentz_lattice_sum(v, sigma));
            return sum.value();
        }
        sum.add(phi(k, kp, beta));
        n += dir;
    }
}

/// `S_l`: quasimomentum average of `Phi` over pairs `(n, n - l)` not both inside the window.
pub fn pair_tail_sum(disc: &BlochDiscretization, mu: f64, beta: f64, l: i64) -> f64 {
    let n_modes = disc.n_modes as i64;
    let upper = n_modes + l.min(0) + 1;
    let lower = -n_modes + l.max(0) - 1;
    let mut total = CompensatedSum::new();
    for j in 0..disc.n_theta {
        let theta = disc.theta(j);
        total.add(half_line(disc, mu, beta, l, theta, upper, 1));
        total.add(half_line(disc, mu, beta, l, theta, lower, -1));
    }
    total.value() / disc.n_theta as f64
}

/// Second-order correction for a pairing field `delta` truncated to the window.
pub fn tail_correction(disc: &BlochDiscretization, mu: f64, beta: f64, delta: &PeriodicField) -> TailCorrection {
    let n = delta.n_max() as i64;
    let mut alpha = PeriodicField::zeros(delta.n_max());
    let mut coeffs = alpha.coeffs().to_vec();
    let mut trace = CompensatedSum::new();
    for l in -n..=n {
        let d = delta.coeff(l);
        if d.norm() == 0.0 {
            continue;
        }
        let s = pair_tail_sum(disc, mu, beta, l);
        trace.add(d.norm_sqr() * s);
        coeffs[(l + n) as usize] = d * (s / beta);
    }
    alpha = PeriodicField::from_coeffs(delta.n_max(), coeffs).expect("same cutoff");
    TailCorrection { trace: trace.value(), alpha }
}
