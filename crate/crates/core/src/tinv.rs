//! Translation-invariant theory: critical temperature, gap equation, the
//! normalization constant `c`, and the Cooper-pair profile `alpha0`.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    find_root_monotone, integrate_even_line, integrate_tail, QuadratureSettings, RootSettings,
};
use crate::specfun::{self, DispersionParams};

/// Physical inputs of the model.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModelParams {
    /// Contact coupling `a > 0`.
    pub a: f64,
    pub mu: f64,
    /// Temperature scaling constant: `T = T_c (1 - D h^2)`.
    pub d: f64,
    /// Semiclassical parameter in `(0, 1)`.
    pub h: f64,
}

impl ModelParams {
    pub fn new(a: f64, mu: f64, d: f64, h: f64) -> Result<Self> {
        let p = Self { a, mu, d, h };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("a", self.a), ("mu", self.mu), ("D", self.d), ("h", self.h)] {
            if !v.is_finite() {
                return Err(Error::NonFinite { name, value: v });
            }
        }
        if self.a <= 0.0 || self.d <= 0.0 || !(self.h > 0.0 && self.h < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "need a > 0, D > 0, 0 < h < 1; got a = {}, D = {}, h = {}",
                self.a, self.d, self.h
            )));
        }
        if self.d * self.h * self.h >= 1.0 {
            return Err(Error::InvalidParameter(format!(
                "D h^2 = {} must be below 1",
                self.d * self.h * self.h
            )));
        }
        Ok(())
    }

    /// `T_c (1 - D h^2)`.
    pub fn temperature(&self, tc: f64) -> f64 {
        tc * (1.0 - self.d * self.h * self.h)
    }
}

/// Solver settings shared by the translation-invariant routines.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct SolverSettings {
    pub quadrature: QuadratureSettings,
    pub root: RootSettings,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CriticalTemperature {
    pub tc: f64,
    pub beta_c: f64,
    /// `|1/a - RHS(T_c)|`.
    pub residual: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapSolution {
    pub temperature: f64,
    pub delta0: f64,
    pub residual: f64,
    pub beta: f64,
}

/// Momentum scale resolving the Fermi surface.
pub fn q_scale(mu: f64, temperature: f64, delta0: f64) -> f64 {
    (mu + temperature + delta0).max(0.0).sqrt().max(1.0)
}

/// `int 1/K_T^0(p) dp/2pi = beta int g0(beta E(p)) dp/2pi`.
///
/// At `delta0 = 0` this is the right side of the critical-temperature equation.
pub fn gap_rhs(mu: f64, temperature: f64, delta0: f64, settings: &QuadratureSettings) -> Result<f64> {
    let params = DispersionParams::new(mu, temperature, delta0)?;
    let integral = integrate_even_line(
        |p| specfun::inverse_k_t0(p, &params) / (2.0 * PI),
        q_scale(mu, temperature, delta0),
        settings,
    )?;
    Ok(integral.value)
}

fn check_coupling(a: f64) -> Result<()> {
    if !(a > 0.0 && a.is_finite()) {
        return Err(Error::InvalidParameter(format!("coupling must be positive, got {a}")));
    }
    Ok(())
}

pub fn critical_temperature(a: f64, mu: f64) -> Result<CriticalTemperature> {
    critical_temperature_with(a, mu, &SolverSettings::default())
}

/// Unique `T_c` with `beta_c int g0(beta_c (p^2 - mu)) dp/2pi = 1/a`.
pub fn critical_temperature_with(a: f64, mu: f64, settings: &SolverSettings) -> Result<CriticalTemperature> {
    check_coupling(a)?;
    if !mu.is_finite() {
        return Err(Error::NonFinite { name: "mu", value: mu });
    }
    let target = 1.0 / a;
    let q = &settings.quadrature;
    // RHS decreases in T: positive residual means T is too small.
    let residual = |t: f64| gap_rhs(mu, t, 0.0, q).map(|r| r - target);

    let t0 = mu.max(0.0) + 1.0;
    let r0 = residual(t0)?;
    let (mut lo, mut hi) = (t0, t0);
    let mut found = r0 == 0.0;
    for _ in 0..60 {
        if found {
            break;
        }
        if r0 > 0.0 {
            lo = hi;
            hi *= 2.0;
            found = residual(hi)? <= 0.0;
        } else {
            hi = lo;
            lo *= 0.5;
            found = residual(lo)? >= 0.0;
        }
    }
    if !found {
        let hint = if mu < 0.0 {
            format!(
                "; for mu < 0 a critical temperature exists only if 1/a < 1/(2 sqrt(-mu)) = {}",
                0.5 / (-mu).sqrt()
            )
        } else {
            String::new()
        };
        return Err(Error::Bracketing(format!(
            "no critical temperature found for a = {a}, mu = {mu} within 60 doublings{hint}"
        )));
    }

    let mut failure = None;
    let mut f = |t: f64| match residual(t) {
        Ok(r) => r,
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let root = RootSettings { x_tol: settings.root.x_tol * hi.max(1e-300), ..settings.root };
    let tc = find_root_monotone(&mut f, lo, hi, &root);
    if let Some(e) = failure {
        return Err(e);
    }
    let tc = tc?;
    let residual = residual(tc)?.abs();
    Ok(CriticalTemperature { tc, beta_c: 1.0 / tc, residual })
}

pub fn gap_delta0(a: f64, mu: f64, temperature: f64) -> Result<GapSolution> {
    let tc = critical_temperature(a, mu)?;
    gap_delta0_with(a, mu, temperature, tc.tc, &SolverSettings::default())
}

/// Unique `Delta_0 > 0` solving the gap equation at `temperature < tc`; zero at or above `tc`.
pub fn gap_delta0_with(
    a: f64,
    mu: f64,
    temperature: f64,
    tc: f64,
    settings: &SolverSettings,
) -> Result<GapSolution> {
    check_coupling(a)?;
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidParameter(format!(
            "temperature must be positive, got {temperature}"
        )));
    }
    let target = 1.0 / a;
    let q = &settings.quadrature;
    let beta = 1.0 / temperature;
    if temperature >= tc {
        let residual = (gap_rhs(mu, temperature, 0.0, q)? - target).abs();
        return Ok(GapSolution { temperature, delta0: 0.0, residual, beta });
    }
    // RHS decreases in Delta_0; at Delta_0 = 0 it exceeds 1/a below T_c.
    let residual = |d: f64| gap_rhs(mu, temperature, d, q).map(|r| r - target);
    let mut hi = tc.max(1e-3);
    let mut bracketed = false;
    for _ in 0..60 {
        if residual(hi)? < 0.0 {
            bracketed = true;
            break;
        }
        hi *= 2.0;
    }
    if !bracketed {
        return Err(Error::Bracketing(format!(
            "gap equation at T = {temperature}: no upper bracket for Delta_0"
        )));
    }
    let mut failure = None;
    let mut f = |d: f64| match residual(d) {
        Ok(r) => r,
        Err(e) => {
            failure.get_or_insert(e);
            f64::NAN
        }
    };
    let root = RootSettings { x_tol: settings.root.x_tol * hi, ..settings.root };
    let delta0 = find_root_monotone(&mut f, 0.0, hi, &root);
    if let Some(e) = failure {
        return Err(e);
    }
    let delta0 = delta0?;
    let residual = residual(delta0)?.abs();
    Ok(GapSolution { temperature, delta0, residual, beta })
}

/// The two integrals entering `c`: `int [g0 - z g1](beta_c xi) dq` and `beta_c int g1(beta_c xi)/xi dq`.
fn c_integrals(beta_c: f64, mu: f64, settings: &QuadratureSettings) -> Result<(f64, f64)> {
    let scale = q_scale(mu, 1.0 / beta_c, 0.0);
    let numerator = integrate_even_line(
        |q| {
            let z = beta_c * (q * q - mu);
            specfun::g0_unchecked(z) - z * specfun::g1_unchecked(z)
        },
        scale,
        settings,
    )?
    .value;
    let denominator = integrate_even_line(
        |q| beta_c * beta_c * specfun::g1_over_z_unchecked(beta_c * (q * q - mu)),
        scale,
        settings,
    )?
    .value;
    Ok((numerator, denominator))
}

pub fn constant_c(a: f64, mu: f64) -> Result<f64> {
    constant_c_with(a, mu, &SolverSettings::default())
}

pub fn constant_c_with(a: f64, mu: f64, settings: &SolverSettings) -> Result<f64> {
    let tc = critical_temperature_with(a, mu, settings)?;
    constant_c_at(tc.beta_c, mu, &settings.quadrature)
}

/// `c` at a known inverse critical temperature.
pub fn constant_c_at(beta_c: f64, mu: f64, settings: &QuadratureSettings) -> Result<f64> {
    let (num, den) = c_integrals(beta_c, mu, settings)?;
    Ok(2.0 * num / den)
}

/// Leading-order gap at `T = T_c (1 - D h^2)`: `Delta_0 = h sqrt(c D)`.
pub fn delta0_asymptotic(params: &ModelParams) -> Result<f64> {
    params.validate()?;
    let c = constant_c(params.a, params.mu)?;
    Ok(params.h * (c * params.d).sqrt())
}

/// Cooper-pair profile in microscopic variables.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Alpha0Profile {
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub momenta: Vec<f64>,
    /// `Delta_0 / (2 K_T^0(q))` on `momenta`.
    pub symbol: Vec<f64>,
}

/// Exponential decay rate of `alpha0`: distance of the nearest pole of `1/K_T^0` from the real axis.
pub fn alpha0_decay_rate(solution: &GapSolution, mu: f64) -> f64 {
    let t = solution.temperature;
    let width = (PI * PI * t * t + solution.delta0 * solution.delta0).sqrt();
    Complex64::new(mu, width).sqrt().im
}

/// `alpha0(x) = (Delta_0/2) int e^{iqx} / K_T^0(q) dq/2pi`.
///
/// The `q^-2` and `q^-4` tails of `1/K_T^0` are subtracted and transformed in
/// closed form, leaving a `q^-6` remainder for the oscillatory quadrature.
pub fn alpha0_profile(
    solution: &GapSolution,
    mu: f64,
    grid: &[f64],
    momenta: &[f64],
) -> Result<Alpha0Profile> {
    if !(solution.delta0 > 0.0) {
        return Err(Error::InvalidParameter("alpha0 needs Delta_0 > 0".into()));
    }
    let params = DispersionParams::new(mu, solution.temperature, solution.delta0)?;
    let half = 0.5 * solution.delta0;
    let c2 = mu + 1.0;
    let scale = q_scale(mu, solution.temperature, solution.delta0);
    let bare = |q: f64| {
        let s = 1.0 / (q * q + 1.0);
        (specfun::inverse_k_t0(q, &params) - s - c2 * s * s) / (2.0 * PI)
    };
    // far from the origin the transform is tiny, so the error target is absolute
    let magnitude = integrate_even_line(
        |q| bare(q).abs(),
        scale,
        &QuadratureSettings { rel_tol: 1e-6, ..Default::default() },
    )?
    .value;
    let settings = QuadratureSettings {
        rel_tol: 1e-11,
        abs_tol: 1e-13 * magnitude.max(1e-300),
        tail_cutoff: 1e-14,
        max_panels: 400_000,
    };
    let mut values = Vec::with_capacity(grid.len());
    for &x in grid {
        let r = integrate_even_line(|q| bare(q) * (q * x).cos(), scale, &settings)?.value;
        let ax = x.abs();
        let closed = 0.5 * (-ax).exp() + c2 * 0.25 * (1.0 + ax) * (-ax).exp();
        values.push(half * (r + closed));
    }
    let symbol = momenta.iter().map(|&q| half * specfun::inverse_k_t0(q, &params)).collect();
    Ok(Alpha0Profile { grid: grid.to_vec(), values, momenta: momenta.to_vec(), symbol })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BirmanSchwinger {
    /// `|a int dq/(2pi K_T^0) - 1|`.
    pub residual: f64,
    /// Lowest eigenvalue of the discretized `K_T^0 - contact` operator.
    pub lambda_min: f64,
    /// `max |(K - contact) alpha| / max |K alpha|` on the grid.
    pub annihilation: f64,
    pub kt0_fermi: f64,
    pub cutoff: f64,
    pub n_points: usize,
    /// Coupling renormalized for the momentum cutoff.
    pub effective_coupling: f64,
}

/// Momentum cutoff of the discrete zero-mode check.
pub fn birman_schwinger_cutoff(mu: f64, temperature: f64) -> f64 {
    40.0 * (mu + temperature).max(1.0).sqrt()
}

/// Discretized `K_T^0` on the uniform momentum grid with trapezoid weights.
#[derive(Debug, Clone)]
pub struct ContactOperator {
    pub momenta: Vec<f64>,
    pub weights: Vec<f64>,
    pub kinetic: Vec<f64>,
    /// Rank-one strength: the operator is `diag(K) - strength * v v^T`, `v_i = sqrt(w_i)`.
    pub strength: f64,
}

impl ContactOperator {
    /// Dense symmetric matrix of the operator (row-major).
    pub fn dense(&self) -> Vec<f64> {
        let n = self.momenta.len();
        let mut m = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                m[i * n + j] = -self.strength * (self.weights[i] * self.weights[j]).sqrt();
            }
            m[i * n + i] += self.kinetic[i];
        }
        m
    }
}

/// Truncated-momentum representation of `K_T^0 - a delta` used by the zero-mode check.
///
/// Modes beyond the cutoff are folded into the coupling: `1/a_eff = 1/a - int_{|q|>Q} dq/(2pi K)`.
pub fn contact_operator(solution: &GapSolution, a: f64, mu: f64, n_points: usize) -> Result<ContactOperator> {
    check_coupling(a)?;
    if n_points < 3 {
        return Err(Error::InvalidParameter("need at least 3 momentum points".into()));
    }
    let params = DispersionParams::new(mu, solution.temperature, solution.delta0)?;
    let cutoff = birman_schwinger_cutoff(mu, solution.temperature);
    let settings = QuadratureSettings { rel_tol: 1e-13, ..Default::default() };
    let tail = 2.0
        * integrate_tail(|q| specfun::inverse_k_t0(q, &params) / (2.0 * PI), cutoff, &settings)?.value;
    let inv_eff = 1.0 / a - tail;
    if inv_eff <= 0.0 {
        return Err(Error::InvalidParameter("momentum cutoff too small for the coupling".into()));
    }
    let spacing = 2.0 * cutoff / (n_points - 1) as f64;
    let momenta: Vec<f64> = (0..n_points).map(|i| -cutoff + spacing * i as f64).collect();
    let weights: Vec<f64> = (0..n_points)
        .map(|i| if i == 0 || i == n_points - 1 { 0.5 * spacing } else { spacing })
        .collect();
    let kinetic = momenta.iter().map(|&q| specfun::k_t0_unchecked(q, &params)).collect();
    Ok(ContactOperator { momenta, weights, kinetic, strength: 1.0 / (2.0 * PI * inv_eff) })
}

pub fn birman_schwinger_residual(solution: &GapSolution, a: f64, mu: f64) -> Result<BirmanSchwinger> {
    birman_schwinger_with(solution, a, mu, 4096, &QuadratureSettings::default())
}

pub fn birman_schwinger_with(
    solution: &GapSolution,
    a: f64,
    mu: f64,
    n_points: usize,
    settings: &QuadratureSettings,
) -> Result<BirmanSchwinger> {
    if !(solution.delta0 > 0.0) {
        return Err(Error::InvalidParameter("Birman-Schwinger check needs Delta_0 > 0".into()));
    }
    let rhs = gap_rhs(mu, solution.temperature, solution.delta0, settings)?;
    let residual = (a * rhs - 1.0).abs();

    let op = contact_operator(solution, a, mu, n_points)?;
    let k_min = op.kinetic.iter().copied().fold(f64::INFINITY, f64::min);
    let total_weight: f64 = op.weights.iter().sum();
    // Lowest eigenvalue of diag(K) - s v v^T solves 1 = s sum w_i / (K_i - lambda).
    let secular = |lambda: f64| {
        op.strength
            * op.weights.iter().zip(&op.kinetic).map(|(w, k)| w / (k - lambda)).sum::<f64>()
            - 1.0
    };
    let lo = k_min - 2.0 * op.strength * total_weight - 1.0;
    let mut hi = k_min;
    let mut gap = 1e-3 * k_min.abs().max(1e-12);
    while secular(k_min - gap) < 0.0 && gap > 1e-300 {
        gap *= 0.5;
    }
    if gap > 1e-300 {
        hi = k_min - gap;
    }
    let root = RootSettings { x_tol: 1e-15 * k_min.abs().max(1.0), f_tol: 0.0, max_iter: 500 };
    let lambda_min = find_root_monotone(secular, lo, hi, &root)?;

    let alpha: Vec<f64> = op
        .weights
        .iter()
        .zip(&op.kinetic)
        .map(|(w, k)| w.sqrt() * 0.5 * solution.delta0 / k)
        .collect();
    let overlap: f64 = op.weights.iter().zip(&alpha).map(|(w, x)| w.sqrt() * x).sum();
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..alpha.len() {
        let applied = op.kinetic[i] * alpha[i] - op.strength * op.weights[i].sqrt() * overlap;
        worst = worst.max(applied.abs());
        scale = scale.max((op.kinetic[i] * alpha[i]).abs());
    }
    let params = DispersionParams::new(mu, solution.temperature, solution.delta0)?;
    Ok(BirmanSchwinger {
        residual,
        lambda_min,
        annihilation: worst / scale,
        kt0_fermi: specfun::k_t0_unchecked(mu.max(0.0).sqrt(), &params),
        cutoff: birman_schwinger_cutoff(mu, solution.temperature),
        n_points,
        effective_coupling: 2.0 * PI * op.strength,
    })
}
