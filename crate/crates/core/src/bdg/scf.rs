use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::trial::gap_energy_parts;
use super::BlochDiscretization;
use crate::error::{Error, Result};
use crate::glfield::{ExternalPotential, PeriodicField};
use crate::tinv::{critical_temperature, ModelParams};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScfSettings {
    /// Weight of the new gap in the damped update, in `(0, 1]`.
    pub damping: f64,
    /// Stop once `||Delta_next - Delta||_2 <= tol`.
    pub tol: f64,
    pub max_iter: usize,
    /// Number of past iterates mixed by Anderson acceleration; 0 gives plain damping.
    pub anderson_depth: usize,
}

impl Default for ScfSettings {
    fn default() -> Self {
        Self { damping: 0.5, tol: 1e-10, max_iter: 500, anderson_depth: 5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ScfResult {
    pub delta: PeriodicField,
    /// `F(Gamma_delta) - F(Gamma_0)` including the out-of-window correction.
    pub free_energy: f64,
    pub temperature: f64,
    pub iterations: usize,
    /// `||Delta_next - Delta||_2` per iteration.
    pub history: Vec<f64>,
}

/// Fixed point of `Delta -> (1 - d) Delta - 2 a h d alpha_Delta(x, x)` at `T = T_c (1 - D h^2)`.
///
/// The gap keeps the cutoff of `init_delta`.
pub fn self_consistent_gap(
    disc: &BlochDiscretization,
    params: &ModelParams,
    w: &ExternalPotential,
    init_delta: &PeriodicField,
    damping: f64,
    tol: f64,
) -> Result<ScfResult> {
    params.validate()?;
    let tc = critical_temperature(params.a, params.mu)?.tc;
    let settings = ScfSettings { damping, tol, ..ScfSettings::default() };
    self_consistent_gap_at(disc, params, params.temperature(tc), w, init_delta, &settings)
}

fn to_vec(f: &PeriodicField) -> Vec<f64> {
    f.coeffs().iter().flat_map(|c| [c.re, c.im]).collect()
}

fn from_vec(n_max: usize, v: &[f64]) -> PeriodicField {
    let coeffs = v.chunks(2).map(|p| Complex64::new(p[0], p[1])).collect();
    PeriodicField::from_coeffs(n_max, coeffs).expect("length matches cutoff")
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

/// Solves the small symmetric system `A x = b` by Gaussian elimination with pivoting.
fn solve_small(mut a: Vec<Vec<f64>>, mut b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))?;
        if a[piv][col].abs() < 1e-300 {
            return None;
        }
        a.swap(col, piv);
        b.swap(col, piv);
        for row in col + 1..n {
            let f = a[row][col] / a[col][col];
            for k in col..n {
                a[row][k] -= f * a[col][k];
            }
            b[row] -= f * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for i in (0..n).rev() {
        let s: f64 = (i + 1..n).map(|k| a[i][k] * x[k]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    x.iter().all(|v| v.is_finite()).then_some(x)
}

pub fn self_consistent_gap_at(
    disc: &BlochDiscretization,
    params: &ModelParams,
    temperature: f64,
    w: &ExternalPotential,
    init_delta: &PeriodicField,
    settings: &ScfSettings,
) -> Result<ScfResult> {
    let d = settings.damping;
    if !(d > 0.0 && d <= 1.0) || !(settings.tol > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need damping in (0, 1] and tol > 0, got {d} and {}",
            settings.tol
        )));
    }
    let n_max = init_delta.n_max();
    let scale = -2.0 * params.a * disc.h;
    // damped map; also returns the energy of its argument
    let map = |x: &[f64]| -> Result<(Vec<f64>, f64)> {
        let delta = from_vec(n_max, x);
        let (energy, _) = gap_energy_parts(disc, params.mu, w, params.a, temperature, &delta)?;
        let target = energy.alpha.with_cutoff(n_max);
        let next = delta.scale(Complex64::new(1.0 - d, 0.0)).add_scaled(d * scale, &target);
        Ok((to_vec(&next), energy.corrected))
    };

    let mut x = to_vec(init_delta);
    let mut xs: Vec<Vec<f64>> = Vec::new();
    let mut gs: Vec<Vec<f64>> = Vec::new();
    let mut history = Vec::new();
    for iter in 0..settings.max_iter {
        let (g, energy) = map(&x)?;
        let f = sub(&g, &x);
        let change = dot(&f, &f).sqrt();
        history.push(change);
        if change <= settings.tol {
            return Ok(ScfResult {
                delta: from_vec(n_max, &x),
                free_energy: energy,
                temperature,
                iterations: iter,
                history,
            });
        }
        xs.push(x.clone());
        gs.push(g.clone());
        if xs.len() > settings.anderson_depth + 1 {
            xs.remove(0);
            gs.remove(0);
        }
        let m = xs.len() - 1;
        x = g.clone();
        if m > 0 {
            let fs: Vec<Vec<f64>> = xs.iter().zip(&gs).map(|(x, g)| sub(g, x)).collect();
            let df: Vec<Vec<f64>> = (0..m).map(|i| sub(&fs[i + 1], &fs[i])).collect();
            let dg: Vec<Vec<f64>> = (0..m).map(|i| sub(&gs[i + 1], &gs[i])).collect();
            let mut a: Vec<Vec<f64>> = (0..m).map(|i| (0..m).map(|k| dot(&df[i], &df[k])).collect()).collect();
            let reg = 1e-12 * (0..m).map(|i| a[i][i]).sum::<f64>();
            for (i, row) in a.iter_mut().enumerate() {
                row[i] += reg;
            }
            let b: Vec<f64> = (0..m).map(|i| dot(&df[i], &f)).collect();
            match solve_small(a, b) {
                Some(gamma) => {
                    for (i, gi) in gamma.iter().enumerate() {
                        for (xk, dk) in x.iter_mut().zip(&dg[i]) {
                            *xk -= gi * dk;
                        }
                    }
                }
                None => {
                    xs.drain(..m);
                    gs.drain(..m);
                }
            }
        }
    }
    Err(Error::ScfNotConverged { history })
}
