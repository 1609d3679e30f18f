//! Relative entropy of BCS states and its Klein-type lower bound.

use faer::complex_native::c64;
use faer::Mat;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{eigh, from_c64, BdGBlocks, Block};
use crate::bdg::state::QuasiPeriodicState;
use crate::error::{Error, Result};
use crate::numerics::CompensatedSum;
use crate::specfun::{f_log_unchecked, rho_unchecked};

/// Eigenvalues of admissible states may leave `[0, 1]` by at most this much.
const SLACK: f64 = 1e-10;

fn check_square(a: &Block, b: &Block) -> Result<()> {
    if a.nrows() != a.ncols() || b.nrows() != b.ncols() || a.nrows() != b.nrows() {
        return Err(Error::Mismatch(format!(
            "blocks of shape {}x{} and {}x{}",
            a.nrows(),
            a.ncols(),
            b.nrows(),
            b.ncols()
        )));
    }
    Ok(())
}

fn admissible_values(values: &[f64], j: usize) -> Result<Vec<f64>> {
    values
        .iter()
        .map(|&v| {
            if (-SLACK..=1.0 + SLACK).contains(&v) {
                Ok(v.clamp(0.0, 1.0))
            } else {
                Err(Error::NotAdmissible { theta_index: j, value: v })
            }
        })
        .collect()
}

/// `x ln x` with `0 ln 0 = 0`.
#[inline]
fn xlnx(x: f64) -> f64 {
    let x = x.clamp(1e-300, 1.0);
    x * x.ln()
}

/// `|(U^* V)_{km}|^2`.
fn overlaps(u: &Block, v: &Block) -> Mat<f64> {
    let x = u.adjoint() * v;
    Mat::from_fn(x.nrows(), x.ncols(), |r, c| from_c64(x.read(r, c)).norm_sqr())
}

fn relative_entropy_block(gamma: &Block, gamma0: &Block, j: usize) -> Result<f64> {
    check_square(gamma, gamma0)?;
    let s = eigh(gamma, j)?;
    let s0 = eigh(gamma0, j)?;
    let x = admissible_values(&s.values, j)?;
    for &y in &s0.values {
        if !(y > 0.0 && y < 1.0) {
            return Err(Error::SingularReference { theta_index: j, value: y });
        }
    }
    let w = overlaps(&s.vectors, &s0.vectors);
    let mut sum = CompensatedSum::new();
    for (k, &xk) in x.iter().enumerate() {
        sum.add(xlnx(xk) + xlnx(1.0 - xk));
        for (m, &ym) in s0.values.iter().enumerate() {
            let o = w.read(k, m);
            if o != 0.0 {
                sum.add(-o * (xk * ym.ln() + (1.0 - xk) * (-ym).ln_1p()));
            }
        }
    }
    Ok(sum.value())
}

/// `Tr [G (ln G - ln G0) + (1 - G)(ln(1 - G) - ln(1 - G0))]` for a single pair of matrices.
pub fn relative_entropy_matrices(gamma: &Block, gamma0: &Block) -> Result<f64> {
    relative_entropy_block(gamma, gamma0, 0)
}

fn per_theta_mean(parts: Vec<Result<f64>>) -> Result<f64> {
    let n = parts.len();
    let mut total = CompensatedSum::new();
    for p in parts {
        total.add(p?);
    }
    Ok(total.value() / n as f64)
}

/// Relative entropy per unit volume; the reference must have spectrum in `(0, 1)`.
pub fn relative_entropy(state: &QuasiPeriodicState, ref_state: &QuasiPeriodicState) -> Result<f64> {
    state.disc().ensure_same(ref_state.disc())?;
    let parts = state
        .blocks()
        .par_iter()
        .zip(ref_state.blocks().par_iter())
        .enumerate()
        .map(|(j, (g, g0))| relative_entropy_block(g, g0, j))
        .collect();
    per_theta_mean(parts)
}

fn gibbs_block(gamma: &Block, h0: &Block, beta: f64, j: usize) -> Result<f64> {
    check_square(gamma, h0)?;
    let x = admissible_values(&eigh(gamma, j)?.values, j)?;
    let lambda = eigh(h0, j)?.values;
    let mut sum = CompensatedSum::new();
    for xk in x {
        sum.add(xlnx(xk) + xlnx(1.0 - xk));
    }
    for l in lambda {
        sum.add(-f_log_unchecked(beta * l));
    }
    let n = gamma.nrows();
    for r in 0..n {
        for c in 0..n {
            sum.add(beta * (h0.read(r, c) * gamma.read(c, r)).re);
        }
    }
    Ok(sum.value())
}

/// `Tr [beta H0 G + G ln G + (1 - G) ln(1 - G) + ln(1 + e^{-beta H0})]`, equal to the
/// relative entropy with respect to `(1 + e^{beta H0})^{-1}`.
pub fn relative_entropy_gibbs(state: &QuasiPeriodicState, ref_blocks: &BdGBlocks, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    state.disc().ensure_same(ref_blocks.disc())?;
    let parts = state
        .blocks()
        .par_iter()
        .zip(ref_blocks.blocks().par_iter())
        .enumerate()
        .map(|(j, (g, h))| gibbs_block(g, h, beta, j))
        .collect();
    per_theta_mean(parts)
}

fn check_beta(beta: f64) -> Result<()> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
    }
    Ok(())
}

/// `z / tanh(z/2)`, equal to 2 at the origin.
#[inline]
fn klein_weight(z: f64) -> f64 {
    if z.abs() < 1e-4 {
        2.0 + z * z / 6.0
    } else {
        z / (0.5 * z).tanh()
    }
}

/// Per block: `Tr [A (G - G0)^2]`, `Tr G(1 - G)` and `Tr G0(1 - G0)`.
fn klein_parts(gamma: &Block, h0: &Block, beta: f64, j: usize) -> Result<[f64; 3]> {
    check_square(gamma, h0)?;
    let s = eigh(h0, j)?;
    let y: Vec<f64> = s.values.iter().map(|&l| rho_unchecked(beta * l)).collect();
    // difference in the eigenbasis of H0
    let rotated = s.vectors.adjoint() * gamma * &s.vectors;
    let n = gamma.nrows();
    let mut quadratic = CompensatedSum::new();
    let mut purity = CompensatedSum::new();
    let mut trace = CompensatedSum::new();
    for k in 0..n {
        let mut row = CompensatedSum::new();
        for m in 0..n {
            let mut x = from_c64(rotated.read(k, m));
            purity.add(x.norm_sqr());
            if k == m {
                trace.add(x.re);
                x -= y[k];
            }
            row.add(x.norm_sqr());
        }
        quadratic.add(klein_weight(beta * s.values[k]) * row.value());
    }
    let reference = y.iter().map(|v| v * (1.0 - v)).sum::<f64>();
    Ok([quadratic.value(), trace.value() - purity.value(), reference])
}

fn klein_combine(quadratic: f64, t: f64, t0: f64) -> f64 {
    let d = t - t0;
    let denom = d.abs() + t0;
    let fraction = if denom > 0.0 { d * d / denom / 3.0 } else { 0.0 };
    quadratic + fraction
}

/// Right side of the Klein-type bound for one matrix pair, reference `(1 + e^{beta H0})^{-1}`.
pub fn klein_lower_bound_matrices(gamma: &Block, h0: &Block, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    let [q, t, t0] = klein_parts(gamma, h0, beta, 0)?;
    Ok(klein_combine(q, t, t0))
}

/// Right side of the Klein-type bound with all traces per unit volume.
pub fn klein_lower_bound(state: &QuasiPeriodicState, ref_blocks: &BdGBlocks, beta: f64) -> Result<f64> {
    check_beta(beta)?;
    state.disc().ensure_same(ref_blocks.disc())?;
    let parts: Vec<Result<[f64; 3]>> = state
        .blocks()
        .par_iter()
        .zip(ref_blocks.blocks().par_iter())
        .enumerate()
        .map(|(j, (g, h))| klein_parts(g, h, beta, j))
        .collect();
    let mut sums = [CompensatedSum::new(), CompensatedSum::new(), CompensatedSum::new()];
    let n = parts.len() as f64;
    for p in parts {
        for (s, v) in sums.iter_mut().zip(p?) {
            s.add(v);
        }
    }
    Ok(klein_combine(sums[0].value() / n, sums[1].value() / n, sums[2].value() / n))
}

/// Left minus right side of the scalar inequality for `0 < x, y < 1`.
pub fn scalar_klein_slack(x: f64, y: f64) -> f64 {
    let entropy = xlnx(x) - x * y.ln() + xlnx(1.0 - x) - (1.0 - x) * (-y).ln_1p();
    // ln((1-y)/y) / (1-2y) is the weight at the energy with occupation y
    let lambda = ((1.0 - y) / y).ln();
    let quadratic = klein_weight(lambda) * (x - y).powi(2);
    entropy - klein_combine(quadratic, x * (1.0 - x), y * (1.0 - y))
}

/// Outcome of [`klein_battery`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KleinBattery {
    pub samples: usize,
    pub seed: u64,
    /// `relative_entropy - klein_lower_bound` per sample.
    pub slacks: Vec<f64>,
    pub sizes: Vec<usize>,
    pub min_slack: f64,
    /// Smallest slack of the scalar inequality on the `grid x grid` midpoint lattice of `(0, 1)^2`.
    pub scalar_min_slack: f64,
    pub grid: usize,
}

fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> Block {
    let a = Mat::from_fn(n, n, |_, _| c64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    Mat::from_fn(n, n, |r, c| (a.read(r, c) + a.read(c, r).conj()) * c64::new(0.5, 0.0))
}

/// Random pairs `(H0, Gamma)` of sizes 2 to 16: `Gamma` has a random eigenbasis and
/// occupations in `[0, 1]`, `H0` is rescaled so its Gibbs state stays inside `[1e-5, 1 - 1e-5]`.
pub fn klein_battery(samples: usize, seed: u64, grid: usize) -> Result<KleinBattery> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut slacks = Vec::with_capacity(samples);
    let mut sizes = Vec::with_capacity(samples);
    for i in 0..samples {
        let n = rng.gen_range(2..=16);
        let beta = rng.gen_range(0.2..5.0);
        let h0 = random_hermitian(&mut rng, n);
        let top = eigh(&h0, i)?.values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let scale = (11.0 / (beta * top)).min(2.0);
        let h0 = Mat::from_fn(n, n, |r, c| h0.read(r, c) * c64::new(scale, 0.0));
        let basis = eigh(&random_hermitian(&mut rng, n), i)?.vectors;
        let occ: Vec<f64> = (0..n).map(|_| rng.gen_range(0.0..=1.0)).collect();
        let gamma = super::reconstruct(&basis, &occ);
        let s = eigh(&h0, i)?;
        let gamma0 = super::reconstruct(&s.vectors, &s.values.iter().map(|&l| rho_unchecked(beta * l)).collect::<Vec<_>>());
        let lhs = relative_entropy_block(&gamma, &gamma0, i)?;
        let rhs = klein_lower_bound_matrices(&gamma, &h0, beta)?;
        slacks.push(lhs - rhs);
        sizes.push(n);
    }
    let mut scalar_min_slack = f64::INFINITY;
    for i in 0..grid {
        for j in 0..grid {
            let (x, y) = ((i as f64 + 0.5) / grid as f64, (j as f64 + 0.5) / grid as f64);
            scalar_min_slack = scalar_min_slack.min(scalar_klein_slack(x, y));
        }
    }
    let min_slack = slacks.iter().copied().fold(f64::INFINITY, f64::min);
    Ok(KleinBattery { samples, seed, slacks, sizes, min_slack, scalar_min_slack, grid })
}
