use faer::complex_native::c64;
use faer::Mat;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::trial::pair_coefficients;
use super::{
    eigh, eigvalsh, from_c64, kinetic_block, reconstruct, BdGBlocks, Block,
    BlochDiscretization,
};
use crate::error::{Error, Result};
use crate::glfield::{ExternalPotential, PeriodicField};
use crate::numerics::{compensated_sum, CompensatedSum};
use crate::specfun::{f_log_unchecked, rho_unchecked};

/// Eigenvalues of admissible states may leave `[0, 1]` by at most this much.
const ADMISSIBLE_SLACK: f64 = 1e-10;

/// Per-quasimomentum blocks of a state `0 <= Gamma <= 1`.
#[derive(Debug, Clone)]
pub struct QuasiPeriodicState {
    disc: BlochDiscretization,
    blocks: Vec<Block>,
}

impl QuasiPeriodicState {
    pub fn from_blocks(disc: BlochDiscretization, blocks: Vec<Block>) -> Result<Self> {
        let n = 2 * disc.dim();
        if blocks.len() != disc.n_theta || blocks.iter().any(|b| b.nrows() != n || b.ncols() != n) {
            return Err(Error::Mismatch(format!("expected {} blocks of size {n}", disc.n_theta)));
        }
        Ok(Self { disc, blocks })
    }

    pub fn disc(&self) -> &BlochDiscretization {
        &self.disc
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Checks `0 <= Gamma_theta <= 1` up to the admissibility slack.
    pub fn check_admissible(&self) -> Result<()> {
        for (j, b) in self.blocks.iter().enumerate() {
            for v in eigvalsh(b, j)? {
                if !(-ADMISSIBLE_SLACK..=1.0 + ADMISSIBLE_SLACK).contains(&v) {
                    return Err(Error::NotAdmissible { theta_index: j, value: v });
                }
            }
        }
        Ok(())
    }
}

/// Gibbs state per block together with the eigenvalues of the generating operator.
pub(crate) fn gibbs_parts(blocks: &BdGBlocks, beta: f64) -> Result<(Vec<Vec<f64>>, QuasiPeriodicState)> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
    }
    let parts: Vec<Result<(Vec<f64>, Block)>> = blocks
        .blocks()
        .par_iter()
        .enumerate()
        .map(|(j, h)| {
            let s = eigh(h, j)?;
            let occ: Vec<f64> = s.values.iter().map(|&l| rho_unchecked(beta * l)).collect();
            Ok((s.values, reconstruct(&s.vectors, &occ)))
        })
        .collect();
    let mut values = Vec::with_capacity(parts.len());
    let mut states = Vec::with_capacity(parts.len());
    for p in parts {
        let (v, g) = p?;
        values.push(v);
        states.push(g);
    }
    Ok((values, QuasiPeriodicState { disc: *blocks.disc(), blocks: states }))
}

/// `Gamma = (1 + e^{beta H})^{-1}` block by block.
pub fn fermi_state(blocks: &BdGBlocks, beta: f64) -> Result<QuasiPeriodicState> {
    gibbs_parts(blocks, beta).map(|(_, s)| s)
}

/// `(1/M) sum_j Re tr B_j`, summed in ascending `j` with compensation.
pub fn trace_per_unit_volume(blocks: &[Block]) -> f64 {
    if blocks.is_empty() {
        return 0.0;
    }
    let mut s = CompensatedSum::new();
    for b in blocks {
        for i in 0..b.nrows().min(b.ncols()) {
            s.add(b.read(i, i).re);
        }
    }
    s.value() / blocks.len() as f64
}

/// `S = -Tr Gamma ln Gamma` over the doubled space, per unit volume.
pub fn entropy(state: &QuasiPeriodicState) -> Result<f64> {
    let per_theta: Vec<Result<f64>> = state
        .blocks
        .par_iter()
        .enumerate()
        .map(|(j, b)| {
            let vals = eigvalsh(b, j)?;
            let mut s = CompensatedSum::new();
            for v in vals {
                if !(-ADMISSIBLE_SLACK..=1.0 + ADMISSIBLE_SLACK).contains(&v) {
                    return Err(Error::NotAdmissible { theta_index: j, value: v });
                }
                // 0 ln 0 = 0
                if v > 0.0 {
                    let x = v.min(1.0);
                    s.add(-x * x.ln());
                }
            }
            Ok(s.value())
        })
        .collect();
    let mut total = CompensatedSum::new();
    for p in per_theta {
        total.add(p?);
    }
    Ok(total.value() / state.disc.n_theta as f64)
}

/// Upper-right block `[Gamma_theta]_12` at quasimomentum `j`.
pub fn pair_block(state: &QuasiPeriodicState, j: usize) -> Block {
    let d = state.disc.dim();
    let b = &state.blocks[j];
    Mat::from_fn(d, d, |r, c| b.read(r, d + c))
}

/// `alpha(x, x)` as Fourier coefficients (cutoff `2N`) and samples on `2(2N+1)` points.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairDiagonal {
    pub coeffs: PeriodicField,
    pub samples: Vec<Complex64>,
}

impl PairDiagonal {
    /// `int_0^1 |alpha(x, x)|^2 dx`.
    pub fn squared_norm(&self) -> f64 {
        self.coeffs.l2_norm().powi(2)
    }
}

/// Coefficient `l` of `alpha(x, x)` is `(1/M) sum_j sum_{n - m = l} [Gamma_j]_12(n, m)`.
pub(crate) fn pair_diagonal_coeffs(state: &QuasiPeriodicState) -> PeriodicField {
    let pairs: Vec<Block> = (0..state.disc.n_theta).map(|j| pair_block(state, j)).collect();
    pair_coefficients(&state.disc, &pairs)
}

pub fn pair_diagonal(state: &QuasiPeriodicState) -> PairDiagonal {
    let coeffs = pair_diagonal_coeffs(state);
    let samples = coeffs
        .evaluate(2 * state.disc.dim())
        .expect("2(2N+1) points resolve cutoff 2N");
    PairDiagonal { coeffs, samples }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FreeEnergy {
    /// `Tr (-h^2 d^2 - mu + h^2 W) gamma`
    pub kinetic: f64,
    pub entropy: f64,
    /// `-a h int |alpha(x, x)|^2`
    pub interaction: f64,
    pub total: f64,
}

/// BCS free energy per unit volume of an admissible state.
pub fn bcs_free_energy(
    state: &QuasiPeriodicState,
    mu: f64,
    w: &ExternalPotential,
    a: f64,
    temperature: f64,
) -> Result<FreeEnergy> {
    if !(temperature > 0.0) || !(a > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need a > 0 and T > 0, got a = {a}, T = {temperature}"
        )));
    }
    let disc = &state.disc;
    let d = disc.dim();
    let per_theta: Vec<f64> = state
        .blocks
        .par_iter()
        .enumerate()
        .map(|(j, g)| {
            let k = kinetic_block(disc, mu, w, j);
            let mut s = CompensatedSum::new();
            for r in 0..d {
                for c in 0..d {
                    let p = k.read(r, c) * g.read(c, r);
                    s.add(p.re);
                }
            }
            s.value()
        })
        .collect();
    let kinetic = compensated_sum(per_theta) / disc.n_theta as f64;
    let s = entropy(state)?;
    let interaction = -a * disc.h * pair_diagonal_coeffs(state).l2_norm().powi(2);
    Ok(FreeEnergy {
        kinetic,
        entropy: s,
        interaction,
        total: kinetic - temperature * s + interaction,
    })
}

/// Normal state `Gamma_0 = diag(gamma_0, 1 - gamma_0)` (`W` real, so `conj(gamma_0) = gamma_0`) and its free energy `-T Tr ln(1 + e^{-k/T})`.
pub fn normal_state(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    temperature: f64,
) -> Result<(QuasiPeriodicState, f64)> {
    if !(temperature > 0.0 && temperature.is_finite()) {
        return Err(Error::InvalidParameter(format!("temperature must be positive, got {temperature}")));
    }
    let beta = 1.0 / temperature;
    let d = disc.dim();
    let parts: Vec<Result<(Block, f64)>> = (0..disc.n_theta)
        .into_par_iter()
        .map(|j| {
            let s = eigh(&kinetic_block(disc, mu, w, j), j)?;
            let occ: Vec<f64> = s.values.iter().map(|&l| rho_unchecked(beta * l)).collect();
            let gamma = reconstruct(&s.vectors, &occ);
            let block = Mat::from_fn(2 * d, 2 * d, |r, c| match (r < d, c < d) {
                (true, true) => gamma.read(r, c),
                (false, false) => {
                    let id = if r == c { 1.0 } else { 0.0 };
                    c64::new(id, 0.0) - gamma.read(r - d, c - d)
                }
                _ => c64::new(0.0, 0.0),
            });
            let free = compensated_sum(s.values.iter().map(|&l| temperature * f_log_unchecked(beta * l)));
            Ok((block, free))
        })
        .collect();
    let mut blocks = Vec::with_capacity(parts.len());
    let mut free = CompensatedSum::new();
    for p in parts {
        let (b, f) = p?;
        blocks.push(b);
        free.add(f);
    }
    Ok((QuasiPeriodicState { disc: *disc, blocks }, free.value() / disc.n_theta as f64))
}

/// `ln 2cosh(a) - ln 2cosh(b)` without overflow.
#[inline]
fn lncosh_difference(a: f64, b: f64) -> f64 {
    let (a, b) = (a.abs(), b.abs());
    (a - b) + (-2.0 * a).exp().ln_1p() - (-2.0 * b).exp().ln_1p()
}

/// `sum_i [ln(1 + e^{-beta x_i}) - ln(1 + e^{-beta y_i})]` for ascending spectra of equal trace.
///
/// `ln(1 + e^{-z}) = -z/2 + ln 2cosh(z/2)`; the linear parts are supplied by the caller as a trace difference.
pub(crate) fn log_partition_pairs(x: &[f64], y: &[f64], beta: f64, trace_difference: f64) -> f64 {
    let mut s = CompensatedSum::new();
    for (a, b) in x.iter().zip(y) {
        s.add(lncosh_difference(0.5 * beta * a, 0.5 * beta * b));
    }
    s.add(-0.5 * beta * trace_difference);
    s.value()
}

fn diagonal_trace(b: &Block) -> f64 {
    compensated_sum((0..b.nrows()).map(|i| b.read(i, i).re))
}

/// `Tr [ln(1 + e^{-beta H_delta}) - ln(1 + e^{-beta H_0})]` per unit volume.
pub fn log_partition_difference(blocks_delta: &BdGBlocks, blocks_zero: &BdGBlocks, beta: f64) -> Result<f64> {
    blocks_delta.disc().ensure_same(blocks_zero.disc())?;
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidParameter(format!("beta must be positive, got {beta}")));
    }
    let per_theta: Vec<Result<f64>> = blocks_delta
        .blocks()
        .par_iter()
        .zip(blocks_zero.blocks().par_iter())
        .enumerate()
        .map(|(j, (hd, h0))| {
            let x = eigvalsh(hd, j)?;
            let y = eigvalsh(h0, j)?;
            Ok(log_partition_pairs(&x, &y, beta, diagonal_trace(hd) - diagonal_trace(h0)))
        })
        .collect();
    let mut total = CompensatedSum::new();
    for p in per_theta {
        total.add(p?);
    }
    Ok(total.value() / blocks_delta.disc().n_theta as f64)
}

/// `Tr [eta^* (1 - h^2 d^2) eta]` per unit volume for `(2N+1)`-square blocks.
pub fn h1_operator_norm(eta: &[Block], disc: &BlochDiscretization) -> Result<f64> {
    let d = disc.dim();
    if eta.len() != disc.n_theta || eta.iter().any(|b| b.nrows() != d || b.ncols() != d) {
        return Err(Error::Mismatch(format!("expected {} blocks of size {d}", disc.n_theta)));
    }
    let mut total = CompensatedSum::new();
    for (j, b) in eta.iter().enumerate() {
        for n in 0..d {
            let p = disc.h * disc.momentum(n, j);
            let weight = 1.0 + p * p;
            for m in 0..d {
                total.add(weight * from_c64(b.read(n, m)).norm_sqr());
            }
        }
    }
    Ok(total.value() / disc.n_theta as f64)
}
