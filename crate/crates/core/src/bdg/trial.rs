use faer::complex_native::c64;
use faer::Mat;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    assemble_h_delta, bcs_free_energy, default_coverage, eigh, fermi_state, normal_state,
    from_c64, kinetic_block, tail_correction, Block, BlochDiscretization, Spectrum,
};
use crate::error::{Error, Result};
use crate::glfield::{ExternalPotential, PeriodicField};
use crate::numerics::CompensatedSum;
use crate::specfun::{f_log_unchecked, rho_unchecked};
use crate::tinv::{critical_temperature, gap_delta0_with, GapSolution, ModelParams, SolverSettings};

/// Spectral data of `H_delta` needed by the energy identity.
pub(crate) struct PairedSpectrum {
    /// `Tr [ln(1 + e^{-beta H_delta}) - ln(1 + e^{-beta H_0})]` inside the window.
    pub log_partition: f64,
    /// `[rho(beta H_delta)]_12` per quasimomentum.
    pub pairs: Vec<Block>,
}

/// Diagonalizes `H_delta` once and returns the log-partition difference and the pair blocks.
pub(crate) fn paired_spectrum(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    beta: f64,
    delta: &PeriodicField,
) -> Result<PairedSpectrum> {
    let blocks = assemble_h_delta(disc, mu, w, delta)?;
    let d = disc.dim();
    let unpaired = delta.l2_norm() == 0.0;
    let parts: Vec<Result<(f64, Block)>> = blocks
        .blocks()
        .par_iter()
        .enumerate()
        .map(|(j, h)| {
            let s = eigh(h, j)?;
            // with no pairing the two spectra coincide exactly
            let lp = if unpaired { 0.0 } else { shifted_log_partition(h, &s, &eigh(&kinetic_block(disc, mu, w, j), j)?, beta) };
            let top = Mat::from_fn(d, 2 * d, |r, c| {
                s.vectors.read(r, c) * c64::new(rho_unchecked(beta * s.values[c]), 0.0)
            });
            let bottom = s.vectors.as_ref().subrows(d, d);
            Ok((lp, &top * bottom.adjoint()))
        })
        .collect();
    let mut total = CompensatedSum::new();
    let mut pairs = Vec::with_capacity(parts.len());
    for p in parts {
        let (lp, pair) = p?;
        total.add(lp);
        pairs.push(pair);
    }
    Ok(PairedSpectrum { log_partition: total.value() / disc.n_theta as f64, pairs })
}

/// `sum_i [ln(1 + e^{-beta lambda_i}) - ln(1 + e^{-beta mu_i})]` for `H_delta = s` against `H_0 = diag(k, -k)`.
///
/// Differencing the two spectra loses `eps |lambda|` per level, which summed over the
/// window swamps the pairing energy. Where the sorted eigenvectors overlap, the shift
/// comes from `u^* (H_delta - H_0) v = (lambda - mu) u^* v` instead, which has no cancellation.
fn shifted_log_partition(h: &Block, s: &Spectrum, k: &Spectrum, beta: f64) -> f64 {
    let d = k.values.len();
    let mut levels: Vec<(f64, bool, usize)> = (0..d)
        .map(|c| (k.values[c], true, c))
        .chain((0..d).map(|c| (-k.values[c], false, c)))
        .collect();
    levels.sort_by(|a, b| a.0.total_cmp(&b.0));
    let delta = h.as_ref().submatrix(0, d, d, d);
    let v = k.vectors.as_ref();
    // H_delta - H_0 maps (x, 0) to (0, delta^* x) and (0, x) to (delta x, 0)
    let on_particle = delta.adjoint() * v;
    let on_hole = delta * v;
    let mut total = CompensatedSum::new();
    for (i, &(mu, particle, c)) in levels.iter().enumerate() {
        let (same, other) = if particle { (0, d) } else { (d, 0) };
        let image = if particle { &on_particle } else { &on_hole };
        let mut overlap = c64::new(0.0, 0.0);
        let mut coupling = c64::new(0.0, 0.0);
        for r in 0..d {
            overlap += s.vectors.read(same + r, i).conj() * v.read(r, c);
            coupling += s.vectors.read(other + r, i).conj() * image.read(r, c);
        }
        let lambda = s.values[i];
        let overlap = from_c64(overlap);
        let shift = if overlap.norm_sqr() >= 0.5 {
            (from_c64(coupling) / overlap).re
        } else {
            lambda - mu
        };
        let x = beta * shift;
        total.add(if x.abs() <= 1.0 {
            (rho_unchecked(beta * mu) * (-x).exp_m1()).ln_1p()
        } else {
            f_log_unchecked(beta * mu) - f_log_unchecked(beta * lambda)
        });
    }
    total.value()
}

/// Log-partition difference inside the window.
pub(crate) fn windowed_log_partition(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    beta: f64,
    delta: &PeriodicField,
) -> Result<f64> {
    if delta.l2_norm() == 0.0 {
        assemble_h_delta(disc, mu, w, delta)?;
        return Ok(0.0);
    }
    let blocks = assemble_h_delta(disc, mu, w, delta)?;
    let parts: Vec<Result<f64>> = blocks
        .blocks()
        .par_iter()
        .enumerate()
        .map(|(j, h)| Ok(shifted_log_partition(h, &eigh(h, j)?, &eigh(&kinetic_block(disc, mu, w, j), j)?, beta)))
        .collect();
    let mut total = CompensatedSum::new();
    for p in parts {
        total.add(p?);
    }
    Ok(total.value() / disc.n_theta as f64)
}

/// Fourier coefficients (cutoff `2N`) of the diagonal `alpha(x, x)` of pair blocks.
pub(crate) fn pair_coefficients(disc: &BlochDiscretization, pairs: &[Block]) -> PeriodicField {
    let d = disc.dim();
    let span = 2 * disc.n_modes;
    let mut re = vec![CompensatedSum::new(); 2 * span + 1];
    let mut im = vec![CompensatedSum::new(); 2 * span + 1];
    for b in pairs {
        for n in 0..d {
            for m in 0..d {
                let v = b.read(n, m);
                re[n + span - m].add(v.re);
                im[n + span - m].add(v.im);
            }
        }
    }
    let scale = 1.0 / pairs.len() as f64;
    let coeffs = re
        .iter()
        .zip(&im)
        .map(|(r, i)| Complex64::new(r.value() * scale, i.value() * scale))
        .collect();
    PeriodicField::from_coeffs(span, coeffs).expect("coefficient count matches cutoff")
}

/// Free energy of the Gibbs state of `H_delta` relative to the normal state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GapEnergy {
    /// Including the out-of-window correction.
    pub corrected: f64,
    /// Window only; this is the value the energy identity reproduces exactly.
    pub windowed: f64,
    pub log_partition: f64,
    pub log_partition_tail: f64,
    /// `a h int |delta/(2ah) + alpha(x, x)|^2` with the corrected `alpha`.
    pub mismatch: f64,
    /// Corrected `alpha(x, x)`, cutoff `2N`.
    pub alpha: PeriodicField,
}

/// `-(T/2) Tr [ln(1+e^{-beta H_delta}) - ln(1+e^{-beta H_0})] + ||delta||^2/(4ha) - ha ||delta/(2ha) + alpha||^2`.
pub fn gap_free_energy(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    a: f64,
    temperature: f64,
    delta: &PeriodicField,
) -> Result<GapEnergy> {
    gap_energy_parts(disc, mu, w, a, temperature, delta).map(|(e, _)| e)
}

pub(crate) fn gap_energy_parts(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    a: f64,
    temperature: f64,
    delta: &PeriodicField,
) -> Result<(GapEnergy, PairedSpectrum)> {
    if !(a > 0.0 && temperature > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "need a > 0 and T > 0, got a = {a}, T = {temperature}"
        )));
    }
    let beta = 1.0 / temperature;
    let h = disc.h;
    let spectrum = paired_spectrum(disc, mu, w, beta, delta)?;
    let alpha_window = pair_coefficients(disc, &spectrum.pairs);
    let tail = tail_correction(disc, mu, beta, delta);
    let alpha = alpha_window.add_scaled(1.0, &tail.alpha);
    let delta_norm2 = delta.l2_norm().powi(2);
    let misfit = |alpha: &PeriodicField| {
        let target = delta.scale(Complex64::new(1.0 / (2.0 * h * a), 0.0));
        a * h * target.add_scaled(1.0, alpha).l2_norm().powi(2)
    };
    let log_partition_tail = -tail.trace;
    let quadratic = delta_norm2 / (4.0 * h * a);
    let windowed = -0.5 * temperature * spectrum.log_partition + quadratic - misfit(&alpha_window);
    let mismatch = misfit(&alpha);
    let corrected = -0.5 * temperature * (spectrum.log_partition + log_partition_tail) + quadratic - mismatch;
    Ok((
        GapEnergy {
            corrected,
            windowed,
            log_partition: spectrum.log_partition,
            log_partition_tail,
            mismatch,
            alpha,
        },
        spectrum,
    ))
}

/// Trial-state free energy `F(Gamma_delta) - F(Gamma_0)` with `delta = -Delta_0 psi`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrialEnergy {
    /// Energy identity with the out-of-window correction.
    pub f_trial: f64,
    /// Energy identity inside the window.
    pub f_identity: f64,
    /// Difference of the two BCS free energies evaluated term by term.
    pub f_direct: f64,
    pub identity_residual: f64,
    pub tc: f64,
    pub temperature: f64,
    pub delta0: f64,
    pub n_modes: usize,
    pub n_theta: usize,
    pub coverage: f64,
}

/// Computes `T = T_c (1 - D h^2)` and `Delta_0` and evaluates the trial state.
pub fn trial_upper_bound(
    psi: &PeriodicField,
    params: &ModelParams,
    w: &ExternalPotential,
    disc: &BlochDiscretization,
) -> Result<TrialEnergy> {
    params.validate()?;
    let tc = critical_temperature(params.a, params.mu)?.tc;
    let gap = gap_delta0_with(params.a, params.mu, params.temperature(tc), tc, &SolverSettings::default())?;
    trial_upper_bound_at(psi, params, w, disc, tc, &gap)
}

/// As [`trial_upper_bound`] with the critical temperature and gap already known.
pub fn trial_upper_bound_at(
    psi: &PeriodicField,
    params: &ModelParams,
    w: &ExternalPotential,
    disc: &BlochDiscretization,
    tc: f64,
    gap: &GapSolution,
) -> Result<TrialEnergy> {
    if (disc.h - params.h).abs() > 1e-15 * params.h {
        return Err(Error::Mismatch(format!("discretization h = {} but model h = {}", disc.h, params.h)));
    }
    let temperature = gap.temperature;
    disc.check_coverage(default_coverage(params.mu, temperature))?;
    let delta = psi.scale(Complex64::new(-gap.delta0, 0.0));
    let energy = gap_free_energy(disc, params.mu, w, params.a, temperature, &delta)?;

    let blocks = assemble_h_delta(disc, params.mu, w, &delta)?;
    let state = fermi_state(&blocks, 1.0 / temperature)?;
    let paired = bcs_free_energy(&state, params.mu, w, params.a, temperature)?;
    let (normal, _) = normal_state(disc, params.mu, w, temperature)?;
    let unpaired = bcs_free_energy(&normal, params.mu, w, params.a, temperature)?;
    let f_direct = paired.total - unpaired.total;

    Ok(TrialEnergy {
        f_trial: energy.corrected,
        f_identity: energy.windowed,
        f_direct,
        identity_residual: (f_direct - energy.windowed).abs(),
        tc,
        temperature,
        delta0: gap.delta0,
        n_modes: disc.n_modes,
        n_theta: disc.n_theta,
        coverage: disc.coverage(),
    })
}
