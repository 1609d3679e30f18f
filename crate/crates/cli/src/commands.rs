//! Subcommand bodies. Each resolves its inputs, runs the solver, and writes reports.

use glbcs::asymp::{
    leading_pair_kernel_with, verify_main_theorem_with, verify_trace_expansion_with, AsympSettings, ScalingReport,
    ScalingRow, DEFAULT_H_LIST,
};
use glbcs::bdg::{
    default_coverage, klein_battery, self_consistent_gap_at, trial_upper_bound_at, BlochDiscretization, ScfSettings,
};
use glbcs::glcoef::{b1_alternative, compute_coefficients, GLCoefficients};
use glbcs::glfield::{gl_minimize_multistart, ExternalPotential, PeriodicField};
use glbcs::tinv::{
    alpha0_decay_rate, alpha0_profile, critical_temperature, gap_delta0_with, GapSolution, ModelParams,
    SolverSettings,
};
use num_complex::Complex64;
use serde::Serialize;

use crate::config::{ConfigError, RunConfig};
use crate::report::{write_reports, Report, SCHEMA_VERSION};

#[derive(Debug)]
pub enum Failure {
    Config(ConfigError),
    Solver(glbcs::Error),
    Io(std::io::Error),
}

impl From<ConfigError> for Failure {
    fn from(e: ConfigError) -> Self {
        Failure::Config(e)
    }
}

impl From<glbcs::Error> for Failure {
    fn from(e: glbcs::Error) -> Self {
        Failure::Solver(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

pub struct Outcome {
    pub summary: String,
    pub passed: bool,
}

type Run = Result<Outcome, Failure>;

fn finish<R: Serialize, Row: Serialize>(
    config: &RunConfig,
    command: &str,
    passed: bool,
    summary: String,
    result: &R,
    rows: &[Row],
) -> Run {
    let report = Report { schema_version: SCHEMA_VERSION, command, passed, summary: &summary, config, result };
    write_reports(&config.output.dir, &command.replace(' ', "-"), &report, rows)?;
    Ok(Outcome { summary: format!("{command}: {summary}"), passed })
}

fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    (0..n).map(|i| lo + (hi - lo) * i as f64 / (n - 1) as f64).collect()
}

/// Model at `T = T_c (1 - D h^2)` with its gap.
struct Thermal {
    params: ModelParams,
    tc: f64,
    gap: GapSolution,
}

fn thermal(config: &RunConfig) -> Result<Thermal, Failure> {
    let params = config.model()?;
    let tc = critical_temperature(params.a, params.mu)?.tc;
    let gap = gap_delta0_with(params.a, params.mu, params.temperature(tc), tc, &SolverSettings::default())?;
    Ok(Thermal { params, tc, gap })
}

/// Fixes `N` in the config so the report records the grid actually used.
fn discretization(config: &mut RunConfig, th: &Thermal) -> Result<BlochDiscretization, Failure> {
    let d = &config.discretization;
    let disc = match d.n_modes {
        Some(n) => BlochDiscretization::new(n, d.n_theta, th.params.h)?,
        None => BlochDiscretization::with_coverage(
            th.params.h,
            d.n_theta,
            d.coverage_factor * default_coverage(th.params.mu, th.gap.temperature),
        )?,
    };
    config.discretization.n_modes = Some(disc.n_modes);
    Ok(disc)
}

fn gl_starts(n_modes: usize) -> Result<Vec<PeriodicField>, Failure> {
    let mut starts = vec![PeriodicField::constant(c(1.0), n_modes)];
    if n_modes >= 1 {
        starts.push(PeriodicField::from_modes(n_modes, &[(0, c(0.8)), (1, c(0.2)), (-1, c(0.2))])?);
        starts.push(PeriodicField::from_modes(n_modes, &[(0, c(0.6)), (1, Complex64::new(0.0, 0.3))])?);
    }
    Ok(starts)
}

#[derive(Serialize)]
struct GlResult {
    e_gl: f64,
    gradient_norm: f64,
    iterations: usize,
    start_energies: Vec<f64>,
    starts_disagree: bool,
    coefficients: GLCoefficients,
    psi: PeriodicField,
}

fn minimize_gl(coefficients: &GLCoefficients, w: &ExternalPotential, modes: usize, tol: f64) -> Result<GlResult, Failure> {
    let m = gl_minimize_multistart(w, coefficients, &gl_starts(modes)?, tol)?;
    Ok(GlResult {
        e_gl: m.best.energy,
        gradient_norm: m.best.gradient_norm,
        iterations: m.best.iterations,
        start_energies: m.energies,
        starts_disagree: m.starts_disagree,
        coefficients: *coefficients,
        psi: m.best.psi,
    })
}

#[derive(Serialize)]
struct FieldSample {
    x: f64,
    re: f64,
    im: f64,
    abs: f64,
}

fn field_samples(f: &PeriodicField, points: usize) -> Result<Vec<FieldSample>, Failure> {
    Ok(f.evaluate(points)?
        .iter()
        .enumerate()
        .map(|(i, v)| FieldSample { x: i as f64 / points as f64, re: v.re, im: v.im, abs: v.norm() })
        .collect())
}

#[derive(Serialize)]
struct TcRow {
    a: f64,
    mu: f64,
    tc: f64,
    beta_c: f64,
    residual: f64,
}

pub fn tc(config: RunConfig) -> Run {
    let m = &config.model;
    let ct = critical_temperature(m.a, m.mu)?;
    let row = TcRow { a: m.a, mu: m.mu, tc: ct.tc, beta_c: ct.beta_c, residual: ct.residual };
    let summary = format!("T_c = {} (beta_c = {}), residual {:.2e}", ct.tc, ct.beta_c, ct.residual);
    finish(&config, "tc", true, summary, &row, &[&row])
}

#[derive(Serialize)]
struct GapRow {
    t_over_tc: f64,
    temperature: f64,
    delta0: f64,
    residual: f64,
}

pub fn gap(config: RunConfig) -> Run {
    let m = &config.model;
    let tc = critical_temperature(m.a, m.mu)?.tc;
    let g = &config.gap;
    let mut rows = Vec::with_capacity(g.points);
    for frac in linspace(g.t_min, g.t_max, g.points) {
        let s = gap_delta0_with(m.a, m.mu, frac * tc, tc, &SolverSettings::default())?;
        rows.push(GapRow { t_over_tc: frac, temperature: s.temperature, delta0: s.delta0, residual: s.residual });
    }
    let worst = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    let summary = format!(
        "{} temperatures in [{}, {}] T_c, T_c = {}, Delta_0({} T_c) = {}, max residual {:.2e}",
        rows.len(),
        g.t_min,
        g.t_max,
        tc,
        g.t_min,
        rows[0].delta0,
        worst
    );
    finish(&config, "gap", true, summary, &rows, &rows)
}

#[derive(Serialize)]
struct CoeffsRow {
    b1: f64,
    b2: f64,
    b3: f64,
    c: f64,
    beta_c: f64,
    mu: f64,
    d: f64,
    b1_alternative: f64,
    b1_cross_check: f64,
}

pub fn coeffs(config: RunConfig) -> Run {
    let m = &config.model;
    let k = compute_coefficients(m.a, m.mu, m.d)?;
    let alt = b1_alternative(m.a, m.mu, m.d)?;
    let check = (k.b1 - alt).abs() / k.b1.abs();
    let result = CoeffsRow {
        b1: k.b1,
        b2: k.b2,
        b3: k.b3,
        c: k.c,
        beta_c: k.beta_c,
        mu: k.mu,
        d: k.d,
        b1_alternative: alt,
        b1_cross_check: check,
    };
    let passed = check <= config.verify.b1_tolerance;
    let summary = format!(
        "b1 = {}, b2 = {}, b3 = {}, c = {}; b1 cross-check residual {:.2e} (tolerance {:.0e})",
        k.b1, k.b2, k.b3, k.c, check, config.verify.b1_tolerance
    );
    finish(&config, "coeffs", passed, summary, &result, &[&result])
}

#[derive(Serialize)]
struct Alpha0Row {
    x: f64,
    alpha0: f64,
    q: f64,
    symbol: f64,
}

#[derive(Serialize)]
struct Alpha0Result {
    temperature: f64,
    delta0: f64,
    decay_rate: f64,
    rows: Vec<Alpha0Row>,
}

pub fn alpha0(config: RunConfig) -> Run {
    let th = thermal(&config)?;
    let p = &config.alpha0;
    let grid = linspace(0.0, p.x_max, p.points);
    let momenta = linspace(0.0, p.q_max, p.points);
    let profile = alpha0_profile(&th.gap, th.params.mu, &grid, &momenta)?;
    let rows: Vec<Alpha0Row> = (0..p.points)
        .map(|i| Alpha0Row { x: grid[i], alpha0: profile.values[i], q: momenta[i], symbol: profile.symbol[i] })
        .collect();
    let result = Alpha0Result {
        temperature: th.gap.temperature,
        delta0: th.gap.delta0,
        decay_rate: alpha0_decay_rate(&th.gap, th.params.mu),
        rows,
    };
    let summary = format!(
        "T = {}, Delta_0 = {}, alpha0(0) = {}, decay rate {}",
        result.temperature, result.delta0, result.rows[0].alpha0, result.decay_rate
    );
    finish(&config, "alpha0", true, summary, &result, &result.rows)
}

pub fn gl(config: RunConfig) -> Run {
    let m = &config.model;
    let w = config.potential()?;
    let k = compute_coefficients(m.a, m.mu, m.d)?;
    let result = minimize_gl(&k, &w, config.gl.modes, config.gl.tol)?;
    let rows = field_samples(&result.psi, config.gl.samples)?;
    let lo = rows.iter().map(|r| r.abs).fold(f64::INFINITY, f64::min);
    let hi = rows.iter().map(|r| r.abs).fold(0.0, f64::max);
    let summary = format!(
        "E_GL = {:.12e}, |psi| in [{lo:.6}, {hi:.6}], gradient norm {:.2e}{}",
        result.e_gl,
        result.gradient_norm,
        if result.starts_disagree { ", starts disagree" } else { "" }
    );
    finish(&config, "gl", true, summary, &result, &rows)
}

#[derive(Serialize)]
struct TrialRow {
    h: f64,
    temperature: f64,
    delta0: f64,
    n_modes: usize,
    n_theta: usize,
    f_trial: f64,
    f_identity: f64,
    f_direct: f64,
    identity_residual: f64,
    gl_prediction: f64,
    ratio: f64,
}

#[derive(Serialize)]
struct TrialResult {
    #[serde(flatten)]
    row: TrialRow,
    tc: f64,
    e_gl: f64,
    psi: PeriodicField,
}

pub fn trial_energy(mut config: RunConfig) -> Run {
    let th = thermal(&config)?;
    let w = config.potential()?;
    let disc = discretization(&mut config, &th)?;
    let p = th.params;
    let k = compute_coefficients(p.a, p.mu, p.d)?;
    let gl = minimize_gl(&k, &w, config.gl.modes.min(disc.n_modes), config.gl.tol)?;
    let t = trial_upper_bound_at(&gl.psi, &p, &w, &disc, th.tc, &th.gap)?;
    let prediction = p.h.powi(3) * (gl.e_gl - k.b3);
    let row = TrialRow {
        h: p.h,
        temperature: t.temperature,
        delta0: t.delta0,
        n_modes: t.n_modes,
        n_theta: t.n_theta,
        f_trial: t.f_trial,
        f_identity: t.f_identity,
        f_direct: t.f_direct,
        identity_residual: t.identity_residual,
        gl_prediction: prediction,
        ratio: t.f_trial / prediction,
    };
    let summary = format!(
        "F_trial = {:.12e} at h = {} (N = {}, M = {}), h^3 (E_GL - b3) = {:.12e}, identity residual {:.2e}",
        row.f_trial, p.h, row.n_modes, row.n_theta, prediction, row.identity_residual
    );
    let result = TrialResult { row, tc: th.tc, e_gl: gl.e_gl, psi: gl.psi };
    finish(&config, "trial-energy", true, summary, &result, &[&result.row])
}

#[derive(Serialize)]
struct ScfReport {
    free_energy: f64,
    f_trial: f64,
    temperature: f64,
    delta0: f64,
    iterations: usize,
    history: Vec<f64>,
    delta: PeriodicField,
}

pub fn scf(mut config: RunConfig) -> Run {
    let th = thermal(&config)?;
    let w = config.potential()?;
    let disc = discretization(&mut config, &th)?;
    let p = th.params;
    let k = compute_coefficients(p.a, p.mu, p.d)?;
    let s = &config.scf;
    let gl = minimize_gl(&k, &w, s.gap_modes.min(disc.n_modes), config.gl.tol)?;
    let trial = trial_upper_bound_at(&gl.psi, &p, &w, &disc, th.tc, &th.gap)?;
    let settings = ScfSettings { damping: s.damping, tol: s.tol, max_iter: s.max_iter, anderson_depth: s.anderson_depth };
    let init = gl.psi.scale(c(-th.gap.delta0));
    let r = self_consistent_gap_at(&disc, &p, th.gap.temperature, &w, &init, &settings)?;
    let rows = field_samples(&r.delta, config.gl.samples.max(2 * s.gap_modes + 1))?;
    let summary = format!(
        "F_scf = {:.12e} after {} iterations, F_trial = {:.12e}, Delta_0 = {:.6e}",
        r.free_energy, r.iterations, trial.f_trial, th.gap.delta0
    );
    let result = ScfReport {
        free_energy: r.free_energy,
        f_trial: trial.f_trial,
        temperature: r.temperature,
        delta0: th.gap.delta0,
        iterations: r.iterations,
        history: r.history,
        delta: r.delta,
    };
    finish(&config, "scf", true, summary, &result, &rows)
}

fn scaling_settings(config: &RunConfig) -> Result<AsympSettings, Failure> {
    if config.discretization.n_modes.is_some() {
        return Err(ConfigError("discretization.n_modes: scaling suites choose N per h from the coverage".into()).into());
    }
    Ok(AsympSettings {
        n_theta: config.discretization.n_theta,
        coverage_factor: config.discretization.coverage_factor,
    })
}

fn test_field(config: &RunConfig) -> Result<PeriodicField, Failure> {
    let modes: Vec<(i64, Complex64)> =
        config.verify.psi.iter().map(|m| (m.k, Complex64::new(m.re, m.im))).collect();
    let n = modes.iter().map(|m| m.0.unsigned_abs() as usize).max().unwrap_or(0);
    Ok(PeriodicField::from_modes(n, &modes)?)
}

#[derive(Serialize)]
struct ScalingResult {
    beta: f64,
    min_order: f64,
    #[serde(flatten)]
    report: ScalingReport,
}

fn scaling_summary(r: &ScalingReport, min_order: f64) -> String {
    format!(
        "fitted order {:.3} (need >= {min_order}), r^2 {:.5}, {} of {} rows used",
        r.fitted_order,
        r.r_squared,
        r.rows.len() - r.excluded.len(),
        r.rows.len()
    )
}

pub enum Suite {
    Semiclassics,
    PairKernel,
}

pub fn verify_scaling(mut config: RunConfig, suite: Suite) -> Run {
    let settings = scaling_settings(&config)?;
    let m = &config.model;
    let w = config.potential()?;
    let psi = test_field(&config)?;
    let beta = critical_temperature(m.a, m.mu)?.beta_c;
    let h_list = config.verify.h_list.clone().unwrap_or_else(|| DEFAULT_H_LIST.to_vec());
    let (name, report, min_order) = match suite {
        Suite::Semiclassics => (
            "verify semiclassics",
            verify_trace_expansion_with(&psi, &w, beta, m.mu, &h_list, &settings)?,
            config.verify.min_order_semiclassics,
        ),
        Suite::PairKernel => (
            "verify pair-kernel",
            leading_pair_kernel_with(&psi, &w, beta, m.mu, &h_list, &settings)?,
            config.verify.min_order_pair_kernel,
        ),
    };
    config.verify.h_list = Some(h_list);
    let passed = report.fitted_order >= min_order;
    let summary = scaling_summary(&report, min_order);
    let rows: Vec<ScalingRow> = report.rows.clone();
    let result = ScalingResult { beta, min_order, report };
    finish(&config, name, passed, summary, &result, &rows)
}

#[derive(Serialize)]
struct MainRow {
    h: f64,
    f_trial: f64,
    gl_prediction: f64,
    remainder: f64,
    ratio: f64,
}

#[derive(Serialize)]
struct MainResult {
    e_gl: f64,
    coefficients: GLCoefficients,
    fitted_order: f64,
    r_squared: f64,
    min_order: f64,
    monotone: bool,
    negative_at_smallest_h: bool,
    starts_disagree: bool,
    identity_residual: f64,
    rows: Vec<MainRow>,
    psi: PeriodicField,
}

pub fn verify_main_theorem(mut config: RunConfig) -> Run {
    let settings = scaling_settings(&config)?;
    let m = config.model.clone();
    let w = config.potential()?;
    let h_list = config.verify.h_list.clone().unwrap_or_else(|| vec![0.2, 0.1, 0.05]);
    let r = verify_main_theorem_with(m.a, m.mu, m.d, &w, &h_list, &settings)?;
    config.verify.h_list = Some(h_list);
    let gaps: Vec<f64> = r.ratios.iter().map(|q| (q - 1.0).abs()).collect();
    let monotone = gaps.windows(2).all(|p| p[1] < p[0]);
    let last = r.report.rows.last().map_or(f64::NAN, |row| row.measured);
    let min_order = config.verify.min_order_main_theorem;
    let passed = monotone && r.report.fitted_order >= min_order && last < 0.0;
    let rows: Vec<MainRow> = r
        .report
        .rows
        .iter()
        .zip(&r.ratios)
        .map(|(row, &ratio)| MainRow {
            h: row.h,
            f_trial: row.measured,
            gl_prediction: row.predicted,
            remainder: row.remainder,
            ratio,
        })
        .collect();
    let summary = format!(
        "E_GL = {:.10e}, ratios {}, remainder order {:.3} (need >= {min_order}), F_trial(h = {}) = {last:.6e}",
        r.e_gl,
        r.ratios.iter().map(|q| format!("{q:.6}")).collect::<Vec<_>>().join(" "),
        r.report.fitted_order,
        rows.last().map_or(f64::NAN, |row| row.h),
    );
    let result = MainResult {
        e_gl: r.e_gl,
        coefficients: r.coefficients,
        fitted_order: r.report.fitted_order,
        r_squared: r.report.r_squared,
        min_order,
        monotone,
        negative_at_smallest_h: last < 0.0,
        starts_disagree: r.starts_disagree,
        identity_residual: r.identity_residual,
        rows,
        psi: r.psi,
    };
    finish(&config, "verify main-theorem", passed, summary, &result, &result.rows)
}

#[derive(Serialize)]
struct KleinRow {
    sample: usize,
    size: usize,
    slack: f64,
}

pub fn verify_klein(config: RunConfig) -> Run {
    let v = &config.verify;
    let battery = klein_battery(v.samples, v.seed, v.grid)?;
    let rows: Vec<KleinRow> = battery
        .slacks
        .iter()
        .zip(&battery.sizes)
        .enumerate()
        .map(|(sample, (&slack, &size))| KleinRow { sample, size, slack })
        .collect();
    let passed = battery.min_slack >= -v.klein_tolerance && battery.scalar_min_slack >= -v.klein_tolerance;
    let summary = format!(
        "{} samples (seed {}), min slack {:.6e}, scalar min slack {:.3e} on a {}x{} grid",
        battery.samples, battery.seed, battery.min_slack, battery.scalar_min_slack, battery.grid, battery.grid
    );
    finish(&config, "verify klein", passed, summary, &battery, &rows)
}
