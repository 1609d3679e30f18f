//! Period-one complex fields in Fourier form, the GL functional and its minimizer.

use std::f64::consts::PI;
use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::glcoef::GLCoefficients;
use crate::numerics::compensated_sum;

/// Default Fourier cutoff for GL minimization.
pub const DEFAULT_N_MODES: usize = 32;

/// Truncated Fourier series `sum_{|k| <= n_max} c_k e^{2 pi i k x}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PeriodicField {
    n_max: usize,
    /// `coeffs[k + n_max]` is the coefficient of `e^{2 pi i k x}`.
    coeffs: Vec<Complex64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Norms {
    pub l2: f64,
    pub h1: f64,
    pub h2: f64,
    pub l4: f64,
    /// `||psi'||_2`
    pub derivative: f64,
}

impl PeriodicField {
    pub fn zeros(n_max: usize) -> Self {
        Self { n_max, coeffs: vec![Complex64::new(0.0, 0.0); 2 * n_max + 1] }
    }

    pub fn constant(value: Complex64, n_max: usize) -> Self {
        let mut f = Self::zeros(n_max);
        f.coeffs[n_max] = value;
        f
    }

    pub fn from_coeffs(n_max: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if coeffs.len() != 2 * n_max + 1 {
            return Err(Error::InvalidParameter(format!(
                "expected {} coefficients for cutoff {n_max}, got {}",
                2 * n_max + 1,
                coeffs.len()
            )));
        }
        if let Some(c) = coeffs.iter().find(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonFinite { name: "coefficient", value: if c.re.is_finite() { c.im } else { c.re } });
        }
        Ok(Self { n_max, coeffs })
    }

    /// Field with the listed `(k, c_k)` modes and cutoff `n_max`.
    pub fn from_modes(n_max: usize, modes: &[(i64, Complex64)]) -> Result<Self> {
        let mut f = Self::zeros(n_max);
        for &(k, c) in modes {
            if k.unsigned_abs() as usize > n_max {
                return Err(Error::CutoffViolation { field: k.unsigned_abs() as usize, modes: n_max });
            }
            f.coeffs[(k + n_max as i64) as usize] += c;
        }
        Self::from_coeffs(n_max, f.coeffs)
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Coefficient of `e^{2 pi i k x}`; zero beyond the cutoff.
    #[inline]
    pub fn coeff(&self, k: i64) -> Complex64 {
        if k.unsigned_abs() as usize > self.n_max {
            Complex64::new(0.0, 0.0)
        } else {
            self.coeffs[(k + self.n_max as i64) as usize]
        }
    }

    /// Largest `|k|` with a nonzero coefficient.
    pub fn effective_cutoff(&self) -> usize {
        (0..=self.n_max)
            .rev()
            .find(|&k| self.coeff(k as i64).norm() != 0.0 || self.coeff(-(k as i64)).norm() != 0.0)
            .unwrap_or(0)
    }

    /// Same field with cutoff `n_max`, truncating or zero-padding.
    pub fn with_cutoff(&self, n_max: usize) -> Self {
        let mut f = Self::zeros(n_max);
        let n = n_max.min(self.n_max) as i64;
        for k in -n..=n {
            f.coeffs[(k + n_max as i64) as usize] = self.coeff(k);
        }
        f
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { n_max: self.n_max, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    /// `self + s * other`, with the larger cutoff.
    pub fn add_scaled(&self, s: f64, other: &Self) -> Self {
        let n = self.n_max.max(other.n_max);
        let mut out = self.with_cutoff(n);
        for k in -(other.n_max as i64)..=other.n_max as i64 {
            out.coeffs[(k + n as i64) as usize] += other.coeff(k) * s;
        }
        out
    }

    /// `Re <self, other>_{L^2}`.
    pub fn real_inner(&self, other: &Self) -> f64 {
        let n = self.n_max.min(other.n_max) as i64;
        compensated_sum((-n..=n).map(|k| {
            let (a, b) = (self.coeff(k), other.coeff(k));
            a.re * b.re + a.im * b.im
        }))
    }

    pub fn l2_norm(&self) -> f64 {
        compensated_sum(self.coeffs.iter().map(|c| c.norm_sqr())).sqrt()
    }

    /// Samples on `points` uniform nodes `x_j = j / points`.
    pub fn evaluate(&self, points: usize) -> Result<Vec<Complex64>> {
        let required = 2 * self.n_max + 1;
        if points < required {
            return Err(Error::Undersampled { points, n_max: self.n_max, required });
        }
        Ok(self.sample(points))
    }

    fn sample(&self, points: usize) -> Vec<Complex64> {
        let n = self.n_max as i64;
        let roots = unit_roots(points);
        (0..points)
            .map(|j| {
                let mut s = Complex64::new(0.0, 0.0);
                for k in -n..=n {
                    let idx = ((k * j as i64).rem_euclid(points as i64)) as usize;
                    s += self.coeff(k) * roots[idx];
                }
                s
            })
            .collect()
    }

    /// Inverse of [`evaluate`](Self::evaluate): coefficients up to `n_max` from uniform samples.
    pub fn analyze(samples: &[Complex64], n_max: usize) -> Result<Self> {
        let points = samples.len();
        let required = 2 * n_max + 1;
        if points < required {
            return Err(Error::Undersampled { points, n_max, required });
        }
        Ok(project(samples, n_max))
    }

    pub fn norms(&self) -> Norms {
        let mut l2 = 0.0;
        let mut d1 = 0.0;
        let mut d2 = 0.0;
        for k in -(self.n_max as i64)..=self.n_max as i64 {
            let p2 = (2.0 * PI * k as f64).powi(2);
            let c = self.coeff(k).norm_sqr();
            l2 += c;
            d1 += p2 * c;
            d2 += p2 * p2 * c;
        }
        let samples = self.sample(4 * self.n_max + 1);
        let l4 = (compensated_sum(samples.iter().map(|s| s.norm_sqr().powi(2))) / samples.len() as f64)
            .powf(0.25);
        Norms {
            l2: l2.sqrt(),
            h1: (l2 + d1).sqrt(),
            h2: (l2 + d1 + d2).sqrt(),
            l4,
            derivative: d1.sqrt(),
        }
    }

    /// Plain-text table with one `index re im` line per coefficient.
    pub fn to_table(&self) -> String {
        let mut out = String::from("# index re im\n");
        for k in -(self.n_max as i64)..=self.n_max as i64 {
            let c = self.coeff(k);
            writeln!(out, "{k} {:e} {:e}", c.re, c.im).expect("writing to a String");
        }
        out
    }

    pub fn from_table(text: &str) -> Result<Self> {
        let mut modes = Vec::new();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = || Error::InvalidParameter(format!("line {}: expected `index re im`", lineno + 1));
            let mut it = line.split_whitespace();
            let k: i64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let re: f64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            let im: f64 = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
            if it.next().is_some() {
                return Err(bad());
            }
            modes.push((k, Complex64::new(re, im)));
        }
        let n_max = modes.iter().map(|(k, _)| k.unsigned_abs() as usize).max().unwrap_or(0);
        Self::from_modes(n_max, &modes)
    }
}

fn unit_roots(points: usize) -> Vec<Complex64> {
    (0..points).map(|j| Complex64::from_polar(1.0, 2.0 * PI * j as f64 / points as f64)).collect()
}

// Discrete projection onto |k| <= n_max; exact when the samples come from a
// trigonometric polynomial whose aliases miss that band.
fn project(samples: &[Complex64], n_max: usize) -> PeriodicField {
    let points = samples.len();
    let roots = unit_roots(points);
    let n = n_max as i64;
    let coeffs = (-n..=n)
        .map(|k| {
            let mut s = Complex64::new(0.0, 0.0);
            for (j, v) in samples.iter().enumerate() {
                let idx = ((-k * j as i64).rem_euclid(points as i64)) as usize;
                s += v * roots[idx];
            }
            s / points as f64
        })
        .collect();
    PeriodicField { n_max, coeffs }
}

/// Real, mean-zero, bounded external potential.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExternalPotential {
    field: PeriodicField,
}

impl ExternalPotential {
    pub fn new(field: PeriodicField) -> Result<Self> {
        let scale = field.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max).max(1.0);
        if field.coeff(0).norm() > 1e-14 * scale {
            return Err(Error::InvalidParameter(format!(
                "external potential must have zero mean, got mean {}",
                field.coeff(0)
            )));
        }
        for k in 1..=field.n_max as i64 {
            if (field.coeff(k) - field.coeff(-k).conj()).norm() > 1e-14 * scale {
                return Err(Error::InvalidParameter(format!(
                    "external potential must be real: mode {k} is not conjugate-symmetric"
                )));
            }
        }
        let mut field = field;
        field.coeffs[field.n_max] = Complex64::new(0.0, 0.0);
        Ok(Self { field })
    }

    pub fn zero() -> Self {
        Self { field: PeriodicField::zeros(0) }
    }

    /// `W(x) = sum_k cos_amp[k-1] cos(2 pi k x) + sin_amp[k-1] sin(2 pi k x)`.
    pub fn from_trig(cos_amp: &[f64], sin_amp: &[f64]) -> Result<Self> {
        let n = cos_amp.len().max(sin_amp.len());
        let mut f = PeriodicField::zeros(n);
        for k in 1..=n {
            let a = cos_amp.get(k - 1).copied().unwrap_or(0.0);
            let b = sin_amp.get(k - 1).copied().unwrap_or(0.0);
            if !(a.is_finite() && b.is_finite()) {
                return Err(Error::NonFinite { name: "potential amplitude", value: if a.is_finite() { b } else { a } });
            }
            f.coeffs[n + k] = Complex64::new(0.5 * a, -0.5 * b);
            f.coeffs[n - k] = Complex64::new(0.5 * a, 0.5 * b);
        }
        Self::new(f)
    }

    pub fn field(&self) -> &PeriodicField {
        &self.field
    }

    pub fn n_max(&self) -> usize {
        self.field.effective_cutoff()
    }

    pub fn is_zero(&self) -> bool {
        self.field.coeffs.iter().all(|c| c.norm() == 0.0)
    }

    #[inline]
    pub fn coeff(&self, k: i64) -> Complex64 {
        self.field.coeff(k)
    }

    /// Fourier coefficients of `W psi` up to the cutoff of `psi`.
    pub fn apply(&self, psi: &PeriodicField) -> PeriodicField {
        let n = psi.n_max as i64;
        let m = self.field.n_max as i64;
        let mut out = PeriodicField::zeros(psi.n_max);
        for k in -n..=n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in -m..=m {
                s += self.coeff(j) * psi.coeff(k - j);
            }
            out.coeffs[(k + n) as usize] = s;
        }
        out
    }

    /// `<psi | W | psi>` including modes of `W psi` beyond the cutoff of `psi`.
    pub fn expectation(&self, psi: &PeriodicField) -> f64 {
        let n = psi.n_max as i64;
        let m = self.field.n_max as i64;
        let mut total = Vec::with_capacity((2 * n + 1) as usize);
        for k in -n..=n {
            let mut s = Complex64::new(0.0, 0.0);
            for j in -m..=m {
                s += self.coeff(j) * psi.coeff(k - j);
            }
            total.push((psi.coeff(k).conj() * s).re);
        }
        compensated_sum(total)
    }
}

fn quadratic_part(psi: &PeriodicField, w: &ExternalPotential, coeffs: &GLCoefficients) -> f64 {
    coeffs.b1 * psi.norms().derivative.powi(2) + coeffs.b2 * w.expectation(psi)
}

/// `E(psi) = b1 ||psi'||^2 + b2 <psi|W|psi> + b3 int (1 - |psi|^2)^2`.
pub fn gl_energy(psi: &PeriodicField, w: &ExternalPotential, coeffs: &GLCoefficients) -> f64 {
    let samples = psi.sample(4 * psi.n_max + 1);
    let quartic =
        compensated_sum(samples.iter().map(|s| (1.0 - s.norm_sqr()).powi(2))) / samples.len() as f64;
    quadratic_part(psi, w, coeffs) + coeffs.b3 * quartic
}

/// `L^2` gradient `2(-b1 psi'' + b2 W psi - 2 b3 (1 - |psi|^2) psi)`, projected on the cutoff of `psi`.
///
/// The directional derivative of [`gl_energy`] along `phi` is `Re <gradient, phi>`.
pub fn gl_gradient(psi: &PeriodicField, w: &ExternalPotential, coeffs: &GLCoefficients) -> PeriodicField {
    let n = psi.n_max;
    // cubic term has modes up to 3n; 4n+1 points keep |k| <= n alias-free
    let samples = psi.sample(4 * n + 1);
    let cubic: Vec<Complex64> = samples.iter().map(|s| s * (1.0 - s.norm_sqr())).collect();
    let cubic = project(&cubic, n);
    let wpsi = w.apply(psi);
    let mut out = PeriodicField::zeros(n);
    for k in -(n as i64)..=n as i64 {
        let p2 = (2.0 * PI * k as f64).powi(2);
        let i = (k + n as i64) as usize;
        out.coeffs[i] = 2.0
            * (coeffs.b1 * p2 * psi.coeffs[i] + coeffs.b2 * wpsi.coeffs[i]
                - 2.0 * coeffs.b3 * cubic.coeffs[i]);
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GlSettings {
    pub max_iter: usize,
    /// Conjugate directions are reset to steepest descent this often.
    pub restart: usize,
}

impl Default for GlSettings {
    fn default() -> Self {
        Self { max_iter: 20_000, restart: 50 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GlMinimum {
    pub psi: PeriodicField,
    pub energy: f64,
    pub gradient_norm: f64,
    pub iterations: usize,
}

pub fn gl_minimize(
    w: &ExternalPotential,
    coeffs: &GLCoefficients,
    init: &PeriodicField,
    tol: f64,
) -> Result<GlMinimum> {
    gl_minimize_with(w, coeffs, init, tol, &GlSettings::default())
}

/// Polynomial coefficients of `t -> E(psi + t d)`, lowest degree first.
fn energy_along(psi: &PeriodicField, d: &PeriodicField, w: &ExternalPotential, coeffs: &GLCoefficients) -> [f64; 5] {
    let points = 4 * psi.n_max.max(d.n_max) + 1;
    let ps = psi.sample(points);
    let ds = d.sample(points);
    let (mut c0, mut c1, mut c2, mut c3, mut c4) = (0.0, 0.0, 0.0, 0.0, 0.0);
    for (p, q) in ps.iter().zip(&ds) {
        let u = 1.0 - p.norm_sqr();
        let v = 2.0 * (p.conj() * q).re;
        let s = q.norm_sqr();
        c0 += u * u;
        c1 -= 2.0 * u * v;
        c2 += v * v - 2.0 * u * s;
        c3 += 2.0 * v * s;
        c4 += s * s;
    }
    let inv = coeffs.b3 / points as f64;
    // quadratic form Q(psi + t d) = Q(psi) + 2t B(psi, d) + t^2 Q(d)
    let q_psi = quadratic_part(psi, w, coeffs);
    let q_d = quadratic_part(d, w, coeffs);
    let n = psi.n_max.max(d.n_max) as i64;
    let stiffness = compensated_sum((-n..=n).map(|k| {
        let (a, b) = (psi.coeff(k), d.coeff(k));
        (2.0 * PI * k as f64).powi(2) * (a.re * b.re + a.im * b.im)
    }));
    let potential = w.apply(&psi.with_cutoff(n as usize)).real_inner(d);
    let cross = 2.0 * (coeffs.b1 * stiffness + coeffs.b2 * potential);
    [q_psi + inv * c0, cross + inv * c1, q_d + inv * c2, inv * c3, inv * c4]
}

fn poly(c: &[f64; 5], t: f64) -> f64 {
    (((c[4] * t + c[3]) * t + c[2]) * t + c[1]) * t + c[0]
}

/// Positive minimizer of the quartic `c` (with `c[4] >= 0`), if one exists.
fn quartic_step(c: &[f64; 5]) -> Option<f64> {
    // stationary points: roots of 4 c4 t^3 + 3 c3 t^2 + 2 c2 t + c1
    let d = |t: f64| ((4.0 * c[4] * t + 3.0 * c[3]) * t + 2.0 * c[2]) * t + c[1];
    if d(0.0) >= 0.0 {
        return None;
    }
    let mut hi = 1e-8;
    while d(hi) < 0.0 {
        hi *= 2.0;
        if hi > 1e12 {
            return None;
        }
    }
    // first stationary point past 0 is a local minimum along the ray
    let mut lo = 0.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if d(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= 1e-15 * hi {
            break;
        }
    }
    let first = 0.5 * (lo + hi);
    // a later, lower minimum can exist when the cubic has three positive roots
    let mut best = first;
    let mut t = first * 2.0;
    while t < first * 1e6 && t < 1e12 {
        if poly(c, t) < poly(c, best) {
            best = t;
        }
        t *= 1.5;
    }
    Some(best)
}

/// Diagonal preconditioner `1 / (2 b1 (2 pi k)^2 + shift)` applied mode by mode.
fn precondition(g: &PeriodicField, coeffs: &GLCoefficients, shift: f64) -> PeriodicField {
    let n = g.n_max as i64;
    let coeffs_out = (-n..=n)
        .map(|k| g.coeff(k) / (2.0 * coeffs.b1 * (2.0 * PI * k as f64).powi(2) + shift))
        .collect();
    PeriodicField { n_max: g.n_max, coeffs: coeffs_out }
}

/// Preconditioned nonlinear conjugate gradients (Polak-Ribiere+) with backtracking along
/// exact quartic steps.
///
/// The energy along a line is an exact quartic, so sufficient decrease is tested on its
/// coefficients rather than on differences of nearly equal energies.
pub fn gl_minimize_with(
    w: &ExternalPotential,
    coeffs: &GLCoefficients,
    init: &PeriodicField,
    tol: f64,
    settings: &GlSettings,
) -> Result<GlMinimum> {
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter(format!("tolerance must be positive, got {tol}")));
    }
    let w_max = (0..=w.n_max() as i64).map(|k| 2.0 * w.coeff(k).norm()).sum::<f64>();
    let shift = 4.0 * coeffs.b3.abs() + 2.0 * coeffs.b2.abs() * w_max + 2.0 * coeffs.b1.abs();
    let mut psi = init.clone();
    let mut grad = gl_gradient(&psi, w, coeffs);
    let mut gnorm = grad.l2_norm();
    let mut pgrad = precondition(&grad, coeffs, shift);
    let mut dir = pgrad.scale(Complex64::new(-1.0, 0.0));
    let mut since_restart = 0;
    for iter in 0..settings.max_iter {
        if gnorm <= tol {
            let energy = gl_energy(&psi, w, coeffs);
            return Ok(GlMinimum { psi, energy, gradient_norm: gnorm, iterations: iter });
        }
        if grad.real_inner(&dir) >= 0.0 || since_restart >= settings.restart {
            dir = pgrad.scale(Complex64::new(-1.0, 0.0));
            since_restart = 0;
        }
        let c = energy_along(&psi, &dir, w, coeffs);
        // c[1] is the directional derivative, evaluated exactly
        let slope = c[1];
        if slope >= 0.0 {
            if since_restart == 0 {
                break;
            }
            since_restart = settings.restart;
            continue;
        }
        let change = |t: f64| t * (c[1] + t * (c[2] + t * (c[3] + t * c[4])));
        let mut step = quartic_step(&c).unwrap_or(1.0);
        let mut accepted = false;
        for _ in 0..60 {
            if change(step) <= 1e-4 * step * slope {
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if !accepted {
            if since_restart == 0 {
                break;
            }
            since_restart = settings.restart;
            continue;
        }
        let next = psi.add_scaled(step, &dir);
        let g_next = gl_gradient(&next, w, coeffs);
        let pg_next = precondition(&g_next, coeffs, shift);
        let diff = g_next.add_scaled(-1.0, &grad);
        let beta = (pg_next.real_inner(&diff) / grad.real_inner(&pgrad)).max(0.0);
        dir = pg_next.scale(Complex64::new(-1.0, 0.0)).add_scaled(beta, &dir);
        psi = next;
        grad = g_next;
        pgrad = pg_next;
        gnorm = grad.l2_norm();
        since_restart += 1;
    }
    let energy = gl_energy(&psi, w, coeffs);
    if gnorm <= tol {
        return Ok(GlMinimum { psi, energy, gradient_norm: gnorm, iterations: settings.max_iter });
    }
    Err(Error::GlNotConverged {
        iterations: settings.max_iter,
        gradient_norm: gnorm,
        energy,
        best: Box::new(psi),
    })
}

/// Minima reached from several initial fields.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MultiStart {
    pub best: GlMinimum,
    pub energies: Vec<f64>,
    /// Set when two starts end at energies further apart than the tolerance.
    pub starts_disagree: bool,
}

pub fn gl_minimize_multistart(
    w: &ExternalPotential,
    coeffs: &GLCoefficients,
    inits: &[PeriodicField],
    tol: f64,
) -> Result<MultiStart> {
    let mut best: Option<GlMinimum> = None;
    let mut energies = Vec::with_capacity(inits.len());
    for init in inits {
        let m = gl_minimize(w, coeffs, init, tol)?;
        energies.push(m.energy);
        if best.as_ref().map_or(true, |b| m.energy < b.energy) {
            best = Some(m);
        }
    }
    let best = best.ok_or_else(|| Error::InvalidParameter("no initial fields given".into()))?;
    let lo = energies.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = energies.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(MultiStart { best, energies, starts_disagree: hi - lo > tol })
}
