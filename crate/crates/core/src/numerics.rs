//! Quadrature over the real line and bracketed root finding.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureSettings {
    pub rel_tol: f64,
    pub abs_tol: f64,
    /// A window whose contribution falls below `tail_cutoff * |accumulated|` ends the sweep.
    pub tail_cutoff: f64,
    pub max_panels: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        Self { rel_tol: 1e-10, abs_tol: 1e-14, tail_cutoff: 1e-16, max_panels: 10_000 }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<()> {
        let ok = self.rel_tol > 0.0
            && self.abs_tol > 0.0
            && self.tail_cutoff > 0.0
            && self.max_panels >= 16;
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("bad quadrature settings {self:?}")))
        }
    }

    pub fn with_rel_tol(mut self, rel_tol: f64) -> Self {
        self.rel_tol = rel_tol;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RootSettings {
    pub x_tol: f64,
    pub f_tol: f64,
    pub max_iter: usize,
}

impl Default for RootSettings {
    fn default() -> Self {
        Self { x_tol: 1e-14, f_tol: 1e-16, max_iter: 300 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Integral {
    pub value: f64,
    pub error: f64,
    pub panels: usize,
}

/// Neumaier-compensated running sum.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut s = CompensatedSum::new();
        for x in iter {
            s.add(x);
        }
        s
    }
}

/// Compensated sum of a sequence in iteration order.
pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().value()
}

// 7-point Gauss / 15-point Kronrod nodes and weights on [-1, 1].
const XGK: [f64; 8] = [
    0.991_455_371_120_812_639_206_854_697_526_329,
    0.949_107_912_342_758_524_526_189_684_047_851,
    0.864_864_423_359_769_072_789_712_788_640_926,
    0.741_531_185_599_394_439_863_864_773_280_788,
    0.586_087_235_467_691_130_294_144_845_693_013,
    0.405_845_151_377_397_166_906_606_412_076_961,
    0.207_784_955_007_898_467_600_689_403_773_245,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_224_963_732_008_058_970,
    0.063_092_092_629_978_553_290_700_663_189_204,
    0.104_790_010_322_250_183_839_876_322_541_518,
    0.140_653_259_715_525_918_745_189_590_510_238,
    0.169_004_726_639_267_902_826_583_426_598_550,
    0.190_350_578_064_785_409_913_256_402_421_014,
    0.204_432_940_075_298_892_414_161_999_234_649,
    0.209_482_141_084_727_828_012_999_174_891_714,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_693_270_611_432_679_082,
    0.279_705_391_489_276_667_901_467_771_423_780,
    0.381_830_050_505_118_944_950_369_775_488_975,
    0.417_959_183_673_469_387_755_102_040_816_327,
];

#[derive(Debug, Clone, Copy)]
struct Panel {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

fn eval<F: Fn(f64) -> f64>(f: &F, q: f64) -> Result<f64> {
    let v = f(q);
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::IntegrandNotFinite(q))
    }
}

fn gauss_kronrod_15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Result<Panel> {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);
    let fc = eval(f, center)?;
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut abs_sum = kronrod.abs();
    let mut fv1 = [0.0; 7];
    let mut fv2 = [0.0; 7];
    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = eval(f, center - dx)?;
        let f2 = eval(f, center + dx)?;
        fv1[j] = f1;
        fv2[j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        abs_sum += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }
    let mean = 0.5 * kronrod;
    let mut asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        asc += WGK[j] * ((fv1[j] - mean).abs() + (fv2[j] - mean).abs());
    }
    let value = kronrod * half;
    let res_abs = abs_sum * half.abs();
    let res_asc = asc * half.abs();
    let mut error = ((kronrod - gauss) * half).abs();
    if res_asc != 0.0 && error != 0.0 {
        error = res_asc * (200.0 * error / res_asc).powf(1.5).min(1.0);
    }
    if res_abs > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        error = error.max(50.0 * f64::EPSILON * res_abs);
    }
    Ok(Panel { a, b, value, error })
}

/// Adaptive integration of `f` on `[a, b]` until the summed error is below `target`.
fn adaptive_window<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    target: impl Fn(f64) -> f64,
    budget: &mut usize,
) -> Result<Integral> {
    let mut panels = vec![gauss_kronrod_15(f, a, b)?];
    let mut used = 1usize;
    loop {
        let value: f64 = compensated_sum(panels.iter().map(|p| p.value));
        let error: f64 = panels.iter().map(|p| p.error).sum();
        if error <= target(value) {
            *budget = budget.saturating_sub(used);
            return Ok(Integral { value, error, panels: used });
        }
        if used + 2 > *budget {
            return Err(Error::QuadratureBudget { panels: used, estimate: value, error });
        }
        let (idx, worst) = panels
            .iter()
            .enumerate()
            .max_by(|x, y| x.1.error.total_cmp(&y.1.error))
            .map(|(i, p)| (i, *p))
            .expect("at least one panel");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // cannot refine further in floating point
            *budget = budget.saturating_sub(used);
            return Ok(Integral { value, error, panels: used });
        }
        panels[idx] = gauss_kronrod_15(f, worst.a, mid)?;
        panels.push(gauss_kronrod_15(f, mid, worst.b)?);
        used += 2;
    }
}

/// Integral over the real line of an even integrand, i.e. `2 * int_0^inf f`.
///
/// The half line is swept in windows `[0, s]`, `[s, 2s]`, `[2s, 4s]`, ... with
/// `s = q_scale`; each window is refined adaptively. The sweep stops once two
/// consecutive windows contribute less than `tail_cutoff` times the running total.
pub fn integrate_even_line<F: Fn(f64) -> f64>(
    f: F,
    q_scale: f64,
    settings: &QuadratureSettings,
) -> Result<Integral> {
    if !(q_scale > 0.0 && q_scale.is_finite()) {
        return Err(Error::InvalidParameter(format!("q_scale must be positive, got {q_scale}")));
    }
    let half = sweep(&f, 0.0, q_scale, settings)?;
    Ok(Integral { value: 2.0 * half.value, error: 2.0 * half.error, panels: half.panels })
}

/// `int_start^inf f` for `start > 0`, swept in windows `[start 2^k, start 2^{k+1}]`.
pub fn integrate_tail<F: Fn(f64) -> f64>(
    f: F,
    start: f64,
    settings: &QuadratureSettings,
) -> Result<Integral> {
    if !(start > 0.0 && start.is_finite()) {
        return Err(Error::InvalidParameter(format!("tail start must be positive, got {start}")));
    }
    sweep(&f, start, 2.0 * start, settings)
}

fn sweep<F: Fn(f64) -> f64>(
    f: &F,
    mut lo: f64,
    mut hi: f64,
    settings: &QuadratureSettings,
) -> Result<Integral> {
    settings.validate()?;
    let mut budget = settings.max_panels;
    let mut total = CompensatedSum::new();
    let mut error = 0.0;
    let mut panels = 0usize;
    let mut quiet = 0;
    for _ in 0..1000 {
        let acc = total.value();
        let target = |v: f64| {
            settings.abs_tol.max(settings.rel_tol * (acc + v).abs().max(v.abs())) * 0.5
        };
        let w = adaptive_window(f, lo, hi, target, &mut budget).map_err(|e| match e {
            Error::QuadratureBudget { panels: p, estimate, error: err } => Error::QuadratureBudget {
                panels: panels + p,
                estimate: acc + estimate,
                error: error + err,
            },
            other => other,
        })?;
        total.add(w.value);
        error += w.error;
        panels += w.panels;
        if w.value.abs() <= settings.tail_cutoff * total.value().abs() {
            quiet += 1;
            if quiet >= 2 {
                break;
            }
        } else {
            quiet = 0;
        }
        lo = hi;
        hi *= 2.0;
        if !hi.is_finite() {
            break;
        }
    }
    Ok(Integral { value: total.value(), error, panels })
}

/// Root of a continuous, strictly monotone function bracketed by `[lo, hi]`.
///
/// Secant steps are taken while they stay inside the bracket and shrink it
/// quickly; otherwise the bracket is bisected.
pub fn find_root_monotone<F: FnMut(f64) -> f64>(
    mut f: F,
    lo: f64,
    hi: f64,
    settings: &RootSettings,
) -> Result<f64> {
    let (mut lo, mut hi) = if lo <= hi { (lo, hi) } else { (hi, lo) };
    let mut f_lo = f(lo);
    if !f_lo.is_finite() {
        return Err(Error::RootNotFinite(lo));
    }
    let mut f_hi = f(hi);
    if !f_hi.is_finite() {
        return Err(Error::RootNotFinite(hi));
    }
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() {
        return Err(Error::NoSignChange { lo, hi, f_lo, f_hi });
    }
    let mut width_before = hi - lo;
    let mut use_bisection = false;
    for _ in 0..settings.max_iter {
        if hi - lo <= settings.x_tol {
            return Ok(0.5 * (lo + hi));
        }
        let secant = hi - f_hi * (hi - lo) / (f_hi - f_lo);
        let x = if use_bisection || !(secant > lo && secant < hi) {
            0.5 * (lo + hi)
        } else {
            // keep secant points off the endpoints so the bracket keeps shrinking
            let guard = 0.25 * settings.x_tol;
            secant.clamp(lo + guard, hi - guard)
        };
        let fx = f(x);
        if !fx.is_finite() {
            return Err(Error::RootNotFinite(x));
        }
        if fx.abs() <= settings.f_tol {
            return Ok(x);
        }
        if fx.signum() == f_lo.signum() {
            lo = x;
            f_lo = fx;
        } else {
            hi = x;
            f_hi = fx;
        }
        let width = hi - lo;
        // bisect next unless the last step at least halved the bracket
        use_bisection = !use_bisection && width > 0.5 * width_before;
        width_before = width;
    }
    Err(Error::RootIterations { iterations: settings.max_iter, lo, hi })
}
