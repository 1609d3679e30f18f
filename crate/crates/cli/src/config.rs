//! Run configuration: TOML file, command-line overrides, validation.

use std::fs;
use std::path::{Path, PathBuf};

use glbcs::bdg::DEFAULT_N_THETA;
use glbcs::glfield::{ExternalPotential, DEFAULT_N_MODES};
use glbcs::tinv::ModelParams;
use serde::{Deserialize, Serialize};

/// Configuration problem; reported with exit code 64.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn field(path: &str, msg: impl std::fmt::Display) -> ConfigError {
    ConfigError(format!("{path}: {msg}"))
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct RunConfig {
    pub model: ModelSection,
    pub potential: PotentialSection,
    pub discretization: DiscretizationSection,
    pub output: OutputSection,
    pub gap: GapSection,
    pub alpha0: Alpha0Section,
    pub gl: GlSection,
    pub scf: ScfSection,
    pub verify: VerifySection,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ModelSection {
    pub a: f64,
    pub mu: f64,
    #[serde(rename = "D", alias = "d")]
    pub d: f64,
    pub h: f64,
}

impl Default for ModelSection {
    fn default() -> Self {
        Self { a: 2.0, mu: 1.0, d: 1.0, h: 0.1 }
    }
}

/// One trigonometric mode `cos * cos(2 pi k x) + sin * sin(2 pi k x)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrigMode {
    pub k: i64,
    #[serde(default)]
    pub cos: f64,
    #[serde(default)]
    pub sin: f64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct PotentialSection {
    pub modes: Vec<TrigMode>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct DiscretizationSection {
    /// Plane-wave cutoff `N`; when absent it follows from the coverage.
    pub n_modes: Option<usize>,
    pub n_theta: usize,
    /// Multiplies the default momentum coverage `25 max(1, sqrt(mu + T))`.
    pub coverage_factor: f64,
}

impl Default for DiscretizationSection {
    fn default() -> Self {
        Self { n_modes: None, n_theta: DEFAULT_N_THETA, coverage_factor: 1.5 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct OutputSection {
    pub dir: PathBuf,
}

impl Default for OutputSection {
    fn default() -> Self {
        Self { dir: PathBuf::from("reports") }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GapSection {
    /// Temperature range as fractions of `T_c`.
    pub t_min: f64,
    pub t_max: f64,
    pub points: usize,
}

impl Default for GapSection {
    fn default() -> Self {
        Self { t_min: 0.05, t_max: 1.0, points: 20 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct Alpha0Section {
    pub x_max: f64,
    pub points: usize,
    pub q_max: f64,
}

impl Default for Alpha0Section {
    fn default() -> Self {
        Self { x_max: 10.0, points: 101, q_max: 10.0 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GlSection {
    pub modes: usize,
    pub tol: f64,
    /// Sample points of the dumped minimizer.
    pub samples: usize,
}

impl Default for GlSection {
    fn default() -> Self {
        Self { modes: DEFAULT_N_MODES, tol: 1e-10, samples: 128 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScfSection {
    /// Fourier cutoff of the gap function.
    pub gap_modes: usize,
    pub tol: f64,
    pub damping: f64,
    pub max_iter: usize,
    pub anderson_depth: usize,
}

impl Default for ScfSection {
    fn default() -> Self {
        Self { gap_modes: 4, tol: 1e-9, damping: 0.7, max_iter: 500, anderson_depth: 5 }
    }
}

/// Fourier mode of the test field used by the scaling suites.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PsiMode {
    pub k: i64,
    #[serde(default)]
    pub re: f64,
    #[serde(default)]
    pub im: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct VerifySection {
    /// Decreasing `h` values; suite defaults when absent.
    pub h_list: Option<Vec<f64>>,
    pub psi: Vec<PsiMode>,
    pub samples: usize,
    pub seed: u64,
    pub grid: usize,
    pub min_order_semiclassics: f64,
    pub min_order_pair_kernel: f64,
    pub min_order_main_theorem: f64,
    pub klein_tolerance: f64,
    pub b1_tolerance: f64,
}

pub const DEFAULT_SEED: u64 = 7;

impl Default for VerifySection {
    fn default() -> Self {
        Self {
            h_list: None,
            psi: vec![PsiMode { k: 0, re: 1.0, im: 0.0 }, PsiMode { k: 1, re: 0.2, im: 0.0 }],
            samples: 200,
            seed: DEFAULT_SEED,
            grid: 100,
            min_order_semiclassics: 5.5,
            min_order_pair_kernel: 4.5,
            min_order_main_theorem: 4.0,
            klein_tolerance: 1e-10,
            b1_tolerance: 1e-8,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> Result<Self, ConfigError> {
        let text = fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
        Self::parse(&text).map_err(|e| ConfigError(format!("{}: {}", path.display(), e.0)))
    }

    pub fn parse(text: &str) -> Result<Self, ConfigError> {
        toml::from_str(text).map_err(|e| ConfigError(e.to_string().trim_end().to_string()))
    }

    pub fn model(&self) -> Result<ModelParams, ConfigError> {
        let m = &self.model;
        ModelParams::new(m.a, m.mu, m.d, m.h).map_err(|e| field("model", e))
    }

    pub fn potential(&self) -> Result<ExternalPotential, ConfigError> {
        let modes = &self.potential.modes;
        let n = modes.iter().map(|m| m.k.max(0) as usize).max().unwrap_or(0);
        let mut cos = vec![0.0; n];
        let mut sin = vec![0.0; n];
        let mut seen = vec![false; n];
        for (i, m) in modes.iter().enumerate() {
            let path = format!("potential.modes[{i}]");
            if m.k == 0 {
                return Err(field(&format!("{path}.k"), "constant mode rejected, W must have mean zero"));
            }
            if m.k < 0 {
                return Err(field(&format!("{path}.k"), format!("mode index must be positive, got {}", m.k)));
            }
            if !(m.cos.is_finite() && m.sin.is_finite()) {
                return Err(field(&path, "amplitudes must be finite"));
            }
            let k = m.k as usize - 1;
            if seen[k] {
                return Err(field(&format!("{path}.k"), format!("mode {} given twice", m.k)));
            }
            seen[k] = true;
            cos[k] = m.cos;
            sin[k] = m.sin;
        }
        ExternalPotential::from_trig(&cos, &sin).map_err(|e| field("potential", e))
    }

    /// Replaces the modes by `cos[k-1]`, `sin[k-1]` amplitudes.
    pub fn set_trig(&mut self, cos: &[f64], sin: &[f64]) {
        let n = cos.len().max(sin.len());
        self.potential.modes = (1..=n)
            .map(|k| TrigMode {
                k: k as i64,
                cos: cos.get(k - 1).copied().unwrap_or(0.0),
                sin: sin.get(k - 1).copied().unwrap_or(0.0),
            })
            .collect();
    }

    /// Checks everything that does not depend on the subcommand.
    pub fn validate(&self) -> Result<(), ConfigError> {
        self.model()?;
        self.potential()?;
        let d = &self.discretization;
        if d.n_theta == 0 {
            return Err(field("discretization.n_theta", "must be at least 1"));
        }
        if d.n_modes == Some(0) {
            return Err(field("discretization.n_modes", "must be at least 1"));
        }
        if !(d.coverage_factor > 0.0 && d.coverage_factor.is_finite()) {
            return Err(field("discretization.coverage_factor", "must be positive"));
        }
        let g = &self.gap;
        if !(g.t_min > 0.0 && g.t_min < g.t_max && g.t_max <= 1.0) {
            return Err(field("gap", format!("need 0 < t_min < t_max <= 1, got {} and {}", g.t_min, g.t_max)));
        }
        if g.points < 2 {
            return Err(field("gap.points", "need at least 2"));
        }
        let p = &self.alpha0;
        if !(p.x_max > 0.0 && p.x_max.is_finite()) || !(p.q_max > 0.0 && p.q_max.is_finite()) {
            return Err(field("alpha0", "x_max and q_max must be positive"));
        }
        if p.points < 2 {
            return Err(field("alpha0.points", "need at least 2"));
        }
        if !(self.gl.tol > 0.0) {
            return Err(field("gl.tol", "must be positive"));
        }
        if self.gl.samples < 2 * self.gl.modes + 1 {
            return Err(field("gl.samples", format!("need at least {}", 2 * self.gl.modes + 1)));
        }
        let s = &self.scf;
        if !(s.damping > 0.0 && s.damping <= 1.0) {
            return Err(field("scf.damping", "must lie in (0, 1]"));
        }
        if !(s.tol > 0.0) {
            return Err(field("scf.tol", "must be positive"));
        }
        let v = &self.verify;
        if let Some(list) = &v.h_list {
            if list.is_empty() || list.iter().any(|h| !(*h > 0.0 && *h < 1.0)) || list.windows(2).any(|p| p[1] >= p[0]) {
                return Err(field("verify.h_list", "need strictly decreasing values in (0, 1)"));
            }
        }
        for (i, m) in v.psi.iter().enumerate() {
            if !(m.re.is_finite() && m.im.is_finite()) {
                return Err(field(&format!("verify.psi[{i}]"), "coefficients must be finite"));
            }
        }
        if v.samples == 0 || v.grid == 0 {
            return Err(field("verify", "samples and grid must be positive"));
        }
        Ok(())
    }
}
