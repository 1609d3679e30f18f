//! `glbcs`: solvers and verification suites for the GL limit of 1D BCS theory.

mod commands;
mod config;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use commands::{Failure, Outcome, Suite};
use config::{ConfigError, RunConfig};

const EXIT_SOLVER: u8 = 1;
const EXIT_CRITERION: u8 = 2;
const EXIT_CONFIG: u8 = 64;

const ABOUT: &str = "Critical temperature, GL coefficients, BdG trial states and scaling checks.

Every command writes <dir>/<command>.csv (header row) and <dir>/<command>.json
(schema_version 1, with the resolved configuration) and prints one summary line.
Exit codes: 0 success, 1 solver error, 2 failed verification criterion, 64 bad config.
GLBCS_THREADS caps the number of worker threads.";

#[derive(Parser)]
#[command(name = "glbcs", version, about = ABOUT)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// Options shared by every subcommand; flags override the config file.
#[derive(Args, Clone, Default)]
struct Common {
    /// TOML configuration file.
    #[arg(long, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Contact coupling.
    #[arg(long, allow_hyphen_values = true)]
    a: Option<f64>,
    /// Chemical potential.
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<f64>,
    /// Temperature shift: T = T_c (1 - D h^2).
    #[arg(long = "D", value_name = "D", allow_hyphen_values = true)]
    d: Option<f64>,
    /// Semiclassical parameter.
    #[arg(long, allow_hyphen_values = true)]
    h: Option<f64>,
    /// Cosine amplitudes of W for modes 1, 2, ...
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "A1,A2,..")]
    cos: Option<Vec<f64>>,
    /// Sine amplitudes of W for modes 1, 2, ...
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_name = "B1,B2,..")]
    sin: Option<Vec<f64>>,
    /// Plane-wave cutoff N (default: from the momentum coverage).
    #[arg(long)]
    n_modes: Option<usize>,
    /// Number of quasimomenta M.
    #[arg(long)]
    n_theta: Option<usize>,
    /// Multiplier of the default momentum coverage.
    #[arg(long)]
    coverage_factor: Option<f64>,
    /// Report directory.
    #[arg(long, value_name = "DIR")]
    out_dir: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Critical temperature.
    #[command(after_help = "CSV columns: a, mu, tc, beta_c, residual")]
    Tc(Common),
    /// Gap Delta_0 against temperature.
    #[command(after_help = "CSV columns: t_over_tc, temperature, delta0, residual")]
    Gap {
        #[command(flatten)]
        common: Common,
        /// Lowest temperature as a fraction of T_c.
        #[arg(long)]
        t_min: Option<f64>,
        /// Highest temperature as a fraction of T_c.
        #[arg(long)]
        t_max: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// GL coefficients and the cross-check of the two b1 formulas.
    #[command(after_help = "CSV columns: b1, b2, b3, c, beta_c, mu, d, b1_alternative, b1_cross_check")]
    Coeffs(Common),
    /// Translation-invariant pair profile alpha0 and its Fourier symbol.
    #[command(after_help = "CSV columns: x, alpha0, q, symbol")]
    Alpha0 {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        x_max: Option<f64>,
        #[arg(long)]
        q_max: Option<f64>,
        #[arg(long)]
        points: Option<usize>,
    },
    /// Minimize the GL functional and dump the minimizer.
    #[command(after_help = "CSV columns: x, re, im, abs (samples of psi on [0, 1))")]
    Gl {
        #[command(flatten)]
        common: Common,
        /// Fourier cutoff of psi.
        #[arg(long)]
        gl_modes: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
    },
    /// Trial-state free energy at a single h, with the energy-identity residual.
    #[command(
        name = "trial-energy",
        after_help = "CSV columns: h, temperature, delta0, n_modes, n_theta, f_trial, f_identity, f_direct, \
                      identity_residual, gl_prediction, ratio"
    )]
    TrialEnergy(Common),
    /// Self-consistent gap started from the GL trial state.
    #[command(after_help = "CSV columns: x, re, im, abs (samples of Delta on [0, 1))")]
    Scf {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        damping: Option<f64>,
        #[arg(long)]
        max_iter: Option<usize>,
    },
    /// Verification suites.
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
}

#[derive(Args, Clone, Default)]
struct HList {
    /// Strictly decreasing h values.
    #[arg(long, value_delimiter = ',', value_name = "H1,H2,..")]
    h_list: Option<Vec<f64>>,
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Two-term expansion of the BdG trace difference.
    #[command(after_help = "CSV columns: h, measured, predicted, remainder")]
    Semiclassics {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        h: HList,
    },
    /// H^1 distance of the pair kernel from its leading term.
    #[command(name = "pair-kernel", after_help = "CSV columns: h, measured, predicted, remainder")]
    PairKernel {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        h: HList,
    },
    /// Trial free energy against h^3 (E_GL - b3).
    #[command(name = "main-theorem", after_help = "CSV columns: h, f_trial, gl_prediction, remainder, ratio")]
    MainTheorem {
        #[command(flatten)]
        common: Common,
        #[command(flatten)]
        h: HList,
    },
    /// Klein inequality on random Hermitian and admissible pairs.
    #[command(after_help = "CSV columns: sample, size, slack")]
    Klein {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        samples: Option<usize>,
        /// RNG seed (default 7).
        #[arg(long)]
        seed: Option<u64>,
        /// Points per axis of the scalar check.
        #[arg(long)]
        grid: Option<usize>,
    },
}

fn resolve(common: &Common, tweak: impl FnOnce(&mut RunConfig)) -> Result<RunConfig, ConfigError> {
    let mut c = match &common.config {
        Some(path) => RunConfig::load(path)?,
        None => RunConfig::default(),
    };
    let m = &mut c.model;
    m.a = common.a.unwrap_or(m.a);
    m.mu = common.mu.unwrap_or(m.mu);
    m.d = common.d.unwrap_or(m.d);
    m.h = common.h.unwrap_or(m.h);
    if common.cos.is_some() || common.sin.is_some() {
        let none = Vec::new();
        c.set_trig(common.cos.as_ref().unwrap_or(&none), common.sin.as_ref().unwrap_or(&none));
    }
    let d = &mut c.discretization;
    d.n_modes = common.n_modes.or(d.n_modes);
    d.n_theta = common.n_theta.unwrap_or(d.n_theta);
    d.coverage_factor = common.coverage_factor.unwrap_or(d.coverage_factor);
    if let Some(dir) = &common.out_dir {
        c.output.dir = dir.clone();
    }
    tweak(&mut c);
    c.validate()?;
    Ok(c)
}

fn set<T>(slot: &mut T, value: Option<T>) {
    if let Some(v) = value {
        *slot = v;
    }
}

fn dispatch(command: Command) -> Result<Outcome, Failure> {
    match command {
        Command::Tc(common) => commands::tc(resolve(&common, |_| {})?),
        Command::Gap { common, t_min, t_max, points } => commands::gap(resolve(&common, |c| {
            set(&mut c.gap.t_min, t_min);
            set(&mut c.gap.t_max, t_max);
            set(&mut c.gap.points, points);
        })?),
        Command::Coeffs(common) => commands::coeffs(resolve(&common, |_| {})?),
        Command::Alpha0 { common, x_max, q_max, points } => commands::alpha0(resolve(&common, |c| {
            set(&mut c.alpha0.x_max, x_max);
            set(&mut c.alpha0.q_max, q_max);
            set(&mut c.alpha0.points, points);
        })?),
        Command::Gl { common, gl_modes, tol } => commands::gl(resolve(&common, |c| {
            set(&mut c.gl.modes, gl_modes);
            set(&mut c.gl.tol, tol);
        })?),
        Command::TrialEnergy(common) => commands::trial_energy(resolve(&common, |_| {})?),
        Command::Scf { common, tol, damping, max_iter } => commands::scf(resolve(&common, |c| {
            set(&mut c.scf.tol, tol);
            set(&mut c.scf.damping, damping);
            set(&mut c.scf.max_iter, max_iter);
        })?),
        Command::Verify { suite } => match suite {
            VerifySuite::Semiclassics { common, h } => {
                commands::verify_scaling(resolve(&common, |c| c.verify.h_list = h.h_list.or(c.verify.h_list.take()))?, Suite::Semiclassics)
            }
            VerifySuite::PairKernel { common, h } => {
                commands::verify_scaling(resolve(&common, |c| c.verify.h_list = h.h_list.or(c.verify.h_list.take()))?, Suite::PairKernel)
            }
            VerifySuite::MainTheorem { common, h } => {
                commands::verify_main_theorem(resolve(&common, |c| c.verify.h_list = h.h_list.or(c.verify.h_list.take()))?)
            }
            VerifySuite::Klein { common, samples, seed, grid } => commands::verify_klein(resolve(&common, |c| {
                set(&mut c.verify.samples, samples);
                set(&mut c.verify.seed, seed);
                set(&mut c.verify.grid, grid);
            })?),
        },
    }
}

fn init_threads() -> Result<(), ConfigError> {
    let Ok(value) = std::env::var("GLBCS_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| ConfigError(format!("GLBCS_THREADS: expected a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| ConfigError(format!("GLBCS_THREADS: {e}")))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_CONFIG) } else { ExitCode::SUCCESS };
        }
    };
    if let Err(e) = init_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(EXIT_CONFIG);
    }
    match dispatch(cli.command) {
        Ok(outcome) => {
            println!("{}", outcome.summary);
            if outcome.passed {
                ExitCode::SUCCESS
            } else {
                eprintln!("verification criterion failed");
                ExitCode::from(EXIT_CRITERION)
            }
        }
        Err(Failure::Config(e)) => {
            eprintln!("config error: {e}");
            ExitCode::from(EXIT_CONFIG)
        }
        Err(Failure::Solver(e)) => {
            eprintln!("solver error: {e}");
            ExitCode::from(EXIT_SOLVER)
        }
        Err(Failure::Io(e)) => {
            eprintln!("cannot write reports: {e}");
            ExitCode::from(EXIT_SOLVER)
        }
    }
}
