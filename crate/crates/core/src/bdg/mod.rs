//! Bloch-Floquet discretization of periodic BdG operators and the BCS free energy.
//!
//! Plane waves `e^{i(2 pi n + theta)x}`, `n = -N..N`, span each quasimomentum
//! fiber; a doubled (particle, hole) block has size `2(2N+1)`. Traces per unit
//! volume are quasimomentum averages `(1/M) sum_j tr_j`.

mod blocks;
mod discretization;
mod dump;
mod klein;
mod scf;
mod state;
mod tail;
pub(crate) mod trial;

pub use blocks::{assemble_h_delta, kinetic_block, BdGBlocks};
pub use discretization::{default_coverage, BlochDiscretization, DEFAULT_COVERAGE, DEFAULT_N_THETA};
pub use dump::{dump_blocks, dump_state};
pub use klein::{
    klein_battery, klein_lower_bound, KleinBattery, klein_lower_bound_matrices, relative_entropy, relative_entropy_gibbs,
    relative_entropy_matrices, scalar_klein_slack,
};
pub use scf::{self_consistent_gap, self_consistent_gap_at, ScfResult, ScfSettings};
pub use state::{
    bcs_free_energy, entropy, fermi_state, h1_operator_norm, log_partition_difference,
    normal_state, pair_block, pair_diagonal, trace_per_unit_volume, FreeEnergy, PairDiagonal,
    QuasiPeriodicState,
};
pub use tail::{pair_tail_sum, tail_correction, TailCorrection};
pub use trial::{gap_free_energy, trial_upper_bound, trial_upper_bound_at, GapEnergy, TrialEnergy};

use faer::complex_native::c64;
use faer::{Mat, Side};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numerics::compensated_sum;

/// Dense complex matrix used for every block.
pub type Block = Mat<c64>;

#[inline]
pub(crate) fn to_c64(z: Complex64) -> c64 {
    c64::new(z.re, z.im)
}

#[inline]
pub(crate) fn from_c64(z: c64) -> Complex64 {
    Complex64::new(z.re, z.im)
}

/// Eigenvalues (ascending) and eigenvectors of a Hermitian block.
pub(crate) struct Spectrum {
    pub values: Vec<f64>,
    pub vectors: Block,
}

/// Entries below this fraction of the largest entry are replaced by zero before
/// diagonalization; squares of tiny entries underflow and turn the reduction into NaN.
const FLUSH_RELATIVE: f64 = 1e-60;

fn flushed(m: &Block) -> Option<Block> {
    let mut largest: f64 = 0.0;
    let mut smallest = f64::INFINITY;
    for c in 0..m.ncols() {
        for r in 0..m.nrows() {
            let z = m.read(r, c);
            for x in [z.re.abs(), z.im.abs()] {
                largest = largest.max(x);
                if x > 0.0 {
                    smallest = smallest.min(x);
                }
            }
        }
    }
    let cut = FLUSH_RELATIVE * largest;
    (smallest < cut).then(|| {
        let f = |x: f64| if x.abs() < cut { 0.0 } else { x };
        Mat::from_fn(m.nrows(), m.ncols(), |r, c| {
            let z = m.read(r, c);
            c64::new(f(z.re), f(z.im))
        })
    })
}

/// Rows and columns ordered by increasing `|diagonal|`.
///
/// The blocks are strongly graded (kinetic diagonal up to `(h 2 pi N)^2`); in
/// the natural order the reduction loses accuracy of order `1000 eps ||H||` in
/// every eigenvalue, after sorting it is `eps |lambda|`.
fn graded(m: &Block) -> (Vec<usize>, Block) {
    let n = m.nrows();
    let mut perm: Vec<usize> = (0..n).collect();
    perm.sort_by(|&a, &b| m.read(a, a).re.abs().total_cmp(&m.read(b, b).re.abs()));
    let p = Mat::from_fn(n, n, |r, c| m.read(perm[r], perm[c]));
    (perm, p)
}

/// Splits `diag(A, B)` (equal halves, exactly zero coupling) into two problems.
fn split_halves(m: &Block, theta_index: usize) -> Option<Result<Spectrum>> {
    let n = m.nrows();
    if n < 2 || n % 2 != 0 {
        return None;
    }
    let d = n / 2;
    let zero = c64::new(0.0, 0.0);
    if (0..d).any(|c| (0..d).any(|r| m.read(r, d + c) != zero || m.read(d + r, c) != zero)) {
        return None;
    }
    let solve = || {
        let top = eigh(&m.as_ref().submatrix(0, 0, d, d).to_owned(), theta_index)?;
        let bottom = eigh(&m.as_ref().submatrix(d, d, d, d).to_owned(), theta_index)?;
        let mut cols: Vec<(f64, bool, usize)> = (0..d)
            .map(|j| (top.values[j], true, j))
            .chain((0..d).map(|j| (bottom.values[j], false, j)))
            .collect();
        cols.sort_by(|a, b| a.0.total_cmp(&b.0));
        let mut vectors = Mat::<c64>::zeros(n, n);
        for (k, &(_, upper, j)) in cols.iter().enumerate() {
            let (src, offset) = if upper { (&top.vectors, 0) } else { (&bottom.vectors, d) };
            for i in 0..d {
                vectors.write(offset + i, k, src.read(i, j));
            }
        }
        Ok(Spectrum { values: cols.iter().map(|c| c.0).collect(), vectors })
    };
    Some(solve())
}

pub(crate) fn eigh(m: &Block, theta_index: usize) -> Result<Spectrum> {
    if let Some(s) = split_halves(m, theta_index) {
        return s;
    }
    let clean = flushed(m);
    let (perm, m) = graded(clean.as_ref().unwrap_or(m));
    let n = m.nrows();
    let evd = m.selfadjoint_eigendecomposition(Side::Lower);
    let u = evd.u();
    // Rayleigh quotients: the eigenvector error enters quadratically, so the top
    // of the spectrum is recovered to a few ulp instead of ~1e-12 relative
    let hu = &m * u;
    let raw: Vec<f64> = (0..n)
        .map(|j| compensated_sum((0..n).map(|i| (u.read(i, j).conj() * hu.read(i, j)).re)))
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| raw[a].total_cmp(&raw[b]));
    let values: Vec<f64> = order.iter().map(|&i| raw[i]).collect();
    let mut vectors = Mat::<c64>::zeros(n, n);
    for j in 0..n {
        for i in 0..n {
            vectors.write(perm[i], j, u.read(i, order[j]));
        }
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(Error::Eigen(theta_index));
    }
    Ok(Spectrum { values, vectors })
}

pub(crate) fn eigvalsh(m: &Block, theta_index: usize) -> Result<Vec<f64>> {
    eigh(m, theta_index).map(|s| s.values)
}

/// `U diag(f) U^*` for the columns of `u`.
pub(crate) fn reconstruct(u: &Block, f: &[f64]) -> Block {
    let n = u.nrows();
    let scaled = Mat::from_fn(n, f.len(), |i, j| u.read(i, j) * c64::new(f[j], 0.0));
    &scaled * u.adjoint()
}

/// Largest deviation from Hermiticity, relative to the largest entry.
pub fn hermiticity_defect(m: &Block) -> f64 {
    let n = m.nrows();
    let mut worst: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            let a = from_c64(m.read(i, j));
            let b = from_c64(m.read(j, i)).conj();
            worst = worst.max((a - b).norm());
            scale = scale.max(a.norm());
        }
    }
    if scale == 0.0 {
        0.0
    } else {
        worst / scale
    }
}
