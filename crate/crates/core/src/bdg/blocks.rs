use faer::complex_native::c64;
use faer::Mat;
use rayon::prelude::*;

use super::{to_c64, Block, BlochDiscretization};
use crate::error::{Error, Result};
use crate::glfield::{ExternalPotential, PeriodicField};

/// Per-quasimomentum Hermitian blocks `[[k, D], [D^*, -k]]`.
#[derive(Debug, Clone)]
pub struct BdGBlocks {
    disc: BlochDiscretization,
    blocks: Vec<Block>,
}

impl BdGBlocks {
    /// Wraps externally built blocks; each must have size `2(2N+1)`.
    pub fn from_blocks(disc: BlochDiscretization, blocks: Vec<Block>) -> Result<Self> {
        let n = 2 * disc.dim();
        if blocks.len() != disc.n_theta || blocks.iter().any(|b| b.nrows() != n || b.ncols() != n) {
            return Err(Error::Mismatch(format!(
                "expected {} blocks of size {n}",
                disc.n_theta
            )));
        }
        Ok(Self { disc, blocks })
    }

    pub fn disc(&self) -> &BlochDiscretization {
        &self.disc
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn block(&self, j: usize) -> &Block {
        &self.blocks[j]
    }
}

/// `k_theta = diag((h(2 pi n + theta))^2 - mu) + h^2 W`, the particle block at `theta_j`.
pub fn kinetic_block(disc: &BlochDiscretization, mu: f64, w: &ExternalPotential, j: usize) -> Block {
    let d = disc.dim();
    let h2 = disc.h * disc.h;
    Mat::from_fn(d, d, |r, c| {
        let mut v = to_c64(w.coeff(r as i64 - c as i64) * h2);
        if r == c {
            let p = disc.h * disc.momentum(r, j);
            v += c64::new(p * p - mu, 0.0);
        }
        v
    })
}

fn check_cutoff(field: usize, disc: &BlochDiscretization) -> Result<()> {
    if field > disc.n_modes {
        return Err(Error::CutoffViolation { field, modes: disc.n_modes });
    }
    Ok(())
}

/// BdG operator with pairing field `delta(x)` and external potential `W`.
pub fn assemble_h_delta(
    disc: &BlochDiscretization,
    mu: f64,
    w: &ExternalPotential,
    delta: &PeriodicField,
) -> Result<BdGBlocks> {
    if !mu.is_finite() {
        return Err(Error::NonFinite { name: "mu", value: mu });
    }
    check_cutoff(w.n_max(), disc)?;
    check_cutoff(delta.effective_cutoff(), disc)?;
    let d = disc.dim();
    let blocks = (0..disc.n_theta)
        .into_par_iter()
        .map(|j| {
            let k = kinetic_block(disc, mu, w, j);
            Mat::from_fn(2 * d, 2 * d, |r, c| match (r < d, c < d) {
                (true, true) => k.read(r, c),
                (false, false) => -k.read(r - d, c - d),
                (true, false) => to_c64(delta.coeff(r as i64 - (c - d) as i64)),
                (false, true) => to_c64(delta.coeff(c as i64 - (r - d) as i64).conj()),
            })
        })
        .collect();
    Ok(BdGBlocks { disc: *disc, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bdg::{from_c64, hermiticity_defect};
    use num_complex::Complex64;

    #[test]
    fn cosine_potential_couples_neighbours() {
        let disc = BlochDiscretization::new(3, 4, 0.2).unwrap();
        let w = ExternalPotential::from_trig(&[1.0], &[]).unwrap();
        let k = kinetic_block(&disc, 1.0, &w, 1);
        assert!((from_c64(k.read(2, 3)) - Complex64::new(0.02, 0.0)).norm() < 1e-16);
        assert!((from_c64(k.read(2, 4))).norm() == 0.0);
    }

    #[test]
    fn blocks_are_hermitian() {
        let disc = BlochDiscretization::new(4, 4, 0.2).unwrap();
        let w = ExternalPotential::from_trig(&[0.3], &[0.2]).unwrap();
        let delta = PeriodicField::from_modes(2, &[(0, Complex64::new(-0.1, 0.02)), (2, Complex64::new(0.03, -0.01))])
            .unwrap();
        let b = assemble_h_delta(&disc, 1.0, &w, &delta).unwrap();
        for m in b.blocks() {
            assert!(hermiticity_defect(m) < 1e-15);
        }
        let wide = PeriodicField::from_modes(5, &[(5, Complex64::new(1.0, 0.0))]).unwrap();
        assert!(matches!(assemble_h_delta(&disc, 1.0, &w, &wide), Err(Error::CutoffViolation { .. })));
    }
}
