//! Numerical laboratory for the Ginzburg-Landau limit of one-dimensional BCS
//! theory with a contact interaction.
//!
//! Energies are measured in units where the kinetic term is `-h^2 d^2/dx^2`,
//! the macroscopic period is 1 and `beta = 1/T`.

pub mod asymp;
pub mod bdg;
pub mod error;
pub mod glcoef;
pub mod glfield;
pub mod numerics;
pub mod specfun;
pub mod tinv;

pub use error::{Error, Result};
