//! # darkledger
//!
//! Decoherence timescales, voxel-encoded position bit budgets and the
//! Landauer free-energy density needed to keep those encodings classical
//! across the observable universe.
//!
//! - [`numerics`]: sign + log10 magnitude scalar covering hundreds of decades
//! - [`parameters`]: SI constants and cosmological defaults
//! - [`decoherence`]: photon scattering constant, decoherence time
//! - [`ledger`]: voxel count, bit budget, Landauer energies, density and its inversion
//! - [`geometry`]: horizon volumes and two-observer overlap
//! - [`sweep`]: density grids, observation comparison, Planck-scale ratio
//! - [`cli_io`]: the `darkledger` command-line front end

pub mod cli_io;
pub mod decoherence;
mod error;
pub mod geometry;
pub mod ledger;
pub mod numerics;
pub mod parameters;
pub mod sweep;

pub use error::{Error, Result};
pub use numerics::{Sign, XScalar};
pub use parameters::{default_constants, default_cosmology, CosmologyParams, PhysicalConstants};
