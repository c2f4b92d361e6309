//! Physical constants and cosmological parameters.
//!
//! Every computation in the crate takes these records explicitly; nothing
//! reads a global. Records are validated on construction and immutable
//! afterwards, so an override that breaks positivity never reaches a formula.

use std::f64::consts::LN_2;

use crate::error::{positive, positive_x, Error, Result};
use crate::numerics::XScalar;

/// SI constants used by the decoherence and encoding-cost formulas.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    /// Boltzmann constant, J/K.
    pub boltzmann_k: f64,
    /// Speed of light, m/s.
    pub light_speed_c: f64,
    /// Planck length, m.
    pub planck_length_lp: f64,
    /// Free energy per erased bit in units of kT. Always ln 2.
    pub landauer_factor: f64,
    /// Age of the universe, s.
    pub universe_age: f64,
}

/// Present-epoch cosmological inputs and the default encoding population.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CosmologyParams {
    /// Temperature of the ambient photon field, K.
    pub cmb_temperature: f64,
    /// Radius of the observable universe, m.
    pub observable_radius: f64,
    /// Observed dark-energy mass density, kg·m⁻³.
    pub observed_lambda_density: f64,
    /// Number of objects whose positions are encoded.
    pub default_object_count: XScalar,
    /// Voxel edge length, m.
    pub default_voxel_dimension: f64,
}

/// CODATA 2018 values; the age is 13.8 Gyr.
pub fn default_constants() -> PhysicalConstants {
    PhysicalConstants {
        boltzmann_k: 1.380649e-23,
        light_speed_c: 2.997_924_58e8,
        planck_length_lp: 1.616255e-35,
        landauer_factor: LN_2,
        universe_age: 4.35e17,
    }
}

/// Present-day CMB temperature, a particle-horizon radius of 4.40e26 m, the
/// observed dark-energy density, 1e24 stars and 5 km voxels.
pub fn default_cosmology() -> CosmologyParams {
    CosmologyParams {
        cmb_temperature: 2.7,
        observable_radius: 4.40e26,
        observed_lambda_density: 5.7e-27,
        default_object_count: XScalar::from_parts(1.0, 24).expect("finite"),
        default_voxel_dimension: 5e3,
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        default_constants()
    }
}

impl Default for CosmologyParams {
    fn default() -> Self {
        default_cosmology()
    }
}

impl PhysicalConstants {
    pub const LANDAUER_TOLERANCE: f64 = 1e-12;

    pub fn validate(self) -> Result<Self> {
        positive("boltzmann_k", self.boltzmann_k)?;
        positive("light_speed_c", self.light_speed_c)?;
        positive("planck_length_lp", self.planck_length_lp)?;
        positive("universe_age", self.universe_age)?;
        if ((self.landauer_factor - LN_2) / LN_2).abs() >= Self::LANDAUER_TOLERANCE {
            return Err(Error::Domain {
                quantity: "landauer_factor",
                requirement: "equal to ln 2",
                value: self.landauer_factor.to_string(),
            });
        }
        Ok(self)
    }

    pub fn light_speed(&self) -> XScalar {
        XScalar::from_f64(self.light_speed_c).expect("validated constant")
    }
}

impl CosmologyParams {
    pub fn validate(self) -> Result<Self> {
        positive("cmb_temperature", self.cmb_temperature)?;
        positive("observable_radius", self.observable_radius)?;
        positive("observed_lambda_density", self.observed_lambda_density)?;
        positive_x("default_object_count", self.default_object_count)?;
        positive("default_voxel_dimension", self.default_voxel_dimension)?;
        Ok(self)
    }

    pub fn observed_density(&self) -> XScalar {
        XScalar::from_f64(self.observed_lambda_density).expect("validated parameter")
    }
}
