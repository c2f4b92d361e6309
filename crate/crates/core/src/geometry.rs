//! Horizon volumes and the overlap zone between two observers.
//!
//! Both observable universes are equal-radius balls in flat space. An
//! encoding is reachable by a second observer only inside the lens where the
//! two balls intersect.

use std::f64::consts::PI;

use crate::error::{non_negative, positive, Result};
use crate::numerics::XScalar;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObserverConfig {
    /// Radius shared by both horizon spheres, m.
    pub horizon_radius: f64,
    /// Distance between the two observers, m.
    pub offset_d: f64,
}

impl ObserverConfig {
    pub fn new(horizon_radius: f64, offset_d: f64) -> Result<Self> {
        Ok(Self {
            horizon_radius: positive("horizon radius", horizon_radius)?,
            offset_d: non_negative("observer offset", offset_d)?,
        })
    }
}

/// `(4/3) π r³`.
pub fn observable_volume(radius: f64) -> Result<XScalar> {
    let r = XScalar::from_f64(positive("radius", radius)?)?;
    Ok(XScalar::from_f64(4.0 * PI / 3.0)? * r.powi(3)?)
}

/// Fraction of one ball covered by the lens, from the reduced offset
/// `u = d / R`: `(4 + u)(2 − u)² / 16`.
fn lens_fraction(config: &ObserverConfig) -> f64 {
    let u = config.offset_d / config.horizon_radius;
    if u >= 2.0 {
        return 0.0;
    }
    (4.0 + u) * (2.0 - u).powi(2) / 16.0
}

/// Lens volume `π (4R + d)(2R − d)² / 12` for `d < 2R`, zero otherwise.
pub fn overlap_volume(config: &ObserverConfig) -> Result<XScalar> {
    let config = ObserverConfig::new(config.horizon_radius, config.offset_d)?;
    let fraction = lens_fraction(&config);
    if fraction == 0.0 {
        return Ok(XScalar::ZERO);
    }
    Ok(observable_volume(config.horizon_radius)? * XScalar::from_f64(fraction)?)
}

/// Share of the horizon volume that lies in the overlap zone, in `[0, 1]`.
pub fn redundancy_fraction(config: &ObserverConfig) -> Result<f64> {
    let config = ObserverConfig::new(config.horizon_radius, config.offset_d)?;
    Ok(lens_fraction(&config))
}
