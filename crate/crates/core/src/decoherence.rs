//! Decoherence of an object's centre-of-mass position by a thermal photon
//! field, in the long-wavelength scattering limit.
//!
//! The scattering constant for a dielectric sphere of radius `a` at
//! temperature `T` is taken as `L = 1e32 · a⁶ · T⁹` m⁻²·s⁻¹ and the
//! decoherence time over a separation `x` as `τ = 1 / (L · x²)`.

use crate::error::{non_negative, positive, positive_x, Error, Result};
use crate::numerics::XScalar;
use crate::parameters::PhysicalConstants;

/// SI prefactor of the scattering constant, as a power of ten.
pub const SCATTERING_PREFACTOR_DEX: f64 = 32.0;

/// Bohr radius, m.
pub const BOHR_RADIUS_M: f64 = 5.29e-11;
/// Solar radius, m.
pub const SOLAR_RADIUS_M: f64 = 6.96e8;

#[derive(Debug, Clone, PartialEq)]
pub struct ObjectClass {
    pub radius_a: f64,
    pub label: String,
}

impl ObjectClass {
    pub fn new(label: impl Into<String>, radius_a: f64) -> Result<Self> {
        Ok(Self {
            radius_a: positive("object radius", radius_a)?,
            label: label.into(),
        })
    }

    pub fn bohr_atom() -> Self {
        Self::new("Bohr-radius atom", BOHR_RADIUS_M).expect("positive radius")
    }

    pub fn solar_star() -> Self {
        Self::new("solar-radius star", SOLAR_RADIUS_M).expect("positive radius")
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DecoherenceReport {
    /// m⁻²·s⁻¹
    pub scattering_l: XScalar,
    /// s
    pub tau: XScalar,
    /// m
    pub scale_x: f64,
    pub decohered_within_age: bool,
}

/// `L = 1e32 · a⁶ · T⁹`. Zero temperature gives zero scattering.
pub fn scattering_constant(radius_a: f64, temperature: f64) -> Result<XScalar> {
    let a = XScalar::from_f64(positive("object radius", radius_a)?)?;
    let t = XScalar::from_f64(non_negative("temperature", temperature)?)?;
    Ok(XScalar::pow10(SCATTERING_PREFACTOR_DEX)? * a.powi(6)? * t.powi(9)?)
}

/// `τ = 1 / (L · x²)`.
pub fn decoherence_time(scattering_l: XScalar, scale_x: f64) -> Result<XScalar> {
    let l = positive_x("scattering constant", scattering_l)?;
    let x = XScalar::from_f64(positive("decoherence length scale", scale_x)?)?;
    (l * x.powi(2)?).recip()
}

/// Evaluates both formulas for `object` and compares `τ` with the age of the
/// universe. An object decoheres within the age only if `τ` is strictly less.
pub fn classify(
    object: &ObjectClass,
    temperature: f64,
    scale_x: f64,
    constants: &PhysicalConstants,
) -> Result<DecoherenceReport> {
    let scattering_l = scattering_constant(object.radius_a, temperature)?;
    if scattering_l.is_zero() {
        return Err(Error::Domain {
            quantity: "temperature",
            requirement: "strictly positive for a finite decoherence time",
            value: temperature.to_string(),
        });
    }
    let tau = decoherence_time(scattering_l, scale_x)?;
    let age = XScalar::from_f64(constants.universe_age)?;
    Ok(DecoherenceReport {
        scattering_l,
        tau,
        scale_x,
        decohered_within_age: decoheres_within(tau, age),
    })
}

fn decoheres_within(tau: XScalar, age: XScalar) -> bool {
    tau < age
}
