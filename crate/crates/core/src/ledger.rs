//! Free-energy cost of a voxel-based position encoding.
//!
//! The volume is cut into cubic voxels of edge `l_V`. Every voxel stores one
//! bit per object (set iff that object's centre of mass lies inside it), so
//! `N_b = N_O · N_V` bits are written in total. Each irreversible bit costs
//! `E_b = ln2 · k · T`, giving `E_T = N_b · E_b`. Spread uniformly over the
//! volume and expressed as a mass density this is
//! `ρ = N_O · E_b / (l_V³ · c²)`, independent of the volume itself.

use crate::error::{non_negative, positive, positive_x, Result};
use crate::numerics::XScalar;
use crate::parameters::{CosmologyParams, PhysicalConstants};

/// One evaluation point: how many objects, how fine the grid, how hot the
/// encoding medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EncodingSpec {
    pub object_count_no: XScalar,
    /// m
    pub voxel_dimension_lv: f64,
    /// K
    pub temperature: f64,
}

impl EncodingSpec {
    pub fn new(object_count_no: XScalar, voxel_dimension_lv: f64, temperature: f64) -> Result<Self> {
        Ok(Self {
            object_count_no: positive_x("object count", object_count_no)?,
            voxel_dimension_lv: positive("voxel dimension", voxel_dimension_lv)?,
            temperature: positive("temperature", temperature)?,
        })
    }

    pub fn from_cosmology(cosmology: &CosmologyParams) -> Result<Self> {
        Self::new(
            cosmology.default_object_count,
            cosmology.default_voxel_dimension,
            cosmology.cmb_temperature,
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LedgerResult {
    pub voxel_count_nv: XScalar,
    pub bit_budget_nb: XScalar,
    /// J
    pub bit_energy_eb: XScalar,
    /// J
    pub total_energy_et: XScalar,
    /// kg·m⁻³
    pub density_rho: XScalar,
}

impl LedgerResult {
    /// `ρ · c²`, J·m⁻³.
    pub fn energy_density(&self, constants: &PhysicalConstants) -> XScalar {
        self.density_rho * constants.light_speed() * constants.light_speed()
    }
}

/// `N_V = V / l_V³`, kept as a continuous quotient.
pub fn voxel_count(volume: XScalar, voxel_dimension_lv: f64) -> Result<XScalar> {
    let volume = positive_x("volume", volume)?;
    let lv = XScalar::from_f64(positive("voxel dimension", voxel_dimension_lv)?)?;
    volume.checked_div(lv.powi(3)?)
}

/// `N_b = N_O · N_V`.
pub fn bit_budget(object_count_no: XScalar, voxel_count_nv: XScalar) -> Result<XScalar> {
    Ok(positive_x("object count", object_count_no)? * positive_x("voxel count", voxel_count_nv)?)
}

/// `E_b = ln2 · k · T`, the Landauer cost of one bit.
pub fn landauer_bit_energy(temperature: f64, constants: &PhysicalConstants) -> Result<XScalar> {
    let t = XScalar::from_f64(non_negative("temperature", temperature)?)?;
    Ok(XScalar::from_f64(constants.landauer_factor)? * XScalar::from_f64(constants.boltzmann_k)? * t)
}

/// `E_T = N_b · E_b`.
pub fn total_encoding_energy(
    bit_budget_nb: XScalar,
    temperature: f64,
    constants: &PhysicalConstants,
) -> Result<XScalar> {
    let bits = positive_x("bit budget", bit_budget_nb)?;
    Ok(bits * landauer_bit_energy(temperature, constants)?)
}

/// `ρ = N_O · E_b / (l_V³ · c²)` in kg·m⁻³.
pub fn encoding_density(spec: &EncodingSpec, constants: &PhysicalConstants) -> Result<XScalar> {
    let spec = EncodingSpec::new(spec.object_count_no, spec.voxel_dimension_lv, spec.temperature)?;
    let energy_per_voxel = spec.object_count_no * landauer_bit_energy(spec.temperature, constants)?;
    let lv = XScalar::from_f64(spec.voxel_dimension_lv)?;
    let c = constants.light_speed();
    energy_per_voxel.checked_div(lv.powi(3)? * c.powi(2)?)
}

/// Inverts [`encoding_density`] for the voxel edge:
/// `l_V = (N_O · E_b / (ρ · c²))^(1/3)`.
pub fn solve_voxel_dimension(
    object_count_no: XScalar,
    temperature: f64,
    target_density: XScalar,
    constants: &PhysicalConstants,
) -> Result<f64> {
    let n_o = positive_x("object count", object_count_no)?;
    positive("temperature", temperature)?;
    let rho = positive_x("target density", target_density)?;
    let energy_per_voxel = n_o * landauer_bit_energy(temperature, constants)?;
    let voxel_volume = energy_per_voxel.checked_div(rho * constants.light_speed().powi(2)?)?;
    voxel_volume.root(3)?.try_to_f64()
}

/// Runs the full chain over a reference volume: voxels, bits, energies and
/// the volume-independent density.
pub fn evaluate(
    spec: &EncodingSpec,
    reference_volume: XScalar,
    constants: &PhysicalConstants,
) -> Result<LedgerResult> {
    let voxel_count_nv = voxel_count(reference_volume, spec.voxel_dimension_lv)?;
    let bit_budget_nb = bit_budget(spec.object_count_no, voxel_count_nv)?;
    Ok(LedgerResult {
        voxel_count_nv,
        bit_budget_nb,
        bit_energy_eb: landauer_bit_energy(spec.temperature, constants)?,
        total_energy_et: total_encoding_energy(bit_budget_nb, spec.temperature, constants)?,
        density_rho: encoding_density(spec, constants)?,
    })
}
