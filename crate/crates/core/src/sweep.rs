//! Power-law sweeps of the encoding density over object counts and voxel
//! sizes, compared against the observed dark-energy density.

use std::f64::consts::LOG10_2;
use std::ops::RangeInclusive;

use rayon::prelude::*;

use crate::error::{positive, positive_x, Error, Result};
use crate::ledger::{encoding_density, EncodingSpec};
use crate::numerics::XScalar;
use crate::parameters::{CosmologyParams, PhysicalConstants};

/// Decade of the currently observed star population.
pub const STAR_BOX_DECADE: i32 = 24;

/// Offsets this close to `log10 2` count as exactly a factor of two.
const FACTOR_2_SLACK_DEX: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq)]
pub struct SweepGrid {
    /// Inclusive range of `log10 N_O`.
    pub no_decades: RangeInclusive<i32>,
    /// Voxel edges in metres, strictly increasing.
    pub lv_values: Vec<f64>,
    /// K
    pub temperature: f64,
}

impl SweepGrid {
    pub fn new(no_decades: RangeInclusive<i32>, lv_values: Vec<f64>, temperature: f64) -> Result<Self> {
        if no_decades.is_empty() {
            return Err(Error::Domain {
                quantity: "object-count decade range",
                requirement: "non-empty",
                value: format!("{}..={}", no_decades.start(), no_decades.end()),
            });
        }
        if lv_values.is_empty() {
            return Err(Error::Domain {
                quantity: "voxel dimension list",
                requirement: "non-empty",
                value: "[]".into(),
            });
        }
        for &lv in &lv_values {
            positive("voxel dimension", lv)?;
        }
        if lv_values.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Domain {
                quantity: "voxel dimension list",
                requirement: "strictly increasing",
                value: format!("{lv_values:?}"),
            });
        }
        Ok(Self {
            no_decades,
            lv_values,
            temperature: positive("temperature", temperature)?,
        })
    }

    /// `log10 N_O` from 0 to 30, voxels of 1 km to 1000 km, 2.7 K.
    pub fn reproduction_default() -> Self {
        Self::new(0..=30, vec![1e3, 5e3, 1e4, 1e5, 1e6], 2.7).expect("valid default grid")
    }

    pub fn len(&self) -> usize {
        self.lv_values.len() * self.no_decades.clone().count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub log10_no: f64,
    /// m
    pub lv_m: f64,
    /// kg·m⁻³
    pub rho: XScalar,
    pub dex_vs_observed: f64,
    pub in_star_box: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepResult {
    /// Ordered by `(lv_m, log10_no)`.
    pub rows: Vec<SweepRow>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ObservationComparison {
    /// `log10(ρ / Ω_Λρ_c)`
    pub dex: f64,
    /// `|dex| < log10 2`; a factor of exactly two does not count.
    pub within_factor_2: bool,
}

pub fn compare_to_observation(rho: XScalar, cosmology: &CosmologyParams) -> Result<ObservationComparison> {
    let rho = positive_x("density", rho)?;
    let dex = rho.ratio_dex(cosmology.observed_density())?;
    Ok(ObservationComparison {
        dex,
        within_factor_2: dex.abs() < LOG10_2 - FACTOR_2_SLACK_DEX,
    })
}

/// Evaluates the encoding density at every grid point. Points are computed
/// in parallel; rows come back ordered by voxel size, then object count.
pub fn run_sweep(
    grid: &SweepGrid,
    cosmology: &CosmologyParams,
    constants: &PhysicalConstants,
) -> Result<SweepResult> {
    let grid = SweepGrid::new(grid.no_decades.clone(), grid.lv_values.clone(), grid.temperature)?;
    let points: Vec<(f64, i32)> = grid
        .lv_values
        .iter()
        .flat_map(|&lv| grid.no_decades.clone().map(move |decade| (lv, decade)))
        .collect();
    let rows = points
        .par_iter()
        .map(|&(lv, decade)| {
            let object_count = XScalar::pow10(f64::from(decade))?;
            let spec = EncodingSpec::new(object_count, lv, grid.temperature)?;
            let rho = encoding_density(&spec, constants)?;
            Ok(SweepRow {
                log10_no: f64::from(decade),
                lv_m: lv,
                rho,
                dex_vs_observed: compare_to_observation(rho, cosmology)?.dex,
                in_star_box: decade == STAR_BOX_DECADE,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepResult { rows })
}

/// Decades by which the density at Planck-length voxels exceeds the density
/// at `reference_lv`: `3 · log10(reference_lv / l_P)`.
pub fn planck_ratio(reference_lv: f64, constants: &PhysicalConstants) -> Result<f64> {
    let lv = XScalar::from_f64(positive("reference voxel dimension", reference_lv)?)?;
    let lp = XScalar::from_f64(constants.planck_length_lp)?;
    Ok(3.0 * lv.ratio_dex(lp)?)
}
