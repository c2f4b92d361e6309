use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use super::emit::Format;
use crate::numerics::{parse_real, XScalar};

/// Decoherence timescales and Landauer encoding costs for cosmological
/// object populations.
#[derive(Debug, Clone, PartialEq, Parser)]
#[command(name = "darkledger", version)]
pub struct CliInvocation {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// `key = value` parameter file applied before command-line flags.
    #[arg(long, global = true, value_name = "PATH")]
    pub config: Option<PathBuf>,

    /// Write output here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq, Subcommand)]
pub enum Command {
    /// Voxel count, bit budget, Landauer energies and encoding density.
    Density(DensityArgs),
    /// Voxel edge at which the encoding density reaches a target.
    SolveVoxel(SolveVoxelArgs),
    /// Scattering constant and decoherence time for an object.
    Decohere(DecohereArgs),
    /// Overlap of two observers' horizon spheres.
    Overlap(OverlapArgs),
    /// Encoding density over a grid of object counts and voxel sizes.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct DensityArgs {
    /// Number of encoded objects [default: from config, 1e24].
    #[arg(long, value_parser = positive_count, allow_hyphen_values = true)]
    pub n_objects: Option<XScalar>,
    /// Voxel edge length in metres [default: from config, 5e3].
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub voxel_m: Option<f64>,
    /// Encoding temperature in kelvin [default: from config, 2.7].
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub temperature_k: Option<f64>,
    /// Radius of the encoded volume in metres [default: from config, 4.40e26].
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub radius_m: Option<f64>,
    /// Also report the density in J/m^3.
    #[arg(long)]
    pub energy_density: bool,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SolveVoxelArgs {
    #[arg(long, value_parser = positive_count, allow_hyphen_values = true)]
    pub n_objects: Option<XScalar>,
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub temperature_k: Option<f64>,
    /// Target mass density in kg/m^3 [default: observed dark-energy density].
    #[arg(long, value_parser = positive_count, allow_hyphen_values = true)]
    pub target_density: Option<XScalar>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Preset {
    BohrAtom,
    SolarStar,
}

#[derive(Debug, Clone, PartialEq, Args)]
#[group(id = "object", required = true, multiple = false, args = ["radius_m", "preset"])]
pub struct DecohereArgs {
    /// Object radius in metres.
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub radius_m: Option<f64>,
    /// Named object instead of an explicit radius.
    #[arg(long, value_enum)]
    pub preset: Option<Preset>,
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub temperature_k: Option<f64>,
    /// Separation over which coherence is lost, in metres.
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true, default_value = "1")]
    pub scale_m: f64,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct OverlapArgs {
    /// Horizon radius in metres [default: from config, 4.40e26].
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub radius_m: Option<f64>,
    /// Distance between the two observers in metres.
    #[arg(long, value_parser = non_negative_real, allow_hyphen_values = true)]
    pub offset_m: f64,
}

#[derive(Debug, Clone, PartialEq, Args)]
pub struct SweepArgs {
    /// Smallest log10 of the object count.
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    pub no_min: i32,
    /// Largest log10 of the object count.
    #[arg(long, default_value_t = 30, allow_hyphen_values = true)]
    pub no_max: i32,
    /// Comma-separated, increasing voxel edges in metres.
    #[arg(
        long,
        value_delimiter = ',',
        value_parser = positive_real,
        allow_hyphen_values = true,
        default_value = "1e3,5e3,1e4,1e5,1e6"
    )]
    pub lv_m: Vec<f64>,
    #[arg(long, value_parser = positive_real, allow_hyphen_values = true)]
    pub temperature_k: Option<f64>,
}

/// Parses an argument list, first element being the program name.
pub fn parse_args<I, T>(args: I) -> Result<CliInvocation, clap::Error>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    CliInvocation::try_parse_from(args)
}

fn positive_count(s: &str) -> Result<XScalar, String> {
    let v: XScalar = s.parse().map_err(|e: crate::Error| e.to_string())?;
    if v.is_positive() {
        Ok(v)
    } else {
        Err(format!("must be strictly positive, got {s}"))
    }
}

fn positive_real(s: &str) -> Result<f64, String> {
    let v = parse_real(s).map_err(|e| e.to_string())?;
    if v > 0.0 {
        Ok(v)
    } else {
        Err(format!("must be strictly positive, got {s}"))
    }
}

fn non_negative_real(s: &str) -> Result<f64, String> {
    let v = parse_real(s).map_err(|e| e.to_string())?;
    if v >= 0.0 {
        Ok(v)
    } else {
        Err(format!("must not be negative, got {s}"))
    }
}
