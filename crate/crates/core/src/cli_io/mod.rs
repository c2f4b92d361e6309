//! Command-line front end: argument parsing, configuration, dispatch and
//! output. Everything with side effects lives here.
//!
//! Exit codes: 0 on success, 1 on I/O or runtime failure, 2 on usage or
//! parse errors. Nothing is written to standard output unless the command
//! succeeds.

mod args;
mod config;
mod emit;

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::error::ErrorKind;
use thiserror::Error;

pub use args::{
    parse_args, CliInvocation, Command, DecohereArgs, DensityArgs, OverlapArgs, Preset, SolveVoxelArgs,
    SweepArgs,
};
pub use config::{load_config, parse_config, ConfigError, Settings, KEYS as CONFIG_KEYS};
pub use emit::{emit, Field, FieldValue, Format, Output, SWEEP_CSV_HEADER};

use crate::decoherence::{classify, ObjectClass};
use crate::geometry::{observable_volume, overlap_volume, redundancy_fraction, ObserverConfig};
use crate::ledger::{encoding_density, evaluate, solve_voxel_dimension, EncodingSpec};
use crate::sweep::{planck_ratio, run_sweep, SweepGrid};

pub const EXIT_OK: i32 = 0;
pub const EXIT_RUNTIME: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Config(#[from] ConfigError),

    #[error(transparent)]
    Compute(#[from] crate::Error),

    #[error("invalid arguments: {0}")]
    Arguments(crate::Error),

    #[error("cannot write {}: {source}", path.display())]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(ConfigError::Io { .. }) => EXIT_RUNTIME,
            CliError::Config(_) | CliError::Arguments(_) => EXIT_USAGE,
            CliError::Compute(_) | CliError::Write { .. } => EXIT_RUNTIME,
        }
    }
}

/// Runs a full invocation and returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let invocation = match parse_args(args) {
        Ok(inv) => inv,
        Err(e) => {
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(stdout, "{e}");
                    EXIT_OK
                }
                _ => {
                    let _ = write!(stderr, "{}", e.render());
                    EXIT_USAGE
                }
            };
        }
    };

    match execute(&invocation) {
        Ok(text) => match &invocation.output {
            Some(path) => match fs::write(path, &text) {
                Ok(()) => EXIT_OK,
                Err(source) => report(stderr, &CliError::Write { path: path.clone(), source }),
            },
            None => match stdout.write_all(text.as_bytes()) {
                Ok(()) => EXIT_OK,
                Err(_) => EXIT_RUNTIME,
            },
        },
        Err(e) => report(stderr, &e),
    }
}

fn report(stderr: &mut dyn Write, err: &CliError) -> i32 {
    let _ = writeln!(stderr, "error: {err}");
    err.exit_code()
}

/// Loads configuration, runs the subcommand and renders its output.
pub fn execute(invocation: &CliInvocation) -> Result<String, CliError> {
    let settings = match &invocation.config {
        Some(path) => load_config(path)?,
        None => Settings::default(),
    };
    let output = compute(&invocation.command, &settings)?;
    Ok(emit(&output, invocation.format))
}

pub fn compute(command: &Command, settings: &Settings) -> Result<Output, CliError> {
    let Settings { cosmology, constants } = settings;
    let output = match command {
        Command::Density(a) => {
            let spec = EncodingSpec::new(
                a.n_objects.unwrap_or(cosmology.default_object_count),
                a.voxel_m.unwrap_or(cosmology.default_voxel_dimension),
                a.temperature_k.unwrap_or(cosmology.cmb_temperature),
            )?;
            let volume = observable_volume(a.radius_m.unwrap_or(cosmology.observable_radius))?;
            let result = evaluate(&spec, volume, constants)?;
            let mut fields = emit::ledger_fields(&result);
            if a.energy_density {
                fields.push(Field::scalar("rho_joule_m3", result.energy_density(constants), "J/m^3"));
            }
            Output::Record(fields)
        }
        Command::SolveVoxel(a) => {
            let n_objects = a.n_objects.unwrap_or(cosmology.default_object_count);
            let temperature = a.temperature_k.unwrap_or(cosmology.cmb_temperature);
            let target = a.target_density.unwrap_or(cosmology.observed_density());
            let voxel = solve_voxel_dimension(n_objects, temperature, target, constants)?;
            let achieved = encoding_density(&EncodingSpec::new(n_objects, voxel, temperature)?, constants)?;
            Output::Record(vec![
                Field::real("voxel_m", voxel, "m"),
                Field::scalar("rho_kg_m3", achieved, "kg/m^3"),
                Field::real("planck_ratio_dex", planck_ratio(voxel, constants)?, "dex"),
            ])
        }
        Command::Decohere(a) => {
            let object = match (a.preset, a.radius_m) {
                (Some(Preset::BohrAtom), _) => ObjectClass::bohr_atom(),
                (Some(Preset::SolarStar), _) => ObjectClass::solar_star(),
                (None, Some(r)) => ObjectClass::new("object", r)?,
                (None, None) => unreachable!("clap requires one of --preset or --radius-m"),
            };
            let temperature = a.temperature_k.unwrap_or(cosmology.cmb_temperature);
            Output::from(&classify(&object, temperature, a.scale_m, constants)?)
        }
        Command::Overlap(a) => {
            let config = ObserverConfig::new(a.radius_m.unwrap_or(cosmology.observable_radius), a.offset_m)?;
            Output::Record(vec![
                Field::scalar("overlap_m3", overlap_volume(&config)?, "m^3"),
                Field::real("fraction", redundancy_fraction(&config)?, ""),
            ])
        }
        Command::Sweep(a) => {
            let grid = SweepGrid::new(
                a.no_min..=a.no_max,
                a.lv_m.clone(),
                a.temperature_k.unwrap_or(cosmology.cmb_temperature),
            )
            .map_err(CliError::Arguments)?;
            Output::from(&run_sweep(&grid, cosmology, constants)?)
        }
    };
    Ok(output)
}
