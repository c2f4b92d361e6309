//! `key = value` configuration files.
//!
//! Keys are the field names of [`CosmologyParams`] and [`PhysicalConstants`].
//! Blank lines and lines starting with `#` are skipped. Unknown or repeated
//! keys are rejected.

use std::collections::HashSet;
use std::fs;
use std::path::{Path, PathBuf};

use thiserror::Error;

use crate::error::Error as ComputeError;
use crate::numerics::{parse_real, XScalar};
use crate::parameters::{CosmologyParams, PhysicalConstants};

pub const KEYS: [&str; 10] = [
    "boltzmann_k",
    "light_speed_c",
    "planck_length_lp",
    "landauer_factor",
    "universe_age",
    "cmb_temperature",
    "observable_radius",
    "observed_lambda_density",
    "default_object_count",
    "default_voxel_dimension",
];

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("cannot read config {}: {source}", path.display())]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },

    #[error("unknown key {key} at line {line}")]
    UnknownKey { key: String, line: usize },

    #[error("duplicate key {key} at line {line}")]
    DuplicateKey { key: String, line: usize },

    #[error("expected `key = value` at line {line}")]
    Malformed { line: usize },

    #[error("bad value for {key} at line {line}: {source}")]
    BadValue {
        key: String,
        line: usize,
        source: ComputeError,
    },

    #[error("invalid parameters: {0}")]
    Invalid(ComputeError),
}

/// Parameter records after configuration has been applied.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Settings {
    pub cosmology: CosmologyParams,
    pub constants: PhysicalConstants,
}

pub fn load_config(path: &Path) -> Result<Settings, ConfigError> {
    let text = fs::read_to_string(path).map_err(|source| ConfigError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_config(&text, Settings::default())
}

/// Applies every assignment in `text` over `base`, then validates.
pub fn parse_config(text: &str, base: Settings) -> Result<Settings, ConfigError> {
    let Settings {
        mut cosmology,
        mut constants,
    } = base;
    let mut seen = HashSet::new();

    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        let content = raw.trim();
        if content.is_empty() || content.starts_with('#') {
            continue;
        }
        let (key, value) = content.split_once('=').ok_or(ConfigError::Malformed { line })?;
        let (key, value) = (key.trim(), value.trim());
        if !KEYS.contains(&key) {
            return Err(ConfigError::UnknownKey {
                key: key.to_string(),
                line,
            });
        }
        if !seen.insert(key) {
            return Err(ConfigError::DuplicateKey {
                key: key.to_string(),
                line,
            });
        }
        let bad = |source| ConfigError::BadValue {
            key: key.to_string(),
            line,
            source,
        };
        if key == "default_object_count" {
            cosmology.default_object_count = value.parse::<XScalar>().map_err(bad)?;
            continue;
        }
        let real = parse_real(value).map_err(bad)?;
        match key {
            "boltzmann_k" => constants.boltzmann_k = real,
            "light_speed_c" => constants.light_speed_c = real,
            "planck_length_lp" => constants.planck_length_lp = real,
            "landauer_factor" => constants.landauer_factor = real,
            "universe_age" => constants.universe_age = real,
            "cmb_temperature" => cosmology.cmb_temperature = real,
            "observable_radius" => cosmology.observable_radius = real,
            "observed_lambda_density" => cosmology.observed_lambda_density = real,
            "default_voxel_dimension" => cosmology.default_voxel_dimension = real,
            _ => unreachable!("key list and match arms agree"),
        }
    }

    Ok(Settings {
        cosmology: cosmology.validate().map_err(ConfigError::Invalid)?,
        constants: constants.validate().map_err(ConfigError::Invalid)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn temperature_override() {
        let s = parse_config("cmb_temperature = 2.7\n", Settings::default()).unwrap();
        assert_eq!(s.cosmology.cmb_temperature, 2.7);
        let s = parse_config("cmb_temperature=3.1", Settings::default()).unwrap();
        assert_eq!(s.cosmology.cmb_temperature, 3.1);
    }

    #[test]
    fn empty_file_is_defaults() {
        assert_eq!(parse_config("", Settings::default()).unwrap(), Settings::default());
        assert_eq!(
            parse_config("# nothing\n\n   \n", Settings::default()).unwrap(),
            Settings::default()
        );
    }

    #[test]
    fn unknown_key_names_key_and_line() {
        let err = parse_config("cmb_temp = 2.7", Settings::default()).unwrap_err();
        assert_eq!(err.to_string(), "unknown key cmb_temp at line 1");
        let err = parse_config("# c\nuniverse_age = 1e17\nfoo = 1\n", Settings::default()).unwrap_err();
        assert_eq!(err.to_string(), "unknown key foo at line 3");
    }

    #[test]
    fn every_key_applies() {
        let text = "boltzmann_k = 1.4e-23\nlight_speed_c = 3e8\nplanck_length_lp = 1.6e-35\n\
                    landauer_factor = 0.6931471805599453\nuniverse_age = 4e17\ncmb_temperature = 3\n\
                    observable_radius = 1e26\nobserved_lambda_density = 6e-27\n\
                    default_object_count = 1e500\ndefault_voxel_dimension = 1e4\n";
        let s = parse_config(text, Settings::default()).unwrap();
        assert_eq!(s.constants.boltzmann_k, 1.4e-23);
        assert_eq!(s.constants.light_speed_c, 3e8);
        assert_eq!(s.constants.planck_length_lp, 1.6e-35);
        assert_eq!(s.constants.universe_age, 4e17);
        assert_eq!(s.cosmology.cmb_temperature, 3.0);
        assert_eq!(s.cosmology.observable_radius, 1e26);
        assert_eq!(s.cosmology.observed_lambda_density, 6e-27);
        assert_eq!(s.cosmology.default_object_count.log10_mag(), 500.0);
        assert_eq!(s.cosmology.default_voxel_dimension, 1e4);
    }

    #[test]
    fn rejects_bad_content() {
        let d = Settings::default;
        assert!(matches!(parse_config("cmb_temperature 2.7", d()), Err(ConfigError::Malformed { line: 1 })));
        assert!(matches!(
            parse_config("cmb_temperature = warm", d()),
            Err(ConfigError::BadValue { line: 1, .. })
        ));
        assert!(matches!(
            parse_config("cmb_temperature = 1\ncmb_temperature = 2", d()),
            Err(ConfigError::DuplicateKey { line: 2, .. })
        ));
        assert!(matches!(parse_config("cmb_temperature = -2.7", d()), Err(ConfigError::Invalid(_))));
        assert!(matches!(parse_config("landauer_factor = 0.7", d()), Err(ConfigError::Invalid(_))));
        assert!(matches!(
            parse_config("observable_radius = 1e400", d()),
            Err(ConfigError::BadValue { .. })
        ));
    }

    #[test]
    fn missing_file_is_io_error() {
        let err = load_config(Path::new("/nonexistent/darkledger.conf")).unwrap_err();
        assert!(matches!(err, ConfigError::Io { .. }));
    }
}
