//! Physical constants file: `key = value` lines, `#` starts a comment.
//!
//! ```text
//! # cesium over a glass prism
//! mass = 2.20694695e-25
//! g    = 9.80665
//! hbar = 1.054571817e-34
//! ```
//!
//! Keys are `mass`, `g` and `hbar`; any may be omitted.

use std::fmt;
use std::path::Path;

use quantum_bouncer::bouncer::{CESIUM_MASS, G_STANDARD, HBAR_CODATA};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysicalConstants {
    pub mass: f64,
    pub g: f64,
    pub hbar: f64,
}

impl Default for PhysicalConstants {
    fn default() -> PhysicalConstants {
        PhysicalConstants {
            mass: CESIUM_MASS,
            g: G_STANDARD,
            hbar: HBAR_CODATA,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConfigError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ConfigError {}

impl PhysicalConstants {
    pub fn parse(text: &str) -> Result<PhysicalConstants, ConfigError> {
        let mut out = PhysicalConstants::default();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |message: String| ConfigError {
                line: i + 1,
                message,
            };
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| err(format!("expected `key = value`, got `{line}`")))?;
            let (key, value) = (key.trim(), value.trim());
            let v: f64 = value
                .parse()
                .map_err(|_| err(format!("`{value}` is not a number")))?;
            if !(v > 0.0 && v.is_finite()) {
                return Err(err(format!("{key} must be positive and finite")));
            }
            match key {
                "mass" => out.mass = v,
                "g" => out.g = v,
                "hbar" => out.hbar = v,
                _ => {
                    return Err(err(format!(
                        "unknown key `{key}` (expected mass, g or hbar)"
                    )))
                }
            }
        }
        Ok(out)
    }

    pub fn load(path: &Path) -> Result<PhysicalConstants, ConfigError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConfigError {
            line: 0,
            message: format!("cannot read {}: {e}", path.display()),
        })?;
        PhysicalConstants::parse(&text)
    }
}
