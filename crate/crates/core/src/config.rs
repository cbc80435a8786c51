//! JSON timeline configuration.
//!
//! ```json
//! {"initial_radius": 1e-55, "epochs": [
//!   {"law": "power-law", "t_start": 5.39e-44, "t_end": 1e-37, "coefficient": 1e-33, "exponent": 0.5},
//!   {"law": "inflation", "t_start": 1e-37, "t_end": 1e-32, "efolds": 48}
//! ]}
//! ```
//!
//! Times are seconds and lengths meters. `initial_radius` is only consulted
//! when the first epoch is an inflation epoch.

use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::expansion::{Epoch, Timeline};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct TimelineConfig {
    #[serde(default)]
    initial_radius: Option<f64>,
    epochs: Vec<EpochConfig>,
}

#[derive(Debug, Clone, Copy, Deserialize)]
#[serde(rename_all = "kebab-case")]
enum LawKind {
    PowerLaw,
    Inflation,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EpochConfig {
    law: LawKind,
    t_start: f64,
    t_end: f64,
    coefficient: Option<f64>,
    exponent: Option<f64>,
    efolds: Option<f64>,
}

impl EpochConfig {
    fn into_epoch(self, index: usize) -> Result<Epoch> {
        let field_error = |field: &str, message: &str| Error::Config {
            path: format!("epochs[{index}].{field}"),
            message: message.to_owned(),
        };
        let require = |value: Option<f64>, field: &str| {
            value.ok_or_else(|| field_error(field, "required for this law"))
        };
        let forbid = |value: Option<f64>, field: &str| match value {
            Some(_) => Err(field_error(field, "not allowed for this law")),
            None => Ok(()),
        };
        match self.law {
            LawKind::PowerLaw => {
                forbid(self.efolds, "efolds")?;
                Ok(Epoch::power_law(
                    self.t_start,
                    self.t_end,
                    require(self.coefficient, "coefficient")?,
                    require(self.exponent, "exponent")?,
                ))
            }
            LawKind::Inflation => {
                forbid(self.coefficient, "coefficient")?;
                forbid(self.exponent, "exponent")?;
                Ok(Epoch::inflation(
                    self.t_start,
                    self.t_end,
                    require(self.efolds, "efolds")?,
                ))
            }
        }
    }
}

/// Parses and validates a timeline from JSON text.
pub fn parse_timeline(text: &str) -> Result<Timeline> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let cfg: TimelineConfig = serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        Error::Config {
            path: if path == "." { "<root>".into() } else { path },
            message: e.into_inner().to_string(),
        }
    })?;
    let epochs = cfg
        .epochs
        .into_iter()
        .enumerate()
        .map(|(i, e)| e.into_epoch(i))
        .collect::<Result<Vec<_>>>()?;
    Timeline::new(epochs, cfg.initial_radius)
}

pub fn load_timeline(path: &Path) -> Result<Timeline> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    parse_timeline(&text)
}
