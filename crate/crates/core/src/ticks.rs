//! Clock tick intervals and accumulated tick counts.
//!
//! Counts are instantaneous quotients `t / dt(l)` with `t` measured from
//! zero. Under the Margolus-Levitin model the count is the upper bound
//! `l t / (pi l_p t_p)` obtained from the Schwarzschild-capped energy, so a
//! feasibility verdict built on it is sufficient rather than necessary.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::capacity::LogCount;
use crate::constants::ConstantSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub enum TickModel {
    /// One tick per Planck time.
    #[default]
    #[serde(rename = "planck")]
    Planck,
    /// One tick per minimum orthogonalization time at the maximum energy a
    /// region of the given radius can hold.
    #[serde(rename = "ml")]
    MargolusLevitin,
}

impl TickModel {
    pub fn as_str(self) -> &'static str {
        match self {
            TickModel::Planck => "planck",
            TickModel::MargolusLevitin => "ml",
        }
    }

    /// Whether [`log2_tick_count`] reports an upper bound rather than the count.
    pub fn count_is_upper_bound(self) -> bool {
        matches!(self, TickModel::MargolusLevitin)
    }
}

impl fmt::Display for TickModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TickModel {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "planck" => Ok(TickModel::Planck),
            "ml" | "margolus-levitin" => Ok(TickModel::MargolusLevitin),
            _ => Err(Error::InvalidArgument(format!(
                "unknown tick model `{s}` (valid: planck, ml)"
            ))),
        }
    }
}

/// `l c^4 / (2G)`: the energy at which radius `l` equals the Schwarzschild
/// radius.
pub fn max_energy(l: f64, constants: &ConstantSet) -> f64 {
    l * constants.c.powi(4) / (2.0 * constants.g)
}

/// Margolus-Levitin bound `pi hbar / (2E)`.
pub fn ml_min_orthogonal_time(energy: f64, constants: &ConstantSet) -> f64 {
    PI * constants.hbar / (2.0 * energy)
}

pub fn tick_interval(model: TickModel, l: f64, constants: &ConstantSet) -> f64 {
    match model {
        TickModel::Planck => constants.t_p,
        TickModel::MargolusLevitin => ml_min_orthogonal_time(max_energy(l, constants), constants),
    }
}

pub fn log2_tick_count(
    model: TickModel,
    l: f64,
    t: f64,
    constants: &ConstantSet,
) -> Result<LogCount> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!("time must be > 0, got {t}")));
    }
    let bits = match model {
        TickModel::Planck => t.log2() - constants.t_p.log2(),
        TickModel::MargolusLevitin => {
            if !(l > 0.0 && l.is_finite()) {
                return Err(Error::InvalidArgument(format!(
                    "radius must be > 0, got {l}"
                )));
            }
            l.log2() + t.log2() - (PI * constants.l_p * constants.t_p).log2()
        }
    };
    LogCount::from_log2(bits)
}
