//! Parameter sweeps over the l1 / t2 / e-fold trade-off.
//!
//! Points are evaluated in parallel; rows always come back in parameter
//! order and are identical to a sequential run.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::constants::ConstantSet;
use crate::error::{Error, Result};
use crate::expansion::inflation_endpoint;
use crate::feasibility::{margin_at_radius, min_efolds};
use crate::grid::{lin_space, log_space};
use crate::ticks::TickModel;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepParam {
    /// Radius at the start of inflation, log-spaced.
    L1,
    /// Time at which feasibility is demanded, log-spaced.
    T2,
    /// Inflationary e-folds, evenly spaced.
    Efolds,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepOutput {
    /// Minimal e-folds at the swept point.
    Efolds,
    /// Margin in bits of a region of radius `l1 e^C` at `t2`.
    Margin,
}

impl SweepParam {
    pub fn column(self) -> &'static str {
        match self {
            SweepParam::L1 => "l1_m",
            SweepParam::T2 => "t2_seconds",
            SweepParam::Efolds => "efolds",
        }
    }

    pub fn default_output(self) -> SweepOutput {
        match self {
            SweepParam::Efolds => SweepOutput::Margin,
            _ => SweepOutput::Efolds,
        }
    }
}

impl SweepOutput {
    pub fn column(self) -> &'static str {
        match self {
            SweepOutput::Efolds => "min_efolds",
            SweepOutput::Margin => "margin_bits",
        }
    }
}

impl FromStr for SweepParam {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "l1" => Ok(SweepParam::L1),
            "t2" => Ok(SweepParam::T2),
            "efolds" => Ok(SweepParam::Efolds),
            _ => Err(Error::InvalidArgument(format!(
                "unknown sweep parameter `{s}` (valid: l1, t2, efolds)"
            ))),
        }
    }
}

impl FromStr for SweepOutput {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "efolds" => Ok(SweepOutput::Efolds),
            "margin" => Ok(SweepOutput::Margin),
            _ => Err(Error::InvalidArgument(format!(
                "unknown sweep output `{s}` (valid: efolds, margin)"
            ))),
        }
    }
}

impl fmt::Display for SweepParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.column())
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    pub param: SweepParam,
    pub output: SweepOutput,
    pub from: f64,
    pub to: f64,
    pub points: usize,
    pub l1: f64,
    pub t2: f64,
    pub efolds: f64,
    pub model: TickModel,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub value: f64,
}

impl SweepSpec {
    fn check(&self) -> Result<()> {
        if !(self.from < self.to) || !self.from.is_finite() || !self.to.is_finite() {
            return Err(Error::InvalidArgument(format!(
                "sweep needs from < to, got [{}, {}]",
                self.from, self.to
            )));
        }
        if self.points < 2 {
            return Err(Error::InvalidArgument(format!(
                "sweep needs at least 2 points, got {}",
                self.points
            )));
        }
        match self.param {
            SweepParam::L1 | SweepParam::T2 if self.from <= 0.0 => Err(Error::InvalidArgument(
                format!("{} sweep needs a positive range", self.param),
            )),
            SweepParam::Efolds if self.from < 0.0 => Err(Error::InvalidArgument(
                "efolds sweep needs a non-negative range".into(),
            )),
            SweepParam::Efolds if self.output == SweepOutput::Efolds => Err(
                Error::InvalidArgument("efolds sweep can only output margin".into()),
            ),
            _ => Ok(()),
        }
    }

    pub fn grid(&self) -> Vec<f64> {
        match self.param {
            SweepParam::L1 | SweepParam::T2 => log_space(self.from, self.to, self.points),
            SweepParam::Efolds => lin_space(self.from, self.to, self.points),
        }
    }

    fn evaluate(&self, x: f64, constants: &ConstantSet) -> Result<f64> {
        let (l1, t2, efolds) = match self.param {
            SweepParam::L1 => (x, self.t2, self.efolds),
            SweepParam::T2 => (self.l1, x, self.efolds),
            SweepParam::Efolds => (self.l1, self.t2, x),
        };
        match self.output {
            SweepOutput::Efolds => min_efolds(l1, t2, self.model, constants),
            SweepOutput::Margin => {
                Ok(
                    margin_at_radius(inflation_endpoint(l1, efolds), t2, self.model, constants)?
                        .margin,
                )
            }
        }
    }
}

pub fn run_sweep(spec: &SweepSpec, constants: &ConstantSet) -> Result<Vec<SweepRow>> {
    spec.check()?;
    spec.grid()
        .into_par_iter()
        .map(|x| {
            Ok(SweepRow {
                param: x,
                value: spec.evaluate(x, constants)?,
            })
        })
        .collect()
}

pub fn run_sweep_sequential(spec: &SweepSpec, constants: &ConstantSet) -> Result<Vec<SweepRow>> {
    spec.check()?;
    spec.grid()
        .into_iter()
        .map(|x| {
            Ok(SweepRow {
                param: x,
                value: spec.evaluate(x, constants)?,
            })
        })
        .collect()
}
