//! Command-line front end. Every command renders its whole output to a
//! `String`; the binary prints it and maps errors to exit code 2.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::config::load_timeline;
use crate::constants::{ConstantSet, ConstantSetName};
use crate::error::{Error, Result};
use crate::expansion::Timeline;
use crate::feasibility::{find_crossings, margin, min_efolds, Crossing, FeasibilityReport};
use crate::grid::log_space;
use crate::sweep::{run_sweep, SweepOutput, SweepParam, SweepSpec};
use crate::ticks::TickModel;

pub const TIMELINE_CSV_HEADER: &str =
    "t_seconds,radius_m,log2_capacity_bits,log2_ticks_bits,margin_bits,feasible";

#[derive(Debug, Parser)]
#[command(
    name = "universal-clock",
    version,
    about = "Can a model universe store its own clock ticks?"
)]
pub struct Cli {
    /// Constant set: codata | paper-om
    #[arg(long, global = true, default_value = "codata")]
    pub constants: ConstantSetName,

    /// Tick model: planck | ml
    #[arg(long = "tick-model", global = true, default_value = "planck")]
    pub tick_model: TickModel,

    /// Timeline config (JSON)
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Rounding {
    Ceil,
    None,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Emit {
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Feasibility report at one time, as JSON.
    Check {
        #[arg(long)]
        at: f64,
    },
    /// Times where the verdict flips, as JSON.
    Crossing {
        /// Defaults to the start of the timeline.
        #[arg(long = "t-min")]
        t_min: Option<f64>,
        /// Defaults to the end of the timeline.
        #[arg(long = "t-max")]
        t_max: Option<f64>,
    },
    /// Minimal inflationary e-folds, as JSON.
    Efolds {
        #[arg(long)]
        l1: f64,
        #[arg(long)]
        t2: f64,
        #[arg(long, value_enum, default_value = "ceil")]
        round: Rounding,
    },
    /// Log-uniform samples of the feasibility report along the timeline, as CSV.
    Timeline {
        #[arg(long, default_value_t = 64)]
        samples: usize,
        #[arg(long, value_enum, default_value = "csv")]
        emit: Emit,
    },
    /// Parameter sweep, as CSV.
    #[command(allow_negative_numbers = true)]
    Sweep {
        /// l1 | t2 | efolds
        #[arg(long)]
        param: SweepParam,
        #[arg(long)]
        from: f64,
        #[arg(long)]
        to: f64,
        #[arg(long, default_value_t = 50)]
        points: usize,
        /// efolds | margin (default: efolds, or margin when sweeping efolds)
        #[arg(long)]
        output: Option<SweepOutput>,
        #[arg(long, default_value_t = 1e-55)]
        l1: f64,
        #[arg(long, default_value_t = 1e-32)]
        t2: f64,
        #[arg(long, default_value_t = 0.0)]
        efolds: f64,
    },
}

#[derive(Serialize)]
struct CrossingOutput<'a> {
    t_min: f64,
    t_max: f64,
    crossings: &'a [Crossing],
}

#[derive(Serialize)]
struct EfoldsOutput {
    efolds_exact: f64,
    efolds_reported: f64,
}

/// Nine significant digits in scientific notation.
pub fn sci(v: f64) -> String {
    format!("{v:.8e}")
}

fn timeline(cli: &Cli) -> Result<Timeline> {
    let path = cli.config.as_ref().ok_or_else(|| Error::Config {
        path: "--config".into(),
        message: "this command needs a timeline config".into(),
    })?;
    load_timeline(path)
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string(value)
        .map_err(|e| Error::InvalidArgument(format!("cannot encode output: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn report_row(out: &mut String, r: &FeasibilityReport) {
    let _ = writeln!(
        out,
        "{},{},{},{},{},{}",
        sci(r.t),
        sci(r.radius),
        sci(r.log2_capacity),
        sci(r.log2_ticks),
        sci(r.margin),
        r.feasible
    );
}

pub fn run(cli: &Cli) -> Result<String> {
    let constants = ConstantSet::named(cli.constants);
    let model = cli.tick_model;
    match cli.command {
        Command::Check { at } => {
            let tl = timeline(cli)?;
            to_json(&margin(&tl, model, at, &constants)?)
        }
        Command::Crossing { t_min, t_max } => {
            let tl = timeline(cli)?;
            let (lo, hi) = tl.domain();
            let (t_min, t_max) = (t_min.unwrap_or(lo), t_max.unwrap_or(hi));
            let crossings = find_crossings(&tl, model, t_min, t_max, &constants)?;
            to_json(&CrossingOutput {
                t_min,
                t_max,
                crossings: &crossings,
            })
        }
        Command::Efolds { l1, t2, round } => {
            let exact = min_efolds(l1, t2, model, &constants)?;
            let reported = match round {
                Rounding::Ceil => exact.ceil(),
                Rounding::None => exact,
            };
            to_json(&EfoldsOutput {
                efolds_exact: exact,
                efolds_reported: reported,
            })
        }
        Command::Timeline {
            samples,
            emit: Emit::Csv,
        } => {
            if samples < 2 {
                return Err(Error::InvalidArgument(format!(
                    "--samples must be >= 2, got {samples}"
                )));
            }
            let tl = timeline(cli)?;
            let (lo, hi) = tl.domain();
            let mut out = String::from(TIMELINE_CSV_HEADER);
            out.push('\n');
            for t in log_space(lo, hi, samples) {
                report_row(&mut out, &margin(&tl, model, t, &constants)?);
            }
            Ok(out)
        }
        Command::Sweep {
            param,
            from,
            to,
            points,
            output,
            l1,
            t2,
            efolds,
        } => {
            let spec = SweepSpec {
                param,
                output: output.unwrap_or(param.default_output()),
                from,
                to,
                points,
                l1,
                t2,
                efolds,
                model,
            };
            let rows = run_sweep(&spec, &constants)?;
            let mut out = format!("{},{}\n", spec.param.column(), spec.output.column());
            for row in rows {
                let _ = writeln!(out, "{},{}", sci(row.param), sci(row.value));
            }
            Ok(out)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Cli {
        Cli::try_parse_from(std::iter::once("universal-clock").chain(args.iter().copied())).unwrap()
    }

    #[test]
    fn efolds_ceil() {
        let out = run(&parse(&["efolds", "--l1", "1e-55", "--t2", "1e-32"])).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["efolds_reported"], 48.0);
        assert!((v["efolds_exact"].as_f64().unwrap() - 47.7707).abs() < 1e-3);
    }

    #[test]
    fn efolds_clamped() {
        let out = run(&parse(&[
            "efolds", "--l1", "1", "--t2", "1e-32", "--round", "none",
        ]))
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["efolds_exact"], 0.0);
        assert_eq!(v["efolds_reported"], 0.0);
    }

    #[test]
    fn global_flags_after_subcommand() {
        let cli = parse(&[
            "efolds",
            "--l1",
            "1e-55",
            "--t2",
            "1e-32",
            "--tick-model",
            "ml",
            "--constants",
            "paper-om",
        ]);
        assert_eq!(cli.tick_model, TickModel::MargolusLevitin);
        assert_eq!(cli.constants, ConstantSetName::PaperOm);
    }

    #[test]
    fn bad_flag_values_rejected() {
        let bad = |args: &[&str]| {
            Cli::try_parse_from(std::iter::once("universal-clock").chain(args.iter().copied()))
                .is_err()
        };
        assert!(bad(&[
            "--constants",
            "cgs",
            "efolds",
            "--l1",
            "1",
            "--t2",
            "1"
        ]));
        assert!(bad(&[
            "--tick-model",
            "heisenberg",
            "efolds",
            "--l1",
            "1",
            "--t2",
            "1"
        ]));
        assert!(bad(&["efolds", "--l1", "abc", "--t2", "1"]));
    }

    #[test]
    fn check_needs_config() {
        assert!(matches!(
            run(&parse(&["check", "--at", "1"])),
            Err(Error::Config { .. })
        ));
    }

    #[test]
    fn sweep_csv_header() {
        let out = run(&parse(&[
            "sweep", "--param", "l1", "--from", "1e-55", "--to", "1e-51", "--points", "2",
        ]))
        .unwrap();
        let lines: Vec<_> = out.lines().collect();
        assert_eq!(lines[0], "l1_m,min_efolds");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("1.00000000e-55,4.77707186e1"));
    }

    #[test]
    fn sci_is_nine_digits() {
        assert_eq!(sci(0.011415141625), "1.14151416e-2");
        assert_eq!(sci(-1.6704319654), "-1.67043197e0");
    }
}
