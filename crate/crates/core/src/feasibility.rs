//! Feasibility margin (capacity bits minus tick bits) and the solvers built
//! on it: sign-change search in time, minimal radius, and minimal e-folds.
//!
//! Bisection runs in log coordinates throughout; quantities of interest span
//! hundreds of decades.

use serde::Serialize;

use crate::capacity::{bekenstein_entropy_over_kb, log2_capacity};
use crate::constants::ConstantSet;
use crate::error::{Error, Result};
use crate::expansion::Timeline;
use crate::grid::log_space;
use crate::roots::bisect;
use crate::ticks::{log2_tick_count, TickModel};

/// Grid density of the sign-change scan.
pub const SCAN_POINTS_PER_DECADE: f64 = 64.0;
/// Width, in decades of `t`, to which each crossing is bisected.
pub const CROSSING_TOLERANCE_DECADES: f64 = 1e-6;
/// Width, in `ln l`, to which the minimal radius is bisected.
pub const RADIUS_TOLERANCE_LN: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FeasibilityReport {
    #[serde(rename = "t_seconds")]
    pub t: f64,
    #[serde(rename = "radius_m")]
    pub radius: f64,
    #[serde(rename = "log2_capacity_bits")]
    pub log2_capacity: f64,
    #[serde(rename = "log2_ticks_bits")]
    pub log2_ticks: f64,
    #[serde(rename = "margin_bits")]
    pub margin: f64,
    pub feasible: bool,
    /// True when `log2_ticks` is an upper bound on the tick count (ML model).
    pub ticks_upper_bound: bool,
}

/// Margin for a region of radius `l` that has been ticking since `t = 0`.
pub fn margin_at_radius(
    l: f64,
    t: f64,
    model: TickModel,
    constants: &ConstantSet,
) -> Result<FeasibilityReport> {
    let capacity = log2_capacity(l, constants)?.log2();
    let ticks = log2_tick_count(model, l, t, constants)?.log2();
    let margin = capacity - ticks;
    Ok(FeasibilityReport {
        t,
        radius: l,
        log2_capacity: capacity,
        log2_ticks: ticks,
        margin,
        feasible: margin >= 0.0,
        ticks_upper_bound: model.count_is_upper_bound(),
    })
}

pub fn margin(
    timeline: &Timeline,
    model: TickModel,
    t: f64,
    constants: &ConstantSet,
) -> Result<FeasibilityReport> {
    let l = timeline.radius_at(t)?;
    margin_at_radius(l, t, model, constants)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    ToInfeasible,
    ToFeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Crossing {
    pub t_seconds: f64,
    pub direction: Direction,
}

/// Every time in `[t_lo, t_hi]` where the verdict flips.
///
/// The range is scanned at [`SCAN_POINTS_PER_DECADE`] log-uniform points and
/// every flip between neighbours is bisected on `log10 t`. Flips narrower
/// than one grid cell can be missed, as can pairs of flips inside one cell.
pub fn find_crossings(
    timeline: &Timeline,
    model: TickModel,
    t_lo: f64,
    t_hi: f64,
    constants: &ConstantSet,
) -> Result<Vec<Crossing>> {
    if !(t_lo > 0.0 && t_lo < t_hi) {
        return Err(Error::InvalidArgument(format!(
            "crossing search needs 0 < t_lo < t_hi, got [{t_lo:e}, {t_hi:e}]"
        )));
    }
    let (lo, hi) = timeline.domain();
    for t in [t_lo, t_hi] {
        if !(t >= lo && t <= hi) {
            return Err(Error::OutOfDomain { t, lo, hi });
        }
    }

    let feasible_at_log = |x: f64| -> Result<bool> {
        let t = 10f64.powf(x).clamp(t_lo, t_hi);
        Ok(margin(timeline, model, t, constants)?.feasible)
    };

    let decades = t_hi.log10() - t_lo.log10();
    let cells = (decades * SCAN_POINTS_PER_DECADE).ceil().max(1.0) as usize;
    let grid = log_space(t_lo, t_hi, cells + 1);
    let verdicts = grid
        .iter()
        .map(|&t| margin(timeline, model, t, constants).map(|r| r.feasible))
        .collect::<Result<Vec<_>>>()?;

    let mut crossings = Vec::new();
    for i in 0..cells {
        if verdicts[i] == verdicts[i + 1] {
            continue;
        }
        let bracket = bisect(
            grid[i].log10(),
            grid[i + 1].log10(),
            CROSSING_TOLERANCE_DECADES,
            feasible_at_log,
        )?;
        crossings.push(Crossing {
            t_seconds: 10f64.powf(bracket.midpoint()),
            direction: if verdicts[i] {
                Direction::ToInfeasible
            } else {
                Direction::ToFeasible
            },
        });
    }
    Ok(crossings)
}

/// Result of the minimal-radius search.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MinRadius {
    /// Smallest radius from which every larger constant radius is feasible.
    /// Zero when `degenerate`.
    pub radius: f64,
    /// Every radius is feasible at this time (at most one tick has elapsed
    /// in the Planck model, or the ML margin never goes negative).
    pub degenerate: bool,
}

/// `l_p sqrt(log2(t / t_p) / pi)`, the Planck-model boundary in closed form.
/// `None` when `t <= t_p`.
pub fn planck_min_radius_closed_form(t: f64, constants: &ConstantSet) -> Option<f64> {
    let bits = (t / constants.t_p).log2();
    (bits > 0.0).then(|| constants.l_p * (bits / std::f64::consts::PI).sqrt())
}

/// Smallest constant radius `l` such that the margin at time `t` is
/// non-negative for `l` and every larger radius, found by bisection on `ln l`.
///
/// In the Planck model the margin is increasing in `l`. In the ML model it
/// has a single minimum at `l = l_p / sqrt(2 pi ln 2)` and is increasing
/// above it; radii below that minimum whose tick bound is under one tick are
/// not counted as feasible.
pub fn min_radius_for_feasibility(
    model: TickModel,
    t: f64,
    constants: &ConstantSet,
) -> Result<MinRadius> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::InvalidArgument(format!("time must be > 0, got {t}")));
    }
    let feasible =
        |x: f64| -> Result<bool> { Ok(margin_at_radius(x.exp(), t, model, constants)?.feasible) };
    const DEGENERATE: MinRadius = MinRadius {
        radius: 0.0,
        degenerate: true,
    };
    let step = std::f64::consts::LN_10;

    let lo = match model {
        TickModel::Planck => {
            if log2_tick_count(model, constants.l_p, t, constants)?.log2() <= 0.0 {
                return Ok(DEGENERATE);
            }
            let mut x = constants.l_p.ln();
            while feasible(x)? {
                x -= step;
            }
            x
        }
        TickModel::MargolusLevitin => {
            let argmin =
                constants.l_p / (2.0 * std::f64::consts::PI * std::f64::consts::LN_2).sqrt();
            let x = argmin.ln();
            if feasible(x)? {
                return Ok(DEGENERATE);
            }
            x
        }
    };
    let mut hi = lo + step;
    while !feasible(hi)? {
        hi += step;
    }
    let bracket = bisect(hi - step, hi, RADIUS_TOLERANCE_LN, feasible)?;
    Ok(MinRadius {
        radius: bracket.hi.exp(),
        degenerate: false,
    })
}

/// Minimal inflationary e-folds `C >= 0` such that a region starting at
/// radius `l1` and ending at `l1 e^C` is feasible at `t2`.
pub fn min_efolds(l1: f64, t2: f64, model: TickModel, constants: &ConstantSet) -> Result<f64> {
    if !(l1 > 0.0 && l1.is_finite()) {
        return Err(Error::InvalidArgument(format!("l1 must be > 0, got {l1}")));
    }
    let bound = min_radius_for_feasibility(model, t2, constants)?;
    if bound.degenerate || bound.radius <= l1 {
        return Ok(0.0);
    }
    let mut efolds = (bound.radius / l1).ln();
    // ln/exp rounding can land one ulp under the boundary.
    while !margin_at_radius(l1 * efolds.exp(), t2, model, constants)?.feasible {
        efolds += efolds * f64::EPSILON;
    }
    Ok(efolds)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EntropySample {
    pub t: f64,
    pub entropy_over_kb: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MonotonicityVerdict {
    pub non_decreasing: bool,
    pub first_violation: Option<(EntropySample, EntropySample)>,
}

/// Samples the Bekenstein entropy along the timeline at `samples`
/// log-uniform times and checks that it never decreases.
pub fn entropy_monotone(
    timeline: &Timeline,
    samples: usize,
    constants: &ConstantSet,
) -> Result<MonotonicityVerdict> {
    if samples < 2 {
        return Err(Error::InvalidArgument(format!(
            "need at least 2 samples, got {samples}"
        )));
    }
    let (lo, hi) = timeline.domain();
    let points = log_space(lo, hi, samples)
        .into_iter()
        .map(|t| {
            Ok(EntropySample {
                t,
                entropy_over_kb: bekenstein_entropy_over_kb(timeline.radius_at(t)?, constants),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_violation = points
        .windows(2)
        .find(|w| w[1].entropy_over_kb < w[0].entropy_over_kb)
        .map(|w| (w[0], w[1]));
    Ok(MonotonicityVerdict {
        non_decreasing: first_violation.is_none(),
        first_violation,
    })
}
