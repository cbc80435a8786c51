//! Piecewise radius history `l(t)`.
//!
//! A [`Timeline`] is a contiguous sequence of [`Epoch`]s. Power-law epochs
//! carry their own absolute scale (`l = K t^n`); inflation epochs inherit the
//! radius at their start from the preceding epoch, or from the timeline's
//! initial radius when they come first, and grow by a uniform e-fold rate
//! in `t` up to `l_start * e^C` at their end.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Relative radius mismatch tolerated at an epoch junction.
pub const CONTINUITY_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum Law {
    /// `l(t) = coefficient * t^exponent`.
    PowerLaw { coefficient: f64, exponent: f64 },
    /// `l(t) = l_start * exp(efolds * (t - t_start) / (t_end - t_start))`.
    Inflation { efolds: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Epoch {
    pub t_start: f64,
    pub t_end: f64,
    #[serde(flatten)]
    pub law: Law,
}

impl Epoch {
    pub fn power_law(t_start: f64, t_end: f64, coefficient: f64, exponent: f64) -> Self {
        Epoch {
            t_start,
            t_end,
            law: Law::PowerLaw {
                coefficient,
                exponent,
            },
        }
    }

    pub fn inflation(t_start: f64, t_end: f64, efolds: f64) -> Self {
        Epoch {
            t_start,
            t_end,
            law: Law::Inflation { efolds },
        }
    }

    /// Radius at `t`, given the radius the epoch starts from. Power laws
    /// ignore `start_radius`.
    fn radius(&self, t: f64, start_radius: f64) -> f64 {
        match self.law {
            Law::PowerLaw {
                coefficient,
                exponent,
            } => coefficient * t.powf(exponent),
            Law::Inflation { efolds } => {
                let frac = (t - self.t_start) / (self.t_end - self.t_start);
                start_radius * (efolds * frac).exp()
            }
        }
    }

    fn law_problem(&self) -> Option<String> {
        match self.law {
            Law::PowerLaw {
                coefficient,
                exponent,
            } => {
                if !(coefficient.is_finite() && coefficient > 0.0) {
                    Some(format!(
                        "power-law coefficient must be > 0, got {coefficient}"
                    ))
                } else if !(exponent.is_finite() && exponent >= 0.0) {
                    Some(format!("power-law exponent must be >= 0, got {exponent}"))
                } else {
                    None
                }
            }
            Law::Inflation { efolds } => {
                if efolds.is_finite() && efolds >= 0.0 {
                    None
                } else {
                    Some(format!("inflation efolds must be >= 0, got {efolds}"))
                }
            }
        }
    }
}

/// One broken timeline invariant. Epochs are referred to by index.
#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    Empty,
    BadInterval {
        epoch: usize,
        t_start: f64,
        t_end: f64,
    },
    BadLaw {
        epoch: usize,
        reason: String,
    },
    MissingInitialRadius,
    Gap {
        before: usize,
        after: usize,
        gap: f64,
    },
    Overlap {
        before: usize,
        after: usize,
        overlap: f64,
    },
    Discontinuity {
        before: usize,
        after: usize,
        relative_mismatch: f64,
    },
    NonPositiveRadius {
        epoch: usize,
        radius: f64,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "epochs: timeline has no epochs"),
            Violation::BadInterval {
                epoch,
                t_start,
                t_end,
            } => write!(
                f,
                "epochs[{epoch}]: need 0 < t_start < t_end, got t_start={t_start:e}, t_end={t_end:e}"
            ),
            Violation::BadLaw { epoch, reason } => write!(f, "epochs[{epoch}]: {reason}"),
            Violation::MissingInitialRadius => write!(
                f,
                "initial_radius: a positive value is required when the first epoch is inflation"
            ),
            Violation::Gap { before, after, gap } => write!(
                f,
                "epochs[{before}]/epochs[{after}]: gap of {gap:e} s between t_end and t_start"
            ),
            Violation::Overlap {
                before,
                after,
                overlap,
            } => write!(
                f,
                "epochs[{before}]/epochs[{after}]: overlap of {overlap:e} s between t_end and t_start"
            ),
            Violation::Discontinuity {
                before,
                after,
                relative_mismatch,
            } => write!(
                f,
                "epochs[{before}]/epochs[{after}]: radius discontinuous at junction (relative mismatch {relative_mismatch:e})"
            ),
            Violation::NonPositiveRadius { epoch, radius } => {
                write!(f, "epochs[{epoch}]: radius {radius:e} m is not positive")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Timeline {
    epochs: Vec<Epoch>,
    initial_radius: Option<f64>,
    /// Radius at each epoch's `t_start`, resolved left to right.
    start_radii: Vec<f64>,
}

impl Timeline {
    /// Builds and validates a timeline.
    pub fn new(epochs: Vec<Epoch>, initial_radius: Option<f64>) -> Result<Self> {
        let timeline = Self::new_unchecked(epochs, initial_radius);
        let violations = timeline.validate();
        if violations.is_empty() {
            Ok(timeline)
        } else {
            Err(Error::InvalidTimeline(violations))
        }
    }

    /// Builds a timeline without checking any invariant. Evaluation of a
    /// timeline that would fail [`Timeline::validate`] is unspecified.
    pub fn new_unchecked(epochs: Vec<Epoch>, initial_radius: Option<f64>) -> Self {
        let mut start_radii = Vec::with_capacity(epochs.len());
        let mut previous: Option<(&Epoch, f64)> = None;
        for epoch in &epochs {
            let start = match epoch.law {
                Law::PowerLaw { .. } => epoch.radius(epoch.t_start, f64::NAN),
                Law::Inflation { .. } => match previous {
                    Some((prev, prev_start)) => prev.radius(prev.t_end, prev_start),
                    None => initial_radius.unwrap_or(f64::NAN),
                },
            };
            start_radii.push(start);
            previous = Some((epoch, start));
        }
        Timeline {
            epochs,
            initial_radius,
            start_radii,
        }
    }

    /// A single epoch of constant radius on `[t_start, t_end]`.
    pub fn constant(radius: f64, t_start: f64, t_end: f64) -> Result<Self> {
        Self::new(vec![Epoch::power_law(t_start, t_end, radius, 0.0)], None)
    }

    /// Radiation-era expansion `l = K sqrt(t)` on `[t_start, t_end]`.
    pub fn radiation(coefficient: f64, t_start: f64, t_end: f64) -> Result<Self> {
        Self::new(
            vec![Epoch::power_law(t_start, t_end, coefficient, 0.5)],
            None,
        )
    }

    pub fn epochs(&self) -> &[Epoch] {
        &self.epochs
    }

    pub fn initial_radius(&self) -> Option<f64> {
        self.initial_radius
    }

    /// `(t_start of first epoch, t_end of last epoch)`.
    pub fn domain(&self) -> (f64, f64) {
        match (self.epochs.first(), self.epochs.last()) {
            (Some(first), Some(last)) => (first.t_start, last.t_end),
            _ => (f64::NAN, f64::NAN),
        }
    }

    /// Radius of epoch `index` at its own `t_end`.
    fn end_radius(&self, index: usize) -> f64 {
        let epoch = &self.epochs[index];
        epoch.radius(epoch.t_end, self.start_radii[index])
    }

    pub fn radius_at(&self, t: f64) -> Result<f64> {
        let (lo, hi) = self.domain();
        if !(t >= lo && t <= hi) {
            return Err(Error::OutOfDomain { t, lo, hi });
        }
        let index = self
            .epochs
            .partition_point(|e| e.t_end < t)
            .min(self.epochs.len() - 1);
        Ok(self.epochs[index].radius(t, self.start_radii[index]))
    }

    /// Every broken invariant; empty when the timeline is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        if self.epochs.is_empty() {
            out.push(Violation::Empty);
            return out;
        }

        let mut structurally_sound = true;
        for (i, epoch) in self.epochs.iter().enumerate() {
            let interval_ok = epoch.t_start.is_finite()
                && epoch.t_end.is_finite()
                && epoch.t_start > 0.0
                && epoch.t_start < epoch.t_end;
            if !interval_ok {
                structurally_sound = false;
                out.push(Violation::BadInterval {
                    epoch: i,
                    t_start: epoch.t_start,
                    t_end: epoch.t_end,
                });
            }
            if let Some(reason) = epoch.law_problem() {
                structurally_sound = false;
                out.push(Violation::BadLaw { epoch: i, reason });
            }
        }

        if matches!(self.epochs[0].law, Law::Inflation { .. })
            && !self
                .initial_radius
                .is_some_and(|r| r.is_finite() && r > 0.0)
        {
            out.push(Violation::MissingInitialRadius);
            structurally_sound = false;
        }

        for (i, pair) in self.epochs.windows(2).enumerate() {
            let (a, b) = (&pair[0], &pair[1]);
            if a.t_end < b.t_start {
                out.push(Violation::Gap {
                    before: i,
                    after: i + 1,
                    gap: b.t_start - a.t_end,
                });
            } else if a.t_end > b.t_start {
                out.push(Violation::Overlap {
                    before: i,
                    after: i + 1,
                    overlap: a.t_end - b.t_start,
                });
            }
        }

        if !structurally_sound {
            return out;
        }

        for i in 0..self.epochs.len() {
            let start = self.start_radii[i];
            let end = self.end_radius(i);
            if let Some(&radius) = [start, end].iter().find(|r| !(r.is_finite() && **r > 0.0)) {
                out.push(Violation::NonPositiveRadius { epoch: i, radius });
            }
        }

        for i in 0..self.epochs.len().saturating_sub(1) {
            let end = self.end_radius(i);
            let next_start = self.start_radii[i + 1];
            let mismatch = ((next_start - end) / end).abs();
            if !(mismatch <= CONTINUITY_TOLERANCE) {
                out.push(Violation::Discontinuity {
                    before: i,
                    after: i + 1,
                    relative_mismatch: mismatch,
                });
            }
        }
        out
    }
}

/// `l1 * e^C`, the radius at the end of `efolds` e-folds of growth.
pub fn inflation_endpoint(l1: f64, efolds: f64) -> f64 {
    l1 * efolds.exp()
}
