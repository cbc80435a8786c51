//! Information-capacity bounds on a universe's ability to record its own
//! clock ticks.
//!
//! The capacity of a sphere of radius `l` is taken as `2^(pi l^2 / l_p^2)`
//! distinguishable states (the Bekenstein bound, counted in base 2). A clock
//! that has ticked `t / dt` times can only be recorded if the capacity is at
//! least that large. Everything is compared as base-2 logarithms.
//!
//! * [`constants`]: CODATA and order-of-magnitude constant sets.
//! * [`expansion`]: piecewise radius history `l(t)`.
//! * [`capacity`]: log2 state counts.
//! * [`ticks`]: Planck and Margolus-Levitin tick models.
//! * [`feasibility`]: margins, crossing search, minimal radius and e-folds.
//! * [`sweep`]: parallel parameter sweeps.
//! * [`cli`]: the `universal-clock` command line.

// `!(x > 0.0)` style guards are used so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod capacity;
pub mod cli;
pub mod config;
pub mod constants;
pub mod error;
pub mod expansion;
pub mod feasibility;
pub mod grid;
pub mod roots;
pub mod sweep;
pub mod ticks;

pub use capacity::{compare, log2_capacity, LogCount};
pub use constants::{constant_set, ConstantSet, ConstantSetName};
pub use error::{Error, Result};
pub use expansion::{inflation_endpoint, Epoch, Law, Timeline, Violation};
pub use feasibility::{
    entropy_monotone, find_crossings, margin, margin_at_radius, min_efolds,
    min_radius_for_feasibility, Crossing, Direction, FeasibilityReport, MinRadius,
};
pub use ticks::{log2_tick_count, tick_interval, TickModel};
