use thiserror::Error;

use crate::expansion::Violation;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown constant set `{name}` (valid: {})", crate::constants::NAMES.join(", "))]
    UnknownConstantSet { name: String },

    #[error("time {t:e} s is outside the timeline domain [{lo:e}, {hi:e}] s")]
    OutOfDomain { t: f64, lo: f64, hi: f64 },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("log2 count overflowed f64 range (input {0:e})")]
    Overflow(f64),

    #[error("invalid timeline: {}", format_violations(.0))]
    InvalidTimeline(Vec<Violation>),

    #[error("config {path}: {message}")]
    Config { path: String, message: String },

    #[error("root bracket [{lo:e}, {hi:e}] does not straddle a sign change")]
    NoBracket { lo: f64, hi: f64 },
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

pub type Result<T> = std::result::Result<T, Error>;
