//! Bekenstein-bounded state counts in base-2 log domain.

use std::cmp::Ordering;
use std::fmt;

use crate::constants::ConstantSet;
use crate::error::{Error, Result};

/// Base-2 logarithm of a non-negative count.
///
/// The count itself is never formed; a zero count is represented by
/// `log2 = -inf`. NaN and `+inf` are not valid values.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogCount(f64);

impl LogCount {
    pub const ZERO_COUNT: LogCount = LogCount(f64::NEG_INFINITY);
    pub const ONE: LogCount = LogCount(0.0);

    /// Wraps a base-2 logarithm. `-inf` is accepted as the zero count.
    pub fn from_log2(log2_value: f64) -> Result<Self> {
        if log2_value.is_nan() {
            Err(Error::InvalidArgument("log2 count is NaN".into()))
        } else if log2_value == f64::INFINITY {
            Err(Error::Overflow(log2_value))
        } else {
            Ok(LogCount(log2_value))
        }
    }

    /// Log of an ordinary count. Negative counts are rejected.
    pub fn from_count(count: f64) -> Result<Self> {
        if !(count >= 0.0) || count.is_infinite() {
            return Err(Error::InvalidArgument(format!(
                "count must be finite and >= 0, got {count}"
            )));
        }
        Self::from_log2(count.log2())
    }

    pub fn log2(self) -> f64 {
        self.0
    }

    pub fn is_zero_count(self) -> bool {
        self.0 == f64::NEG_INFINITY
    }

    /// Materializes the count. Only meaningful when it fits in an `f64`.
    pub fn to_count(self) -> f64 {
        self.0.exp2()
    }
}

impl Eq for LogCount {}

impl PartialOrd for LogCount {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LogCount {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.total_cmp(&other.0)
    }
}

impl fmt::Display for LogCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero_count() {
            f.write_str("log2(0)")
        } else {
            write!(f, "2^{}", self.0)
        }
    }
}

/// Ordering of the underlying counts.
pub fn compare(a: LogCount, b: LogCount) -> Ordering {
    a.cmp(&b)
}

/// `S_BH / k_B = pi (l / l_p)^2` for a sphere of radius `l`.
pub fn bekenstein_entropy_over_kb(l: f64, constants: &ConstantSet) -> f64 {
    let y = l / constants.l_p;
    std::f64::consts::PI * y * y
}

/// Maximum number of distinguishable states, `2^(S_BH / k_B)`, as a log2.
pub fn log2_capacity(l: f64, constants: &ConstantSet) -> Result<LogCount> {
    if !(l > 0.0) {
        return Err(Error::InvalidArgument(format!(
            "radius must be > 0, got {l}"
        )));
    }
    let bits = bekenstein_entropy_over_kb(l, constants);
    if bits.is_infinite() {
        return Err(Error::Overflow(l));
    }
    LogCount::from_log2(bits)
}
