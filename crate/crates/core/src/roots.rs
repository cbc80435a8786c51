//! Bracketed bisection on a boolean predicate.

use crate::error::{Error, Result};

/// Final bracket from [`bisect`]: `predicate(lo) != predicate(hi)` and
/// `hi - lo <= tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Bracket {
    pub lo: f64,
    pub hi: f64,
}

impl Bracket {
    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }
}

const MAX_ITER: usize = 200;

/// Shrinks `[lo, hi]` around the point where `predicate` flips until the
/// bracket is no wider than `tol` (or no longer splittable in `f64`).
pub fn bisect<F>(mut lo: f64, mut hi: f64, tol: f64, mut predicate: F) -> Result<Bracket>
where
    F: FnMut(f64) -> Result<bool>,
{
    if !(lo < hi) {
        return Err(Error::InvalidArgument(format!(
            "bisection needs lo < hi, got [{lo}, {hi}]"
        )));
    }
    let at_lo = predicate(lo)?;
    if predicate(hi)? == at_lo {
        return Err(Error::NoBracket { lo, hi });
    }
    for _ in 0..MAX_ITER {
        if hi - lo <= tol {
            break;
        }
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if predicate(mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(Bracket { lo, hi })
}
