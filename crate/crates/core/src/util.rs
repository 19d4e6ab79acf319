//! Small numeric helpers shared across modules.

use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};

/// Inclusive linear grid with `n ≥ 1` points (`n == 1` yields `[a]`).
pub(crate) fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 1);
    if n == 1 {
        return alloc::vec![a];
    }
    let step = (b - a) / (n - 1) as f64;
    (0..n)
        .map(|k| if k == n - 1 { b } else { a + step * k as f64 })
        .collect()
}

/// Square root of a radicand that is non-negative up to rounding.
///
/// Radicands within `-tol·scale` of zero are clamped to zero (boundary
/// states sit exactly on the branch point); anything more negative is an
/// error, since it signals a genuinely unphysical input.
pub(crate) fn clamped_sqrt(rad: f64, scale: f64, what: &str) -> Result<f64> {
    const TOL: f64 = 1e-9;
    if rad < -TOL * scale.max(1.0) {
        return Err(Error::UnphysicalState(alloc::format!(
            "negative radicand {rad:.3e} in {what}"
        )));
    }
    Ok(rad.max(0.0).sqrt())
}

/// Scale-aware tolerance test: `value ≥ bound` within `1e-9·max(1, |bound|)`.
pub(crate) fn ge_tol(value: f64, bound: f64) -> bool {
    value >= bound - 1e-9 * bound.abs().max(1.0)
}

/// Scale-aware tolerance test: `value ≤ bound` within `1e-9·max(1, |bound|)`.
pub(crate) fn le_tol(value: f64, bound: f64) -> bool {
    value <= bound + 1e-9 * bound.abs().max(1.0)
}
