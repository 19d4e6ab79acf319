//! Error type shared by all modules of the crate.

use alloc::string::String;

/// Errors reported by covariance-matrix and invariant computations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A matrix that should be symmetric is not, beyond tolerance.
    #[error("matrix is not symmetric (max |m_ij - m_ji| = {max_asymmetry:.3e})")]
    NotSymmetric { max_asymmetry: f64 },

    /// Matrix dimension does not match the declared number of modes.
    #[error("matrix dimension {dim} does not match {n_modes} modes (expected {})", 2 * n_modes)]
    DimensionMismatch { dim: usize, n_modes: usize },

    /// The eigenvalue moduli of `Ωσ` could not be grouped into doubly
    /// degenerate pairs. Signals a numerically degenerate or invalid input.
    #[error("cannot pair eigenvalue moduli at position {index} (gap {gap:.3e})")]
    PairingFailure { index: usize, gap: f64 },

    /// A mode index is outside `0..n_modes`.
    #[error("mode index {index} out of range for {n_modes} modes")]
    IndexOutOfRange { index: usize, n_modes: usize },

    /// The input does not describe (or cannot be extended to) a physical
    /// Gaussian state.
    #[error("unphysical state: {0}")]
    UnphysicalState(String),

    /// An argument lies outside the domain of the requested function.
    #[error("domain error: {0}")]
    Domain(String),

    /// A target value lies outside its attainable range.
    #[error("value {value} outside attainable range [{lo}, {hi}]")]
    OutOfRange { value: f64, lo: f64, hi: f64 },

    /// A root-finding scan found no bracket in the physical interval.
    #[error("no solution found in the physical interval")]
    NoSolution,

    /// Rejection sampling hit its retry limit; the requested region is
    /// empty or nearly empty.
    #[error("sampling exhausted after {attempts} rejections")]
    SamplingExhausted { attempts: u64 },

    /// Both negativity bounds vanish, so the relative error is undefined.
    #[error("degenerate region: both negativity bounds vanish")]
    DegenerateRegion,
}

pub type Result<T> = core::result::Result<T, Error>;
