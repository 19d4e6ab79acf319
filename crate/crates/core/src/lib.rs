//! Entanglement of Gaussian states of continuous-variable systems from
//! their global and marginal degrees of information.
//!
//! A Gaussian state of `N` bosonic modes is fully described, up to
//! displacements, by its `2N×2N` covariance matrix. This crate implements
//! the symplectic-invariant machinery that classifies and bounds the
//! entanglement of such states from purities and generalized entropies:
//!
//! - [`symplectic`] — covariance matrices, the symplectic form, symplectic
//!   spectra, physicality tests, partial transposition, and the `1×K`
//!   logarithmic negativity.
//! - [`entropy`] — purity, Tsallis and Rényi `p`-entropies, and the von
//!   Neumann entropy from symplectic spectra.
//! - [`two_mode`] — the four-invariant parametrization `(μ₁, μ₂, μ, Δ)` of
//!   two-mode states, standard forms, and the closed-form negativity.
//! - [`extremal`] — classification of the purity space, GMEMS/GLEMS
//!   construction, and closed-form entanglement bounds at fixed global and
//!   marginal purities.
//! - [`entropic`] — numerical entanglement bounds at fixed Tsallis
//!   `p`-entropies, including the nodal inversion surface for `p > 2`.
//! - [`multimode`] — symmetric `(N+1)`-mode states of `1×N` form, unitary
//!   localization onto an equivalent two-mode state, and multimode
//!   negativity.
//! - [`sampler`] — seeded, reproducible random-state generation and the
//!   brute-force oracles used by the test suites.
//!
//! All quantities use natural logarithms and the vacuum-variance-1
//! convention. The crate is `no_std`-compatible (`alloc` required); the
//! default `std` feature is what the companion CLI builds against.

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod entropic;
pub mod entropy;
pub mod error;
pub mod extremal;
pub mod multimode;
pub mod sampler;
pub mod symplectic;
pub mod two_mode;

mod util;

#[cfg(test)]
pub(crate) mod testutil;

pub use error::{Error, Result};
pub use symplectic::{CovarianceMatrix, GlobalInvariants, SymplecticForm, SymplecticSpectrum};
pub use two_mode::{StandardForm, TwoModeInvariants};
