//! Purity and generalized entropies of Gaussian states.
//!
//! Every measure here is a function of the symplectic spectrum alone:
//! `Tr ρᵖ = Π g_p(ν_i)` with the per-mode factor
//! `g_p(x) = 2ᵖ / ((x+1)ᵖ - (x-1)ᵖ)`, so purity, Tsallis, Rényi and von
//! Neumann entropies all reduce to products or sums over the `ν_i`.

use alloc::format;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::symplectic::CovarianceMatrix;

/// Per-mode trace factor `g_p(x) = 2ᵖ / ((x+1)ᵖ - (x-1)ᵖ)` for `x ≥ 1`,
/// `p > 1`. `g_p(1) = 1` (pure mode); strictly decreasing in `x`.
pub fn g_p(x: f64, p: f64) -> Result<f64> {
    if p <= 1.0 {
        return Err(Error::Domain(format!("g_p requires p > 1, got p = {p}")));
    }
    if x < 1.0 - 1e-12 {
        return Err(Error::Domain(format!("g_p requires x >= 1, got x = {x}")));
    }
    let x = x.max(1.0);
    Ok(2.0f64.powf(p) / ((x + 1.0).powf(p) - (x - 1.0).powf(p)))
}

/// Von Neumann entropy contribution of a single normal mode with
/// symplectic eigenvalue `nu ≥ 1`:
/// `f(x) = ((x+1)/2)·ln((x+1)/2) - ((x-1)/2)·ln((x-1)/2)`, `f(1) = 0`.
pub fn von_neumann_mode_entropy(nu: f64) -> f64 {
    if nu <= 1.0 {
        return 0.0;
    }
    let a = 0.5 * (nu + 1.0);
    let b = 0.5 * (nu - 1.0);
    a * a.ln() - b * b.ln()
}

/// Purity `μ = Tr ρ² = (Det σ)^(-1/2)`.
///
/// Expects a physical covariance matrix; equals `Π g_2(ν_i) = Π 1/ν_i`.
pub fn purity(cm: &CovarianceMatrix) -> f64 {
    1.0 / cm.entries().determinant().sqrt()
}

/// Tsallis entropy `S_p = (1 - Tr ρᵖ)/(p - 1)`, `p > 1`.
///
/// Zero exactly for pure states; reduces to the linear entropy `1 - μ`
/// at `p = 2`.
pub fn tsallis_entropy(cm: &CovarianceMatrix, p: f64) -> Result<f64> {
    let spec = cm.symplectic_spectrum()?;
    let mut trace_p = 1.0;
    for &nu in spec.values() {
        trace_p *= g_p(nu, p)?;
    }
    Ok((1.0 - trace_p) / (p - 1.0))
}

/// Rényi entropy `S_pᴿ = ln(Tr ρᵖ)/(1 - p)`, `p > 1`.
pub fn renyi_entropy(cm: &CovarianceMatrix, p: f64) -> Result<f64> {
    let spec = cm.symplectic_spectrum()?;
    let mut log_trace_p = 0.0;
    for &nu in spec.values() {
        log_trace_p += g_p(nu, p)?.ln();
    }
    Ok(-log_trace_p / (p - 1.0))
}

/// Von Neumann entropy `S_V = -Tr ρ ln ρ = Σ f(ν_i)`.
///
/// This is the `p → 1⁺` limit of both generalized families, evaluated in
/// closed form rather than by taking the (numerically unstable) limit.
pub fn von_neumann_entropy(cm: &CovarianceMatrix) -> Result<f64> {
    let spec = cm.symplectic_spectrum()?;
    Ok(spec.values().iter().map(|&nu| von_neumann_mode_entropy(nu)).sum())
}

/// The entropy families exposed by the CLI `entropy` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EntropyFamily {
    Purity,
    Linear,
    Tsallis,
    Renyi,
    VonNeumann,
}

/// An entropy measure selection: family plus order `p` where required.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropySpec {
    family: EntropyFamily,
    p: Option<f64>,
}

impl EntropySpec {
    /// `p` must be given and `> 1` for the Tsallis and Rényi families;
    /// it is ignored (and may be omitted) otherwise.
    pub fn new(family: EntropyFamily, p: Option<f64>) -> Result<Self> {
        match family {
            EntropyFamily::Tsallis | EntropyFamily::Renyi => match p {
                Some(p) if p > 1.0 => Ok(Self { family, p: Some(p) }),
                Some(p) => Err(Error::Domain(format!(
                    "entropy order must satisfy p > 1, got p = {p}"
                ))),
                None => Err(Error::Domain(format!(
                    "family {family:?} requires an entropy order p"
                ))),
            },
            _ => Ok(Self { family, p: None }),
        }
    }

    pub fn family(&self) -> EntropyFamily {
        self.family
    }

    pub fn p(&self) -> Option<f64> {
        self.p
    }

    pub fn evaluate(&self, cm: &CovarianceMatrix) -> Result<f64> {
        match self.family {
            EntropyFamily::Purity => Ok(purity(cm)),
            EntropyFamily::Linear => Ok(1.0 - purity(cm)),
            EntropyFamily::Tsallis => tsallis_entropy(cm, self.p.expect("validated")),
            EntropyFamily::Renyi => renyi_entropy(cm, self.p.expect("validated")),
            EntropyFamily::VonNeumann => von_neumann_entropy(cm),
        }
    }
}
