//! Symmetric `(N+1)`-mode Gaussian states: a single mode `α` coupled
//! identically to `N` exchange-symmetric modes.
//!
//! All `2×2` blocks are taken diagonal (block standard form): the global
//! covariance matrix is
//!
//! ```text
//!      ⎛ α  γ  γ  …  γ ⎞        α = diag(a₁, a₂)
//!  σ = ⎜ γ  β  ε  …  ε ⎟        β = b·1
//!      ⎜ γ  ε  β  …  ε ⎟        ε = diag(e₁, e₂)
//!      ⎝ γ  ε  ε  …  β ⎠        γ = diag(g₁, g₂)
//! ```
//!
//! Diagonalizing the symmetric block decouples `N-1` degenerate modes at
//! `ν₋ = sqrt((b-e₁)(b-e₂))` and concentrates the whole `1×N`
//! entanglement into one equivalent two-mode state, whose invariants are
//!
//! ```text
//!  μ₁ᵉᑫ = μ_α,   μ₂ᵉᑫ = ν₋^(N-1)·μ_β,   μᵉᑫ = ν₋^(N-1)·μ_σ,
//!  Δᵉᑫ = det α + 2N det γ + (ν₋^(N-1)·μ_β)⁻²
//! ```
//!
//! so the multimode negativity across the `1×N` split equals the
//! two-mode negativity of the equivalent state.

use alloc::format;
use alloc::vec::Vec;

use nalgebra::DMatrix;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::extremal::{average_negativity, AverageNegativity};
use crate::symplectic::{CovarianceMatrix, PHYSICALITY_TOL};
use crate::two_mode::TwoModeInvariants;
use crate::util::clamped_sqrt;

/// Block parameters of the symmetric `1×N` family. Constructor-validated:
/// the induced `(2N+2)×(2N+2)` covariance matrix is physical.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SymmetricMultimodeParams {
    a1: f64,
    a2: f64,
    b: f64,
    e1: f64,
    e2: f64,
    g1: f64,
    g2: f64,
    n: usize,
}

impl SymmetricMultimodeParams {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        a1: f64,
        a2: f64,
        b: f64,
        e1: f64,
        e2: f64,
        g1: f64,
        g2: f64,
        n: usize,
    ) -> Result<Self> {
        if n < 1 {
            return Err(Error::Domain(format!("need n >= 1 symmetric modes")));
        }
        let params = Self { a1, a2, b, e1, e2, g1, g2, n };
        params.validate()?;
        Ok(params)
    }

    /// Exact closed-form physicality test. Under the orthogonal
    /// symmetric/difference transform the state splits into `N-1` thermal
    /// modes at `ν₋` plus an effective two-mode state, so physicality is
    /// `ν₋ ≥ 1` together with physicality of that 4×4 block.
    fn validate(&self) -> Result<()> {
        let tol = PHYSICALITY_TOL;
        if self.a1 <= 0.0 || self.a2 <= 0.0 || self.a1 * self.a2 < (1.0 - tol) * (1.0 - tol) {
            return Err(Error::UnphysicalState(format!(
                "mode alpha (a1={}, a2={}) below vacuum",
                self.a1, self.a2
            )));
        }
        if self.n >= 2 {
            let (d1, d2) = (self.b - self.e1, self.b - self.e2);
            if d1 <= 0.0 || d2 <= 0.0 || d1 * d2 < (1.0 - tol) * (1.0 - tol) {
                return Err(Error::UnphysicalState(format!(
                    "difference modes ((b-e1)(b-e2) = {}) below vacuum",
                    d1 * d2
                )));
            }
        }
        let (big1, big2) = self.collective_eigs();
        if big1 <= 0.0 || big2 <= 0.0 || big1 * big2 < (1.0 - tol) * (1.0 - tol) {
            return Err(Error::UnphysicalState(format!(
                "collective mode (B1={big1}, B2={big2}) below vacuum"
            )));
        }
        let nf = self.n as f64;
        let x = self.a1 * big1 - nf * self.g1 * self.g1;
        let y = self.a2 * big2 - nf * self.g2 * self.g2;
        if x <= 0.0 || y <= 0.0 {
            return Err(Error::UnphysicalState(format!(
                "coupling exceeds positivity (x={x}, y={y})"
            )));
        }
        let det_eff = x * y;
        let delta_eff = self.a1 * self.a2 + big1 * big2 + 2.0 * nf * self.g1 * self.g2;
        let rad = (delta_eff * delta_eff - 4.0 * det_eff).max(0.0);
        let nu_min_sq = 0.5 * (delta_eff - rad.sqrt());
        if nu_min_sq < (1.0 - tol) * (1.0 - tol) {
            return Err(Error::UnphysicalState(format!(
                "effective two-mode block violates uncertainty (nu_min^2 = {nu_min_sq})"
            )));
        }
        Ok(())
    }

    /// Quadrature eigenvalues of the collective symmetric mode:
    /// `B_i = b + (N-1)e_i`.
    fn collective_eigs(&self) -> (f64, f64) {
        let k = (self.n - 1) as f64;
        (self.b + k * self.e1, self.b + k * self.e2)
    }

    pub fn a1(&self) -> f64 {
        self.a1
    }

    pub fn a2(&self) -> f64 {
        self.a2
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn e1(&self) -> f64 {
        self.e1
    }

    pub fn e2(&self) -> f64 {
        self.e2
    }

    pub fn g1(&self) -> f64 {
        self.g1
    }

    pub fn g2(&self) -> f64 {
        self.g2
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Assembles the explicit `(N+1)`-mode covariance matrix (mode 0 is
    /// `α`) and re-checks physicality on the full matrix.
    pub fn to_cm(&self) -> Result<CovarianceMatrix> {
        let n_modes = self.n + 1;
        let mut m = DMatrix::zeros(2 * n_modes, 2 * n_modes);
        m[(0, 0)] = self.a1;
        m[(1, 1)] = self.a2;
        for i in 1..n_modes {
            m[(2 * i, 2 * i)] = self.b;
            m[(2 * i + 1, 2 * i + 1)] = self.b;
            m[(0, 2 * i)] = self.g1;
            m[(2 * i, 0)] = self.g1;
            m[(1, 2 * i + 1)] = self.g2;
            m[(2 * i + 1, 1)] = self.g2;
            for j in (i + 1)..n_modes {
                m[(2 * i, 2 * j)] = self.e1;
                m[(2 * j, 2 * i)] = self.e1;
                m[(2 * i + 1, 2 * j + 1)] = self.e2;
                m[(2 * j + 1, 2 * i + 1)] = self.e2;
            }
        }
        let cm = CovarianceMatrix::from_parts_unchecked(n_modes, m);
        if !cm.check_physical(PHYSICALITY_TOL) {
            return Err(Error::UnphysicalState(format!(
                "assembled symmetric multimode matrix failed the physicality check"
            )));
        }
        Ok(cm)
    }
}

/// Williamson spectrum of the `N`-mode symmetric block: the
/// `(N-1)`-fold degenerate `ν₋ = sqrt((b-e₁)(b-e₂))` and the collective
/// `ν₊⁽ᴺ⁾ = sqrt((b+(N-1)e₁)(b+(N-1)e₂))`.
pub fn symmetric_block_spectrum(b: f64, e1: f64, e2: f64, n: usize) -> Result<(f64, f64)> {
    if n < 1 {
        return Err(Error::Domain(format!("need n >= 1 symmetric modes")));
    }
    let k = (n - 1) as f64;
    let nu_minus = clamped_sqrt((b - e1) * (b - e2), b * b, "degenerate block eigenvalue")?;
    let nu_plus = clamped_sqrt(
        (b + k * e1) * (b + k * e2),
        b * b,
        "collective block eigenvalue",
    )?;
    Ok((nu_minus, nu_plus))
}

/// Outcome of the unitary localization: the equivalent two-mode state
/// plus the decoupled degenerate thermal background.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LocalizedState {
    pub equivalent: TwoModeInvariants,
    pub nu_minus_block: f64,
    pub nu_plus_block: f64,
    /// Multiplicity `N-1` of `ν₋` in the decoupled background.
    pub degeneracy: usize,
}

/// Concentrates the whole `1×N` entanglement into an equivalent two-mode
/// state via the invariants of the localized picture.
pub fn localize(params: &SymmetricMultimodeParams) -> Result<LocalizedState> {
    let n = params.n();
    let (nu_minus, nu_plus) = symmetric_block_spectrum(params.b(), params.e1(), params.e2(), n)?;
    let nu_pow = nu_minus.powi(n as i32 - 1);

    let mu_alpha = 1.0 / (params.a1() * params.a2()).sqrt();
    let cm = params.to_cm()?;
    let det_sigma = cm.entries().determinant();
    if det_sigma <= 0.0 {
        return Err(Error::UnphysicalState(format!(
            "non-positive determinant {det_sigma}"
        )));
    }
    let mu_sigma = 1.0 / det_sigma.sqrt();

    let mu2_eq = 1.0 / nu_plus; // = nu_minus^(N-1) * mu_beta
    let mu_eq = nu_pow * mu_sigma;
    let delta_alpha =
        params.a1() * params.a2() + 2.0 * n as f64 * params.g1() * params.g2();
    let delta_eq = delta_alpha + nu_plus * nu_plus;

    let equivalent = TwoModeInvariants::new(mu_alpha, mu2_eq, mu_eq, delta_eq)
        .map_err(|e| Error::UnphysicalState(format!("localized invariants invalid: {e}")))?;
    Ok(LocalizedState {
        equivalent,
        nu_minus_block: nu_minus,
        nu_plus_block: nu_plus,
        degeneracy: n - 1,
    })
}

/// How to evaluate the `1×N` negativity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NegativityMethod {
    /// Partial transposition of the full covariance matrix.
    Direct,
    /// Closed form on the equivalent two-mode state.
    Localized,
    /// Purity-only estimate: average negativity of the equivalent state,
    /// discarding its seralian.
    Estimated,
}

/// Result of a `1×N` negativity evaluation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NegativityEstimate {
    Exact(f64),
    Bounded(AverageNegativity),
}

/// `1×N` logarithmic negativity between mode `α` and the symmetric block.
pub fn one_to_n_negativity(
    params: &SymmetricMultimodeParams,
    method: NegativityMethod,
) -> Result<NegativityEstimate> {
    match method {
        NegativityMethod::Direct => {
            let cm = params.to_cm()?;
            Ok(NegativityEstimate::Exact(cm.log_negativity(&[0])?))
        }
        NegativityMethod::Localized => {
            let localized = localize(params)?;
            Ok(NegativityEstimate::Exact(localized.equivalent.negativity()?))
        }
        NegativityMethod::Estimated => {
            let localized = localize(params)?;
            let inv = localized.equivalent;
            Ok(NegativityEstimate::Bounded(average_negativity(
                inv.mu1(),
                inv.mu2(),
                inv.mu(),
            )?))
        }
    }
}

/// `1×K` negativity between mode `α` and the first `K ≤ N` symmetric
/// modes, evaluated directly on the restricted covariance matrix.
pub fn one_to_k_negativity(params: &SymmetricMultimodeParams, k: usize) -> Result<f64> {
    if k < 1 || k > params.n() {
        return Err(Error::Domain(format!(
            "need 1 <= k <= {}, got k = {k}",
            params.n()
        )));
    }
    let cm = params.to_cm()?;
    let modes: Vec<usize> = (0..=k).collect();
    cm.restrict(&modes)?.log_negativity(&[0])
}
