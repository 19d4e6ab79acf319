//! Extremally entangled two-mode states at fixed global and marginal
//! purities, and the classification of the purity space.
//!
//! At fixed `(μ₁, μ₂, μ)` the smallest PT eigenvalue `ν̃₋` is strictly
//! increasing in the seralian `Δ`, so the states saturating the lower
//! `Δ` bound are maximally entangled (GMEMS, nonsymmetric squeezed
//! thermal states) and those saturating the upper bound are minimally
//! entangled (GLEMS, partial minimum-uncertainty states with spectrum
//! `ν₋ = 1, ν₊ = 1/μ`). Their negativities bound the entanglement of
//! every state with the same purities and define the average-negativity
//! estimator.

use alloc::format;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::two_mode::{delta_lower, max_global_purity, StandardForm, TwoModeInvariants};
use crate::util::clamped_sqrt;

/// Entanglement character of the purity triple `(μ₁, μ₂, μ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    Unphysical,
    /// `μ ≤ μ₁μ₂/(μ₁+μ₂-μ₁μ₂)`: all states separable.
    Separable,
    /// Narrow band where both separable and entangled states exist.
    Coexistence,
    /// `μ > μ₁μ₂/sqrt(μ₁²+μ₂²-μ₁²μ₂²)`: only entangled states.
    Entangled,
}

impl Region {
    pub fn as_str(&self) -> &'static str {
        match self {
            Region::Unphysical => "unphysical",
            Region::Separable => "separable",
            Region::Coexistence => "coexistence",
            Region::Entangled => "entangled",
        }
    }
}

impl core::fmt::Display for Region {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The `μ` thresholds separating the regions, at fixed marginals.
/// Ordering: `product ≤ separable ≤ coexistence ≤ max_purity ≤ 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Thresholds {
    /// `μ₁μ₂`: at it, product states; below it, unphysical.
    pub product: f64,
    /// Separable/coexistence boundary `μ₁μ₂/(μ₁+μ₂-μ₁μ₂)`.
    pub separable: f64,
    /// Coexistence/entangled boundary `μ₁μ₂/sqrt(μ₁²+μ₂²-μ₁²μ₂²)`.
    pub coexistence: f64,
    /// Largest physical global purity `μ₁μ₂/(μ₁μ₂+|μ₁-μ₂|)`.
    pub max_purity: f64,
}

/// Classification result: region tag plus the thresholds it was read off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Classification {
    pub region: Region,
    pub thresholds: Thresholds,
}

/// Classifies a purity triple. Total function: invalid marginals or a
/// global purity outside the physical window report `Unphysical`.
/// Boundaries are closed on the separable and coexistence upper edges.
pub fn classify(mu1: f64, mu2: f64, mu: f64) -> Classification {
    let p = mu1 * mu2;
    let thresholds = Thresholds {
        product: p,
        separable: p / (mu1 + mu2 - p),
        coexistence: p / (mu1 * mu1 + mu2 * mu2 - p * p).sqrt(),
        max_purity: max_global_purity(mu1, mu2),
    };
    let marginals_ok =
        mu1 > 0.0 && mu2 > 0.0 && mu1 <= 1.0 + 1e-9 && mu2 <= 1.0 + 1e-9 && mu > 0.0;
    let region = if !marginals_ok || mu < p || mu > thresholds.max_purity {
        Region::Unphysical
    } else if mu <= thresholds.separable {
        Region::Separable
    } else if mu <= thresholds.coexistence {
        Region::Coexistence
    } else {
        Region::Entangled
    };
    Classification { region, thresholds }
}

/// A two-mode squeezed thermal state `S_r (ν₋ ⊕ ν₊) S_r†`: the GMEMS
/// family. `standard_form` realizes it as covariances
/// `a = ν₋cosh²r + ν₊sinh²r`, `b = ν₋sinh²r + ν₊cosh²r`,
/// `c± = ±((ν₋+ν₊)/2)·sinh 2r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SqueezedThermalParams {
    pub nu_minus: f64,
    pub nu_plus: f64,
    pub r: f64,
}

impl SqueezedThermalParams {
    pub fn standard_form(&self) -> Result<StandardForm> {
        let (ch, sh) = (self.r.cosh(), self.r.sinh());
        let (ch2, sh2) = (ch * ch, sh * sh);
        let c = 0.5 * (self.nu_minus + self.nu_plus) * (2.0 * self.r).sinh();
        StandardForm::new(
            self.nu_minus * ch2 + self.nu_plus * sh2,
            self.nu_minus * sh2 + self.nu_plus * ch2,
            c,
            -c,
        )
    }
}

/// Gaussian maximally entangled states for fixed global and marginal
/// purities: the squeezed thermal states saturating the lower seralian
/// bound. Returns the standard form (marginals in input order) together
/// with the squeezing parameter and symplectic spectrum.
pub fn gmems(mu1: f64, mu2: f64, mu: f64) -> Result<(StandardForm, SqueezedThermalParams)> {
    ensure_physical_triple(mu1, mu2, mu)?;
    let inv = TwoModeInvariants::new(mu1, mu2, mu, delta_lower(mu1, mu2, mu))?;
    let sf = inv.standard_form()?;

    let p = mu1 * mu2;
    let tanh_2r = 2.0 * clamped_sqrt(p - p * p / mu, 1.0, "GMEMS squeezing")? / (mu1 + mu2);
    let r = 0.5 * tanh_2r.min(1.0 - 1e-15).atanh();
    let diff2 = (1.0 / mu1 - 1.0 / mu2) * (1.0 / mu1 - 1.0 / mu2);
    let root = clamped_sqrt(diff2 + 4.0 / mu, 4.0 / mu, "GMEMS spectrum")?;
    let half_diff = 0.5 * (mu1 - mu2).abs() / p;
    let nu_minus = clamped_sqrt(1.0 / mu + 0.5 * diff2 - half_diff * root, 1.0, "GMEMS nu-")?;
    let nu_plus = (1.0 / mu + 0.5 * diff2 + half_diff * root).sqrt();
    Ok((sf, SqueezedThermalParams { nu_minus, nu_plus, r }))
}

/// Gaussian least entangled states for fixed global and marginal
/// purities: partial minimum-uncertainty states with `Δ = 1 + 1/μ²` and
/// symplectic spectrum `(1, 1/μ)`.
///
/// Such a state exists only for `μ ≥ μ₁μ₂/(μ₁+μ₂-μ₁μ₂)` (outside the
/// separable interior, where every state is equally unentangled); below
/// that the required seralian violates positivity and an error is
/// returned.
pub fn glems(mu1: f64, mu2: f64, mu: f64) -> Result<StandardForm> {
    ensure_physical_triple(mu1, mu2, mu)?;
    let inv = TwoModeInvariants::new(mu1, mu2, mu, 1.0 + 1.0 / (mu * mu)).map_err(|_| {
        Error::UnphysicalState(format!(
            "no state with seralian 1 + 1/mu^2 exists at (mu1={mu1}, mu2={mu2}, mu={mu}); \
             the triple lies inside the separable region"
        ))
    })?;
    inv.standard_form()
}

/// Closed-form extremal negativities at fixed purities.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NegativityBounds {
    pub e_min: f64,
    pub e_max: f64,
}

/// `E_max` attained by GMEMS and `E_min` attained by GLEMS, both clamped
/// at zero (inside the separable region every state has `E_N = 0`).
pub fn negativity_bounds(mu1: f64, mu2: f64, mu: f64) -> Result<NegativityBounds> {
    ensure_physical_triple(mu1, mu2, mu)?;
    let e_max = (-0.5 * gmems_nu_tilde_sq(mu1, mu2, mu)?.ln()).max(0.0);
    if e_max == 0.0 {
        return Ok(NegativityBounds { e_min: 0.0, e_max: 0.0 });
    }
    let e_min = (-0.5 * glems_nu_tilde_sq(mu1, mu2, mu)?.ln()).max(0.0);
    Ok(NegativityBounds { e_min, e_max })
}

/// `ν̃₋²` of the GMEMS, in a cancellation-free form.
fn gmems_nu_tilde_sq(mu1: f64, mu2: f64, mu: f64) -> Result<f64> {
    let p = mu1 * mu2;
    let s = mu1 + mu2;
    let root = clamped_sqrt(s * s - 4.0 * p * p / mu, s * s, "GMEMS PT eigenvalue")?;
    Ok((s - root) / (mu * (s + root)))
}

/// `ν̃₋²` of the GLEMS, in a cancellation-free form.
fn glems_nu_tilde_sq(mu1: f64, mu2: f64, mu: f64) -> Result<f64> {
    let d = 1.0 / (mu1 * mu1) + 1.0 / (mu2 * mu2) - 0.5 / (mu * mu) - 0.5;
    let root = clamped_sqrt(d * d - 1.0 / (mu * mu), d * d, "GLEMS PT eigenvalue")?;
    Ok(1.0 / (mu * mu * (d + root)))
}

/// Midpoint estimator of the entanglement from purities alone.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AverageNegativity {
    /// `Ē = (E_max + E_min)/2`.
    pub e_bar: f64,
    /// `δĒ = (E_max - E_min)/(E_max + E_min)`, in `[0, 1]`.
    pub relative_error: f64,
}

/// Average logarithmic negativity and its relative error. Fails with
/// [`Error::DegenerateRegion`] when both bounds vanish (separable
/// region), where the relative error is undefined.
pub fn average_negativity(mu1: f64, mu2: f64, mu: f64) -> Result<AverageNegativity> {
    let bounds = negativity_bounds(mu1, mu2, mu)?;
    let sum = bounds.e_max + bounds.e_min;
    if sum <= 0.0 {
        return Err(Error::DegenerateRegion);
    }
    Ok(AverageNegativity {
        e_bar: 0.5 * sum,
        relative_error: (bounds.e_max - bounds.e_min) / sum,
    })
}

/// Most entangled states at fixed marginals alone: maximal global purity
/// `μ^max = μ₁μ₂/(μ₁μ₂+|μ₁-μ₂|)`, where the seralian window collapses to
/// a point and the state is unique.
pub fn memms_frontier(mu1: f64, mu2: f64) -> Result<TwoModeInvariants> {
    if !(mu1 > 0.0 && mu2 > 0.0 && mu1 <= 1.0 + 1e-9 && mu2 <= 1.0 + 1e-9) {
        return Err(Error::UnphysicalState(format!(
            "marginal purities ({mu1}, {mu2}) outside (0, 1]"
        )));
    }
    let mu = max_global_purity(mu1, mu2);
    TwoModeInvariants::new(mu1, mu2, mu, delta_lower(mu1, mu2, mu))
}

fn ensure_physical_triple(mu1: f64, mu2: f64, mu: f64) -> Result<()> {
    if classify(mu1, mu2, mu).region == Region::Unphysical {
        return Err(Error::UnphysicalState(format!(
            "purities (mu1={mu1}, mu2={mu2}, mu={mu}) do not admit a physical state"
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::two_mode::delta_upper;

    #[test]
    fn classify_examples() {
        assert_eq!(classify(0.5, 0.5, 0.2).region, Region::Unphysical);
        assert_eq!(classify(0.5, 0.5, 0.3).region, Region::Separable);
        assert_eq!(classify(0.5, 0.5, 0.35).region, Region::Coexistence);
        assert_eq!(classify(0.5, 0.5, 0.5).region, Region::Entangled);
        assert_eq!(classify(1.2, 0.5, 0.5).region, Region::Unphysical);

        let t = classify(0.5, 0.5, 0.35).thresholds;
        assert!((t.separable - 1.0 / 3.0).abs() < 1e-12);
        assert!((t.coexistence - 0.25 / 0.4375f64.sqrt()).abs() < 1e-12);
        assert!((t.max_purity - 1.0).abs() < 1e-12);
    }

    #[test]
    fn thresholds_are_ordered() {
        for &(m1, m2) in &[(0.3, 0.9), (0.5, 0.5), (0.05, 0.98), (1.0, 0.4)] {
            let t = classify(m1, m2, 0.5).thresholds;
            assert!(t.product <= t.separable + 1e-15);
            assert!(t.separable <= t.coexistence + 1e-15);
            assert!(t.coexistence <= t.max_purity + 1e-15);
            assert!(t.max_purity <= 1.0 + 1e-15);
        }
    }

    #[test]
    fn boundary_memberships_are_closed() {
        let t = classify(0.6, 0.8, 0.5).thresholds;
        assert_eq!(classify(0.6, 0.8, t.separable).region, Region::Separable);
        assert_eq!(classify(0.6, 0.8, t.coexistence).region, Region::Coexistence);
        assert_eq!(classify(0.6, 0.8, t.product).region, Region::Separable);
        assert_eq!(classify(0.6, 0.8, t.max_purity).region, Region::Entangled);
    }

    #[test]
    fn gmems_symmetric_example() {
        let (sf, params) = gmems(0.8, 0.8, 0.9).unwrap();
        // tanh 2r = sqrt(1 - mu_i^2/mu) for symmetric marginals
        let expected = (1.0f64 - 0.64 / 0.9).sqrt();
        assert!(((2.0 * params.r).tanh() - expected).abs() < 1e-12);
        assert!((params.r - 0.3003052549949).abs() < 1e-10, "r = {}", params.r);
        // seralian saturates its lower bound
        let inv = sf.invariants().unwrap();
        assert!((inv.delta() - delta_lower(0.8, 0.8, 0.9)).abs() < 1e-8);
        assert!((inv.mu1() - 0.8).abs() < 1e-9);
        assert!((inv.mu() - 0.9).abs() < 1e-9);
    }

    #[test]
    fn gmems_at_product_boundary_is_thermal() {
        let (sf, params) = gmems(0.5, 0.25, 0.125).unwrap();
        assert!(params.r.abs() < 1e-7);
        assert!(sf.c_plus().abs() < 1e-6);
        // spectrum of a thermal product: min and max of (1/mu1, 1/mu2)
        assert!((params.nu_minus - 2.0).abs() < 1e-9);
        assert!((params.nu_plus - 4.0).abs() < 1e-9);
    }

    #[test]
    fn gmems_params_reproduce_purities() {
        for &(m1, m2, mu) in &[(0.8, 0.6, 0.7), (0.4, 0.9, 0.41), (0.7, 0.7, 0.8)] {
            let (_, params) = gmems(m1, m2, mu).unwrap();
            let sf = params.standard_form().unwrap();
            let inv = sf.invariants().unwrap();
            // Eq. 12 assigns the smaller diagonal to mode 1
            let (hi, lo) = if m1 >= m2 { (m1, m2) } else { (m2, m1) };
            assert!((inv.mu1() - hi).abs() < 1e-8, "{:?}", (m1, m2, mu));
            assert!((inv.mu2() - lo).abs() < 1e-8);
            assert!((inv.mu() - mu).abs() < 1e-8);
            assert!((inv.delta() - delta_lower(m1, m2, mu)).abs() < 1e-8);
        }
    }

    #[test]
    fn glems_examples() {
        // pure limit: vacuum
        let sf = glems(1.0, 1.0, 1.0).unwrap();
        assert!((sf.a() - 1.0).abs() < 1e-9 && sf.c_plus().abs() < 1e-6);

        // defining relation Delta = 1 + 1/mu^2
        let sf = glems(0.5, 0.6, 0.4).unwrap();
        let inv = sf.invariants().unwrap();
        assert!((inv.delta() - 7.25).abs() < 1e-9);

        // symplectic spectrum (1, 1/mu) via the invariant route
        let inv = glems(0.8, 0.8, 0.9).unwrap().invariants().unwrap();
        let (lo, hi) = inv.symplectic_eigs().unwrap();
        assert!((lo - 1.0).abs() < 1e-8);
        assert!((hi - 1.0 / 0.9).abs() < 1e-8);
    }

    #[test]
    fn glems_unavailable_in_separable_interior() {
        assert!(matches!(
            glems(0.5, 0.5, 0.3),
            Err(Error::UnphysicalState(_))
        ));
    }

    #[test]
    fn bounds_examples() {
        let b = negativity_bounds(0.5, 0.5, 0.3).unwrap();
        assert_eq!((b.e_min, b.e_max), (0.0, 0.0));

        // bounds equal the negativities of the constructed extremal states
        let b = negativity_bounds(0.8, 0.8, 0.9).unwrap();
        let (sf, _) = gmems(0.8, 0.8, 0.9).unwrap();
        let e_gmems = sf.invariants().unwrap().negativity().unwrap();
        let e_glems = glems(0.8, 0.8, 0.9)
            .unwrap()
            .invariants()
            .unwrap()
            .negativity()
            .unwrap();
        assert!((b.e_max - e_gmems).abs() < 1e-9);
        assert!((b.e_min - e_glems).abs() < 1e-9);
        assert!(b.e_min <= b.e_max && b.e_min > 0.0);
    }

    #[test]
    fn bounds_coincide_for_pure_states() {
        for mu_i in [0.9, 0.6, 0.3] {
            let b = negativity_bounds(mu_i, mu_i, 1.0).unwrap();
            assert!((b.e_max - b.e_min).abs() < 1e-9, "mu_i = {mu_i}");
        }
    }

    #[test]
    fn average_negativity_examples() {
        let avg = average_negativity(0.8, 0.8, 0.9).unwrap();
        let b = negativity_bounds(0.8, 0.8, 0.9).unwrap();
        assert!((avg.e_bar - 0.5 * (b.e_min + b.e_max)).abs() < 1e-12);
        assert!(avg.relative_error >= 0.0 && avg.relative_error <= 1.0);

        assert!(matches!(
            average_negativity(0.5, 0.5, 0.3),
            Err(Error::DegenerateRegion)
        ));

        // pure state: bounds coincide, zero relative error
        let avg = average_negativity(0.6, 0.6, 1.0).unwrap();
        assert!(avg.relative_error < 1e-8);
    }

    #[test]
    fn memms_frontier_examples() {
        // equal marginals: pure states
        let inv = memms_frontier(0.7, 0.7).unwrap();
        assert!((inv.mu() - 1.0).abs() < 1e-12);

        let inv = memms_frontier(0.5, 0.25).unwrap();
        assert!((inv.mu() - 1.0 / 3.0).abs() < 1e-12);

        // seralian window collapses at the frontier
        for &(m1, m2) in &[(0.9, 0.3), (0.5, 0.25), (0.8, 0.75)] {
            let mu = max_global_purity(m1, m2);
            let gap = delta_upper(m1, m2, mu) - delta_lower(m1, m2, mu);
            assert!(gap.abs() < 1e-9, "gap = {gap} at ({m1}, {m2})");
        }
    }
}
