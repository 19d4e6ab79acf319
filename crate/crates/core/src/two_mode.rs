//! Two-mode Gaussian states parametrized by their four symplectic
//! invariants.
//!
//! Any two-mode covariance matrix is locally equivalent to the standard
//! form
//!
//! ```text
//!         ⎛ a  0  c₊ 0 ⎞
//!  σ_sf = ⎜ 0  a  0  c₋⎟
//!         ⎜ c₊ 0  b  0 ⎟
//!         ⎝ 0  c₋ 0  b ⎠
//! ```
//!
//! and is fully characterized (up to local operations) by the marginal
//! purities `μ₁ = 1/a`, `μ₂ = 1/b`, the global purity
//! `μ = (Det σ)^(-1/2)` and the seralian `Δ = a² + b² + 2c₊c₋`. This
//! module converts between the two pictures, validates the physicality
//! window of `(μ₁, μ₂, μ, Δ)`, and evaluates the partially transposed
//! spectrum and the logarithmic negativity in closed form.
//!
//! On the physicality window: besides `μ₁μ₂ ≤ μ ≤ μ₁μ₂/(μ₁μ₂ + |μ₁-μ₂|)`,
//! the seralian must satisfy
//!
//! ```text
//!  2/μ + (μ₁-μ₂)²/(μ₁μ₂)²  ≤  Δ  ≤  min{ 1 + 1/μ², (μ₁+μ₂)²/(μ₁μ₂)² - 2/μ }
//! ```
//!
//! The second branch of the upper bound enforces positivity of the
//! covariance matrix (`|c₊c₋| ≤ ab - 1/μ`); it is the binding one exactly
//! when `μ < μ₁μ₂/(μ₁ + μ₂ - μ₁μ₂)`, i.e. inside the separable region,
//! and relaxes to the familiar `Δ ≤ 1 + 1/μ²` everywhere else.

use alloc::format;

use nalgebra::DMatrix;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};
use crate::symplectic::CovarianceMatrix;
use crate::util::{clamped_sqrt, ge_tol, le_tol};

/// Largest global purity compatible with the marginals:
/// `μ^max = μ₁μ₂/(μ₁μ₂ + |μ₁-μ₂|)`. States saturating it are the
/// maximally entangled states for fixed marginal mixedness.
pub fn max_global_purity(mu1: f64, mu2: f64) -> f64 {
    let p = mu1 * mu2;
    p / (p + (mu1 - mu2).abs())
}

/// Lower physical bound on the seralian at fixed purities.
pub fn delta_lower(mu1: f64, mu2: f64, mu: f64) -> f64 {
    let diff = 1.0 / mu1 - 1.0 / mu2;
    2.0 / mu + diff * diff
}

/// Upper physical bound on the seralian at fixed purities (see the module
/// docs for the two branches).
pub fn delta_upper(mu1: f64, mu2: f64, mu: f64) -> f64 {
    let sum = 1.0 / mu1 + 1.0 / mu2;
    (1.0 + 1.0 / (mu * mu)).min(sum * sum - 2.0 / mu)
}

/// Pass/fail record for one scalar constrained to a window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundCheck {
    pub value: f64,
    pub lower: f64,
    pub upper: f64,
    /// `value - lower`; negative means the lower bound is violated.
    pub lower_margin: f64,
    /// `upper - value`; negative means the upper bound is violated.
    pub upper_margin: f64,
    pub passed: bool,
}

impl BoundCheck {
    fn new(value: f64, lower: f64, upper: f64) -> Self {
        let passed = ge_tol(value, lower) && le_tol(value, upper);
        Self {
            value,
            lower,
            upper,
            lower_margin: value - lower,
            upper_margin: upper - value,
            passed,
        }
    }
}

/// Non-throwing physicality diagnosis of an invariant tuple.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InvariantsReport {
    pub mu1: BoundCheck,
    pub mu2: BoundCheck,
    pub mu: BoundCheck,
    pub delta: BoundCheck,
    pub physical: bool,
}

/// Reports which constraints pass or fail, with margins. Marginal purities
/// must lie in `(0, 1]`, the global purity in its window, and the seralian
/// in its window (evaluated at the given purities when those are valid).
pub fn validate_invariants(mu1: f64, mu2: f64, mu: f64, delta: f64) -> InvariantsReport {
    let chk_mu1 = BoundCheck {
        passed: mu1 > 0.0 && le_tol(mu1, 1.0),
        ..BoundCheck::new(mu1, 0.0, 1.0)
    };
    let chk_mu2 = BoundCheck {
        passed: mu2 > 0.0 && le_tol(mu2, 1.0),
        ..BoundCheck::new(mu2, 0.0, 1.0)
    };
    let marginals_ok = chk_mu1.passed && chk_mu2.passed;
    let (chk_mu, chk_delta) = if marginals_ok && mu > 0.0 {
        let chk_mu = BoundCheck::new(mu, mu1 * mu2, max_global_purity(mu1, mu2));
        let chk_delta = BoundCheck::new(
            delta,
            delta_lower(mu1, mu2, mu),
            delta_upper(mu1, mu2, mu),
        );
        (chk_mu, chk_delta)
    } else {
        // windows are meaningless without valid marginals
        let failed_mu = BoundCheck {
            passed: false,
            ..BoundCheck::new(mu, f64::NAN, f64::NAN)
        };
        let failed_delta = BoundCheck {
            passed: false,
            ..BoundCheck::new(delta, f64::NAN, f64::NAN)
        };
        (failed_mu, failed_delta)
    };
    InvariantsReport {
        mu1: chk_mu1,
        mu2: chk_mu2,
        mu: chk_mu,
        delta: chk_delta,
        physical: marginals_ok && chk_mu.passed && chk_delta.passed,
    }
}

/// The four-invariant coordinates `(μ₁, μ₂, μ, Δ)` of a physical two-mode
/// Gaussian state. Construction validates the physicality window.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoModeInvariants {
    mu1: f64,
    mu2: f64,
    mu: f64,
    delta: f64,
}

impl TwoModeInvariants {
    pub fn new(mu1: f64, mu2: f64, mu: f64, delta: f64) -> Result<Self> {
        let report = validate_invariants(mu1, mu2, mu, delta);
        if !report.physical {
            return Err(Error::UnphysicalState(format!(
                "invariants (mu1={mu1}, mu2={mu2}, mu={mu}, delta={delta}) violate the physicality window"
            )));
        }
        Ok(Self { mu1, mu2, mu, delta })
    }

    /// Extracts the invariants from an explicit two-mode covariance matrix
    /// (not necessarily in standard form).
    pub fn from_cm(cm: &CovarianceMatrix) -> Result<Self> {
        if cm.n_modes() != 2 {
            return Err(Error::Domain(format!(
                "expected a two-mode state, got {} modes",
                cm.n_modes()
            )));
        }
        let alpha = cm.mode_block(0, 0)?;
        let beta = cm.mode_block(1, 1)?;
        let gamma = cm.mode_block(0, 1)?;
        let det_alpha = alpha.determinant();
        let det_beta = beta.determinant();
        if det_alpha <= 0.0 || det_beta <= 0.0 {
            return Err(Error::UnphysicalState(format!(
                "non-positive marginal determinant ({det_alpha}, {det_beta})"
            )));
        }
        let det_sigma = cm.entries().determinant();
        if det_sigma <= 0.0 {
            return Err(Error::UnphysicalState(format!(
                "non-positive determinant {det_sigma}"
            )));
        }
        let mu1 = 1.0 / det_alpha.sqrt();
        let mu2 = 1.0 / det_beta.sqrt();
        let mu = 1.0 / det_sigma.sqrt();
        let delta = det_alpha + det_beta + 2.0 * gamma.determinant();
        Self::new(mu1, mu2, mu, delta)
    }

    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }

    pub fn mu(&self) -> f64 {
        self.mu
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// Seralian of the partial transpose: `Δ̃ = 2/μ₁² + 2/μ₂² - Δ`.
    pub fn delta_tilde(&self) -> f64 {
        2.0 / (self.mu1 * self.mu1) + 2.0 / (self.mu2 * self.mu2) - self.delta
    }

    /// Symplectic spectrum `(ν₋, ν₊)` of the state itself:
    /// `2ν∓² = Δ ∓ sqrt(Δ² - 4/μ²)`.
    pub fn symplectic_eigs(&self) -> Result<(f64, f64)> {
        branch_eigs(self.delta, self.mu, "symplectic spectrum")
    }

    /// Symplectic spectrum `(ν̃₋, ν̃₊)` of the partial transpose:
    /// `2ν̃∓² = Δ̃ ∓ sqrt(Δ̃² - 4/μ²)`. The product `ν̃₋ν̃₊ = 1/μ` is
    /// preserved, since partial transposition leaves `Det σ` unchanged.
    pub fn ppt_symplectic_eigs(&self) -> Result<(f64, f64)> {
        branch_eigs(self.delta_tilde(), self.mu, "PT spectrum")
    }

    /// Logarithmic negativity `E_N = max(0, -ln ν̃₋)` (natural log).
    pub fn negativity(&self) -> Result<f64> {
        let (nu_minus, _) = self.ppt_symplectic_eigs()?;
        Ok((-nu_minus.ln()).max(0.0))
    }

    /// Reconstructs the standard form from the invariants:
    /// `a = 1/μ₁`, `b = 1/μ₂`, `c± = (√(μ₁μ₂)/4)(ε₋ ± ε₊)` with
    /// `ε∓ = sqrt([Δ - (μ₁∓μ₂)²/(μ₁μ₂)²]² - 4/μ²)`.
    pub fn standard_form(&self) -> Result<StandardForm> {
        let (mu1, mu2, mu, delta) = (self.mu1, self.mu2, self.mu, self.delta);
        let diff = 1.0 / mu1 - 1.0 / mu2;
        let sum = 1.0 / mu1 + 1.0 / mu2;
        let br_minus = delta - diff * diff;
        let br_plus = delta - sum * sum;
        let four_over_mu2 = 4.0 / (mu * mu);
        let eps_minus = clamped_sqrt(
            br_minus * br_minus - four_over_mu2,
            br_minus * br_minus,
            "standard-form radicand (eps minus)",
        )?;
        let eps_plus = clamped_sqrt(
            br_plus * br_plus - four_over_mu2,
            br_plus * br_plus,
            "standard-form radicand (eps plus)",
        )?;
        let quarter_root = 0.25 * (mu1 * mu2).sqrt();
        StandardForm::new(
            1.0 / mu1,
            1.0 / mu2,
            quarter_root * (eps_minus + eps_plus),
            quarter_root * (eps_minus - eps_plus),
        )
    }
}

fn branch_eigs(delta_like: f64, mu: f64, what: &str) -> Result<(f64, f64)> {
    let four_det = 4.0 / (mu * mu);
    let rad = clamped_sqrt(
        delta_like * delta_like - four_det,
        delta_like * delta_like,
        what,
    )?;
    if delta_like <= 0.0 {
        return Err(Error::UnphysicalState(format!(
            "negative invariant {delta_like} in {what}"
        )));
    }
    let minus = (0.5 * (delta_like - rad)).max(0.0).sqrt();
    let plus = (0.5 * (delta_like + rad)).sqrt();
    Ok((minus, plus))
}

/// Canonical two-mode covariances `(a, b, c₊, c₋)` with the convention
/// `c₊ ≥ |c₋|`. Constructed values are validated for physicality.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StandardForm {
    a: f64,
    b: f64,
    c_plus: f64,
    c_minus: f64,
}

impl StandardForm {
    pub fn new(a: f64, b: f64, c_plus: f64, c_minus: f64) -> Result<Self> {
        if !ge_tol(a, 1.0) || !ge_tol(b, 1.0) {
            return Err(Error::UnphysicalState(format!(
                "standard-form diagonal (a={a}, b={b}) below vacuum"
            )));
        }
        if c_plus < c_minus.abs() - 1e-12 {
            return Err(Error::UnphysicalState(format!(
                "standard-form ordering violated (c+={c_plus}, c-={c_minus})"
            )));
        }
        let x = a * b - c_plus * c_plus;
        let y = a * b - c_minus * c_minus;
        if x <= 0.0 || y <= 0.0 {
            return Err(Error::UnphysicalState(format!(
                "correlations exceed positivity (x={x}, y={y})"
            )));
        }
        let det = x * y;
        let delta = a * a + b * b + 2.0 * c_plus * c_minus;
        if !le_tol(delta, 1.0 + det) {
            return Err(Error::UnphysicalState(format!(
                "uncertainty violated: seralian {delta} > 1 + Det {det}"
            )));
        }
        Ok(Self { a, b, c_plus, c_minus })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn c_plus(&self) -> f64 {
        self.c_plus
    }

    pub fn c_minus(&self) -> f64 {
        self.c_minus
    }

    /// The explicit 4×4 covariance matrix.
    pub fn to_cm(&self) -> CovarianceMatrix {
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        let m = DMatrix::from_row_slice(
            4,
            4,
            &[
                a, 0.0, cp, 0.0, //
                0.0, a, 0.0, cm, //
                cp, 0.0, b, 0.0, //
                0.0, cm, 0.0, b,
            ],
        );
        CovarianceMatrix::from_parts_unchecked(2, m)
    }

    /// The invariants of the induced state; exact closed forms.
    pub fn invariants(&self) -> Result<TwoModeInvariants> {
        let (a, b, cp, cm) = (self.a, self.b, self.c_plus, self.c_minus);
        let det = (a * b - cp * cp) * (a * b - cm * cm);
        TwoModeInvariants::new(
            1.0 / a,
            1.0 / b,
            1.0 / det.sqrt(),
            a * a + b * b + 2.0 * cp * cm,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{diag_cm, two_mode_squeezed_vacuum};

    #[test]
    fn invariants_from_identity() {
        let inv = TwoModeInvariants::from_cm(&CovarianceMatrix::identity(2)).unwrap();
        assert_eq!(
            (inv.mu1(), inv.mu2(), inv.mu(), inv.delta()),
            (1.0, 1.0, 1.0, 2.0)
        );
    }

    #[test]
    fn invariants_from_thermal_product() {
        let inv = TwoModeInvariants::from_cm(&diag_cm(&[2.0, 2.0, 3.0, 3.0])).unwrap();
        assert!((inv.mu1() - 0.5).abs() < 1e-14);
        assert!((inv.mu2() - 1.0 / 3.0).abs() < 1e-14);
        assert!((inv.mu() - 1.0 / 6.0).abs() < 1e-14);
        assert!((inv.delta() - 13.0).abs() < 1e-12);
    }

    #[test]
    fn invariants_from_squeezed_vacuum() {
        for r in [0.4, 1.0, 1.8] {
            let inv = TwoModeInvariants::from_cm(&two_mode_squeezed_vacuum(r)).unwrap();
            let expected = 1.0 / (2.0 * r).cosh();
            assert!((inv.mu1() - expected).abs() < 1e-12);
            assert!((inv.mu2() - expected).abs() < 1e-12);
            assert!((inv.mu() - 1.0).abs() < 1e-10, "r={r}");
            assert!((inv.delta() - 2.0).abs() < 1e-9, "r={r}");
        }
    }

    #[test]
    fn standard_form_of_vacuum() {
        let sf = TwoModeInvariants::new(1.0, 1.0, 1.0, 2.0)
            .unwrap()
            .standard_form()
            .unwrap();
        assert!((sf.a() - 1.0).abs() < 1e-12);
        assert!((sf.b() - 1.0).abs() < 1e-12);
        assert!(sf.c_plus().abs() < 1e-9);
        assert!(sf.c_minus().abs() < 1e-9);
    }

    #[test]
    fn standard_form_of_squeezed_vacuum() {
        let r: f64 = 1.0;
        let mu_i = 1.0 / (2.0 * r).cosh();
        let sf = TwoModeInvariants::new(mu_i, mu_i, 1.0, 2.0)
            .unwrap()
            .standard_form()
            .unwrap();
        assert!((sf.a() - (2.0 * r).cosh()).abs() < 1e-9);
        assert!((sf.b() - (2.0 * r).cosh()).abs() < 1e-9);
        assert!((sf.c_plus() - (2.0 * r).sinh()).abs() < 1e-8);
        assert!((sf.c_minus() + (2.0 * r).sinh()).abs() < 1e-8);
    }

    #[test]
    fn validation_examples() {
        // global purity below the product of marginals
        let r = validate_invariants(0.5, 0.5, 0.2, 8.0);
        assert!(!r.physical);
        assert!(!r.mu.passed);
        assert!(r.mu.lower_margin < 0.0);

        // pure state saturates the seralian bound exactly
        let r = validate_invariants(1.0, 1.0, 1.0, 2.0);
        assert!(r.physical);
        assert!(r.delta.upper_margin.abs() < 1e-12);

        // seralian below its lower bound
        let lo = delta_lower(0.6, 0.9, 0.9);
        let r = validate_invariants(0.6, 0.9, 0.9, lo - 0.1);
        assert!(!r.physical && !r.delta.passed);
    }

    #[test]
    fn seralian_upper_bound_tightens_in_separable_region() {
        // mu < mu1*mu2/(mu1+mu2-mu1*mu2): positivity binds before uncertainty
        let (mu1, mu2, mu) = (0.5, 0.5, 0.3);
        let printed = 1.0 + 1.0 / (mu * mu);
        let upper = delta_upper(mu1, mu2, mu);
        assert!(upper < printed);
        // a tuple that satisfies the uncertainty relation but violates positivity
        let report = validate_invariants(mu1, mu2, mu, 0.5 * (upper + printed));
        assert!(!report.physical);
        // at the separability threshold the two branches agree
        let sep = mu1 * mu2 / (mu1 + mu2 - mu1 * mu2);
        let sum = 1.0 / mu1 + 1.0 / mu2;
        assert!(((1.0 + 1.0 / (sep * sep)) - (sum * sum - 2.0 / sep)).abs() < 1e-12);
    }

    #[test]
    fn ppt_eigs_examples() {
        let vac = TwoModeInvariants::new(1.0, 1.0, 1.0, 2.0).unwrap();
        let (m, p) = vac.ppt_symplectic_eigs().unwrap();
        assert!((m - 1.0).abs() < 1e-9 && (p - 1.0).abs() < 1e-9);

        let r: f64 = 1.0;
        let mu_i = 1.0 / (2.0 * r).cosh();
        let sq = TwoModeInvariants::new(mu_i, mu_i, 1.0, 2.0).unwrap();
        let (m, p) = sq.ppt_symplectic_eigs().unwrap();
        assert!((m - (-2.0 * r).exp()).abs() < 1e-9, "nu- = {m}");
        assert!((p - (2.0 * r).exp()).abs() < 1e-8, "nu+ = {p}");

        let th = TwoModeInvariants::from_cm(&diag_cm(&[2.0, 2.0, 3.0, 3.0])).unwrap();
        let (m, p) = th.ppt_symplectic_eigs().unwrap();
        assert!(m >= 1.0 - 1e-12 && p >= 1.0 - 1e-12);
    }

    #[test]
    fn negativity_examples() {
        let vac = TwoModeInvariants::new(1.0, 1.0, 1.0, 2.0).unwrap();
        assert_eq!(vac.negativity().unwrap(), 0.0);

        let r: f64 = 1.0;
        let mu_i = 1.0 / (2.0 * r).cosh();
        let sq = TwoModeInvariants::new(mu_i, mu_i, 1.0, 2.0).unwrap();
        assert!((sq.negativity().unwrap() - 2.0).abs() < 1e-9);
    }

    #[test]
    fn symmetric_squeezed_thermal_closed_form() {
        // E_N(r, mu) = max(0, -(1/2) ln(e^{-4r}/mu)) for the symmetric
        // squeezed thermal family a = b = cosh(2r)/sqrt(mu).
        for (r, mu) in [(0.9f64, 0.7f64), (0.2, 0.9), (0.05, 0.2), (1.5, 0.1)] {
            let root_mu = mu.sqrt();
            let a = (2.0 * r).cosh() / root_mu;
            let c = (2.0 * r).sinh() / root_mu;
            let sf = StandardForm::new(a, a, c, -c).unwrap();
            let en = sf.invariants().unwrap().negativity().unwrap();
            let expected = (-0.5 * ((-4.0 * r).exp() / mu).ln()).max(0.0);
            assert!((en - expected).abs() < 1e-9, "r={r} mu={mu}: {en} vs {expected}");
        }
    }

    #[test]
    fn pt_preserves_determinant() {
        let inv = TwoModeInvariants::new(0.7, 0.6, 0.5, delta_lower(0.7, 0.6, 0.5) + 0.4).unwrap();
        let (m, p) = inv.ppt_symplectic_eigs().unwrap();
        assert!((m * p - 1.0 / inv.mu()).abs() < 1e-9);
    }

    #[test]
    fn pure_states_have_matched_correlations() {
        for mu_i in [0.9, 0.5, 0.2] {
            let inv = TwoModeInvariants::new(mu_i, mu_i, 1.0, 2.0).unwrap();
            let sf = inv.standard_form().unwrap();
            let expected = (sf.a() * sf.a() - 1.0).sqrt();
            assert!((sf.c_plus() - expected).abs() < 1e-9);
            assert!((sf.c_minus() + expected).abs() < 1e-9);
        }
    }

    #[test]
    fn unphysical_tuples_are_rejected() {
        assert!(TwoModeInvariants::new(0.5, 0.5, 0.2, 8.0).is_err());
        assert!(TwoModeInvariants::new(1.2, 0.5, 0.5, 8.0).is_err());
        assert!(TwoModeInvariants::from_cm(&diag_cm(&[0.5, 0.5, 2.0, 2.0])).is_err());
    }

    #[test]
    fn from_cm_requires_two_modes() {
        assert!(matches!(
            TwoModeInvariants::from_cm(&CovarianceMatrix::identity(3)),
            Err(Error::Domain(_))
        ));
    }
}
