//! Entanglement bounds at fixed global and marginal generalized
//! entropies, and the nodal inversion surface.
//!
//! Replacing purities by Tsallis `p`-entropies as the measures of
//! information changes the geometry: at fixed marginal and global
//! `p`-entropies the constraint `Tr ρᵖ = g_p(ν₋)g_p(ν₊)` couples the
//! global purity `μ` to the seralian `Δ`, and `ν̃₋` is no longer
//! monotone in `Δ`. For `p > 2` there is a unique nodal surface in
//! `(S_p marginal, S_p global)` space where the `Δ`-derivative of `ν̃₋`
//! vanishes identically: on it the entanglement is a function of the
//! entropies alone, and across it the squeezed thermal states and the
//! partial minimum-uncertainty states swap their extremal roles.
//!
//! Everything here is numerical by design: a bracketing scan plus
//! bisection solves for `μ` at fixed `Δ`, a `Δ`-sweep with exact
//! refinement of the two boundary curves produces the bounds, and a
//! bisection on the sign of a central-difference derivative locates the
//! nodal surface.

use alloc::format;
use alloc::vec::Vec;

#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::entropy::{g_p, von_neumann_mode_entropy};
use crate::error::{Error, Result};
use crate::two_mode::{delta_lower, delta_upper, max_global_purity, TwoModeInvariants};
use crate::util::linspace;

/// Entropy family used as the information measure: Tsallis with order
/// `p > 1`, or the von Neumann (`p → 1`) limit.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum PEntropy {
    Tsallis { p: f64 },
    VonNeumann,
}

impl PEntropy {
    pub fn validate(&self) -> Result<()> {
        if let PEntropy::Tsallis { p } = self {
            if !(*p > 1.0) {
                return Err(Error::Domain(format!("Tsallis order must be > 1, got {p}")));
            }
        }
        Ok(())
    }

    /// Entropy of a single mode with symplectic eigenvalue `nu ≥ 1`.
    pub fn single_mode(&self, nu: f64) -> Result<f64> {
        let nu = nu.max(1.0);
        match self {
            PEntropy::Tsallis { p } => Ok((1.0 - g_p(nu, *p)?) / (p - 1.0)),
            PEntropy::VonNeumann => Ok(von_neumann_mode_entropy(nu)),
        }
    }

    /// Entropy of a two-mode state from its symplectic spectrum.
    fn pair(&self, nu_minus: f64, nu_plus: f64) -> Result<f64> {
        let (lo, hi) = (nu_minus.max(1.0), nu_plus.max(1.0));
        match self {
            PEntropy::Tsallis { p } => Ok((1.0 - g_p(lo, *p)? * g_p(hi, *p)?) / (p - 1.0)),
            PEntropy::VonNeumann => {
                Ok(von_neumann_mode_entropy(lo) + von_neumann_mode_entropy(hi))
            }
        }
    }

    /// Supremum of the single-mode entropy (`1/(p-1)` for Tsallis,
    /// unbounded for von Neumann).
    pub fn single_mode_sup(&self) -> f64 {
        match self {
            PEntropy::Tsallis { p } => 1.0 / (p - 1.0),
            PEntropy::VonNeumann => f64::INFINITY,
        }
    }
}

/// Inverts the single-mode entropy for the marginal purity by bisection
/// on `ν = 1/μ`; the residual is below `1e-10`.
pub fn marginal_purity_from_entropy(s: f64, family: PEntropy) -> Result<f64> {
    family.validate()?;
    if s < 0.0 || s >= family.single_mode_sup() {
        return Err(Error::OutOfRange {
            value: s,
            lo: 0.0,
            hi: family.single_mode_sup(),
        });
    }
    if s == 0.0 {
        return Ok(1.0);
    }
    let mut hi = 2.0;
    while family.single_mode(hi)? < s {
        hi *= 2.0;
        if hi > 1e14 {
            return Err(Error::OutOfRange {
                value: s,
                lo: 0.0,
                hi: family.single_mode(1e14)?,
            });
        }
    }
    let mut lo = 1.0;
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if family.single_mode(mid)? < s {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo < 1e-15 * hi {
            break;
        }
    }
    Ok(1.0 / (0.5 * (lo + hi)))
}

/// A family plus target global and marginal entropies; marginal purities
/// are derived on construction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropicConstraint {
    family: PEntropy,
    s_global: f64,
    s1: f64,
    s2: f64,
    mu1: f64,
    mu2: f64,
}

impl EntropicConstraint {
    pub fn new(family: PEntropy, s_global: f64, s1: f64, s2: f64) -> Result<Self> {
        family.validate()?;
        if s_global < 0.0 {
            return Err(Error::OutOfRange {
                value: s_global,
                lo: 0.0,
                hi: f64::INFINITY,
            });
        }
        let mu1 = marginal_purity_from_entropy(s1, family)?;
        let mu2 = marginal_purity_from_entropy(s2, family)?;
        Ok(Self {
            family,
            s_global,
            s1,
            s2,
            mu1,
            mu2,
        })
    }

    pub fn symmetric(family: PEntropy, s_global: f64, s_marginal: f64) -> Result<Self> {
        Self::new(family, s_global, s_marginal, s_marginal)
    }

    pub fn family(&self) -> PEntropy {
        self.family
    }

    pub fn s_global(&self) -> f64 {
        self.s_global
    }

    pub fn mu1(&self) -> f64 {
        self.mu1
    }

    pub fn mu2(&self) -> f64 {
        self.mu2
    }

    fn with_s_global(&self, s_global: f64) -> Self {
        Self { s_global, ..*self }
    }

    /// Symplectic spectrum at `(μ, Δ)` from the two-mode closed form.
    fn nu_pair(&self, mu: f64, delta: f64) -> (f64, f64) {
        let rad = (delta * delta - 4.0 / (mu * mu)).max(0.0).sqrt();
        (
            (0.5 * (delta - rad)).max(0.0).sqrt(),
            (0.5 * (delta + rad)).sqrt(),
        )
    }

    /// Global-entropy mismatch at `(μ, Δ)`.
    fn mismatch(&self, mu: f64, delta: f64) -> Result<f64> {
        let (lo, hi) = self.nu_pair(mu, delta);
        Ok(self.family.pair(lo, hi)? - self.s_global)
    }

    /// The window of global purities compatible with `Δ` and the
    /// physicality constraints, or `None` if empty.
    fn mu_window(&self, delta: f64) -> Option<(f64, f64)> {
        let p = self.mu1 * self.mu2;
        let diff2 = (1.0 / self.mu1 - 1.0 / self.mu2) * (1.0 / self.mu1 - 1.0 / self.mu2);
        let sum = 1.0 / self.mu1 + 1.0 / self.mu2;
        let mut lo = p;
        // seralian lower bound: 2/mu <= delta - diff^2
        if delta <= diff2 {
            return None;
        }
        lo = lo.max(2.0 / (delta - diff2));
        // positivity branch: 2/mu <= sum^2 - delta
        if delta >= sum * sum {
            return None;
        }
        lo = lo.max(2.0 / (sum * sum - delta));
        let mut hi = max_global_purity(self.mu1, self.mu2);
        // uncertainty branch: delta <= 1 + 1/mu^2
        if delta > 1.0 {
            hi = hi.min(1.0 / (delta - 1.0).sqrt());
        }
        if lo > hi {
            return None;
        }
        Some((lo, hi))
    }

    /// All global purities solving the entropy constraint at fixed `Δ`,
    /// by a `brackets`-cell scan plus bisection. Ascending, deduplicated.
    fn mu_roots(&self, delta: f64, brackets: usize) -> Result<Vec<f64>> {
        let Some((lo, hi)) = self.mu_window(delta) else {
            return Ok(Vec::new());
        };
        let grid = linspace(lo, hi, brackets.max(8) + 1);
        let mut roots = Vec::new();
        let mut prev_mu = grid[0];
        let mut prev_h = self.mismatch(prev_mu, delta)?;
        if prev_h == 0.0 {
            roots.push(prev_mu);
        }
        for &mu in &grid[1..] {
            let h = self.mismatch(mu, delta)?;
            if h == 0.0 {
                roots.push(mu);
            } else if prev_h != 0.0 && (h > 0.0) != (prev_h > 0.0) {
                roots.push(self.bisect_mu(prev_mu, mu, prev_h, delta)?);
            }
            prev_mu = mu;
            prev_h = h;
        }
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        roots.dedup_by(|a, b| (*a - *b).abs() < 1e-12 * b.abs().max(1e-12));
        Ok(roots)
    }

    fn bisect_mu(&self, mut lo: f64, mut hi: f64, h_lo: f64, delta: f64) -> Result<f64> {
        let lo_positive = h_lo > 0.0;
        for _ in 0..90 {
            let mid = 0.5 * (lo + hi);
            let h = self.mismatch(mid, delta)?;
            if h == 0.0 {
                return Ok(mid);
            }
            if (h > 0.0) == lo_positive {
                lo = mid;
            } else {
                hi = mid;
            }
            if hi - lo < 1e-16 * hi {
                break;
            }
        }
        Ok(0.5 * (lo + hi))
    }
}

/// Public root solve: every `μ` in the physical window such that the
/// global entropy matches at the given `Δ`. Errors with
/// [`Error::NoSolution`] when no bracket exists in range.
pub fn solve_mu_at_fixed_entropy(
    delta: f64,
    constraint: &EntropicConstraint,
    brackets: usize,
) -> Result<Vec<f64>> {
    let roots = constraint.mu_roots(delta, brackets)?;
    if roots.is_empty() {
        return Err(Error::NoSolution);
    }
    Ok(roots)
}

/// Which boundary family attains an extremum of the sweep.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalFamily {
    /// Lower seralian edge: squeezed thermal states.
    GmemsEdge,
    /// Upper seralian edge: partial minimum-uncertainty states.
    GlemsEdge,
    Interior,
}

impl ExtremalFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            ExtremalFamily::GmemsEdge => "gmems-edge",
            ExtremalFamily::GlemsEdge => "glems-edge",
            ExtremalFamily::Interior => "interior",
        }
    }
}

/// Extremal negativities at fixed entropies, with the attaining family.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EntropicBounds {
    pub e_min: f64,
    pub e_max: f64,
    pub argmin: ExtremalFamily,
    pub argmax: ExtremalFamily,
}

/// Sweep resolution knobs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    /// Number of seralian grid points in the sweep.
    pub delta_grid: usize,
    /// Number of bracketing cells per root solve.
    pub brackets: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        Self {
            delta_grid: 2000,
            brackets: 512,
        }
    }
}

/// Sweeps the seralian over its physical range, solving for `μ` at each
/// grid point, and returns the extremal negativities. The two boundary
/// curves (`Δ = Δ_min(μ)` and `Δ = Δ_max(μ)`) are additionally solved
/// exactly, so the returned extrema are grid-independent whenever they
/// are attained on an edge (they always are, up to the nodal surface
/// where the sweep is flat).
pub fn entropic_negativity_bounds(
    constraint: &EntropicConstraint,
    opts: &SweepOptions,
) -> Result<EntropicBounds> {
    let mut candidates: Vec<(f64, ExtremalFamily)> = Vec::new();

    // interior sweep on the seralian lattice, focused on the span the
    // solution curve actually covers
    let probe_opts = NodalOptions {
        brackets: opts.brackets,
        ..NodalOptions::default()
    };
    let (d_lo, d_hi) = match solvable_delta_window(constraint, &probe_opts) {
        Ok(window) => window,
        Err(Error::NoSolution) => global_delta_range(constraint),
        Err(e) => return Err(e),
    };
    for delta in linspace(d_lo, d_hi, opts.delta_grid.max(2)) {
        for mu in constraint.mu_roots(delta, opts.brackets)? {
            if let Ok(en) = negativity_at(constraint, mu, delta) {
                candidates.push((en, ExtremalFamily::Interior));
            }
        }
    }

    // exact solutions on the two boundary curves
    for (edge, family) in [
        (Edge::Lower, ExtremalFamily::GmemsEdge),
        (Edge::Upper, ExtremalFamily::GlemsEdge),
    ] {
        for mu in edge_roots(constraint, edge, opts.brackets)? {
            let delta = edge_delta(constraint, edge, mu);
            if let Ok(en) = negativity_at(constraint, mu, delta) {
                candidates.push((en, family));
            }
        }
    }

    if candidates.is_empty() {
        return Err(Error::NoSolution);
    }
    let mut best_max = (f64::NEG_INFINITY, ExtremalFamily::Interior);
    let mut best_min = (f64::INFINITY, ExtremalFamily::Interior);
    for &(en, family) in &candidates {
        // prefer edge labels on ties, so grid points that coincide with
        // an edge state do not masquerade as interior extrema
        let better_max = en > best_max.0 + 1e-12
            || ((en - best_max.0).abs() <= 1e-12 && best_max.1 == ExtremalFamily::Interior);
        if better_max {
            best_max = (en.max(best_max.0), family);
        }
        let better_min = en < best_min.0 - 1e-12
            || ((en - best_min.0).abs() <= 1e-12 && best_min.1 == ExtremalFamily::Interior);
        if better_min {
            best_min = (en.min(best_min.0), family);
        }
    }
    Ok(EntropicBounds {
        e_min: best_min.0,
        e_max: best_max.0,
        argmin: best_min.1,
        argmax: best_max.1,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Edge {
    Lower,
    Upper,
}

fn edge_delta(constraint: &EntropicConstraint, edge: Edge, mu: f64) -> f64 {
    match edge {
        Edge::Lower => delta_lower(constraint.mu1, constraint.mu2, mu),
        Edge::Upper => delta_upper(constraint.mu1, constraint.mu2, mu),
    }
}

/// Roots of the entropy constraint along one boundary curve, in `μ`.
fn edge_roots(constraint: &EntropicConstraint, edge: Edge, brackets: usize) -> Result<Vec<f64>> {
    let p = constraint.mu1 * constraint.mu2;
    let hi = max_global_purity(constraint.mu1, constraint.mu2);
    let grid = linspace(p, hi, brackets.max(8) + 1);
    let eval = |mu: f64| -> Result<f64> {
        constraint.mismatch(mu, edge_delta(constraint, edge, mu))
    };
    let mut roots = Vec::new();
    let mut prev_mu = grid[0];
    let mut prev_h = eval(prev_mu)?;
    if prev_h == 0.0 {
        roots.push(prev_mu);
    }
    for &mu in &grid[1..] {
        let h = eval(mu)?;
        if h == 0.0 {
            roots.push(mu);
        } else if prev_h != 0.0 && (h > 0.0) != (prev_h > 0.0) {
            let (mut lo, mut hi_b) = (prev_mu, mu);
            let lo_positive = prev_h > 0.0;
            for _ in 0..90 {
                let mid = 0.5 * (lo + hi_b);
                let hm = eval(mid)?;
                if hm == 0.0 {
                    break;
                }
                if (hm > 0.0) == lo_positive {
                    lo = mid;
                } else {
                    hi_b = mid;
                }
                if hi_b - lo < 1e-16 * hi_b {
                    break;
                }
            }
            roots.push(0.5 * (lo + hi_b));
        }
        prev_mu = mu;
        prev_h = h;
    }
    Ok(roots)
}

fn negativity_at(constraint: &EntropicConstraint, mu: f64, delta: f64) -> Result<f64> {
    TwoModeInvariants::new(constraint.mu1, constraint.mu2, mu, delta)?.negativity()
}

/// Overall seralian range spanned by the physical `(μ, Δ)` region.
fn global_delta_range(constraint: &EntropicConstraint) -> (f64, f64) {
    let (mu1, mu2) = (constraint.mu1, constraint.mu2);
    let p = mu1 * mu2;
    (
        delta_lower(mu1, mu2, max_global_purity(mu1, mu2)),
        delta_upper(mu1, mu2, p),
    )
}

/// A located nodal point: the global entropy at which the
/// `Δ`-derivative of `ν̃₋` vanishes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodalPoint {
    pub s_marginal: f64,
    pub s_nodal: f64,
    /// |dν̃₋/dΔ| at the located point (central difference).
    pub derivative_residual: f64,
}

/// Outcome of the nodal search at one marginal entropy.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum NodalOutcome {
    Nodal(NodalPoint),
    /// The derivative keeps one sign over the attainable global-entropy
    /// range (expected for `p ≤ 2` and the von Neumann family).
    NoInversion,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodalScanPoint {
    pub s_marginal: f64,
    pub outcome: NodalOutcome,
}

/// Knobs for the nodal search.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NodalOptions {
    /// Seralian lattice used to locate the solvable window.
    pub delta_scan: usize,
    /// Bracketing cells per root solve.
    pub brackets: usize,
    /// Global-entropy grid used to look for a sign change.
    pub s_scan: usize,
    /// Central-difference step, relative to the solvable window width.
    pub derivative_step_rel: f64,
}

impl Default for NodalOptions {
    fn default() -> Self {
        Self {
            delta_scan: 129,
            brackets: 512,
            s_scan: 24,
            derivative_step_rel: 1e-5,
        }
    }
}

/// Span of seralian values covered by the constraint's solution curve.
///
/// The endpoints of the level-set curve lie on the two boundary curves,
/// so the window is read off the edge roots; a lattice scan over the
/// global range is the fallback when no edge root exists.
pub fn solvable_delta_window(
    constraint: &EntropicConstraint,
    opts: &NodalOptions,
) -> Result<(f64, f64)> {
    let mut deltas: Vec<f64> = Vec::new();
    for edge in [Edge::Lower, Edge::Upper] {
        for mu in edge_roots(constraint, edge, opts.brackets)? {
            deltas.push(edge_delta(constraint, edge, mu));
        }
    }
    if deltas.is_empty() {
        let (d_lo, d_hi) = global_delta_range(constraint);
        let coarse = (opts.brackets / 4).max(64);
        for d in linspace(d_lo, d_hi, opts.delta_scan.max(16)) {
            if !constraint.mu_roots(d, coarse)?.is_empty() {
                deltas.push(d);
            }
        }
    }
    if deltas.is_empty() {
        return Err(Error::NoSolution);
    }
    let lo = deltas.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = deltas.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok((lo, hi))
}

/// Central-difference estimate of `dν̃₋/dΔ` along the entropy
/// constraint, taken at the middle of the solvable seralian window. With
/// several solution branches, the branch with the smallest `ν̃₋` (the
/// entanglement envelope) is followed.
pub fn constrained_nu_tilde_derivative(
    constraint: &EntropicConstraint,
    opts: &NodalOptions,
) -> Result<f64> {
    let (d_lo, d_hi) = solvable_delta_window(constraint, opts)?;
    let width = d_hi - d_lo;
    if width <= 0.0 {
        return Err(Error::NoSolution);
    }
    // walk toward the center until a solvable interior point is found
    let mut mid = 0.5 * (d_lo + d_hi);
    let mut found = false;
    for k in 0..8 {
        let offset = width * k as f64 / 16.0;
        for candidate in [mid - offset, mid + offset] {
            if candidate > d_lo
                && candidate < d_hi
                && !constraint.mu_roots(candidate, opts.brackets)?.is_empty()
            {
                mid = candidate;
                found = true;
                break;
            }
        }
        if found {
            break;
        }
    }
    if !found {
        return Err(Error::NoSolution);
    }
    let h = (opts.derivative_step_rel * width).max(1e-12);

    let nu_at = |delta: f64, near: Option<f64>| -> Result<f64> {
        let roots = constraint.mu_roots(delta, opts.brackets)?;
        if roots.is_empty() {
            return Err(Error::NoSolution);
        }
        let mu = match near {
            // branch-match to the nearest root
            Some(target) => roots
                .iter()
                .copied()
                .min_by(|a, b| {
                    (a - target).abs().partial_cmp(&(b - target).abs()).unwrap()
                })
                .unwrap(),
            // envelope branch: smallest nu-tilde
            None => {
                let mut best = (f64::INFINITY, roots[0]);
                for &mu in &roots {
                    let nt = nu_tilde_at(constraint, mu, delta);
                    if nt < best.0 {
                        best = (nt, mu);
                    }
                }
                best.1
            }
        };
        Ok(nu_tilde_at(constraint, mu, delta))
    };

    let roots_mid = constraint.mu_roots(mid, opts.brackets)?;
    if roots_mid.is_empty() {
        return Err(Error::NoSolution);
    }
    let mut mu_mid = roots_mid[0];
    let mut best = f64::INFINITY;
    for &mu in &roots_mid {
        let nt = nu_tilde_at(constraint, mu, mid);
        if nt < best {
            best = nt;
            mu_mid = mu;
        }
    }
    let plus = nu_at(mid + h, Some(mu_mid))?;
    let minus = nu_at(mid - h, Some(mu_mid))?;
    Ok((plus - minus) / (2.0 * h))
}

fn nu_tilde_at(constraint: &EntropicConstraint, mu: f64, delta: f64) -> f64 {
    let delta_tilde =
        2.0 / (constraint.mu1 * constraint.mu1) + 2.0 / (constraint.mu2 * constraint.mu2) - delta;
    let rad = (delta_tilde * delta_tilde - 4.0 / (mu * mu)).max(0.0).sqrt();
    (0.5 * (delta_tilde - rad)).max(0.0).sqrt()
}

/// Attainable global-entropy range at the constraint's marginals, from a
/// dense scan of the physical `(μ, Δ)` region.
pub fn attainable_global_entropy_range(
    family: PEntropy,
    mu1: f64,
    mu2: f64,
) -> Result<(f64, f64)> {
    family.validate()?;
    let probe = EntropicConstraint {
        family,
        s_global: 0.0,
        s1: 0.0,
        s2: 0.0,
        mu1,
        mu2,
    };
    let p = mu1 * mu2;
    let hi = max_global_purity(mu1, mu2);
    let mut s_lo = f64::INFINITY;
    let mut s_hi = f64::NEG_INFINITY;
    for mu in linspace(p, hi, 96) {
        let (d_lo, d_hi) = (delta_lower(mu1, mu2, mu), delta_upper(mu1, mu2, mu));
        for delta in linspace(d_lo, d_hi.max(d_lo), 64) {
            let (lo_nu, hi_nu) = probe.nu_pair(mu, delta);
            let s = family.pair(lo_nu, hi_nu)?;
            s_lo = s_lo.min(s);
            s_hi = s_hi.max(s);
        }
    }
    Ok((s_lo, s_hi))
}

/// Locates the nodal surface over a grid of symmetric marginal
/// entropies by bisecting on the sign of the constrained derivative.
pub fn nodal_surface(
    s_marginals: &[f64],
    family: PEntropy,
    opts: &NodalOptions,
) -> Result<Vec<NodalScanPoint>> {
    family.validate()?;
    let mut out = Vec::with_capacity(s_marginals.len());
    for &s_marginal in s_marginals {
        let mu_i = marginal_purity_from_entropy(s_marginal, family)?;
        let (s_lo, s_hi) = attainable_global_entropy_range(family, mu_i, mu_i)?;
        let span = s_hi - s_lo;
        let grid = linspace(s_lo + 0.02 * span, s_hi - 0.02 * span, opts.s_scan.max(4));

        let derivative = |s: f64| -> Option<f64> {
            let c = EntropicConstraint {
                family,
                s_global: s,
                s1: s_marginal,
                s2: s_marginal,
                mu1: mu_i,
                mu2: mu_i,
            };
            constrained_nu_tilde_derivative(&c, opts).ok()
        };

        let mut evaluated: Vec<(f64, f64)> = Vec::new();
        for &s in &grid {
            if let Some(d) = derivative(s) {
                evaluated.push((s, d));
            }
        }
        let mut found = None;
        for pair in evaluated.windows(2) {
            let ((s_a, d_a), (s_b, d_b)) = (pair[0], pair[1]);
            if (d_a > 0.0) != (d_b > 0.0) {
                // bisect the sign change
                let (mut lo, mut hi) = (s_a, s_b);
                let lo_positive = d_a > 0.0;
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    match derivative(mid) {
                        Some(d) if (d > 0.0) == lo_positive => lo = mid,
                        Some(_) => hi = mid,
                        None => break,
                    }
                    if hi - lo < 1e-13 * hi.abs().max(1e-13) {
                        break;
                    }
                }
                let s_nodal = 0.5 * (lo + hi);
                let residual = derivative(s_nodal).unwrap_or(f64::NAN).abs();
                found = Some(NodalPoint {
                    s_marginal,
                    s_nodal,
                    derivative_residual: residual,
                });
                break;
            }
        }
        out.push(NodalScanPoint {
            s_marginal,
            outcome: match found {
                Some(point) => NodalOutcome::Nodal(point),
                None => NodalOutcome::NoInversion,
            },
        });
    }
    Ok(out)
}
