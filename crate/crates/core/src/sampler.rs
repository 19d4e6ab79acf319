//! Seeded random generation of physical states, in invariant and
//! covariance-matrix form, plus the brute-force oracles used by the
//! property and acceptance suites.
//!
//! Sampling is uniform in the invariant coordinates `(μ₁, μ₂, μ, Δ)`
//! over their physical windows — not uniform in any symplectically
//! invariant measure on states. That is deliberate: the suites test
//! bound correctness, which is measure-independent. Do not read sample
//! histograms as state-space statistics.

use alloc::vec::Vec;

use nalgebra::DMatrix;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::extremal::{classify, Region};
use crate::multimode::SymmetricMultimodeParams;
use crate::symplectic::CovarianceMatrix;
use crate::two_mode::{delta_lower, delta_upper, max_global_purity, TwoModeInvariants};
use crate::util::linspace;

/// Retry cap for rejection sampling; exceeding it signals an empty or
/// nearly empty region request.
const MAX_REJECTIONS: u64 = 1_000_000;

/// Configuration of a deterministic sampler. Identical configuration
/// yields an identical sample stream.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SamplerConfig {
    pub seed: u64,
    /// Lower cutoff on marginal purities.
    pub mu_floor: f64,
    /// When set, rejection-sample until the classification matches.
    pub region_filter: Option<Region>,
}

impl Default for SamplerConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            mu_floor: 0.05,
            region_filter: None,
        }
    }
}

impl SamplerConfig {
    pub fn with_seed(seed: u64) -> Self {
        Self {
            seed,
            ..Self::default()
        }
    }
}

/// Deterministic random-state generator. A single instance owns its
/// generator state and is not shareable across concurrent callers; clone
/// streams with [`Sampler::derive`] instead.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
    config: SamplerConfig,
}

impl Sampler {
    pub fn new(config: SamplerConfig) -> Result<Self> {
        if !(config.mu_floor > 0.0 && config.mu_floor < 1.0) {
            return Err(Error::Domain(alloc::format!(
                "mu_floor must lie in (0, 1), got {}",
                config.mu_floor
            )));
        }
        Ok(Self {
            rng: ChaCha8Rng::seed_from_u64(config.seed),
            config,
        })
    }

    pub fn config(&self) -> &SamplerConfig {
        &self.config
    }

    /// Child sampler with an independent stream (derived seed).
    pub fn derive(&mut self) -> Sampler {
        let seed = self.rng.random::<u64>();
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            config: self.config,
        }
    }

    fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        if hi > lo {
            self.rng.random_range(lo..hi)
        } else {
            lo
        }
    }

    /// Uniform draw from the physical invariant windows: marginals on
    /// `[mu_floor, 1]`, then `μ` on its window, then `Δ` on its window.
    /// Always physical by construction.
    pub fn two_mode_invariants(&mut self) -> Result<TwoModeInvariants> {
        for _ in 0..MAX_REJECTIONS {
            let mu1 = self.uniform(self.config.mu_floor, 1.0);
            let mu2 = self.uniform(self.config.mu_floor, 1.0);
            let mu = self.uniform(mu1 * mu2, max_global_purity(mu1, mu2));
            let delta = self.uniform(delta_lower(mu1, mu2, mu), delta_upper(mu1, mu2, mu));
            let inv = match TwoModeInvariants::new(mu1, mu2, mu, delta) {
                Ok(inv) => inv,
                // boundary rounding; extraordinarily rare
                Err(_) => continue,
            };
            if let Some(region) = self.config.region_filter {
                if classify(mu1, mu2, mu).region != region {
                    continue;
                }
            }
            return Ok(inv);
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_REJECTIONS,
        })
    }

    /// Random symmetric multimode parameters, rejection-tested for
    /// physicality. Couplings follow the two-mode-squeezing sign pattern
    /// (`g₁ > 0 > g₂`), so entangled draws are common.
    pub fn symmetric_multimode(&mut self, n: usize) -> Result<SymmetricMultimodeParams> {
        if n < 1 {
            return Err(Error::Domain(alloc::format!("need n >= 1, got {n}")));
        }
        for _ in 0..MAX_REJECTIONS {
            let b = self.uniform(1.05, 2.2);
            let cap = b - 1.0;
            let e1 = self.uniform(-cap, cap);
            let e2 = self.uniform(-cap, cap);
            let a1 = self.uniform(1.02, 2.2);
            let a2 = self.uniform(1.02, 2.2);
            let k = (n - 1) as f64;
            let (b1, b2) = (b + k * e1, b + k * e2);
            if b1 <= 0.0 || b2 <= 0.0 {
                continue;
            }
            let t = self.uniform(0.0, 0.98);
            let g1 = t * (a1 * b1 / n as f64).sqrt();
            let g2 = -t * self.uniform(0.3, 1.0) * (a2 * b2 / n as f64).sqrt();
            if let Ok(params) = SymmetricMultimodeParams::new(a1, a2, b, e1, e2, g1, g2, n) {
                return Ok(params);
            }
        }
        Err(Error::SamplingExhausted {
            attempts: MAX_REJECTIONS,
        })
    }

    /// Random full covariance matrix with a known symplectic spectrum:
    /// `S·diag(ν)·Sᵀ` where `S` is a product of ten random phase
    /// rotations, single-mode squeezers and (for `N ≥ 2`) two-mode
    /// squeezers. Returns the matrix together with the ground-truth
    /// spectrum (ascending).
    pub fn random_cm(&mut self, n_modes: usize) -> (CovarianceMatrix, Vec<f64>) {
        assert!(n_modes >= 1);
        let dim = 2 * n_modes;
        let mut nus: Vec<f64> = (0..n_modes).map(|_| self.uniform(1.0, 2.0)).collect();
        let mut diag = DMatrix::zeros(dim, dim);
        for (k, &nu) in nus.iter().enumerate() {
            diag[(2 * k, 2 * k)] = nu;
            diag[(2 * k + 1, 2 * k + 1)] = nu;
        }
        let mut s = DMatrix::identity(dim, dim);
        for _ in 0..10 {
            let op = match self.rng.random_range(0..3u8) {
                0 => {
                    let mode = self.rng.random_range(0..n_modes);
                    let theta = self.uniform(0.0, core::f64::consts::TAU);
                    phase_rotation(n_modes, mode, theta)
                }
                1 => {
                    let mode = self.rng.random_range(0..n_modes);
                    let z = self.uniform(-0.12, 0.12);
                    single_mode_squeezer(n_modes, mode, z)
                }
                _ if n_modes >= 2 => {
                    let i = self.rng.random_range(0..n_modes);
                    let mut j = self.rng.random_range(0..n_modes - 1);
                    if j >= i {
                        j += 1;
                    }
                    let r = self.uniform(0.0, 0.12);
                    two_mode_squeezer(n_modes, i, j, r)
                }
                _ => {
                    let mode = self.rng.random_range(0..n_modes);
                    let z = self.uniform(-0.12, 0.12);
                    single_mode_squeezer(n_modes, mode, z)
                }
            };
            s = op * s;
        }
        let cm = CovarianceMatrix::from_parts_unchecked(n_modes, diag)
            .congruence(&s)
            .expect("dimension-consistent by construction");
        nus.sort_by(|a, b| a.partial_cmp(b).unwrap());
        (cm, nus)
    }

    /// Random symplectic acting on a single mode of an `n_modes` system:
    /// rotation · squeeze · rotation.
    pub fn random_local_symplectic(&mut self, n_modes: usize, mode: usize) -> DMatrix<f64> {
        let r1 = phase_rotation(n_modes, mode, self.uniform(0.0, core::f64::consts::TAU));
        let sq = single_mode_squeezer(n_modes, mode, self.uniform(-0.4, 0.4));
        let r2 = phase_rotation(n_modes, mode, self.uniform(0.0, core::f64::consts::TAU));
        r2 * sq * r1
    }
}

/// Phase rotation of one mode, embedded in the full system.
pub fn phase_rotation(n_modes: usize, mode: usize, theta: f64) -> DMatrix<f64> {
    let mut m = DMatrix::identity(2 * n_modes, 2 * n_modes);
    let (c, s) = (theta.cos(), theta.sin());
    m[(2 * mode, 2 * mode)] = c;
    m[(2 * mode, 2 * mode + 1)] = s;
    m[(2 * mode + 1, 2 * mode)] = -s;
    m[(2 * mode + 1, 2 * mode + 1)] = c;
    m
}

/// Single-mode squeezer `diag(e^z, e^-z)` on one mode.
pub fn single_mode_squeezer(n_modes: usize, mode: usize, z: f64) -> DMatrix<f64> {
    let mut m = DMatrix::identity(2 * n_modes, 2 * n_modes);
    m[(2 * mode, 2 * mode)] = z.exp();
    m[(2 * mode + 1, 2 * mode + 1)] = (-z).exp();
    m
}

/// Two-mode squeezer with parameter `r` acting on modes `i != j`.
pub fn two_mode_squeezer(n_modes: usize, i: usize, j: usize, r: f64) -> DMatrix<f64> {
    assert!(i != j && i < n_modes && j < n_modes);
    let mut m = DMatrix::identity(2 * n_modes, 2 * n_modes);
    let (ch, sh) = (r.cosh(), r.sinh());
    for &(row, col, val) in &[
        (2 * i, 2 * i, ch),
        (2 * i + 1, 2 * i + 1, ch),
        (2 * j, 2 * j, ch),
        (2 * j + 1, 2 * j + 1, ch),
        (2 * i, 2 * j, sh),
        (2 * j, 2 * i, sh),
        (2 * i + 1, 2 * j + 1, -sh),
        (2 * j + 1, 2 * i + 1, -sh),
    ] {
        m[(row, col)] = val;
    }
    m
}

/// Independent oracle for the closed-form negativity bounds: sweeps the
/// seralian uniformly over its physical window (`grid` points, endpoints
/// included) and takes the extrema of the closed-form negativity at each
/// point. Used by tests against the GMEMS/GLEMS formulas.
pub fn brute_force_negativity_bounds(
    mu1: f64,
    mu2: f64,
    mu: f64,
    grid: usize,
) -> Result<(f64, f64)> {
    let lo = delta_lower(mu1, mu2, mu);
    let hi = delta_upper(mu1, mu2, mu);
    let mut e_min = f64::INFINITY;
    let mut e_max = f64::NEG_INFINITY;
    for delta in linspace(lo, hi.max(lo), grid.max(2)) {
        let inv = TwoModeInvariants::new(mu1, mu2, mu, delta)?;
        let en = inv.negativity()?;
        e_min = e_min.min(en);
        e_max = e_max.max(en);
    }
    Ok((e_min, e_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extremal::negativity_bounds;
    use crate::two_mode::validate_invariants;

    #[test]
    fn identical_seeds_replay() {
        let mut a = Sampler::new(SamplerConfig::with_seed(42)).unwrap();
        let mut b = Sampler::new(SamplerConfig::with_seed(42)).unwrap();
        for _ in 0..32 {
            let x = a.two_mode_invariants().unwrap();
            let y = b.two_mode_invariants().unwrap();
            assert_eq!(
                (x.mu1(), x.mu2(), x.mu(), x.delta()),
                (y.mu1(), y.mu2(), y.mu(), y.delta())
            );
        }
        let p = a.symmetric_multimode(3).unwrap();
        let q = b.symmetric_multimode(3).unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn samples_are_always_physical() {
        let mut s = Sampler::new(SamplerConfig::with_seed(7)).unwrap();
        for _ in 0..500 {
            let inv = s.two_mode_invariants().unwrap();
            let report = validate_invariants(inv.mu1(), inv.mu2(), inv.mu(), inv.delta());
            assert!(report.physical);
        }
    }

    #[test]
    fn region_filter_is_respected() {
        for region in [Region::Separable, Region::Coexistence, Region::Entangled] {
            let mut s = Sampler::new(SamplerConfig {
                seed: 11,
                region_filter: Some(region),
                ..SamplerConfig::default()
            })
            .unwrap();
            for _ in 0..50 {
                let inv = s.two_mode_invariants().unwrap();
                assert_eq!(classify(inv.mu1(), inv.mu2(), inv.mu()).region, region);
            }
        }
    }

    #[test]
    fn random_cm_recovers_known_spectrum() {
        let mut s = Sampler::new(SamplerConfig::with_seed(3)).unwrap();
        for n in 1..=5 {
            let (cm, nus) = s.random_cm(n);
            let spec = cm.symplectic_spectrum().unwrap();
            for (got, want) in spec.values().iter().zip(&nus) {
                assert!((got - want).abs() < 1e-9, "n={n}: {got} vs {want}");
            }
            assert!(cm.check_physical(1e-9));
        }
    }

    #[test]
    fn multimode_samples_pass_physicality() {
        let mut s = Sampler::new(SamplerConfig::with_seed(5)).unwrap();
        for _ in 0..100 {
            let params = s.symmetric_multimode(4).unwrap();
            assert!(params.to_cm().is_ok());
        }
    }

    #[test]
    fn brute_force_separable_region_is_flat_zero() {
        let (lo, hi) = brute_force_negativity_bounds(0.5, 0.5, 0.3, 200).unwrap();
        assert_eq!((lo, hi), (0.0, 0.0));
    }

    #[test]
    fn brute_force_agrees_with_closed_forms() {
        let (lo, hi) = brute_force_negativity_bounds(0.8, 0.8, 0.9, 10_000).unwrap();
        let b = negativity_bounds(0.8, 0.8, 0.9).unwrap();
        assert!((lo - b.e_min).abs() < 1e-6, "{lo} vs {}", b.e_min);
        assert!((hi - b.e_max).abs() < 1e-6, "{hi} vs {}", b.e_max);
    }

    #[test]
    fn brute_force_endpoints_match_extremal_constructions() {
        let (mu1, mu2, mu) = (0.7, 0.55, 0.6);
        let e_gmems = TwoModeInvariants::new(mu1, mu2, mu, delta_lower(mu1, mu2, mu))
            .unwrap()
            .negativity()
            .unwrap();
        let e_glems = TwoModeInvariants::new(mu1, mu2, mu, delta_upper(mu1, mu2, mu))
            .unwrap()
            .negativity()
            .unwrap();
        let (lo, hi) = brute_force_negativity_bounds(mu1, mu2, mu, 4001).unwrap();
        assert!((hi - e_gmems).abs() < 1e-8);
        assert!((lo - e_glems).abs() < 1e-8);
    }
}

