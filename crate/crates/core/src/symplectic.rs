//! Covariance matrices, the symplectic form, symplectic spectra, and
//! partial transposition for `N`-mode Gaussian states.
//!
//! Quadratures are ordered `x₁, p₁, …, x_N, p_N` and the vacuum variance
//! is 1 (`x̂ = â + â†`), so a physical covariance matrix satisfies the
//! uncertainty relation `σ + iΩ ≥ 0`, equivalently `σ > 0` together with
//! `ν_i ≥ 1` for every symplectic eigenvalue `ν_i`.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use nalgebra::{DMatrix, Matrix2};
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::{Error, Result};

/// Absolute tolerance for the symmetry validation of covariance matrices.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Relative tolerance used when pairing the eigenvalue moduli of `Ωσ`
/// into doubly degenerate symplectic eigenvalues.
pub const PAIRING_TOL: f64 = 1e-8;

/// Default tolerance on `ν_min ≥ 1` for physicality checks.
pub const PHYSICALITY_TOL: f64 = 1e-9;

/// The symplectic form `Ω = ⊕ ω` with `ω = [[0, 1], [-1, 0]]`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticForm {
    n_modes: usize,
    entries: DMatrix<f64>,
}

impl SymplecticForm {
    /// Builds the block-diagonal form for `n_modes ≥ 1`. Satisfies
    /// `Ωᵀ = -Ω` and `Ω² = -1`.
    pub fn new(n_modes: usize) -> Self {
        assert!(n_modes >= 1, "need at least one mode");
        Self {
            n_modes,
            entries: omega_matrix(n_modes),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }
}

pub(crate) fn omega_matrix(n_modes: usize) -> DMatrix<f64> {
    let dim = 2 * n_modes;
    let mut m = DMatrix::zeros(dim, dim);
    for k in 0..n_modes {
        m[(2 * k, 2 * k + 1)] = 1.0;
        m[(2 * k + 1, 2 * k)] = -1.0;
    }
    m
}

/// Symplectic spectrum of a covariance matrix (or of its partial
/// transpose): the `N` moduli `ν_i`, sorted ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct SymplecticSpectrum {
    values: Vec<f64>,
}

impl SymplecticSpectrum {
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Product of squared eigenvalues; equals `Det σ` for the source matrix.
    pub fn det(&self) -> f64 {
        self.values.iter().map(|v| v * v).product()
    }

    /// Sum of squared eigenvalues (the second global symplectic invariant).
    pub fn seralian(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum()
    }
}

/// Global symplectic invariants of a covariance matrix: `Det σ` and the
/// seralian `Δ = Σ ν_i²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GlobalInvariants {
    pub det_sigma: f64,
    pub seralian: f64,
}

/// A `2N×2N` real symmetric matrix of second moments; the Gaussian state
/// itself, up to first moments.
#[derive(Debug, Clone, PartialEq)]
pub struct CovarianceMatrix {
    n_modes: usize,
    entries: DMatrix<f64>,
}

impl CovarianceMatrix {
    /// Validates dimensions, finiteness and symmetry (within
    /// [`SYMMETRY_TOL`]) before wrapping the matrix.
    pub fn new(n_modes: usize, entries: DMatrix<f64>) -> Result<Self> {
        if n_modes == 0 || entries.nrows() != 2 * n_modes || entries.ncols() != 2 * n_modes {
            return Err(Error::DimensionMismatch {
                dim: entries.nrows().max(entries.ncols()),
                n_modes,
            });
        }
        if entries.iter().any(|x| !x.is_finite()) {
            return Err(Error::Domain(String::from("non-finite covariance entry")));
        }
        let mut max_asym = 0.0f64;
        for i in 0..entries.nrows() {
            for j in (i + 1)..entries.ncols() {
                max_asym = max_asym.max((entries[(i, j)] - entries[(j, i)]).abs());
            }
        }
        if max_asym > SYMMETRY_TOL {
            return Err(Error::NotSymmetric {
                max_asymmetry: max_asym,
            });
        }
        Ok(Self { n_modes, entries })
    }

    /// Wraps a matrix that is symmetric by construction.
    pub(crate) fn from_parts_unchecked(n_modes: usize, entries: DMatrix<f64>) -> Self {
        debug_assert_eq!(entries.nrows(), 2 * n_modes);
        Self { n_modes, entries }
    }

    /// The vacuum state of `n_modes` modes.
    pub fn identity(n_modes: usize) -> Self {
        assert!(n_modes >= 1, "need at least one mode");
        Self {
            n_modes,
            entries: DMatrix::identity(2 * n_modes, 2 * n_modes),
        }
    }

    pub fn n_modes(&self) -> usize {
        self.n_modes
    }

    pub fn dim(&self) -> usize {
        2 * self.n_modes
    }

    pub fn entries(&self) -> &DMatrix<f64> {
        &self.entries
    }

    /// The `2×2` block coupling modes `i` and `j` (`i == j` gives the
    /// reduced single-mode covariance matrix).
    pub fn mode_block(&self, i: usize, j: usize) -> Result<Matrix2<f64>> {
        for &k in &[i, j] {
            if k >= self.n_modes {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    n_modes: self.n_modes,
                });
            }
        }
        Ok(self
            .entries
            .fixed_view::<2, 2>(2 * i, 2 * j)
            .into_owned())
    }

    /// Tensor product of uncorrelated states: block-diagonal concatenation.
    pub fn direct_sum(&self, other: &CovarianceMatrix) -> CovarianceMatrix {
        let n = self.n_modes + other.n_modes;
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        m.view_mut((0, 0), (self.dim(), self.dim()))
            .copy_from(&self.entries);
        m.view_mut((self.dim(), self.dim()), (other.dim(), other.dim()))
            .copy_from(&other.entries);
        CovarianceMatrix::from_parts_unchecked(n, m)
    }

    /// Reduced state on a subset of modes (principal submatrix). Modes are
    /// kept in ascending order; duplicates are ignored.
    pub fn restrict(&self, modes: &[usize]) -> Result<CovarianceMatrix> {
        let kept = self.validated_mode_set(modes)?;
        if kept.is_empty() {
            return Err(Error::Domain(String::from("cannot restrict to zero modes")));
        }
        let kept: Vec<usize> = kept.into_iter().collect();
        let n = kept.len();
        let mut m = DMatrix::zeros(2 * n, 2 * n);
        for (a, &i) in kept.iter().enumerate() {
            for (b, &j) in kept.iter().enumerate() {
                m.view_mut((2 * a, 2 * b), (2, 2))
                    .copy_from(&self.entries.view((2 * i, 2 * j), (2, 2)));
            }
        }
        Ok(CovarianceMatrix::from_parts_unchecked(n, m))
    }

    /// Congruence `S σ Sᵀ` by a (typically symplectic) transformation.
    /// The result is re-symmetrized to absorb rounding.
    pub fn congruence(&self, s: &DMatrix<f64>) -> Result<CovarianceMatrix> {
        if s.nrows() != self.dim() || s.ncols() != self.dim() {
            return Err(Error::DimensionMismatch {
                dim: s.nrows().max(s.ncols()),
                n_modes: self.n_modes,
            });
        }
        let m = s * &self.entries * s.transpose();
        let sym = (&m + m.transpose()) * 0.5;
        Ok(CovarianceMatrix::from_parts_unchecked(self.n_modes, sym))
    }

    /// Partial transposition: mirror reflection of the momentum quadrature
    /// of each listed mode. An exact involution.
    pub fn partial_transpose(&self, modes: &[usize]) -> Result<CovarianceMatrix> {
        let flipped = self.validated_mode_set(modes)?;
        let mut m = self.entries.clone();
        for &k in &flipped {
            let row = 2 * k + 1;
            for j in 0..m.ncols() {
                m[(row, j)] = -m[(row, j)];
            }
            for i in 0..m.nrows() {
                m[(i, row)] = -m[(i, row)];
            }
        }
        Ok(CovarianceMatrix::from_parts_unchecked(self.n_modes, m))
    }

    /// Symplectic spectrum as the paired moduli of the eigenvalues of `Ωσ`.
    ///
    /// The `2N` moduli must group into `N` doubly degenerate pairs within
    /// [`PAIRING_TOL`]; otherwise [`Error::PairingFailure`] is raised
    /// instead of silently truncating.
    pub fn symplectic_spectrum(&self) -> Result<SymplecticSpectrum> {
        let omega = omega_matrix(self.n_modes);
        let prod = omega * &self.entries;
        let eig = prod.complex_eigenvalues();
        let mut moduli: Vec<f64> = eig.iter().map(|z| libm::hypot(z.re, z.im)).collect();
        moduli.sort_by(|a, b| a.partial_cmp(b).expect("finite moduli"));
        let mut values = Vec::with_capacity(self.n_modes);
        for k in 0..self.n_modes {
            let (lo, hi) = (moduli[2 * k], moduli[2 * k + 1]);
            let gap = hi - lo;
            if gap > PAIRING_TOL * hi.max(1.0) {
                return Err(Error::PairingFailure { index: k, gap });
            }
            values.push(0.5 * (lo + hi));
        }
        Ok(SymplecticSpectrum { values })
    }

    /// Physicality test: positive definite and `ν_min ≥ 1 - tol`.
    ///
    /// Returns `false` (rather than an error) for non-positive-definite or
    /// numerically degenerate inputs.
    pub fn check_physical(&self, tol: f64) -> bool {
        if self.entries.clone().cholesky().is_none() {
            return false;
        }
        match self.symplectic_spectrum() {
            Ok(spec) => spec.min() >= 1.0 - tol,
            Err(_) => false,
        }
    }

    /// `Det σ` and the seralian `Δ = Σ ν_i²`. Valid for physical matrices
    /// and for partial transposes of physical matrices.
    pub fn global_invariants(&self) -> Result<GlobalInvariants> {
        let spec = self.symplectic_spectrum()?;
        Ok(GlobalInvariants {
            det_sigma: self.entries.determinant(),
            seralian: spec.seralian(),
        })
    }

    /// Logarithmic negativity `E_N = -Σ ln ν̃_i` over the partially
    /// transposed eigenvalues below 1 (natural logarithm), for the
    /// bipartition `partition` vs the rest.
    pub fn log_negativity(&self, partition: &[usize]) -> Result<f64> {
        let pt = self.partial_transpose(partition)?;
        let spec = pt.symplectic_spectrum()?;
        Ok(spec
            .values()
            .iter()
            .filter(|v| **v < 1.0)
            .map(|v| -v.ln())
            .sum())
    }

    fn validated_mode_set(&self, modes: &[usize]) -> Result<BTreeSet<usize>> {
        let mut set = BTreeSet::new();
        for &k in modes {
            if k >= self.n_modes {
                return Err(Error::IndexOutOfRange {
                    index: k,
                    n_modes: self.n_modes,
                });
            }
            set.insert(k);
        }
        Ok(set)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::testutil::{diag_cm as cm_from_diag, two_mode_squeezed_vacuum};

    #[test]
    fn omega_single_mode() {
        let omega = SymplecticForm::new(1);
        let expect = DMatrix::from_row_slice(2, 2, &[0.0, 1.0, -1.0, 0.0]);
        assert_eq!(omega.entries(), &expect);
    }

    #[test]
    fn omega_is_antisymmetric_and_squares_to_minus_identity() {
        for n in 1..=4 {
            let omega = SymplecticForm::new(n);
            let m = omega.entries();
            assert_eq!(m.transpose(), -m);
            let sq = m * m;
            let minus_id = -DMatrix::<f64>::identity(2 * n, 2 * n);
            assert_eq!(sq, minus_id);
        }
    }

    #[test]
    fn spectrum_of_williamson_diagonal() {
        let cm = cm_from_diag(&[2.0, 2.0, 3.0, 3.0]);
        let spec = cm.symplectic_spectrum().unwrap();
        assert!((spec.values()[0] - 2.0).abs() < 1e-12);
        assert!((spec.values()[1] - 3.0).abs() < 1e-12);
    }

    #[test]
    fn spectrum_of_two_mode_squeezed_vacuum_is_pure() {
        let cm = two_mode_squeezed_vacuum(1.0);
        let spec = cm.symplectic_spectrum().unwrap();
        for v in spec.values() {
            assert!((v - 1.0).abs() < 1e-10, "nu = {v}");
        }
    }

    #[test]
    fn physicality_examples() {
        assert!(CovarianceMatrix::identity(2).check_physical(PHYSICALITY_TOL));
        // nu = 0.5 < 1
        assert!(!cm_from_diag(&[0.5, 0.5]).check_physical(PHYSICALITY_TOL));
        // minimum-uncertainty squeezed mode: nu = sqrt(2 * 0.5) = 1
        assert!(cm_from_diag(&[2.0, 0.5]).check_physical(PHYSICALITY_TOL));
        // not positive definite
        assert!(!cm_from_diag(&[1.0, -1.0]).check_physical(PHYSICALITY_TOL));
    }

    #[test]
    fn partial_transpose_examples() {
        let id = CovarianceMatrix::identity(2);
        assert_eq!(id.partial_transpose(&[1]).unwrap(), id);

        let cm = two_mode_squeezed_vacuum(1.0);
        let pt = cm.partial_transpose(&[1]).unwrap();
        let sh = 2.0f64.sinh();
        let block = pt.mode_block(0, 1).unwrap();
        assert!((block[(0, 0)] - sh).abs() < 1e-15);
        assert!((block[(1, 1)] - sh).abs() < 1e-15);

        // exact involution
        let back = pt.partial_transpose(&[1]).unwrap();
        assert_eq!(back, cm);
    }

    #[test]
    fn partial_transpose_index_out_of_range() {
        let cm = CovarianceMatrix::identity(2);
        assert!(matches!(
            cm.partial_transpose(&[2]),
            Err(Error::IndexOutOfRange { index: 2, .. })
        ));
    }

    #[test]
    fn global_invariants_examples() {
        let id = CovarianceMatrix::identity(2);
        let gi = id.global_invariants().unwrap();
        assert!((gi.det_sigma - 1.0).abs() < 1e-12);
        assert!((gi.seralian - 2.0).abs() < 1e-12);

        let th = cm_from_diag(&[2.0, 2.0, 3.0, 3.0]);
        let gi = th.global_invariants().unwrap();
        assert!((gi.det_sigma - 36.0).abs() < 1e-10);
        assert!((gi.seralian - 13.0).abs() < 1e-10);

        // pure two-mode squeezed state: Det = 1, seralian = 2 for any r
        for r in [0.3, 0.9, 1.7] {
            let gi = two_mode_squeezed_vacuum(r).global_invariants().unwrap();
            assert!((gi.det_sigma - 1.0).abs() < 1e-7, "r={r}: {}", gi.det_sigma);
            assert!((gi.seralian - 2.0).abs() < 1e-8, "r={r}: {}", gi.seralian);
        }
    }

    #[test]
    fn log_negativity_examples() {
        let id = CovarianceMatrix::identity(2);
        assert_eq!(id.log_negativity(&[1]).unwrap(), 0.0);

        // E_N = 2r for the two-mode squeezed vacuum
        let cm = two_mode_squeezed_vacuum(1.0);
        let en = cm.log_negativity(&[0]).unwrap();
        assert!((en - 2.0).abs() < 1e-9, "en = {en}");

        let th = cm_from_diag(&[2.0, 2.0, 3.0, 3.0]);
        assert_eq!(th.log_negativity(&[0]).unwrap(), 0.0);
    }

    #[test]
    fn symmetry_is_validated() {
        let mut m = DMatrix::identity(2, 2);
        m[(0, 1)] = 1e-6;
        assert!(matches!(
            CovarianceMatrix::new(1, m),
            Err(Error::NotSymmetric { .. })
        ));
    }

    #[test]
    fn non_finite_entries_rejected() {
        let mut m = DMatrix::identity(2, 2);
        m[(0, 0)] = f64::NAN;
        assert!(CovarianceMatrix::new(1, m).is_err());
    }

    #[test]
    fn restrict_keeps_reduced_state() {
        let cm = two_mode_squeezed_vacuum(0.7).direct_sum(&CovarianceMatrix::identity(1));
        let reduced = cm.restrict(&[0, 1]).unwrap();
        assert_eq!(reduced, two_mode_squeezed_vacuum(0.7));
        let single = cm.restrict(&[2]).unwrap();
        assert_eq!(single, CovarianceMatrix::identity(1));
    }
}
