//! Shared helpers for unit tests.

use nalgebra::{DMatrix, DVector};

use crate::symplectic::CovarianceMatrix;

pub(crate) fn diag_cm(diag: &[f64]) -> CovarianceMatrix {
    assert_eq!(diag.len() % 2, 0);
    let n = diag.len() / 2;
    let m = DMatrix::from_diagonal(&DVector::from_row_slice(diag));
    CovarianceMatrix::new(n, m).unwrap()
}

/// Two-mode squeezed vacuum: a = b = cosh 2r, c₊ = -c₋ = sinh 2r.
pub(crate) fn two_mode_squeezed_vacuum(r: f64) -> CovarianceMatrix {
    let (ch, sh) = ((2.0 * r).cosh(), (2.0 * r).sinh());
    let m = DMatrix::from_row_slice(
        4,
        4,
        &[
            ch, 0.0, sh, 0.0, //
            0.0, ch, 0.0, -sh, //
            sh, 0.0, ch, 0.0, //
            0.0, -sh, 0.0, ch,
        ],
    );
    CovarianceMatrix::new(2, m).unwrap()
}
