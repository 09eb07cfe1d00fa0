//! Independent numerical machinery: finite-difference operators, Sturm
//! bisection, inverse iteration and Simpson quadrature. Every analytic
//! formula in the crate is checked against these routines.

mod quadrature;
mod solve;
mod tridiag;

pub use quadrature::{cumulative_simpson, inner, norm, quadrature, simpson};
pub use solve::{numeric_spectrum, numeric_wavefunction, raw_eigenvalues};
pub use tridiag::{discretize, discretize_with, first_lobe_sign, LeftBoundary, TridiagonalOperator};

use crate::error::{Error, Result};
use crate::superpot::PartnerPotentials;
use serde::Serialize;

/// Default bisection width for eigenvalues.
pub const DEFAULT_TOL: f64 = 1e-9;

/// df/dr: centered differences inside, second-order one-sided at both ends.
pub fn first_derivative(f: &[f64], h: f64) -> Vec<f64> {
    let n = f.len();
    if n < 3 {
        return vec![0.0; n];
    }
    let mut d = vec![0.0; n];
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for i in 1..n - 1 {
        d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    }
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    d
}

/// Three-point f″ at interior points; entry i corresponds to grid index i + 1.
pub fn second_derivative_interior(f: &[f64], h: f64) -> Vec<f64> {
    f.windows(3)
        .map(|w| (w[0] - 2.0 * w[1] + w[2]) / (h * h))
        .collect()
}

/// Pairing of the two partner spectra.
#[derive(Debug, Clone, Serialize)]
pub struct IsospectralReport {
    /// Lowest k eigenvalues of V₋.
    pub minus: Vec<f64>,
    /// Lowest k − 1 eigenvalues of V₊.
    pub plus: Vec<f64>,
    /// |eigs(V₊)[i] − eigs(V₋)[i + 1]|.
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
    pub tolerance: f64,
    pub passed: bool,
}

/// Solves both partners and pairs eigs(V₊)[i] with eigs(V₋)[i + 1]; the lower
/// partner keeps the extra ε² = 0 level when SUSY is unbroken.
pub fn isospectral_check(pp: &PartnerPotentials, k: usize, tol: f64) -> Result<IsospectralReport> {
    if k < 2 {
        return Err(Error::Argument(format!("isospectral check needs k >= 2, got {k}")));
    }
    let minus = pp.minus_operator()?.lowest_eigenvalues(k, DEFAULT_TOL)?;
    let plus = pp.plus_operator()?.lowest_eigenvalues(k - 1, DEFAULT_TOL)?;
    let deviations: Vec<f64> = plus
        .iter()
        .zip(&minus[1..])
        .map(|(p, m)| (p - m).abs())
        .collect();
    let max_deviation = deviations.iter().cloned().fold(0.0, f64::max);
    Ok(IsospectralReport {
        passed: max_deviation < tol,
        minus,
        plus,
        deviations,
        max_deviation,
        tolerance: tol,
    })
}
