//! Symmetric tridiagonal operators: Sturm-sequence bisection for eigenvalues
//! and shifted inverse iteration for eigenvectors.

use super::quadrature;
use crate::error::{Error, Result};
use crate::grid::RadialGrid;

const BISECTION_MAX_ITER: usize = 256;
const INVERSE_ITERATIONS: usize = 5;
const SHIFT_RETRIES: usize = 4;

/// Condition imposed at r_min.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LeftBoundary {
    /// f(r_min) = 0; r_min is not an unknown.
    Dirichlet,
    /// f′(r_min) + w0·f(r_min) = 0, closed with a centered ghost point.
    /// With w0 = W(r_min) this is the condition (∂ + W)f = 0 that keeps the
    /// zero mode exp(−∫W) in the lower partner's domain.
    Robin { w0: f64 },
}

/// Three-point discretization of −d²/dr² + V with a Dirichlet right end.
///
/// Stored in symmetric form. For a Robin left end the first unknown is
/// rescaled by 1/√2, so grid samples and stored vectors differ there.
#[derive(Debug, Clone)]
pub struct TridiagonalOperator {
    diag: Vec<f64>,
    off: Vec<f64>,
    grid: RadialGrid,
    left: LeftBoundary,
}

/// Dirichlet discretization on the interior points (N = n_points − 2).
pub fn discretize(v: &[f64], grid: &RadialGrid) -> Result<TridiagonalOperator> {
    discretize_with(v, grid, LeftBoundary::Dirichlet)
}

pub fn discretize_with(
    v: &[f64],
    grid: &RadialGrid,
    left: LeftBoundary,
) -> Result<TridiagonalOperator> {
    grid.check_len(v.len(), "potential")?;
    let n = grid.n_points();
    let h = grid.h();
    let inv_h2 = 1.0 / (h * h);
    let first = match left {
        LeftBoundary::Dirichlet => 1,
        LeftBoundary::Robin { w0 } => {
            if !w0.is_finite() {
                return Err(Error::Domain(format!("Robin coefficient is not finite: {w0}")));
            }
            0
        }
    };
    if n - 1 - first < 1 {
        return Err(Error::InvalidGrid("no interior unknowns".into()));
    }
    let mut diag = Vec::with_capacity(n - 1 - first);
    for (i, &vi) in v.iter().enumerate().take(n - 1).skip(first) {
        if !vi.is_finite() {
            return Err(Error::Domain(format!(
                "potential is not finite at r = {} (index {i})",
                grid.r(i)
            )));
        }
        diag.push(2.0 * inv_h2 + vi);
    }
    let mut off = vec![-inv_h2; diag.len() - 1];
    if let LeftBoundary::Robin { w0 } = left {
        diag[0] = (2.0 - 2.0 * h * w0) * inv_h2 + v[0];
        if let Some(o) = off.first_mut() {
            *o = -std::f64::consts::SQRT_2 * inv_h2;
        }
    }
    Ok(TridiagonalOperator {
        diag,
        off,
        grid: *grid,
        left,
    })
}

impl TridiagonalOperator {
    /// Builds an operator directly from its symmetric bands. The grid only
    /// fixes the mapping to samples; `diag.len()` must equal n_points − 2.
    pub fn from_bands(diag: Vec<f64>, off: Vec<f64>, grid: RadialGrid) -> Result<Self> {
        if diag.is_empty() || off.len() + 1 != diag.len() {
            return Err(Error::Argument(format!(
                "band lengths {} / {} are inconsistent",
                diag.len(),
                off.len()
            )));
        }
        if diag.len() + 2 != grid.n_points() {
            return Err(Error::Argument(format!(
                "{} unknowns do not match a grid of {} points",
                diag.len(),
                grid.n_points()
            )));
        }
        Ok(Self {
            diag,
            off,
            grid,
            left: LeftBoundary::Dirichlet,
        })
    }

    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[f64] {
        &self.diag
    }

    pub fn off(&self) -> &[f64] {
        &self.off
    }

    pub fn grid(&self) -> &RadialGrid {
        &self.grid
    }

    pub fn left_boundary(&self) -> LeftBoundary {
        self.left
    }

    /// Gershgorin enclosure [min(d) − 2·max|e|, max(d) + 2·max|e|].
    pub fn gershgorin(&self) -> (f64, f64) {
        let max_off = self.off.iter().fold(0.0f64, |m, e| m.max(e.abs()));
        let (lo, hi) = self
            .diag
            .iter()
            .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), &d| {
                (lo.min(d), hi.max(d))
            });
        (lo - 2.0 * max_off, hi + 2.0 * max_off)
    }

    fn pivmin(&self) -> f64 {
        let max_e2 = self.off.iter().fold(1.0f64, |m, e| m.max(e * e));
        f64::MIN_POSITIVE * max_e2
    }

    /// Number of eigenvalues strictly below `lambda` (negative pivots of the
    /// LDLᵀ factorization of A − λ).
    pub fn sturm_count(&self, lambda: f64) -> usize {
        let pivmin = self.pivmin();
        let mut count = 0;
        let mut q = self.diag[0] - lambda;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
        for i in 1..self.diag.len() {
            let e = self.off[i - 1];
            q = (self.diag[i] - lambda) - e * e / q;
            if q.abs() < pivmin {
                q = -pivmin;
            }
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The `k` smallest eigenvalues, ascending, each bisected to width < `tol`.
    pub fn lowest_eigenvalues(&self, k: usize, tol: f64) -> Result<Vec<f64>> {
        if k == 0 || k > self.dim() {
            return Err(Error::Argument(format!(
                "requested {k} eigenvalues of a {}-dimensional operator",
                self.dim()
            )));
        }
        if !(tol > 0.0) {
            return Err(Error::Argument(format!("tolerance must be > 0, got {tol}")));
        }
        let (lo, hi) = self.gershgorin();
        (0..k).map(|j| self.bisect(j, lo, hi, tol)).collect()
    }

    fn bisect(&self, index: usize, mut lo: f64, mut hi: f64, tol: f64) -> Result<f64> {
        for _ in 0..BISECTION_MAX_ITER {
            let mid = 0.5 * (lo + hi);
            if hi - lo < tol || mid <= lo || mid >= hi {
                return Ok(mid);
            }
            if self.sturm_count(mid) > index {
                hi = mid;
            } else {
                lo = mid;
            }
        }
        Err(Error::Numeric(format!(
            "bisection for eigenvalue {index} did not reach width {tol} in {BISECTION_MAX_ITER} steps"
        )))
    }

    /// y ↦ A y in the symmetric representation.
    pub fn apply(&self, y: &[f64]) -> Vec<f64> {
        let n = self.dim();
        (0..n)
            .map(|i| {
                let mut s = self.diag[i] * y[i];
                if i > 0 {
                    s += self.off[i - 1] * y[i - 1];
                }
                if i + 1 < n {
                    s += self.off[i] * y[i + 1];
                }
                s
            })
            .collect()
    }

    /// ‖(A − λ)y‖₂ / ‖y‖₂ in the symmetric representation.
    pub fn residual(&self, lambda: f64, y: &[f64]) -> f64 {
        let ay = self.apply(y);
        let num: f64 = ay
            .iter()
            .zip(y)
            .map(|(a, b)| (a - lambda * b).powi(2))
            .sum();
        let den: f64 = y.iter().map(|b| b * b).sum();
        (num / den).sqrt()
    }

    /// Residual of a vector given as grid samples (as returned by
    /// [`TridiagonalOperator::eigenvector`]).
    pub fn sample_residual(&self, lambda: f64, samples: &[f64]) -> f64 {
        self.residual(lambda, &self.from_samples(samples))
    }

    /// Maps a stored vector onto all grid points, boundary values included.
    pub fn to_samples(&self, y: &[f64]) -> Vec<f64> {
        let n = self.grid.n_points();
        let mut f = vec![0.0; n];
        match self.left {
            LeftBoundary::Dirichlet => f[1..n - 1].copy_from_slice(y),
            LeftBoundary::Robin { .. } => {
                f[..n - 1].copy_from_slice(y);
                f[0] *= std::f64::consts::SQRT_2;
            }
        }
        f
    }

    pub fn from_samples(&self, f: &[f64]) -> Vec<f64> {
        let n = self.grid.n_points();
        match self.left {
            LeftBoundary::Dirichlet => f[1..n - 1].to_vec(),
            LeftBoundary::Robin { .. } => {
                let mut y = f[..n - 1].to_vec();
                y[0] /= std::f64::consts::SQRT_2;
                y
            }
        }
    }

    /// Eigenvector for an eigenvalue `lambda` already located to solver
    /// tolerance: inverse iteration from the all-ones vector, returned as grid
    /// samples with unit quadrature norm and a positive first lobe.
    pub fn eigenvector(&self, lambda: f64) -> Result<Vec<f64>> {
        let scale = self
            .diag
            .iter()
            .chain(&self.off)
            .fold(1.0f64, |m, x| m.max(x.abs()));
        let mut shift = lambda;
        let mut lu = None;
        for attempt in 0..SHIFT_RETRIES {
            match TridiagonalLu::factor(&self.diag, &self.off, shift) {
                Some(f) => {
                    lu = Some(f);
                    break;
                }
                None => {
                    shift = lambda + f64::EPSILON * scale * 10f64.powi(attempt as i32 + 1);
                }
            }
        }
        let lu = lu.ok_or_else(|| {
            Error::Numeric(format!("shifted system stays singular near λ = {lambda}"))
        })?;

        let mut y = vec![1.0; self.dim()];
        for _ in 0..INVERSE_ITERATIONS {
            let mut z = y.clone();
            lu.solve(&mut z);
            let nz = z.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !nz.is_finite() || nz == 0.0 {
                return Err(Error::Numeric(format!(
                    "inverse iteration broke down near λ = {lambda}"
                )));
            }
            z.iter_mut().for_each(|v| *v /= nz);
            let converged = z
                .iter()
                .zip(&y)
                .map(|(a, b)| (a - b).abs().min((a + b).abs()))
                .fold(0.0f64, f64::max)
                < 1e-14;
            y = z;
            if converged {
                break;
            }
        }

        let mut f = self.to_samples(&y);
        let nrm = quadrature::norm(&f, &self.grid);
        let sign = first_lobe_sign(&f);
        f.iter_mut().for_each(|v| *v *= sign / nrm);
        Ok(f)
    }
}

/// Sign of the first local extremum of `f` that reaches 1% of max |f|.
pub fn first_lobe_sign(f: &[f64]) -> f64 {
    let peak = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = 1e-2 * peak;
    let n = f.len();
    for i in 0..n {
        let a = f[i].abs();
        if a < threshold {
            continue;
        }
        let left_ok = i == 0 || a >= f[i - 1].abs();
        let right_ok = i + 1 == n || a >= f[i + 1].abs();
        if left_ok && right_ok {
            return if f[i] < 0.0 { -1.0 } else { 1.0 };
        }
    }
    1.0
}

/// LU factorization with partial pivoting of T − σI (LAPACK gttrf layout).
struct TridiagonalLu {
    dl: Vec<f64>,
    d: Vec<f64>,
    du: Vec<f64>,
    du2: Vec<f64>,
    swapped: Vec<bool>,
}

impl TridiagonalLu {
    fn factor(diag: &[f64], off: &[f64], shift: f64) -> Option<Self> {
        let n = diag.len();
        let mut d: Vec<f64> = diag.iter().map(|x| x - shift).collect();
        let mut dl = off.to_vec();
        let mut du = off.to_vec();
        let mut du2 = vec![0.0; n.saturating_sub(2)];
        let mut swapped = vec![false; n.saturating_sub(1)];
        for i in 0..n.saturating_sub(1) {
            if d[i].abs() >= dl[i].abs() {
                if d[i] == 0.0 {
                    return None;
                }
                let fact = dl[i] / d[i];
                dl[i] = fact;
                d[i + 1] -= fact * du[i];
            } else {
                let fact = d[i] / dl[i];
                d[i] = dl[i];
                dl[i] = fact;
                let temp = du[i];
                du[i] = d[i + 1];
                d[i + 1] = temp - fact * d[i + 1];
                if i + 2 < n {
                    du2[i] = du[i + 1];
                    du[i + 1] *= -fact;
                }
                swapped[i] = true;
            }
        }
        if d.iter().any(|&x| x == 0.0 || !x.is_finite()) {
            return None;
        }
        Some(Self {
            dl,
            d,
            du,
            du2,
            swapped,
        })
    }

    fn solve(&self, b: &mut [f64]) {
        let n = self.d.len();
        for i in 0..n.saturating_sub(1) {
            if self.swapped[i] {
                let temp = b[i];
                b[i] = b[i + 1];
                b[i + 1] = temp - self.dl[i] * b[i];
            } else {
                b[i + 1] -= self.dl[i] * b[i];
            }
        }
        b[n - 1] /= self.d[n - 1];
        if n > 1 {
            b[n - 2] = (b[n - 2] - self.du[n - 2] * b[n - 1]) / self.d[n - 2];
        }
        for i in (0..n.saturating_sub(2)).rev() {
            b[i] = (b[i] - self.du[i] * b[i + 1] - self.du2[i] * b[i + 2]) / self.d[i];
        }
    }
}
