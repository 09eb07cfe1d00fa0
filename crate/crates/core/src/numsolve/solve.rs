use super::{inner, DEFAULT_TOL};
use crate::analytic::RadialWavefunction;
use crate::error::Result;
use crate::grid::RadialGrid;
use crate::model::ModelSpec;
use crate::spectrum::{Source, SpectrumResult};
use crate::superpot::{apply_lowering, partner_potentials, superpotential_from_model};

/// Lowest `k` eigenvalues of V₋ for any model.
pub fn numeric_spectrum(model: &ModelSpec, grid: &RadialGrid, k: usize) -> Result<SpectrumResult> {
    let eig = raw_eigenvalues(model, grid, k)?;
    SpectrumResult::from_epsilon_sq(eig.into_iter().enumerate(), Source::Numeric, model.units())
}

/// Unclamped eigenvalues of the lower partner.
pub fn raw_eigenvalues(model: &ModelSpec, grid: &RadialGrid, k: usize) -> Result<Vec<f64>> {
    model.check_grid(grid)?;
    let pp = partner_potentials(&superpotential_from_model(model)?, grid)?;
    pp.minus_operator()?.lowest_eigenvalues(k, DEFAULT_TOL)
}

/// Level `n` from the two partner operators: f₋ is the n-th eigenvector of V₋
/// and f₊ the (n−1)-th eigenvector of V₊, signed to agree with (∂ + W) f₋.
pub fn numeric_wavefunction(
    model: &ModelSpec,
    grid: &RadialGrid,
    n: usize,
) -> Result<RadialWavefunction> {
    model.check_grid(grid)?;
    let w = superpotential_from_model(model)?;
    let pp = partner_potentials(&w, grid)?;
    let minus = pp.minus_operator()?;
    let eig = minus.lowest_eigenvalues(n + 1, DEFAULT_TOL)?;
    let eps2 = eig[n];
    let f_minus = minus.eigenvector(eps2)?;
    let f_plus = if n == 0 {
        vec![0.0; grid.n_points()]
    } else {
        let plus = pp.plus_operator()?;
        let eig_plus = plus.lowest_eigenvalues(n, DEFAULT_TOL)?;
        let mut g = plus.eigenvector(eig_plus[n - 1])?;
        let lowered = apply_lowering(&w, &f_minus, grid)?;
        if inner(&g, &lowered, grid) < 0.0 {
            g.iter_mut().for_each(|v| *v = -*v);
        }
        g
    };
    RadialWavefunction::from_components(grid, n, eps2.max(0.0), f_minus, f_plus)
}
