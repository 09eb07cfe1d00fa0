//! Quasi-exactly solvable families: partner potentials, the closed-form zero
//! mode and the numeric part of the spectrum.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::model::{ModelParams, ModelSpec};
use crate::numsolve::{norm, second_derivative_interior, DEFAULT_TOL};
use crate::spectrum::{Source, SpectrumResult};
use crate::superpot::{partner_potentials, superpotential_from_model, PartnerPotentials};

/// Closed-form zero mode of a QES family with its finite-difference residual.
#[derive(Debug, Clone)]
pub struct QesGroundState {
    pub model: ModelSpec,
    pub grid: RadialGrid,
    pub f0: Vec<f64>,
    pub epsilon_sq: f64,
    /// ‖−f₀″ + V₋ f₀‖∞ / ‖f₀‖∞ over interior points.
    pub residual_sup: f64,
}

fn require_qes(model: &ModelSpec, op: &str) -> Result<()> {
    if model.family().is_qes() {
        Ok(())
    } else {
        Err(Error::Config(format!(
            "{op} needs a QES family, got {}",
            model.family()
        )))
    }
}

pub fn qes_partner_potentials(model: &ModelSpec, grid: &RadialGrid) -> Result<PartnerPotentials> {
    require_qes(model, "qes_partner_potentials")?;
    partner_potentials(&superpotential_from_model(model)?, grid)
}

/// log f₀ of the closed-form ground states:
/// anharmonic exp(−br³/3 − ω_T r²/2 − ar), sextic r^ℓ exp(−ω_T r²/2 − br⁴/4),
/// deformed Coulomb r^{ℓ+1} exp(−ω_T r²/2 − e²r/2(ℓ+1)).
fn log_ground_state(model: &ModelSpec, r: f64) -> f64 {
    let ell = model.ell() as f64;
    match *model.params() {
        ModelParams::AnharmonicQes { a, omega_t, b } => {
            -(b * r.powi(3) / 3.0 + 0.5 * omega_t * r * r + a * r)
        }
        ModelParams::SexticQes { omega_t, b } => {
            let pow = if ell == 0.0 { 0.0 } else { ell * r.ln() };
            pow - 0.5 * omega_t * r * r - 0.25 * b * r.powi(4)
        }
        ModelParams::DeformedCoulombQes { e2, omega_t } => {
            (ell + 1.0) * r.ln() - 0.5 * omega_t * r * r - e2 * r / (2.0 * (ell + 1.0))
        }
        _ => unreachable!("checked by require_qes"),
    }
}

pub fn qes_ground_state(model: &ModelSpec, grid: &RadialGrid) -> Result<QesGroundState> {
    require_qes(model, "qes_ground_state")?;
    model.check_grid(grid)?;
    let normalizable = match *model.params() {
        ModelParams::AnharmonicQes { omega_t, b, .. } => b > 0.0 || omega_t > 0.0,
        ModelParams::SexticQes { omega_t, b } => b > 0.0 || omega_t > 0.0,
        ModelParams::DeformedCoulombQes { e2, omega_t } => omega_t > 0.0 || e2 > 0.0,
        _ => false,
    };
    if !normalizable {
        return Err(Error::Domain(format!(
            "{} ground state is not normalizable for these parameters",
            model.family()
        )));
    }
    let logs = grid.sample(|r| log_ground_state(model, r));
    let peak = logs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let mut f0: Vec<f64> = logs.iter().map(|l| (l - peak).exp()).collect();
    let nrm = norm(&f0, grid);
    f0.iter_mut().for_each(|v| *v /= nrm);

    let pp = qes_partner_potentials(model, grid)?;
    let residual_sup = zero_mode_residual(&f0, &pp);
    Ok(QesGroundState {
        model: model.clone(),
        grid: *grid,
        f0,
        epsilon_sq: 0.0,
        residual_sup,
    })
}

/// ‖−f″ + V₋ f‖∞ / ‖f‖∞ at interior points.
pub fn zero_mode_residual(f: &[f64], pp: &PartnerPotentials) -> f64 {
    let d2 = second_derivative_interior(f, pp.grid.h());
    let peak = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    d2.iter()
        .enumerate()
        .map(|(i, d)| (-d + pp.v_minus[i + 1] * f[i + 1]).abs())
        .fold(0.0, f64::max)
        / peak
}

/// Largest |ε²₀| accepted as the zero mode, relative to the first gap.
const ZERO_MODE_TOLERANCE: f64 = 1e-3;

/// Lowest `k` levels of V₋ from the numeric solver. Level 0 must be the
/// zero mode.
pub fn qes_numeric_spectrum(
    model: &ModelSpec,
    grid: &RadialGrid,
    k: usize,
) -> Result<SpectrumResult> {
    require_qes(model, "qes_numeric_spectrum")?;
    let pp = qes_partner_potentials(model, grid)?;
    let eig = pp.minus_operator()?.lowest_eigenvalues(k, DEFAULT_TOL)?;
    let gap = eig.get(1).map_or(1.0, |e| e.abs().max(1.0));
    if eig[0].abs() > ZERO_MODE_TOLERANCE * gap {
        return Err(Error::Numeric(format!(
            "lowest numeric level {} is not the zero mode; refine the grid",
            eig[0]
        )));
    }
    SpectrumResult::from_epsilon_sq(eig.into_iter().enumerate(), Source::Numeric, model.units())
}
