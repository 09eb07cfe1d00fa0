//! Closed-form spectra and wavefunctions of the exactly solvable families.
//!
//! The lower component f₋ comes from its Laguerre form; the upper component
//! is f₊ = (∂ + W) f₋ / ε, differentiated in closed form, and the pair is
//! normalized so that
//! ∫(f₊² + f₋²) dr = 1. Normalization constants are always computed by
//! quadrature.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::model::{Family, ModelParams, ModelSpec};
use crate::numsolve::{norm, quadrature};
use crate::specfun::laguerre;
use crate::spectrum::{Source, SpectrumResult};

/// Spinor radial components on a grid.
#[derive(Debug, Clone)]
pub struct RadialWavefunction {
    pub grid: RadialGrid,
    pub f_minus: Vec<f64>,
    pub f_plus: Vec<f64>,
    pub n: usize,
    pub epsilon_sq: f64,
}

impl RadialWavefunction {
    /// Rescales a component pair to unit spinor norm.
    pub(crate) fn from_components(
        grid: &RadialGrid,
        n: usize,
        epsilon_sq: f64,
        mut f_minus: Vec<f64>,
        mut f_plus: Vec<f64>,
    ) -> Result<Self> {
        let total = (norm(&f_minus, grid).powi(2) + norm(&f_plus, grid).powi(2)).sqrt();
        if !(total > 0.0 && total.is_finite()) {
            return Err(Error::Numeric("wavefunction has zero or non-finite norm".into()));
        }
        f_minus.iter_mut().for_each(|v| *v /= total);
        f_plus.iter_mut().for_each(|v| *v /= total);
        Ok(Self {
            grid: *grid,
            f_minus,
            f_plus,
            n,
            epsilon_sq,
        })
    }

    /// ∫(f₊² + f₋²) dr.
    pub fn spinor_norm(&self) -> f64 {
        let dens: Vec<f64> = self
            .f_minus
            .iter()
            .zip(&self.f_plus)
            .map(|(a, b)| a * a + b * b)
            .collect();
        quadrature(&dens, &self.grid)
    }

    /// max(|f₋(r_max)|, |f₊(r_max)|) relative to the largest sample.
    pub fn tail_ratio(&self) -> f64 {
        let peak = self
            .f_minus
            .iter()
            .chain(&self.f_plus)
            .fold(0.0f64, |m, v| m.max(v.abs()));
        let last = self.grid.n_points() - 1;
        self.f_minus[last].abs().max(self.f_plus[last].abs()) / peak
    }
}

/// Sign changes of `f`, ignoring samples below 1e-8 of its peak.
pub fn count_nodes(f: &[f64]) -> usize {
    let peak = f.iter().fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = 1e-8 * peak;
    let mut nodes = 0;
    let mut last_sign = 0.0;
    for &v in f {
        if v.abs() <= threshold {
            continue;
        }
        let s = v.signum();
        if last_sign != 0.0 && s != last_sign {
            nodes += 1;
        }
        last_sign = s;
    }
    nodes
}

fn wrong_family(op: &str, model: &ModelSpec) -> Error {
    Error::Config(format!("{op} does not apply to the {} family", model.family()))
}

/// ε² = 4n (m/ħ) ω_T.
pub fn oscillator_epsilon_sq(n: usize, model: &ModelSpec) -> Result<f64> {
    match model.params() {
        ModelParams::Oscillator { .. } => {
            let u = model.units();
            let omega_t = model.omega_t().unwrap_or(0.0);
            Ok(4.0 * n as f64 * u.mass * omega_t / u.hbar)
        }
        _ => Err(wrong_family("oscillator_epsilon_sq", model)),
    }
}

/// ε² = κ² (1/(ℓ+1)² − 1/(n+ℓ+1)²).
pub fn coulomb_epsilon_sq(n: usize, model: &ModelSpec) -> Result<f64> {
    match model.params() {
        ModelParams::Coulomb { kappa } => {
            let l1 = model.ell() as f64 + 1.0;
            let nl1 = n as f64 + l1;
            Ok(kappa * kappa * (1.0 / (l1 * l1) - 1.0 / (nl1 * nl1)))
        }
        _ => Err(wrong_family("coulomb_epsilon_sq", model)),
    }
}

/// ε² = αn(2b − αn) for b − αn > 0.
pub fn morse_epsilon_sq(n: usize, model: &ModelSpec) -> Result<f64> {
    match model.params() {
        ModelParams::Morse { alpha, b, .. } => {
            let max = model.max_bound_level().unwrap_or(0);
            if n > max {
                return Err(Error::NoBoundState { n, max });
            }
            let an = alpha * n as f64;
            Ok(an * (2.0 * b - an))
        }
        _ => Err(wrong_family("morse_epsilon_sq", model)),
    }
}

/// Closed-form ε² of level n. QES families only know their zero mode.
pub fn epsilon_sq(model: &ModelSpec, n: usize) -> Result<f64> {
    match model.family() {
        Family::Oscillator => oscillator_epsilon_sq(n, model),
        Family::Coulomb => coulomb_epsilon_sq(n, model),
        Family::Morse => morse_epsilon_sq(n, model),
        Family::AnharmonicQes | Family::SexticQes | Family::DeformedCoulombQes if n == 0 => Ok(0.0),
        f => Err(Error::Config(format!(
            "no closed-form level n = {n} for the {f} family"
        ))),
    }
}

/// Analytic levels 0..=n_max.
pub fn analytic_spectrum(model: &ModelSpec, n_max: usize) -> Result<SpectrumResult> {
    let values = (0..=n_max)
        .map(|n| epsilon_sq(model, n).map(|e| (n, e)))
        .collect::<Result<Vec<_>>>()?;
    SpectrumResult::from_epsilon_sq(values, Source::Analytic, model.units())
}

/// Samples of z^p e^{−z/2}·L(z) and of (∂ + W) applied to it, both written
/// as exp(log_pref)·value with the common prefactor kept in log form.
struct LaguerreSamples {
    log_pref: Vec<f64>,
    lower: Vec<f64>,
    lowered: Vec<f64>,
}

impl LaguerreSamples {
    fn push(&mut self, log_pref: f64, lower: f64, lowered: f64) {
        self.log_pref.push(log_pref);
        self.lower.push(lower);
        self.lowered.push(lowered);
    }

    /// (f₋, (∂ + W) f₋) with f₋ at unit quadrature norm. The largest log is
    /// removed before exponentiating so nothing overflows.
    fn normalized(self, grid: &RadialGrid) -> Result<(Vec<f64>, Vec<f64>)> {
        let peak = self
            .log_pref
            .iter()
            .zip(&self.lower)
            .filter(|(_, l)| **l != 0.0)
            .map(|(p, l)| p + l.abs().ln())
            .fold(f64::NEG_INFINITY, f64::max);
        if !peak.is_finite() {
            return Err(Error::Numeric("wavefunction vanishes on the grid".into()));
        }
        let scale: Vec<f64> = self.log_pref.iter().map(|p| (p - peak).exp()).collect();
        let mut f: Vec<f64> = scale.iter().zip(&self.lower).map(|(s, l)| s * l).collect();
        let mut g: Vec<f64> = scale.iter().zip(&self.lowered).map(|(s, l)| s * l).collect();
        let nrm = norm(&f, grid);
        f.iter_mut().for_each(|v| *v /= nrm);
        g.iter_mut().for_each(|v| *v /= nrm);
        Ok((f, g))
    }
}

/// f₋ = z^p e^{−z/2} L_n^α(z) and its image under ∂ + W. With
/// dL_n^α/dz = −L_{n−1}^{α+1} the pole of W cancels against the z^p factor,
/// leaving a regular closed form for each family.
fn laguerre_samples(model: &ModelSpec, n: usize, grid: &RadialGrid) -> Result<LaguerreSamples> {
    model.check_grid(grid)?;
    let ell = model.ell() as f64;
    let nf = n as f64;
    let below = |alpha: f64, z: f64| if n == 0 { 0.0 } else { laguerre(n - 1, alpha, z) };
    let mut out = LaguerreSamples {
        log_pref: Vec::with_capacity(grid.n_points()),
        lower: Vec::with_capacity(grid.n_points()),
        lowered: Vec::with_capacity(grid.n_points()),
    };
    match *model.params() {
        ModelParams::Oscillator { .. } => {
            // z = (m/ħ) ω_T r², p = (ℓ+1)/2, α = ℓ + 1/2
            // (∂ + W) f₋ = −2λr z^p e^{−z/2} L_{n−1}^{α+1}(z)
            let u = model.units();
            let lambda = u.mass * model.omega_t().unwrap_or(0.0) / u.hbar;
            let alpha = ell + 0.5;
            for r in grid.points() {
                let z = lambda * r * r;
                out.push(
                    0.5 * (ell + 1.0) * z.ln() - 0.5 * z,
                    laguerre(n, alpha, z),
                    -2.0 * lambda * r * below(alpha + 1.0, z),
                );
            }
        }
        ModelParams::Coulomb { kappa } => {
            // z = 2κr/N with N = n + ℓ + 1, p = ℓ + 1, α = 2ℓ + 1
            // (∂ + W) f₋ = z^p e^{−z/2} [κ(1/(ℓ+1) − 1/N) L_n^α − (2κ/N) L_{n−1}^{α+1}]
            let big_n = nf + ell + 1.0;
            let alpha = 2.0 * ell + 1.0;
            let c = kappa * (1.0 / (ell + 1.0) - 1.0 / big_n);
            for r in grid.points() {
                let z = 2.0 * kappa * r / big_n;
                let l = laguerre(n, alpha, z);
                out.push(
                    (ell + 1.0) * z.ln() - 0.5 * z,
                    l,
                    c * l - 2.0 * kappa / big_n * below(alpha + 1.0, z),
                );
            }
        }
        ModelParams::Morse { a, alpha, b } => {
            let max = model.max_bound_level().unwrap_or(0);
            if n > max {
                return Err(Error::NoBoundState { n, max });
            }
            // z = (2a/α) e^{−αr}, p = s = b/α − n, Laguerre index 2s
            // (∂ + W) f₋ = z^p e^{−z/2} [αn L_n^{2s} + αz L_{n−1}^{2s+1}]
            let s = b / alpha - nf;
            let ln_pref = (2.0 * a / alpha).ln();
            for r in grid.points() {
                let ln_z = ln_pref - alpha * r;
                let z = ln_z.exp();
                let l = laguerre(n, 2.0 * s, z);
                out.push(
                    s * ln_z - 0.5 * z,
                    l,
                    alpha * nf * l + alpha * z * below(2.0 * s + 1.0, z),
                );
            }
        }
        _ => return Err(wrong_family("lower_component", model)),
    }
    Ok(out)
}

/// Normalized f₋ of the requested level from its Laguerre form.
pub fn lower_component(model: &ModelSpec, n: usize, grid: &RadialGrid) -> Result<Vec<f64>> {
    Ok(laguerre_samples(model, n, grid)?.normalized(grid)?.0)
}

fn wavefunctions_of(
    model: &ModelSpec,
    n: usize,
    grid: &RadialGrid,
    family: Family,
) -> Result<RadialWavefunction> {
    if model.family() != family {
        return Err(wrong_family("wavefunction", model));
    }
    let eps2 = epsilon_sq(model, n)?;
    let (f_minus, lowered) = laguerre_samples(model, n, grid)?.normalized(grid)?;
    let f_plus = if n == 0 {
        vec![0.0; grid.n_points()]
    } else {
        let eps = eps2.sqrt();
        lowered.into_iter().map(|v| v / eps).collect()
    };
    RadialWavefunction::from_components(grid, n, eps2, f_minus, f_plus)
}

pub fn oscillator_wavefunctions(
    n: usize,
    model: &ModelSpec,
    grid: &RadialGrid,
) -> Result<RadialWavefunction> {
    wavefunctions_of(model, n, grid, Family::Oscillator)
}

pub fn coulomb_wavefunctions(
    n: usize,
    model: &ModelSpec,
    grid: &RadialGrid,
) -> Result<RadialWavefunction> {
    wavefunctions_of(model, n, grid, Family::Coulomb)
}

pub fn morse_wavefunctions(
    n: usize,
    model: &ModelSpec,
    grid: &RadialGrid,
) -> Result<RadialWavefunction> {
    wavefunctions_of(model, n, grid, Family::Morse)
}

/// Analytic wavefunction for any exactly solvable family.
pub fn wavefunctions(model: &ModelSpec, n: usize, grid: &RadialGrid) -> Result<RadialWavefunction> {
    wavefunctions_of(model, n, grid, model.family())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numsolve::inner;
    use crate::superpot::{apply_lowering, ground_state_from_w, superpotential_from_model};

    fn sup_diff(a: &[f64], b: &[f64]) -> f64 {
        a.iter().zip(b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }

    fn normalized(mut f: Vec<f64>, grid: &RadialGrid) -> Vec<f64> {
        let n = norm(&f, grid);
        f.iter_mut().for_each(|v| *v /= n);
        f
    }

    #[test]
    fn oscillator_levels() {
        let m = ModelSpec::oscillator(1.0, 0.0, 0).unwrap();
        assert_eq!(oscillator_epsilon_sq(0, &m).unwrap(), 0.0);
        assert_eq!(oscillator_epsilon_sq(3, &m).unwrap(), 12.0);
        let m = ModelSpec::oscillator(1.0, 2.0, 0).unwrap();
        assert_eq!(oscillator_epsilon_sq(2, &m).unwrap(), 16.0);
        assert!(oscillator_epsilon_sq(1, &ModelSpec::coulomb(1.0, 0).unwrap()).is_err());
    }

    #[test]
    fn coulomb_levels() {
        let m = ModelSpec::coulomb(1.0, 0).unwrap();
        assert_eq!(coulomb_epsilon_sq(0, &m).unwrap(), 0.0);
        assert_eq!(coulomb_epsilon_sq(1, &m).unwrap(), 0.75);
        let m = ModelSpec::coulomb(1.0, 1).unwrap();
        assert_eq!(coulomb_epsilon_sq(0, &m).unwrap(), 0.0);
        assert_eq!(coulomb_epsilon_sq(2, &m).unwrap(), 0.1875);
    }

    #[test]
    fn morse_levels() {
        let m = ModelSpec::morse(3.0, 1.0, 3.0).unwrap();
        assert_eq!(morse_epsilon_sq(0, &m).unwrap(), 0.0);
        assert_eq!(morse_epsilon_sq(1, &m).unwrap(), 5.0);
        assert_eq!(morse_epsilon_sq(2, &m).unwrap(), 8.0);
        assert_eq!(
            morse_epsilon_sq(3, &m),
            Err(Error::NoBoundState { n: 3, max: 2 })
        );
    }

    #[test]
    fn qes_only_knows_the_zero_mode() {
        let m = ModelSpec::sextic(1.0, 1.0, 1).unwrap();
        assert_eq!(epsilon_sq(&m, 0).unwrap(), 0.0);
        assert!(matches!(epsilon_sq(&m, 1), Err(Error::Config(_))));
        assert!(analytic_spectrum(&m, 2).is_err());
        assert_eq!(analytic_spectrum(&m, 0).unwrap().len(), 1);
    }

    #[test]
    fn oscillator_ground_state_shape() {
        let m = ModelSpec::oscillator(1.0, 0.0, 0).unwrap();
        let grid = m.default_grid();
        let wf = oscillator_wavefunctions(0, &m, &grid).unwrap();
        assert!(wf.f_plus.iter().all(|&v| v == 0.0));
        let expected = normalized(grid.sample(|r| r * (-0.5 * r * r).exp()), &grid);
        assert!(sup_diff(&wf.f_minus, &expected) < 1e-12);
        assert!((wf.spinor_norm() - 1.0).abs() < 1e-8);
    }

    #[test]
    fn coulomb_ground_state_shape() {
        let m = ModelSpec::coulomb(1.0, 0).unwrap();
        let grid = m.default_grid();
        let f = lower_component(&m, 0, &grid).unwrap();
        let expected = normalized(grid.sample(|r| r * (-r).exp()), &grid);
        assert!(sup_diff(&f, &expected) < 1e-12);
        let w = superpotential_from_model(&m).unwrap();
        let g = ground_state_from_w(&w, &grid).unwrap();
        assert!(sup_diff(&f, &g) < 1e-8);
    }

    #[test]
    fn morse_ground_state_shape() {
        let m = ModelSpec::morse(3.0, 1.0, 3.0).unwrap();
        let grid = m.default_grid();
        let f = lower_component(&m, 0, &grid).unwrap();
        let expected = normalized(grid.sample(|r| (-3.0 * r - 3.0 * (-r).exp()).exp()), &grid);
        assert!(sup_diff(&f, &expected) < 1e-12);
    }

    #[test]
    fn node_counts_equal_level_index() {
        let models = [
            ModelSpec::oscillator(1.0, 0.0, 0).unwrap(),
            ModelSpec::oscillator(1.0, 1.0, 2).unwrap(),
            ModelSpec::coulomb(1.0, 0).unwrap(),
            ModelSpec::coulomb(1.0, 1).unwrap(),
            ModelSpec::morse(3.0, 1.0, 3.0).unwrap(),
        ];
        for m in &models {
            let grid = m.default_grid();
            let top = m.max_bound_level().unwrap_or(4).min(4);
            for n in 0..=top {
                let wf = wavefunctions(m, n, &grid).unwrap();
                assert_eq!(count_nodes(&wf.f_minus), n, "{} n={n}", m.family());
                assert!((wf.spinor_norm() - 1.0).abs() < 1e-8);
                assert!(wf.tail_ratio() < 1e-8, "{} n={n} tail {}", m.family(), wf.tail_ratio());
            }
        }
    }

    #[test]
    fn gram_matrices_are_identity() {
        let cases = [
            (ModelSpec::oscillator(1.0, 0.0, 0).unwrap(), 5, 1e-6),
            (ModelSpec::coulomb(1.0, 0).unwrap(), 5, 1e-6),
            (ModelSpec::morse(3.0, 1.0, 3.0).unwrap(), 3, 1e-4),
        ];
        for (m, count, tol) in cases {
            let grid = m.default_grid();
            let fs: Vec<Vec<f64>> = (0..count)
                .map(|n| lower_component(&m, n, &grid).unwrap())
                .collect();
            for i in 0..count {
                for j in 0..count {
                    let g = inner(&fs[i], &fs[j], &grid);
                    let target = if i == j { 1.0 } else { 0.0 };
                    assert!((g - target).abs() < tol, "{} G[{i}][{j}] = {g}", m.family());
                }
            }
        }
    }

    #[test]
    fn upper_component_matches_finite_difference_lowering() {
        let models = [
            ModelSpec::oscillator(1.0, 0.0, 0).unwrap(),
            ModelSpec::oscillator(0.5, 1.0, 3).unwrap(),
            ModelSpec::coulomb(1.0, 0).unwrap(),
            ModelSpec::coulomb(2.0, 2).unwrap(),
            ModelSpec::morse(3.0, 1.0, 3.0).unwrap(),
        ];
        for m in &models {
            let grid = m.default_grid();
            let w = superpotential_from_model(m).unwrap();
            for n in 1..=m.max_bound_level().unwrap_or(3).min(3) {
                let wf = wavefunctions(m, n, &grid).unwrap();
                let eps = wf.epsilon_sq.sqrt();
                let fd: Vec<f64> = apply_lowering(&w, &wf.f_minus, &grid)
                    .unwrap()
                    .into_iter()
                    .map(|v| v / eps)
                    .collect();
                let peak = wf.f_plus.iter().fold(0.0f64, |a, v| a.max(v.abs()));
                let d = sup_diff(&wf.f_plus, &fd) / peak;
                assert!(d < 1e-3, "{} n={n}: {d}", m.family());
                assert_eq!(count_nodes(&wf.f_plus), n - 1, "{} n={n}", m.family());
            }
        }
    }

    #[test]
    fn morse_beyond_bound_is_rejected() {
        let m = ModelSpec::morse(3.0, 1.0, 3.0).unwrap();
        let grid = m.default_grid();
        assert!(matches!(
            morse_wavefunctions(3, &m, &grid),
            Err(Error::NoBoundState { .. })
        ));
    }
}
