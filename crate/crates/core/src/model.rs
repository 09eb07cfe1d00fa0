//! Model families and their physical parameters.

use crate::error::{Error, Result};
use crate::grid::RadialGrid;
use crate::units::{omega_total, Units};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Oscillator,
    Coulomb,
    Morse,
    AnharmonicQes,
    SexticQes,
    DeformedCoulombQes,
    Custom,
}

impl Family {
    pub fn is_qes(self) -> bool {
        matches!(
            self,
            Family::AnharmonicQes | Family::SexticQes | Family::DeformedCoulombQes
        )
    }

    pub fn is_exactly_solvable(self) -> bool {
        matches!(self, Family::Oscillator | Family::Coulomb | Family::Morse)
    }

    /// Families whose superpotential may carry a 1/r term; their grids must
    /// start at r_min > 0.
    pub fn singular_at_origin(self) -> bool {
        matches!(
            self,
            Family::Oscillator | Family::Coulomb | Family::SexticQes | Family::DeformedCoulombQes
        )
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Oscillator => "oscillator",
            Family::Coulomb => "coulomb",
            Family::Morse => "morse",
            Family::AnharmonicQes => "anharmonic",
            Family::SexticQes => "sextic",
            Family::DeformedCoulombQes => "deformed-coulomb",
            Family::Custom => "custom",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Superpotential W and its derivative W′ sampled on a uniform grid.
#[derive(Debug, Clone, PartialEq)]
pub struct TabulatedW {
    pub grid: RadialGrid,
    pub w: Vec<f64>,
    pub w_prime: Vec<f64>,
}

impl TabulatedW {
    pub fn new(grid: RadialGrid, w: Vec<f64>, w_prime: Vec<f64>) -> Result<Self> {
        grid.check_len(w.len(), "tabulated W")?;
        grid.check_len(w_prime.len(), "tabulated W'")?;
        if w.iter().chain(&w_prime).any(|v| !v.is_finite()) {
            return Err(Error::InvalidParameter(
                "tabulated W/W' contain non-finite samples".into(),
            ));
        }
        Ok(Self { grid, w, w_prime })
    }

    /// Linear interpolation; samples are returned unchanged on mesh points.
    pub(crate) fn interpolate(values: &[f64], grid: &RadialGrid, r: f64) -> f64 {
        let x = (r - grid.r_min()) / grid.h();
        let last = grid.n_points() - 1;
        let nearest = x.round();
        if (x - nearest).abs() < 1e-9 && nearest >= 0.0 && nearest as usize <= last {
            return values[nearest as usize];
        }
        let i = (x.floor().max(0.0) as usize).min(last - 1);
        let t = x - i as f64;
        values[i] * (1.0 - t) + values[i + 1] * t
    }
}

/// Family-specific parameters.
#[derive(Debug, Clone, PartialEq)]
pub enum ModelParams {
    /// Dirac oscillator in a perpendicular field: ω ≥ 0, B ≥ 0.
    Oscillator { omega: f64, b_field: f64 },
    /// κ = m e² / (4π ε₀ ħ²) > 0.
    Coulomb { kappa: f64 },
    /// W = b − a e^{−αr}.
    Morse { a: f64, alpha: f64, b: f64 },
    /// W = a + ω_T r + b r².
    AnharmonicQes { a: f64, omega_t: f64, b: f64 },
    /// W = −ℓ/r + ω_T r + b r³.
    SexticQes { omega_t: f64, b: f64 },
    /// W = e²/(2(ℓ+1)) − (ℓ+1)/r + ω_T r.
    DeformedCoulombQes { e2: f64, omega_t: f64 },
    Custom(Arc<TabulatedW>),
}

impl ModelParams {
    pub fn family(&self) -> Family {
        match self {
            ModelParams::Oscillator { .. } => Family::Oscillator,
            ModelParams::Coulomb { .. } => Family::Coulomb,
            ModelParams::Morse { .. } => Family::Morse,
            ModelParams::AnharmonicQes { .. } => Family::AnharmonicQes,
            ModelParams::SexticQes { .. } => Family::SexticQes,
            ModelParams::DeformedCoulombQes { .. } => Family::DeformedCoulombQes,
            ModelParams::Custom(_) => Family::Custom,
        }
    }
}

/// A potential family with its parameters, angular label ℓ and units.
#[derive(Debug, Clone, PartialEq)]
pub struct ModelSpec {
    params: ModelParams,
    ell: u32,
    units: Units,
}

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::InvalidParameter(msg()))
    }
}

fn finite(values: &[(&str, f64)]) -> Result<()> {
    for (name, v) in values {
        require(v.is_finite(), || format!("{name} must be finite, got {v}"))?;
    }
    Ok(())
}

impl ModelSpec {
    pub fn new(params: ModelParams, ell: u32, units: Units) -> Result<Self> {
        units.validate()?;
        let spec = Self { params, ell, units };
        spec.validate()?;
        Ok(spec)
    }

    pub fn oscillator(omega: f64, b_field: f64, ell: u32) -> Result<Self> {
        Self::new(ModelParams::Oscillator { omega, b_field }, ell, Units::NATURAL)
    }

    pub fn coulomb(kappa: f64, ell: u32) -> Result<Self> {
        Self::new(ModelParams::Coulomb { kappa }, ell, Units::NATURAL)
    }

    pub fn morse(a: f64, alpha: f64, b: f64) -> Result<Self> {
        Self::new(ModelParams::Morse { a, alpha, b }, 0, Units::NATURAL)
    }

    pub fn anharmonic(a: f64, omega_t: f64, b: f64) -> Result<Self> {
        Self::new(ModelParams::AnharmonicQes { a, omega_t, b }, 0, Units::NATURAL)
    }

    pub fn sextic(omega_t: f64, b: f64, ell: u32) -> Result<Self> {
        Self::new(ModelParams::SexticQes { omega_t, b }, ell, Units::NATURAL)
    }

    pub fn deformed_coulomb(e2: f64, omega_t: f64, ell: u32) -> Result<Self> {
        Self::new(
            ModelParams::DeformedCoulombQes { e2, omega_t },
            ell,
            Units::NATURAL,
        )
    }

    pub fn custom(table: TabulatedW) -> Result<Self> {
        Self::new(ModelParams::Custom(Arc::new(table)), 0, Units::NATURAL)
    }

    pub fn with_units(self, units: Units) -> Result<Self> {
        Self::new(self.params, self.ell, units)
    }

    pub fn params(&self) -> &ModelParams {
        &self.params
    }

    pub fn family(&self) -> Family {
        self.params.family()
    }

    pub fn ell(&self) -> u32 {
        self.ell
    }

    pub fn units(&self) -> &Units {
        &self.units
    }

    /// ω_T for the families that carry one. For the oscillator it comes from
    /// the Larmor relation; the QES families take it as a direct parameter.
    pub fn omega_t(&self) -> Option<f64> {
        match self.params {
            ModelParams::Oscillator { omega, b_field } => {
                Some(omega_total(omega, b_field, &self.units))
            }
            ModelParams::AnharmonicQes { omega_t, .. }
            | ModelParams::SexticQes { omega_t, .. }
            | ModelParams::DeformedCoulombQes { omega_t, .. } => Some(omega_t),
            _ => None,
        }
    }

    fn validate(&self) -> Result<()> {
        match &self.params {
            ModelParams::Oscillator { omega, b_field } => {
                finite(&[("omega", *omega), ("B", *b_field)])?;
                require(*omega >= 0.0, || format!("omega must be >= 0, got {omega}"))?;
                require(*b_field >= 0.0, || format!("B must be >= 0, got {b_field}"))?;
                let wt = omega_total(*omega, *b_field, &self.units);
                require(wt > 0.0, || format!("omega_T must be > 0, got {wt}"))
            }
            ModelParams::Coulomb { kappa } => {
                finite(&[("kappa", *kappa)])?;
                require(*kappa > 0.0, || format!("kappa must be > 0, got {kappa}"))
            }
            ModelParams::Morse { a, alpha, b } => {
                finite(&[("a", *a), ("alpha", *alpha), ("b", *b)])?;
                require(*a > 0.0, || format!("a must be > 0, got {a}"))?;
                require(*alpha > 0.0, || format!("alpha must be > 0, got {alpha}"))?;
                require(*b > 0.0, || format!("b must be > 0, got {b}"))
            }
            ModelParams::AnharmonicQes { a, omega_t, b } => {
                finite(&[("a", *a), ("omega_T", *omega_t), ("b", *b)])?;
                require(*omega_t > 0.0, || format!("omega_T must be > 0, got {omega_t}"))?;
                require(*b >= 0.0, || format!("b must be >= 0, got {b}"))
            }
            ModelParams::SexticQes { omega_t, b } => {
                finite(&[("omega_T", *omega_t), ("b", *b)])?;
                require(*omega_t > 0.0, || format!("omega_T must be > 0, got {omega_t}"))?;
                require(*b >= 0.0, || format!("b must be >= 0, got {b}"))
            }
            ModelParams::DeformedCoulombQes { e2, omega_t } => {
                finite(&[("e2", *e2), ("omega_T", *omega_t)])?;
                require(*e2 > 0.0, || format!("e2 must be > 0, got {e2}"))?;
                require(*omega_t >= 0.0, || format!("omega_T must be >= 0, got {omega_t}"))
            }
            ModelParams::Custom(_) => Ok(()),
        }
    }

    /// Checks that `grid` avoids the model's singular point and, for tabulated
    /// models, stays inside the table.
    pub fn check_grid(&self, grid: &RadialGrid) -> Result<()> {
        if self.family().singular_at_origin() && grid.r_min() <= 0.0 {
            return Err(Error::Domain(format!(
                "{} superpotential is singular at r = 0; grid must start at r_min > 0, got {}",
                self.family(),
                grid.r_min()
            )));
        }
        if let ModelParams::Custom(table) = &self.params {
            let (lo, hi) = (table.grid.r_min(), table.grid.r_max());
            let slack = 1e-12 * (hi - lo);
            if grid.r_min() < lo - slack || grid.r_max() > hi + slack {
                return Err(Error::Domain(format!(
                    "grid [{}, {}] leaves the tabulated range [{lo}, {hi}]",
                    grid.r_min(),
                    grid.r_max()
                )));
            }
        }
        Ok(())
    }

    /// Bound levels n = 0..=max, when the family has finitely many.
    pub fn max_bound_level(&self) -> Option<usize> {
        match self.params {
            ModelParams::Morse { alpha, b, .. } => {
                // largest n with b − αn > 0
                let ratio = b / alpha;
                let mut n = ratio.ceil() as usize;
                while n > 0 && b - alpha * n as f64 <= 0.0 {
                    n -= 1;
                }
                Some(n)
            }
            _ => None,
        }
    }

    /// Default grid for the family, sized from its natural length scale.
    pub fn default_grid(&self) -> RadialGrid {
        let ell = self.ell as f64;
        let grid = match &self.params {
            ModelParams::Oscillator { .. } => {
                let lambda = self.units.mass * self.omega_t().unwrap_or(1.0) / self.units.hbar;
                let s = lambda.sqrt();
                RadialGrid::new(1e-3 / s, 12.0 / s, 2401)
            }
            ModelParams::Coulomb { kappa } => {
                RadialGrid::new(1e-3, 250.0 * (ell + 1.0) / kappa, 12001)
            }
            ModelParams::Morse { alpha, .. } => RadialGrid::new(-10.0 / alpha, 40.0 / alpha, 8001),
            ModelParams::AnharmonicQes { a, omega_t, b } => {
                let log_f0 = |r: f64| -(a * r + 0.5 * omega_t * r * r + b * r.powi(3) / 3.0);
                RadialGrid::new(1e-3, 1.5 * decay_radius(log_f0, 1e-3), 6001)
            }
            ModelParams::SexticQes { omega_t, b } => {
                let log_f0 =
                    |r: f64| ell * r.ln() - 0.5 * omega_t * r * r - 0.25 * b * r.powi(4);
                RadialGrid::new(1e-3, 1.5 * decay_radius(log_f0, 1e-3), 6001)
            }
            ModelParams::DeformedCoulombQes { e2, omega_t } => {
                let scale = omega_t.max(e2 / (2.0 * (ell + 1.0)));
                RadialGrid::new(1e-3, 20.0 / scale, 8001)
            }
            ModelParams::Custom(table) => Ok(table.grid),
        };
        grid.expect("default grids are well formed")
    }
}

/// Smallest r beyond the peak of exp(log_f0) where it has dropped below 1e-10
/// of its maximum.
fn decay_radius(log_f0: impl Fn(f64) -> f64, r_start: f64) -> f64 {
    let threshold = (1e-10f64).ln();
    let step = 1e-3;
    let mut r = r_start;
    let mut peak = log_f0(r);
    loop {
        r += step;
        let v = log_f0(r);
        peak = peak.max(v);
        if v - peak < threshold {
            return r;
        }
        if r > 1e4 {
            return r;
        }
    }
}
