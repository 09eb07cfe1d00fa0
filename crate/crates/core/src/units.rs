//! Physical constants and the ε² ↔ energy relations.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Unit system: ħ, particle mass, speed of light, elementary charge and
/// vacuum permittivity. `Default` is natural units with every field 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Units {
    pub hbar: f64,
    pub mass: f64,
    pub c: f64,
    pub e_charge: f64,
    pub eps0: f64,
}

impl Default for Units {
    fn default() -> Self {
        Self::NATURAL
    }
}

impl Units {
    pub const NATURAL: Units = Units {
        hbar: 1.0,
        mass: 1.0,
        c: 1.0,
        e_charge: 1.0,
        eps0: 1.0,
    };

    pub fn new(hbar: f64, mass: f64, c: f64, e_charge: f64, eps0: f64) -> Result<Self> {
        let units = Units {
            hbar,
            mass,
            c,
            e_charge,
            eps0,
        };
        units.validate()?;
        Ok(units)
    }

    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("hbar", self.hbar),
            ("mass", self.mass),
            ("c", self.c),
            ("e_charge", self.e_charge),
            ("eps0", self.eps0),
        ];
        for (name, value) in fields {
            if !(value.is_finite() && value > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "unit {name} must be finite and > 0, got {value}"
                )));
            }
        }
        Ok(())
    }

    /// Rest energy m c².
    pub fn rest_energy(&self) -> f64 {
        self.mass * self.c * self.c
    }

    /// Coulomb strength κ = m e² / (4π ε₀ ħ²) implied by these units.
    pub fn coulomb_kappa(&self) -> f64 {
        self.mass * self.e_charge * self.e_charge
            / (4.0 * std::f64::consts::PI * self.eps0 * self.hbar * self.hbar)
    }
}

/// Total oscillator frequency ω_T = ω + eB/(2m): the mechanical frequency
/// plus the Larmor frequency of the perpendicular field.
pub fn omega_total(omega: f64, b_field: f64, units: &Units) -> f64 {
    omega + units.e_charge * b_field / (2.0 * units.mass)
}

/// Maps ε² = (E² − m²c⁴)/(ħ²c²) to the pair (+E, −E).
pub fn epsilon_to_energy(epsilon_sq: f64, units: &Units) -> Result<(f64, f64)> {
    if epsilon_sq.is_nan() || epsilon_sq < 0.0 {
        return Err(Error::Domain(format!(
            "epsilon_sq must be >= 0 for a bound level above the rest mass, got {epsilon_sq}"
        )));
    }
    let mc2 = units.rest_energy();
    let hc = units.hbar * units.c;
    let energy = (mc2 * mc2 + hc * hc * epsilon_sq).sqrt();
    Ok((energy, -energy))
}

/// First-order expansion of E − mc²: E_nr = ħ² ε² / (2m).
pub fn nonrelativistic_limit(epsilon_sq: f64, units: &Units) -> f64 {
    units.hbar * units.hbar * epsilon_sq / (2.0 * units.mass)
}
