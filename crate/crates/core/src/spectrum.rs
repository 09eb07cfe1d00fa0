use crate::error::{Error, Result};
use crate::units::{epsilon_to_energy, Units};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Source {
    Analytic,
    Numeric,
}

impl Source {
    pub fn as_str(self) -> &'static str {
        match self {
            Source::Analytic => "analytic",
            Source::Numeric => "numeric",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Level {
    pub n: usize,
    pub epsilon_sq: f64,
    pub energy_plus: f64,
    pub energy_minus: f64,
    pub source: Source,
}

/// Numeric eigenvalues less than this far below zero, relative to
/// max(1, largest |ε²| in the result), are discretization noise around an
/// exact zero mode and are reported as ε² = 0.
pub const NEGATIVE_NOISE_FLOOR: f64 = 1e-3;

/// Levels ordered by n, each carrying ε² and the two energies ±E.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumResult {
    pub levels: Vec<Level>,
}

impl SpectrumResult {
    /// Builds a result from (n, ε²) pairs of one source. Energies follow
    /// E = sqrt(m²c⁴ + ħ²c²ε²).
    pub fn from_epsilon_sq(
        values: impl IntoIterator<Item = (usize, f64)>,
        source: Source,
        units: &Units,
    ) -> Result<Self> {
        let values: Vec<(usize, f64)> = values.into_iter().collect();
        let scale = values.iter().fold(1.0f64, |m, (_, e)| m.max(e.abs()));
        let floor = NEGATIVE_NOISE_FLOOR * scale;
        let mut levels: Vec<Level> = Vec::new();
        for (n, raw) in values {
            let epsilon_sq = if source == Source::Numeric && raw < 0.0 && raw > -floor {
                0.0
            } else {
                raw
            };
            let (energy_plus, energy_minus) = epsilon_to_energy(epsilon_sq, units)?;
            if let Some(prev) = levels.last() {
                if n <= prev.n || epsilon_sq < prev.epsilon_sq {
                    return Err(Error::Numeric(format!(
                        "levels out of order: n={} ε²={} after n={} ε²={}",
                        n, epsilon_sq, prev.n, prev.epsilon_sq
                    )));
                }
            }
            levels.push(Level {
                n,
                epsilon_sq,
                energy_plus,
                energy_minus,
                source,
            });
        }
        Ok(Self { levels })
    }

    pub fn epsilon_sq(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.epsilon_sq).collect()
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }
}
