use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// Uniform mesh r_i = r_min + i·h on [r_min, r_max].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self> {
        if !(r_min.is_finite() && r_max.is_finite()) {
            return Err(Error::InvalidGrid(format!(
                "grid bounds must be finite, got [{r_min}, {r_max}]"
            )));
        }
        if r_min >= r_max {
            return Err(Error::InvalidGrid(format!(
                "r_min must be < r_max, got [{r_min}, {r_max}]"
            )));
        }
        if n_points < 3 {
            return Err(Error::InvalidGrid(format!(
                "need at least 3 grid points, got {n_points}"
            )));
        }
        Ok(Self {
            r_min,
            r_max,
            n_points,
        })
    }

    /// Grid with spacing as close as possible to `h`, keeping both end points.
    pub fn with_spacing(r_min: f64, r_max: f64, h: f64) -> Result<Self> {
        if !(h > 0.0) {
            return Err(Error::InvalidGrid(format!("spacing must be > 0, got {h}")));
        }
        let intervals = ((r_max - r_min) / h).round().max(2.0) as usize;
        Self::new(r_min, r_max, intervals + 1)
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn n_points(&self) -> usize {
        self.n_points
    }

    pub fn h(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    /// The i-th mesh point; the last point is pinned to r_max exactly.
    pub fn r(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + i as f64 * self.h()
        }
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.r(i)).collect()
    }

    /// Same interval with the spacing halved (2n − 1 points).
    pub fn refined(&self) -> Self {
        Self {
            n_points: 2 * self.n_points - 1,
            ..*self
        }
    }

    /// Samples `f` at every mesh point.
    pub fn sample(&self, f: impl Fn(f64) -> f64) -> Vec<f64> {
        (0..self.n_points).map(|i| f(self.r(i))).collect()
    }

    pub(crate) fn check_len(&self, len: usize, what: &str) -> Result<()> {
        if len != self.n_points {
            return Err(Error::Argument(format!(
                "{what} has {len} samples, grid has {}",
                self.n_points
            )));
        }
        Ok(())
    }
}
