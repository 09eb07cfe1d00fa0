//! Superpotential construction for the (2+1)-dimensional Dirac equation.
//!
//! A radial superpotential W(r) = ℓ/r + eA(r)/ħ + v(r)/ħ couples the two
//! spinor components through the first-order operators ±∂ + W. Eliminating
//! either component gives the partner problems −f″ + (W² ∓ W′) f = ε² f with
//! ε² = (E² − m²c⁴)/(ħ²c²). This crate builds W for the Dirac oscillator,
//! Coulomb and Morse families (closed-form spectra) and three quasi-exactly
//! solvable families (closed-form ground states), and checks every formula
//! against an independent finite-difference eigensolver.

// `!(x > 0.0)` is used on purpose so that NaN fails validation.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod analytic;
pub mod error;
pub mod grid;
pub mod model;
pub mod numsolve;
pub mod qes;
pub mod specfun;
pub mod spectrum;
pub mod superpot;
pub mod units;

pub use error::{Error, Result};
pub use grid::RadialGrid;
pub use model::{Family, ModelParams, ModelSpec, TabulatedW};
pub use spectrum::{Level, Source, SpectrumResult};
pub use superpot::{superpotential_from_model, PartnerPotentials, Superpotential};
pub use units::{epsilon_to_energy, nonrelativistic_limit, omega_total, Units};
