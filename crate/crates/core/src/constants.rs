//! Physical constants and Planck-scale quantities.
//!
//! Single source of truth for unit conventions: everything downstream works
//! in SI and takes its constants from [`PhysicalConstants`], so a test can
//! rescale `G` or `hbar` and watch derived quantities respond.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Fundamental constants in SI units, fixed at construction.
///
/// Fields are private so a value, once built, cannot drift; use
/// [`PhysicalConstants::codata2018`] for the standard set or
/// [`PhysicalConstants::new`] for deliberately rescaled variants in tests.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    g: f64,
    hbar: f64,
    c: f64,
    epsilon0: f64,
}

impl PhysicalConstants {
    /// CODATA-2018 values.
    pub const fn codata2018() -> Self {
        Self {
            g: 6.674_30e-11,
            hbar: 1.054_571_817e-34,
            c: 299_792_458.0,
            epsilon0: 8.854_187_812_8e-12,
        }
    }

    /// Build a custom constant set; every entry must be strictly positive.
    pub fn new(g: f64, hbar: f64, c: f64, epsilon0: f64) -> Result<Self, Error> {
        for (name, v) in [("G", g), ("hbar", hbar), ("c", c), ("epsilon0", epsilon0)] {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::InvalidParameter(format!(
                    "constant {name} must be finite and strictly positive, got {v}"
                )));
            }
        }
        Ok(Self {
            g,
            hbar,
            c,
            epsilon0,
        })
    }

    /// Gravitational constant, m³ kg⁻¹ s⁻².
    pub fn g(&self) -> f64 {
        self.g
    }

    /// Reduced Planck constant, J·s.
    pub fn hbar(&self) -> f64 {
        self.hbar
    }

    /// Speed of light, m/s.
    pub fn c(&self) -> f64 {
        self.c
    }

    /// Vacuum permittivity, F/m (used only by the electromagnetic
    /// reference calculations).
    pub fn epsilon0(&self) -> f64 {
        self.epsilon0
    }

    /// Vacuum permeability μ₀ = 1/(ε₀c²), H/m.
    pub fn mu0(&self) -> f64 {
        1.0 / (self.epsilon0 * self.c * self.c)
    }
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self::codata2018()
    }
}

/// Planck-scale quantities derived from a [`PhysicalConstants`] set.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlanckScale {
    /// Planck mass sqrt(ħc/G), kg.
    pub mass: f64,
    /// Planck length sqrt(ħG/c³), m.
    pub length: f64,
    /// Inverse Planck length, 1/m — the natural mode cutoff.
    pub wavenumber: f64,
}

/// Derive the Planck mass, length and wavenumber from a constant set.
///
/// Pure and deterministic: the same constants always give the same scale.
pub fn derive_planck_scale(constants: &PhysicalConstants) -> PlanckScale {
    let mass = (constants.hbar() * constants.c() / constants.g()).sqrt();
    let length = (constants.hbar() * constants.g() / constants.c().powi(3)).sqrt();
    PlanckScale {
        mass,
        length,
        wavenumber: 1.0 / length,
    }
}

/// Named choices for the mode cutoff `k_max` of the continuum integrals.
///
/// Two conventions ship because published order-of-magnitude estimates for
/// this system round the cutoff down to 1e32 m⁻¹, while the CODATA inverse
/// Planck length is 6.19e34 m⁻¹; results with either choice differ only
/// logarithmically.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum CutoffPreset {
    /// `k_max` = 1/(Planck length) from the CODATA constants.
    #[default]
    #[serde(rename = "codata")]
    Codata,
    /// `k_max` = 1e32 m⁻¹, the rounded cutoff used in published
    /// order-of-magnitude estimates; kept so those numbers can be
    /// reproduced verbatim.
    #[serde(rename = "paper-cutoff")]
    PaperCutoff,
}

impl CutoffPreset {
    /// The cutoff value selected by this preset, 1/m.
    pub fn k_max(&self, constants: &PhysicalConstants) -> f64 {
        match self {
            CutoffPreset::Codata => derive_planck_scale(constants).wavenumber,
            CutoffPreset::PaperCutoff => 1.0e32,
        }
    }
}
