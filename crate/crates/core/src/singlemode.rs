//! Closed-form dynamics of one field mode driven by the source mass and one
//! interferometer arm: coupling strength, coherent displacement, accumulated
//! dynamical phase and coherent-state overlaps.
//!
//! The underlying solvable model is a harmonic mode linearly forced by two
//! static point masses. Starting from the vacuum, the mode ends in a
//! coherent state whose amplitude rotates with the mode period, and the
//! branch wavefunction picks up a phase with the characteristic
//! (ωt − sin ωt) time dependence; the widely used linear-in-t phase is the
//! same expression with the bounded sin term dropped.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::geometry::{dot, norm};

/// One field mode: wavevector, frequency, effective polarization weight and
/// the box-quantization volume.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ModeParams {
    /// Wavevector, 1/m.
    pub k: [f64; 3],
    /// Angular frequency, rad/s; must equal c·|k| for a physical mode.
    pub omega: f64,
    /// Effective squared polarization weight (dimensionless, default 1).
    pub polarization_factor: f64,
    /// Quantization volume, m³. Cancels from every physical observable.
    pub volume: f64,
}

impl ModeParams {
    /// Build a physical mode from its wavevector: ω = c·|k|, unit
    /// polarization weight, unit volume.
    pub fn from_wavevector(k: [f64; 3], constants: &PhysicalConstants) -> Self {
        Self {
            k,
            omega: constants.c() * norm(k),
            polarization_factor: 1.0,
            volume: 1.0,
        }
    }

    /// Check the dispersion relation and positivity invariants.
    pub fn validate(&self, constants: &PhysicalConstants) -> Result<(), Error> {
        if !(self.omega > 0.0) {
            return Err(Error::SingularMode);
        }
        let expected = constants.c() * norm(self.k);
        if (self.omega - expected).abs() > 1e-12 * expected {
            return Err(Error::InvalidParameter(format!(
                "mode violates the dispersion relation: omega = {} but c|k| = {}",
                self.omega, expected
            )));
        }
        if !(self.volume > 0.0) || !(self.polarization_factor > 0.0) {
            return Err(Error::InvalidParameter(
                "mode volume and polarization factor must be positive".into(),
            ));
        }
        Ok(())
    }
}

/// Dimensionless coherent displacement of a mode.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CoherentAmplitude {
    pub value: Complex64,
}

/// Which time dependence the dynamical phase uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PhaseForm {
    /// Exact (ωt − sin ωt)/ω² time factor of the solvable model.
    #[serde(rename = "full")]
    Full,
    /// Linear t/ω factor — the long-time form with the bounded sin dropped.
    #[serde(rename = "linear")]
    Linear,
}

/// Gravitational coupling of a mass to one mode:
/// g = m·c·sqrt(2πG/(ħ·ω·V))·sqrt(polarization_factor), rad/s.
///
/// Linear in the mass, so `mass = 0` switches the interaction off exactly.
pub fn coupling_constant(
    mass: f64,
    mode: &ModeParams,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if mode.omega == 0.0 {
        return Err(Error::SingularMode);
    }
    if mass < 0.0 || !mass.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "mass must be non-negative and finite, got {mass}"
        )));
    }
    let two_pi = 2.0 * std::f64::consts::PI;
    let g2 = two_pi * constants.g() / (constants.hbar() * mode.omega * mode.volume);
    Ok(mass * constants.c() * g2.sqrt() * mode.polarization_factor.sqrt())
}

/// The displacement ramp (1 − e^{−iωt})/ω, evaluated through a Maclaurin
/// branch below |ωt| = 1e-6 to avoid the 1 − e^{−iτ} cancellation.
fn displacement_ramp(omega: f64, t: f64) -> Complex64 {
    let tau = omega * t;
    if tau.abs() < 1e-6 {
        // (1 − e^{−iτ})/ω = t·(τ/2 + i(1 − τ²/6)) + O(τ³)·t
        Complex64::new(0.5 * tau, 1.0 - tau * tau / 6.0) * t
    } else {
        (Complex64::new(1.0, 0.0) - Complex64::from_polar(1.0, -tau)) / omega
    }
}

/// The dimensionless shape (τ − sin τ)/τ² of the full dynamical phase, with
/// a series branch below |τ| = 0.15 where the subtraction loses digits.
pub(crate) fn phase_shape(tau: f64) -> f64 {
    if tau.abs() < 0.15 {
        let t2 = tau * tau;
        (tau / 6.0) * (1.0 - t2 / 20.0 + t2 * t2 / 840.0 - t2 * t2 * t2 / 60_480.0)
    } else {
        (tau - tau.sin()) / (tau * tau)
    }
}

/// Coherent amplitude of a mode after time `t`, driven by the source
/// (coupling `g_s` at `r_s`) and one arm (coupling `g_xi` at `r_xi`):
///
/// α = (1 − e^{−iωt})/ω · (g_s·e^{+i k·r_s} + g_ξ·e^{−i k·r_ξ})
///
/// The mixed phase signs are deliberate; see the module notes on
/// conventions in [`crate::fock_oracle`] — every physical observable
/// depends only on amplitude differences, which are convention-free.
pub fn coherent_amplitude(
    g_s: f64,
    g_xi: f64,
    mode: &ModeParams,
    r_s: [f64; 3],
    r_xi: [f64; 3],
    t: f64,
) -> CoherentAmplitude {
    coherent_amplitude_from_phases(
        g_s,
        g_xi,
        dot(mode.k, r_s),
        dot(mode.k, r_xi),
        mode.omega,
        t,
    )
}

/// [`coherent_amplitude`] with the geometric phases k·r supplied directly;
/// this is the entry point for dimensionless (oracle) parameter sets.
pub fn coherent_amplitude_from_phases(
    g_s: f64,
    g_xi: f64,
    k_dot_r_s: f64,
    k_dot_r_xi: f64,
    omega: f64,
    t: f64,
) -> CoherentAmplitude {
    let drive = g_s * Complex64::from_polar(1.0, k_dot_r_s)
        + g_xi * Complex64::from_polar(1.0, -k_dot_r_xi);
    CoherentAmplitude {
        value: displacement_ramp(omega, t) * drive,
    }
}

/// Dynamical phase accumulated by one branch, rad.
///
/// With S = |g_s·e^{i k·r_s} + g_ξ·e^{i k·r_ξ}|²:
/// full → S·(ωt − sin ωt)/ω², linear → S·t/ω.
pub fn dynamical_phase(
    g_s: f64,
    g_xi: f64,
    mode: &ModeParams,
    r_s: [f64; 3],
    r_xi: [f64; 3],
    t: f64,
    form: PhaseForm,
) -> f64 {
    dynamical_phase_from_phases(
        g_s,
        g_xi,
        dot(mode.k, r_s),
        dot(mode.k, r_xi),
        mode.omega,
        t,
        form,
    )
}

/// [`dynamical_phase`] with the geometric phases supplied directly.
pub fn dynamical_phase_from_phases(
    g_s: f64,
    g_xi: f64,
    k_dot_r_s: f64,
    k_dot_r_xi: f64,
    omega: f64,
    t: f64,
    form: PhaseForm,
) -> f64 {
    let drive =
        g_s * Complex64::from_polar(1.0, k_dot_r_s) + g_xi * Complex64::from_polar(1.0, k_dot_r_xi);
    let s = drive.norm_sqr();
    match form {
        PhaseForm::Full => s * t * t * phase_shape(omega * t),
        PhaseForm::Linear => s * t / omega,
    }
}

/// Overlap of two coherent states,
/// ⟨a|b⟩ = exp(−(|a|² + |b|²)/2 + conj(a)·b).
///
/// Its magnitude obeys |⟨a|b⟩|² = exp(−|a − b|²) exactly.
pub fn overlap(a: &CoherentAmplitude, b: &CoherentAmplitude) -> Complex64 {
    let exponent = a.value.conj() * b.value - 0.5 * (a.value.norm_sqr() + b.value.norm_sqr());
    exponent.exp()
}
