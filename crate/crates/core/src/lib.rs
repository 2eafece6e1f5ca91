//! Quantum and semiclassical phase/entanglement calculators for a matter-wave
//! interferometer coupled to a quantized weak gravitational field.
//!
//! The model: a two-arm atom interferometer held near a heavy source mass.
//! Each arm displaces every gravitational field mode into a (tiny) coherent
//! state; the accumulated mode phases show up as an interferometric phase
//! shift of Aharonov–Bohm type, and the which-path record carried by the
//! field shows up as a visibility loss quantified by the linear entropy of
//! the reduced atom state.
//!
//! Module layout:
//!
//! * [`constants`] — CODATA-2018 constants and derived Planck-scale values.
//! * [`geometry`] — interferometer layout, experiment scenarios, causal gating.
//! * [`singlemode`] — closed-form single-mode couplings, displacements,
//!   dynamical phases and coherent-state overlaps.
//! * [`fock_oracle`] — brute-force truncated-Fock-space evolution used as
//!   ground truth for every closed-form result.
//! * [`continuum`] — mode-continuum observables: the gravitational
//!   Aharonov–Bohm phase, the entanglement entropy integral and visibility.
//! * [`semiclassical`] — reference phases from the Newtonian potential and
//!   from the electromagnetic Aharonov–Bohm setup (ideal solenoid).
//! * [`scenario`] — gated runs (one-arm / no-arm causal contact) and their
//!   deltas against the full-interaction baseline.
//! * [`numerics`] — adaptive Gauss–Kronrod quadrature and the sine/cosine
//!   integral special functions backing the continuum module.
//!
//! All quantities are SI unless a doc comment says otherwise; entropy
//! integrals run in the dimensionless variable `x = k·r` so that cutoffs of
//! order 1e34 m⁻¹ only ever appear inside logarithms.

// Validation deliberately uses the `!(v > 0.0)` form: it rejects NaN even
// where the accompanying `is_finite` check is someday refactored away,
// whereas `v <= 0.0` silently accepts NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
// Quadrature nodes, asymptotic coefficients and frozen test references are
// written at the full precision of the 30-digit recomputation they came
// from; the digits beyond f64 record where each value originated.
#![allow(clippy::excessive_precision)]

pub mod constants;
pub mod continuum;
mod error;
pub mod fock_oracle;
pub mod geometry;
pub mod numerics;
pub mod scenario;
pub mod semiclassical;
pub mod singlemode;

pub use constants::{CutoffPreset, PhysicalConstants, PlanckScale, derive_planck_scale};
pub use continuum::{ModeIntegralSpec, PhaseEntropyReport, TimeFactor};
pub use error::{Error, ErrorKind};
pub use fock_oracle::{FidelityReport, SingleModeSystem, TruncatedState};
pub use geometry::{GatingReport, InterferometerGeometry, ScenarioConfig, ScenarioKind};
pub use scenario::ScenarioReport;
