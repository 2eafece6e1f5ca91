//! Brute-force ground truth in a truncated Fock basis.
//!
//! One field mode is coupled to a two-branch atom and a static source. The
//! joint state lives on {arm u, arm d} × {0..N photons}; the Hamiltonian is
//! block-diagonal over the arm label, each block a displaced harmonic
//! ladder. Evolution is a dense matrix exponential — no analytic shortcuts —
//! so the closed-form results in [`crate::singlemode`] can be validated
//! against it amplitude by amplitude.
//!
//! # Conventions
//!
//! The block for arm ξ is H_ξ/ħ = ω b†b − (c_ξ b + conj(c_ξ) b†) with the
//! drive coefficient c_ξ = g_ξ·e^{i k·r_ξ} + g_s·e^{i k·r_s}. Starting from
//! the vacuum, the exact solution is the coherent state
//! α_ξ(t) = conj(c_ξ)·(1 − e^{−iωt})/ω with branch phase
//! θ_ξ(t) = |c_ξ/ω|²·(ωt − sin ωt). The closed-form amplitude in
//! [`crate::singlemode::coherent_amplitude`] uses the mode gauge in which
//! the source sits at k·r_s = 0; [`compare_with_analytic`] therefore
//! rotates every geometric phase by −k·r_s before comparing. The rotation
//! is a mode redefinition b → e^{−i k·r_s} b and leaves every observable
//! (amplitude differences, overlaps, phase differences, entropies)
//! unchanged.
//!
//! Rest energies of the atom and source shift both blocks by the same
//! constant. Adding ~10²³ rad/s to diagonal entries of order ω would wipe
//! out the mode energies in f64, so the constant is carried separately in
//! [`SingleModeSystem::rest_frequency`] and applied in [`evolve`] as the
//! exact global phase e^{−i·rest·t} it is.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::geometry::{InterferometerGeometry, dot};
use crate::singlemode::{
    CoherentAmplitude, ModeParams, PhaseForm, coherent_amplitude_from_phases, coupling_constant,
    dynamical_phase_from_phases, overlap,
};

/// Fock levels the oracle will allocate at most; the oracle exists for
/// desk-scale validation, not production sweeps.
pub const MAX_TRUNCATION: usize = 512;

/// Tolerated drift of the state norm across one evolution step.
pub const NORM_DRIFT_TOL: f64 = 1e-8;

/// Dimensionless parameter set of the two-branch single-mode model.
///
/// `g_u`, `g_d` couple the two atom branches to the mode, `g_s` couples the
/// source; the `k_dot_r_*` entries are the geometric phases of the three
/// positions. All frequencies are rad/s in SI use and plain numbers in
/// dimensionless use — the evolution only ever sees the products g·t, ω·t.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SingleModeSystem {
    pub g_u: f64,
    pub g_d: f64,
    pub g_s: f64,
    pub omega: f64,
    pub k_dot_r_u: f64,
    pub k_dot_r_d: f64,
    pub k_dot_r_s: f64,
    /// Constant (rest-energy) frequency shared by both blocks; applied as a
    /// global phase rather than stored on the matrix diagonal (see module
    /// notes).
    pub rest_frequency: f64,
}

impl SingleModeSystem {
    /// Dimensionless construction: rest energies zero, couplings and phases
    /// given directly.
    pub fn from_dimensionless(
        g_u: f64,
        g_d: f64,
        g_s: f64,
        omega: f64,
        k_dot_r_u: f64,
        k_dot_r_d: f64,
        k_dot_r_s: f64,
    ) -> Result<Self, Error> {
        if !(omega > 0.0) || !omega.is_finite() {
            return Err(Error::SingularMode);
        }
        for (name, g) in [("g_u", g_u), ("g_d", g_d), ("g_s", g_s)] {
            if !g.is_finite() || g < 0.0 {
                return Err(Error::InvalidParameter(format!(
                    "coupling {name} must be finite and non-negative, got {g}"
                )));
            }
        }
        Ok(Self {
            g_u,
            g_d,
            g_s,
            omega,
            k_dot_r_u,
            k_dot_r_d,
            k_dot_r_s,
            rest_frequency: 0.0,
        })
    }

    /// SI construction from an interferometer layout and a mode: both arms
    /// carry the atom coupling, the source its own, and the rest energies
    /// (m + M)c²/ħ ride along as the shared constant frequency.
    pub fn from_geometry(
        geom: &InterferometerGeometry,
        mode: &ModeParams,
        constants: &PhysicalConstants,
    ) -> Result<Self, Error> {
        geom.validate()?;
        mode.validate(constants)?;
        let g_atom = coupling_constant(geom.atom_mass, mode, constants)?;
        let g_source = coupling_constant(geom.source_mass, mode, constants)?;
        let c2 = constants.c() * constants.c();
        Ok(Self {
            g_u: g_atom,
            g_d: g_atom,
            g_s: g_source,
            omega: mode.omega,
            k_dot_r_u: dot(mode.k, geom.r_u),
            k_dot_r_d: dot(mode.k, geom.r_d),
            k_dot_r_s: dot(mode.k, geom.r_s),
            rest_frequency: (geom.atom_mass + geom.source_mass) * c2 / constants.hbar(),
        })
    }

    /// Drive coefficient c_ξ = g_ξ·e^{i k·r_ξ} + g_s·e^{i k·r_s} of one arm.
    pub fn drive_coefficient(&self, arm: Arm) -> Complex64 {
        let (g, phase) = match arm {
            Arm::U => (self.g_u, self.k_dot_r_u),
            Arm::D => (self.g_d, self.k_dot_r_d),
        };
        g * Complex64::from_polar(1.0, phase)
            + self.g_s * Complex64::from_polar(1.0, self.k_dot_r_s)
    }

    /// The same system in the mode gauge where the source phase vanishes:
    /// all geometric phases shifted by −k·r_s. Observables are unchanged.
    pub fn with_source_phase_zeroed(&self) -> Self {
        Self {
            k_dot_r_u: self.k_dot_r_u - self.k_dot_r_s,
            k_dot_r_d: self.k_dot_r_d - self.k_dot_r_s,
            k_dot_r_s: 0.0,
            ..*self
        }
    }

    /// Peak coherent displacement magnitude over the evolution,
    /// max_ξ 2|c_ξ|/ω — the worst excursion of |1 − e^{−iωt}| is 2.
    pub fn peak_displacement(&self) -> f64 {
        let c_u = self.drive_coefficient(Arm::U).norm();
        let c_d = self.drive_coefficient(Arm::D).norm();
        2.0 * c_u.max(c_d) / self.omega
    }
}

/// Arm label of the two-branch atom.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Arm {
    #[serde(rename = "u")]
    U,
    #[serde(rename = "d")]
    D,
}

/// Joint state on {arm} × {0..N}: `amplitudes[arm·(N+1) + n]`, arm-major
/// with u first.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TruncatedState {
    pub amplitudes: Vec<Complex64>,
    /// Highest Fock level kept; the vector holds 2(truncation + 1) entries.
    pub truncation: usize,
}

impl TruncatedState {
    /// (|u⟩ + |d⟩)/√2 ⊗ |vacuum⟩ — the interferometer input state.
    pub fn initial_superposition(truncation: usize) -> Self {
        let dim = truncation + 1;
        let mut amplitudes = vec![Complex64::new(0.0, 0.0); 2 * dim];
        let w = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amplitudes[0] = w;
        amplitudes[dim] = w;
        Self {
            amplitudes,
            truncation,
        }
    }

    /// Wrap an explicit amplitude vector; the length must be 2(N+1).
    pub fn from_amplitudes(amplitudes: Vec<Complex64>, truncation: usize) -> Result<Self, Error> {
        if amplitudes.len() != 2 * (truncation + 1) {
            return Err(Error::InvalidParameter(format!(
                "amplitude vector has length {}, expected 2(N+1) = {}",
                amplitudes.len(),
                2 * (truncation + 1)
            )));
        }
        Ok(Self {
            amplitudes,
            truncation,
        })
    }

    /// Σ|amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Amplitude of |arm, n⟩.
    pub fn amplitude(&self, arm: Arm, n: usize) -> Complex64 {
        let dim = self.truncation + 1;
        let offset = match arm {
            Arm::U => 0,
            Arm::D => dim,
        };
        self.amplitudes[offset + n]
    }

    /// The (N+1)-component field amplitude vector of one arm.
    fn arm_block(&self, arm: Arm) -> &[Complex64] {
        let dim = self.truncation + 1;
        match arm {
            Arm::U => &self.amplitudes[..dim],
            Arm::D => &self.amplitudes[dim..],
        }
    }
}

/// Dense Hamiltonian of the truncated model, stored as H/ħ (rad/s) without
/// the constant rest-energy diagonal — that constant lives in
/// `params.rest_frequency` and is restored exactly as a global phase during
/// evolution.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleHamiltonian {
    /// 2(N+1) × 2(N+1), block-diagonal over the arm label, Hermitian.
    pub matrix: DMatrix<Complex64>,
    pub params: SingleModeSystem,
    pub truncation: usize,
}

/// Reduced density matrix of one subsystem (field: (N+1)×(N+1); atom: 2×2).
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedDensityMatrix {
    pub entries: DMatrix<Complex64>,
    pub trace: f64,
}

impl ReducedDensityMatrix {
    /// Largest Hermiticity violation, max |ρ − ρ†|.
    pub fn hermiticity_defect(&self) -> f64 {
        let adj = self.entries.adjoint();
        (&self.entries - adj)
            .iter()
            .map(|e| e.norm())
            .fold(0.0, f64::max)
    }

    /// Smallest eigenvalue (the matrix is Hermitian by construction).
    pub fn min_eigenvalue(&self) -> f64 {
        nalgebra::SymmetricEigen::new(self.entries.clone())
            .eigenvalues
            .iter()
            .cloned()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Outcome of one oracle-vs-analytic comparison run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FidelityReport {
    /// |⟨ψ_analytic|ψ_oracle⟩| over the joint truncated space.
    pub fidelity: f64,
    /// Largest componentwise amplitude difference across both arms.
    pub max_amplitude_error: f64,
    /// |S_L(oracle) − ½(1 − |⟨α_d|α_u⟩|²)|.
    pub entropy_discrepancy: f64,
    pub truncation: usize,
    /// Analytic coherent amplitudes per arm (source-phase-zero gauge).
    pub alpha_u: Complex64,
    pub alpha_d: Complex64,
    pub oracle_linear_entropy: f64,
    pub analytic_linear_entropy: f64,
    /// Branch phases read off the oracle state, arg⟨α_ξ|ψ_ξ⟩, in (−π, π].
    pub measured_phase_u_rad: f64,
    pub measured_phase_d_rad: f64,
    /// Closed-form branch phases with the exact (ωt − sin ωt) time factor.
    pub predicted_phase_full_u_rad: f64,
    pub predicted_phase_full_d_rad: f64,
    /// The same phases with the linear-in-t factor, for contrast.
    pub predicted_phase_linear_u_rad: f64,
    pub predicted_phase_linear_d_rad: f64,
}

/// Build the truncated Hamiltonian for both arms.
///
/// Errors when N is outside [1, `MAX_TRUNCATION`] or the predicted peak
/// occupation 4·max|c_ξ/ω|² exceeds N/4, which would push appreciable
/// amplitude onto the truncation edge.
pub fn build_hamiltonian(
    params: &SingleModeSystem,
    truncation: usize,
) -> Result<OracleHamiltonian, Error> {
    if !(1..=MAX_TRUNCATION).contains(&truncation) {
        return Err(Error::InvalidParameter(format!(
            "truncation must lie in [1, {MAX_TRUNCATION}], got {truncation}"
        )));
    }
    if !(params.omega > 0.0) {
        return Err(Error::SingularMode);
    }
    let peak = params.peak_displacement();
    let predicted_occupation = peak * peak;
    let limit = truncation as f64 / 4.0;
    if predicted_occupation > limit {
        return Err(Error::TruncationRisk {
            predicted: predicted_occupation,
            limit,
        });
    }

    let dim = truncation + 1;
    let mut matrix = DMatrix::<Complex64>::zeros(2 * dim, 2 * dim);
    for (arm, offset) in [(Arm::U, 0), (Arm::D, dim)] {
        let c = params.drive_coefficient(arm);
        for n in 0..dim {
            matrix[(offset + n, offset + n)] = Complex64::new(params.omega * n as f64, 0.0);
            if n + 1 < dim {
                let root = ((n + 1) as f64).sqrt();
                // coefficient of b: ⟨n| c b |n+1⟩ = c √(n+1)
                matrix[(offset + n, offset + n + 1)] = -c * root;
                matrix[(offset + n + 1, offset + n)] = -c.conj() * root;
            }
        }
    }
    Ok(OracleHamiltonian {
        matrix,
        params: *params,
        truncation,
    })
}

/// Evolve a state by exp(−iHt/ħ) via dense matrix exponentials of the two
/// arm blocks, then apply the rest-energy global phase exactly.
///
/// Errors when the state norm drifts by more than `NORM_DRIFT_TOL` — a sign
/// the exponential lost accuracy (raise N or shorten the step).
pub fn evolve(
    state: &TruncatedState,
    hamiltonian: &OracleHamiltonian,
    t: f64,
) -> Result<TruncatedState, Error> {
    if state.truncation != hamiltonian.truncation {
        return Err(Error::InvalidParameter(format!(
            "state truncation {} does not match Hamiltonian truncation {}",
            state.truncation, hamiltonian.truncation
        )));
    }
    let dim = state.truncation + 1;
    let norm_before = state.norm_sqr().sqrt();

    let mut amplitudes = vec![Complex64::new(0.0, 0.0); 2 * dim];
    for offset in [0, dim] {
        let block = hamiltonian
            .matrix
            .view((offset, offset), (dim, dim))
            .clone_owned();
        let propagator = (block * Complex64::new(0.0, -t)).exp();
        let input = DVector::from_column_slice(&state.amplitudes[offset..offset + dim]);
        let output = propagator * input;
        amplitudes[offset..offset + dim].copy_from_slice(output.as_slice());
    }

    // Rest energy: a constant on both blocks contributes exactly the global
    // phase e^{−i·rest·t}; reducing mod 2π keeps the argument sane when
    // rest·t is astronomically large (the phase is unobservable either way).
    let rest_phase = (hamiltonian.params.rest_frequency * t).rem_euclid(2.0 * std::f64::consts::PI);
    let global = Complex64::from_polar(1.0, -rest_phase);
    for a in &mut amplitudes {
        *a *= global;
    }

    let out = TruncatedState {
        amplitudes,
        truncation: state.truncation,
    };
    let drift = (out.norm_sqr().sqrt() - norm_before).abs();
    if drift > NORM_DRIFT_TOL {
        return Err(Error::NormDrift {
            drift,
            tol: NORM_DRIFT_TOL,
        });
    }
    Ok(out)
}

/// Partial trace over the arm label: ρ_field[n, m] = Σ_ξ ψ_ξ[n]·conj(ψ_ξ[m]).
pub fn reduced_field_state(state: &TruncatedState) -> ReducedDensityMatrix {
    let dim = state.truncation + 1;
    let mut entries = DMatrix::<Complex64>::zeros(dim, dim);
    for arm in [Arm::U, Arm::D] {
        let block = state.arm_block(arm);
        for n in 0..dim {
            for m in 0..dim {
                entries[(n, m)] += block[n] * block[m].conj();
            }
        }
    }
    let trace = entries.diagonal().iter().map(|e| e.re).sum();
    ReducedDensityMatrix { entries, trace }
}

/// Partial trace over the field: ρ_atom[ξ, η] = Σ_n ψ_ξ[n]·conj(ψ_η[n]).
pub fn reduced_atom_state(state: &TruncatedState) -> ReducedDensityMatrix {
    let mut entries = DMatrix::<Complex64>::zeros(2, 2);
    let blocks = [state.arm_block(Arm::U), state.arm_block(Arm::D)];
    for (i, bi) in blocks.iter().enumerate() {
        for (j, bj) in blocks.iter().enumerate() {
            let mut sum = Complex64::new(0.0, 0.0);
            for n in 0..bi.len() {
                sum += bi[n] * bj[n].conj();
            }
            entries[(i, j)] = sum;
        }
    }
    let trace = entries.diagonal().iter().map(|e| e.re).sum();
    ReducedDensityMatrix { entries, trace }
}

/// Linear entropy S_L = 1 − tr(ρ²). For Hermitian ρ the purity is Σ|ρ_nm|².
pub fn linear_entropy(rho: &ReducedDensityMatrix) -> f64 {
    let purity: f64 = rho.entries.iter().map(|e| e.norm_sqr()).sum();
    1.0 - purity
}

/// Truncated Fock expansion of a coherent state:
/// ⟨n|α⟩ = e^{−|α|²/2}·αⁿ/√n!, built iteratively to avoid factorials.
pub fn coherent_projections(alpha: Complex64, truncation: usize) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(truncation + 1);
    let mut term = Complex64::new((-0.5 * alpha.norm_sqr()).exp(), 0.0);
    out.push(term);
    for n in 0..truncation {
        term *= alpha / ((n + 1) as f64).sqrt();
        out.push(term);
    }
    out
}

/// Wrap an angle to (−π, π].
fn wrap_angle(theta: f64) -> f64 {
    let two_pi = 2.0 * std::f64::consts::PI;
    let mut w = theta.rem_euclid(two_pi);
    if w > std::f64::consts::PI {
        w -= two_pi;
    }
    w
}

/// Run the oracle and the closed-form solution on the same parameters and
/// report how well they agree.
///
/// Requires N ≥ |α|² + 10|α| + 20 at the peak displacement |α| so the
/// truncated basis holds the whole coherent tail; below that the
/// truncation-risk error is returned rather than a silently bad fidelity.
pub fn compare_with_analytic(
    params: &SingleModeSystem,
    t: f64,
    truncation: usize,
) -> Result<FidelityReport, Error> {
    let sys = params.with_source_phase_zeroed();
    let peak = sys.peak_displacement();
    let required = peak * peak + 10.0 * peak + 20.0;
    if (truncation as f64) < required {
        return Err(Error::TruncationRisk {
            predicted: required,
            limit: truncation as f64,
        });
    }

    let hamiltonian = build_hamiltonian(&sys, truncation)?;
    let initial = TruncatedState::initial_superposition(truncation);
    let evolved = evolve(&initial, &hamiltonian, t)?;

    // Closed-form branch states in the same gauge (k·r_s = 0).
    let alpha_u =
        coherent_amplitude_from_phases(sys.g_s, sys.g_u, 0.0, sys.k_dot_r_u, sys.omega, t);
    let alpha_d =
        coherent_amplitude_from_phases(sys.g_s, sys.g_d, 0.0, sys.k_dot_r_d, sys.omega, t);
    let phase_full_u = dynamical_phase_from_phases(
        sys.g_s,
        sys.g_u,
        0.0,
        sys.k_dot_r_u,
        sys.omega,
        t,
        PhaseForm::Full,
    );
    let phase_full_d = dynamical_phase_from_phases(
        sys.g_s,
        sys.g_d,
        0.0,
        sys.k_dot_r_d,
        sys.omega,
        t,
        PhaseForm::Full,
    );
    let phase_linear_u = dynamical_phase_from_phases(
        sys.g_s,
        sys.g_u,
        0.0,
        sys.k_dot_r_u,
        sys.omega,
        t,
        PhaseForm::Linear,
    );
    let phase_linear_d = dynamical_phase_from_phases(
        sys.g_s,
        sys.g_d,
        0.0,
        sys.k_dot_r_d,
        sys.omega,
        t,
        PhaseForm::Linear,
    );

    // The analytic joint state (1/√2)·Σ_ξ e^{iθ_ξ}|ξ⟩|α_ξ⟩, truncated. The
    // rest-energy global phase is attached so the fidelity is phase-exact.
    let dim = truncation + 1;
    let rest_phase = (sys.rest_frequency * t).rem_euclid(2.0 * std::f64::consts::PI);
    let w = std::f64::consts::FRAC_1_SQRT_2;
    let mut analytic = vec![Complex64::new(0.0, 0.0); 2 * dim];
    for (arm_offset, alpha, theta) in [
        (0usize, alpha_u.value, phase_full_u),
        (dim, alpha_d.value, phase_full_d),
    ] {
        let branch_phase = Complex64::from_polar(w, theta - rest_phase);
        for (n, proj) in coherent_projections(alpha, truncation)
            .into_iter()
            .enumerate()
        {
            analytic[arm_offset + n] = branch_phase * proj;
        }
    }

    let mut inner = Complex64::new(0.0, 0.0);
    let mut max_amplitude_error = 0.0f64;
    for (a, o) in analytic.iter().zip(evolved.amplitudes.iter()) {
        inner += a.conj() * o;
        max_amplitude_error = max_amplitude_error.max((a - o).norm());
    }

    let oracle_entropy = linear_entropy(&reduced_field_state(&evolved));
    let branch_overlap = overlap(
        &CoherentAmplitude {
            value: alpha_d.value,
        },
        &CoherentAmplitude {
            value: alpha_u.value,
        },
    );
    let analytic_entropy = 0.5 * (1.0 - branch_overlap.norm_sqr());

    // Branch phase read directly off the oracle state: arg⟨α_ξ|ψ_ξ⟩ (the
    // rest phase is removed so the prediction comparison is gauge-free).
    let mut measured = [0.0f64; 2];
    for (idx, (arm, alpha)) in [(Arm::U, alpha_u.value), (Arm::D, alpha_d.value)]
        .into_iter()
        .enumerate()
    {
        let block = evolved.arm_block(arm);
        let mut projection = Complex64::new(0.0, 0.0);
        for (n, proj) in coherent_projections(alpha, truncation)
            .into_iter()
            .enumerate()
        {
            projection += proj.conj() * block[n];
        }
        measured[idx] = wrap_angle(projection.arg() + rest_phase);
    }

    Ok(FidelityReport {
        fidelity: inner.norm(),
        max_amplitude_error,
        entropy_discrepancy: (oracle_entropy - analytic_entropy).abs(),
        truncation,
        alpha_u: alpha_u.value,
        alpha_d: alpha_d.value,
        oracle_linear_entropy: oracle_entropy,
        analytic_linear_entropy: analytic_entropy,
        measured_phase_u_rad: measured[0],
        measured_phase_d_rad: measured[1],
        predicted_phase_full_u_rad: phase_full_u,
        predicted_phase_full_d_rad: phase_full_d,
        predicted_phase_linear_u_rad: phase_linear_u,
        predicted_phase_linear_d_rad: phase_linear_d,
    })
}
