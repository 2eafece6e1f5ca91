//! Shared fixtures for the criterion benches: one representative
//! single-mode parameter set and one representative interferometer
//! geometry, so both bench files measure the same workloads.

use gravab_core::InterferometerGeometry;
use gravab_core::fock_oracle::SingleModeSystem;

/// Moderately driven single-mode system (peak displacement ≈ 1.8, so a
/// Fock cutoff of 40 satisfies the truncation rule with headroom).
pub fn bench_system() -> SingleModeSystem {
    SingleModeSystem::from_dimensionless(0.15, 0.1, 0.2, 1.0, 0.7, -0.4, 0.3)
        .expect("bench parameters are valid")
}

/// Two-arm geometry at laboratory scale: arms at 0.1 m and 0.2 m from a
/// 1250 kg source, one second of interaction, Rb-87 test mass.
pub fn bench_geometry() -> InterferometerGeometry {
    InterferometerGeometry {
        r_u: [0.1, 0.0, 0.0],
        r_d: [0.2, 0.0, 0.0],
        r_s: [0.0, 0.0, 0.0],
        atom_mass: gravab_core::continuum::RB87_MASS_KG,
        source_mass: 1250.0,
        interaction_time: 1.0,
    }
}
