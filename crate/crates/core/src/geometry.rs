//! Interferometer configuration: arm and source positions, masses, timing,
//! and the causal-gating scenarios in which only some arms exchange field
//! quanta before the interferometer loop closes.

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;

/// Subtract 3-vectors.
pub(crate) fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

/// Dot product of 3-vectors.
pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Euclidean norm of a 3-vector.
pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Cross product of 3-vectors.
pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

/// Static two-arm interferometer next to a point source mass.
///
/// Arms are held at fixed positions for the whole interaction time; positions
/// are metres, masses kilograms, time seconds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InterferometerGeometry {
    /// Position of the upper arm, m.
    #[serde(rename = "arm_u_position_m")]
    pub r_u: [f64; 3],
    /// Position of the lower arm, m.
    #[serde(rename = "arm_d_position_m")]
    pub r_d: [f64; 3],
    /// Position of the source mass, m.
    #[serde(rename = "source_position_m")]
    pub r_s: [f64; 3],
    /// Mass of the interfering atom, kg.
    #[serde(rename = "atom_mass_kg")]
    pub atom_mass: f64,
    /// Source mass, kg.
    #[serde(rename = "source_mass_kg")]
    pub source_mass: f64,
    /// Interaction time, s.
    #[serde(rename = "interaction_time_s")]
    pub interaction_time: f64,
}

impl InterferometerGeometry {
    /// Validate the invariants: strictly positive arm–source distances,
    /// non-negative masses and time, finite coordinates.
    ///
    /// Masses of exactly zero are accepted — they switch the coupling off,
    /// which several consistency checks rely on.
    pub fn validate(&self) -> Result<(), Error> {
        let all = self.r_u.iter().chain(&self.r_d).chain(&self.r_s).chain([
            &self.atom_mass,
            &self.source_mass,
            &self.interaction_time,
        ]);
        for v in all {
            if !v.is_finite() {
                return Err(Error::InvalidParameter(
                    "geometry contains a non-finite entry".into(),
                ));
            }
        }
        if norm(sub(self.r_u, self.r_s)) == 0.0 {
            return Err(Error::CoincidentPositions { which: "upper" });
        }
        if norm(sub(self.r_d, self.r_s)) == 0.0 {
            return Err(Error::CoincidentPositions { which: "lower" });
        }
        if self.atom_mass < 0.0 || self.source_mass < 0.0 {
            return Err(Error::InvalidParameter(
                "masses must be non-negative".into(),
            ));
        }
        if self.interaction_time < 0.0 {
            return Err(Error::InvalidParameter(
                "interaction time must be non-negative".into(),
            ));
        }
        Ok(())
    }

    /// Geometry with the arm labels exchanged; every signed phase difference
    /// downstream flips sign under this swap.
    pub fn with_arms_swapped(&self) -> Self {
        Self {
            r_u: self.r_d,
            r_d: self.r_u,
            ..*self
        }
    }

    /// Arm separation |r_u − r_d|, m.
    pub fn arm_separation(&self) -> f64 {
        norm(sub(self.r_u, self.r_d))
    }
}

/// Distances from each arm to the source mass, m.
pub fn arm_distances(geom: &InterferometerGeometry) -> Result<(f64, f64), Error> {
    geom.validate()?;
    Ok((norm(sub(geom.r_u, geom.r_s)), norm(sub(geom.r_d, geom.r_s))))
}

/// Which-arms-interact experiment variants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ScenarioKind {
    /// Both arms couple to the field for the full interaction time.
    #[serde(rename = "full-interaction")]
    FullInteraction,
    /// Only the arm inside the source's light cone at loop closure couples.
    #[serde(rename = "one-arm")]
    OneArm,
    /// The loop closes before either arm enters causal contact.
    #[serde(rename = "no-arm")]
    NoArm,
}

/// A scenario selection plus the time at which the interferometer loop
/// closes (the deadline for any field exchange to have begun).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScenarioConfig {
    pub kind: ScenarioKind,
    /// Loop-closure time, s.
    #[serde(rename = "loop_closure_time_s")]
    pub loop_closure_time: f64,
}

/// Outcome of the causal-gating test for both arms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GatingReport {
    /// Whether the upper arm is in causal contact with the source.
    pub arm_u_in_contact: bool,
    /// Whether the lower arm is in causal contact with the source.
    pub arm_d_in_contact: bool,
    /// One-way light travel time source → upper arm, s.
    #[serde(rename = "light_travel_u_s")]
    pub light_travel_u: f64,
    /// One-way light travel time source → lower arm, s.
    #[serde(rename = "light_travel_d_s")]
    pub light_travel_d: f64,
}

/// Sharp light-cone contact test: an arm is "in contact" when light from the
/// source can reach it before the loop closes.
pub fn light_cone_contact(
    geom: &InterferometerGeometry,
    loop_closure_time: f64,
    constants: &PhysicalConstants,
) -> Result<GatingReport, Error> {
    let (d_u, d_d) = arm_distances(geom)?;
    let light_travel_u = d_u / constants.c();
    let light_travel_d = d_d / constants.c();
    Ok(GatingReport {
        arm_u_in_contact: light_travel_u <= loop_closure_time,
        arm_d_in_contact: light_travel_d <= loop_closure_time,
        light_travel_u,
        light_travel_d,
    })
}

/// Evaluate causal gating for a scenario and check the scenario is
/// consistent with the geometry and timing.
///
/// * `full-interaction` forces both contact flags true regardless of timing.
/// * `one-arm` requires exactly one arm inside the light cone.
/// * `no-arm` requires the loop to close before light reaches either arm.
///
/// Inconsistent combinations return [`Error::ScenarioInconsistent`] naming
/// the violated inequality.
pub fn causal_gating(
    geom: &InterferometerGeometry,
    scenario: &ScenarioConfig,
    constants: &PhysicalConstants,
) -> Result<GatingReport, Error> {
    if !(scenario.loop_closure_time >= 0.0) {
        return Err(Error::InvalidParameter(
            "loop closure time must be non-negative".into(),
        ));
    }
    let raw = light_cone_contact(geom, scenario.loop_closure_time, constants)?;
    let t_close = scenario.loop_closure_time;
    match scenario.kind {
        ScenarioKind::FullInteraction => Ok(GatingReport {
            arm_u_in_contact: true,
            arm_d_in_contact: true,
            ..raw
        }),
        ScenarioKind::OneArm => match (raw.arm_u_in_contact, raw.arm_d_in_contact) {
            (true, false) | (false, true) => Ok(raw),
            (true, true) => Err(Error::ScenarioInconsistent {
                detail: format!(
                    "one-arm requested but both arms are causally connected: \
                     max light travel {:.6e} s <= loop closure {:.6e} s",
                    raw.light_travel_u.max(raw.light_travel_d),
                    t_close
                ),
            }),
            (false, false) => Err(Error::ScenarioInconsistent {
                detail: format!(
                    "one-arm requested but neither arm is causally connected: \
                     min light travel {:.6e} s > loop closure {:.6e} s",
                    raw.light_travel_u.min(raw.light_travel_d),
                    t_close
                ),
            }),
        },
        ScenarioKind::NoArm => {
            if raw.arm_u_in_contact || raw.arm_d_in_contact {
                Err(Error::ScenarioInconsistent {
                    detail: format!(
                        "no-arm requested but light reaches an arm in time: \
                         min light travel {:.6e} s <= loop closure {:.6e} s",
                        raw.light_travel_u.min(raw.light_travel_d),
                        t_close
                    ),
                })
            } else {
                Ok(raw)
            }
        }
    }
}
