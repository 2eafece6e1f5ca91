//! Reference phase calculators on the classical-potential side of the
//! comparison: the stationary-action phase with its gradient corrections,
//! the bare potential-difference phase, and the two electromagnetic
//! analogues (flux phase and local phase) for a finite solenoid.
//!
//! Sign convention, fixed throughout: the point-source potential is
//! V(x) = −GM/|x − r_s|. With that choice the potential-difference phase
//! is (m/ħ)t[V(r_u) − V(r_d)] = GMmt/ħ·(1/d_d − 1/d_u) — equal in
//! magnitude and opposite in ordering to the mode-sum phase of
//! [`crate::continuum::ab_phase_closed_form`]; the two are compared on
//! magnitudes and both signed values are reported.

use serde::{Deserialize, Serialize};

use crate::constants::PhysicalConstants;
use crate::error::Error;
use crate::geometry::{InterferometerGeometry, cross, dot, norm, sub};
use crate::numerics::integrate;

/// Kind tag of the potential model (a single variant today; the tag keeps
/// configuration files explicit about what they request).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PotentialKind {
    #[serde(rename = "newtonian-point-source")]
    NewtonianPointSource,
}

/// Newtonian point-source potential V(x) = −GM/|x − source_position|.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PotentialModel {
    pub kind: PotentialKind,
    #[serde(rename = "source_mass_kg")]
    pub source_mass: f64,
    #[serde(rename = "source_position_m")]
    pub source_position: [f64; 3],
}

impl PotentialModel {
    /// Point-source model matching an interferometer layout.
    pub fn from_geometry(geom: &InterferometerGeometry) -> Self {
        Self {
            kind: PotentialKind::NewtonianPointSource,
            source_mass: geom.source_mass,
            source_position: geom.r_s,
        }
    }

    /// V(x), J/kg (negative everywhere, → 0 at infinity).
    pub fn potential(&self, x: [f64; 3], constants: &PhysicalConstants) -> Result<f64, Error> {
        let d = norm(sub(x, self.source_position));
        if d == 0.0 {
            return Err(Error::CoincidentPositions {
                which: "evaluation point and potential source",
            });
        }
        Ok(-constants.g() * self.source_mass / d)
    }

    /// ∇V(x) = GM·(x − r_s)/|x − r_s|³, (J/kg)/m.
    pub fn gradient(&self, x: [f64; 3], constants: &PhysicalConstants) -> Result<[f64; 3], Error> {
        let rel = sub(x, self.source_position);
        let d = norm(rel);
        if d == 0.0 {
            return Err(Error::CoincidentPositions {
                which: "evaluation point and potential source",
            });
        }
        let scale = constants.g() * self.source_mass / (d * d * d);
        Ok([scale * rel[0], scale * rel[1], scale * rel[2]])
    }
}

/// Finite solenoid: a cylindrical shell of azimuthal volume current,
/// centered at the origin (positions elsewhere in a configuration are
/// expressed relative to the solenoid center).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SolenoidModel {
    #[serde(rename = "radius_m")]
    pub radius: f64,
    /// Unit vector along the bore.
    pub axis: [f64; 3],
    #[serde(rename = "current_density_magnitude_a_per_m2")]
    pub current_density_magnitude: f64,
    #[serde(rename = "length_m")]
    pub length: f64,
    /// Radial thickness of the current shell, m.
    #[serde(rename = "shell_thickness_m")]
    pub shell_thickness: f64,
    /// Enclosed flux of the infinite-length limit, Wb — derived at
    /// construction, exact for the finite-thickness shell:
    /// Φ = μ₀·j·π·(R²·w + w³/12).
    #[serde(rename = "flux_wb")]
    pub flux: f64,
}

impl SolenoidModel {
    /// Build a solenoid, normalizing the axis and deriving the flux.
    /// `shell_thickness` defaults to radius/50 when `None`.
    pub fn new(
        radius: f64,
        axis: [f64; 3],
        current_density_magnitude: f64,
        length: f64,
        shell_thickness: Option<f64>,
        constants: &PhysicalConstants,
    ) -> Result<Self, Error> {
        if !(radius > 0.0) || !(length > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "solenoid radius and length must be positive, got radius {radius}, length {length}"
            )));
        }
        let w = shell_thickness.unwrap_or(radius / 50.0);
        if !(w > 0.0) || w >= 2.0 * radius {
            return Err(Error::InvalidParameter(format!(
                "shell thickness must lie in (0, 2·radius), got {w}"
            )));
        }
        let axis_norm = norm(axis);
        if axis_norm == 0.0 || !axis_norm.is_finite() {
            return Err(Error::InvalidParameter(
                "solenoid axis must be a nonzero finite vector".into(),
            ));
        }
        let axis_unit = [
            axis[0] / axis_norm,
            axis[1] / axis_norm,
            axis[2] / axis_norm,
        ];
        // Infinite-length field: B = μ₀·j·(R + w/2 − ρ) inside the shell,
        // μ₀·j·w in the bore. Integrating B over the cross-section gives
        // the exact enclosed flux below; the familiar μ₀·(jw)·πR² is its
        // w → 0 limit.
        let j = current_density_magnitude;
        let flux =
            constants.mu0() * j * std::f64::consts::PI * (radius * radius * w + w * w * w / 12.0);
        Ok(Self {
            radius,
            axis: axis_unit,
            current_density_magnitude: j,
            length,
            shell_thickness: w,
            flux,
        })
    }
}

/// Stationary-action phase between two static arms in a potential:
///
/// φ = (m/ħ)·t·([V(r_u) − V(r_d)] − (Δx/2)·[∂V/∂u(r_u) + ∂V/∂u(r_d)])
///
/// with Δx = |r_u − r_d| and ∂/∂u the derivative along the unit vector
/// from r_d to r_u — the only direction the two-arm problem distinguishes.
pub fn action_phase(
    geom: &InterferometerGeometry,
    potential: &PotentialModel,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    geom.validate()?;
    let separation = sub(geom.r_u, geom.r_d);
    let dx = norm(separation);
    let u_hat = [separation[0] / dx, separation[1] / dx, separation[2] / dx];
    let v_u = potential.potential(geom.r_u, constants)?;
    let v_d = potential.potential(geom.r_d, constants)?;
    let dv_u = dot(potential.gradient(geom.r_u, constants)?, u_hat);
    let dv_d = dot(potential.gradient(geom.r_d, constants)?, u_hat);
    let bracket = (v_u - v_d) - 0.5 * dx * (dv_u + dv_d);
    Ok(geom.atom_mass / constants.hbar() * geom.interaction_time * bracket)
}

/// Potential-difference phase φ = (m/ħ)·t·[V(r_u) − V(r_d)], the
/// action phase with the gradient corrections dropped. For the point
/// source this is GMmt/ħ·(1/d_d − 1/d_u).
pub fn ab_phase_semiclassical(
    geom: &InterferometerGeometry,
    potential: &PotentialModel,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    geom.validate()?;
    let v_u = potential.potential(geom.r_u, constants)?;
    let v_d = potential.potential(geom.r_d, constants)?;
    Ok(geom.atom_mass / constants.hbar() * geom.interaction_time * (v_u - v_d))
}

/// Flux phase of a charge encircling the solenoid once: Δφ = q·Φ/ħ.
pub fn em_flux_phase(charge: f64, solenoid: &SolenoidModel, constants: &PhysicalConstants) -> f64 {
    charge * solenoid.flux / constants.hbar()
}

/// Local-overlap phase of a charge that never touches the field region:
///
/// φ = (2tq/(m·ħ·ε₀·c²)) · ∫ p·j(x) / |r_c − x| d³x
///
/// integrated over the solenoid current shell. The z-integration along the
/// bore is done analytically (the kernel reduces to a difference of
/// inverse hyperbolic sines); the remaining (ρ, φ) integral runs on nested
/// adaptive quadrature.
///
/// Errors when the particle position sits inside the current shell, where
/// the integrand is singular.
pub fn em_local_ab_phase(
    charge: f64,
    momentum: [f64; 3],
    particle_mass: f64,
    t: f64,
    r_c: [f64; 3],
    solenoid: &SolenoidModel,
    constants: &PhysicalConstants,
) -> Result<f64, Error> {
    if !(particle_mass > 0.0) {
        return Err(Error::InvalidParameter(format!(
            "particle mass must be positive, got {particle_mass}"
        )));
    }
    let (e1, e2) = orthonormal_frame(solenoid.axis);
    let z_c = dot(r_c, solenoid.axis);
    let in_plane = sub(
        r_c,
        [
            z_c * solenoid.axis[0],
            z_c * solenoid.axis[1],
            z_c * solenoid.axis[2],
        ],
    );
    let rho_c = norm(in_plane);
    let phi_c = dot(in_plane, e2).atan2(dot(in_plane, e1));

    let w = solenoid.shell_thickness;
    let rho_lo = solenoid.radius - 0.5 * w;
    let rho_hi = solenoid.radius + 0.5 * w;
    let half_len = 0.5 * solenoid.length;
    if rho_c >= rho_lo && rho_c <= rho_hi && z_c.abs() <= half_len {
        return Err(Error::SingularIntegrand(format!(
            "charged particle at distance {rho_c} from the axis lies inside the current shell \
             [{rho_lo}, {rho_hi}] within the solenoid length"
        )));
    }

    // In-plane momentum components in the solenoid frame; the azimuthal
    // current only couples to these, so a purely axial momentum gives an
    // exactly zero integrand.
    let p1 = dot(momentum, e1);
    let p2 = dot(momentum, e2);
    if p1 == 0.0 && p2 == 0.0 {
        return Ok(0.0);
    }

    let j = solenoid.current_density_magnitude;
    let a = z_c + half_len;
    let b = z_c - half_len;
    let outer = integrate(
        |phi| {
            let p_dot_phihat = -p1 * phi.sin() + p2 * phi.cos();
            if p_dot_phihat == 0.0 {
                return 0.0;
            }
            let inner = integrate(
                |rho| {
                    let s_sqr = rho * rho + rho_c * rho_c - 2.0 * rho * rho_c * (phi - phi_c).cos();
                    rho * axial_kernel(a, b, s_sqr.max(0.0))
                },
                rho_lo,
                rho_hi,
                1e-11,
                0.0,
            )
            .expect("inner radial quadrature over a smooth bounded kernel");
            p_dot_phihat * inner.value
        },
        0.0,
        2.0 * std::f64::consts::PI,
        1e-9,
        0.0,
    )?;

    let c2 = constants.c() * constants.c();
    let prefactor =
        2.0 * t * charge / (particle_mass * constants.hbar() * constants.epsilon0() * c2);
    Ok(prefactor * j * outer.value)
}

/// ∫ dz / sqrt(s² + (z_c − z)²) over the solenoid length, written as
/// ln(num/den) with both terms computed cancellation-free:
/// u + sqrt(u² + s²) = s²/(sqrt(u² + s²) − u) when u < 0.
fn axial_kernel(a: f64, b: f64, s_sqr: f64) -> f64 {
    if s_sqr == 0.0 {
        // Collinear limit (possible only outside the z-range, where a and
        // b share a sign): ∫ dz/|z_c − z| in closed form.
        return (a / b).abs().ln();
    }
    let stable = |u: f64| -> f64 {
        let hyp = (u * u + s_sqr).sqrt();
        if u >= 0.0 { u + hyp } else { s_sqr / (hyp - u) }
    };
    (stable(a) / stable(b)).ln()
}

/// Right-handed orthonormal pair completing `axis` (assumed unit).
fn orthonormal_frame(axis: [f64; 3]) -> ([f64; 3], [f64; 3]) {
    let helper = if axis[0].abs() < 0.9 {
        [1.0, 0.0, 0.0]
    } else {
        [0.0, 1.0, 0.0]
    };
    let raw = cross(helper, axis);
    let n = norm(raw);
    let e1 = [raw[0] / n, raw[1] / n, raw[2] / n];
    let e2 = cross(axis, e1);
    (e1, e2)
}
