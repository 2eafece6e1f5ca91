//! Run-configuration schema, the built-in preset, and sweep-grid plumbing.
//!
//! One JSON document configures everything; every physical quantity carries
//! an SI unit suffix in its key name (`source_mass_kg`, `k_max_per_m`, …) so
//! a config file can never be unit-ambiguous.

use gravab_core::constants::{CutoffPreset, PhysicalConstants};
use gravab_core::continuum::{ModeIntegralSpec, TimeFactor};
use gravab_core::fock_oracle::SingleModeSystem;
use gravab_core::geometry::{InterferometerGeometry, ScenarioConfig, ScenarioKind};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Atomic mass of rubidium-87, kg.
const RB87_MASS_KG: f64 = gravab_core::continuum::RB87_MASS_KG;

/// Top-level run configuration (one JSON document).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfig {
    pub geometry: InterferometerGeometry,
    #[serde(default)]
    pub mode_spec: ConfigModeSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scenario: Option<ScenarioConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sweep: Option<Vec<SweepDimension>>,
    #[serde(default)]
    pub output: OutputFormat,
    #[serde(default)]
    pub cutoff_preset: CutoffPreset,
}

/// Mode-integral settings as they appear in config files. `k_max_per_m` is
/// optional here: when absent, the cutoff preset supplies it.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigModeSpec {
    #[serde(
        rename = "k_max_per_m",
        default,
        skip_serializing_if = "Option::is_none"
    )]
    pub k_max: Option<f64>,
    #[serde(rename = "k_min_per_m", default)]
    pub k_min: f64,
    #[serde(default = "default_rel_tol")]
    pub rel_tol: f64,
    #[serde(default)]
    pub time_factor: TimeFactor,
}

fn default_rel_tol() -> f64 {
    1e-9
}

impl Default for ConfigModeSpec {
    fn default() -> Self {
        Self {
            k_max: None,
            k_min: 0.0,
            rel_tol: default_rel_tol(),
            time_factor: TimeFactor::Unity,
        }
    }
}

/// Brute-force-oracle settings: truncation, evolution time, and the
/// dimensionless single-mode parameters. Every field has a weak-coupling
/// default, so `"oracle": {}` (or no section at all) runs a point that
/// satisfies the fidelity acceptance bound.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OracleConfig {
    #[serde(default = "default_truncation")]
    pub truncation: usize,
    /// Dimensionless evolution time (enters only as ω·t and g·t).
    #[serde(default = "default_oracle_time")]
    pub time: f64,
    #[serde(default = "default_g_atom")]
    pub g_u: f64,
    #[serde(default = "default_g_atom")]
    pub g_d: f64,
    #[serde(default = "default_g_source")]
    pub g_s: f64,
    #[serde(default = "default_omega")]
    pub omega: f64,
    #[serde(default = "default_k_dot_r_u")]
    pub k_dot_r_u: f64,
    #[serde(default = "default_k_dot_r_d")]
    pub k_dot_r_d: f64,
    #[serde(default = "default_k_dot_r_s")]
    pub k_dot_r_s: f64,
    #[serde(default)]
    pub rest_frequency: f64,
}

fn default_truncation() -> usize {
    40
}
fn default_oracle_time() -> f64 {
    1.0
}
fn default_g_atom() -> f64 {
    0.05
}
fn default_g_source() -> f64 {
    0.1
}
fn default_omega() -> f64 {
    1.0
}
fn default_k_dot_r_u() -> f64 {
    0.7
}
fn default_k_dot_r_d() -> f64 {
    -0.4
}
fn default_k_dot_r_s() -> f64 {
    0.3
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            truncation: default_truncation(),
            time: default_oracle_time(),
            g_u: default_g_atom(),
            g_d: default_g_atom(),
            g_s: default_g_source(),
            omega: default_omega(),
            k_dot_r_u: default_k_dot_r_u(),
            k_dot_r_d: default_k_dot_r_d(),
            k_dot_r_s: default_k_dot_r_s(),
            rest_frequency: 0.0,
        }
    }
}

impl OracleConfig {
    /// Validate and assemble the single-mode system these settings describe.
    pub fn system(&self) -> Result<SingleModeSystem, CliError> {
        let mut sys = SingleModeSystem::from_dimensionless(
            self.g_u,
            self.g_d,
            self.g_s,
            self.omega,
            self.k_dot_r_u,
            self.k_dot_r_d,
            self.k_dot_r_s,
        )
        .map_err(CliError::Core)?;
        sys.rest_frequency = self.rest_frequency;
        Ok(sys)
    }
}

/// One swept dimension: a config field path and the values it takes.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepDimension {
    /// Dotted path of a scalar config field, e.g.
    /// `geometry.interaction_time_s` or `geometry.arm_d_position_m.0`.
    pub path: String,
    pub values: Vec<f64>,
}

/// Result-document format.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, Default, clap::ValueEnum)]
pub enum OutputFormat {
    #[serde(rename = "json")]
    #[default]
    Json,
    #[serde(rename = "csv")]
    Csv,
}

/// Built-in configurations selectable with `--preset`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Preset {
    /// Illustrative tabletop layout: a 1250 kg source (mass taken from a
    /// published laboratory experiment), rubidium-87 atoms, arm–source
    /// distances 0.1 m and 0.2 m, one second of interaction. The distances
    /// and time are round illustrative numbers, not measured values.
    Overstreet,
}

impl Preset {
    pub fn config(self) -> RunConfig {
        match self {
            Preset::Overstreet => RunConfig {
                geometry: InterferometerGeometry {
                    r_u: [0.1, 0.0, 0.0],
                    r_d: [0.2, 0.0, 0.0],
                    r_s: [0.0, 0.0, 0.0],
                    atom_mass: RB87_MASS_KG,
                    source_mass: 1250.0,
                    interaction_time: 1.0,
                },
                mode_spec: ConfigModeSpec::default(),
                // Loop closure between the two light-travel times
                // (0.33 ns and 0.67 ns), so the scenario subcommand has a
                // consistent one-arm example out of the box.
                scenario: Some(ScenarioConfig {
                    kind: ScenarioKind::OneArm,
                    loop_closure_time: 0.5e-9,
                }),
                oracle: None,
                sweep: None,
                output: OutputFormat::Json,
                cutoff_preset: CutoffPreset::Codata,
            },
        }
    }
}

/// Cutoff preset spelled as a CLI flag value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CutoffArg {
    Codata,
    PaperCutoff,
}

impl From<CutoffArg> for CutoffPreset {
    fn from(value: CutoffArg) -> Self {
        match value {
            CutoffArg::Codata => CutoffPreset::Codata,
            CutoffArg::PaperCutoff => CutoffPreset::PaperCutoff,
        }
    }
}

impl RunConfig {
    /// Resolve the mode-integral spec: an explicit `k_max_per_m` wins, the
    /// cutoff preset fills it in otherwise. An explicit value combined with
    /// an explicit `--cutoff` flag is a contradiction and is refused rather
    /// than silently prioritized.
    pub fn resolve_spec(
        &self,
        cutoff_flag: Option<CutoffArg>,
        constants: &PhysicalConstants,
    ) -> Result<ModeIntegralSpec, CliError> {
        if self.mode_spec.k_max.is_some() && cutoff_flag.is_some() {
            return Err(CliError::Config(
                "the config file pins mode_spec.k_max_per_m, which contradicts --cutoff; \
                 drop one of the two"
                    .into(),
            ));
        }
        let preset = cutoff_flag.map_or(self.cutoff_preset, CutoffPreset::from);
        let spec = ModeIntegralSpec {
            k_max: self
                .mode_spec
                .k_max
                .unwrap_or_else(|| preset.k_max(constants)),
            k_min: self.mode_spec.k_min,
            rel_tol: self.mode_spec.rel_tol,
            time_factor: self.mode_spec.time_factor,
        };
        spec.validate().map_err(CliError::Core)?;
        Ok(spec)
    }
}

/// Accessor projecting a mutable config onto one swept scalar field.
type SweepAccessor = fn(&mut RunConfig) -> &mut f64;

/// Scalar config fields a sweep may vary, with their accessors.
const SWEEP_PATHS: &[(&str, SweepAccessor)] = &[
    ("geometry.arm_u_position_m.0", |c| &mut c.geometry.r_u[0]),
    ("geometry.arm_u_position_m.1", |c| &mut c.geometry.r_u[1]),
    ("geometry.arm_u_position_m.2", |c| &mut c.geometry.r_u[2]),
    ("geometry.arm_d_position_m.0", |c| &mut c.geometry.r_d[0]),
    ("geometry.arm_d_position_m.1", |c| &mut c.geometry.r_d[1]),
    ("geometry.arm_d_position_m.2", |c| &mut c.geometry.r_d[2]),
    ("geometry.source_position_m.0", |c| &mut c.geometry.r_s[0]),
    ("geometry.source_position_m.1", |c| &mut c.geometry.r_s[1]),
    ("geometry.source_position_m.2", |c| &mut c.geometry.r_s[2]),
    ("geometry.atom_mass_kg", |c| &mut c.geometry.atom_mass),
    ("geometry.source_mass_kg", |c| &mut c.geometry.source_mass),
    ("geometry.interaction_time_s", |c| {
        &mut c.geometry.interaction_time
    }),
    ("mode_spec.k_min_per_m", |c| &mut c.mode_spec.k_min),
    ("mode_spec.rel_tol", |c| &mut c.mode_spec.rel_tol),
];

/// Set one swept field. `mode_spec.k_max_per_m` needs its own arm because
/// the stored field is optional.
pub fn apply_sweep_value(config: &mut RunConfig, path: &str, value: f64) -> Result<(), CliError> {
    if path == "mode_spec.k_max_per_m" {
        config.mode_spec.k_max = Some(value);
        return Ok(());
    }
    if path == "scenario.loop_closure_time_s" {
        match config.scenario.as_mut() {
            Some(s) => {
                s.loop_closure_time = value;
                return Ok(());
            }
            None => {
                return Err(CliError::Config(
                    "sweep path scenario.loop_closure_time_s needs a scenario section".into(),
                ));
            }
        }
    }
    for (name, accessor) in SWEEP_PATHS {
        if *name == path {
            *accessor(config) = value;
            return Ok(());
        }
    }
    let mut known: Vec<&str> = SWEEP_PATHS.iter().map(|(n, _)| *n).collect();
    known.push("mode_spec.k_max_per_m");
    known.push("scenario.loop_closure_time_s");
    Err(CliError::Config(format!(
        "unknown sweep path {path:?}; swept fields must be one of: {}",
        known.join(", ")
    )))
}

/// Validate the sweep grid shape: 1–2 dimensions, each nonempty with
/// finite values.
pub fn validate_sweep(dimensions: &[SweepDimension]) -> Result<(), CliError> {
    if dimensions.is_empty() {
        return Err(CliError::Config(
            "sweep section is present but lists no dimensions".into(),
        ));
    }
    if dimensions.len() > 2 {
        return Err(CliError::Config(format!(
            "at most 2 swept dimensions are supported, got {}",
            dimensions.len()
        )));
    }
    for dim in dimensions {
        if dim.values.is_empty() {
            return Err(CliError::Config(format!(
                "sweep dimension {:?} has an empty value list",
                dim.path
            )));
        }
        if let Some(bad) = dim.values.iter().find(|v| !v.is_finite()) {
            return Err(CliError::Config(format!(
                "sweep dimension {:?} contains a non-finite value {bad}",
                dim.path
            )));
        }
    }
    if dimensions.len() == 2 && dimensions[0].path == dimensions[1].path {
        return Err(CliError::Config(format!(
            "both sweep dimensions target the same field {:?}",
            dimensions[0].path
        )));
    }
    Ok(())
}
