//! `gravab` — batch front end for the interferometer phase/entanglement
//! calculators.
//!
//! Subcommands: `phase`, `entropy`, `scenario`, `oracle`, `sweep`. Each
//! reads one JSON config (`--config`) or a built-in preset (`--preset`),
//! writes a result document to stdout (or `--out <path>`), and logs only to
//! stderr. Exit codes: 0 success, 2 invalid input, 3 numerical failure.
//! On failure stdout carries a machine-readable
//! `{"error": {"kind", "message"}}` object and nothing else.

mod config;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand};
use gravab_core::ErrorKind;
use gravab_core::constants::PhysicalConstants;
use gravab_core::continuum::{ReportOptions, compute_report};
use gravab_core::fock_oracle::compare_with_analytic;
use gravab_core::scenario::compute_scenario_report;
use rayon::prelude::*;
use serde_json::Value;

use config::{
    CutoffArg, OutputFormat, Preset, RunConfig, SweepDimension, apply_sweep_value, validate_sweep,
};

#[derive(Parser)]
#[command(
    name = "gravab",
    version,
    about = "Quantum and semiclassical phase/entanglement calculators for a \
             matter-wave interferometer coupled to a quantized weak \
             gravitational field"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Interferometric phases: closed-form and numeric mode sums,
    /// potential-difference and stationary-action references.
    Phase(CommonArgs),
    /// Decoherence integral, linear entropy and visibility, with the
    /// quoted-vs-recomputed reference table attached.
    Entropy(CommonArgs),
    /// Causal-gating scenario next to its full-interaction baseline
    /// (requires a scenario section in the config).
    Scenario(CommonArgs),
    /// Truncated-Fock brute-force evolution compared against the
    /// closed-form coherent-state solution.
    Oracle(CommonArgs),
    /// Evaluate a 1- or 2-dimensional parameter grid (requires a sweep
    /// section in the config).
    Sweep(CommonArgs),
}

impl Command {
    fn common(&self) -> &CommonArgs {
        match self {
            Command::Phase(args)
            | Command::Entropy(args)
            | Command::Scenario(args)
            | Command::Oracle(args)
            | Command::Sweep(args) => args,
        }
    }
}

#[derive(clap::Args)]
#[command(group(ArgGroup::new("input").required(true)))]
struct CommonArgs {
    /// Path to a JSON run configuration.
    #[arg(long, value_name = "PATH", group = "input")]
    config: Option<PathBuf>,
    /// Built-in illustrative configuration.
    #[arg(long, value_enum, group = "input")]
    preset: Option<Preset>,
    /// Wavenumber-cutoff preset (contradicts an explicit k_max_per_m in the
    /// config).
    #[arg(long, value_enum)]
    cutoff: Option<CutoffArg>,
    /// Output format; overrides the config's `output` field.
    #[arg(long, value_enum)]
    output: Option<OutputFormat>,
    /// Write the result document to this file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

/// CLI failure: either a configuration/usage problem or an error escalated
/// from the core library.
#[derive(Debug)]
pub enum CliError {
    Config(String),
    Core(gravab_core::Error),
}

impl CliError {
    fn message(&self) -> String {
        match self {
            CliError::Config(message) => message.clone(),
            CliError::Core(error) => error.to_string(),
        }
    }

    fn kind_str(&self) -> &'static str {
        match self {
            CliError::Config(_) => "invalid-input",
            CliError::Core(error) => match error.kind() {
                ErrorKind::InvalidInput => "invalid-input",
                ErrorKind::Numerical => "numerical",
            },
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(error) => match error.kind() {
                ErrorKind::InvalidInput => 2,
                ErrorKind::Numerical => 3,
            },
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = cli.command.common();
    match execute(&cli.command) {
        Ok(document) => {
            if let Some(path) = &args.out {
                if let Err(error) = std::fs::write(path, &document) {
                    let failure =
                        CliError::Config(format!("cannot write {}: {error}", path.display()));
                    return fail(&failure);
                }
                eprintln!("wrote {}", path.display());
            } else {
                print!("{document}");
            }
            ExitCode::SUCCESS
        }
        Err(error) => fail(&error),
    }
}

fn fail(error: &CliError) -> ExitCode {
    eprintln!("error: {}", error.message());
    print!(
        "{}",
        output::error_document(error.kind_str(), &error.message())
    );
    ExitCode::from(error.exit_code())
}

fn execute(command: &Command) -> Result<String, CliError> {
    let constants = PhysicalConstants::codata2018();
    let args = command.common();
    let config = load_config(args)?;
    let format = args.output.unwrap_or(config.output);

    match command {
        Command::Phase(_) => {
            let spec = config.resolve_spec(args.cutoff, &constants)?;
            let report = compute_report(
                &config.geometry,
                &spec,
                &constants,
                ReportOptions {
                    include_numeric_phase: true,
                    include_reference_estimates: false,
                },
            )
            .map_err(CliError::Core)?;
            render(format, &report)
        }
        Command::Entropy(_) => {
            let spec = config.resolve_spec(args.cutoff, &constants)?;
            let report = compute_report(
                &config.geometry,
                &spec,
                &constants,
                ReportOptions {
                    include_numeric_phase: false,
                    include_reference_estimates: true,
                },
            )
            .map_err(CliError::Core)?;
            render(format, &report)
        }
        Command::Scenario(_) => {
            let scenario = config.scenario.as_ref().ok_or_else(|| {
                CliError::Config(
                    "the scenario subcommand needs a scenario section in the config".into(),
                )
            })?;
            let spec = config.resolve_spec(args.cutoff, &constants)?;
            let report = compute_scenario_report(
                &config.geometry,
                &spec,
                scenario,
                &constants,
                ReportOptions::default(),
            )
            .map_err(CliError::Core)?;
            render(format, &report)
        }
        Command::Oracle(_) => {
            let oracle = config.oracle.unwrap_or_default();
            let system = oracle.system()?;
            let report = compare_with_analytic(&system, oracle.time, oracle.truncation)
                .map_err(CliError::Core)?;
            render(format, &report)
        }
        Command::Sweep(_) => {
            let dimensions = config.sweep.clone().ok_or_else(|| {
                CliError::Config("the sweep subcommand needs a sweep section in the config".into())
            })?;
            validate_sweep(&dimensions)?;
            let rows = run_sweep(&config, &dimensions, args.cutoff, &constants)?;
            match format {
                OutputFormat::Json => output::to_json(&serde_json::json!({ "rows": rows })),
                OutputFormat::Csv => Ok(output::to_csv_rows(&rows)),
            }
        }
    }
}

fn load_config(args: &CommonArgs) -> Result<RunConfig, CliError> {
    match (&args.config, args.preset) {
        (Some(path), None) => {
            let text = std::fs::read_to_string(path).map_err(|error| {
                CliError::Config(format!("cannot read config {}: {error}", path.display()))
            })?;
            serde_json::from_str(&text)
                .map_err(|error| CliError::Config(format!("malformed config JSON: {error}")))
        }
        (None, Some(preset)) => Ok(preset.config()),
        // clap's argument group guarantees exactly one source.
        _ => Err(CliError::Config(
            "exactly one of --config and --preset must be given".into(),
        )),
    }
}

fn render<T: serde::Serialize>(format: OutputFormat, value: &T) -> Result<String, CliError> {
    match format {
        OutputFormat::Json => output::to_json(value),
        OutputFormat::Csv => output::to_csv_single(value),
    }
}

/// Evaluate every grid point. Points run in parallel; rows are assembled in
/// grid order (first dimension outermost), so the output is deterministic
/// regardless of scheduling. When the config carries a scenario section the
/// per-point result is the scenario report, otherwise the plain
/// phase/entropy report.
fn run_sweep(
    base: &RunConfig,
    dimensions: &[SweepDimension],
    cutoff: Option<CutoffArg>,
    constants: &PhysicalConstants,
) -> Result<Vec<Value>, CliError> {
    let mut points: Vec<Vec<(&str, f64)>> = Vec::new();
    match dimensions {
        [first] => {
            for &value in &first.values {
                points.push(vec![(first.path.as_str(), value)]);
            }
        }
        [first, second] => {
            for &outer in &first.values {
                for &inner in &second.values {
                    points.push(vec![
                        (first.path.as_str(), outer),
                        (second.path.as_str(), inner),
                    ]);
                }
            }
        }
        _ => unreachable!("validate_sweep admits only 1 or 2 dimensions"),
    }

    let results: Vec<Result<Value, CliError>> = points
        .par_iter()
        .map(|assignments| evaluate_point(base, assignments, cutoff, constants))
        .collect();

    // Surface the first failure in grid order, not in completion order.
    let mut rows = Vec::with_capacity(results.len());
    for result in results {
        rows.push(result?);
    }
    Ok(rows)
}

fn evaluate_point(
    base: &RunConfig,
    assignments: &[(&str, f64)],
    cutoff: Option<CutoffArg>,
    constants: &PhysicalConstants,
) -> Result<Value, CliError> {
    let mut config = base.clone();
    let mut params = serde_json::Map::new();
    for (path, value) in assignments {
        apply_sweep_value(&mut config, path, *value)?;
        params.insert((*path).to_string(), serde_json::json!(value));
    }
    let spec = config.resolve_spec(cutoff, constants)?;
    let options = ReportOptions {
        include_numeric_phase: false,
        include_reference_estimates: false,
    };
    let report = match &config.scenario {
        Some(scenario) => serde_json::to_value(
            compute_scenario_report(&config.geometry, &spec, scenario, constants, options)
                .map_err(CliError::Core)?,
        ),
        None => serde_json::to_value(
            compute_report(&config.geometry, &spec, constants, options).map_err(CliError::Core)?,
        ),
    }
    .map_err(|error| CliError::Config(format!("failed to serialize sweep row: {error}")))?;

    Ok(serde_json::json!({
        "params": Value::Object(params),
        "report": report,
    }))
}
