//! Command-line front end: `compute`, `sweep`, `simulate` and `audit`.
//!
//! Exit codes are [`EXIT_OK`], [`EXIT_USAGE`], [`EXIT_DOMAIN`] and
//! [`EXIT_AUDIT`].

mod config;
mod output;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

pub use config::{
    parse_config_text, Command, ConfigError, FieldInput, GridScale, OutputFormat, RunConfig,
    SimulateSpec, SweepSpec, KNOWN_KEYS,
};
pub use output::{fmt_f64, Sink};

use crate::audit::{all_findings, render_report, AuditFinding, ReportFormat, Severity};
use crate::dynamics::{integrate, Trajectory};
use crate::fields::{ElectronState, FieldConfig};
use crate::quantities::ConstantsTable;
use crate::vacuum_radiation::{
    evaluate, lamb_reference, EvalMode, FieldKind, LambRatios, LambReference, MagneticIntensityLaw,
    ReportOptions, VacuumRadiationResult,
};
use crate::Error;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_AUDIT: i32 = 3;

pub const TOOL_VERSION: &str = concat!("vacrad ", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Parser)]
#[command(
    name = "vacrad",
    version,
    about = "Radiation-from-vacuum calculator and equation audit"
)]
struct Cli {
    #[command(subcommand)]
    command: Sub,
}

#[derive(Debug, Subcommand)]
enum Sub {
    /// Energy, intensity and frequency at one field point.
    Compute(Flags),
    /// Evaluate one field kind over a grid of values.
    Sweep(Flags),
    /// Integrate an electron trajectory and its radiated power.
    Simulate(Flags),
    /// Report dimensional, coefficient and cross-check findings.
    Audit(Flags),
}

#[derive(Debug, Args)]
struct Flags {
    /// flat `key = value` file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    /// electric field, V/m
    #[arg(long = "E", allow_hyphen_values = true)]
    e: Option<String>,
    /// electric displacement, C/m²
    #[arg(long = "D", allow_hyphen_values = true)]
    d: Option<String>,
    /// magnetic induction, T
    #[arg(long = "B", allow_hyphen_values = true)]
    b: Option<String>,
    /// magnetic field strength, A/m
    #[arg(long = "H", allow_hyphen_values = true)]
    h: Option<String>,
    /// paper | literal
    #[arg(long)]
    mode: Option<String>,
    /// E | D | B | H
    #[arg(long)]
    sweep_field: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    min: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    max: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    points: Option<String>,
    /// linear | log
    #[arg(long)]
    scale: Option<String>,
    /// initial speed as a fraction of c
    #[arg(long, allow_hyphen_values = true)]
    v0: Option<String>,
    /// initial velocity direction, `x,y,z`
    #[arg(long, allow_hyphen_values = true)]
    direction: Option<String>,
    /// electric field direction, `x,y,z`
    #[arg(long, allow_hyphen_values = true)]
    e_dir: Option<String>,
    /// magnetic field direction, `x,y,z`
    #[arg(long, allow_hyphen_values = true)]
    b_dir: Option<String>,
    /// time step, s
    #[arg(long, allow_hyphen_values = true)]
    dt: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    steps: Option<String>,
    /// standard | literal
    #[arg(long)]
    dynamics: Option<String>,
    /// output path; stdout when absent
    #[arg(long)]
    output: Option<String>,
    /// csv | json | table
    #[arg(long)]
    format: Option<String>,
    /// numeric | angular
    #[arg(long)]
    ghz_convention: Option<String>,
    /// use 10⁻⁷·B⁴ for the magnetic intensity
    #[arg(long)]
    intensity_b4_variant: bool,
    /// exit 3 when any fail-severity finding exists
    #[arg(long)]
    fail_on_findings: bool,
}

impl Flags {
    fn into_map(self) -> (Option<PathBuf>, BTreeMap<String, String>) {
        let mut map = BTreeMap::new();
        let pairs = [
            ("E", self.e),
            ("D", self.d),
            ("B", self.b),
            ("H", self.h),
            ("mode", self.mode),
            ("sweep_field", self.sweep_field),
            ("min", self.min),
            ("max", self.max),
            ("points", self.points),
            ("scale", self.scale),
            ("v0", self.v0),
            ("direction", self.direction),
            ("e_dir", self.e_dir),
            ("b_dir", self.b_dir),
            ("dt", self.dt),
            ("steps", self.steps),
            ("dynamics", self.dynamics),
            ("output", self.output),
            ("format", self.format),
            ("ghz_convention", self.ghz_convention),
        ];
        for (key, value) in pairs {
            if let Some(value) = value {
                map.insert(key.to_string(), value);
            }
        }
        if self.intensity_b4_variant {
            map.insert("intensity_b4_variant".into(), "true".into());
        }
        if self.fail_on_findings {
            map.insert("fail_on_findings".into(), "true".into());
        }
        (self.config, map)
    }
}

/// Parse arguments, merge the optional config file and run. Returns the
/// process exit code.
pub fn main_entry<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let (command, flags) = match cli.command {
        Sub::Compute(f) => (Command::Compute, f),
        Sub::Sweep(f) => (Command::Sweep, f),
        Sub::Simulate(f) => (Command::Simulate, f),
        Sub::Audit(f) => (Command::Audit, f),
    };
    let (config_path, overrides) = flags.into_map();
    let config = match build_config(command, config_path, overrides) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let stderr = std::io::stderr();
    let mut diag = stderr.lock();
    match Sink::open(config.output.as_deref()) {
        Ok(mut sink) => {
            let code = run(&config, &mut sink, &mut diag);
            if let Err(e) = sink.finish() {
                let _ = writeln!(diag, "error: writing output: {e}");
                return EXIT_USAGE;
            }
            code
        }
        Err(e) => {
            let _ = writeln!(diag, "error: cannot open output: {e}");
            EXIT_USAGE
        }
    }
}

fn build_config(
    command: Command,
    config_path: Option<PathBuf>,
    overrides: BTreeMap<String, String>,
) -> Result<RunConfig, ConfigError> {
    let mut map = match config_path {
        Some(path) => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| ConfigError(format!("cannot read config {}: {e}", path.display())))?;
            parse_config_text(&text)?
        }
        None => BTreeMap::new(),
    };
    map.extend(overrides);
    RunConfig::from_map(command, map)
}

/// Run a validated configuration, writing the document to `out` and
/// diagnostics to `diag`.
pub fn run(config: &RunConfig, out: &mut dyn Write, diag: &mut dyn Write) -> i32 {
    let k = ConstantsTable::codata();
    let result = match config.command {
        Command::Compute => run_compute(config, out, k),
        Command::Sweep => run_sweep(config, out, diag, k),
        Command::Simulate => run_simulate(config, out, diag, k),
        Command::Audit => run_audit(config, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure::Domain(e)) => {
            let _ = writeln!(diag, "error: {e}");
            EXIT_DOMAIN
        }
        Err(Failure::Io(e)) => {
            let _ = writeln!(diag, "error: writing output: {e}");
            EXIT_USAGE
        }
    }
}

#[derive(Debug)]
enum Failure {
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<csv::Error> for Failure {
    fn from(e: csv::Error) -> Self {
        Failure::Io(e.into())
    }
}

fn options(config: &RunConfig) -> ReportOptions {
    ReportOptions {
        frequency: config.ghz_convention,
        magnetic_intensity: if config.intensity_b4_variant {
            MagneticIntensityLaw::QuarticVariant
        } else {
            MagneticIntensityLaw::Printed
        },
    }
}

/// Field kind and induction value (D in C/m², B in T) for a tagged input.
fn to_induction(input: FieldInput, k: &ConstantsTable) -> (FieldKind, f64) {
    match input {
        FieldInput::E(e) => (FieldKind::Electric, k.eps0 * e),
        FieldInput::D(d) => (FieldKind::Electric, d),
        FieldInput::B(b) => (FieldKind::Magnetic, b),
        FieldInput::H(h) => (FieldKind::Magnetic, k.mu0 * h),
    }
}

fn field_kind_str(kind: FieldKind) -> &'static str {
    match kind {
        FieldKind::Electric => "electric",
        FieldKind::Magnetic => "magnetic",
    }
}

#[derive(Serialize)]
struct Document<'a, T: Serialize> {
    tool_version: &'static str,
    config_echo: &'a BTreeMap<String, String>,
    #[serde(flatten)]
    body: T,
}

fn write_json<T: Serialize>(
    out: &mut dyn Write,
    config: &RunConfig,
    body: T,
) -> std::io::Result<()> {
    let doc = Document {
        tool_version: TOOL_VERSION,
        config_echo: &config.echo,
        body,
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    out.write_all(b"\n")
}

#[derive(Serialize)]
struct ComputeEntry {
    result: VacuumRadiationResult,
    lamb_ratios: LambRatios,
}

#[derive(Serialize)]
struct ComputeBody {
    results: Vec<ComputeEntry>,
    lamb: LambReference,
}

fn run_compute(
    config: &RunConfig,
    out: &mut dyn Write,
    k: &ConstantsTable,
) -> Result<i32, Failure> {
    let opts = options(config);
    let lamb = lamb_reference();
    let mut entries = Vec::new();
    for input in [config.electric, config.magnetic].into_iter().flatten() {
        let (kind, ind) = to_induction(input, k);
        let result = evaluate(kind, ind, config.mode, &opts, k)?;
        entries.push(ComputeEntry {
            lamb_ratios: LambRatios::of(&result, &lamb),
            result,
        });
    }
    match config.format {
        OutputFormat::Json => write_json(
            out,
            config,
            ComputeBody {
                results: entries,
                lamb,
            },
        )?,
        _ => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "field_kind",
                "induction",
                "omega",
                "omega_display",
                "energy_J",
                "intensity_J_per_s",
                "mode",
                "lamb_energy_ratio",
                "lamb_intensity_ratio",
                "lamb_frequency_ratio",
            ])?;
            for e in &entries {
                let r = &e.result;
                w.write_record([
                    field_kind_str(r.field_kind).to_string(),
                    fmt_f64(r.induction),
                    fmt_f64(r.omega),
                    fmt_f64(r.frequency_ghz),
                    fmt_f64(r.energy),
                    fmt_f64(r.intensity),
                    r.mode.as_str().to_string(),
                    fmt_f64(e.lamb_ratios.energy),
                    fmt_f64(e.lamb_ratios.intensity),
                    fmt_f64(e.lamb_ratios.frequency),
                ])?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

/// One sweep row; the numeric fields are absent when the point failed.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SweepRow {
    pub input: f64,
    pub induction: f64,
    pub omega: Option<f64>,
    pub omega_display: Option<f64>,
    pub energy_j: Option<f64>,
    pub intensity_j_per_s: Option<f64>,
    pub mode: EvalMode,
    pub error: Option<String>,
}

/// Evaluate every grid point in order. Failed points keep their row.
pub fn sweep_rows(
    spec: &SweepSpec,
    mode: EvalMode,
    opts: &ReportOptions,
    k: &ConstantsTable,
) -> Vec<SweepRow> {
    spec.grid()
        .into_iter()
        .map(|x| {
            let input = match spec.field {
                "E" => FieldInput::E(x),
                "D" => FieldInput::D(x),
                "B" => FieldInput::B(x),
                _ => FieldInput::H(x),
            };
            let (kind, ind) = to_induction(input, k);
            match evaluate(kind, ind, mode, opts, k) {
                Ok(r) => SweepRow {
                    input: x,
                    induction: ind,
                    omega: Some(r.omega),
                    omega_display: Some(r.frequency_ghz),
                    energy_j: Some(r.energy),
                    intensity_j_per_s: Some(r.intensity),
                    mode,
                    error: None,
                },
                Err(e) => SweepRow {
                    input: x,
                    induction: ind,
                    omega: None,
                    omega_display: None,
                    energy_j: None,
                    intensity_j_per_s: None,
                    mode,
                    error: Some(e.to_string()),
                },
            }
        })
        .collect()
}

#[derive(Serialize)]
struct SweepBody<'a> {
    sweep_field: &'static str,
    results: &'a [SweepRow],
}

fn run_sweep(
    config: &RunConfig,
    out: &mut dyn Write,
    diag: &mut dyn Write,
    k: &ConstantsTable,
) -> Result<i32, Failure> {
    let spec = config.sweep.as_ref().expect("sweep config validated");
    let rows = sweep_rows(spec, config.mode, &options(config), k);
    match config.format {
        OutputFormat::Json => write_json(
            out,
            config,
            SweepBody {
                sweep_field: spec.field,
                results: &rows,
            },
        )?,
        _ => {
            let opt = |x: Option<f64>| x.map(fmt_f64).unwrap_or_default();
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "induction",
                "omega",
                "omega_display",
                "energy_J",
                "intensity_J_per_s",
                "mode",
                "error",
            ])?;
            for r in &rows {
                w.write_record([
                    fmt_f64(r.induction),
                    opt(r.omega),
                    opt(r.omega_display),
                    opt(r.energy_j),
                    opt(r.intensity_j_per_s),
                    r.mode.as_str().to_string(),
                    r.error.clone().unwrap_or_default(),
                ])?;
            }
            w.flush()?;
        }
    }
    let failed = rows.iter().filter(|r| r.error.is_some()).count();
    if failed > 0 {
        writeln!(
            diag,
            "error: {failed} of {} sweep points failed",
            rows.len()
        )?;
        return Ok(EXIT_DOMAIN);
    }
    Ok(EXIT_OK)
}

/// Summary of a simulated trajectory.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimulationSummary {
    pub steps: usize,
    /// J
    pub cumulative_energy_j: f64,
    /// m/s
    pub final_speed: f64,
    pub final_beta: f64,
    pub max_speed_drift: f64,
}

/// Field setup and initial state for a simulate block, then integrate.
pub fn simulate(
    config: &RunConfig,
    k: &ConstantsTable,
) -> crate::Result<(Trajectory, SimulationSummary)> {
    let spec = config.simulate.as_ref().expect("simulate config validated");
    let e = match config.electric {
        Some(FieldInput::E(e)) => e,
        Some(FieldInput::D(d)) => d / k.eps0,
        _ => 0.0,
    };
    let b = match config.magnetic {
        Some(FieldInput::B(b)) => b,
        Some(FieldInput::H(h)) => k.mu0 * h,
        _ => 0.0,
    };
    let fields = FieldConfig::new(spec.e_dir * e, spec.b_dir * b);
    let state0 = ElectronState::at_origin(spec.direction * (spec.v0 * k.c), k)?;
    let traj = integrate(&state0, &fields, spec.dt, spec.steps, spec.dynamics, k)?;
    let summary = SimulationSummary {
        steps: spec.steps,
        cumulative_energy_j: traj.cumulative_energy(),
        final_speed: traj.final_speed(),
        final_beta: traj.final_speed() / k.c,
        max_speed_drift: traj.max_speed_drift(),
    };
    Ok((traj, summary))
}

#[derive(Serialize)]
struct SampleRow {
    t: f64,
    position: [f64; 3],
    velocity: [f64; 3],
    power_w: f64,
}

#[derive(Serialize)]
struct SimulateBody {
    summary: SimulationSummary,
    samples: Vec<SampleRow>,
}

fn run_simulate(
    config: &RunConfig,
    out: &mut dyn Write,
    diag: &mut dyn Write,
    k: &ConstantsTable,
) -> Result<i32, Failure> {
    let (traj, summary) = simulate(config, k)?;
    match config.format {
        OutputFormat::Json => {
            let samples = traj
                .samples
                .iter()
                .map(|s| SampleRow {
                    t: s.state.t,
                    position: s.state.position.into(),
                    velocity: s.state.velocity.into(),
                    power_w: s.power,
                })
                .collect();
            write_json(out, config, SimulateBody { summary, samples })?;
        }
        _ => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["t", "x", "y", "z", "vx", "vy", "vz", "power_W"])?;
            for s in &traj.samples {
                let (p, v) = (&s.state.position, &s.state.velocity);
                w.write_record([s.state.t, p.x, p.y, p.z, v.x, v.y, v.z, s.power].map(fmt_f64))?;
            }
            w.flush()?;
        }
    }
    writeln!(diag, "steps: {}", summary.steps)?;
    writeln!(
        diag,
        "cumulative radiated energy: {} J",
        fmt_f64(summary.cumulative_energy_j)
    )?;
    writeln!(diag, "final speed: {} m/s", fmt_f64(summary.final_speed))?;
    writeln!(diag, "final v/c: {}", fmt_f64(summary.final_beta))?;
    writeln!(
        diag,
        "max relative speed drift: {}",
        fmt_f64(summary.max_speed_drift)
    )?;
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct AuditBody {
    findings: Vec<AuditFinding>,
}

fn run_audit(config: &RunConfig, out: &mut dyn Write) -> Result<i32, Failure> {
    let findings = all_findings();
    match config.format {
        OutputFormat::Json => {
            let doc = render_report(&findings, ReportFormat::Structured);
            let sorted = crate::audit::parse_structured(&doc).expect("own report parses");
            write_json(out, config, AuditBody { findings: sorted })?;
        }
        _ => out.write_all(render_report(&findings, ReportFormat::Table).as_bytes())?,
    }
    let failing = findings.iter().any(|f| f.severity == Severity::Fail);
    Ok(if config.fail_on_findings && failing {
        EXIT_AUDIT
    } else {
        EXIT_OK
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(command: Command, pairs: &[(&str, &str)]) -> RunConfig {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.to_string()))
            .collect();
        RunConfig::from_map(command, map).unwrap()
    }

    fn run_capture(config: &RunConfig) -> (i32, String, String) {
        let (mut out, mut diag) = (Vec::new(), Vec::new());
        let code = run(config, &mut out, &mut diag);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(diag).unwrap(),
        )
    }

    #[test]
    fn compute_csv_has_header_and_one_row_per_field() {
        let (code, out, _) = run_capture(&cfg(Command::Compute, &[("D", "3e4"), ("B", "100")]));
        assert_eq!(code, EXIT_OK);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 3);
        assert!(lines[0].starts_with("field_kind,induction"));
        assert!(lines[1].starts_with("electric,"));
        assert!(lines[2].starts_with("magnetic,"));
        assert!(out.ends_with('\n'));
    }

    #[test]
    fn zero_field_compute_is_all_zero() {
        let (code, out, _) = run_capture(&cfg(Command::Compute, &[("B", "0")]));
        assert_eq!(code, EXIT_OK);
        let row: Vec<&str> = out.lines().nth(1).unwrap().split(',').collect();
        for cell in &row[1..6] {
            assert_eq!(cell.parse::<f64>().unwrap(), 0.0);
        }
    }

    #[test]
    fn literal_compute_outside_log_domain_is_a_domain_error() {
        let (code, _, diag) = run_capture(&cfg(
            Command::Compute,
            &[("B", "1e14"), ("mode", "literal")],
        ));
        assert_eq!(code, EXIT_DOMAIN, "{diag}");
    }

    #[test]
    fn sweep_records_failed_rows_and_continues() {
        let c = cfg(
            Command::Sweep,
            &[
                ("sweep_field", "B"),
                ("min", "1"),
                ("max", "1e14"),
                ("points", "4"),
                ("scale", "log"),
                ("mode", "literal"),
            ],
        );
        let (code, out, _) = run_capture(&c);
        assert_eq!(code, EXIT_DOMAIN);
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines.len(), 5);
        assert!(lines[1].ends_with("literal,"));
        assert!(!lines[4].ends_with("literal,"));
    }

    #[test]
    fn audit_exit_policy() {
        assert_eq!(run_capture(&cfg(Command::Audit, &[])).0, EXIT_OK);
        assert_eq!(
            run_capture(&cfg(Command::Audit, &[("fail_on_findings", "true")])).0,
            EXIT_AUDIT
        );
    }

    #[test]
    fn audit_json_has_document_fields() {
        let (_, out, _) = run_capture(&cfg(Command::Audit, &[("format", "json")]));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["tool_version"], TOOL_VERSION);
        assert!(v["config_echo"].is_object());
        assert!(!v["findings"].as_array().unwrap().is_empty());
        assert!(crate::audit::parse_structured(&out).is_ok());
    }

    #[test]
    fn zero_field_simulation_radiates_nothing() {
        let c = cfg(
            Command::Simulate,
            &[("v0", "0.3"), ("dt", "1e-12"), ("steps", "50")],
        );
        let (_, summary) = simulate(&c, ConstantsTable::codata()).unwrap();
        assert_eq!(summary.cumulative_energy_j, 0.0);
        assert!(summary.max_speed_drift < 1e-15);
    }

    #[test]
    fn clap_errors_map_to_usage() {
        assert_eq!(main_entry(["vacrad", "frobnicate"]), EXIT_USAGE);
        assert_eq!(main_entry(["vacrad", "compute", "--nope", "1"]), EXIT_USAGE);
        assert_eq!(main_entry(["vacrad", "compute", "--D", "-1"]), EXIT_USAGE);
        assert_eq!(main_entry(["vacrad", "--version"]), EXIT_OK);
    }
}
