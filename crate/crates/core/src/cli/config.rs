//! Run configuration: flat `key = value` files merged with command-line
//! flags, validated into a [`RunConfig`].

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;

use crate::dynamics::DynamicsMode;
use crate::fields::Vec3;
use crate::vacuum_radiation::{EvalMode, FrequencyConvention};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    Compute,
    Sweep,
    Simulate,
    Audit,
}

impl Command {
    pub fn as_str(&self) -> &'static str {
        match self {
            Command::Compute => "compute",
            Command::Sweep => "sweep",
            Command::Simulate => "simulate",
            Command::Audit => "audit",
        }
    }
}

/// A configuration or usage problem; maps to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for ConfigError {}

fn err<T>(msg: impl Into<String>) -> Result<T, ConfigError> {
    Err(ConfigError(msg.into()))
}

/// Field input with its unit carried by the tag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum FieldInput {
    /// E, V/m
    E(f64),
    /// D, C/m²
    D(f64),
    /// B, T
    B(f64),
    /// H, A/m
    H(f64),
}

impl FieldInput {
    pub fn tag(&self) -> &'static str {
        match self {
            FieldInput::E(_) => "E",
            FieldInput::D(_) => "D",
            FieldInput::B(_) => "B",
            FieldInput::H(_) => "H",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridScale {
    Linear,
    Log,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepSpec {
    /// One of "E", "D", "B", "H".
    pub field: &'static str,
    pub min: f64,
    pub max: f64,
    pub points: usize,
    pub scale: GridScale,
}

impl SweepSpec {
    pub fn grid(&self) -> Vec<f64> {
        let n = self.points;
        (0..n)
            .map(|i| {
                if i == 0 {
                    return self.min;
                }
                if i == n - 1 {
                    return self.max;
                }
                let t = i as f64 / (n - 1) as f64;
                match self.scale {
                    GridScale::Linear => self.min + t * (self.max - self.min),
                    GridScale::Log => (self.min.ln() + t * (self.max.ln() - self.min.ln())).exp(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SimulateSpec {
    /// |v0|/c
    pub v0: f64,
    pub direction: Vec3,
    pub e_dir: Vec3,
    pub b_dir: Vec3,
    pub dt: f64,
    pub steps: usize,
    pub dynamics: DynamicsMode,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub command: Command,
    pub electric: Option<FieldInput>,
    pub magnetic: Option<FieldInput>,
    pub mode: EvalMode,
    pub sweep: Option<SweepSpec>,
    pub simulate: Option<SimulateSpec>,
    pub output: Option<PathBuf>,
    pub format: OutputFormat,
    pub ghz_convention: FrequencyConvention,
    pub intensity_b4_variant: bool,
    pub fail_on_findings: bool,
    /// Resolved key/value pairs, echoed into structured output. The output
    /// path is left out so the document does not depend on where it lands.
    pub echo: BTreeMap<String, String>,
}

pub const KNOWN_KEYS: &[&str] = &[
    "E",
    "D",
    "B",
    "H",
    "mode",
    "sweep_field",
    "min",
    "max",
    "points",
    "scale",
    "v0",
    "direction",
    "e_dir",
    "b_dir",
    "dt",
    "steps",
    "dynamics",
    "output",
    "format",
    "ghz_convention",
    "intensity_b4_variant",
    "fail_on_findings",
];

fn normalize_key(key: &str) -> String {
    let key = key.trim().replace('-', "_");
    match key.to_ascii_lowercase().as_str() {
        "e_dir" => "e_dir".into(),
        "b_dir" => "b_dir".into(),
        _ => key,
    }
}

/// Parse flat `key = value` text. `#` starts a comment.
pub fn parse_config_text(text: &str) -> Result<BTreeMap<String, String>, ConfigError> {
    let mut map = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return err(format!(
                "config line {}: expected `key = value`",
                lineno + 1
            ));
        };
        let key = normalize_key(key);
        if !KNOWN_KEYS.contains(&key.as_str()) {
            return err(format!("config line {}: unknown key `{key}`", lineno + 1));
        }
        map.insert(key, value.trim().to_string());
    }
    Ok(map)
}

struct Keys<'a>(&'a BTreeMap<String, String>);

impl Keys<'_> {
    fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn f64(&self, key: &str) -> Result<Option<f64>, ConfigError> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => match v.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(Some(x)),
                _ => err(format!("`{key}`: expected a finite number, got `{v}`")),
            },
        }
    }

    fn required_f64(&self, key: &str, command: Command) -> Result<f64, ConfigError> {
        self.f64(key)?.map_or_else(
            || err(format!("`{key}` is required for {}", command.as_str())),
            Ok,
        )
    }

    fn usize(&self, key: &str) -> Result<Option<usize>, ConfigError> {
        match self.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<usize>().map(Some).map_err(|_| {
                ConfigError(format!(
                    "`{key}`: expected a nonnegative integer, got `{v}`"
                ))
            }),
        }
    }

    fn bool(&self, key: &str) -> Result<bool, ConfigError> {
        match self.get(key) {
            None => Ok(false),
            Some("true" | "1" | "yes") => Ok(true),
            Some("false" | "0" | "no") => Ok(false),
            Some(v) => err(format!("`{key}`: expected true or false, got `{v}`")),
        }
    }

    fn vector(&self, key: &str, default: Vec3) -> Result<Vec3, ConfigError> {
        let Some(v) = self.get(key) else {
            return Ok(default);
        };
        let parts: Result<Vec<f64>, _> = v.split(',').map(|p| p.trim().parse::<f64>()).collect();
        match parts {
            Ok(p) if p.len() == 3 && p.iter().all(|x| x.is_finite()) => {
                let vec = Vec3::new(p[0], p[1], p[2]);
                if vec.norm() == 0.0 {
                    err(format!("`{key}`: direction must be nonzero"))
                } else {
                    Ok(vec.normalize())
                }
            }
            _ => err(format!(
                "`{key}`: expected three comma-separated numbers, got `{v}`"
            )),
        }
    }
}

fn field_input(keys: &Keys, tags: [&'static str; 2]) -> Result<Option<FieldInput>, ConfigError> {
    let mut found = None;
    for tag in tags {
        if let Some(value) = keys.f64(tag)? {
            if value < 0.0 {
                return err(format!(
                    "`{tag}`: field magnitude must be nonnegative, got {value}"
                ));
            }
            if let Some(prev) = &found {
                let prev: &FieldInput = prev;
                return err(format!("give exactly one of `{}` or `{tag}`", prev.tag()));
            }
            found = Some(match tag {
                "E" => FieldInput::E(value),
                "D" => FieldInput::D(value),
                "B" => FieldInput::B(value),
                _ => FieldInput::H(value),
            });
        }
    }
    Ok(found)
}

impl RunConfig {
    pub fn from_map(command: Command, map: BTreeMap<String, String>) -> Result<Self, ConfigError> {
        for key in map.keys() {
            if !KNOWN_KEYS.contains(&key.as_str()) {
                return err(format!("unknown key `{key}`"));
            }
        }
        let keys = Keys(&map);
        let electric = field_input(&keys, ["E", "D"])?;
        let magnetic = field_input(&keys, ["B", "H"])?;

        let mode = match keys.get("mode") {
            None | Some("paper") | Some("paper_coefficients") => EvalMode::PaperCoefficients,
            Some("literal") | Some("literal_formulas") => EvalMode::LiteralFormulas,
            Some(v) => return err(format!("`mode`: expected paper or literal, got `{v}`")),
        };
        let format = match keys.get("format") {
            None if command == Command::Audit => OutputFormat::Table,
            None | Some("csv") => OutputFormat::Csv,
            Some("json") | Some("structured") => OutputFormat::Json,
            Some("table") => OutputFormat::Table,
            Some(v) => return err(format!("`format`: expected csv, json or table, got `{v}`")),
        };
        match (command, format) {
            (Command::Audit, OutputFormat::Csv) => {
                return err("`format`: audit writes table or json")
            }
            (Command::Compute | Command::Sweep | Command::Simulate, OutputFormat::Table) => {
                return err(format!("`format`: {} writes csv or json", command.as_str()))
            }
            _ => {}
        }
        let ghz_convention = match keys.get("ghz_convention") {
            None | Some("numeric") | Some("numeric_hz") => FrequencyConvention::NumericHz,
            Some("angular") | Some("over_2pi") => FrequencyConvention::AngularOverTwoPi,
            Some(v) => {
                return err(format!(
                    "`ghz_convention`: expected numeric or angular, got `{v}`"
                ))
            }
        };

        let sweep = if command == Command::Sweep {
            let field = match keys.get("sweep_field") {
                Some("E") => "E",
                Some("D") => "D",
                Some("B") => "B",
                Some("H") => "H",
                Some(v) => return err(format!("`sweep_field`: expected E, D, B or H, got `{v}`")),
                None => return err("`sweep_field` is required for sweep"),
            };
            let min = keys.required_f64("min", command)?;
            let max = keys.required_f64("max", command)?;
            let points = keys.usize("points")?.unwrap_or(0);
            let scale = match keys.get("scale") {
                None | Some("linear") => GridScale::Linear,
                Some("log") => GridScale::Log,
                Some(v) => return err(format!("`scale`: expected linear or log, got `{v}`")),
            };
            if min >= max {
                return err(format!(
                    "sweep grid needs min < max, got min = {min}, max = {max}"
                ));
            }
            if points < 2 {
                return err(format!(
                    "`points`: sweep grid needs at least 2 points, got {points}"
                ));
            }
            if min < 0.0 {
                return err(format!(
                    "`min`: field magnitude must be nonnegative, got {min}"
                ));
            }
            if scale == GridScale::Log && min <= 0.0 {
                return err("`min`: log grid needs min > 0");
            }
            Some(SweepSpec {
                field,
                min,
                max,
                points,
                scale,
            })
        } else {
            None
        };

        let simulate = if command == Command::Simulate {
            let v0 = keys.f64("v0")?.unwrap_or(0.0);
            if !(0.0..1.0).contains(&v0) {
                return err(format!(
                    "`v0`: speed fraction must satisfy 0 <= v0 < 1, got {v0}"
                ));
            }
            let dt = keys.required_f64("dt", command)?;
            if dt <= 0.0 {
                return err(format!("`dt`: must be positive, got {dt}"));
            }
            let steps = keys.usize("steps")?.unwrap_or(0);
            if steps < 1 {
                return err("`steps`: must be at least 1");
            }
            let dynamics = match keys.get("dynamics") {
                None | Some("standard") | Some("standard_lorentz") => DynamicsMode::StandardLorentz,
                Some("literal") | Some("paper_literal") => DynamicsMode::PaperLiteral,
                Some(v) => {
                    return err(format!(
                        "`dynamics`: expected standard or literal, got `{v}`"
                    ))
                }
            };
            Some(SimulateSpec {
                v0,
                direction: keys.vector("direction", Vec3::x())?,
                e_dir: keys.vector("e_dir", Vec3::x())?,
                b_dir: keys.vector("b_dir", Vec3::z())?,
                dt,
                steps,
                dynamics,
            })
        } else {
            None
        };

        if command == Command::Compute && electric.is_none() && magnetic.is_none() {
            return err("compute needs a field: one of `E`/`D` and/or one of `B`/`H`");
        }

        Ok(Self {
            command,
            electric,
            magnetic,
            mode,
            sweep,
            simulate,
            output: keys.get("output").map(PathBuf::from),
            format,
            ghz_convention,
            intensity_b4_variant: keys.bool("intensity_b4_variant")?,
            fail_on_findings: keys.bool("fail_on_findings")?,
            echo: {
                let mut echo = map;
                echo.remove("output");
                echo
            },
        })
    }
}
