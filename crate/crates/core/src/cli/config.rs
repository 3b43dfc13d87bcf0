//! Run configuration. Values come from command-line flags, then a flat
//! `key = value` config file, then defaults.

use std::collections::BTreeMap;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use thiserror::Error;

use crate::states::{Family, DEFAULT_MAX_ELECTRONS};

pub const DEFAULT_M_MAX: u32 = 13;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("config line {line}: expected `key = value`")]
    Syntax { line: usize },
    #[error("config line {line}: unknown key '{key}'")]
    UnknownKey { line: usize, key: String },
    #[error("invalid value for {key}: {message}")]
    Value { key: String, message: String },
    #[error("missing required setting '{0}'")]
    Missing(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Units {
    #[default]
    Bits,
    Nats,
}

impl FromStr for Units {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "bits" => Ok(Units::Bits),
            "nats" => Ok(Units::Nats),
            other => Err(format!("unknown units '{other}' (expected bits or nats)")),
        }
    }
}

impl fmt::Display for Units {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Units::Bits => "bits",
            Units::Nats => "nats",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            "svg" => Ok(OutputFormat::Svg),
            other => Err(format!("unknown format '{other}' (expected csv, json or svg)")),
        }
    }
}

/// Settings that may come from either source. Every field is optional so
/// that layers can be merged.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Settings {
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub m: Option<u32>,
    pub m_max: Option<u32>,
    pub units: Option<Units>,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub jobs: Option<usize>,
    pub max_electrons: Option<usize>,
}

impl Settings {
    /// Fills unset fields from `fallback`.
    pub fn or(self, fallback: Settings) -> Settings {
        Settings {
            family: self.family.or(fallback.family),
            n: self.n.or(fallback.n),
            m: self.m.or(fallback.m),
            m_max: self.m_max.or(fallback.m_max),
            units: self.units.or(fallback.units),
            format: self.format.or(fallback.format),
            out: self.out.or(fallback.out),
            jobs: self.jobs.or(fallback.jobs),
            max_electrons: self.max_electrons.or(fallback.max_electrons),
        }
    }

    pub fn resolve(self) -> RunConfig {
        RunConfig {
            family: self.family,
            n: self.n,
            m: self.m,
            m_max: self.m_max.unwrap_or(DEFAULT_M_MAX),
            units: self.units.unwrap_or_default(),
            format: self.format,
            out: self.out,
            jobs: self.jobs.unwrap_or(1).max(1),
            max_electrons: self.max_electrons.unwrap_or(DEFAULT_MAX_ELECTRONS),
        }
    }
}

fn parse_value<T: FromStr>(key: &str, value: &str) -> Result<T, ConfigError>
where
    T::Err: fmt::Display,
{
    value
        .parse()
        .map_err(|e: T::Err| ConfigError::Value { key: key.to_string(), message: e.to_string() })
}

/// Parses a config file. Blank lines and lines starting with `#` are ignored;
/// keys are `family`, `n`, `m`, `m_max`, `units`, `format`, `out`, `jobs` and
/// `max_electrons`.
pub fn parse_config_file(text: &str) -> Result<Settings, ConfigError> {
    let mut raw: BTreeMap<String, (usize, String)> = BTreeMap::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let (k, v) = line.split_once('=').ok_or(ConfigError::Syntax { line: i + 1 })?;
        raw.insert(k.trim().replace('-', "_"), (i + 1, v.trim().to_string()));
    }
    let mut s = Settings::default();
    for (key, (line, value)) in raw {
        match key.as_str() {
            "family" => s.family = Some(parse_value(&key, &value)?),
            "n" => s.n = Some(parse_value(&key, &value)?),
            "m" => s.m = Some(parse_value(&key, &value)?),
            "m_max" => s.m_max = Some(parse_value(&key, &value)?),
            "units" => s.units = Some(parse_value(&key, &value)?),
            "format" => s.format = Some(parse_value(&key, &value)?),
            "out" => s.out = Some(PathBuf::from(value)),
            "jobs" => s.jobs = Some(parse_value(&key, &value)?),
            "max_electrons" => s.max_electrons = Some(parse_value(&key, &value)?),
            _ => return Err(ConfigError::UnknownKey { line, key }),
        }
    }
    Ok(s)
}

/// Fully merged configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub family: Option<Family>,
    pub n: Option<usize>,
    pub m: Option<u32>,
    pub m_max: u32,
    pub units: Units,
    pub format: Option<OutputFormat>,
    pub out: Option<PathBuf>,
    pub jobs: usize,
    pub max_electrons: usize,
}

impl RunConfig {
    pub fn family(&self) -> Result<Family, ConfigError> {
        self.family.ok_or(ConfigError::Missing("family"))
    }

    pub fn n(&self) -> Result<usize, ConfigError> {
        self.n.ok_or(ConfigError::Missing("n"))
    }

    pub fn m(&self) -> Result<u32, ConfigError> {
        self.m.ok_or(ConfigError::Missing("m"))
    }

    /// Odd `m` from 1 to `m_max`.
    pub fn m_range(&self) -> Result<Vec<u32>, ConfigError> {
        if self.m_max == 0 || self.m_max % 2 == 0 {
            return Err(ConfigError::Value {
                key: "m_max".into(),
                message: format!("must be a positive odd integer, got {}", self.m_max),
            });
        }
        Ok((1..=self.m_max).step_by(2).collect())
    }
}
