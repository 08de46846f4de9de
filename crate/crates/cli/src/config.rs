use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use serde::Deserialize;
use weyl_core::suites::Fixture;
use weyl_core::{Suite, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

/// Invalid flag values, unreadable files or malformed fixtures.
#[derive(Debug)]
pub struct ConfigError(pub String);

impl fmt::Display for ConfigError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Suite name, or `all`
    pub suite: String,
    #[arg(long)]
    pub max_n: Option<u32>,
    #[arg(long)]
    pub max_m: Option<u32>,
    #[arg(long)]
    pub max_l: Option<u32>,
    /// Relative tolerance for the floating-point Hermite checks
    #[arg(long)]
    pub tol: Option<f64>,
    /// Truncation dimension of the Hermite basis
    #[arg(long)]
    pub dim: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Number of random cases for `mccoy`, `functions` and `oracles`
    #[arg(long)]
    pub cases: Option<u32>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write the report here instead of stdout
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Omit `elapsed_ms` so reports are byte-identical across runs
    #[arg(long)]
    pub no_timing: bool,
    /// TOML file with `[[fixture]]` tables (`h0`, `x`) for `figueira`
    #[arg(long)]
    pub fixture: Option<PathBuf>,
    /// Defaults file; flags take precedence
    #[arg(long, env = "WEYL_CONFIG")]
    pub config: Option<PathBuf>,
    /// List every instance in text mode, not only failures
    #[arg(long, short)]
    pub verbose: bool,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    max_n: Option<u32>,
    max_m: Option<u32>,
    max_l: Option<u32>,
    tol: Option<f64>,
    dim: Option<usize>,
    seed: Option<u64>,
    cases: Option<u32>,
    format: Option<Format>,
    no_timing: Option<bool>,
    #[serde(default)]
    fixture: Vec<FixtureEntry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureEntry {
    h0: String,
    x: String,
}

#[derive(Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FixtureFile {
    #[serde(default)]
    fixture: Vec<FixtureEntry>,
}

/// Fully resolved run settings.
#[derive(Debug)]
pub struct RunConfig {
    pub suites: Vec<Suite>,
    pub suite_config: SuiteConfig,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub timing: bool,
    pub verbose: bool,
}

fn read_toml<T: for<'de> Deserialize<'de>>(path: &Path) -> Result<T, ConfigError> {
    let text = fs::read_to_string(path)
        .map_err(|e| ConfigError(format!("cannot read {}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
}

fn parse_fixtures(entries: Vec<FixtureEntry>) -> Result<Vec<Fixture>, ConfigError> {
    entries
        .into_iter()
        .map(|e| {
            Fixture::parse(&e.h0, &e.x)
                .map_err(|err| ConfigError(format!("fixture ({}, {}): {err}", e.h0, e.x)))
        })
        .collect()
}

fn parse_suites(name: &str) -> Result<Vec<Suite>, ConfigError> {
    if name == "all" {
        return Ok(Suite::ALL.to_vec());
    }
    name.parse::<Suite>().map(|s| vec![s]).map_err(|_| {
        let names: Vec<_> = Suite::ALL.iter().map(|s| s.name()).collect();
        ConfigError(format!(
            "unknown suite `{name}` (expected all, {})",
            names.join(", ")
        ))
    })
}

impl VerifyArgs {
    pub fn resolve(self) -> Result<RunConfig, ConfigError> {
        let suites = parse_suites(&self.suite)?;
        let file: FileConfig = match &self.config {
            Some(path) => read_toml(path)?,
            None => FileConfig::default(),
        };
        let defaults = SuiteConfig::default();

        let mut fixtures = parse_fixtures(file.fixture)?;
        if let Some(path) = &self.fixture {
            let extra: FixtureFile = read_toml(path)?;
            fixtures = parse_fixtures(extra.fixture)?;
        }

        let suite_config = SuiteConfig {
            max_n: self.max_n.or(file.max_n),
            max_m: self.max_m.or(file.max_m),
            max_l: self.max_l.or(file.max_l),
            tol: self.tol.or(file.tol).unwrap_or(defaults.tol),
            dim: self.dim.or(file.dim).unwrap_or(defaults.dim),
            seed: self.seed.or(file.seed).unwrap_or(defaults.seed),
            cases: self.cases.or(file.cases).unwrap_or(defaults.cases),
            fixtures: (!fixtures.is_empty()).then_some(fixtures),
        };
        if !(suite_config.tol.is_finite() && suite_config.tol > 0.0) {
            return Err(ConfigError(format!(
                "--tol must be positive, got {}",
                suite_config.tol
            )));
        }
        if suite_config.dim < 4 {
            return Err(ConfigError(format!(
                "--dim must be at least 4, got {}",
                suite_config.dim
            )));
        }

        Ok(RunConfig {
            suites,
            suite_config,
            format: self.format.or(file.format).unwrap_or(Format::Text),
            output: self.output,
            timing: !(self.no_timing || file.no_timing.unwrap_or(false)),
            verbose: self.verbose,
        })
    }
}
