//! Defaults, optionally overridden by a `key=value` file named in
//! `LSERIES_LAB_CONFIG`, then by command-line flags.

use std::path::Path;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

pub const CONFIG_ENV: &str = "LSERIES_LAB_CONFIG";

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Config {
    /// Euler–Maclaurin truncation target.
    pub hurwitz_tol: f64,
    /// Bisection width for zero refinement.
    pub scan_tol: f64,
    pub default_n: u64,
    pub grid_step: f64,
    pub format: Format,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            hurwitz_tol: 1e-10,
            scan_tol: 1e-9,
            default_n: 10_000,
            grid_step: 0.01,
            format: Format::Table,
        }
    }
}

impl Config {
    pub fn from_env() -> Result<Config> {
        match std::env::var_os(CONFIG_ENV) {
            Some(path) if !path.is_empty() => Config::from_file(Path::new(&path)),
            _ => Ok(Config::default()),
        }
    }

    pub fn from_file(path: &Path) -> Result<Config> {
        let text = std::fs::read_to_string(path)
            .with_context(|| format!("reading config file {}", path.display()))?;
        Config::parse(&text).with_context(|| format!("in config file {}", path.display()))
    }

    /// Blank lines and lines starting with `#` are ignored.
    pub fn parse(text: &str) -> Result<Config> {
        let mut cfg = Config::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let Some((key, value)) = line.split_once('=') else {
                bail!("line {}: expected key=value, got {line:?}", lineno + 1);
            };
            let (key, value) = (key.trim(), value.trim());
            let bad = |what: &str| format!("line {}: {key} must be {what}, got {value:?}", lineno + 1);
            match key {
                "hurwitz_tol" | "tol" => cfg.hurwitz_tol = value.parse().with_context(|| bad("a number"))?,
                "scan_tol" => cfg.scan_tol = value.parse().with_context(|| bad("a number"))?,
                "default_n" | "N" => cfg.default_n = value.parse().with_context(|| bad("an integer"))?,
                "grid_step" => cfg.grid_step = value.parse().with_context(|| bad("a number"))?,
                "format" => {
                    cfg.format = Format::from_str(value, true)
                        .map_err(|_| anyhow::anyhow!(bad("one of json, csv, table")))?
                }
                other => bail!("line {}: unknown key {other:?}", lineno + 1),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.hurwitz_tol > 0.0 && self.hurwitz_tol.is_finite()) {
            bail!("tolerance must be positive, got {}", self.hurwitz_tol);
        }
        if !(self.scan_tol > 0.0 && self.scan_tol.is_finite()) {
            bail!("scan tolerance must be positive, got {}", self.scan_tol);
        }
        if self.default_n == 0 {
            bail!("default truncation must be at least 1");
        }
        if !(self.grid_step > 0.0 && self.grid_step < 0.5) {
            bail!("grid step must lie in (0, 0.5), got {}", self.grid_step);
        }
        Ok(())
    }
}
