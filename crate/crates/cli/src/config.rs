//! Run configuration: built-in defaults, then a `key = value` file, then flags.
//! The cache directory may also come from `BRAIDSIEVE_CACHE_DIR`.

use braidsieve_core::pipeline::SieveMode;
use braidsieve_core::{Error, Result};
use std::path::{Path, PathBuf};

pub const CACHE_ENV: &str = "BRAIDSIEVE_CACHE_DIR";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Md,
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "text" => Ok(Self::Text),
            "md" => Ok(Self::Md),
            "csv" => Ok(Self::Csv),
            "json" => Ok(Self::Json),
            other => Err(Error::Invalid(format!("unknown format '{other}' (text, md, csv, json)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub horizon: Option<usize>,
    pub mode: SieveMode,
    pub format: Option<Format>,
    pub cache_dir: Option<PathBuf>,
    pub workers: Option<usize>,
    pub precision: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self { horizon: None, mode: SieveMode::Pair, format: None, cache_dir: None, workers: None, precision: 5 }
    }
}

fn parse_num(key: &str, value: &str, line: usize) -> Result<usize> {
    value.parse().map_err(|_| {
        Error::Invalid(format!("config line {line}: '{key}' expects a nonnegative integer, got '{value}'"))
    })
}

impl RunConfig {
    /// Applies `key = value` lines; `#` starts a comment.
    pub fn merge_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::Invalid(format!("config line {}: expected key = value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            match key {
                "horizon" | "iters" => self.horizon = Some(parse_num(key, value, i + 1)?),
                "mode" => self.mode = value.parse()?,
                "format" => self.format = Some(value.parse()?),
                "cache_dir" => self.cache_dir = Some(PathBuf::from(value)),
                "workers" => self.workers = Some(parse_num(key, value, i + 1)?),
                "precision" => self.precision = parse_num(key, value, i + 1)?,
                other => return Err(Error::Invalid(format!("config line {}: unknown key '{other}'", i + 1))),
            }
        }
        Ok(())
    }

    pub fn merge_file(&mut self, path: &Path) -> Result<()> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Invalid(format!("cannot read config {}: {e}", path.display())))?;
        self.merge_text(&text)
    }

    /// Environment fills the cache directory only when nothing else set it.
    pub fn merge_env(&mut self, value: Option<String>) {
        if self.cache_dir.is_none() {
            if let Some(v) = value.filter(|v| !v.is_empty()) {
                self.cache_dir = Some(PathBuf::from(v));
            }
        }
    }
}
