//! Plain `key = value` defaults.

use std::collections::BTreeMap;
use std::path::Path;

use crate::error::CliError;

pub const BUILTIN: &str = include_str!("../defaults.conf");

/// Environment variable naming an alternative defaults file.
pub const CONFIG_ENV: &str = "PDG_VERIFY_CONFIG";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Config {
    entries: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut entries = BTreeMap::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| CliError::Config(format!("line {}: expected `key = value`", no + 1)))?;
            entries.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Config { entries })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in defaults parse")
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn ints(&self, key: &str) -> Result<Vec<i64>, CliError> {
        let Some(v) = self.get(key) else { return Err(CliError::Config(format!("missing key {key}"))) };
        v.split(',')
            .map(|t| t.trim().parse::<i64>().map_err(|e| CliError::Config(format!("{key}: {t:?}: {e}"))))
            .collect()
    }

    pub fn int(&self, key: &str) -> Result<Option<i64>, CliError> {
        match self.get(key) {
            None => Ok(None),
            Some(_) => match self.ints(key)?.as_slice() {
                [x] => Ok(Some(*x)),
                _ => Err(CliError::Config(format!("{key} must be a single integer"))),
            },
        }
    }

    pub fn pairs(&self, key: &str) -> Result<Vec<(i64, i64)>, CliError> {
        let Some(v) = self.get(key) else { return Err(CliError::Config(format!("missing key {key}"))) };
        v.split(',')
            .map(|t| {
                let bad = || CliError::Config(format!("{key}: {t:?} is not a pair a:b"));
                let (x, y) = t.trim().split_once(':').ok_or_else(bad)?;
                Ok((x.trim().parse().map_err(|_| bad())?, y.trim().parse().map_err(|_| bad())?))
            })
            .collect()
    }
}
