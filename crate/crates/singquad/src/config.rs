//! Flat `key = value` configuration files. Blank lines and `#` comments
//! are ignored; later keys override earlier ones.

use std::collections::BTreeMap;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, Context, Result};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Config {
    values: BTreeMap<String, String>,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let mut values = BTreeMap::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| anyhow!("line {}: expected key = value", i + 1))?;
            let key = k.trim();
            if key.is_empty() {
                bail!("line {}: empty key", i + 1);
            }
            values.insert(key.to_string(), v.trim().to_string());
        }
        Ok(Self { values })
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text)
    }

    pub fn set(&mut self, key: &str, value: impl ToString) {
        self.values.insert(key.to_string(), value.to_string());
    }

    pub fn get_str(&self, key: &str) -> Option<&str> {
        self.values.get(key).map(String::as_str)
    }

    pub fn get<T: FromStr>(&self, key: &str) -> Result<Option<T>>
    where
        T::Err: std::error::Error + Send + Sync + 'static,
    {
        match self.values.get(key) {
            None => Ok(None),
            Some(v) => v.parse::<T>().map(Some).with_context(|| format!("config key `{key}` = `{v}`")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_and_overrides() {
        let mut c = Config::parse("# sweep\nnmin = 10\nnmax=600 # inline\n\nspec = power(0.4, 0, 0.5)\nnmin = 20\n").unwrap();
        assert_eq!(c.get::<usize>("nmin").unwrap(), Some(20));
        assert_eq!(c.get_str("spec"), Some("power(0.4, 0, 0.5)"));
        c.set("nmax", 100);
        assert_eq!(c.get::<usize>("nmax").unwrap(), Some(100));
        assert_eq!(c.get::<f64>("alpha").unwrap(), None);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Config::parse("nmin 10").is_err());
        assert!(Config::parse("= 3").is_err());
        assert!(Config::parse("nmin = ten").unwrap().get::<usize>("nmin").is_err());
    }
}
