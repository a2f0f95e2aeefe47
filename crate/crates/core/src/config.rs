//! Run limits, with `ARRGRAPH_*` environment overrides.

use std::path::PathBuf;

use crate::arrangement::DEFAULT_VERTEX_GUARD;
use crate::aut::DEFAULT_NODE_BUDGET;
use crate::error::{Error, Result};
use crate::indsets::DEFAULT_ENUMERATE_GUARD;
use crate::schreier::DEFAULT_ENUMERATION_THRESHOLD;

pub const ENV_PREFIX: &str = "ARRGRAPH_";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Config {
    pub enumeration_threshold: u128,
    pub node_budget: u64,
    pub vertex_guard: usize,
    pub enumerate_guard: usize,
    pub workers: usize,
    pub report_path: Option<PathBuf>,
    pub summary_path: Option<PathBuf>,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            enumeration_threshold: DEFAULT_ENUMERATION_THRESHOLD,
            node_budget: DEFAULT_NODE_BUDGET,
            vertex_guard: DEFAULT_VERTEX_GUARD,
            enumerate_guard: DEFAULT_ENUMERATE_GUARD,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
            report_path: None,
            summary_path: None,
        }
    }
}

impl Config {
    /// Defaults overridden by the process environment.
    pub fn from_env() -> Result<Self> {
        Self::default().with_overrides(|key| std::env::var(key).ok())
    }

    /// Applies overrides from `lookup`, which receives full variable names
    /// such as `ARRGRAPH_WORKERS`.
    pub fn with_overrides(mut self, lookup: impl Fn(&str) -> Option<String>) -> Result<Self> {
        fn parse<T: std::str::FromStr>(key: &str, raw: &str) -> Result<T> {
            raw.trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{key}={raw:?} is not a valid number")))
        }
        let var = |name: &str| {
            let key = format!("{ENV_PREFIX}{name}");
            lookup(&key).map(|v| (key, v))
        };
        if let Some((k, v)) = var("ENUM_THRESHOLD") {
            self.enumeration_threshold = parse(&k, &v)?;
        }
        if let Some((k, v)) = var("NODE_BUDGET") {
            self.node_budget = parse(&k, &v)?;
        }
        if let Some((k, v)) = var("VERTEX_GUARD") {
            self.vertex_guard = parse(&k, &v)?;
        }
        if let Some((k, v)) = var("ENUMERATE_GUARD") {
            self.enumerate_guard = parse(&k, &v)?;
        }
        if let Some((k, v)) = var("WORKERS") {
            self.workers = parse(&k, &v)?;
        }
        if let Some((_, v)) = var("REPORT") {
            self.report_path = Some(v.into());
        }
        if let Some((_, v)) = var("SUMMARY") {
            self.summary_path = Some(v.into());
        }
        self.validate()?;
        Ok(self)
    }

    pub fn validate(&self) -> Result<()> {
        let checks = [
            ("enumeration threshold", self.enumeration_threshold == 0),
            ("node budget", self.node_budget == 0),
            ("vertex guard", self.vertex_guard == 0),
            ("enumerate guard", self.enumerate_guard == 0),
            ("worker count", self.workers == 0),
        ];
        match checks.iter().find(|(_, bad)| *bad) {
            Some((name, _)) => Err(Error::InvalidParameters(format!("{name} must be positive"))),
            None => Ok(()),
        }
    }
}
