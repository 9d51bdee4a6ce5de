use std::path::{Path, PathBuf};

use credence_core::model::{ModelParams, PriceList, Scenario};
use toml::{Table, Value};

use crate::args::GlobalOpts;
use crate::error::CliError;

/// Flat key-value settings read from a TOML file.
#[derive(Debug, Default, Clone)]
pub struct FileConfig(Table);

impl FileConfig {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        let table: Table = text.parse().map_err(|e| CliError::Config(format!("bad config file: {e}")))?;
        if let Some((k, _)) = table.iter().find(|(_, v)| v.is_table() || v.is_array()) {
            return Err(CliError::Config(format!("config key {k} must be a plain value")));
        }
        Ok(Self(table))
    }

    pub fn f64(&self, key: &str) -> Result<Option<f64>, CliError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(Value::Float(x)) => Ok(Some(*x)),
            Some(Value::Integer(i)) => Ok(Some(*i as f64)),
            Some(v) => Err(CliError::Config(format!("config key {key} must be a number, got {v}"))),
        }
    }

    pub fn u64(&self, key: &str) -> Result<Option<u64>, CliError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(Value::Integer(i)) if *i >= 0 => Ok(Some(*i as u64)),
            Some(v) => Err(CliError::Config(format!("config key {key} must be a non-negative integer, got {v}"))),
        }
    }

    pub fn string(&self, key: &str) -> Result<Option<String>, CliError> {
        match self.0.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(v) => Err(CliError::Config(format!("config key {key} must be a string, got {v}"))),
        }
    }
}

/// Command-line options merged over the config file.
#[derive(Debug, Clone)]
pub struct Settings {
    pub file: FileConfig,
    pub params: ModelParams,
    pub q0: f64,
    pub chi: f64,
    pub prices: Option<(f64, f64)>,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
}

pub const DEFAULT_PARAMS: (f64, f64, f64, f64) = (1.0, 3.0, 4.0, 10.0);

impl Settings {
    pub fn resolve(opts: &GlobalOpts) -> Result<Self, CliError> {
        let file = match &opts.config {
            Some(path) => FileConfig::load(path)?,
            None => FileConfig::default(),
        };
        let num = |flag: Option<f64>, key: &str, default: f64| -> Result<f64, CliError> {
            Ok(flag.or(file.f64(key)?).unwrap_or(default))
        };
        let (c1, c2, l1, l2) = DEFAULT_PARAMS;
        let params = ModelParams::new(num(opts.c1, "c1", c1)?, num(opts.c2, "c2", c2)?, num(opts.l1, "l1", l1)?, num(opts.l2, "l2", l2)?)?;
        let p1 = opts.p1.or(file.f64("p1")?);
        let p2 = opts.p2.or(file.f64("p2")?);
        let prices = match (p1, p2) {
            (Some(a), Some(b)) => Some((a, b)),
            (None, None) => None,
            _ => return Err(CliError::Config("p1 and p2 must be given together".into())),
        };
        let threads = match opts.threads {
            Some(t) => Some(t),
            None => file.u64("threads")?.map(|t| t as usize),
        };
        if threads == Some(0) {
            return Err(CliError::Config("threads must be positive".into()));
        }
        Ok(Self {
            params,
            q0: num(opts.q0, "q0", 0.25)?,
            chi: num(opts.chi, "chi", 0.5)?,
            prices,
            output: opts.output.clone().or(file.string("output")?.map(PathBuf::from)),
            threads,
            file,
        })
    }

    pub fn scenario(&self) -> Result<Scenario, CliError> {
        Ok(Scenario::new(self.params, self.q0, self.chi)?)
    }

    pub fn price_list(&self) -> Result<Option<PriceList>, CliError> {
        self.prices
            .map(|(p1, p2)| PriceList::new(p1, p2, &self.params).map_err(CliError::from))
            .transpose()
    }

    pub fn require_prices(&self) -> Result<PriceList, CliError> {
        self.price_list()?
            .ok_or_else(|| CliError::Config("this command needs --p1 and --p2".into()))
    }

    pub fn f64_or(&self, flag: Option<f64>, key: &str, default: f64) -> Result<f64, CliError> {
        Ok(flag.or(self.file.f64(key)?).unwrap_or(default))
    }

    pub fn u64_or(&self, flag: Option<u64>, key: &str, default: u64) -> Result<u64, CliError> {
        Ok(flag.or(self.file.u64(key)?).unwrap_or(default))
    }

    pub fn steps_or(&self, flag: Option<usize>, key: &str, default: usize) -> Result<usize, CliError> {
        let steps = flag.or(self.file.u64(key)?.map(|s| s as usize)).unwrap_or(default);
        if steps < 2 {
            return Err(CliError::Config(format!("{key} must be at least 2")));
        }
        Ok(steps)
    }
}

/// A closed range with `steps` evenly spaced points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Axis {
    pub lo: f64,
    pub hi: f64,
    pub steps: usize,
}

impl Axis {
    pub fn new(name: &str, lo: f64, hi: f64, steps: usize) -> Result<Self, CliError> {
        if !(0.0..=1.0).contains(&lo) || !(0.0..=1.0).contains(&hi) || lo > hi {
            return Err(CliError::Config(format!("{name} range [{lo}, {hi}] must lie in [0, 1]")));
        }
        if steps < 2 {
            return Err(CliError::Config(format!("{name} needs at least 2 steps")));
        }
        Ok(Self { lo, hi, steps })
    }

    pub fn unit(steps: usize) -> Result<Self, CliError> {
        Self::new("axis", 0.0, 1.0, steps)
    }

    pub fn point(&self, i: usize) -> f64 {
        if i + 1 == self.steps {
            return self.hi;
        }
        self.lo + (self.hi - self.lo) * i as f64 / (self.steps - 1) as f64
    }

    pub fn points(&self) -> Vec<f64> {
        (0..self.steps).map(|i| self.point(i)).collect()
    }
}
