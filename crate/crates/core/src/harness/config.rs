//! Experiment configuration shared by the verification and benchmark
//! runners.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::generate::GenStyle;

/// Default cap on entries per generated instance; lift it explicitly for
/// bigger sweeps.
pub const DEFAULT_MAX_ENTRIES: usize = 10_000_000;

/// Verification works through exhaustive query sets, which are quadratic
/// in the entry count; these caps keep the default run small.
pub const VERIFY_MAX_D: usize = 5;
pub const VERIFY_MAX_N: usize = 6;

/// Inclusive range of side lengths, `lo..hi` with a step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NRange {
    pub lo: usize,
    pub hi: usize,
    pub step: usize,
}

impl NRange {
    pub fn single(n: usize) -> Self {
        Self { lo: n, hi: n, step: 1 }
    }

    pub fn values(&self) -> impl Iterator<Item = usize> + '_ {
        (self.lo..=self.hi).step_by(self.step.max(1))
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || self.step == 0
    }
}

impl FromStr for NRange {
    type Err = String;

    /// Accepts `n`, `lo..hi`, or `lo..hi:step`.
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = |s: &str| format!("bad n-range `{s}` (expected `n` or `lo..hi[:step]`)");
        if let Some((range, step)) = s.split_once(':') {
            let mut r: NRange = range.parse().map_err(|_| bad(s))?;
            r.step = step.parse().map_err(|_| bad(s))?;
            if r.step == 0 {
                return Err(bad(s));
            }
            Ok(r)
        } else if let Some((lo, hi)) = s.split_once("..") {
            Ok(NRange {
                lo: lo.parse().map_err(|_| bad(s))?,
                hi: hi.parse().map_err(|_| bad(s))?,
                step: 1,
            })
        } else {
            Ok(NRange::single(s.parse().map_err(|_| bad(s))?))
        }
    }
}

impl fmt::Display for NRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else if self.step == 1 {
            write!(f, "{}..{}", self.lo, self.hi)
        } else {
            write!(f, "{}..{}:{}", self.lo, self.hi, self.step)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Algorithm {
    /// Dispatch on the array dimension.
    Auto,
    /// Dimension-peeling baseline (`d >= 2`).
    Slice,
    /// Surface-peeling search (`d >= 4`).
    Surface,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Auto => "auto",
            Algorithm::Slice => "slice",
            Algorithm::Surface => "surface",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "auto" => Ok(Algorithm::Auto),
            "slice" => Ok(Algorithm::Slice),
            "surface" => Ok(Algorithm::Surface),
            other => Err(format!("unknown algorithm `{other}` (expected auto|slice|surface)")),
        }
    }
}

/// Which query classes to run against each instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QueryClasses {
    /// Every distinct entry value.
    pub members: bool,
    /// Midpoint between each pair of consecutive distinct values.
    pub midpoints: bool,
    /// One value below the minimum entry.
    pub below_min: bool,
    /// One value above the maximum entry.
    pub above_max: bool,
}

impl QueryClasses {
    pub fn all() -> Self {
        Self {
            members: true,
            midpoints: true,
            below_min: true,
            above_max: true,
        }
    }

    pub fn is_empty(&self) -> bool {
        !(self.members || self.midpoints || self.below_min || self.above_max)
    }
}

impl fmt::Display for QueryClasses {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if self.members {
            parts.push("members");
        }
        if self.midpoints {
            parts.push("midpoints");
        }
        if self.below_min {
            parts.push("below-min");
        }
        if self.above_max {
            parts.push("above-max");
        }
        f.write_str(&parts.join(","))
    }
}

impl FromStr for QueryClasses {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut classes = QueryClasses {
            members: false,
            midpoints: false,
            below_min: false,
            above_max: false,
        };
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            match part {
                "members" => classes.members = true,
                "midpoints" => classes.midpoints = true,
                "below-min" => classes.below_min = true,
                "above-max" => classes.above_max = true,
                other => {
                    return Err(format!(
                        "unknown query class `{other}` (expected members|midpoints|below-min|above-max)"
                    ))
                }
            }
        }
        Ok(classes)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExperimentConfig {
    pub d: usize,
    pub n_range: NRange,
    pub algorithm: Algorithm,
    /// Instances (seeds) per side length.
    pub trials: usize,
    pub style: GenStyle,
    pub queries: QueryClasses,
    /// Base seed; per-instance seeds are derived from it.
    pub seed: u64,
    /// When set, deterministically downsample the member and midpoint
    /// classes to at most this many queries each.
    pub sample_cap: Option<usize>,
    /// Safety cap on entries per instance.
    pub max_entries: usize,
    /// Lifts the entry cap and the verify size caps.
    pub allow_large: bool,
}

impl ExperimentConfig {
    pub fn new(d: usize, n_range: NRange) -> Self {
        Self {
            d,
            n_range,
            algorithm: Algorithm::Auto,
            trials: 1,
            style: GenStyle::Strict,
            queries: QueryClasses::all(),
            seed: 0,
            sample_cap: None,
            max_entries: DEFAULT_MAX_ENTRIES,
            allow_large: false,
        }
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.d < 1 {
            return Err(ConfigError::new("d must be at least 1"));
        }
        if self.n_range.is_empty() {
            return Err(ConfigError::new(format!(
                "empty n-range {}",
                self.n_range
            )));
        }
        if self.n_range.lo < 1 {
            return Err(ConfigError::new("side lengths must be at least 1"));
        }
        if self.trials < 1 {
            return Err(ConfigError::new("trials must be at least 1"));
        }
        if self.queries.is_empty() {
            return Err(ConfigError::new("at least one query class is required"));
        }
        match self.algorithm {
            Algorithm::Surface if self.d < 4 => {
                return Err(ConfigError::new(format!(
                    "algorithm `surface` requires d >= 4, got d={}",
                    self.d
                )))
            }
            Algorithm::Slice if self.d < 2 => {
                return Err(ConfigError::new("algorithm `slice` requires d >= 2"))
            }
            _ => {}
        }
        if !self.allow_large {
            for n in self.n_range.values() {
                let entries = (n as u128).pow(self.d as u32);
                if entries > self.max_entries as u128 {
                    return Err(ConfigError::new(format!(
                        "instance n={n} d={} has {entries} entries, above the cap of {} \
                         (lift with allow_large)",
                        self.d, self.max_entries
                    )));
                }
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message}")]
pub struct ConfigError {
    message: String,
}

impl ConfigError {
    pub fn new(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
        }
    }
}
