//! Run configuration and its validation.

use std::path::PathBuf;

use cpoly_core::FunctionSpec;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::spec::{parse_spec, SpecError};

pub const DEFAULT_A: f64 = 0.5;
pub const DEFAULT_EPS: f64 = cpoly_core::verify::DEFAULT_EPS;
pub const DEFAULT_SAMPLES: usize = 4096;
pub const MIN_SAMPLES: usize = 256;

#[derive(Debug, Error, PartialEq)]
pub enum ConfigError {
    #[error("invalid function: {0}")]
    Spec(#[from] SpecError),
    #[error("a = {0} must satisfy 0 < a < 1")]
    InvalidA(f64),
    #[error("eps = {eps} must satisfy 0 < eps < 1 - a = {}", 1.0 - a)]
    InvalidEps { eps: f64, a: f64 },
    #[error("degree N = {0} must be at least 2")]
    DegreeTooSmall(usize),
    #[error("empty degree list")]
    EmptyDegreeList,
    #[error("cannot parse degree list {text:?}: {reason}")]
    BadDegreeList { text: String, reason: String },
    #[error("samples = {0} is below the minimum of {MIN_SAMPLES}")]
    TooFewSamples(usize),
    #[error("{name} = {value} must be positive and finite")]
    InvalidTolerance { name: &'static str, value: f64 },
    #[error("CSV output needs an output path")]
    CsvWithoutOut,
}

/// Everything a batch run needs. `function` is kept as text so the report
/// can echo it verbatim.
#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub function: String,
    pub degrees: Vec<usize>,
    pub a: f64,
    pub eps: f64,
    pub samples: usize,
    /// `None` selects the degree-dependent default.
    pub root_tol: Option<f64>,
    pub vanish_tol: f64,
    pub out: Option<PathBuf>,
    pub csv: bool,
}

impl RunConfig {
    /// A configuration with default parameters.
    pub fn new(function: &str, degrees: Vec<usize>) -> Self {
        RunConfig {
            function: function.to_string(),
            degrees,
            a: DEFAULT_A,
            eps: DEFAULT_EPS,
            samples: DEFAULT_SAMPLES,
            root_tol: None,
            vanish_tol: cpoly_core::verify::DEFAULT_VANISH_TOL,
            out: None,
            csv: false,
        }
    }

    /// Check every invariant and parse the function.
    pub fn validate(&self) -> Result<FunctionSpec, ConfigError> {
        if !(self.a > 0.0 && self.a < 1.0) {
            return Err(ConfigError::InvalidA(self.a));
        }
        if !(self.eps > 0.0 && self.eps < 1.0 - self.a) {
            return Err(ConfigError::InvalidEps {
                eps: self.eps,
                a: self.a,
            });
        }
        if self.degrees.is_empty() {
            return Err(ConfigError::EmptyDegreeList);
        }
        if let Some(&d) = self.degrees.iter().find(|&&d| d < 2) {
            return Err(ConfigError::DegreeTooSmall(d));
        }
        if self.samples < MIN_SAMPLES {
            return Err(ConfigError::TooFewSamples(self.samples));
        }
        if let Some(t) = self.root_tol {
            check_tol("root_tol", t)?;
        }
        check_tol("vanish_tol", self.vanish_tol)?;
        if self.csv && self.out.is_none() {
            return Err(ConfigError::CsvWithoutOut);
        }
        Ok(parse_spec(&self.function)?)
    }

    /// Degrees in run order: ascending, without repeats.
    pub fn sorted_degrees(&self) -> Vec<usize> {
        let mut d = self.degrees.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn echo(&self) -> ConfigEcho {
        ConfigEcho {
            function: self.function.clone(),
            degrees: self.sorted_degrees(),
            a: self.a,
            eps: self.eps,
            samples: self.samples,
            root_tol: self.root_tol,
            vanish_tol: self.vanish_tol,
        }
    }
}

fn check_tol(name: &'static str, value: f64) -> Result<(), ConfigError> {
    if value > 0.0 && value.is_finite() {
        Ok(())
    } else {
        Err(ConfigError::InvalidTolerance { name, value })
    }
}

/// The parameters that determine a report, as written into it.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfigEcho {
    pub function: String,
    #[serde(rename = "N")]
    pub degrees: Vec<usize>,
    pub a: f64,
    pub eps: f64,
    pub samples: usize,
    pub root_tol: Option<f64>,
    pub vanish_tol: f64,
}

/// Parse `4,8,20`, `6..32 step 2` or a comma list mixing both. Ranges are
/// inclusive; the step defaults to 1.
pub fn parse_degrees(text: &str) -> Result<Vec<usize>, ConfigError> {
    let bad = |reason: &str| ConfigError::BadDegreeList {
        text: text.to_string(),
        reason: reason.to_string(),
    };
    let int = |s: &str| {
        s.trim()
            .parse::<usize>()
            .map_err(|_| bad(&format!("{:?} is not an integer", s.trim())))
    };
    let mut out = Vec::new();
    for item in text.split(',') {
        let item = item.trim();
        if item.is_empty() {
            return Err(bad("empty item"));
        }
        let Some((lo, rest)) = item.split_once("..") else {
            out.push(int(item)?);
            continue;
        };
        let (hi, step) = match rest.split_once("step") {
            Some((hi, step)) => (int(hi)?, int(step)?),
            None => (int(rest)?, 1),
        };
        let lo = int(lo)?;
        if step == 0 {
            return Err(bad("step must be positive"));
        }
        if hi < lo {
            return Err(bad("range end is below its start"));
        }
        out.extend((lo..=hi).step_by(step));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_lists() {
        assert_eq!(parse_degrees("4,8,20").unwrap(), vec![4, 8, 20]);
        assert_eq!(parse_degrees(" 4 , 8 ").unwrap(), vec![4, 8]);
        assert_eq!(
            parse_degrees("6..32 step 2").unwrap(),
            (6..=32).step_by(2).collect::<Vec<_>>()
        );
        assert_eq!(parse_degrees("8..20 step 5").unwrap(), vec![8, 13, 18]);
        assert_eq!(parse_degrees("2..4").unwrap(), vec![2, 3, 4]);
        assert_eq!(parse_degrees("3, 10..12").unwrap(), vec![3, 10, 11, 12]);
        for bad in [
            "",
            "4,,8",
            "x",
            "8..4",
            "2..8 step 0",
            "2..8 stride 2",
            "-4",
        ] {
            assert!(
                matches!(parse_degrees(bad), Err(ConfigError::BadDegreeList { .. })),
                "{bad:?}"
            );
        }
    }

    #[test]
    fn validation() {
        let ok = RunConfig::new("zero", vec![4, 8]);
        assert_eq!(ok.validate(), Ok(FunctionSpec::Zero));

        let with = |edit: fn(&mut RunConfig)| {
            let mut c = ok.clone();
            edit(&mut c);
            c.validate()
        };
        assert_eq!(with(|c| c.a = 1.2), Err(ConfigError::InvalidA(1.2)));
        assert_eq!(with(|c| c.a = 0.0), Err(ConfigError::InvalidA(0.0)));
        assert!(with(|c| c.a = f64::NAN).is_err());
        assert_eq!(
            with(|c| c.eps = 0.5),
            Err(ConfigError::InvalidEps { eps: 0.5, a: 0.5 })
        );
        assert_eq!(
            with(|c| c.degrees = vec![4, 1]),
            Err(ConfigError::DegreeTooSmall(1))
        );
        assert_eq!(
            with(|c| c.degrees.clear()),
            Err(ConfigError::EmptyDegreeList)
        );
        assert_eq!(
            with(|c| c.samples = 255),
            Err(ConfigError::TooFewSamples(255))
        );
        assert!(with(|c| c.root_tol = Some(0.0)).is_err());
        assert!(with(|c| c.vanish_tol = f64::INFINITY).is_err());
        assert_eq!(with(|c| c.csv = true), Err(ConfigError::CsvWithoutOut));
        assert!(matches!(
            with(|c| c.function = "ratio [1] / [0.5, -1]".into()),
            Err(ConfigError::Spec(SpecError::DenominatorVanishesInDisk))
        ));
    }

    #[test]
    fn echo_sorts_and_dedups() {
        let c = RunConfig::new("zero", vec![20, 4, 8, 4]);
        assert_eq!(c.echo().degrees, vec![4, 8, 20]);
    }
}
