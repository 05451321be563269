//! JSON report records.
//!
//! Finite floats are written as JSON numbers in shortest round-trip form.
//! JSON has no infinities, so non-finite values are written as the strings
//! `"inf"`, `"-inf"` and `"nan"` rather than `null`.

use serde::{Deserialize, Serialize};

use crate::config::ConfigEcho;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub config: ConfigEcho,
    pub records: Vec<Record>,
    pub summary: Summary,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    ConstructionError,
    VerificationError,
}

/// One degree. Exactly one of `measured` and `error` is present.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    #[serde(rename = "N")]
    pub degree: usize,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub measured: Option<Measured>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<RecordError>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordError {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measured {
    pub n: usize,
    pub q: usize,
    pub m: usize,
    #[serde(with = "real")]
    pub sup_error: f64,
    #[serde(with = "real")]
    pub bound: f64,
    #[serde(with = "real")]
    pub bound_ratio: f64,
    /// `N a^(N-1) / (1 - a^N)`, only for the zero function.
    #[serde(default, with = "real_opt", skip_serializing_if = "Option::is_none")]
    pub exact_error: Option<f64>,
    #[serde(with = "real")]
    pub max_circle_deviation: f64,
    #[serde(with = "real")]
    pub root_tol: f64,
    pub vanishing_order_ok: bool,
    pub first_bad_index: Option<usize>,
    #[serde(with = "real")]
    pub fraction_residual: f64,
    pub samples_used: usize,
    #[serde(with = "real")]
    pub m1: f64,
    #[serde(default, with = "real_opt")]
    pub m0: Option<f64>,
    pub checks: Checks,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Checks {
    pub roots_on_circle: bool,
    pub vanishing_order: bool,
    /// Vacuously true below degree 16.
    pub error_bound: bool,
    pub simple_fraction: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub exact_error: Option<bool>,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.roots_on_circle
            && self.vanishing_order
            && self.error_bound
            && self.simple_fraction
            && self.exact_error != Some(false)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub records: usize,
    pub passed: usize,
    pub failed: usize,
    pub construction_errors: usize,
    pub verification_errors: usize,
    pub rate: Option<Rate>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rate_note: Option<String>,
    pub exit_code: u8,
}

/// Least-squares fit of `ln(sup_error)` against `n`, checked against
/// `ln(a + eps) + 0.05`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Rate {
    #[serde(with = "real")]
    pub slope: f64,
    #[serde(with = "real")]
    pub intercept: f64,
    #[serde(with = "real")]
    pub limit: f64,
    pub ok: bool,
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum Repr {
    Number(f64),
    Text(String),
}

fn to_repr(x: f64) -> Repr {
    if x.is_finite() {
        Repr::Number(x)
    } else if x.is_nan() {
        Repr::Text("nan".into())
    } else if x > 0.0 {
        Repr::Text("inf".into())
    } else {
        Repr::Text("-inf".into())
    }
}

fn from_repr<E: serde::de::Error>(r: Repr) -> Result<f64, E> {
    match r {
        Repr::Number(x) => Ok(x),
        Repr::Text(t) => match t.as_str() {
            "inf" => Ok(f64::INFINITY),
            "-inf" => Ok(f64::NEG_INFINITY),
            "nan" => Ok(f64::NAN),
            other => Err(E::custom(format!("invalid number {other:?}"))),
        },
    }
}

pub mod real {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
        super::to_repr(*x).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<f64, D::Error> {
        super::from_repr(super::Repr::deserialize(d)?)
    }
}

pub mod real_opt {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(x: &Option<f64>, s: S) -> Result<S::Ok, S::Error> {
        x.map(super::to_repr).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Option<f64>, D::Error> {
        Option::<super::Repr>::deserialize(d)?
            .map(super::from_repr)
            .transpose()
    }
}
