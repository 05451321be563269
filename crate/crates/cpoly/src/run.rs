//! Batch execution: construct and verify every requested degree.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};

use cpoly_core::verify::{fit_rate_points, verify_approximant, Verification};
use cpoly_core::{construct, error_bound, Error as CoreError, FunctionSpec, VerifyConfig, C64};

use crate::config::{ConfigError, RunConfig};
use crate::report::{Checks, Measured, Rate, Record, RecordError, Report, Status, Summary};

/// Slack added to `ln(a + eps)` in the rate check.
pub const RATE_SLACK: f64 = 0.05;
/// Relative tolerance against the closed form for the zero function.
pub const EXACT_TOL: f64 = 1e-6;

pub const EXIT_PASS: u8 = 0;
pub const EXIT_FAIL: u8 = 1;
pub const EXIT_ERROR: u8 = 2;

/// Plot data for one verified degree.
#[derive(Debug, Clone, PartialEq)]
pub struct PlotData {
    pub degree: usize,
    /// `(angle, |error|)` on `|z| = a`.
    pub profile: Vec<(f64, f64)>,
    pub roots: Vec<C64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunOutput {
    pub report: Report,
    pub plots: Vec<PlotData>,
}

impl RunOutput {
    pub fn exit_code(&self) -> u8 {
        self.report.summary.exit_code
    }

    /// The report as pretty-printed JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        // every field is a plain value or string
        let mut s = serde_json::to_string_pretty(&self.report).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn write_json(&self, path: &Path) -> io::Result<()> {
        std::fs::write(path, self.to_json())
    }

    /// Write `<out>.error.csv` and `<out>.roots.csv`; returns their paths.
    pub fn write_csv(&self, out: &Path) -> io::Result<(PathBuf, PathBuf)> {
        let error_path = sibling(out, "error.csv");
        let roots_path = sibling(out, "roots.csv");

        let mut w = csv::Writer::from_writer(BufWriter::new(File::create(&error_path)?));
        w.write_record(["N", "angle", "abs_error"])?;
        for plot in &self.plots {
            for &(angle, err) in &plot.profile {
                w.serialize((plot.degree, angle, err))?;
            }
        }
        w.flush()?;

        let mut w = csv::Writer::from_writer(BufWriter::new(File::create(&roots_path)?));
        w.write_record(["N", "re", "im", "abs_deviation"])?;
        for plot in &self.plots {
            for z in &plot.roots {
                w.serialize((plot.degree, z.re, z.im, (z.norm() - 1.0).abs()))?;
            }
        }
        w.into_inner().map_err(|e| e.into_error())?.flush()?;
        Ok((error_path, roots_path))
    }
}

/// `out` with `suffix` appended after a dot, keeping any extension.
fn sibling(out: &Path, suffix: &str) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".");
    name.push(suffix);
    PathBuf::from(name)
}

/// `N a^(N-1) / (1 - a^N)`, the sup error for the zero function.
pub fn zero_function_error(degree: usize, a: f64) -> f64 {
    let d = degree as i32;
    degree as f64 * a.powi(d - 1) / (1.0 - a.powi(d))
}

/// Validate `config` and run every degree in ascending order. Failures for
/// individual degrees become records; only an invalid configuration is
/// returned as an error.
pub fn run(config: &RunConfig) -> Result<RunOutput, ConfigError> {
    let f = config.validate()?;
    let cfg = VerifyConfig {
        a: config.a,
        eps: config.eps,
        samples: config.samples,
        root_tol: config.root_tol,
        vanish_tol: config.vanish_tol,
        ..VerifyConfig::default()
    };

    let mut records = Vec::new();
    let mut plots = Vec::new();
    for degree in config.sorted_degrees() {
        let (record, plot) = run_one(&f, degree, &cfg);
        records.push(record);
        plots.extend(plot);
    }

    let summary = summarize(&records, config.a, config.eps);
    Ok(RunOutput {
        report: Report {
            config: config.echo(),
            records,
            summary,
        },
        plots,
    })
}

fn error_record(degree: usize, status: Status, e: &CoreError) -> Record {
    Record {
        degree,
        status,
        measured: None,
        error: Some(RecordError {
            kind: error_kind(e).to_string(),
            message: e.to_string(),
        }),
    }
}

fn run_one(f: &FunctionSpec, degree: usize, cfg: &VerifyConfig) -> (Record, Option<PlotData>) {
    let built =
        error_bound(cfg.a, cfg.eps, degree / 2).and_then(|b| Ok((b, construct(f, degree)?)));
    let (bound, appr) = match built {
        Ok(x) => x,
        Err(e) => return (error_record(degree, Status::ConstructionError, &e), None),
    };
    let v = match verify_approximant(appr, f, bound, cfg) {
        Ok(v) => v,
        Err(e) => return (error_record(degree, Status::VerificationError, &e), None),
    };
    let measured = measure(f, &v);
    let status = if measured.checks.all() {
        Status::Pass
    } else {
        Status::Fail
    };
    let plot = PlotData {
        degree,
        profile: v.profile,
        roots: v.roots.roots,
    };
    let record = Record {
        degree,
        status,
        measured: Some(measured),
        error: None,
    };
    (record, Some(plot))
}

fn measure(f: &FunctionSpec, v: &Verification) -> Measured {
    let r = &v.report;
    let exact_error = matches!(f, FunctionSpec::Zero).then(|| zero_function_error(r.degree, r.a));
    let checks = Checks {
        roots_on_circle: r.roots_ok(),
        vanishing_order: r.vanishing_order_ok,
        error_bound: r.bound_ok(),
        simple_fraction: r.fraction_ok(),
        exact_error: exact_error.map(|e| ((r.sup_error - e) / e).abs() <= EXACT_TOL),
    };
    Measured {
        n: r.n,
        q: v.approximant.q,
        m: v.approximant.m,
        sup_error: r.sup_error,
        bound: r.bound,
        bound_ratio: r.bound_ratio(),
        exact_error,
        max_circle_deviation: r.max_circle_deviation,
        root_tol: r.root_tol,
        vanishing_order_ok: r.vanishing_order_ok,
        first_bad_index: r.first_bad_index,
        fraction_residual: r.fraction_residual,
        samples_used: r.samples_used,
        m1: v.approximant.m1,
        m0: v.approximant.m0,
        checks,
    }
}

fn summarize(records: &[Record], a: f64, eps: f64) -> Summary {
    let count = |s: Status| records.iter().filter(|r| r.status == s).count();
    let points: Vec<(usize, f64)> = records
        .iter()
        .filter_map(|r| r.measured.as_ref())
        .map(|m| (m.n, m.sup_error))
        .collect();
    let limit = (a + eps).ln() + RATE_SLACK;
    let (rate, rate_note) = match fit_rate_points(&points) {
        Ok(fit) => (
            Some(Rate {
                slope: fit.slope,
                intercept: fit.intercept,
                limit,
                ok: fit.slope <= limit,
            }),
            None,
        ),
        Err(e) => (None, Some(e.to_string())),
    };
    let mut s = Summary {
        records: records.len(),
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        construction_errors: count(Status::ConstructionError),
        verification_errors: count(Status::VerificationError),
        rate,
        rate_note,
        exit_code: EXIT_PASS,
    };
    s.exit_code = if s.construction_errors > 0 {
        EXIT_ERROR
    } else if s.failed > 0 || s.verification_errors > 0 || rate.is_some_and(|r| !r.ok) {
        EXIT_FAIL
    } else {
        EXIT_PASS
    };
    s
}

/// Stable machine-readable name of a core error.
pub fn error_kind(e: &CoreError) -> &'static str {
    match e {
        CoreError::Empty => "empty",
        CoreError::NonFinite => "non_finite",
        CoreError::NonzeroConstantTerm => "nonzero_constant_term",
        CoreError::ZeroConstantTerm => "zero_constant_term",
        CoreError::ZeroPolynomial => "zero_polynomial",
        CoreError::DegreeTooSmall { .. } => "degree_too_small",
        CoreError::DidNotConverge(_) => "did_not_converge",
        CoreError::ZeroNearContour { .. } => "zero_near_contour",
        CoreError::Indeterminate => "indeterminate",
        CoreError::OrderTooSmall { .. } => "order_too_small",
        CoreError::NotFoundWithin { .. } => "not_found_within",
        CoreError::PartialSumNotZeroFree { .. } => "partial_sum_not_zero_free",
        CoreError::DenominatorVanishesInDisk => "denominator_vanishes_in_disk",
        CoreError::SeriesUnreliable { .. } => "series_unreliable",
        CoreError::Domain(_) => "domain",
        CoreError::EvaluationFailure => "evaluation_failure",
        CoreError::RootSolverFailed => "root_solver_failed",
        CoreError::ZeroDenominator => "zero_denominator",
        CoreError::InvalidDegree { .. } => "invalid_degree",
        CoreError::InsufficientData => "insufficient_data",
        CoreError::MissingM0 => "missing_m0",
    }
}

/// Write the JSON report to `out`, or to `stdout` when there is no path,
/// and the CSV files when requested.
pub fn emit(output: &RunOutput, config: &RunConfig, stdout: &mut dyn Write) -> io::Result<()> {
    match &config.out {
        Some(path) => {
            output.write_json(path)?;
            if config.csv {
                output.write_csv(path)?;
            }
        }
        None => stdout.write_all(output.to_json().as_bytes())?,
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_form_values() {
        assert!((zero_function_error(4, 0.5) - 8.0 / 15.0).abs() < 1e-15);
        assert!((zero_function_error(20, 0.5) - 3.814_700_903_607_276_5e-5).abs() < 1e-19);
    }

    #[test]
    fn sibling_paths_keep_extension() {
        assert_eq!(
            sibling(Path::new("out/r.json"), "error.csv"),
            PathBuf::from("out/r.json.error.csv")
        );
    }

    #[test]
    fn construction_failure_is_a_record() {
        // s_1 = 1 + z vanishes on the circle, so N = 2 or 3 cannot be built
        let mut c = RunConfig::new("ratio [1] / [1, -0.5]", vec![3, 8]);
        c.samples = 256;
        let out = run(&c).unwrap();
        let r = &out.report.records;
        assert_eq!(r[0].status, Status::ConstructionError);
        assert_eq!(
            r[0].error.as_ref().unwrap().kind,
            "partial_sum_not_zero_free"
        );
        assert_eq!(r[1].status, Status::Pass);
        assert_eq!(out.exit_code(), EXIT_ERROR);
        assert_eq!(out.plots.len(), 1);
        assert!(out.report.summary.rate.is_none());
        assert!(out.report.summary.rate_note.is_some());
    }

    #[test]
    fn tight_root_tolerance_fails_verification() {
        let mut c = RunConfig::new("const 1", vec![16]);
        c.root_tol = Some(1e-300);
        let out = run(&c).unwrap();
        let rec = &out.report.records[0];
        assert_eq!(rec.status, Status::Fail);
        assert!(!rec.measured.as_ref().unwrap().checks.roots_on_circle);
        assert_eq!(out.exit_code(), EXIT_FAIL);
    }
}
