use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;
use cpoly::config::{DEFAULT_A, DEFAULT_EPS, DEFAULT_SAMPLES};
use cpoly::run::EXIT_ERROR;
use cpoly::{emit, parse_degrees, run, RunConfig};

/// Construct polynomials with all zeros on the unit circle whose logarithmic
/// derivatives approximate f, and verify them.
#[derive(Debug, Parser)]
#[command(name = "cpoly", version)]
struct Args {
    /// Function: zero | const <c> | ratio [u..] / [v..] | coeffs [f..]
    #[arg(long)]
    function: String,
    /// Degrees: a comma list and/or ranges such as "6..32 step 2"
    #[arg(long = "N", value_name = "LIST")]
    degrees: String,
    /// Radius of the disk on which the error is measured
    #[arg(long, default_value_t = DEFAULT_A)]
    a: f64,
    /// Margin in the error bound
    #[arg(long, default_value_t = DEFAULT_EPS)]
    eps: f64,
    /// Minimum number of samples on |z| = a
    #[arg(long, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
    /// JSON report path (stdout if omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Also write <out>.error.csv and <out>.roots.csv
    #[arg(long)]
    csv: bool,
    /// Allowed ||z_k| - 1| (default depends on N)
    #[arg(long)]
    root_tol: Option<f64>,
    /// Allowed size of the low-order Taylor coefficients of P'/P - f
    #[arg(long, default_value_t = cpoly_core::verify::DEFAULT_VANISH_TOL)]
    vanish_tol: f64,
}

fn execute(args: Args) -> anyhow::Result<u8> {
    let config = RunConfig {
        function: args.function,
        degrees: parse_degrees(&args.degrees)?,
        a: args.a,
        eps: args.eps,
        samples: args.samples,
        root_tol: args.root_tol,
        vanish_tol: args.vanish_tol,
        out: args.out,
        csv: args.csv,
    };
    let output = run(&config)?;
    emit(&output, &config, &mut std::io::stdout().lock()).context("writing report")?;
    Ok(output.exit_code())
}

fn main() -> ExitCode {
    match execute(Args::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}
