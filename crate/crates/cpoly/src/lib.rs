//! Batch front end for `cpoly-core`: parse a function description, construct
//! and verify approximants for a list of degrees, and write a JSON report
//! plus optional CSV plot data.

pub mod config;
pub mod report;
pub mod run;
pub mod spec;

pub use config::{parse_degrees, ConfigError, RunConfig};
pub use report::{Record, Report, Status, Summary};
pub use run::{emit, run, RunOutput};
pub use spec::{parse_spec, SpecError};
