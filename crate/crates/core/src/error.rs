use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use crate::roots::RootSet;
use crate::C64;

/// Everything that can go wrong in the construction and verification
/// pipeline.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// A coefficient list was empty.
    Empty,
    /// A coefficient was NaN or infinite.
    NonFinite,
    /// `exp` of a series needs a vanishing constant term.
    NonzeroConstantTerm,
    /// A logarithmic derivative (or series quotient) needs a nonzero
    /// constant term in the denominator.
    ZeroConstantTerm,
    /// The zero polynomial was passed where a nonzero one is required.
    ZeroPolynomial,
    /// Root finding needs degree at least one.
    DegreeTooSmall { degree: usize },
    /// Aberth iteration ran out of iterations; the best iterate is attached.
    DidNotConverge(Box<RootSet>),
    /// A sampled contour passes too close to a zero for the winding number
    /// to be trusted.
    ZeroNearContour { radius: f64 },
    /// Zero-freeness could not be decided at any of the probe radii.
    Indeterminate,
    /// More series coefficients were requested than are available.
    OrderTooSmall { requested: usize, available: usize },
    /// No `n <= n_max` produced a partial sum without zeros in the closed
    /// disk.
    NotFoundWithin { n_max: usize },
    /// The partial sum of `g` has zeros in the closed unit disk; the roots
    /// found are attached.
    PartialSumNotZeroFree { n: usize, roots: Vec<C64> },
    /// The denominator of a rational function has a zero in the closed
    /// unit disk.
    DenominatorVanishesInDisk,
    /// A truncated series was asked for a value outside its trusted radius.
    SeriesUnreliable { radius: f64 },
    /// A real parameter is out of its admissible range.
    Domain(&'static str),
    /// The function could not be evaluated at a requested point.
    EvaluationFailure,
    /// Root finding needed by a check failed to converge.
    RootSolverFailed,
    /// A denominator evaluated to zero (or a non-finite value).
    ZeroDenominator,
    /// The polynomial degree requested for a construction is too small.
    InvalidDegree { degree: usize },
    /// Rate fitting needs at least three points with distinct `n`.
    InsufficientData,
    /// The approximant carries no `M0` estimate.
    MissingM0,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Empty => write!(f, "empty coefficient list"),
            Error::NonFinite => write!(f, "non-finite coefficient"),
            Error::NonzeroConstantTerm => write!(f, "series has a nonzero constant term"),
            Error::ZeroConstantTerm => write!(f, "constant term is zero"),
            Error::ZeroPolynomial => write!(f, "zero polynomial"),
            Error::DegreeTooSmall { degree } => {
                write!(
                    f,
                    "polynomial degree {degree} is too small for root finding"
                )
            }
            Error::DidNotConverge(best) => write!(
                f,
                "root iteration did not converge (max residual {:e})",
                best.max_residual()
            ),
            Error::ZeroNearContour { radius } => {
                write!(f, "a zero lies too close to the circle |z| = {radius}")
            }
            Error::Indeterminate => write!(f, "zero-freeness of the closed disk is indeterminate"),
            Error::OrderTooSmall {
                requested,
                available,
            } => write!(
                f,
                "series order {requested} requested but only {available} available"
            ),
            Error::NotFoundWithin { n_max } => {
                write!(f, "no zero-free partial sum found for n <= {n_max}")
            }
            Error::PartialSumNotZeroFree { n, roots } => {
                write!(
                f,
                "partial sum s_{n} has zeros in the closed unit disk ({} roots found); increase N",
                roots.iter().filter(|r| crate::math::abs(**r) <= 1.0).count()
            )
            }
            Error::DenominatorVanishesInDisk => {
                write!(f, "denominator vanishes in the closed unit disk")
            }
            Error::SeriesUnreliable { radius } => {
                write!(f, "truncated series is not trusted at radius {radius}")
            }
            Error::Domain(what) => write!(f, "domain error: {what}"),
            Error::EvaluationFailure => write!(f, "function evaluation failed"),
            Error::RootSolverFailed => write!(f, "root solver failed"),
            Error::ZeroDenominator => write!(f, "denominator vanished at a sample point"),
            Error::InvalidDegree { degree } => write!(f, "degree N = {degree} must be at least 2"),
            Error::InsufficientData => {
                write!(f, "need at least three reports with distinct n")
            }
            Error::MissingM0 => write!(f, "no M0 estimate available for this function"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
