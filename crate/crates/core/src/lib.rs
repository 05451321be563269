//! Logarithmic derivatives of C-polynomials (all zeros on the unit circle)
//! as approximants of bounded analytic functions on the unit disk.
//!
//! For `f` analytic and bounded on `|z| < 1`, let `g = exp(int_0^z f)` with
//! partial sums `s_n`. When `s_n` has no zeros in the closed disk,
//! `P = s_n + z^m s_n*` has all of its zeros on `|z| = 1`, and for
//! `n = floor(N/2)`, `m = N - deg s_n`, the fraction `P'/P` approximates `f`
//! on `|z| <= a` at the rate `(a + eps)^(n+1) / (eps (1 - a - eps))`.
//!
//! The crate is `no_std` and needs only `alloc`. Modules:
//!
//! * [`series`]: truncated power series (`integrate`, `exp`, products,
//!   `P'/P` expansion).
//! * [`poly`], [`roots`], [`winding`]: dense polynomials, Aberth–Ehrlich
//!   root finding and argument-principle zero counting.
//! * [`function`], [`construct`], [`bounds`]: function descriptions, the
//!   construction of `P` and the closed-form bounds.
//! * [`verify`]: measured errors and checks of every structural claim.

#![no_std]

extern crate alloc;

pub mod bounds;
pub mod construct;
pub mod error;
pub mod function;
mod math;
pub mod poly;
pub mod quadrature;
pub mod roots;
pub mod series;
pub mod verify;
pub mod winding;

pub use num_complex::Complex64 as C64;

pub use bounds::{certificate_bounds, error_bound, CertificateBounds};
pub use construct::{
    assemble, construct, estimate_m0, find_min_n0, partial_sum, taylor_g, Approximant,
};
pub use error::{Error, Result};
pub use function::FunctionSpec;
pub use poly::ComplexPolynomial;
pub use roots::{roots_aberth, RootSet};
pub use series::{log_derivative_series, TruncatedSeries};
pub use verify::{
    check_phi_modulus, check_roots_on_circle, check_vanishing_order, fit_rate, measure_sup_error,
    simple_fraction_residual, verify, ErrorReport, RateFit, Verification, VerifyConfig,
};
pub use winding::{count_zeros_in_disk, is_zero_free_closed_disk};
