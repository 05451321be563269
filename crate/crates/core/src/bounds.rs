//! Closed-form error bounds and the intermediate certificates behind them.

use crate::construct::Approximant;
use crate::error::{Error, Result};
use crate::math;

fn check_domain(a: f64, eps: f64) -> Result<()> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain("need 0 < a < 1"));
    }
    if !(eps > 0.0 && eps < 1.0 - a) {
        return Err(Error::Domain("need 0 < eps < 1 - a"));
    }
    Ok(())
}

/// `(a + eps)^(n+1) / (eps (1 - a - eps))`, the uniform error bound on
/// `|z| <= a` for the approximant with `n = floor(N / 2)`.
pub fn error_bound(a: f64, eps: f64, n: usize) -> Result<f64> {
    check_domain(a, eps)?;
    if n < 1 {
        return Err(Error::Domain("need n >= 1"));
    }
    Ok(math::powi(a + eps, n as i32 + 1) / (eps * (1.0 - a - eps)))
}

/// Intermediate bounds on `|z| <= a`. All of them inherit the boundary
/// sampling estimate of `M0`, so they are estimates rather than certified
/// bounds.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CertificateBounds {
    /// `|p| <= |s_n| < M1 / (1 - a)`.
    pub p_sup: f64,
    /// `|R_n| < M0 a^(n+1) / (1 - a)`.
    pub tail: f64,
    /// `|P| > M0 - (M1 a^m + M0 a^(n+1)) / (1 - a)`; positive values
    /// certify that `P` does not vanish on the disk.
    pub poly_lower: f64,
    /// `|p'| < M1 / (eps (1 - a - eps))`.
    pub p_prime: f64,
    /// `|R_n'| < M0 (a + eps)^(n+1) / (eps (1 - a - eps))`.
    pub tail_prime: f64,
    /// Always true: `M0` comes from sampling.
    pub estimated: bool,
}

pub fn certificate_bounds(appr: &Approximant, a: f64, eps: f64) -> Result<CertificateBounds> {
    check_domain(a, eps)?;
    let m0 = appr.m0.ok_or(Error::MissingM0)?;
    let m1 = appr.m1;
    let n1 = appr.n as i32 + 1;
    let denom = eps * (1.0 - a - eps);
    Ok(CertificateBounds {
        p_sup: m1 / (1.0 - a),
        tail: m0 * math::powi(a, n1) / (1.0 - a),
        poly_lower: m0 - (m1 * math::powi(a, appr.m as i32) + m0 * math::powi(a, n1)) / (1.0 - a),
        p_prime: m1 / denom,
        tail_prime: m0 * math::powi(a + eps, n1) / denom,
        estimated: true,
    })
}
