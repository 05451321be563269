//! Descriptions of the bounded analytic function being approximated.

use alloc::vec;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::quadrature::GaussLegendre;
use crate::series::TruncatedSeries;
use crate::winding::is_zero_free_closed_disk;
use crate::C64;

/// Largest radius at which an [`FunctionSpec::Explicit`] series is trusted.
pub const EXPLICIT_RADIUS: f64 = 0.95;

/// `u / v` with `v` certified zero-free on the closed unit disk.
#[derive(Debug, Clone, PartialEq)]
pub struct Rational {
    u: ComplexPolynomial,
    v: ComplexPolynomial,
}

impl Rational {
    pub fn numerator(&self) -> &ComplexPolynomial {
        &self.u
    }

    pub fn denominator(&self) -> &ComplexPolynomial {
        &self.v
    }
}

/// A bounded analytic function on the unit disk, given either in closed
/// form or by its Taylor coefficients at the origin.
#[derive(Debug, Clone, PartialEq)]
pub enum FunctionSpec {
    Zero,
    Constant(C64),
    Rational(Rational),
    /// A truncated Taylor series. Only its own coefficients are known, so
    /// point values are restricted to `|z| <= 0.95` where the missing tail
    /// is assumed negligible.
    Explicit(TruncatedSeries),
}

impl FunctionSpec {
    /// `u / v`, rejecting denominators with a zero in the closed unit disk.
    pub fn rational(u: ComplexPolynomial, v: ComplexPolynomial) -> Result<Self> {
        if v.is_zero() || !is_zero_free_closed_disk(&v)? {
            return Err(Error::DenominatorVanishesInDisk);
        }
        Ok(FunctionSpec::Rational(Rational { u, v }))
    }

    /// Highest Taylor order this description can supply, `None` if
    /// unlimited.
    pub fn max_order(&self) -> Option<usize> {
        match self {
            FunctionSpec::Explicit(s) => Some(s.order()),
            _ => None,
        }
    }

    /// Taylor coefficients `f_0 .. f_order` at the origin.
    pub fn taylor(&self, order: usize) -> Result<TruncatedSeries> {
        match self {
            FunctionSpec::Zero => Ok(TruncatedSeries::zeros(order)),
            FunctionSpec::Constant(c) => {
                let mut coeffs = vec![C64::new(0.0, 0.0); order + 1];
                coeffs[0] = *c;
                TruncatedSeries::new(coeffs)
            }
            FunctionSpec::Rational(r) => TruncatedSeries::from_polynomial(&r.u, order)
                .div(&TruncatedSeries::from_polynomial(&r.v, order)),
            FunctionSpec::Explicit(s) => {
                if order > s.order() {
                    return Err(Error::OrderTooSmall {
                        requested: order,
                        available: s.order(),
                    });
                }
                Ok(s.truncate(order))
            }
        }
    }

    /// `f(z)`.
    pub fn evaluate(&self, z: C64) -> Result<C64> {
        let r = math::abs(z);
        match self {
            FunctionSpec::Zero => Ok(C64::new(0.0, 0.0)),
            FunctionSpec::Constant(c) => Ok(*c),
            FunctionSpec::Rational(q) => {
                if r > 1.0 {
                    return Err(Error::EvaluationFailure);
                }
                let den = q.v.evaluate_accurate(z);
                let val = q.u.evaluate_accurate(z) / den;
                if math::is_finite(val) {
                    Ok(val)
                } else {
                    Err(Error::EvaluationFailure)
                }
            }
            FunctionSpec::Explicit(s) => {
                if r > EXPLICIT_RADIUS {
                    return Err(Error::SeriesUnreliable { radius: r });
                }
                Ok(s.evaluate(z))
            }
        }
    }

    /// `int_0^z f`, the logarithm of `g` normalized by `g(0) = 1`.
    pub fn log_g(&self, z: C64) -> Result<C64> {
        self.log_g_with(z, &GaussLegendre::new(16, 16))
    }

    /// `g(z) = exp(int_0^z f)`.
    pub fn g(&self, z: C64) -> Result<C64> {
        self.log_g(z).map(|w| w.exp())
    }

    pub(crate) fn log_g_with(&self, z: C64, rule: &GaussLegendre) -> Result<C64> {
        match self {
            FunctionSpec::Zero => Ok(C64::new(0.0, 0.0)),
            FunctionSpec::Constant(c) => Ok(c * z),
            FunctionSpec::Rational(_) => {
                // No elementary antiderivative in general: integrate along
                // the segment [0, z].
                let mut failed = false;
                let integral = rule.integrate(|t| match self.evaluate(z * t) {
                    Ok(v) => v,
                    Err(_) => {
                        failed = true;
                        C64::new(0.0, 0.0)
                    }
                });
                if failed {
                    return Err(Error::EvaluationFailure);
                }
                Ok(integral * z)
            }
            FunctionSpec::Explicit(s) => {
                let r = math::abs(z);
                if r > EXPLICIT_RADIUS {
                    return Err(Error::SeriesUnreliable { radius: r });
                }
                Ok(s.integrate().evaluate(z))
            }
        }
    }
}
