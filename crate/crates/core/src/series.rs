//! Truncated complex power series `c_0 + c_1 z + ... + c_K z^K`.
//!
//! Binary operations truncate to the shorter operand. Nothing is ever
//! extended implicitly; callers pad with [`TruncatedSeries::truncate`] or
//! build a longer series themselves.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::Neg;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedSeries {
    coeffs: Vec<C64>,
}

impl TruncatedSeries {
    /// Series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Empty);
        }
        if coeffs.iter().any(|c| !math::is_finite(*c)) {
            return Err(Error::NonFinite);
        }
        Ok(TruncatedSeries { coeffs })
    }

    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zeros(order: usize) -> Self {
        TruncatedSeries {
            coeffs: vec![ZERO; order + 1],
        }
    }

    /// The Taylor series of a polynomial to the given order (coefficients
    /// beyond the degree are zero, higher ones are dropped).
    pub fn from_polynomial(p: &ComplexPolynomial, order: usize) -> Self {
        TruncatedSeries {
            coeffs: (0..=order).map(|k| p.coeff(k)).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<C64> {
        self.coeffs.get(k).copied()
    }

    /// Keep coefficients up to `order`, padding with zeros if the series is
    /// shorter. Padding asserts that the missing coefficients are zero, so
    /// it is only correct for series that are known to be polynomials.
    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, ZERO);
        TruncatedSeries { coeffs }
    }

    /// Term-by-term antiderivative with zero constant term; the order grows
    /// by one.
    pub fn integrate(&self) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ZERO);
        coeffs.extend(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| c / (k + 1) as f64),
        );
        TruncatedSeries { coeffs }
    }

    /// Term-by-term derivative; the order drops by one (a constant becomes
    /// the order-zero series `[0]`).
    pub fn differentiate(&self) -> Self {
        if self.coeffs.len() == 1 {
            return Self::zeros(0);
        }
        TruncatedSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, &c)| c * k as f64)
                .collect(),
        }
    }

    /// `exp(F)` for `F(0) = 0`, from the recurrence implied by `g' = F' g`:
    /// `(k+1) g_{k+1} = sum_{j=0}^{k} (j+1) F_{j+1} g_{k-j}`.
    pub fn exp(&self) -> Result<Self> {
        if self.coeffs[0] != ZERO {
            return Err(Error::NonzeroConstantTerm);
        }
        let order = self.order();
        let df: Vec<C64> = (0..order)
            .map(|j| self.coeffs[j + 1] * (j + 1) as f64)
            .collect();
        let mut g = Vec::with_capacity(order + 1);
        g.push(C64::new(1.0, 0.0));
        for k in 0..order {
            let acc = (0..=k).fold(ZERO, |acc, j| acc + df[j] * g[k - j]);
            g.push(acc / (k + 1) as f64);
        }
        Self::new(g)
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|k| (0..=k).fold(ZERO, |acc, j| acc + self.coeffs[j] * other.coeffs[k - j]))
            .collect();
        TruncatedSeries { coeffs }
    }

    /// Quotient `self / other` truncated to the smaller order.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let d0 = other.coeffs[0];
        if d0 == ZERO {
            return Err(Error::ZeroConstantTerm);
        }
        let order = self.order().min(other.order());
        let mut q: Vec<C64> = Vec::with_capacity(order + 1);
        for k in 0..=order {
            let acc = (0..k).fold(self.coeffs[k], |acc, j| acc - q[j] * other.coeffs[k - j]);
            q.push(acc / d0);
        }
        Self::new(q)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        TruncatedSeries {
            coeffs: (0..=order)
                .map(|k| self.coeffs[k] - other.coeffs[k])
                .collect(),
        }
    }

    /// Horner evaluation of the truncated sum.
    pub fn evaluate(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &a| acc * z + a)
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        TruncatedSeries {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

/// Taylor coefficients of `P'/P` to the given order, from `P' = e P`:
/// `e_k = [(k+1) p_{k+1} - sum_{j<k} e_j p_{k-j}] / p_0`.
pub fn log_derivative_series(p: &ComplexPolynomial, order: usize) -> Result<TruncatedSeries> {
    let p0 = p.coeff(0);
    if p0 == ZERO {
        return Err(Error::ZeroConstantTerm);
    }
    let mut e: Vec<C64> = Vec::with_capacity(order + 1);
    for k in 0..=order {
        let mut acc = p.coeff(k + 1) * (k + 1) as f64;
        // p_{k-j} vanishes once k - j exceeds the degree.
        let lo = k.saturating_sub(p.degree());
        for j in lo..k {
            acc -= e[j] * p.coeff(k - j);
        }
        e.push(acc / p0);
    }
    TruncatedSeries::new(e)
}
