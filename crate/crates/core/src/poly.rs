//! Dense complex polynomials stored in ascending coefficient order.

use alloc::vec;
use alloc::vec::Vec;
use core::ops::{Add, Index};

use crate::error::{Error, Result};
use crate::math;
use crate::C64;

const ZERO: C64 = C64::new(0.0, 0.0);

/// A polynomial `a_0 + a_1 z + ... + a_q z^q`.
///
/// Trailing coefficients are dropped only when they are exactly zero, so the
/// reported degree is always the index of the stored leading coefficient.
/// The zero polynomial is the single coefficient `0`.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexPolynomial {
    coeffs: Vec<C64>,
}

impl ComplexPolynomial {
    pub fn new(mut coeffs: Vec<C64>) -> Result<Self> {
        if coeffs.iter().any(|c| !math::is_finite(*c)) {
            return Err(Error::NonFinite);
        }
        while coeffs.len() > 1 && *coeffs.last().unwrap() == ZERO {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(ZERO);
        }
        Ok(ComplexPolynomial { coeffs })
    }

    /// Convenience constructor for real coefficients.
    pub fn from_real(coeffs: &[f64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| C64::new(c, 0.0)).collect())
    }

    pub fn zero() -> Self {
        ComplexPolynomial { coeffs: vec![ZERO] }
    }

    pub fn constant(c: C64) -> Result<Self> {
        Self::new(vec![c])
    }

    /// `z^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![ZERO; k + 1];
        coeffs[k] = C64::new(1.0, 0.0);
        ComplexPolynomial { coeffs }
    }

    /// `scale * prod (z - r)`.
    pub fn from_roots(scale: C64, roots: &[C64]) -> Result<Self> {
        let mut coeffs = vec![scale];
        for &r in roots {
            coeffs.push(ZERO);
            for k in (1..coeffs.len()).rev() {
                coeffs[k] = coeffs[k - 1] - r * coeffs[k];
            }
            coeffs[0] = -r * coeffs[0];
        }
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[C64] {
        &self.coeffs
    }

    /// Coefficient of `z^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> C64 {
        self.coeffs.get(k).copied().unwrap_or(ZERO)
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0] == ZERO
    }

    pub fn leading(&self) -> C64 {
        self.coeffs[self.degree()]
    }

    /// Horner evaluation.
    pub fn evaluate(&self, z: C64) -> C64 {
        self.coeffs.iter().rev().fold(ZERO, |acc, &a| acc * z + a)
    }

    /// Horner evaluation with an error-free-transformation correction; about
    /// twice the working precision before the final rounding.
    pub fn evaluate_accurate(&self, z: C64) -> C64 {
        math::horner_compensated(&self.coeffs, z)
    }

    /// `(P(z), P'(z))` in one Horner pass.
    pub fn evaluate_with_derivative(&self, z: C64) -> (C64, C64) {
        let mut p = ZERO;
        let mut dp = ZERO;
        for &a in self.coeffs.iter().rev() {
            dp = dp * z + p;
            p = p * z + a;
        }
        (p, dp)
    }

    /// `sum |a_k| r^k`, the scale that bounds rounding in Horner's scheme.
    pub fn abs_sum(&self, r: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, &a| acc * r + math::abs(a))
    }

    pub fn derivative(&self) -> Self {
        if self.degree() == 0 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &a)| a * k as f64)
            .collect();
        ComplexPolynomial { coeffs }
    }

    /// `Q*(z) = z^q conj(Q(1/conj z))`: reverse the coefficient list and
    /// conjugate each entry.
    pub fn conjugate_reciprocal(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        Self::new(self.coeffs.iter().rev().map(|a| a.conj()).collect())
    }

    /// `z^k * self`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![ZERO; k];
        coeffs.extend_from_slice(&self.coeffs);
        ComplexPolynomial { coeffs }
    }

    pub fn scale(&self, c: C64) -> Self {
        Self::new(self.coeffs.iter().map(|&a| a * c).collect()).unwrap_or_else(|_| Self::zero())
    }

    /// Replace the coefficient of `z^k`, growing the polynomial if needed.
    pub fn with_coeff(&self, k: usize, value: C64) -> Result<Self> {
        let mut coeffs = self.coeffs.clone();
        if k >= coeffs.len() {
            coeffs.resize(k + 1, ZERO);
        }
        coeffs[k] = value;
        Self::new(coeffs)
    }

    /// True when the coefficient list equals its own conjugated reverse.
    pub fn is_self_inversive_exact(&self) -> bool {
        let q = self.degree();
        (0..=q).all(|k| self.coeffs[k] == self.coeffs[q - k].conj())
    }
}

impl Index<usize> for ComplexPolynomial {
    type Output = C64;

    fn index(&self, k: usize) -> &C64 {
        &self.coeffs[k]
    }
}

impl Add for &ComplexPolynomial {
    type Output = ComplexPolynomial;

    fn add(self, rhs: &ComplexPolynomial) -> ComplexPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect();
        // Overflow to infinity collapses to the zero polynomial.
        ComplexPolynomial::new(coeffs).unwrap_or_else(|_| ComplexPolynomial::zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn poly(coeffs: &[C64]) -> ComplexPolynomial {
        ComplexPolynomial::new(coeffs.to_vec()).unwrap()
    }

    #[test]
    fn evaluate_examples() {
        let p = ComplexPolynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 1.0)), c(0.0, 0.0));
        let p = ComplexPolynomial::from_real(&[-2.0, 1.0]).unwrap();
        assert_eq!(p.evaluate(c(0.0, 0.0)), c(-2.0, 0.0));
        let p = poly(&[c(3.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)]);
        assert_eq!(p.evaluate(c(1.0, 1.0)), c(3.0, 4.0));
        assert_eq!(p.evaluate_accurate(c(1.0, 1.0)), c(3.0, 4.0));
    }

    #[test]
    fn derivative_examples() {
        let p = ComplexPolynomial::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        assert_eq!(
            p.derivative(),
            ComplexPolynomial::monomial(4).scale(c(5.0, 0.0))
        );
        assert!(ComplexPolynomial::constant(c(7.0, 1.0))
            .unwrap()
            .derivative()
            .is_zero());
        let p = ComplexPolynomial::from_real(&[1.0, 2.0, 3.0]).unwrap();
        assert_eq!(
            p.derivative(),
            ComplexPolynomial::from_real(&[2.0, 6.0]).unwrap()
        );
    }

    #[test]
    fn conjugate_reciprocal_examples() {
        let q = ComplexPolynomial::from_real(&[-2.0, 1.0]).unwrap();
        assert_eq!(
            q.conjugate_reciprocal().unwrap(),
            ComplexPolynomial::from_real(&[1.0, -2.0]).unwrap()
        );
        let q = ComplexPolynomial::constant(c(2.0, 3.0)).unwrap();
        assert_eq!(q.conjugate_reciprocal().unwrap().coeffs(), &[c(2.0, -3.0)]);
        let q = poly(&[c(3.0, 0.0), c(2.0, 0.0), c(1.0, 1.0)]);
        assert_eq!(
            q.conjugate_reciprocal().unwrap(),
            poly(&[c(1.0, -1.0), c(2.0, 0.0), c(3.0, 0.0)])
        );
        assert_eq!(
            ComplexPolynomial::zero().conjugate_reciprocal(),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn degree_keeps_tiny_coefficients() {
        let p = ComplexPolynomial::from_real(&[1.0, 1e-300, 0.0, 0.0]).unwrap();
        assert_eq!(p.degree(), 1);
        assert_eq!(
            ComplexPolynomial::from_real(&[0.0, 0.0]).unwrap(),
            ComplexPolynomial::zero()
        );
        assert!(ComplexPolynomial::from_real(&[f64::NAN]).is_err());
    }

    #[test]
    fn from_roots_matches_expansion() {
        let p = ComplexPolynomial::from_roots(c(1.0, 0.0), &[c(0.5, 0.0), c(3.0, 0.0)]).unwrap();
        assert_eq!(p, ComplexPolynomial::from_real(&[1.5, -3.5, 1.0]).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = ComplexPolynomial> {
        prop::collection::vec((-3.0..3.0f64, -3.0..3.0f64), 1..12).prop_filter_map(
            "nonzero constant term",
            |v| {
                if v[0].0 == 0.0 && v[0].1 == 0.0 {
                    return None;
                }
                ComplexPolynomial::new(v.into_iter().map(|(a, b)| c(a, b)).collect()).ok()
            },
        )
    }

    proptest! {
        #[test]
        fn conjugate_reciprocal_is_involution(q in arb_poly()) {
            let back = q.conjugate_reciprocal().unwrap().conjugate_reciprocal().unwrap();
            prop_assert_eq!(back, q);
        }

        #[test]
        fn conjugate_reciprocal_preserves_modulus_on_circle(q in arb_poly()) {
            let qs = q.conjugate_reciprocal().unwrap();
            for j in 0..1024 {
                let z = math::cis(2.0 * core::f64::consts::PI * j as f64 / 1024.0);
                let a = math::abs(q.evaluate_accurate(z));
                let b = math::abs(qs.evaluate_accurate(z));
                prop_assert!((a - b).abs() <= 1e-12 * a.max(b));
            }
        }
    }
}
