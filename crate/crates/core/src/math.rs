//! Scalar helpers that work without `std`, plus error-free transformations
//! used by the compensated polynomial evaluator.

use crate::C64;

pub(crate) fn sqrt(x: f64) -> f64 {
    libm::sqrt(x)
}

pub(crate) fn exp(x: f64) -> f64 {
    libm::exp(x)
}

pub(crate) fn ln(x: f64) -> f64 {
    libm::log(x)
}

pub(crate) fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

pub(crate) fn round(x: f64) -> f64 {
    libm::round(x)
}

pub(crate) fn cis(theta: f64) -> C64 {
    let (s, c) = libm::sincos(theta);
    C64::new(c, s)
}

pub(crate) fn abs(z: C64) -> f64 {
    libm::hypot(z.re, z.im)
}

pub(crate) fn arg(z: C64) -> f64 {
    libm::atan2(z.im, z.re)
}

pub(crate) fn is_finite(z: C64) -> bool {
    z.re.is_finite() && z.im.is_finite()
}

/// `a + b = s + e` exactly (Knuth).
#[inline]
fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn split(a: f64) -> (f64, f64) {
    // Veltkamp splitting constant 2^27 + 1.
    const FACTOR: f64 = 134_217_729.0;
    let c = FACTOR * a;
    let hi = c - (c - a);
    (hi, a - hi)
}

/// `a * b = p + e` exactly (Dekker), barring over/underflow.
#[inline]
fn two_product(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    let (ah, al) = split(a);
    let (bh, bl) = split(b);
    let e = al * bl - (((p - ah * bh) - al * bh) - ah * bl);
    (p, e)
}

#[inline]
fn two_sum_complex(a: C64, b: C64) -> (C64, C64) {
    let (sr, er) = two_sum(a.re, b.re);
    let (si, ei) = two_sum(a.im, b.im);
    (C64::new(sr, si), C64::new(er, ei))
}

/// `a * b = p + e` where the error `e` is the exact sum of three complex
/// terms; they are returned already added in floating point since only the
/// correction term needs them.
#[inline]
fn two_product_complex(a: C64, b: C64) -> (C64, C64) {
    let (p1, e1) = two_product(a.re, b.re);
    let (p2, e2) = two_product(a.im, b.im);
    let (p3, e3) = two_product(a.re, b.im);
    let (p4, e4) = two_product(a.im, b.re);
    let (re, e5) = two_sum(p1, -p2);
    let (im, e6) = two_sum(p3, p4);
    (C64::new(re, im), C64::new(e1 - e2 + e5, e3 + e4 + e6))
}

/// Compensated Horner evaluation of `sum coeffs[k] z^k`.
///
/// The result is as accurate as if computed in twice the working precision
/// and then rounded, which keeps modulus comparisons on the unit circle
/// meaningful for moderately ill-conditioned polynomials.
pub(crate) fn horner_compensated(coeffs: &[C64], z: C64) -> C64 {
    let mut iter = coeffs.iter().rev();
    let Some(&lead) = iter.next() else {
        return C64::new(0.0, 0.0);
    };
    let mut s = lead;
    let mut corr = C64::new(0.0, 0.0);
    for &a in iter {
        let (p, pe) = two_product_complex(s, z);
        let (t, se) = two_sum_complex(p, a);
        s = t;
        corr = corr * z + (pe + se);
    }
    s + corr
}
