//! Zero counting by the argument principle.

use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::C64;

/// Margin beyond the unit circle at which zero-freeness of the closed disk
/// is certified.
pub const CLOSED_DISK_MARGIN: f64 = 1e-6;

/// Contour samples are rejected when `min |P| < GUARD * max |P|`.
pub const CONTOUR_GUARD: f64 = 1e-9;

/// Sample count used to certify zero-freeness for a polynomial of degree `q`.
pub fn default_samples(q: usize) -> usize {
    8192.max(64 * q)
}

/// Number of zeros of `p` inside `|z| < radius`, as the winding number of
/// `p` along `samples` equally spaced points of the circle.
pub fn count_zeros_in_disk(p: &ComplexPolynomial, radius: f64, samples: usize) -> Result<usize> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if samples < 3 || !(radius > 0.0) {
        return Err(Error::Domain("need radius > 0 and at least 3 samples"));
    }
    let point = |j: usize| math::cis(2.0 * PI * j as f64 / samples as f64) * radius;
    let first = p.evaluate_accurate(point(0));
    let mut prev = first;
    let (mut lo, mut hi) = (math::abs(first), math::abs(first));
    let mut total = 0.0;
    for j in 1..=samples {
        let cur = if j == samples {
            first
        } else {
            p.evaluate_accurate(point(j))
        };
        let m = math::abs(cur);
        lo = lo.min(m);
        hi = hi.max(m);
        // principal argument of cur / prev
        total += math::arg(cur * prev.conj());
        prev = cur;
    }
    if !(lo >= CONTOUR_GUARD * hi) || hi == 0.0 {
        return Err(Error::ZeroNearContour { radius });
    }
    let winding = math::round(total / (2.0 * PI));
    Ok(winding.max(0.0) as usize)
}

fn min_max_on_circle(p: &ComplexPolynomial, radius: f64, samples: usize) -> (f64, f64) {
    (0..samples)
        .map(|j| {
            math::abs(p.evaluate_accurate(math::cis(2.0 * PI * j as f64 / samples as f64) * radius))
        })
        .fold((f64::INFINITY, 0.0), |(lo, hi), m| (lo.min(m), hi.max(m)))
}

/// Whether `p` has no zeros in the closed unit disk.
///
/// Rejects immediately if `|p|` nearly vanishes somewhere on `|z| = 1`;
/// otherwise counts zeros inside `|z| < 1 + 1e-6`, retrying at
/// `1 + 0.5e-6` if a zero sits on that contour.
pub fn is_zero_free_closed_disk(p: &ComplexPolynomial) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.degree() == 0 {
        return Ok(true);
    }
    if p.coeff(0) == C64::new(0.0, 0.0) {
        return Ok(false);
    }
    let samples = default_samples(p.degree());
    let (lo, hi) = min_max_on_circle(p, 1.0, samples);
    if lo < CONTOUR_GUARD * hi {
        return Ok(false);
    }
    for radius in [1.0 + CLOSED_DISK_MARGIN, 1.0 + 0.5 * CLOSED_DISK_MARGIN] {
        match count_zeros_in_disk(p, radius, samples) {
            Ok(count) => return Ok(count == 0),
            Err(Error::ZeroNearContour { .. }) => continue,
            Err(e) => return Err(e),
        }
    }
    Err(Error::Indeterminate)
}
