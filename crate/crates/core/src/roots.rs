//! Simultaneous root finding with the Aberth–Ehrlich iteration.

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::C64;

/// Default step-size tolerance.
pub const DEFAULT_TOL: f64 = 1e-13;
/// Default iteration cap.
pub const DEFAULT_MAX_ITERS: usize = 200;
/// Sweeps at the rounding level after which a root counts as converged.
const STALL_SWEEPS: usize = 20;

/// Approximate roots of a polynomial, repeated by multiplicity.
#[derive(Debug, Clone, PartialEq)]
pub struct RootSet {
    pub roots: Vec<C64>,
    /// `|P(root)|`, evaluated with compensated Horner.
    pub residuals: Vec<f64>,
    pub converged: bool,
    pub iterations: usize,
}

impl RootSet {
    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().copied().fold(0.0, f64::max)
    }

    /// `max_k ||z_k| - 1|`.
    pub fn max_circle_deviation(&self) -> f64 {
        self.roots
            .iter()
            .map(|&z| (math::abs(z) - 1.0).abs())
            .fold(0.0, f64::max)
    }
}

/// `1 + max_k |a_k / a_q|`; every root lies inside this radius.
pub fn cauchy_bound(p: &ComplexPolynomial) -> f64 {
    let lead = math::abs(p.leading());
    let q = p.degree();
    1.0 + p.coeffs()[..q]
        .iter()
        .map(|&a| math::abs(a) / lead)
        .fold(0.0, f64::max)
}

/// `2 max_k |a_{q-k} / a_q|^(1/k)`, another upper bound on the root moduli.
/// Far tighter than [`cauchy_bound`] when the leading coefficient is small
/// (partial sums of `exp` have `|a_q| = 1/q!`).
pub fn fujiwara_bound(p: &ComplexPolynomial) -> f64 {
    let lead = math::abs(p.leading());
    let q = p.degree();
    2.0 * (1..=q)
        .map(|k| libm::pow(math::abs(p.coeff(q - k)) / lead, 1.0 / k as f64))
        .fold(0.0, f64::max)
}

/// Newton correction `P(z) / P'(z)` at one iterate, plus whether `P(z)` is
/// already within the rounding error bound of Horner's scheme.
struct NewtonStep {
    value: C64,
    ratio: C64,
    at_noise_level: bool,
}

/// Outside the unit disk the reversed polynomial is evaluated so that large
/// `|z|` neither overflows nor loses the leading terms.
fn newton_step(p: &ComplexPolynomial, z: C64) -> NewtonStep {
    let q = p.degree();
    // Horner's forward error is bounded by about 2q eps sum |a_k| |z|^k.
    let noise = 2.0 * q as f64 * f64::EPSILON;
    if math::abs(z) <= 1.0 {
        let (pz, dpz) = p.evaluate_with_derivative(z);
        return NewtonStep {
            value: pz,
            ratio: pz / dpz,
            at_noise_level: math::abs(pz) <= noise * p.abs_sum(math::abs(z)),
        };
    }
    // P(z) = z^q R(w), w = 1/z, R the reversed polynomial:
    // P'/P = w (q - w R'(w) / R(w)).
    let w = z.inv();
    let aw = math::abs(w);
    let mut r = C64::new(0.0, 0.0);
    let mut dr = C64::new(0.0, 0.0);
    let mut scale = 0.0;
    for &a in p.coeffs() {
        dr = dr * w + r;
        r = r * w + a;
        scale = scale * aw + math::abs(a);
    }
    let log_deriv = w * (C64::new(q as f64, 0.0) - w * dr / r);
    NewtonStep {
        value: r,
        ratio: log_deriv.inv(),
        at_noise_level: math::abs(r) <= noise * scale,
    }
}

/// All roots of `p` by Aberth–Ehrlich iteration (Gauss–Seidel ordering, no
/// deflation).
///
/// Starting points sit on the circle of radius `0.8 * max(1, B)` at angles
/// `2 pi k / q + 0.4`, with `B` the smaller of the Cauchy and Fujiwara root
/// bounds. A root stops moving once its correction is below
/// `tol * max(1, |z|)`, or once `|P|` at the iterate has stayed within the
/// rounding bound of Horner's scheme for 20 consecutive sweeps (no further
/// progress is possible in working precision); the set is converged when
/// every root has stopped. On exhaustion the best iterate is returned inside
/// [`Error::DidNotConverge`].
pub fn roots_aberth(p: &ComplexPolynomial, tol: f64, max_iters: usize) -> Result<RootSet> {
    let q = p.degree();
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if q < 1 {
        return Err(Error::DegreeTooSmall { degree: q });
    }

    let radius = 0.8 * cauchy_bound(p).min(fujiwara_bound(p)).max(1.0);
    let mut z: Vec<C64> = (0..q)
        .map(|k| math::cis(2.0 * PI * k as f64 / q as f64 + 0.4) * radius)
        .collect();
    let mut done = alloc::vec![false; q];
    // consecutive sweeps a root has spent at the rounding level
    let mut stalled = alloc::vec![0usize; q];
    let settled = |done: &[bool], stalled: &[usize]| {
        done.iter()
            .zip(stalled)
            .all(|(&d, &s)| d || s >= STALL_SWEEPS)
    };
    let mut iterations = 0;

    while iterations < max_iters && !settled(&done, &stalled) {
        iterations += 1;
        for i in 0..q {
            if done[i] {
                continue;
            }
            let NewtonStep {
                value,
                ratio: newton,
                at_noise_level,
            } = newton_step(p, z[i]);
            if value == C64::new(0.0, 0.0) {
                done[i] = true;
                continue;
            }
            let repulsion = z
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .fold(C64::new(0.0, 0.0), |acc, (_, &zj)| acc + (z[i] - zj).inv());
            let mut step = newton / (C64::new(1.0, 0.0) - newton * repulsion);
            if !math::is_finite(step) {
                // p'(z) = 0 or a collision; fall back to a small Newton-free nudge.
                step = C64::new(tol, tol) * radius;
            }
            z[i] -= step;
            if math::abs(step) < tol * math::abs(z[i]).max(1.0) {
                done[i] = true;
            }
            stalled[i] = if at_noise_level { stalled[i] + 1 } else { 0 };
        }
    }

    let residuals = z
        .iter()
        .map(|&r| math::abs(p.evaluate_accurate(r)))
        .collect();
    let set = RootSet {
        roots: z,
        residuals,
        converged: settled(&done, &stalled),
        iterations,
    };
    if set.converged {
        Ok(set)
    } else {
        Err(Error::DidNotConverge(Box::new(set)))
    }
}

/// [`roots_aberth`] with the default tolerance and iteration cap.
pub fn roots(p: &ComplexPolynomial) -> Result<RootSet> {
    roots_aberth(p, DEFAULT_TOL, DEFAULT_MAX_ITERS)
}
