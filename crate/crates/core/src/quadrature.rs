//! Gauss–Legendre quadrature on `[0, 1]`.

use alloc::vec::Vec;
use core::f64::consts::PI;

#[derive(Debug, Clone)]
pub struct GaussLegendre {
    /// Nodes mapped to `[0, 1]`.
    nodes: Vec<f64>,
    weights: Vec<f64>,
    panels: usize,
}

impl GaussLegendre {
    /// A composite rule with `panels` equal subintervals of `[0, 1]` and
    /// `points` nodes per panel.
    pub fn new(points: usize, panels: usize) -> Self {
        let (x, w) = legendre_nodes(points);
        GaussLegendre {
            nodes: x.iter().map(|&t| 0.5 * (t + 1.0)).collect(),
            weights: w.iter().map(|&t| 0.5 * t).collect(),
            panels: panels.max(1),
        }
    }

    /// `int_0^1 f(t) dt` for complex-valued `f`.
    pub fn integrate<F>(&self, mut f: F) -> crate::C64
    where
        F: FnMut(f64) -> crate::C64,
    {
        let h = 1.0 / self.panels as f64;
        let mut acc = crate::C64::new(0.0, 0.0);
        for p in 0..self.panels {
            let a = p as f64 * h;
            for (&x, &w) in self.nodes.iter().zip(&self.weights) {
                acc += f(a + h * x) * (w * h);
            }
        }
        acc
    }
}

/// Nodes and weights of the `n`-point rule on `[-1, 1]`, by Newton's method
/// on the Legendre polynomial from the Chebyshev-like initial guesses.
fn legendre_nodes(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = Vec::with_capacity(n);
    let mut w = Vec::with_capacity(n);
    for i in 0..n {
        let mut t = libm::cos(PI * (i as f64 + 0.75) / (n as f64 + 0.5));
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, d) = legendre(n, t);
            dp = d;
            let step = p / d;
            t -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        let (_, d) = legendre(n, t);
        if d != 0.0 {
            dp = d;
        }
        x.push(t);
        w.push(2.0 / ((1.0 - t * t) * dp * dp));
    }
    (x, w)
}

/// `(P_n(t), P_n'(t))` by the three-term recurrence.
fn legendre(n: usize, t: f64) -> (f64, f64) {
    let (mut p0, mut p1) = (1.0, t);
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let k = k as f64;
        let p2 = ((2.0 * k - 1.0) * t * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (t * p1 - p0) / (t * t - 1.0);
    (p1, d)
}
