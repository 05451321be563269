//! The approximant pipeline: `f` to `g = exp(int f)`, its partial sum
//! `s_n`, and the C-polynomial `P = s_n + z^m s_n*`.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::quadrature::GaussLegendre;
use crate::roots::roots;
use crate::series::TruncatedSeries;
use crate::winding::is_zero_free_closed_disk;
use crate::C64;

/// Radius just inside the unit circle used for the `M0` estimate.
pub const M0_RADIUS: f64 = 1.0 - 1e-6;
/// Default boundary sample count for the `M0` estimate.
pub const M0_SAMPLES: usize = 4096;

/// Series order kept for `g` by [`construct`] for a target degree `n_deg`.
pub fn default_series_order(n_deg: usize) -> usize {
    2 * n_deg + 8
}

/// Everything produced by one construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Approximant {
    /// Degree of `P`.
    pub degree: usize,
    /// `floor(degree / 2)`, the length of the partial sum.
    pub n: usize,
    /// Actual degree of `s_n` (may be below `n`).
    pub q: usize,
    /// Power multiplying `p`, `degree - q`.
    pub m: usize,
    pub s_n: ComplexPolynomial,
    /// `s_n*`, the conjugate reciprocal of `s_n`.
    pub p: ComplexPolynomial,
    /// `s_n + z^m p`.
    pub poly: ComplexPolynomial,
    /// Taylor coefficients of `g`.
    pub g: TruncatedSeries,
    /// Boundary estimate of `inf |g|`; `None` when `f` cannot be evaluated
    /// near the unit circle.
    pub m0: Option<f64>,
    /// `max(1, |g_1|, ..., |g_n|)`.
    pub m1: f64,
}

/// Taylor coefficients `g_0 .. g_order` of `exp(int_0^z f)`.
pub fn taylor_g(f: &FunctionSpec, order: usize) -> Result<TruncatedSeries> {
    if order == 0 {
        return TruncatedSeries::from_real(&[1.0]);
    }
    f.taylor(order - 1)?.integrate().exp()
}

/// `g_0 + g_1 z + ... + g_n z^n`.
pub fn partial_sum(g: &TruncatedSeries, n: usize) -> Result<ComplexPolynomial> {
    if n > g.order() {
        return Err(Error::OrderTooSmall {
            requested: n,
            available: g.order(),
        });
    }
    ComplexPolynomial::new(g.coeffs()[..=n].to_vec())
}

/// Smallest `n <= n_max` whose partial sum `s_n` has no zeros in the closed
/// unit disk.
pub fn find_min_n0(f: &FunctionSpec, n_max: usize) -> Result<usize> {
    let g = taylor_g(f, capped_order(f, n_max))?;
    for n in 0..=n_max.min(g.order()) {
        if is_zero_free_closed_disk(&partial_sum(&g, n)?)? {
            return Ok(n);
        }
    }
    Err(Error::NotFoundWithin { n_max })
}

/// Orders of `g` are limited by one more than the order `f` supplies.
fn capped_order(f: &FunctionSpec, order: usize) -> usize {
    match f.max_order() {
        Some(k) => order.min(k + 1),
        None => order,
    }
}

/// `max(1, |g_1|, ..., |g_n|)`.
pub fn m1_of(g: &TruncatedSeries, n: usize) -> f64 {
    g.coeffs()[1..=n.min(g.order())]
        .iter()
        .map(|&c| math::abs(c))
        .fold(1.0, f64::max)
}

/// Minimum of `|g|` over `samples` points of `|z| = 1 - 1e-6`.
///
/// `g` is analytic and zero-free, so its minimum modulus over the disk is
/// attained on the boundary. Truncated series are not trusted that close to
/// the circle, hence [`Error::SeriesUnreliable`] for explicit coefficients.
pub fn estimate_m0(f: &FunctionSpec, samples: usize) -> Result<f64> {
    if samples == 0 {
        return Err(Error::Domain("boundary_samples must be positive"));
    }
    let rule = GaussLegendre::new(16, 16);
    let mut lo = f64::INFINITY;
    for j in 0..samples {
        let z = math::cis(2.0 * PI * j as f64 / samples as f64) * M0_RADIUS;
        let w = f.log_g_with(z, &rule)?;
        lo = lo.min(math::exp(w.re));
    }
    Ok(lo)
}

/// Assemble the approximant of degree `degree` from a given partial sum.
///
/// [`construct`] calls this with the genuine `s_n`; tests call it with
/// corrupted partial sums. `s_n(0)` must be nonzero and `s_n` must have
/// degree at most `floor(degree / 2)`.
pub fn assemble(
    degree: usize,
    s_n: ComplexPolynomial,
    g: TruncatedSeries,
    m0: Option<f64>,
) -> Result<Approximant> {
    if degree < 2 {
        return Err(Error::InvalidDegree { degree });
    }
    let n = degree / 2;
    if s_n.coeff(0) == C64::new(0.0, 0.0) {
        return Err(Error::ZeroConstantTerm);
    }
    let q = s_n.degree();
    if q > n {
        return Err(Error::Domain("partial sum degree exceeds floor(N/2)"));
    }
    let p = s_n.conjugate_reciprocal()?;
    let m = degree - q;
    let poly = &s_n + &p.shift(m);
    debug_assert_eq!(poly.degree(), degree);
    let m1 = m1_of(&g, n);
    Ok(Approximant {
        degree,
        n,
        q,
        m,
        s_n,
        p,
        poly,
        g,
        m0,
        m1,
    })
}

/// Build the degree-`degree` C-polynomial approximant of `f`.
///
/// Fails with [`Error::PartialSumNotZeroFree`] (roots attached) when
/// `s_n`, `n = floor(degree / 2)`, has a zero in the closed unit disk; the
/// remedy is a larger degree.
pub fn construct(f: &FunctionSpec, degree: usize) -> Result<Approximant> {
    construct_with(f, degree, M0_SAMPLES)
}

/// [`construct`] with an explicit boundary sample count for `M0`.
pub fn construct_with(f: &FunctionSpec, degree: usize, m0_samples: usize) -> Result<Approximant> {
    if degree < 2 {
        return Err(Error::InvalidDegree { degree });
    }
    let n = degree / 2;
    let order = capped_order(f, default_series_order(degree));
    if order < n {
        return Err(Error::OrderTooSmall {
            requested: n,
            available: order,
        });
    }
    let g = taylor_g(f, order)?;
    let s_n = partial_sum(&g, n)?;
    if !is_zero_free_closed_disk(&s_n)? {
        let roots: Vec<C64> = match roots(&s_n) {
            Ok(set) => set.roots,
            Err(Error::DidNotConverge(best)) => best.roots,
            Err(e) => return Err(e),
        };
        return Err(Error::PartialSumNotZeroFree { n, roots });
    }
    let m0 = match estimate_m0(f, m0_samples) {
        Ok(v) => Some(v),
        Err(Error::SeriesUnreliable { .. }) => None,
        Err(e) => return Err(e),
    };
    assemble(degree, s_n, g, m0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn ratio() -> FunctionSpec {
        FunctionSpec::rational(
            ComplexPolynomial::from_real(&[1.0]).unwrap(),
            ComplexPolynomial::from_real(&[1.0, -0.5]).unwrap(),
        )
        .unwrap()
    }

    fn one() -> FunctionSpec {
        FunctionSpec::Constant(C64::new(1.0, 0.0))
    }

    fn re(p: &ComplexPolynomial) -> Vec<f64> {
        p.coeffs().iter().map(|c| c.re).collect()
    }

    #[test]
    fn taylor_g_examples() {
        let g = taylor_g(&FunctionSpec::Zero, 6).unwrap();
        assert_eq!(g.coeffs()[0], C64::new(1.0, 0.0));
        assert!(g.coeffs()[1..].iter().all(|c| *c == C64::new(0.0, 0.0)));

        let g = taylor_g(&one(), 10).unwrap();
        let mut fact = 1.0;
        for k in 0..=10 {
            if k > 0 {
                fact *= k as f64;
            }
            assert_relative_eq!(g.coeffs()[k].re, 1.0 / fact, max_relative = 1e-14);
        }

        let g = taylor_g(&ratio(), 20).unwrap();
        for k in 0..=20 {
            let want = (k + 1) as f64 / math::powi(2.0, k as i32);
            assert_relative_eq!(g.coeffs()[k].re, want, max_relative = 1e-13);
            assert_eq!(g.coeffs()[k].im, 0.0);
        }
    }

    #[test]
    fn partial_sum_examples() {
        let g = taylor_g(&FunctionSpec::Zero, 8).unwrap();
        assert_eq!(
            partial_sum(&g, 5).unwrap(),
            ComplexPolynomial::from_real(&[1.0]).unwrap()
        );
        let g = taylor_g(&one(), 4).unwrap();
        assert_eq!(re(&partial_sum(&g, 2).unwrap()), [1.0, 1.0, 0.5]);
        let g = taylor_g(&ratio(), 4).unwrap();
        assert_eq!(re(&partial_sum(&g, 3).unwrap()), [1.0, 1.0, 0.75, 0.5]);
        assert_eq!(
            partial_sum(&g, 5),
            Err(Error::OrderTooSmall {
                requested: 5,
                available: 4
            })
        );
    }

    #[test]
    fn min_n0_examples() {
        assert_eq!(find_min_n0(&FunctionSpec::Zero, 5), Ok(0));
        assert_eq!(find_min_n0(&ratio(), 5), Ok(0));
        assert_eq!(find_min_n0(&one(), 5), Ok(0));
    }

    #[test]
    fn partial_sums_of_ratio() {
        // s_1 = 1 + z touches the circle; from n = 2 on the zeros stay outside
        let g = taylor_g(&ratio(), 30).unwrap();
        assert_eq!(
            is_zero_free_closed_disk(&partial_sum(&g, 1).unwrap()),
            Ok(false)
        );
        for n in (0..=30).filter(|&n| n != 1) {
            assert_eq!(
                is_zero_free_closed_disk(&partial_sum(&g, n).unwrap()),
                Ok(true),
                "n={n}"
            );
        }
    }

    #[test]
    fn partial_sums_of_exp() {
        // s_1 = 1 + z vanishes at -1 on the circle; every later partial sum
        // keeps its zeros outside the closed disk.
        let g = taylor_g(&one(), 30).unwrap();
        assert_eq!(
            is_zero_free_closed_disk(&partial_sum(&g, 1).unwrap()),
            Ok(false)
        );
        for n in 2..=30 {
            let s = partial_sum(&g, n).unwrap();
            assert_eq!(is_zero_free_closed_disk(&s), Ok(true), "n={n}");
            let min_root = roots(&s)
                .unwrap()
                .roots
                .iter()
                .map(|z| z.norm())
                .fold(f64::INFINITY, f64::min);
            assert!(min_root > 1.0, "n={n} {min_root}");
        }
    }

    #[test]
    fn zero_function_gives_one_plus_z_to_the_n() {
        for degree in [8, 9] {
            let a = construct(&FunctionSpec::Zero, degree).unwrap();
            assert_eq!(a.n, degree / 2);
            assert_eq!(a.q, 0);
            assert_eq!(a.m, degree);
            let mut want = alloc::vec![0.0; degree + 1];
            want[0] = 1.0;
            want[degree] = 1.0;
            assert_eq!(re(&a.poly), want);
            assert_eq!(a.m0, Some(1.0));
            assert_eq!(a.m1, 1.0);
        }
    }

    #[test]
    fn ratio_degree_six() {
        let a = construct(&ratio(), 6).unwrap();
        assert_eq!((a.n, a.q, a.m), (3, 3, 3));
        assert_eq!(re(&a.s_n), [1.0, 1.0, 0.75, 0.5]);
        assert_eq!(re(&a.p), [0.5, 0.75, 1.0, 1.0]);
        assert_eq!(re(&a.poly), [1.0, 1.0, 0.75, 1.0, 0.75, 1.0, 1.0]);
        assert!(a.poly.is_self_inversive_exact());
        let dev = roots(&a.poly).unwrap().max_circle_deviation();
        assert!(dev < 1e-12, "{dev}");
    }

    #[test]
    fn construct_rejects_small_degree_and_bad_partial_sum() {
        assert_eq!(
            construct(&FunctionSpec::Zero, 1),
            Err(Error::InvalidDegree { degree: 1 })
        );
        // n = 1: s_1 = 1 + z has its zero on the circle
        match construct(&one(), 2) {
            Err(Error::PartialSumNotZeroFree { n, roots }) => {
                assert_eq!(n, 1);
                assert!((roots[0] + C64::new(1.0, 0.0)).norm() < 1e-12);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn m0_estimates() {
        assert_eq!(estimate_m0(&FunctionSpec::Zero, 4096), Ok(1.0));
        // 1 / |1 - z/2|^2 is smallest at z = -r
        let want = 4.0 / ((2.0 + M0_RADIUS) * (2.0 + M0_RADIUS));
        assert_relative_eq!(
            estimate_m0(&ratio(), 4096).unwrap(),
            want,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            estimate_m0(&ratio(), 4096).unwrap(),
            4.0 / 9.0,
            max_relative = 1e-6
        );
        assert_relative_eq!(
            estimate_m0(&one(), 4096).unwrap(),
            (-1.0f64).exp(),
            max_relative = 1e-6
        );
        let f = FunctionSpec::Explicit(TruncatedSeries::from_real(&[1.0, 0.5]).unwrap());
        assert!(matches!(
            estimate_m0(&f, 16),
            Err(Error::SeriesUnreliable { .. })
        ));
    }

    #[test]
    fn explicit_coefficients_construct_without_m0() {
        let f = FunctionSpec::Explicit(
            TruncatedSeries::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).unwrap(),
        );
        let a = construct(&f, 10).unwrap();
        assert_eq!(a.m0, None);
        assert_eq!(a.g.order(), 6);
        let e = construct(
            &FunctionSpec::Explicit(TruncatedSeries::from_real(&[1.0]).unwrap()),
            10,
        );
        assert_eq!(
            e,
            Err(Error::OrderTooSmall {
                requested: 5,
                available: 1
            })
        );
    }
}
