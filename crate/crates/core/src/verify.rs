//! Numerical checks of a constructed approximant: sup-norm error on
//! `|z| <= a`, roots on the unit circle, modulus domination, vanishing order
//! at the origin, the simple-fraction identity, and the convergence rate.

use alloc::vec::Vec;
use core::f64::consts::PI;

use crate::bounds::error_bound;
use crate::construct::{construct, Approximant};
use crate::error::{Error, Result};
use crate::function::FunctionSpec;
use crate::math;
use crate::poly::ComplexPolynomial;
use crate::roots::{roots, RootSet};
use crate::series::log_derivative_series;
use crate::C64;

/// Acceptance factor standing in for the asymptotic `(1 + o(1))`.
pub const BOUND_FACTOR: f64 = 2.0;
/// Smallest degree for which the factor-2 bound check applies.
pub const BOUND_MIN_DEGREE: usize = 16;
/// Default vanishing-order tolerance.
pub const DEFAULT_VANISH_TOL: f64 = 1e-8;
/// Radius of the circle used for the simple-fraction identity.
pub const FRACTION_RADIUS: f64 = 0.5;
/// Default `eps` when the caller has no preference.
pub const DEFAULT_EPS: f64 = 0.2;

/// Root-circle tolerance for degree `degree`: `1e-7`, growing as
/// `1e-7 (1 + N/32)` beyond degree 64.
pub fn default_root_tol(degree: usize) -> f64 {
    if degree > 64 {
        1e-7 * (1.0 + degree as f64 / 32.0)
    } else {
        1e-7
    }
}

/// Sup-norm sample count for degree `degree`: `max(4096, 8N)`.
pub fn default_sup_samples(degree: usize) -> usize {
    4096.max(8 * degree)
}

fn circle_point(radius: f64, j: usize, samples: usize) -> (f64, C64) {
    let theta = 2.0 * PI * j as f64 / samples as f64;
    (theta, math::cis(theta) * radius)
}

/// `|P'(z)/P(z) - f(z)|` at `samples` equally spaced angles on `|z| = a`,
/// as `(angle, error)` pairs.
pub fn error_profile(
    poly: &ComplexPolynomial,
    f: &FunctionSpec,
    a: f64,
    samples: usize,
) -> Result<Vec<(f64, f64)>> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain("need 0 < a < 1"));
    }
    if samples == 0 {
        return Err(Error::Domain("need at least one sample"));
    }
    let dp = poly.derivative();
    (0..samples)
        .map(|j| {
            let (theta, z) = circle_point(a, j, samples);
            let den = poly.evaluate_accurate(z);
            if den == C64::new(0.0, 0.0) {
                return Err(Error::ZeroDenominator);
            }
            let fz = f.evaluate(z).map_err(|_| Error::EvaluationFailure)?;
            let err = math::abs(dp.evaluate_accurate(z) / den - fz);
            if err.is_finite() {
                Ok((theta, err))
            } else {
                Err(Error::EvaluationFailure)
            }
        })
        .collect()
}

/// Max of `|P'/P - f|` over `samples` points of `|z| = a`. The error is
/// analytic on `|z| <= a` (all zeros of `P` lie on the unit circle), so the
/// circle carries its maximum.
pub fn measure_sup_error(
    appr: &Approximant,
    f: &FunctionSpec,
    a: f64,
    samples: usize,
) -> Result<f64> {
    Ok(error_profile(&appr.poly, f, a, samples)?
        .into_iter()
        .map(|(_, e)| e)
        .fold(0.0, f64::max))
}

/// Outcome of [`check_roots_on_circle`].
#[derive(Debug, Clone, PartialEq)]
pub struct CircleCheck {
    pub max_deviation: f64,
    pub pass: bool,
    pub roots: RootSet,
}

/// Solve for all roots and compare `max ||z_k| - 1|` with `tol`.
pub fn check_roots_on_circle(poly: &ComplexPolynomial, tol: f64) -> Result<CircleCheck> {
    let roots = roots(poly).map_err(|_| Error::RootSolverFailed)?;
    let max_deviation = roots.max_circle_deviation();
    Ok(CircleCheck {
        max_deviation,
        pass: max_deviation <= tol,
        roots,
    })
}

/// A deterministic polar grid of the closed unit disk with at most
/// `samples` points: `floor(sqrt(samples))` rings at radii `i / rings`
/// (the last one the unit circle) times `floor(samples / rings)` angles.
pub fn disk_grid(samples: usize) -> Vec<C64> {
    let rings = (math::sqrt(samples as f64) as usize).max(1);
    let angles = (samples / rings).max(1);
    let mut pts = Vec::with_capacity(rings * angles);
    for i in 1..=rings {
        let r = i as f64 / rings as f64;
        for j in 0..angles {
            // stagger alternate rings so angles do not line up
            let theta = 2.0 * PI * (j as f64 + 0.5 * (i % 2) as f64) / angles as f64;
            pts.push(math::cis(theta) * r);
        }
    }
    pts
}

/// Max over the disk grid of `|z^m Q*(z) / Q(z)|`.
pub fn check_phi_modulus(q: &ComplexPolynomial, m: usize, samples: usize) -> Result<f64> {
    let qs = q.conjugate_reciprocal()?;
    let mut worst: f64 = 0.0;
    for z in disk_grid(samples) {
        let den = q.evaluate_accurate(z);
        let val = z.powu(m as u32) * qs.evaluate_accurate(z) / den;
        if den == C64::new(0.0, 0.0) || !math::is_finite(val) {
            return Err(Error::ZeroDenominator);
        }
        worst = worst.max(math::abs(val));
    }
    Ok(worst)
}

/// Largest violation of `|Q*(z)| <= (1 + slack) |Q(z)|` over the disk grid,
/// as `max(|Q*| / |Q|) - 1`; non-positive values mean the domination holds
/// exactly on the sampled points.
pub fn modulus_domination_excess(q: &ComplexPolynomial, samples: usize) -> Result<f64> {
    check_phi_modulus(q, 0, samples).map(|v| v - 1.0)
}

/// Outcome of [`check_vanishing_order`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VanishingOrder {
    pub ok: bool,
    /// First index `k <= n - 2` with `|e_k| > tol (1 + M1)`.
    pub first_bad: Option<usize>,
    /// Largest `|e_k|` over the checked indices.
    pub max_coeff: f64,
}

/// Taylor coefficients `e_0 .. e_{n-2}` of `P'/P - f` must vanish up to
/// `tol (1 + M1)`.
pub fn check_vanishing_order(
    appr: &Approximant,
    f: &FunctionSpec,
    tol: f64,
) -> Result<VanishingOrder> {
    if appr.n < 2 {
        return Ok(VanishingOrder {
            ok: true,
            first_bad: None,
            max_coeff: 0.0,
        });
    }
    let last = appr.n - 2;
    let e = log_derivative_series(&appr.poly, last)?.sub(&f.taylor(last)?);
    let limit = tol * (1.0 + appr.m1);
    let mut first_bad = None;
    let mut max_coeff: f64 = 0.0;
    for (k, c) in e.coeffs().iter().enumerate() {
        let v = math::abs(*c);
        max_coeff = max_coeff.max(v);
        if first_bad.is_none() && !(v <= limit) {
            first_bad = Some(k);
        }
    }
    Ok(VanishingOrder {
        ok: first_bad.is_none(),
        first_bad,
        max_coeff,
    })
}

/// Max over `samples` points of `|z| = 0.5` of
/// `|sum_k 1/(z - z_k) - P'(z)/P(z)|` for the given roots of `P`.
pub fn simple_fraction_residual(
    poly: &ComplexPolynomial,
    roots: &[C64],
    samples: usize,
) -> Result<f64> {
    if samples == 0 {
        return Err(Error::Domain("need at least one sample"));
    }
    let dp = poly.derivative();
    let mut worst: f64 = 0.0;
    for j in 0..samples {
        let (_, z) = circle_point(FRACTION_RADIUS, j, samples);
        let fraction: C64 = roots.iter().map(|&r| (z - r).inv()).sum();
        let den = poly.evaluate_accurate(z);
        if den == C64::new(0.0, 0.0) {
            return Err(Error::ZeroDenominator);
        }
        let d = math::abs(fraction - dp.evaluate_accurate(z) / den);
        if !d.is_finite() {
            return Err(Error::ZeroDenominator);
        }
        worst = worst.max(d);
    }
    Ok(worst)
}

/// Least-squares line through `(n, ln sup_error)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFit {
    /// `-inf` when some error is exactly zero.
    pub slope: f64,
    pub intercept: f64,
}

impl RateFit {
    pub fn is_exact(&self) -> bool {
        self.slope == f64::NEG_INFINITY
    }
}

/// Fit `ln(error) = slope * n + intercept` over `(n, error)` pairs.
pub fn fit_rate_points(points: &[(usize, f64)]) -> Result<RateFit> {
    let mut ns: Vec<usize> = points.iter().map(|p| p.0).collect();
    ns.sort_unstable();
    ns.dedup();
    if ns.len() < 3 {
        return Err(Error::InsufficientData);
    }
    if points.iter().any(|p| !(p.1 >= 0.0) || !p.1.is_finite()) {
        return Err(Error::InsufficientData);
    }
    if points.iter().any(|p| p.1 == 0.0) {
        return Ok(RateFit {
            slope: f64::NEG_INFINITY,
            intercept: f64::NEG_INFINITY,
        });
    }
    let len = points.len() as f64;
    let mx = points.iter().map(|p| p.0 as f64).sum::<f64>() / len;
    let my = points.iter().map(|p| math::ln(p.1)).sum::<f64>() / len;
    let (sxy, sxx) = points.iter().fold((0.0, 0.0), |(sxy, sxx), p| {
        let dx = p.0 as f64 - mx;
        (sxy + dx * (math::ln(p.1) - my), sxx + dx * dx)
    });
    let slope = sxy / sxx;
    Ok(RateFit {
        slope,
        intercept: my - slope * mx,
    })
}

/// [`fit_rate_points`] over a batch of reports.
pub fn fit_rate(reports: &[ErrorReport]) -> Result<RateFit> {
    let pts: Vec<(usize, f64)> = reports.iter().map(|r| (r.n, r.sup_error)).collect();
    fit_rate_points(&pts)
}

/// Settings for [`verify`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub a: f64,
    pub eps: f64,
    /// Lower limit on sup-norm samples; the actual count is
    /// `max(samples, 8N)`.
    pub samples: usize,
    /// `None` selects [`default_root_tol`].
    pub root_tol: Option<f64>,
    pub vanish_tol: f64,
    pub fraction_samples: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            a: 0.5,
            eps: DEFAULT_EPS,
            samples: 4096,
            root_tol: None,
            vanish_tol: DEFAULT_VANISH_TOL,
            fraction_samples: 100,
        }
    }
}

/// Measured quantities for one degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ErrorReport {
    pub degree: usize,
    pub n: usize,
    pub a: f64,
    pub eps: f64,
    pub sup_error: f64,
    pub bound: f64,
    pub max_circle_deviation: f64,
    pub root_tol: f64,
    pub vanishing_order_ok: bool,
    pub first_bad_index: Option<usize>,
    pub fraction_residual: f64,
    pub samples_used: usize,
}

impl ErrorReport {
    /// `sup_error / bound`.
    pub fn bound_ratio(&self) -> f64 {
        self.sup_error / self.bound
    }

    pub fn roots_ok(&self) -> bool {
        self.max_circle_deviation <= self.root_tol
    }

    /// The factor-2 bound check; vacuously true below degree 16.
    pub fn bound_ok(&self) -> bool {
        self.degree < BOUND_MIN_DEGREE || self.sup_error <= BOUND_FACTOR * self.bound
    }

    pub fn fraction_ok(&self) -> bool {
        self.fraction_residual <= 1e-8
    }

    pub fn passed(&self) -> bool {
        self.roots_ok() && self.vanishing_order_ok && self.bound_ok() && self.fraction_ok()
    }
}

/// A report together with the raw data behind it.
#[derive(Debug, Clone, PartialEq)]
pub struct Verification {
    pub report: ErrorReport,
    pub approximant: Approximant,
    pub roots: RootSet,
    /// `(angle, |error|)` on `|z| = a`.
    pub profile: Vec<(f64, f64)>,
}

/// Construct the degree-`degree` approximant of `f` and run every check.
pub fn verify(f: &FunctionSpec, degree: usize, cfg: &VerifyConfig) -> Result<Verification> {
    let bound = error_bound(cfg.a, cfg.eps, degree / 2)?;
    let approximant = construct(f, degree)?;
    verify_approximant(approximant, f, bound, cfg)
}

/// Run every check on an already constructed approximant.
pub fn verify_approximant(
    approximant: Approximant,
    f: &FunctionSpec,
    bound: f64,
    cfg: &VerifyConfig,
) -> Result<Verification> {
    let degree = approximant.degree;
    let samples = cfg.samples.max(8 * degree);
    let profile = error_profile(&approximant.poly, f, cfg.a, samples)?;
    let sup_error = profile.iter().map(|p| p.1).fold(0.0, f64::max);
    let root_tol = cfg.root_tol.unwrap_or_else(|| default_root_tol(degree));
    let circle = check_roots_on_circle(&approximant.poly, root_tol)?;
    let vanishing = check_vanishing_order(&approximant, f, cfg.vanish_tol)?;
    let fraction_residual =
        simple_fraction_residual(&approximant.poly, &circle.roots.roots, cfg.fraction_samples)?;
    Ok(Verification {
        report: ErrorReport {
            degree,
            n: approximant.n,
            a: cfg.a,
            eps: cfg.eps,
            sup_error,
            bound,
            max_circle_deviation: circle.max_deviation,
            root_tol,
            vanishing_order_ok: vanishing.ok,
            first_bad_index: vanishing.first_bad,
            fraction_residual,
            samples_used: samples,
        },
        approximant,
        roots: circle.roots,
        profile,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::assemble;
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

    fn closed_form(degree: usize, a: f64) -> f64 {
        degree as f64 * math::powi(a, degree as i32 - 1) / (1.0 - math::powi(a, degree as i32))
    }

    #[test]
    fn sup_error_of_zero_function() {
        let f = FunctionSpec::Zero;
        let appr = construct(&f, 4).unwrap();
        let e = measure_sup_error(&appr, &f, 0.5, 4096).unwrap();
        assert_relative_eq!(e, 0.533_333_333_333_333_3, max_relative = 1e-12);
        let appr = construct(&f, 20).unwrap();
        let e = measure_sup_error(&appr, &f, 0.5, 4096).unwrap();
        assert_relative_eq!(e, 3.814_700_903_607_276_5e-5, max_relative = 1e-6);
        assert_relative_eq!(e, closed_form(20, 0.5), max_relative = 1e-6);
    }

    #[test]
    fn error_at_origin_vanishes_for_zero_function() {
        let f = FunctionSpec::Zero;
        let appr = construct(&f, 8).unwrap();
        let dp = appr.poly.derivative();
        let z = C64::new(0.0, 0.0);
        assert_eq!(dp.evaluate(z) / appr.poly.evaluate(z), z);
    }

    #[test]
    fn roots_on_circle_and_negative_control() {
        let p =
            ComplexPolynomial::from_real(&[1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 1.0]).unwrap();
        let c = check_roots_on_circle(&p, 1e-14).unwrap();
        assert!(c.pass && c.max_deviation < 1e-15, "{}", c.max_deviation);

        let appr = construct(&ratio(), 6).unwrap();
        let c = check_roots_on_circle(&appr.poly, 1e-10).unwrap();
        assert!(c.pass, "{}", c.max_deviation);

        let bad = appr
            .poly
            .with_coeff(0, appr.poly.coeff(0) + C64::new(1e-2, 0.0))
            .unwrap();
        assert!(!check_roots_on_circle(&bad, 1e-10).unwrap().pass);
    }

    #[test]
    fn phi_modulus_examples() {
        let q = ComplexPolynomial::from_real(&[-2.0, 1.0]).unwrap();
        // at z = 0 with m = 1 the value is 0; on the circle with m = 0 it is 1
        let qs = q.conjugate_reciprocal().unwrap();
        let z0 = C64::new(0.0, 0.0);
        assert_eq!((z0 * qs.evaluate(z0) / q.evaluate(z0)).norm(), 0.0);
        for j in 0..256 {
            let z = math::cis(2.0 * PI * j as f64 / 256.0);
            let v = (qs.evaluate_accurate(z) / q.evaluate_accurate(z)).norm();
            assert!((v - 1.0).abs() < 1e-12);
        }
        let sup = check_phi_modulus(&q, 0, 4096).unwrap();
        assert!(sup <= 1.0 + 1e-12 && sup >= 1.0 - 1e-12, "{sup}");

        // Q = 1 - z/2, Q* = -1/2 + z vanishes at z = 1/2
        let q = ComplexPolynomial::from_real(&[1.0, -0.5]).unwrap();
        let qs = q.conjugate_reciprocal().unwrap();
        assert_eq!(qs, ComplexPolynomial::from_real(&[-0.5, 1.0]).unwrap());
        let z = C64::new(0.5, 0.0);
        assert_eq!((z.powu(2) * qs.evaluate(z) / q.evaluate(z)).norm(), 0.0);
        assert!(check_phi_modulus(&q, 2, 1024).unwrap() <= 1.0 + 1e-10);
    }

    #[test]
    fn phi_modulus_detects_zero_inside() {
        // Q with a root inside the disk violates the domination
        let q = ComplexPolynomial::new(alloc::vec![C64::new(-0.31, -0.17), C64::new(1.0, 0.0)])
            .unwrap();
        assert!(check_phi_modulus(&q, 0, 1024).unwrap() > 1.0 + 1e-3);
        // a grid point exactly on the zero
        let q = ComplexPolynomial::from_real(&[-0.5, 1.0]).unwrap();
        assert_eq!(check_phi_modulus(&q, 0, 1024), Err(Error::ZeroDenominator));
    }

    #[test]
    fn vanishing_order_zero_function() {
        let f = FunctionSpec::Zero;
        let appr = construct(&f, 8).unwrap();
        let v = check_vanishing_order(&appr, &f, 1e-10).unwrap();
        assert_eq!((v.ok, v.first_bad, v.max_coeff), (true, None, 0.0));
        // the first nonzero coefficient of 8 z^7 / (1 + z^8)
        let e = log_derivative_series(&appr.poly, 8).unwrap();
        assert!(e.coeffs()[..7].iter().all(|c| *c == C64::new(0.0, 0.0)));
        assert_eq!(e.coeffs()[7], C64::new(8.0, 0.0));
    }

    #[test]
    fn vanishing_order_exp_and_negative_control() {
        let f = one();
        let appr = construct(&f, 8).unwrap();
        let v = check_vanishing_order(&appr, &f, 1e-10).unwrap();
        assert!(v.ok && v.max_coeff < 1e-10, "{v:?}");

        let mut s = appr.s_n.coeffs().to_vec();
        s[2] += C64::new(1e-3, 0.0);
        let corrupted = ComplexPolynomial::new(s).unwrap();
        let bad = assemble(8, corrupted, appr.g.clone(), appr.m0).unwrap();
        let v = check_vanishing_order(&bad, &f, 1e-8).unwrap();
        assert!(!v.ok);
        assert!(v.first_bad.unwrap() <= 2, "{v:?}");
    }

    #[test]
    fn simple_fraction_examples() {
        let p = ComplexPolynomial::from_real(&[1.0, 0.0, 1.0]).unwrap();
        let r =
            simple_fraction_residual(&p, &[C64::new(0.0, 1.0), C64::new(0.0, -1.0)], 100).unwrap();
        assert!(r < 1e-15, "{r}");

        let appr = construct(&FunctionSpec::Zero, 20).unwrap();
        let rs = roots(&appr.poly).unwrap();
        assert!(simple_fraction_residual(&appr.poly, &rs.roots, 100).unwrap() <= 1e-9);

        let p = ComplexPolynomial::from_real(&[1.0, -2.0, 1.0]).unwrap();
        let rs = roots(&p).unwrap();
        assert!(simple_fraction_residual(&p, &rs.roots, 100).unwrap() <= 1e-8);
    }

    #[test]
    fn rate_fit_examples() {
        let pts: Vec<(usize, f64)> = [8usize, 12, 16, 20]
            .iter()
            .map(|&d| (d / 2, closed_form(d, 0.5)))
            .collect();
        let fit = fit_rate_points(&pts).unwrap();
        // numpy.polyfit on the same points
        assert_relative_eq!(fit.slope, -1.235_065_04, max_relative = 1e-8);
        assert_relative_eq!(fit.intercept, 2.218_752_77, max_relative = 1e-8);

        let fit = fit_rate_points(&[(1, 0.3), (2, 0.3), (3, 0.3)]).unwrap();
        assert!(fit.slope.abs() < 1e-15);

        assert_eq!(
            fit_rate_points(&[(1, 0.3), (2, 0.3)]),
            Err(Error::InsufficientData)
        );
        assert_eq!(
            fit_rate_points(&[(1, 0.3), (1, 0.2), (2, 0.3)]),
            Err(Error::InsufficientData)
        );
        assert!(fit_rate_points(&[(1, 0.3), (2, 0.0), (3, 0.1)])
            .unwrap()
            .is_exact());
    }

    #[test]
    fn disk_grid_shape() {
        let g = disk_grid(2048);
        assert_eq!(g.len(), 45 * 45);
        assert!(g.iter().all(|z| z.norm() <= 1.0 + 1e-15));
        assert!(g.iter().any(|z| (z.norm() - 1.0).abs() < 1e-15));
        assert_eq!(disk_grid(4096).len(), 4096);
    }

    #[test]
    fn verify_runs_every_check() {
        let cfg = VerifyConfig::default();
        let v = verify(&ratio(), 16, &cfg).unwrap();
        let r = &v.report;
        assert_eq!((r.degree, r.n, r.samples_used), (16, 8, 4096));
        assert!(r.passed(), "{r:?}");
        assert_eq!(v.profile.len(), r.samples_used);
        assert_eq!(v.roots.roots.len(), 16);
        assert!(r.bound > 0.0 && r.sup_error > 0.0);
    }
}
