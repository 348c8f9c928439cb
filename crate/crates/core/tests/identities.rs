//! Cross-module identity checks: finite-difference validation of analytic
//! derivatives, Laurent-coefficient extraction, trigonometric scaffolding,
//! branch discipline, and quadrature self-consistency.

use std::f64::consts::PI;

use num_complex::Complex64;

use stieltjes_core::hurwitz::{
    euler_gamma, hurwitz_zeta, hurwitz_zeta_sderiv, stieltjes_oracle, EulerMaclaurinPlan,
};
use stieltjes_core::loglog::{integral_i_pq, Route};
use stieltjes_core::polylog::polylog_sderiv_at1;
use stieltjes_core::quad::loglog_quadrature;
use stieltjes_core::rational::{multiplication_digamma, MultiplicationQuery};
use stieltjes_core::special::{digamma, riemann_zeta_deriv};
use stieltjes_core::PrecisionPolicy;

/// Laurent coefficients of zeta(s,a) - 1/(s-1) about s = 1, extracted by
/// Richardson-extrapolated central differences, must reproduce the
/// Stieltjes constants: g^(k)(1) = (-1)^k gamma_k(a).
#[test]
fn laurent_coefficients_from_finite_differences() {
    let plan = EulerMaclaurinPlan::default();
    let g = |s: f64, a: f64| hurwitz_zeta(s, a, &plan).unwrap() - 1.0 / (s - 1.0);
    let h = 1e-3;
    for &a in &[1.0 / 3.0, 0.5, 2.0 / 3.0, 1.0] {
        // k = 0: Richardson over the symmetric average.
        let even = |h: f64| 0.5 * (g(1.0 + h, a) + g(1.0 - h, a));
        let g0 = (4.0 * even(h / 2.0) - even(h)) / 3.0;
        let expect0 = stieltjes_oracle(0, a).unwrap().value;
        assert!((g0 - expect0).abs() < 1e-6, "a={a}: {g0} vs {expect0}");

        // k = 1: Richardson over the symmetric difference quotient.
        let odd = |h: f64| (g(1.0 + h, a) - g(1.0 - h, a)) / (2.0 * h);
        let g1 = (4.0 * odd(h / 2.0) - odd(h)) / 3.0;
        let expect1 = -stieltjes_oracle(1, a).unwrap().value;
        assert!((g1 - expect1).abs() < 1e-6, "a={a}: {g1} vs {expect1}");

        // k = 2: second difference against the extrapolated center value.
        let second = |h: f64| (g(1.0 + h, a) - 2.0 * g0 + g(1.0 - h, a)) / (h * h);
        let g2 = (4.0 * second(h / 2.0) - second(h)) / 3.0;
        let expect2 = stieltjes_oracle(2, a).unwrap().value;
        assert!((g2 - expect2).abs() < 1e-6, "a={a}: {g2} vs {expect2}");
    }
}

/// Richardson-extrapolated central difference of `f` at `s`.
fn central_diff(f: &dyn Fn(f64) -> f64, s: f64, h: f64) -> f64 {
    let quot = |h: f64| (f(s + h) - f(s - h)) / (2.0 * h);
    (4.0 * quot(h / 2.0) - quot(h)) / 3.0
}

/// The analytic s-derivatives of the summation engine against central
/// finite differences: order 1 against differences of the value, each
/// higher order against differences of the analytic order below it (the
/// seventh s-derivative near s = 0 is in the thousands, so differencing
/// the raw values three times cannot resolve 1e-7).
#[test]
fn sderivs_match_finite_differences() {
    let plan = EulerMaclaurinPlan::default();
    let h = 4e-3;
    for &(s, a) in &[(0.0, 1.0 / 3.0), (2.0, 0.5), (3.0, 1.0)] {
        for order in 1..=3usize {
            let below: Box<dyn Fn(f64) -> f64> = if order == 1 {
                Box::new(move |s| hurwitz_zeta(s, a, &plan).unwrap())
            } else {
                Box::new(move |s| hurwitz_zeta_sderiv(order - 1, s, a).unwrap())
            };
            let analytic = hurwitz_zeta_sderiv(order, s, a).unwrap();
            let fd = central_diff(&below, s, h);
            assert!(
                (analytic - fd).abs() < 1e-7,
                "order {order} at ({s},{a}): {analytic} vs {fd}"
            );
        }
    }
}

/// Functional-equation derivatives on the negative axis against the same
/// chained central differences.
#[test]
fn zeta_negative_derivatives_match_finite_differences() {
    let h = 4e-3;
    for &s in &[-0.7, -1.5, -2.3, -3.6] {
        for order in 1..=3u32 {
            let below: Box<dyn Fn(f64) -> f64> =
                Box::new(move |s| riemann_zeta_deriv(order - 1, s).unwrap());
            let analytic = riemann_zeta_deriv(order, s).unwrap();
            let fd = central_diff(&below, s, h);
            assert!(
                (analytic - fd).abs() < 1e-7,
                "order {order} at s={s}: {analytic} vs {fd}"
            );
        }
    }
}

/// sum_{r=1}^m (1/2 - r/m) cos(2 pi j r/m) = -1/2 and
/// sum_{r=1}^m (1/2 - r/m) sin(2 pi j r/m) = cot(pi j/m)/2, 1 <= j < m.
#[test]
fn trigonometric_scaffolding() {
    for m in 2..=32u32 {
        for j in 1..m {
            let mut cs = 0.0;
            let mut sn = 0.0;
            for r in 1..=m {
                let w = 0.5 - f64::from(r) / f64::from(m);
                let ang = 2.0 * PI * f64::from(j) * f64::from(r) / f64::from(m);
                cs += w * ang.cos();
                sn += w * ang.sin();
            }
            assert!((cs + 0.5).abs() < 1e-12, "cos sum j={j} m={m}: {cs}");
            let ang = PI * f64::from(j) / f64::from(m);
            let cot = ang.cos() / ang.sin();
            assert!((sn - 0.5 * cot).abs() < 1e-12, "sin sum j={j} m={m}: {sn}");
        }
    }
}

/// gamma_0(a) = -psi(a) across the oracle's range.
#[test]
fn gamma0_is_minus_digamma() {
    for &a in &[1.0 / 12.0, 0.25, 0.5, 1.0, 1.7, 3.0] {
        let lhs = stieltjes_oracle(0, a).unwrap().value;
        let rhs = -digamma(a).unwrap();
        assert!((lhs - rhs).abs() < 1e-9, "a={a}: {lhs} vs {rhs}");
    }
}

/// Rebuilding the root-of-unity sum with one logarithm pushed off the
/// principal branch must break the real-valuedness of the result: the
/// branch constraint is load-bearing, not cosmetic.
#[test]
fn branch_discipline_is_load_bearing() {
    let policy = PrecisionPolicy::default();
    let g = euler_gamma();
    let q = 5u32;
    let p = 2u32;
    let reference = integral_i_pq(1, p, q, Route::ClosedFormRoots).unwrap();
    assert!(reference.imag_residual <= 1e-10);

    let two_pi_i = Complex64::new(0.0, 2.0 * PI);
    let mut shifted = Complex64::new(0.0, 0.0);
    for k in 1..q {
        let omega = Complex64::from_polar(1.0, 2.0 * PI * f64::from(k) / f64::from(q));
        let omega_inv = omega.conj();
        let omega_p = omega.powu(p);
        let mut ln_ratio = (Complex64::new(1.0, 0.0) - omega_inv).ln();
        if k == 1 {
            ln_ratio += two_pi_i; // deliberate branch violation
        }
        let d1 = polylog_sderiv_at1(1, omega_inv, &policy).unwrap();
        shifted += (omega_p - 1.0) * (ln_ratio * g + d1);
    }
    shifted = -shifted;
    assert!(
        shifted.im.abs() > 1e-3,
        "off-branch sum stayed real: imag = {:e}",
        shifted.im
    );
}

/// Halving the grid step moves every family integrand by less than 1e-10.
#[test]
fn quadrature_step_halving_on_family_integrands() {
    let coarse = PrecisionPolicy::default();
    let mut fine = coarse.clone();
    fine.quad_step /= 2.0;
    type Integrand = Box<dyn Fn(f64, f64) -> f64>;
    let integrands: Vec<(&str, Integrand)> = vec![
        ("1/(1+x^2)", Box::new(|x, _| 1.0 / (1.0 + x * x))),
        ("1/(1+x+x^2)", Box::new(|x, _| 1.0 / (1.0 + x + x * x))),
        ("1/(1-x+x^2)", Box::new(|x, _| 1.0 / (1.0 - x + x * x))),
        ("1/(1+x)^2", Box::new(|x, _| 1.0 / ((1.0 + x) * (1.0 + x)))),
        ("1/(x-2)", Box::new(|x, _| 1.0 / (x - 2.0))),
        (
            "x^1.5/(1+x^3)",
            Box::new(|x, _| x.powf(1.5) / (1.0 + x.powi(3))),
        ),
        (
            "I_pq core (p=1,q=4)",
            Box::new(|_x, u: f64| -4.0 * (-3.0f64 * u).exp_m1() / (-4.0 * u).exp_m1()),
        ),
    ];
    for k in 1..=2u32 {
        for (name, f) in &integrands {
            let a = loglog_quadrature(f, k, &coarse);
            let b = loglog_quadrature(f, k, &fine);
            assert!((a - b).abs() < 1e-10, "{name} k={k}: {a} vs {b}");
        }
    }
}

/// Partial sums of the stretch series are Cauchy and land on psi(kz).
#[test]
fn multiplication_series_cauchy_convergence() {
    for &stretch in &[0.25, 0.5, 1.5, 1.75] {
        for &z in &[0.5, 1.0, 2.0] {
            let partial = |terms: usize| {
                let q = MultiplicationQuery::with_terms(stretch, z, terms).unwrap();
                multiplication_digamma(&q).unwrap()
            };
            let mut n = 25;
            let mut gap = f64::INFINITY;
            while n <= 200 {
                gap = (partial(2 * n) - partial(n)).abs();
                if gap < 1e-10 {
                    break;
                }
                n *= 2;
            }
            assert!(
                gap < 1e-10,
                "stretch={stretch} z={z}: |S_2N - S_N| = {gap:e}"
            );
            let full = partial(400);
            let expect = digamma(stretch * z).unwrap();
            assert!((full - expect).abs() < 1e-9, "stretch={stretch} z={z}");
        }
    }
}

/// sum_{n>=1} x^{2n+1} zeta(2n+1)/(2n+1) = -gamma x
///   + [ln Gamma(1-x) - ln Gamma(1+x)]/2 at x = 1/4 and 1/3.
#[test]
fn odd_zeta_series_matches_log_gamma() {
    use stieltjes_core::special::{log_gamma, riemann_zeta_deriv};
    let g = euler_gamma();
    for &x in &[0.25, 1.0 / 3.0] {
        let mut acc = 0.0;
        let mut xp = x;
        for n in 1..=40u32 {
            xp *= x * x;
            let term = xp * riemann_zeta_deriv(0, 2.0 * f64::from(n) + 1.0).unwrap()
                / f64::from(2 * n + 1);
            acc += term;
            if term < 1e-19 {
                break;
            }
        }
        let closed = -g * x + 0.5 * (log_gamma(1.0 - x).unwrap() - log_gamma(1.0 + x).unwrap());
        assert!((acc - closed).abs() < 1e-12, "x={x}: {acc} vs {closed}");
    }
}

/// The normalized asymptotic residual keeps shrinking down to a = 1e-5.
#[test]
fn asymptotic_residual_monotone_to_1e_minus_5() {
    use stieltjes_core::rational::asymptotic_gamma_k;
    for k in 1..=2u32 {
        let mut prev = f64::INFINITY;
        for e in 2..=5i32 {
            let a = 10f64.powi(-e);
            let oracle = stieltjes_oracle(k, a).unwrap().value;
            let asym = asymptotic_gamma_k(k, a).unwrap().value;
            let normalized = (oracle - asym).abs() * a / a.ln().abs().powi(k as i32);
            assert!(
                normalized < prev,
                "k={k} a=1e-{e}: {normalized:e} >= {prev:e}"
            );
            prev = normalized;
        }
    }
}

/// The advisory error estimates stay small where the defaults are sized for.
#[test]
fn oracle_error_estimates_are_tiny() {
    for &a in &[0.25, 1.0, 2.0] {
        for k in 0..=3u32 {
            let v = stieltjes_oracle(k, a).unwrap();
            assert!(
                v.err_estimate < 1e-12,
                "k={k} a={a}: err {}",
                v.err_estimate
            );
        }
    }
}
