//! Named identity checks behind `stieltjes verify`.

use std::f64::consts::PI;

use stieltjes_core::hurwitz::{euler_gamma, stieltjes_constant, stieltjes_oracle, RationalArg};
use stieltjes_core::loglog::{
    i2_pipeline, integral_family_i, integral_family_i_quadrature, integral_family_j,
    integral_family_j_quadrature, integral_i_omega, integral_i_omega_quadrature, integral_i_pq,
    CycloSign, IntegralSpec, Route,
};
use stieltjes_core::rational::{
    asymptotic_gamma_k, gamma1_rational, gamma2_fourier, gamma2_rational, multiplication_digamma,
    multiplication_general, multiplication_stieltjes, residue_sum, zeta_deriv_zero_sums,
    FourierKind, MultiplicationQuery,
};
use stieltjes_core::special::digamma;
use stieltjes_core::{hurwitz_zeta_sderiv, Result};

pub struct CheckReport {
    pub name: &'static str,
    pub max_delta: f64,
    pub tol: f64,
    pub pass: bool,
    pub detail: String,
}

impl CheckReport {
    fn from_deltas(name: &'static str, max_delta: f64, tol: f64, detail: String) -> Self {
        CheckReport {
            name,
            max_delta,
            tol,
            pass: max_delta <= tol,
            detail,
        }
    }
}

pub const CHECK_NAMES: &[&str] = &[
    "prop1",
    "cor1",
    "cor2",
    "prop2",
    "prop3",
    "prop4",
    "prop5",
    "i2",
    "iomega",
    "constants",
];

pub struct CheckScope {
    pub m_max: u32,
    pub q_max: u32,
    pub tol_override: Option<f64>,
}

fn tol(scope: &CheckScope, default: f64) -> f64 {
    scope.tol_override.unwrap_or(default)
}

/// gamma_1/gamma_2 closed forms against the summation oracle.
fn check_prop1(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    let mut cases = 0u32;
    for m in 2..=scope.m_max {
        for j in 1..m {
            let arg = RationalArg::new(j, m)?;
            let a = arg.as_real();
            let d1 = (gamma1_rational(arg)?.value - stieltjes_oracle(1, a)?.value).abs();
            // gamma_2 carries a 10x looser bound; fold onto one scale.
            let d2 = (gamma2_rational(arg)?.value - stieltjes_oracle(2, a)?.value).abs() / 10.0;
            worst = worst.max(d1).max(d2);
            cases += 1;
        }
    }
    Ok(CheckReport::from_deltas(
        "prop1",
        worst,
        tol(scope, 1e-9),
        format!("{cases} cases, m <= {}", scope.m_max),
    ))
}

fn check_cor1(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for q in 1..=scope.q_max.max(1) {
        for k in 1..=2u32 {
            let mut acc = 0.0;
            for r in 1..q {
                let arg = RationalArg::new(r, q)?;
                acc += if k == 1 {
                    gamma1_rational(arg)?.value
                } else {
                    gamma2_rational(arg)?.value
                };
            }
            acc += stieltjes_oracle(k, 1.0)?.value;
            worst = worst.max((acc - residue_sum(k, q)?).abs());
        }
    }
    Ok(CheckReport::from_deltas(
        "cor1",
        worst,
        tol(scope, 1e-8),
        format!("q <= {}, k in {{1,2}}", scope.q_max),
    ))
}

fn check_cor2(scope: &CheckScope) -> Result<CheckReport> {
    let m_max = scope.m_max.min(8);
    let mut worst: f64 = 0.0;
    for m in 2..=m_max {
        for ell in 1..m {
            for kind in [FourierKind::Sine, FourierKind::Cosine] {
                let closed = gamma2_fourier(ell, m, kind)?;
                let mut acc = 0.0;
                for j in 1..m {
                    let gj = stieltjes_oracle(2, f64::from(j) / f64::from(m))?.value;
                    let ang = 2.0 * PI * f64::from(j) * f64::from(ell) / f64::from(m);
                    acc += 0.5
                        * gj
                        * match kind {
                            FourierKind::Sine => ang.sin(),
                            FourierKind::Cosine => ang.cos(),
                        };
                }
                worst = worst.max((closed - acc).abs());
            }
        }
    }
    // Derivative sums carry a 10x tighter bound; fold onto one scale.
    for m in 2..=scope.m_max.min(10) {
        for order in 1..=3usize {
            let closed = zeta_deriv_zero_sums(m, order as u32)?;
            let mut acc = 0.0;
            for l in 1..m {
                acc += hurwitz_zeta_sderiv(order, 0.0, f64::from(l) / f64::from(m))?;
            }
            worst = worst.max(10.0 * (closed - acc).abs());
        }
    }
    Ok(CheckReport::from_deltas(
        "cor2",
        worst,
        tol(scope, 1e-8),
        format!(
            "transforms m <= {m_max}, derivative sums m <= {}",
            scope.m_max.min(10)
        ),
    ))
}

const STRETCHES: [f64; 4] = [0.25, 0.5, 1.5, 1.75];
const BASES: [f64; 3] = [0.5, 1.0, 2.0];

fn check_prop2(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for &stretch in &STRETCHES {
        for &z in &BASES {
            let q = MultiplicationQuery::with_terms(stretch, z, 400)?;
            worst = worst.max((multiplication_digamma(&q)? - digamma(stretch * z)?).abs());
        }
    }
    Ok(CheckReport::from_deltas(
        "prop2",
        worst,
        tol(scope, 1e-9),
        "12 grid points".into(),
    ))
}

fn check_prop3(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for &stretch in &STRETCHES {
        for &z in &BASES {
            let q = MultiplicationQuery::with_terms(stretch, z, 400)?;
            for ell in 1..=2u32 {
                let series = multiplication_stieltjes(ell, &q)?.value;
                let oracle = stieltjes_oracle(ell, stretch * z)?.value;
                worst = worst.max((series - oracle).abs());
                // Internal equivalence carries a 100x tighter bound.
                let general = multiplication_general(ell, &q)?.value;
                worst = worst.max(100.0 * (general - series).abs());
            }
        }
    }
    Ok(CheckReport::from_deltas(
        "prop3",
        worst,
        tol(scope, 1e-8),
        "12 grid points, ell in {1,2}, + Stirling-form equivalence".into(),
    ))
}

fn check_prop4(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    let q_max = scope.q_max.min(8);
    for q in 2..=q_max {
        for p in 1..q {
            for k in 1..=2u32 {
                let roots = integral_i_pq(k, p, q, Route::ClosedFormRoots)?;
                let stj = integral_i_pq(k, p, q, Route::ClosedFormStieltjes)?;
                let quad = integral_i_pq(k, p, q, Route::Quadrature)?;
                worst = worst.max((roots.value - stj.value).abs());
                worst = worst.max((roots.value - quad.value).abs());
                worst = worst.max((stj.value - quad.value).abs());
            }
        }
    }
    Ok(CheckReport::from_deltas(
        "prop4",
        worst,
        tol(scope, 1e-7),
        format!("three routes pairwise, q <= {q_max}"),
    ))
}

fn check_prop5(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for k in 1..=2u32 {
        let mut prev = f64::INFINITY;
        for e in 2..=4i32 {
            let a = 10f64.powi(-e);
            let oracle = stieltjes_oracle(k, a)?.value;
            let asym = asymptotic_gamma_k(k, a)?.value;
            let normalized = (oracle - asym).abs() * a / a.ln().abs().powi(k as i32);
            if normalized >= prev {
                worst = f64::INFINITY; // approach must be monotone
            }
            prev = normalized;
            if e == 4 {
                worst = worst.max(normalized);
            }
        }
    }
    Ok(CheckReport::from_deltas(
        "prop5",
        worst,
        tol(scope, 1e-2),
        "normalized residual at a = 1e-4, monotone over 1e-2..1e-4".into(),
    ))
}

fn check_i2(scope: &CheckScope) -> Result<CheckReport> {
    let d = i2_pipeline()?;
    let quad = IntegralSpec::I2.quadrature()?;
    let mut worst: f64 = 0.0;
    let forms = d.closed_forms;
    for i in 0..3 {
        for j in (i + 1)..3 {
            worst = worst.max((forms[i] - forms[j]).abs());
        }
    }
    worst = worst.max(d.conversion_max_delta);
    worst = worst.max(d.ln_gamma_series_delta);
    // Quadrature agreement carries a 1e-9 budget on the 1e-12 scale.
    worst = worst.max((d.value - quad).abs() / 1000.0);
    Ok(CheckReport::from_deltas(
        "i2",
        worst,
        tol(scope, 1e-12),
        "three closed forms, series conversions, quadrature".into(),
    ))
}

fn check_iomega(scope: &CheckScope) -> Result<CheckReport> {
    let mut worst: f64 = 0.0;
    for &delta in &[PI / 4.0, PI / 2.0, 2.0 * PI / 3.0, PI] {
        worst = worst.max((integral_i_omega(delta)? - integral_i_omega_quadrature(delta)?).abs());
    }
    // Cross-family corners: delta = pi/2 is the 1/(1+x^2) integral and
    // delta = 2 pi/3 the 1/(1+x+x^2) one.
    worst = worst.max((integral_i_omega(PI / 2.0)? - integral_family_j(2.0, 0.0, 1)?).abs());
    worst = worst.max(
        (integral_i_omega(2.0 * PI / 3.0)? - integral_family_i(3, 0.0, CycloSign::Plus)?).abs(),
    );
    let _ = integral_family_i_quadrature(3, 0.0, CycloSign::Plus)?;
    let _ = integral_family_j_quadrature(2.0, 0.0, 1)?;
    Ok(CheckReport::from_deltas(
        "iomega",
        worst,
        tol(scope, 1e-7),
        "two-cosine closed form vs quadrature and sibling families".into(),
    ))
}

fn check_constants(scope: &CheckScope) -> Result<CheckReport> {
    const GAMMA: f64 = 0.5772156649015329;
    const GAMMA1: f64 = -0.0728158454836767;
    const GAMMA2: f64 = -0.0096903631928723;
    let mut worst = (stieltjes_oracle(0, 1.0)?.value - GAMMA).abs();
    worst = worst.max((stieltjes_oracle(1, 1.0)?.value - GAMMA1).abs());
    worst = worst.max((stieltjes_oracle(2, 1.0)?.value - GAMMA2).abs());
    let g = euler_gamma();
    let g1 = stieltjes_constant(1)?;
    let direct = 1.0 - PI * PI / 8.0 + 2.0 * g1 + g * g;
    worst = worst.max((stieltjes_core::special::zero_power_sums(2)? - direct).abs());
    Ok(CheckReport::from_deltas(
        "constants",
        worst,
        tol(scope, 1e-12),
        "oracle constants vs published values, zero-sum self-consistency".into(),
    ))
}

pub fn run_check(name: &str, scope: &CheckScope) -> Result<CheckReport> {
    match name {
        "prop1" => check_prop1(scope),
        "cor1" => check_cor1(scope),
        "cor2" => check_cor2(scope),
        "prop2" => check_prop2(scope),
        "prop3" => check_prop3(scope),
        "prop4" => check_prop4(scope),
        "prop5" => check_prop5(scope),
        "i2" => check_i2(scope),
        "iomega" => check_iomega(scope),
        "constants" => check_constants(scope),
        other => Err(stieltjes_core::Error::Range(format!(
            "unknown check `{other}`"
        ))),
    }
}
