//! Real-argument special functions: ln Gamma, digamma, polygamma, the
//! Riemann zeta function with its first three derivatives, the Gauss
//! digamma formula at rational argument, and reciprocal-power sums over
//! the nontrivial zeta zeros.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::hurwitz::{self, EulerMaclaurinPlan};
use crate::sum::KahanSum;
use crate::tables::bernoulli_table;

pub const LN_2PI: f64 = 1.837_877_066_409_345_5;

/// Arguments are raised above this before the asymptotic series applies.
const ASYMPTOTIC_CUTOFF: f64 = 10.0;
/// Bernoulli terms kept in the ln Gamma / digamma asymptotic series.
const ASYMPTOTIC_TERMS: usize = 8;

/// ln Gamma(x), x > 0, by the Stirling series after argument-raising.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("ln Gamma needs x > 0, got {x}")));
    }
    let mut shift = KahanSum::new();
    let mut t = x;
    while t < ASYMPTOTIC_CUTOFF {
        shift.add(t.ln());
        t += 1.0;
    }
    // ln Gamma(t) = (t - 1/2) ln t - t + ln(2 pi)/2 + sum B_2j / (2j(2j-1) t^{2j-1}).
    let bern = bernoulli_table();
    let mut acc = KahanSum::new();
    acc.add((t - 0.5) * t.ln());
    acc.add(-t);
    acc.add(0.5 * LN_2PI);
    let inv_t2 = 1.0 / (t * t);
    let mut tpow = 1.0 / t;
    for j in 1..=ASYMPTOTIC_TERMS {
        let two_j = 2 * j;
        let b = bern.number_f64(two_j)?;
        acc.add(b / ((two_j * (two_j - 1)) as f64) * tpow);
        tpow *= inv_t2;
    }
    Ok(acc.total() - shift.total())
}

/// psi(x) = d/dx ln Gamma(x), x > 0.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(Error::Domain(format!("digamma needs x > 0, got {x}")));
    }
    let mut shift = KahanSum::new();
    let mut t = x;
    while t < ASYMPTOTIC_CUTOFF {
        shift.add(1.0 / t);
        t += 1.0;
    }
    // psi(t) = ln t - 1/(2t) - sum B_2j / (2j t^{2j}).
    let bern = bernoulli_table();
    let mut acc = KahanSum::new();
    acc.add(t.ln());
    acc.add(-0.5 / t);
    let inv_t2 = 1.0 / (t * t);
    let mut tpow = inv_t2;
    for j in 1..=ASYMPTOTIC_TERMS {
        let two_j = 2 * j;
        acc.add(-bern.number_f64(two_j)? / two_j as f64 * tpow);
        tpow *= inv_t2;
    }
    Ok(acc.total() - shift.total())
}

/// Highest polygamma order served.
pub const POLYGAMMA_MAX_ORDER: u32 = 6;

/// psi^(n)(x): order 0 is digamma; orders 1..=6 go through
/// psi^(n)(x) = (-1)^{n+1} n! zeta(n+1, x).
pub fn polygamma(order: u32, x: f64) -> Result<f64> {
    if order > POLYGAMMA_MAX_ORDER {
        return Err(Error::Range(format!(
            "polygamma order {order} exceeds max {POLYGAMMA_MAX_ORDER}"
        )));
    }
    if !(x > 0.0) {
        return Err(Error::Domain(format!("polygamma needs x > 0, got {x}")));
    }
    if order == 0 {
        return digamma(x);
    }
    let mut fact = 1.0;
    for i in 2..=order {
        fact *= i as f64;
    }
    let sign = if order % 2 == 1 { 1.0 } else { -1.0 };
    let z = hurwitz::hurwitz_zeta(order as f64 + 1.0, x, &EulerMaclaurinPlan::default())?;
    Ok(sign * fact * z)
}

/// Leibniz product rule through third order.
fn leibniz(f: &[f64; 4], g: &[f64; 4]) -> [f64; 4] {
    [
        f[0] * g[0],
        f[1] * g[0] + f[0] * g[1],
        f[2] * g[0] + 2.0 * f[1] * g[1] + f[0] * g[2],
        f[3] * g[0] + 3.0 * f[2] * g[1] + 3.0 * f[1] * g[2] + f[0] * g[3],
    ]
}

/// All four derivative orders of zeta at s > 0 (s != 1) by Euler-Maclaurin.
fn zeta_em_derivs(s: f64) -> Result<[f64; 4]> {
    let plan = EulerMaclaurinPlan::default().with_derivative_order(3);
    let d = hurwitz::hurwitz_zeta_derivs(s, 1.0, &plan)?;
    Ok([d.deriv(0), d.deriv(1), d.deriv(2), d.deriv(3)])
}

/// Derivatives of zeta(s) for s < 0 by differentiating the functional
/// equation zeta(s) = 2 (2pi)^{s-1} sin(pi s/2) Gamma(1-s) zeta(1-s)
/// factor by factor (the explicit product rule stays finite at the
/// trivial zeros where a logarithmic derivative would not).
pub(crate) fn zeta_functional_equation_derivs(s: f64) -> Result<[f64; 4]> {
    let x = 1.0 - s; // > 1
                     // F1 = 2 (2pi)^{s-1}: each derivative multiplies by ln(2pi).
    let f1v = 2.0 * (2.0 * PI).powf(s - 1.0);
    let f1 = [
        f1v,
        f1v * LN_2PI,
        f1v * LN_2PI * LN_2PI,
        f1v * LN_2PI.powi(3),
    ];
    // F2 = sin(pi s/2).
    let half_pi = PI / 2.0;
    let (sv, cv) = (half_pi * s).sin_cos();
    let f2 = [
        sv,
        half_pi * cv,
        -half_pi * half_pi * sv,
        -half_pi * half_pi * half_pi * cv,
    ];
    // F3 = Gamma(1-s): chain rule brings a sign per derivative.
    let g = log_gamma(x)?.exp();
    let psi0 = digamma(x)?;
    let psi1 = polygamma(1, x)?;
    let psi2 = polygamma(2, x)?;
    let f3 = [
        g,
        -g * psi0,
        g * (psi0 * psi0 + psi1),
        -g * (psi0.powi(3) + 3.0 * psi0 * psi1 + psi2),
    ];
    // F4 = zeta(1-s): each derivative flips sign.
    let z = zeta_em_derivs(x)?;
    let f4 = [z[0], -z[1], z[2], -z[3]];

    let left = leibniz(&f1, &f2);
    let right = leibniz(&f3, &f4);
    Ok(leibniz(&left, &right))
}

fn is_negative_even_integer(s: f64) -> Option<u32> {
    if s < 0.0 && s.fract() == 0.0 {
        let m = (-s) as u64;
        if m.is_multiple_of(2) {
            return Some((m / 2) as u32);
        }
    }
    None
}

/// zeta(2m+1) for the trivial-zero derivative formula.
fn zeta_odd(m: u32) -> Result<f64> {
    zeta_em_derivs(2.0 * m as f64 + 1.0).map(|d| d[0])
}

/// zeta^(order)(s) for real s != 1, order 0..=3.
///
/// s > 0 uses the differentiated Euler-Maclaurin form; s = 0 uses the
/// closed forms in gamma, gamma_1, gamma_2; s < 0 differentiates the
/// functional equation. At the trivial zeros, zeta(-2m) = 0 and
/// zeta'(-2m) = (-1)^m (2m)! zeta(2m+1) / (2 (2pi)^{2m}).
pub fn riemann_zeta_deriv(order: u32, s: f64) -> Result<f64> {
    if order > 3 {
        return Err(Error::Range(format!(
            "zeta derivative order {order} capped at 3"
        )));
    }
    if s == 1.0 {
        return Err(Error::Pole);
    }
    if s == 0.0 {
        let g = hurwitz::euler_gamma();
        let g1 = hurwitz::stieltjes_constant(1)?;
        let g2 = hurwitz::stieltjes_constant(2)?;
        return Ok(match order {
            0 => -0.5,
            1 => -0.5 * LN_2PI,
            2 => g1 + g * g / 2.0 - PI * PI / 24.0 - LN_2PI * LN_2PI / 2.0,
            _ => {
                g.powi(3) + 1.5 * g * g * LN_2PI - PI * PI / 8.0 * LN_2PI - LN_2PI.powi(3) / 2.0
                    + 3.0 * (g + LN_2PI) * g1
                    + 1.5 * g2
                    - zeta_odd(1)?
            }
        });
    }
    if s > 0.0 {
        return Ok(zeta_em_derivs(s)?[order as usize]);
    }
    if let Some(m) = is_negative_even_integer(s) {
        match order {
            0 => return Ok(0.0),
            1 => {
                let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
                let mut fact = 1.0;
                for i in 2..=2 * m {
                    fact *= i as f64;
                }
                return Ok(sign * fact * zeta_odd(m)? / (2.0 * (2.0 * PI).powi(2 * m as i32)));
            }
            _ => {}
        }
    }
    Ok(zeta_functional_equation_derivs(s)?[order as usize])
}

/// Gauss digamma formula at rational argument j/m, 1 <= j < m:
/// psi(j/m) = -gamma - ln(2 pi m) - (pi/2) cot(pi j/m)
///            - 2 sum_{r<m} cos(2 pi j r/m) ln Gamma(r/m).
pub fn digamma_rational_gauss(j: u32, m: u32) -> Result<f64> {
    if j == 0 || j >= m {
        return Err(Error::Domain(format!(
            "Gauss formula needs 1 <= j < m, got j={j} m={m}"
        )));
    }
    let mf = f64::from(m);
    let angle = PI * f64::from(j) / mf;
    let mut acc = KahanSum::new();
    acc.add(-hurwitz::euler_gamma());
    acc.add(-(2.0 * PI * mf).ln());
    acc.add(-PI / 2.0 * angle.cos() / angle.sin());
    for r in 1..m {
        // Reduced residue avoids large trig arguments.
        let t = (u64::from(j) * u64::from(r)) % u64::from(m);
        let c = (2.0 * PI * t as f64 / mf).cos();
        acc.add(-2.0 * c * log_gamma(f64::from(r) / mf)?);
    }
    Ok(acc.total())
}

static ZETA3: OnceLock<f64> = OnceLock::new();

/// zeta(3), cached.
pub fn apery() -> f64 {
    *ZETA3.get_or_init(|| zeta_odd(1).expect("zeta(3) evaluates"))
}

/// Sums over the nontrivial zeta zeros:
/// r = 2: sum rho^-2 = 1 - pi^2/8 + 2 gamma_1 + gamma^2
/// r = 3: sum rho^-3 = 1 - (7/8) zeta(3) + gamma^3 + 3 gamma gamma_1 + (3/2) gamma_2
pub fn zero_power_sums(r: u32) -> Result<f64> {
    let g = hurwitz::euler_gamma();
    let g1 = hurwitz::stieltjes_constant(1)?;
    match r {
        2 => Ok(1.0 - PI * PI / 8.0 + 2.0 * g1 + g * g),
        3 => {
            let g2 = hurwitz::stieltjes_constant(2)?;
            Ok(1.0 - 7.0 / 8.0 * apery() + g.powi(3) + 3.0 * g * g1 + 1.5 * g2)
        }
        other => Err(Error::Range(format!(
            "zero power sum supports r in {{2,3}}, got {other}"
        ))),
    }
}
