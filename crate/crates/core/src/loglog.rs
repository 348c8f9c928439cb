//! Evaluation of ∫₀¹ lnᵏ(-ln x) · (rational factor) dx families: the
//! digamma-generalizing I_pq integrals over roots of unity, the cyclotomic
//! denominators I_{+n}/I_{-n}, the J_p family, the two-cosine denominator
//! I_omega, and simple/higher pole integrands. Each closed form is paired
//! with independent quadrature; complex routes keep every logarithm on the
//! principal branch and surface the discarded imaginary part.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hurwitz::{euler_gamma, stieltjes_constant, stieltjes_oracle};
use crate::policy::PrecisionPolicy;
use crate::polylog::{polylog_sderiv_at1, zeta_prime_neg, ZETA_DERIV_TABLE_LEN};
use crate::quad::{exp_decay_quadrature, loglog_quadrature};
use crate::special;
use crate::sum::KahanSum;
use crate::tables::stirling_table;

/// Largest imaginary residual a complex-assembled real integral may discard.
pub const REALNESS_TOL: f64 = 1e-10;

/// How an integral value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    ClosedFormRoots,
    ClosedFormStieltjes,
    Quadrature,
}

impl std::fmt::Display for Route {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Route::ClosedFormRoots => "closed_form_roots",
            Route::ClosedFormStieltjes => "closed_form_stieltjes",
            Route::Quadrature => "quadrature",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct IntegralResult {
    pub value: f64,
    pub route: Route,
    /// Magnitude of the imaginary part discarded by a complex route;
    /// zero for real routes.
    pub imag_residual: f64,
}

/// Principal logarithm that lands on the +i pi side of the cut even when a
/// complex division produced a negative-zero imaginary part.
fn principal_ln(z: Complex64) -> Complex64 {
    if z.im == 0.0 && z.re < 0.0 {
        Complex64::new(z.norm().ln(), PI)
    } else {
        z.ln()
    }
}

/// exp(2 pi i t / m) with the angle folded to (-pi, pi], so boundary roots
/// (t/m = 1/2) sit on the principal side of the cut.
fn unit_root(t: i64, m: u32) -> Complex64 {
    let m = i64::from(m);
    let mut r = t % m;
    if 2 * r > m {
        r -= m;
    } else if 2 * r <= -m {
        r += m;
    }
    Complex64::from_polar(1.0, 2.0 * PI * r as f64 / m as f64)
}

fn accept_real(value: Complex64, route: Route) -> Result<IntegralResult> {
    let resid = value.im.abs();
    if resid > REALNESS_TOL {
        return Err(Error::BranchCut(resid));
    }
    Ok(IntegralResult {
        value: value.re,
        route,
        imag_residual: resid,
    })
}

/// I^k_pq = q ∫₀¹ (x^{q-1} - x^{p-1})/(1 - x^q) lnᵏ(-ln x) dx, 0 < p < q.
///
/// Roots route: partial fractions over omega_j = exp(2 pi i j/q) and the
/// Li_s s-derivatives; Stieltjes route: the psi/gamma_1/gamma_2 closed
/// forms; Quadrature: the stable expm1 form of the integrand.
pub fn integral_i_pq(k: u32, p: u32, q: u32, route: Route) -> Result<IntegralResult> {
    if !(p > 0 && p < q) {
        return Err(Error::Domain(format!(
            "I_pq needs 0 < p < q, got p={p} q={q}"
        )));
    }
    if !(k == 1 || k == 2) {
        return Err(Error::Range(format!("log power must be 1 or 2, got {k}")));
    }
    let policy = PrecisionPolicy::global();
    let g = euler_gamma();
    match route {
        Route::ClosedFormRoots => {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in 1..q {
                let omega_inv = unit_root(-(j as i64), q);
                let omega_p = unit_root(j as i64 * p as i64, q);
                // (omega - 1)/omega = 1 - omega^{-1}.
                let ln_ratio = principal_ln(Complex64::new(1.0, 0.0) - omega_inv);
                let d1 = polylog_sderiv_at1(1, omega_inv, policy)?;
                let bracket = if k == 1 {
                    ln_ratio * g + d1
                } else {
                    let d2 = polylog_sderiv_at1(2, omega_inv, policy)?;
                    ln_ratio * (g * g + PI * PI / 6.0) + d1 * (2.0 * g) - d2
                };
                acc += (omega_p - 1.0) * bracket;
            }
            let total = if k == 1 { -acc } else { acc };
            accept_real(total, Route::ClosedFormRoots)
        }
        Route::ClosedFormStieltjes => {
            let pq = f64::from(p) / f64::from(q);
            let lq = f64::from(q).ln();
            let psi = special::digamma(pq)?;
            let g1 = stieltjes_constant(1)?;
            let g1pq = stieltjes_oracle(1, pq)?.value;
            let value = if k == 1 {
                -(g + lq) * (g + psi) + g1pq - g1
            } else {
                let g2 = stieltjes_constant(2)?;
                let g2pq = stieltjes_oracle(2, pq)?.value;
                (g * g + PI * PI / 6.0 + 2.0 * g * lq + lq * lq) * (g + psi)
                    - 2.0 * (g + lq) * (g1pq - g1)
                    + g2
                    - g2pq
            };
            Ok(IntegralResult {
                value,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            })
        }
        Route::Quadrature => {
            let (pf, qf) = (f64::from(p), f64::from(q));
            // q (x^{q-1} - x^{p-1})/(1 - x^q)
            //   = -q e^{-(p-1)u} expm1(-(q-p)u)/expm1(-qu), stable at x -> 1.
            let f = move |_x: f64, u: f64| {
                -qf * (-(pf - 1.0) * u).exp() * (-(qf - pf) * u).exp_m1() / (-qf * u).exp_m1()
            };
            let value = loglog_quadrature(f, k, policy);
            Ok(IntegralResult {
                value,
                route: Route::Quadrature,
                imag_residual: 0.0,
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CycloSign {
    /// Denominator x^{n-1} + x^{n-2} + ... + 1.
    Plus,
    /// Denominator x^{n-1} - x^{n-2} + ... + 1, n odd.
    Minus,
}

/// ∫₀¹ x^qexp lnᵏ(-ln x)/(x^{n-1} ± x^{n-2} + ... + 1) dx with k = 1:
///
/// plus:  (gamma + ln n)/n [psi((q+1)/n) - psi((q+2)/n)]
///        + [gamma_1((q+2)/n) - gamma_1((q+1)/n)]/n
/// minus: (gamma + ln 2n)/(2n) [psi((q+1)/2n) + psi((q+2)/2n)
///          - psi((n+q+1)/2n) - psi((n+q+2)/2n)]
///        + [gamma_1((n+q+1)/2n) + gamma_1((n+q+2)/2n)
///          - gamma_1((q+1)/2n) - gamma_1((q+2)/2n)]/(2n)
pub fn integral_family_i(n: u32, qexp: f64, sign: CycloSign) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "denominator degree needs n >= 2, got {n}"
        )));
    }
    if !(qexp > -1.0) {
        return Err(Error::Domain(format!(
            "power exponent must exceed -1, got {qexp}"
        )));
    }
    let g = euler_gamma();
    let nf = f64::from(n);
    match sign {
        CycloSign::Plus => {
            let a = (qexp + 1.0) / nf;
            let b = (qexp + 2.0) / nf;
            Ok(
                (g + nf.ln()) / nf * (special::digamma(a)? - special::digamma(b)?)
                    + (stieltjes_oracle(1, b)?.value - stieltjes_oracle(1, a)?.value) / nf,
            )
        }
        CycloSign::Minus => {
            if n.is_multiple_of(2) {
                return Err(Error::Domain(format!(
                    "alternating denominator needs odd n, got {n}"
                )));
            }
            let two_n = 2.0 * nf;
            let a1 = (qexp + 1.0) / two_n;
            let a2 = (qexp + 2.0) / two_n;
            let b1 = (nf + qexp + 1.0) / two_n;
            let b2 = (nf + qexp + 2.0) / two_n;
            let psi_part = special::digamma(a1)? + special::digamma(a2)?
                - special::digamma(b1)?
                - special::digamma(b2)?;
            let g1_part = stieltjes_oracle(1, b1)?.value + stieltjes_oracle(1, b2)?.value
                - stieltjes_oracle(1, a1)?.value
                - stieltjes_oracle(1, a2)?.value;
            Ok((g + two_n.ln()) / two_n * psi_part + g1_part / two_n)
        }
    }
}

/// The grid weights carry x^{1+qexp} per node; below this exponent the
/// far tail underflows node by node while the true contribution does not,
/// so the quadrature reference refuses the last sliver of the closed
/// forms' qexp > -1 domain.
const QUAD_QEXP_MIN: f64 = -0.9;

fn check_quad_qexp(qexp: f64) -> Result<()> {
    if qexp <= QUAD_QEXP_MIN {
        return Err(Error::Domain(format!(
            "quadrature reference supports qexp > {QUAD_QEXP_MIN}, got {qexp}; the closed form covers qexp > -1"
        )));
    }
    Ok(())
}

/// Quadrature oracle for the same integrand (k = 1).
pub fn integral_family_i_quadrature(n: u32, qexp: f64, sign: CycloSign) -> Result<f64> {
    if n < 2 {
        return Err(Error::Domain(format!(
            "denominator degree needs n >= 2, got {n}"
        )));
    }
    check_quad_qexp(qexp)?;
    if sign == CycloSign::Minus && n.is_multiple_of(2) {
        return Err(Error::Domain(format!(
            "alternating denominator needs odd n, got {n}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let nf = f64::from(n);
    let value = match sign {
        // x^q (1-x)/(1-x^n), stable via expm1.
        CycloSign::Plus => loglog_quadrature(
            move |_x, u| (-qexp * u).exp() * (-u).exp_m1() / (-nf * u).exp_m1(),
            1,
            policy,
        ),
        // x^q (1+x)/(1+x^n): no cancellation anywhere.
        CycloSign::Minus => loglog_quadrature(
            move |x, u| (-qexp * u).exp() * (1.0 + x) / (1.0 + x.powf(nf)),
            1,
            policy,
        ),
    };
    Ok(value)
}

/// J_p^q = ∫₀¹ x^qexp lnᵏ(-ln x)/(1 + x^p) dx, Re p > 0, qexp > -1:
///
/// power 1: (gamma + ln 2p)/(2p) [psi((q+1)/2p) - psi((p+q+1)/2p)]
///          + [gamma_1((p+q+1)/2p) - gamma_1((q+1)/2p)]/(2p)
/// power 2 (qexp = 0): [gamma² + pi²/6 + 2 gamma ln 2p + ln² 2p]/(2p)
///          [psi((p+1)/2p) - psi(1/2p)]
///          + (gamma + ln 2p)/p [gamma_1(1/2p) - gamma_1((p+1)/2p)]
///          + [gamma_2(1/2p) - gamma_2((p+1)/2p)]/(2p)
pub fn integral_family_j(p: f64, qexp: f64, power: u32) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("J family needs p > 0, got {p}")));
    }
    if !(qexp > -1.0) {
        return Err(Error::Domain(format!(
            "power exponent must exceed -1, got {qexp}"
        )));
    }
    let g = euler_gamma();
    let two_p = 2.0 * p;
    let l2p = two_p.ln();
    match power {
        1 => {
            let a = (qexp + 1.0) / two_p;
            let b = (p + qexp + 1.0) / two_p;
            Ok(
                (g + l2p) / two_p * (special::digamma(a)? - special::digamma(b)?)
                    + (stieltjes_oracle(1, b)?.value - stieltjes_oracle(1, a)?.value) / two_p,
            )
        }
        2 => {
            if qexp != 0.0 {
                return Err(Error::Domain("squared-log J form requires qexp = 0".into()));
            }
            let a = 1.0 / two_p;
            let b = (p + 1.0) / two_p;
            Ok((g * g + PI * PI / 6.0 + 2.0 * g * l2p + l2p * l2p) / two_p
                * (special::digamma(b)? - special::digamma(a)?)
                + (g + l2p) / p * (stieltjes_oracle(1, a)?.value - stieltjes_oracle(1, b)?.value)
                + (stieltjes_oracle(2, a)?.value - stieltjes_oracle(2, b)?.value) / two_p)
        }
        other => Err(Error::Range(format!(
            "log power must be 1 or 2, got {other}"
        ))),
    }
}

pub fn integral_family_j_quadrature(p: f64, qexp: f64, power: u32) -> Result<f64> {
    if !(p > 0.0) {
        return Err(Error::Domain(format!("J family needs p > 0, got {p}")));
    }
    if !(power == 1 || power == 2) {
        return Err(Error::Range(format!(
            "log power must be 1 or 2, got {power}"
        )));
    }
    check_quad_qexp(qexp)?;
    let policy = PrecisionPolicy::global();
    Ok(loglog_quadrature(
        move |x, u| (-qexp * u).exp() / (1.0 + x.powf(p)),
        power,
        policy,
    ))
}

/// I_omega = ∫₀¹ ln(-ln x)/(x² - 2x cos(delta) + 1) dx for -pi < delta <= pi,
/// delta != 0:
///
/// -pi/(2 sin d) [ (d/pi) ln 2pi - ln d + ln Gamma(1 + d/2pi)
///                 - ln Gamma(1 - d/2pi) ],  d = |delta|,
///
/// with the removable 0/0 at d = pi replaced by its limit (ln(pi/2) - gamma)/2.
pub fn integral_i_omega(delta: f64) -> Result<f64> {
    if !(delta > -PI && delta <= PI) {
        return Err(Error::Domain(format!(
            "delta must lie in (-pi, pi], got {delta}"
        )));
    }
    let d = delta.abs();
    if d.sin() < 1e-6 && d < 1.0 {
        return Err(Error::Singular(format!(
            "double pole at x = 1 as delta -> 0 (delta = {delta})"
        )));
    }
    let g = euler_gamma();
    if PI - d < 1e-8 {
        return Ok(0.5 * ((PI / 2.0).ln() - g));
    }
    let r = d / (2.0 * PI);
    let bracket = d / PI * special::LN_2PI - d.ln() + special::log_gamma(1.0 + r)?
        - special::log_gamma(1.0 - r)?;
    Ok(-PI / (2.0 * d.sin()) * bracket)
}

pub fn integral_i_omega_quadrature(delta: f64) -> Result<f64> {
    if !(delta > -PI && delta <= PI) || delta == 0.0 {
        return Err(Error::Domain(format!(
            "delta must lie in (-pi, pi] \\ {{0}}, got {delta}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let c = delta.cos();
    let s2 = delta.sin() * delta.sin();
    // (x - cos d)^2 + sin^2 d: positive everywhere, no cancellation.
    Ok(loglog_quadrature(
        move |x, _| 1.0 / ((x - c) * (x - c) + s2),
        1,
        policy,
    ))
}

const POLE_ORDER_MAX: u32 = 20;

fn pole_region_ok(a: Complex64) -> bool {
    let on_circle =
        (a.norm() - 1.0).abs() <= 1e-12 && (a - Complex64::new(1.0, 0.0)).norm() > 1e-12;
    on_circle || a.re > 1.0
}

/// ∫₀¹ lnᵏ(-ln x)/(x - a)^{order+1} dx for |a| = 1, a != 1, or Re a > 1.
///
/// order 0, k = 1:  -gamma ln((a-1)/a) - d/ds Li_s(1/a)|_1
/// order 0, k = 2:  (gamma² + pi²/6) ln((a-1)/a) + 2 gamma d/ds Li_s(1/a)|_1
///                  - d²/ds² Li_s(1/a)|_1
/// order m >= 1, k = 1:
///   (gamma/m)(-1)^m [ (a-1)^{-m} - a^{-m} ] - (1/m!) (d/da)^m d/ds Li_s(1/a)|_1
///
/// where the a-derivative is carried analytically through the operator
/// identity (d/da)^m = a^{-m} sum_k s(m,k) theta^k with theta = a d/da,
/// s(m,k) the signed Stirling numbers of the first kind, and
/// theta^k applied to the Li_s derivative giving (with lam = ln(1/a),
/// w = -lam):
///   (-1)^k theta^k = (-1)^k (k-1)! (gamma + ln w - H_{k-1}) / lam^k
///                    + sum_{j>=0} zeta'(-j-k+1) lam^j / j!.
pub fn integral_pole(a: Complex64, k: u32, order: u32) -> Result<Complex64> {
    if (a - Complex64::new(1.0, 0.0)).norm() <= 1e-12 {
        return Err(Error::Singular(
            "pole integrand is non-integrable at a = 1".into(),
        ));
    }
    if !pole_region_ok(a) {
        return Err(Error::Domain(format!(
            "pole location {a} must satisfy |a| = 1, a != 1, or Re a > 1"
        )));
    }
    if !(k == 1 || k == 2) {
        return Err(Error::Range(format!("log power must be 1 or 2, got {k}")));
    }
    if order > 0 && k != 1 {
        return Err(Error::Domain(
            "higher-order poles are evaluated for k = 1 only".into(),
        ));
    }
    if order > POLE_ORDER_MAX {
        return Err(Error::Range(format!(
            "pole order {order} exceeds supported max {POLE_ORDER_MAX}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let g = euler_gamma();
    let one = Complex64::new(1.0, 0.0);
    let z = one / a;
    if order == 0 {
        let ln_ratio = principal_ln((a - one) / a);
        let d1 = polylog_sderiv_at1(1, z, policy)?;
        return Ok(match k {
            1 => ln_ratio * (-g) - d1,
            _ => {
                let d2 = polylog_sderiv_at1(2, z, policy)?;
                ln_ratio * (g * g + PI * PI / 6.0) + d1 * (2.0 * g) - d2
            }
        });
    }

    let m = order as usize;
    let lam = principal_ln(z);
    let w = -lam;
    let ln_w = principal_ln(w);

    // theta^k applied to the Li derivative, k = 1..=m.
    let mut theta_pows = Vec::with_capacity(m);
    let mut fact_km1 = 1.0; // (k-1)!
    let mut harmonic = 0.0; // H_{k-1}
    let mut lam_pow = one; // lam^k
    for kk in 1..=m {
        if kk > 1 {
            fact_km1 *= (kk - 1) as f64;
            harmonic += 1.0 / (kk - 1) as f64;
        }
        lam_pow *= lam;
        let sign = if kk % 2 == 0 { 1.0 } else { -1.0 };
        let head = (Complex64::new(g - harmonic, 0.0) + ln_w) * (sign * fact_km1) / lam_pow;
        let tail = zeta_prime_tail_series(kk - 1, lam, policy)?;
        // D_k: the k-th lam-derivative; theta^k E = (-1)^k D_k.
        theta_pows.push((head + tail) * sign);
    }

    let stirling = stirling_table();
    let mut da_m = Complex64::new(0.0, 0.0);
    for kk in 1..=m {
        let s_mk = stirling.get_f64(m, kk)?;
        da_m += theta_pows[kk - 1] * s_mk;
    }
    da_m *= a.powi(-(m as i32));

    let mut m_fact = 1.0;
    for i in 2..=m {
        m_fact *= i as f64;
    }
    let sign_m = if m.is_multiple_of(2) { 1.0 } else { -1.0 };
    let lead = ((a - one).powi(-(m as i32)) - a.powi(-(m as i32))) * (g / m as f64 * sign_m);
    Ok(lead - da_m / m_fact)
}

/// sum_{j>=0} zeta'(-j-r) lam^j / j!.
fn zeta_prime_tail_series(r: usize, lam: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for j in 0..(ZETA_DERIV_TABLE_LEN - r) {
        if j > 0 {
            pow *= lam / j as f64;
        }
        let term = pow * zeta_prime_neg(j + r)?;
        acc += term;
        if j > 4 && term.norm() < policy.series_term_floor {
            return Ok(acc);
        }
    }
    Err(Error::Range(
        "zeta' tail series exhausted the coefficient table".into(),
    ))
}

/// Quadrature oracle for a real pole location (Re a > 1 or a = -1).
pub fn integral_pole_quadrature(a: f64, k: u32, order: u32) -> Result<f64> {
    if a == 1.0 {
        return Err(Error::Singular(
            "pole integrand is non-integrable at a = 1".into(),
        ));
    }
    let policy = PrecisionPolicy::global();
    let m = order as i32 + 1;
    Ok(loglog_quadrature(move |x, _| (x - a).powi(-m), k, policy))
}

/// zeta(s) for s > 1 via the shared engine.
fn zeta_pos(s: f64) -> Result<f64> {
    special::riemann_zeta_deriv(0, s)
}

/// The root-of-unity evaluation of I2 = ∫₀¹ ln(-ln x)/(1+x²) dx, carried
/// through every intermediate identity it rests on.
#[derive(Debug, Clone, Copy)]
pub struct I2Pipeline {
    /// I2 assembled from the +-i pole pair.
    pub value: f64,
    /// Imaginary part discarded in that assembly.
    pub imag_residual: f64,
    /// Series over zeta'(-2m) before the functional-equation conversion.
    pub via_zeta_prime_series: f64,
    /// Series over zeta(2m+1)/16^m after the conversion.
    pub via_odd_zeta_series: f64,
    /// The three Gamma-function closed forms.
    pub closed_forms: [f64; 3],
    /// Worst relative deviation in 2(-1)^m zeta'(-2m) = (2m)! zeta(2m+1)/(2pi)^{2m}.
    pub conversion_max_delta: f64,
    /// Deviation of sum x^{2n+1} zeta(2n+1)/(2n+1) from its ln Gamma closed
    /// form at x = 1/4.
    pub ln_gamma_series_delta: f64,
}

impl I2Pipeline {
    /// Spread across the six equivalent evaluations of I2.
    pub fn max_spread(&self) -> f64 {
        let vals = [
            self.value,
            self.via_zeta_prime_series,
            self.via_odd_zeta_series,
            self.closed_forms[0],
            self.closed_forms[1],
            self.closed_forms[2],
        ];
        let hi = vals.iter().cloned().fold(f64::MIN, f64::max);
        let lo = vals.iter().cloned().fold(f64::MAX, f64::min);
        hi - lo
    }
}

pub fn i2_pipeline() -> Result<I2Pipeline> {
    let g = euler_gamma();
    let i = Complex64::new(0.0, 1.0);

    // Partial fractions over x -+ i.
    let p_plus = integral_pole(i, 1, 0)?;
    let p_minus = integral_pole(-i, 1, 0)?;
    let assembled = (p_plus - p_minus) / (2.0 * i);

    // pi [gamma/4 + ln(pi/2)/2] + sum_{m>=0} (-1)^m zeta'(-2m) (pi/2)^{2m+1}/(2m+1)!.
    let mut acc = KahanSum::new();
    acc.add(PI * (g / 4.0 + 0.5 * (PI / 2.0).ln()));
    let half_pi = PI / 2.0;
    let mut pow = half_pi; // (pi/2)^{2m+1}/(2m+1)!
    for m in 0..30 {
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let term = sign * zeta_prime_neg(2 * m)? * pow;
        acc.add(term);
        if m > 2 && term.abs() < 1e-18 {
            break;
        }
        let n = (2 * m + 2) as f64;
        pow *= half_pi * half_pi / (n * (n + 1.0));
    }
    let via_zeta_prime_series = acc.total();

    // Functional-equation conversion 2(-1)^m zeta'(-2m) = (2m)! zeta(2m+1)/(2pi)^{2m},
    // with the left side taken from the generic product-rule differentiation
    // so the comparison is not circular.
    let mut conversion_max_delta: f64 = 0.0;
    let mut fact = 1.0; // (2m)!
    for m in 1..=8u32 {
        let n = 2 * m;
        fact *= (n - 1) as f64 * n as f64;
        let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
        let generic = special::zeta_functional_equation_derivs(-(n as f64))?[1];
        let lhs = 2.0 * sign * generic;
        let rhs = fact * zeta_pos(n as f64 + 1.0)? / (2.0 * PI).powi(n as i32);
        let scale = rhs.abs().max(1.0);
        conversion_max_delta = conversion_max_delta.max((lhs - rhs).abs() / scale);
    }

    // (pi/4)[gamma + ln(pi/8) + sum_{m>=1} zeta(2m+1)/(16^m (2m+1))].
    let mut acc = KahanSum::new();
    acc.add(g);
    acc.add((PI / 8.0).ln());
    let mut sixteen = 1.0;
    for m in 1..=25u32 {
        sixteen *= 16.0;
        let term = zeta_pos(2.0 * m as f64 + 1.0)? / (sixteen * (2 * m + 1) as f64);
        acc.add(term);
        if term < 1e-18 {
            break;
        }
    }
    let via_odd_zeta_series = PI / 4.0 * acc.total();

    // sum_{n>=1} x^{2n+1} zeta(2n+1)/(2n+1) = -gamma x
    //   + [ln Gamma(1-x) - ln Gamma(1+x)]/2 at x = 1/4.
    let x = 0.25f64;
    let mut acc = KahanSum::new();
    let mut xp = x;
    for n in 1..=30u32 {
        xp *= x * x;
        let term = xp * zeta_pos(2.0 * n as f64 + 1.0)? / (2 * n + 1) as f64;
        acc.add(term);
        if term < 1e-19 {
            break;
        }
    }
    let closed = -g * x + 0.5 * (special::log_gamma(1.0 - x)? - special::log_gamma(1.0 + x)?);
    let ln_gamma_series_delta = (acc.total() - closed).abs();

    let lg14 = special::log_gamma(0.25)?;
    let lg34 = special::log_gamma(0.75)?;
    let lg54 = special::log_gamma(1.25)?;
    let closed_forms = [
        PI / 4.0 * ((8.0 * PI).ln() + 2.0 * lg34 - 2.0 * lg14 - 4.0f64.ln()),
        PI / 2.0 * (0.5 * special::LN_2PI + lg34 - lg14),
        PI / 4.0 * ((PI / 8.0).ln() + 2.0 * (lg34 - lg54)),
    ];

    Ok(I2Pipeline {
        value: assembled.re,
        imag_residual: assembled.im.abs(),
        via_zeta_prime_series,
        via_odd_zeta_series,
        closed_forms,
        conversion_max_delta,
        ln_gamma_series_delta,
    })
}

/// gamma²/2 + pi²/12 + ln(z) 3F3(1,1,1;2,2,2; ln z) + gamma ln(-ln z) +
/// ln²(-ln z)/2, which equals ∫₁^∞ z^x ln(x)/x dx for 0 < z < 1. The
/// hypergeometric series reduces to sum_j w^j/((j+1)^3 j!).
pub fn hyp3f3_and_zx_integral(z: f64) -> Result<f64> {
    if !(z > 0.0 && z < 1.0) {
        return Err(Error::Domain(format!("needs 0 < z < 1, got {z}")));
    }
    let g = euler_gamma();
    let w = z.ln();
    let mut acc = KahanSum::new();
    let mut pow = 1.0;
    for j in 0..400 {
        if j > 0 {
            pow *= w / j as f64;
        }
        let denom = ((j + 1) * (j + 1) * (j + 1)) as f64;
        let term = pow / denom;
        acc.add(term);
        if j > 4 && term.abs() < 1e-18 {
            break;
        }
    }
    let f33 = acc.total();
    let lw = (-w).ln();
    Ok(g * g / 2.0 + PI * PI / 12.0 + w * f33 + g * lw + 0.5 * lw * lw)
}

/// Direct quadrature of ∫₁^∞ z^x ln(x)/x dx via x = 1 + t. Restricted to
/// z <= 0.9 so the e^{(ln z) t} decay stays strong enough for the grid;
/// the closed form covers all of (0, 1).
pub fn zx_integral_quadrature(z: f64) -> Result<f64> {
    if !(z > 0.0 && z <= 0.9) {
        return Err(Error::Domain(format!(
            "quadrature reference needs 0 < z <= 0.9, got {z}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let lambda = -z.ln();
    Ok(exp_decay_quadrature(
        move |t| z * (1.0 + t).ln() / (1.0 + t),
        lambda,
        policy,
    ))
}

/// Parsed integral request, mirroring the CLI surface.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum IntegralSpec {
    IPq { k: u32, p: u32, q: u32 },
    IPlus { n: u32, qexp: f64 },
    IMinus { n: u32, qexp: f64 },
    J { p: f64, qexp: f64, power: u32 },
    IOmega { delta: f64 },
    Pole { a: f64, k: u32, order: u32 },
    I2,
    ZxLog { z: f64 },
}

impl IntegralSpec {
    /// Closed-form evaluation (the roots route where one exists).
    pub fn closed_form(&self) -> Result<IntegralResult> {
        match *self {
            IntegralSpec::IPq { k, p, q } => integral_i_pq(k, p, q, Route::ClosedFormRoots),
            IntegralSpec::IPlus { n, qexp } => Ok(IntegralResult {
                value: integral_family_i(n, qexp, CycloSign::Plus)?,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            }),
            IntegralSpec::IMinus { n, qexp } => Ok(IntegralResult {
                value: integral_family_i(n, qexp, CycloSign::Minus)?,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            }),
            IntegralSpec::J { p, qexp, power } => Ok(IntegralResult {
                value: integral_family_j(p, qexp, power)?,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            }),
            IntegralSpec::IOmega { delta } => Ok(IntegralResult {
                value: integral_i_omega(delta)?,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            }),
            IntegralSpec::Pole { a, k, order } => {
                let v = integral_pole(Complex64::new(a, 0.0), k, order)?;
                accept_real(v, Route::ClosedFormRoots)
            }
            IntegralSpec::I2 => {
                let d = i2_pipeline()?;
                Ok(IntegralResult {
                    value: d.value,
                    route: Route::ClosedFormRoots,
                    imag_residual: d.imag_residual,
                })
            }
            IntegralSpec::ZxLog { z } => Ok(IntegralResult {
                value: hyp3f3_and_zx_integral(z)?,
                route: Route::ClosedFormStieltjes,
                imag_residual: 0.0,
            }),
        }
    }

    /// Independent quadrature of the same integral.
    pub fn quadrature(&self) -> Result<f64> {
        let policy = PrecisionPolicy::global();
        match *self {
            IntegralSpec::IPq { k, p, q } => Ok(integral_i_pq(k, p, q, Route::Quadrature)?.value),
            IntegralSpec::IPlus { n, qexp } => {
                integral_family_i_quadrature(n, qexp, CycloSign::Plus)
            }
            IntegralSpec::IMinus { n, qexp } => {
                integral_family_i_quadrature(n, qexp, CycloSign::Minus)
            }
            IntegralSpec::J { p, qexp, power } => integral_family_j_quadrature(p, qexp, power),
            IntegralSpec::IOmega { delta } => integral_i_omega_quadrature(delta),
            IntegralSpec::Pole { a, k, order } => integral_pole_quadrature(a, k, order),
            IntegralSpec::I2 => Ok(loglog_quadrature(|x, _| 1.0 / (1.0 + x * x), 1, policy)),
            IntegralSpec::ZxLog { z } => zx_integral_quadrature(z),
        }
    }
}
