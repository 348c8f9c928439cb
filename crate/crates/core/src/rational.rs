//! Closed-form evaluations at rational argument: the finite Fourier
//! decompositions of gamma_1(j/m) and gamma_2(j/m), residue-class sums,
//! half-transforms of gamma_2, sums of zeta derivatives at s = 0,
//! multiplication series for psi and the Stieltjes constants, and the
//! small-argument asymptotic form.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::hurwitz::{
    self, hurwitz_zeta_derivs, stieltjes_constant, stieltjes_oracle, EulerMaclaurinPlan, Method,
    RationalArg, StieltjesValue,
};
use crate::policy::PrecisionPolicy;
use crate::special::{self, LN_2PI};
use crate::sum::KahanSum;

/// zeta(0,a) and the first three s-derivatives at one argument.
#[derive(Debug, Clone, Copy)]
pub struct HurwitzZeroDerivs {
    pub a: f64,
    pub d0: f64,
    pub d1: f64,
    pub d2: f64,
    pub d3: f64,
}

/// d0 and d1 come from closed forms (zeta(0,a) = 1/2 - a and
/// zeta'(0,a) = ln Gamma(a) - ln(2pi)/2); d2 and d3 from the
/// Euler-Maclaurin s-derivatives.
pub fn hurwitz_derivs_at_zero(arg: RationalArg) -> Result<HurwitzZeroDerivs> {
    hurwitz_derivs_at_zero_real(arg.as_real())
}

pub(crate) fn hurwitz_derivs_at_zero_real(a: f64) -> Result<HurwitzZeroDerivs> {
    if !(a > 0.0) || a > 1.0 {
        return Err(Error::Domain(format!(
            "expansion argument must lie in (0,1], got {a}"
        )));
    }
    let plan = EulerMaclaurinPlan::default().with_derivative_order(3);
    let d = hurwitz_zeta_derivs(0.0, a, &plan)?;
    Ok(HurwitzZeroDerivs {
        a,
        d0: 0.5 - a,
        d1: special::log_gamma(a)? - 0.5 * LN_2PI,
        d2: d.deriv(2),
        d3: d.deriv(3),
    })
}

fn check_proper(arg: RationalArg) -> Result<(u32, u32)> {
    if arg.den() <= 1 || !arg.is_proper() {
        return Err(Error::Domain(format!(
            "rational expansion needs 1 <= j < m with m > 1, got {arg}"
        )));
    }
    Ok((arg.num(), arg.den()))
}

/// sin and cos of 2 pi j r / m from the reduced residue j*r mod m.
fn trig_reduced(j: u32, r: u32, m: u32) -> (f64, f64) {
    let t = (u64::from(j) * u64::from(r)) % u64::from(m);
    (2.0 * PI * t as f64 / f64::from(m)).sin_cos()
}

/// gamma_1(j/m) for 1 <= j < m:
///
/// gamma_1 + gamma^2 + gamma ln(2 pi m) + ln(2 pi) ln m + ln^2(m)/2
///   + (gamma + ln 2 pi m) psi(j/m)
///   + pi sum_r sin(2 pi j r/m) ln Gamma(r/m)
///   + sum_r cos(2 pi j r/m) zeta''(0, r/m).
pub fn gamma1_rational(arg: RationalArg) -> Result<StieltjesValue> {
    let (j, m) = check_proper(arg)?;
    let mf = f64::from(m);
    let lm = mf.ln();
    let g = hurwitz::euler_gamma();
    let g1 = stieltjes_constant(1)?;
    let lg2pm = LN_2PI + lm;

    let mut acc = KahanSum::new();
    acc.add(g1);
    acc.add(g * g);
    acc.add(g * lg2pm);
    acc.add(LN_2PI * lm);
    acc.add(lm * lm / 2.0);
    acc.add((g + lg2pm) * special::digamma(arg.as_real())?);
    for r in 1..m {
        let (s, c) = trig_reduced(j, r, m);
        let zd = hurwitz_derivs_at_zero_real(f64::from(r) / mf)?;
        acc.add(PI * s * special::log_gamma(f64::from(r) / mf)?);
        acc.add(c * zd.d2);
    }
    Ok(StieltjesValue {
        k: 1,
        a: arg.as_real(),
        value: acc.total(),
        method: Method::ClosedForm,
        err_estimate: acc.compensation(),
    })
}

/// gamma_2(j/m) for 1 <= j < m, assembled from
///
/// (1/2) gamma_2(j/m) = gamma_2/2 - gamma_1 ln m + (gamma/8) pi^2
///   + (pi^2/8) ln m + (gamma/2) ln^2 m + ln^3(m)/6 + A
///   + sum_r cos(2 pi j r/m) { [pi^2/6 + (gamma + ln 2 pi m)^2] zeta'(0,r/m)
///       - (gamma + ln 2 pi m) zeta''(0,r/m) + zeta'''(0,r/m)/3 }
///
/// with the cotangent block
///
/// A = (pi^3/24) cot(pi j/m) + (pi^2/8) psi(j/m)
///   - (pi/2) sum_r sin(2 pi j r/m) { -zeta(0,r/m)[pi^2/6 + (gamma + ln 2 pi m)^2]
///       + 2 (gamma + ln 2 pi m) zeta'(0,r/m) - zeta''(0,r/m) }.
pub fn gamma2_rational(arg: RationalArg) -> Result<StieltjesValue> {
    let (j, m) = check_proper(arg)?;
    let mf = f64::from(m);
    let lm = mf.ln();
    let g = hurwitz::euler_gamma();
    let g1 = stieltjes_constant(1)?;
    let g2 = stieltjes_constant(2)?;
    let lg2pm = LN_2PI + lm;
    let big = PI * PI / 6.0 + (g + lg2pm) * (g + lg2pm);

    // Angle reduced to (0, pi); no singularity since 0 < j < m.
    let angle = PI * f64::from(j) / mf;
    let mut acc = KahanSum::new();
    acc.add(PI.powi(3) / 24.0 * angle.cos() / angle.sin());
    acc.add(PI * PI / 8.0 * special::digamma(arg.as_real())?);
    for r in 1..m {
        let (s, c) = trig_reduced(j, r, m);
        let zd = hurwitz_derivs_at_zero_real(f64::from(r) / mf)?;
        acc.add(-PI / 2.0 * s * (-zd.d0 * big + 2.0 * (g + lg2pm) * zd.d1 - zd.d2));
        acc.add(c * (big * zd.d1 - (g + lg2pm) * zd.d2 + zd.d3 / 3.0));
    }
    acc.add(g2 / 2.0);
    acc.add(-g1 * lm);
    acc.add(g / 8.0 * PI * PI);
    acc.add(PI * PI / 8.0 * lm);
    acc.add(g / 2.0 * lm * lm);
    acc.add(lm.powi(3) / 6.0);

    Ok(StieltjesValue {
        k: 2,
        a: arg.as_real(),
        value: 2.0 * acc.total(),
        method: Method::ClosedForm,
        err_estimate: 2.0 * acc.compensation(),
    })
}

/// Residue-class sums sum_{r=1}^q gamma_k(r/q):
/// k=1: -(q/2) ln^2 q + q (gamma_1 - gamma ln q)
/// k=2:  (q/3) ln^3 q + q (gamma ln^2 q - 2 gamma_1 ln q + gamma_2)
pub fn residue_sum(k: u32, q: u32) -> Result<f64> {
    if q == 0 {
        return Err(Error::Domain("residue sum needs q >= 1".into()));
    }
    let qf = f64::from(q);
    let lq = qf.ln();
    let g = hurwitz::euler_gamma();
    let g1 = stieltjes_constant(1)?;
    match k {
        1 => Ok(-qf / 2.0 * lq * lq + qf * (-g * lq + g1)),
        2 => {
            let g2 = stieltjes_constant(2)?;
            Ok(qf / 3.0 * lq.powi(3) + qf * (g * lq * lq - 2.0 * g1 * lq + g2))
        }
        other => Err(Error::Range(format!(
            "residue sum supports k in {{1,2}}, got {other}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FourierKind {
    Sine,
    Cosine,
}

/// Half-transform (1/2) sum_{j=1}^{m-1} gamma_2(j/m) trig(2 pi j l/m),
/// evaluated from the closed right-hand sides rather than the transform.
pub fn gamma2_fourier(ell: u32, m: u32, kind: FourierKind) -> Result<f64> {
    if ell == 0 || ell >= m {
        return Err(Error::Domain(format!(
            "need 1 <= l <= m-1, got l={ell} m={m}"
        )));
    }
    let mf = f64::from(m);
    let lf = f64::from(ell);
    let lm = mf.ln();
    let g = hurwitz::euler_gamma();
    let g1 = stieltjes_constant(1)?;
    let g2 = stieltjes_constant(2)?;
    let lg2pm = LN_2PI + lm;
    let big = PI * PI / 6.0 + (g + lg2pm) * (g + lg2pm);
    let za = hurwitz_derivs_at_zero_real(lf / mf)?;
    let zb = hurwitz_derivs_at_zero_real(1.0 - lf / mf)?;

    match kind {
        FourierKind::Sine => {
            let mut acc = KahanSum::new();
            acc.add(PI.powi(3) / 48.0 * (2.0 * lf - mf));
            acc.add(-PI * mf / 4.0 * big * (zb.d0 - za.d0));
            acc.add(-PI * mf / 4.0 * 2.0 * (g + lg2pm) * (za.d1 - zb.d1));
            acc.add(-PI * mf / 4.0 * (zb.d2 - za.d2));
            Ok(acc.total())
        }
        FourierKind::Cosine => {
            let mut acc = KahanSum::new();
            acc.add(
                -(g2 / 2.0 - g1 * lm
                    + g / 8.0 * PI * PI
                    + PI * PI / 8.0 * lm
                    + g / 2.0 * lm * lm
                    + lm.powi(3) / 6.0),
            );
            acc.add(PI * PI / 8.0 * (mf * (2.0 * (PI * lf / mf).sin()).ln() + g));
            for r in 1..m {
                let zr = hurwitz_derivs_at_zero_real(f64::from(r) / mf)?;
                acc.add(-(big * zr.d1 - (g + lg2pm) * zr.d2 + zr.d3 / 3.0));
            }
            acc.add(mf / 2.0 * big * (za.d1 + zb.d1));
            acc.add(-mf / 2.0 * (g + lg2pm) * (za.d2 + zb.d2));
            acc.add(mf / 6.0 * (za.d3 + zb.d3));
            Ok(acc.total())
        }
    }
}

/// Closed forms for sum_{l=1}^{m-1} zeta^(order)(0, l/m), obtained by
/// differentiating sum_l zeta(s, l/m) = (m^s - 1) zeta(s) at s = 0:
/// order 1: -(ln m)/2
/// order 2: -(1/2) ln^2 m - ln m ln 2pi
/// order 3: -(ln^3 m)/2 - (3/2) ln^2 m ln 2pi
///          + 3 ln m (gamma^2/2 - pi^2/24 - (1/2) ln^2 2pi + gamma_1)
pub fn zeta_deriv_zero_sums(m: u32, order: u32) -> Result<f64> {
    if m < 2 {
        return Err(Error::Domain(format!("need m >= 2, got {m}")));
    }
    let lm = f64::from(m).ln();
    match order {
        1 => Ok(-lm / 2.0),
        2 => Ok(-0.5 * lm * lm - lm * LN_2PI),
        3 => {
            let g = hurwitz::euler_gamma();
            let g1 = stieltjes_constant(1)?;
            Ok(-lm.powi(3) / 2.0 - 1.5 * lm * lm * LN_2PI
                + 3.0 * lm * (g * g / 2.0 - PI * PI / 24.0 - 0.5 * LN_2PI * LN_2PI + g1))
        }
        other => Err(Error::Range(format!(
            "derivative sum supports order 1..=3, got {other}"
        ))),
    }
}

/// Inputs of the stretch-factor series: evaluate at argument stretch * z.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MultiplicationQuery {
    /// Stretch factor in (0, 2), the series' convergence window.
    pub stretch: f64,
    /// Base argument, z > 0.
    pub z: f64,
    /// Truncation cap.
    pub terms: usize,
}

impl MultiplicationQuery {
    pub fn new(stretch: f64, z: f64) -> Result<Self> {
        Self::with_terms(stretch, z, PrecisionPolicy::global().series_max_terms)
    }

    pub fn with_terms(stretch: f64, z: f64, terms: usize) -> Result<Self> {
        if !(stretch > 0.0 && stretch < 2.0) {
            return Err(Error::Domain(format!(
                "stretch must lie in (0,2), got {stretch}"
            )));
        }
        if !(z > 0.0) {
            return Err(Error::Domain(format!(
                "base argument must be positive, got {z}"
            )));
        }
        if terms == 0 {
            return Err(Error::Range("terms must be positive".into()));
        }
        Ok(MultiplicationQuery { stretch, z, terms })
    }
}

/// zeta(s, z) and s-derivatives at integer s >= 2. Direct summation once the
/// exponent makes it cheap, Euler-Maclaurin below that.
fn hurwitz_at_integer(s_int: usize, z: f64, order: usize) -> Result<[f64; 4]> {
    debug_assert!(s_int >= 2);
    let s = s_int as f64;
    if s_int < 12 {
        let plan = EulerMaclaurinPlan::default().with_derivative_order(order);
        let d = hurwitz_zeta_derivs(s, z, &plan)?;
        let mut out = [0.0; 4];
        for (p, slot) in out.iter_mut().enumerate().take(order + 1) {
            *slot = d.deriv(p);
        }
        return Ok(out);
    }
    let mut acc = [
        KahanSum::new(),
        KahanSum::new(),
        KahanSum::new(),
        KahanSum::new(),
    ];
    for i in 0..400 {
        let w = i as f64 + z;
        let base = w.powf(-s);
        let lw = w.ln();
        let mut f = base;
        for slot in acc.iter_mut().take(order + 1) {
            slot.add(f);
            f *= -lw;
        }
        // Absolute cutoff relative to the leading term.
        if base * (1.0 + lw.abs()).powi(order as i32) < 1e-20 * acc[0].total().abs() {
            break;
        }
    }
    let mut out = [0.0; 4];
    for (p, slot) in out.iter_mut().enumerate().take(order + 1) {
        *slot = acc[p].total();
    }
    Ok(out)
}

/// psi(stretch * z) as the series sum_n (stretch-1)^n z^n psi^(n)(z) / n!,
/// summed via psi^(n)(z) = (-1)^{n+1} n! zeta(n+1, z):
/// psi(kz) = psi(z) - sum_{n>=1} (1-k)^n z^n zeta(n+1, z).
pub fn multiplication_digamma(q: &MultiplicationQuery) -> Result<f64> {
    let policy = PrecisionPolicy::global();
    let mut acc = KahanSum::new();
    acc.add(special::digamma(q.z)?);
    if q.stretch == 1.0 {
        return Ok(acc.total());
    }
    let r = (1.0 - q.stretch) * q.z;
    let mut rn = 1.0; // (1-k)^n z^n
    for n in 1..=q.terms.min(policy.series_max_terms) {
        rn *= r;
        let term = rn * hurwitz_at_integer(n + 1, q.z, 0)?[0];
        acc.add(-term);
        if term.abs() < policy.series_term_floor {
            break;
        }
    }
    Ok(acc.total())
}

/// gamma_1(kz) or gamma_2(kz) by the stretch-factor series:
///
/// gamma_1(kz) = gamma_1(z) + gamma [psi(kz) - psi(z)]
///   - sum_n (1-k)^n z^n [ psi(n+1) zeta(n+1,z) + zeta'(n+1,z) ]
///
/// gamma_2(kz) = gamma_2(z) + [gamma^2 - zeta(2)] [psi(z) - psi(kz)]
///   + 2 sum_n (1-k)^n z^n [ (gamma + psi(n+1)/2) psi(n+1) zeta(n+1,z)
///       + psi'(n+1) zeta(n+1,z)/2 + (gamma + psi(n+1)) zeta'(n+1,z)
///       + zeta''(n+1,z)/2 ]
///
/// err_estimate carries the first term left out of the truncated sum.
pub fn multiplication_stieltjes(ell: u32, q: &MultiplicationQuery) -> Result<StieltjesValue> {
    if !(ell == 1 || ell == 2) {
        return Err(Error::Range(format!(
            "series supports ell in {{1,2}}, got {ell}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let g = hurwitz::euler_gamma();
    let zeta2 = PI * PI / 6.0;
    let mut acc = KahanSum::new();
    acc.add(stieltjes_oracle(ell, q.z)?.value);
    let done = |acc: &KahanSum, err: f64| StieltjesValue {
        k: ell,
        a: q.stretch * q.z,
        value: acc.total(),
        method: Method::Multiplication,
        err_estimate: err,
    };
    if q.stretch == 1.0 {
        return Ok(done(&acc, 0.0));
    }
    let psi_z = special::digamma(q.z)?;
    let psi_kz = special::digamma(q.stretch * q.z)?;
    if ell == 1 {
        acc.add(g * (psi_kz - psi_z));
    } else {
        acc.add((g * g - zeta2) * (psi_z - psi_kz));
    }

    let r = (1.0 - q.stretch) * q.z;
    let mut rn = 1.0;
    // psi(n+1) = H_n - gamma, psi'(n+1) = zeta(2) - H_n^(2).
    let mut h1 = 0.0;
    let mut h2 = 0.0;
    let mut last = f64::INFINITY;
    for n in 1..=q.terms.min(policy.series_max_terms) {
        rn *= r;
        h1 += 1.0 / n as f64;
        h2 += 1.0 / (n as f64 * n as f64);
        let psi_n1 = h1 - g;
        let order = ell as usize;
        let zd = hurwitz_at_integer(n + 1, q.z, order)?;
        let term = if ell == 1 {
            -rn * (psi_n1 * zd[0] + zd[1])
        } else {
            let psi1_n1 = zeta2 - h2;
            2.0 * rn
                * ((g + psi_n1 / 2.0) * psi_n1 * zd[0]
                    + psi1_n1 * zd[0] / 2.0
                    + (g + psi_n1) * zd[1]
                    + zd[2] / 2.0)
        };
        if term.abs() < policy.series_term_floor {
            return Ok(done(&acc, term.abs()));
        }
        acc.add(term);
        last = term.abs();
    }
    Ok(done(&acc, last))
}

/// The general multiplication series written with Stirling numbers of the
/// first kind:
///
/// gamma_l(kz) = gamma_l(z) + (-1)^l sum_{j>=2} (k-1)^{j-1} z^{j-1} / (j-1)!
///     sum_{i=0}^{l} (-1)^i C(l,i) i! s(j, i+1) zeta^{(l-i)}(j, z)
///
/// with s(j, i+1)/(j-1)! carried through the harmonic-number forms
/// s(j,1)/(j-1)! = (-1)^{j-1}, s(j,2)/(j-1)! = (-1)^j H_{j-1}, ...
///
/// err_estimate carries the first term left out of the truncated sum.
pub fn multiplication_general(ell: u32, q: &MultiplicationQuery) -> Result<StieltjesValue> {
    if ell > 3 {
        return Err(Error::Range(format!(
            "general series supports ell <= 3, got {ell}"
        )));
    }
    let policy = PrecisionPolicy::global();
    let mut acc = KahanSum::new();
    acc.add(stieltjes_oracle(ell, q.z)?.value);
    let done = |acc: &KahanSum, err: f64| StieltjesValue {
        k: ell,
        a: q.stretch * q.z,
        value: acc.total(),
        method: Method::Multiplication,
        err_estimate: err,
    };
    if q.stretch == 1.0 {
        return Ok(done(&acc, 0.0));
    }
    let sign_ell = if ell.is_multiple_of(2) { 1.0 } else { -1.0 };
    let r = (q.stretch - 1.0) * q.z;
    let mut rpow = 1.0; // (k-1)^{j-1} z^{j-1} at j
    let mut h1 = 0.0;
    let mut h2 = 0.0;
    let mut h3 = 0.0;
    // Binomial-times-factorial weights (-1)^i C(l,i) i! for i = 0..=l.
    let ellf = ell as usize;
    let mut weight = [0.0f64; 4];
    for (i, w) in weight.iter_mut().enumerate().take(ellf + 1) {
        let mut c = 1.0;
        for t in 0..i {
            c *= (ellf - t) as f64 / (t + 1) as f64;
        }
        let mut fact = 1.0;
        for t in 2..=i {
            fact *= t as f64;
        }
        *w = if i % 2 == 0 { c * fact } else { -c * fact };
    }

    let cap = q.terms.min(policy.series_max_terms);
    let mut last = f64::INFINITY;
    for j in 2..=cap + 1 {
        let n = j - 1;
        rpow *= r;
        h1 += 1.0 / n as f64;
        h2 += 1.0 / (n as f64 * n as f64);
        h3 += 1.0 / (n as f64).powi(3);
        let sign_j = if n % 2 == 0 { 1.0 } else { -1.0 }; // (-1)^{j-1}
                                                          // s(j, i+1)/(j-1)! for i = 0..=3.
        let stirling_ratio = [
            sign_j,
            -sign_j * h1,
            sign_j * (h1 * h1 - h2) / 2.0,
            -sign_j * (h1.powi(3) - 3.0 * h1 * h2 + 2.0 * h3) / 6.0,
        ];
        let zd = hurwitz_at_integer(j, q.z, ellf)?;
        let mut inner = 0.0;
        for i in 0..=ellf {
            inner += weight[i] * stirling_ratio[i] * zd[ellf - i];
        }
        let term = sign_ell * rpow * inner;
        if term.abs() < policy.series_term_floor {
            return Ok(done(&acc, term.abs()));
        }
        acc.add(term);
        last = term.abs();
    }
    Ok(done(&acc, last))
}

/// Leading small-argument form gamma_k(a) ~ ln^k(a)/a + gamma_k, 0 < a < 1.
/// The next correction is gamma_k(1+a) - gamma_k = O(a), so err_estimate
/// reports a as an order-of-magnitude indicator.
pub fn asymptotic_gamma_k(k: u32, a: f64) -> Result<StieltjesValue> {
    if !(a > 0.0 && a < 1.0) {
        return Err(Error::Domain(format!(
            "asymptotic form applies for 0 < a < 1, got {a}"
        )));
    }
    let gk = stieltjes_constant(k)?;
    let value = a.ln().powi(k as i32) / a + gk;
    Ok(StieltjesValue {
        k,
        a,
        value,
        method: Method::Asymptotic,
        err_estimate: a,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arg(j: u32, m: u32) -> RationalArg {
        RationalArg::new(j, m).unwrap()
    }

    #[test]
    fn zero_derivs_structure() {
        let d = hurwitz_derivs_at_zero(arg(1, 1)).unwrap();
        assert!((d.d1 + 0.5 * LN_2PI).abs() < 1e-13);
        let d = hurwitz_derivs_at_zero(arg(1, 2)).unwrap();
        assert!((d.d1 + 0.5 * std::f64::consts::LN_2).abs() < 1e-13);
        assert_eq!(d.d0, 0.0);
        let d = hurwitz_derivs_at_zero(arg(1, 3)).unwrap();
        assert!((d.d2 + 0.799_857_428_757_535_5).abs() < 1e-12);
        assert!(hurwitz_derivs_at_zero_real(1.5).is_err());
    }

    #[test]
    fn gamma1_closed_forms_match_oracle() {
        // gamma_1(1/2) = gamma_1 - 2 gamma ln 2 - ln^2 2.
        let v = gamma1_rational(arg(1, 2)).unwrap();
        assert!((v.value + 1.353_459_680_804_941_5).abs() < 1e-11);
        let g = hurwitz::euler_gamma();
        let g1 = stieltjes_constant(1).unwrap();
        let ln2 = std::f64::consts::LN_2;
        assert!((v.value - (g1 - 2.0 * g * ln2 - ln2 * ln2)).abs() < 1e-11);
        for (j, m) in [(1u32, 3u32), (2, 3), (1, 4), (5, 7)] {
            let closed = gamma1_rational(arg(j, m)).unwrap().value;
            let oracle = stieltjes_oracle(1, f64::from(j) / f64::from(m))
                .unwrap()
                .value;
            assert!(
                (closed - oracle).abs() < 1e-9,
                "j={j} m={m}: {closed} vs {oracle}"
            );
        }
    }

    #[test]
    fn gamma2_closed_forms_match_oracle() {
        for (j, m) in [(1u32, 2u32), (1, 4), (3, 4), (1, 6), (2, 5)] {
            let closed = gamma2_rational(arg(j, m)).unwrap().value;
            let oracle = stieltjes_oracle(2, f64::from(j) / f64::from(m))
                .unwrap()
                .value;
            assert!(
                (closed - oracle).abs() < 1e-8,
                "j={j} m={m}: {closed} vs {oracle}"
            );
        }
        assert!((gamma2_rational(arg(1, 4)).unwrap().value - 7.679_704_425_808_516_5).abs() < 1e-9);
    }

    #[test]
    fn gamma2_cot_antisymmetry() {
        // The cotangent blocks at j and m - j are equal and opposite.
        let c14 = (PI * 1.0 / 4.0).cos() / (PI * 1.0 / 4.0).sin();
        let c34 = (PI * 3.0 / 4.0).cos() / (PI * 3.0 / 4.0).sin();
        assert!((c14 + c34).abs() < 1e-15);
    }

    #[test]
    fn improper_arguments_rejected() {
        assert!(gamma1_rational(arg(2, 2)).is_err());
        assert!(gamma1_rational(arg(3, 2)).is_err());
        assert!(gamma2_rational(arg(1, 1)).is_err());
    }

    #[test]
    fn residue_sum_values() {
        // Single term at q = 1: ln 1 = 0 leaves gamma_k alone.
        assert!((residue_sum(1, 1).unwrap() - stieltjes_constant(1).unwrap()).abs() < 1e-15);
        assert!((residue_sum(2, 1).unwrap() - stieltjes_constant(2).unwrap()).abs() < 1e-15);
        assert!(residue_sum(3, 2).is_err());
        assert!(residue_sum(1, 0).is_err());
    }

    #[test]
    fn residue_closure_small_q() {
        for q in 2..=6u32 {
            for k in 1..=2u32 {
                let mut acc = KahanSum::new();
                for r in 1..q {
                    let v = if k == 1 {
                        gamma1_rational(arg(r, q)).unwrap().value
                    } else {
                        gamma2_rational(arg(r, q)).unwrap().value
                    };
                    acc.add(v);
                }
                acc.add(stieltjes_oracle(k, 1.0).unwrap().value);
                let direct = residue_sum(k, q).unwrap();
                assert!((acc.total() - direct).abs() < 1e-8, "k={k} q={q}");
            }
        }
    }

    #[test]
    fn fourier_sine_empty_case() {
        // m = 2: sin(pi j) vanishes for the single j = 1 term.
        let v = gamma2_fourier(1, 2, FourierKind::Sine).unwrap();
        assert!(v.abs() < 1e-9, "got {v}");
        assert!(gamma2_fourier(0, 4, FourierKind::Sine).is_err());
        assert!(gamma2_fourier(4, 4, FourierKind::Cosine).is_err());
    }

    #[test]
    fn fourier_matches_direct_transform() {
        for m in 3..=6u32 {
            for ell in 1..m {
                for kind in [FourierKind::Sine, FourierKind::Cosine] {
                    let closed = gamma2_fourier(ell, m, kind).unwrap();
                    let mut acc = KahanSum::new();
                    for j in 1..m {
                        let gj = stieltjes_oracle(2, f64::from(j) / f64::from(m))
                            .unwrap()
                            .value;
                        let ang = 2.0 * PI * f64::from(j) * f64::from(ell) / f64::from(m);
                        let t = match kind {
                            FourierKind::Sine => ang.sin(),
                            FourierKind::Cosine => ang.cos(),
                        };
                        acc.add(0.5 * gj * t);
                    }
                    assert!(
                        (closed - acc.total()).abs() < 1e-8,
                        "m={m} l={ell} {kind:?}: {closed} vs {}",
                        acc.total()
                    );
                }
            }
        }
    }

    #[test]
    fn zeta_deriv_sums_match_expansion_engine() {
        for m in [2u32, 3, 5, 10] {
            for order in 1..=3u32 {
                let closed = zeta_deriv_zero_sums(m, order).unwrap();
                let mut acc = KahanSum::new();
                for l in 1..m {
                    let v = hurwitz::hurwitz_zeta_sderiv(
                        order as usize,
                        0.0,
                        f64::from(l) / f64::from(m),
                    )
                    .unwrap();
                    acc.add(v);
                }
                assert!((closed - acc.total()).abs() < 1e-9, "m={m} order={order}");
            }
        }
        assert!(zeta_deriv_zero_sums(1, 1).is_err());
        assert!(zeta_deriv_zero_sums(4, 4).is_err());
    }

    #[test]
    fn digamma_series_collapses_at_unit_stretch() {
        let q = MultiplicationQuery::new(1.0, 0.7).unwrap();
        let v = multiplication_digamma(&q).unwrap();
        assert_eq!(v, special::digamma(0.7).unwrap());
    }

    #[test]
    fn digamma_series_reference_points() {
        let q = MultiplicationQuery::with_terms(0.5, 1.0, 60).unwrap();
        let v = multiplication_digamma(&q).unwrap();
        let expect = -hurwitz::euler_gamma() - 2.0 * std::f64::consts::LN_2;
        assert!((v - expect).abs() < 1e-9, "{v} vs {expect}");
        let q = MultiplicationQuery::with_terms(1.5, 1.0, 60).unwrap();
        let v = multiplication_digamma(&q).unwrap();
        assert!((v - (2.0 + expect)).abs() < 1e-9);
        assert!(MultiplicationQuery::new(2.0, 1.0).is_err());
        assert!(MultiplicationQuery::new(0.5, 0.0).is_err());
    }

    #[test]
    fn stieltjes_series_matches_closed_forms() {
        let q = MultiplicationQuery::new(0.5, 1.0).unwrap();
        let v1 = multiplication_stieltjes(1, &q).unwrap();
        assert!((v1.value - gamma1_rational(arg(1, 2)).unwrap().value).abs() < 1e-8);
        assert_eq!(v1.method, Method::Multiplication);
        assert!(v1.err_estimate < 1e-15);
        let v2 = multiplication_stieltjes(2, &q).unwrap().value;
        assert!((v2 - gamma2_rational(arg(1, 2)).unwrap().value).abs() < 1e-8);
        assert!(multiplication_stieltjes(3, &q).is_err());
        // stretch = 1 returns gamma_l(z) with an empty series.
        let q = MultiplicationQuery::new(1.0, 0.8).unwrap();
        let v = multiplication_stieltjes(1, &q).unwrap();
        assert_eq!(v.value, stieltjes_oracle(1, 0.8).unwrap().value);
        assert_eq!(v.err_estimate, 0.0);
    }

    #[test]
    fn general_series_consistency() {
        let q = MultiplicationQuery::new(0.5, 1.0).unwrap();
        // ell = 0 reproduces the digamma series (gamma_0 = -psi).
        let v0 = multiplication_general(0, &q).unwrap();
        assert!((v0.value + multiplication_digamma(&q).unwrap()).abs() < 1e-12);
        assert_eq!(v0.method, Method::Multiplication);
        assert!(v0.err_estimate < 1e-15);
        for ell in 1..=2u32 {
            let a = multiplication_general(ell, &q).unwrap().value;
            let b = multiplication_stieltjes(ell, &q).unwrap().value;
            assert!((a - b).abs() < 1e-10, "ell={ell}: {a} vs {b}");
        }
        let v3 = multiplication_general(3, &q).unwrap().value;
        let oracle = stieltjes_oracle(3, 0.5).unwrap().value;
        assert!((v3 - oracle).abs() < 1e-7, "{v3} vs {oracle}");
        assert!(multiplication_general(4, &q).is_err());
    }

    #[test]
    fn asymptotic_reference_points() {
        // ln(1e-4)/1e-4 + gamma_1.
        let v = asymptotic_gamma_k(1, 1e-4).unwrap().value;
        let expect = 1e4 * (1e-4f64).ln() + stieltjes_constant(1).unwrap();
        assert!((v - expect).abs() < 1e-9);
        // At a = 1/m the form reads m ln^2 m + gamma_2.
        let m = 100.0f64;
        let v = asymptotic_gamma_k(2, 1.0 / m).unwrap().value;
        let expect = m * m.ln() * m.ln() + stieltjes_constant(2).unwrap();
        assert!((v - expect).abs() < 1e-9 * expect.abs());
        // 1/a + gamma against -psi(a).
        let v = asymptotic_gamma_k(0, 1e-3).unwrap().value;
        assert!((v - (1000.0 + hurwitz::euler_gamma())).abs() < 1e-12);
        // -psi(0.001) = 1000.5755...; the leading form misses by zeta(2) a.
        assert!((v - 1_000.575_571_931_810_3).abs() < 2e-3);
        assert!(asymptotic_gamma_k(1, 1.0).is_err());
        assert!(asymptotic_gamma_k(1, 0.0).is_err());
    }
}
