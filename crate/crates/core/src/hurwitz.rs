//! Euler-Maclaurin reference engine: zeta(s,a), its first three s-derivatives,
//! and Stieltjes constants gamma_k(a) summed from the defining limit.
//!
//! Every closed form elsewhere in the crate is tested against this module,
//! so the derivatives here are analytic term by term; finite differences
//! appear only in tests.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::policy::PrecisionPolicy;
use crate::sum::KahanSum;
use crate::tables::bernoulli_table;

/// A rational argument j/m kept unreduced: (2,4) and (1,2) are distinct
/// inputs that must evaluate identically.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RationalArg {
    num: u32,
    den: u32,
}

impl RationalArg {
    pub fn new(num: u32, den: u32) -> Result<Self> {
        if num == 0 || den == 0 {
            return Err(Error::Domain(format!(
                "rational argument {num}/{den} must have positive parts"
            )));
        }
        Ok(RationalArg { num, den })
    }

    pub fn num(&self) -> u32 {
        self.num
    }

    pub fn den(&self) -> u32 {
        self.den
    }

    pub fn as_real(&self) -> f64 {
        f64::from(self.num) / f64::from(self.den)
    }

    /// True when num < den, the regime of the rational-argument expansions.
    pub fn is_proper(&self) -> bool {
        self.num < self.den
    }
}

impl fmt::Display for RationalArg {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// How a Stieltjes-constant value was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Oracle,
    ClosedForm,
    Asymptotic,
    Multiplication,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Method::Oracle => "oracle",
            Method::ClosedForm => "closed_form",
            Method::Asymptotic => "asymptotic",
            Method::Multiplication => "multiplication",
        };
        f.write_str(s)
    }
}

/// A computed gamma_k(a) with provenance and an advisory error estimate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StieltjesValue {
    pub k: u32,
    pub a: f64,
    pub value: f64,
    pub method: Method,
    pub err_estimate: f64,
}

/// Euler-Maclaurin truncation parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EulerMaclaurinPlan {
    /// Direct-sum length N.
    pub direct_terms: usize,
    /// Highest Bernoulli index 2J in the tail (even).
    pub tail_order: usize,
    /// Highest s-derivative computed alongside the value (0..=3).
    pub derivative_order: usize,
}

impl EulerMaclaurinPlan {
    pub fn from_policy(policy: &PrecisionPolicy) -> Self {
        EulerMaclaurinPlan {
            direct_terms: policy.em_direct_terms,
            tail_order: policy.em_tail_order,
            derivative_order: 0,
        }
    }

    pub fn with_derivative_order(mut self, order: usize) -> Self {
        self.derivative_order = order;
        self
    }

    fn validate(&self) -> Result<()> {
        if self.direct_terms == 0 {
            return Err(Error::Range("direct_terms must be positive".into()));
        }
        if self.tail_order < 2 || !self.tail_order.is_multiple_of(2) {
            return Err(Error::Range("tail_order must be even and >= 2".into()));
        }
        if self.tail_order > crate::tables::BERNOULLI_NMAX {
            return Err(Error::Range(format!(
                "tail_order {} exceeds Bernoulli table max {}",
                self.tail_order,
                crate::tables::BERNOULLI_NMAX
            )));
        }
        if self.derivative_order > 3 {
            return Err(Error::Range("derivative_order capped at 3".into()));
        }
        Ok(())
    }
}

impl Default for EulerMaclaurinPlan {
    fn default() -> Self {
        Self::from_policy(PrecisionPolicy::global())
    }
}

/// zeta(s,a) together with s-derivatives up to the plan's order.
#[derive(Debug, Clone, Copy)]
pub struct HurwitzDerivs {
    values: [f64; 4],
    order: usize,
    pub err_estimate: f64,
}

impl HurwitzDerivs {
    pub fn value(&self) -> f64 {
        self.values[0]
    }

    pub fn deriv(&self, order: usize) -> f64 {
        assert!(
            order <= self.order,
            "derivative order {order} was not computed"
        );
        self.values[order]
    }
}

/// Rising factorial s(s+1)...(s+n-1) with derivatives through order 3,
/// carried incrementally so zeros among the factors cost nothing.
fn pochhammer_derivs(s: f64, n: usize) -> [f64; 4] {
    let (mut p0, mut p1, mut p2, mut p3) = (1.0, 0.0, 0.0, 0.0);
    for i in 0..n {
        let f = s + i as f64;
        p3 = p3 * f + 3.0 * p2;
        p2 = p2 * f + 2.0 * p1;
        p1 = p1 * f + p0;
        p0 *= f;
    }
    [p0, p1, p2, p3]
}

const BINOM3: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0],
    [1.0, 3.0, 3.0, 1.0],
];

/// Core Euler-Maclaurin evaluation:
///
/// zeta(s,a) = sum_{n<N} (n+a)^-s + (N+a)^{1-s}/(s-1) + (N+a)^-s / 2
///           + sum_{j=1}^{J} B_{2j}/(2j)! (s)_{2j-1} (N+a)^{-s-2j+1}
///
/// differentiated analytically in s through `plan.derivative_order`.
pub fn hurwitz_zeta_derivs(s: f64, a: f64, plan: &EulerMaclaurinPlan) -> Result<HurwitzDerivs> {
    plan.validate()?;
    if s == 1.0 {
        return Err(Error::Pole);
    }
    if !(a > 0.0) {
        return Err(Error::Domain(format!("Hurwitz zeta needs a > 0, got {a}")));
    }
    let order = plan.derivative_order;
    let n_direct = plan.direct_terms;
    let half_j = plan.tail_order / 2;

    let mut acc = [
        KahanSum::new(),
        KahanSum::new(),
        KahanSum::new(),
        KahanSum::new(),
    ];

    // Direct terms: d^p/ds^p (n+a)^-s = (-ln(n+a))^p (n+a)^-s.
    for n in 0..n_direct {
        let w = n as f64 + a;
        let lw = w.ln();
        let mut factor = w.powf(-s);
        for slot in acc.iter_mut().take(order + 1) {
            slot.add(factor);
            factor *= -lw;
        }
    }

    let x = n_direct as f64 + a;
    let lx = x.ln();

    // Pole term u*v with u = x^{1-s}, v = 1/(s-1):
    // u^(i) = (-ln x)^i u, v^(i) = (-1)^i i! (s-1)^{-i-1}.
    let u = x.powf(1.0 - s);
    let sm1 = s - 1.0;
    let mut v_derivs = [0.0; 4];
    let mut sign = 1.0;
    let mut fact = 1.0;
    for (i, slot) in v_derivs.iter_mut().enumerate().take(order + 1) {
        *slot = sign * fact / sm1.powi(i as i32 + 1);
        sign = -sign;
        fact *= (i + 1) as f64;
    }
    let mut u_derivs = [0.0; 4];
    let mut up = u;
    for slot in u_derivs.iter_mut().take(order + 1) {
        *slot = up;
        up *= -lx;
    }
    for p in 0..=order {
        let mut t = 0.0;
        for i in 0..=p {
            t += BINOM3[p][i] * u_derivs[i] * v_derivs[p - i];
        }
        acc[p].add(t);
    }

    // Half term x^-s / 2.
    let mut h = 0.5 * x.powf(-s);
    for slot in acc.iter_mut().take(order + 1) {
        slot.add(h);
        h *= -lx;
    }

    // Bernoulli tail.
    let bern = bernoulli_table();
    let mut last_term = 0.0;
    let mut w_derivs = [0.0; 4];
    for j in 1..=half_j {
        let m = 2 * j - 1;
        let c = bernoulli_over_factorial(2 * j, bern);
        let w = x.powf(-s - m as f64);
        let mut wp = w;
        for slot in w_derivs.iter_mut().take(order + 1) {
            *slot = wp;
            wp *= -lx;
        }
        let p_derivs = pochhammer_derivs(s, m);
        for p in 0..=order {
            let mut t = 0.0;
            for i in 0..=p {
                t += BINOM3[p][i] * p_derivs[i] * w_derivs[p - i];
            }
            if p == 0 {
                last_term = c * t;
            }
            acc[p].add(c * t);
        }
    }

    let err = last_term.abs() + acc[0].compensation();
    let mut values = [0.0; 4];
    for (p, slot) in values.iter_mut().enumerate().take(order + 1) {
        *slot = acc[p].total();
    }
    Ok(HurwitzDerivs {
        values,
        order,
        err_estimate: err,
    })
}

fn bernoulli_over_factorial(two_j: usize, bern: &crate::tables::BernoulliTable) -> f64 {
    let mut fact = 1.0;
    for i in 2..=two_j {
        fact *= i as f64;
    }
    bern.number_f64(two_j)
        .expect("tail order validated against table")
        / fact
}

/// zeta(s, a), s != 1, a > 0.
pub fn hurwitz_zeta(s: f64, a: f64, plan: &EulerMaclaurinPlan) -> Result<f64> {
    Ok(hurwitz_zeta_derivs(s, a, plan)?.value())
}

/// d^order/ds^order zeta(s, a) with the default plan, order 1..=3
/// (order 0 permitted as a convenience).
pub fn hurwitz_zeta_sderiv(order: usize, s: f64, a: f64) -> Result<f64> {
    let plan = EulerMaclaurinPlan::default().with_derivative_order(order);
    Ok(hurwitz_zeta_derivs(s, a, &plan)?.deriv(order))
}

/// Highest Stieltjes index the oracle serves.
pub const STIELTJES_KMAX: u32 = 5;

/// Below this argument the sum is shifted once before applying
/// Euler-Maclaurin; gamma_k(a) ~ ln^k(a)/a makes direct summation at tiny a
/// lose digits.
const SMALL_A: f64 = 1.0 / 24.0;

/// gamma_k(a) by Euler-Maclaurin applied to f(x) = ln^k(x+a)/(x+a):
///
/// gamma_k(a) = sum_{n<N} f(n) - ln^{k+1}(N+a)/(k+1) + f(N)/2
///            - sum_{j=1}^{J} B_{2j}/(2j)! f^{(2j-1)}(N).
pub fn stieltjes_oracle_with_plan(
    k: u32,
    a: f64,
    plan: &EulerMaclaurinPlan,
) -> Result<StieltjesValue> {
    plan.validate()?;
    if !(a > 0.0) {
        return Err(Error::Domain(format!(
            "Stieltjes constant needs a > 0, got {a}"
        )));
    }
    if k > STIELTJES_KMAX {
        return Err(Error::Range(format!(
            "Stieltjes index {k} exceeds supported max {STIELTJES_KMAX}"
        )));
    }
    if a < SMALL_A {
        let shifted = stieltjes_oracle_with_plan(k, a + 1.0, plan)?;
        let head = a.ln().powi(k as i32) / a;
        return Ok(StieltjesValue {
            k,
            a,
            value: shifted.value + head,
            method: Method::Oracle,
            err_estimate: shifted.err_estimate + head.abs() * f64::EPSILON,
        });
    }

    let n_direct = plan.direct_terms;
    let half_j = plan.tail_order / 2;
    let ki = k as i32;

    let mut acc = KahanSum::new();
    for n in 0..n_direct {
        let w = n as f64 + a;
        acc.add(w.ln().powi(ki) / w);
    }
    let x = n_direct as f64 + a;
    let lx = x.ln();
    acc.add(-lx.powi(ki + 1) / (k as f64 + 1.0));
    acc.add(0.5 * lx.powi(ki) / x);

    // Derivatives of f(t) = ln^k(t)/t as sum_i c[i] ln^i(t) / t^m, carried by
    // the recurrence c'[i] = (i+1) c[i+1] - m c[i] per differentiation.
    let mut coeff = vec![0.0; k as usize + 1];
    coeff[k as usize] = 1.0;
    let mut m = 1usize;
    let bern = bernoulli_table();
    let mut last_term = 0.0;
    let mut derivs_done = 0usize;
    for j in 1..=half_j {
        let target = 2 * j - 1;
        while derivs_done < target {
            let mut next = vec![0.0; coeff.len()];
            for i in 0..coeff.len() {
                let up = if i + 1 < coeff.len() {
                    (i as f64 + 1.0) * coeff[i + 1]
                } else {
                    0.0
                };
                next[i] = up - m as f64 * coeff[i];
            }
            coeff = next;
            m += 1;
            derivs_done += 1;
        }
        let mut poly = 0.0;
        for &c in coeff.iter().rev() {
            poly = poly * lx + c;
        }
        let fderiv = poly / x.powi(m as i32);
        last_term = bernoulli_over_factorial(2 * j, bern) * fderiv;
        acc.add(-last_term);
    }

    Ok(StieltjesValue {
        k,
        a,
        value: acc.total(),
        method: Method::Oracle,
        err_estimate: last_term.abs() + acc.compensation(),
    })
}

/// gamma_k(a) from the defining limit, default plan.
pub fn stieltjes_oracle(k: u32, a: f64) -> Result<StieltjesValue> {
    stieltjes_oracle_with_plan(k, a, &EulerMaclaurinPlan::default())
}

/// gamma_k(a+n) = gamma_k(a) - sum_{j=0}^{n-1} ln^k(a+j)/(a+j).
pub fn stieltjes_shift(k: u32, a: f64, n: u32) -> Result<f64> {
    if !(a > 0.0) {
        return Err(Error::Domain(format!("shift needs a > 0, got {a}")));
    }
    let base = stieltjes_oracle(k, a)?.value;
    let mut acc = KahanSum::new();
    acc.add(base);
    for j in 0..n {
        let t = a + j as f64;
        acc.add(-t.ln().powi(k as i32) / t);
    }
    Ok(acc.total())
}

static CONSTANTS: OnceLock<[f64; (STIELTJES_KMAX + 1) as usize]> = OnceLock::new();

/// gamma_k = gamma_k(1), cached; k = 0 is the Euler constant.
pub fn stieltjes_constant(k: u32) -> Result<f64> {
    if k > STIELTJES_KMAX {
        return Err(Error::Range(format!(
            "Stieltjes index {k} exceeds supported max {STIELTJES_KMAX}"
        )));
    }
    let table = CONSTANTS.get_or_init(|| {
        let mut t = [0.0; (STIELTJES_KMAX + 1) as usize];
        for (k, slot) in t.iter_mut().enumerate() {
            *slot = stieltjes_oracle(k as u32, 1.0)
                .expect("constants at a = 1 always evaluate")
                .value;
        }
        t
    });
    Ok(table[k as usize])
}

/// Euler's constant from the oracle cache.
pub fn euler_gamma() -> f64 {
    stieltjes_constant(0).expect("index 0 in range")
}
