//! Doubly-exponential quadrature for the integral families.
//!
//! The target integrals are ∫₀¹ f(x) lnᵏ(-ln x) dx with f rational and
//! bounded on (0,1). Substituting x = e^{-u} gives ∫₀^∞ f(e^{-u}) e^{-u}
//! lnᵏ(u) du, and u = e^{2 sinh v} maps that to the whole line with the
//! integrand decaying doubly exponentially at both ends: e^{-u} crushes
//! the right tail, u itself crushes the left. A plain trapezoid sum on
//! the v-grid then converges geometrically in the step size.

use crate::policy::PrecisionPolicy;
use crate::sum::KahanSum;

/// ∫₀¹ f(x) lnᵏ(-ln x) dx.
///
/// The integrand receives both x and u = -ln x so rational factors can be
/// evaluated stably near x = 1 (e.g. via expm1 in u) where forming
/// x^a - x^b directly would cancel.
pub fn loglog_quadrature<F>(f: F, k: u32, policy: &PrecisionPolicy) -> f64
where
    F: Fn(f64, f64) -> f64,
{
    let h = policy.quad_step;
    let n = (policy.quad_halfwidth / h).floor() as i64;
    let mut acc = KahanSum::new();
    for i in -n..=n {
        let v = i as f64 * h;
        let sh = 2.0 * v.sinh();
        let u = sh.exp();
        if u > 700.0 {
            continue; // e^{-u} underflows; the node contributes nothing
        }
        let x = (-u).exp();
        // ln(u) = 2 sinh v exactly by construction.
        let weight = x * sh.powi(k as i32) * 2.0 * v.cosh() * u;
        if weight == 0.0 {
            continue;
        }
        let term = f(x, u) * weight;
        if term.is_finite() {
            acc.add(term);
        }
    }
    acc.total() * h
}

/// ∫₀^∞ g(t) e^{-lambda t} dt for smooth g vanishing at t = 0, via the same
/// map t = e^{2 sinh v}.
pub fn exp_decay_quadrature<G>(g: G, lambda: f64, policy: &PrecisionPolicy) -> f64
where
    G: Fn(f64) -> f64,
{
    let h = policy.quad_step;
    let n = (policy.quad_halfwidth / h).floor() as i64;
    let mut acc = KahanSum::new();
    for i in -n..=n {
        let v = i as f64 * h;
        let t = (2.0 * v.sinh()).exp();
        let decay = -lambda * t;
        if decay < -700.0 {
            continue;
        }
        let term = g(t) * decay.exp() * 2.0 * v.cosh() * t;
        if term.is_finite() {
            acc.add(term);
        }
    }
    acc.total() * h
}
