//! Stieltjes constants gamma_k(a), Hurwitz zeta derivatives, and the family
//! of log-log integrals they evaluate, in IEEE double precision.
//!
//! The crate is organized around one idea: every closed form is paired with
//! an independent route that can check it.
//!
//! * [`tables`] holds the exact combinatorial layer (Bernoulli, Stirling,
//!   harmonic numbers) in arbitrary-precision rational arithmetic.
//! * [`hurwitz`] is the reference engine: Euler-Maclaurin evaluation of
//!   zeta(s,a), its s-derivatives, and gamma_k(a) from the defining limit.
//! * [`special`] supplies ln Gamma, psi, psi^(n) and zeta^(k)(s) on the
//!   real axis, including the functional-equation continuation to s < 0.
//! * [`rational`] carries the closed forms at rational argument: the
//!   gamma_1(j/m), gamma_2(j/m) expansions, residue-class sums, finite
//!   Fourier transforms, multiplication series, and small-a asymptotics.
//! * [`polylog`] evaluates the s-derivatives of Li_s at s = 1 on the
//!   principal branch, the engine behind the integral closed forms.
//! * [`loglog`] evaluates integrals of ln^k(-ln x) against rational
//!   factors, each in closed form and by independent quadrature.

// Domain guards are written as `!(x > 0.0)` on purpose: the negation also
// rejects NaN, which `x <= 0.0` would let through.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod hurwitz;
pub mod loglog;
pub mod policy;
pub mod polylog;
pub mod quad;
pub mod rational;
pub mod special;
pub mod sum;
pub mod tables;

pub use error::{Error, Result};
pub use hurwitz::{
    euler_gamma, hurwitz_zeta, hurwitz_zeta_derivs, hurwitz_zeta_sderiv, stieltjes_constant,
    stieltjes_oracle, stieltjes_oracle_with_plan, stieltjes_shift, EulerMaclaurinPlan, Method,
    RationalArg, StieltjesValue,
};
pub use policy::PrecisionPolicy;
