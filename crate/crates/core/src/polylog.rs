//! s-derivatives of the polylogarithm at s = 1 on the principal branch.
//!
//! From the expansion Li_s(z) = Gamma(1-s)(-ln z)^{s-1} + sum_n zeta(s-n)
//! ln^n(z)/n! (valid for |ln z| < 2pi), differentiating at s = 1 and
//! cancelling the polar parts gives, with w = -Ln z:
//!
//!   d/ds Li_s(z)|_1 = -gamma_1 - gamma^2/2 - pi^2/12 - gamma Ln w
//!                     - Ln^2(w)/2 + sum_{n>=1} zeta'(1-n) ln^n(z)/n!
//!
//!   d^2/ds^2 Li_s(z)|_1 = gamma_2 + [-2 gamma^3 - gamma pi^2
//!      - (6 gamma^2 + pi^2) Ln w - 6 gamma Ln^2 w - 2 Ln^3 w
//!      - 4 zeta(3)]/6 + sum_{n>=1} zeta''(1-n) ln^n(z)/n!
//!
//! Every logarithm is the principal one (imaginary part in (-pi, pi]);
//! straying off that branch breaks the real-valuedness of the integral
//! closed forms built on these derivatives.

use std::f64::consts::PI;
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::hurwitz::{euler_gamma, stieltjes_constant};
use crate::policy::PrecisionPolicy;
use crate::special;

/// Length of the zeta'(1-n), zeta''(1-n) coefficient tables. The series
/// terms fall like 2^-n for |ln z| <= pi, so 100 coefficients leave the
/// truncation far below double precision even after a-derivatives shift
/// the table by small offsets.
pub const ZETA_DERIV_TABLE_LEN: usize = 100;

struct CoeffTables {
    /// zp[n-1] = zeta'(1-n), n = 1..=LEN.
    zp: Vec<f64>,
    /// zpp[n-1] = zeta''(1-n).
    zpp: Vec<f64>,
}

static TABLES: OnceLock<CoeffTables> = OnceLock::new();

fn tables() -> &'static CoeffTables {
    TABLES.get_or_init(|| {
        let mut zp = Vec::with_capacity(ZETA_DERIV_TABLE_LEN);
        let mut zpp = Vec::with_capacity(ZETA_DERIV_TABLE_LEN);
        for n in 1..=ZETA_DERIV_TABLE_LEN {
            let s = 1.0 - n as f64;
            zp.push(special::riemann_zeta_deriv(1, s).expect("table entry evaluates"));
            zpp.push(special::riemann_zeta_deriv(2, s).expect("table entry evaluates"));
        }
        CoeffTables { zp, zpp }
    })
}

/// zeta'(-j) for j >= 0, from the shared table.
pub fn zeta_prime_neg(j: usize) -> Result<f64> {
    tables().zp.get(j).copied().ok_or_else(|| {
        Error::Range(format!(
            "zeta'(-{j}) beyond table length {ZETA_DERIV_TABLE_LEN}"
        ))
    })
}

/// sum_{n>=1} coeff[n-1] lam^n / n!, stopped at the term floor.
fn coeff_series(coeffs: &[f64], lam: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    let mut acc = Complex64::new(0.0, 0.0);
    let mut pow = Complex64::new(1.0, 0.0);
    for (i, &c) in coeffs.iter().enumerate() {
        let n = i + 1;
        pow *= lam / n as f64;
        let term = pow * c;
        acc += term;
        if term.norm() < policy.series_term_floor && n > 4 {
            return Ok(acc);
        }
    }
    Err(Error::Range(
        "polylogarithm coefficient series did not converge within the table".into(),
    ))
}

/// d^order/ds^order Li_s(z) at s = 1, order 1 or 2, principal branch.
pub fn polylog_sderiv_at1(order: u32, z: Complex64, policy: &PrecisionPolicy) -> Result<Complex64> {
    if z == Complex64::new(1.0, 0.0) {
        return Err(Error::Singular("Li_s derivative diverges at z = 1".into()));
    }
    let lam = z.ln(); // principal: Im in (-pi, pi]
    if lam.norm() >= 2.0 * PI {
        return Err(Error::Domain(format!(
            "|ln z| = {} outside the expansion disk 2 pi",
            lam.norm()
        )));
    }
    let w = -lam;
    let lw = w.ln();
    let g = euler_gamma();
    match order {
        1 => {
            let g1 = stieltjes_constant(1)?;
            let series = coeff_series(&tables().zp, lam, policy)?;
            Ok(
                Complex64::new(-g1 - g * g / 2.0 - PI * PI / 12.0, 0.0) - lw * g - lw * lw / 2.0
                    + series,
            )
        }
        2 => {
            let g2 = stieltjes_constant(2)?;
            let zeta3 = special::apery();
            let series = coeff_series(&tables().zpp, lam, policy)?;
            let poly = (Complex64::new(-2.0 * g.powi(3) - g * PI * PI - 4.0 * zeta3, 0.0)
                - lw * (6.0 * g * g + PI * PI)
                - lw * lw * (6.0 * g)
                - lw * lw * lw * 2.0)
                / 6.0;
            Ok(poly + g2 + series)
        }
        other => Err(Error::Range(format!(
            "Li_s derivative order must be 1 or 2, got {other}"
        ))),
    }
}
