//! Precision policy: truncation orders, tolerances and quadrature parameters
//! shared by every series and integral in the crate.

use std::sync::OnceLock;

use crate::error::{Error, Result};

/// Tunable numerical parameters. All series accumulate with compensated
/// summation; `agree_tol` is the identity-test tolerance the defaults are
/// sized for (1e-9 for denominators up to 24).
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionPolicy {
    /// Euler-Maclaurin direct-sum length N.
    pub em_direct_terms: usize,
    /// Highest Bernoulli index 2j used in the Euler-Maclaurin tail (even).
    pub em_tail_order: usize,
    /// Hard cap on adaptive series length.
    pub series_max_terms: usize,
    /// Absolute truncation threshold for adaptive series.
    pub series_term_floor: f64,
    /// Grid step of the doubly-exponential quadrature rule.
    pub quad_step: f64,
    /// Grid truncation |v| <= quad_halfwidth.
    pub quad_halfwidth: f64,
    /// Identity-test tolerance.
    pub agree_tol: f64,
}

impl Default for PrecisionPolicy {
    fn default() -> Self {
        PrecisionPolicy {
            em_direct_terms: 30,
            em_tail_order: 28,
            series_max_terms: 400,
            series_term_floor: 1e-16,
            quad_step: 0.05,
            quad_halfwidth: 6.0,
            agree_tol: 1e-9,
        }
    }
}

impl PrecisionPolicy {
    /// Tighter profile: longer direct sums and a finer quadrature grid.
    pub fn strict() -> Self {
        PrecisionPolicy {
            em_direct_terms: 40,
            em_tail_order: 32,
            series_max_terms: 600,
            series_term_floor: 1e-17,
            quad_step: 0.025,
            quad_halfwidth: 6.5,
            agree_tol: 1e-10,
        }
    }

    /// Resolve a named profile: "default" or "strict".
    pub fn named(name: &str) -> Result<Self> {
        match name {
            "default" => Ok(Self::default()),
            "strict" => Ok(Self::strict()),
            other => Err(Error::Range(format!("unknown precision profile `{other}`"))),
        }
    }

    /// Profile selected by `STIELTJES_PRECISION_PROFILE`, defaulting when unset.
    pub fn from_env() -> Result<Self> {
        match std::env::var("STIELTJES_PRECISION_PROFILE") {
            Ok(name) => Self::named(&name),
            Err(_) => Ok(Self::default()),
        }
    }

    /// Process-wide policy used by the convenience entry points, resolved
    /// once from the environment. An unrecognized profile name falls back
    /// to the default here; front ends should pre-validate with
    /// [`PrecisionPolicy::from_env`] if they want to reject it instead.
    pub fn global() -> &'static PrecisionPolicy {
        static GLOBAL: OnceLock<PrecisionPolicy> = OnceLock::new();
        GLOBAL.get_or_init(|| PrecisionPolicy::from_env().unwrap_or_default())
    }

    pub fn validate(&self) -> Result<()> {
        if self.em_direct_terms == 0 {
            return Err(Error::Range("em_direct_terms must be positive".into()));
        }
        if self.em_tail_order < 2 || !self.em_tail_order.is_multiple_of(2) {
            return Err(Error::Range("em_tail_order must be even and >= 2".into()));
        }
        if self.series_max_terms == 0 {
            return Err(Error::Range("series_max_terms must be positive".into()));
        }
        if !(self.series_term_floor > 0.0) {
            return Err(Error::Range("series_term_floor must be > 0".into()));
        }
        if !(self.quad_step > 0.0) || !(self.quad_halfwidth > 0.0) {
            return Err(Error::Range("quadrature parameters must be > 0".into()));
        }
        if !(self.agree_tol > 0.0) {
            return Err(Error::Range("agree_tol must be > 0".into()));
        }
        Ok(())
    }
}
