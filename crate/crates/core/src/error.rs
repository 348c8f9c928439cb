//! Error type shared by every evaluation routine.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Input outside the domain of the operation (e.g. x <= 0 for ln Gamma).
    #[error("domain error: {0}")]
    Domain(String),
    /// Table or order index outside the supported range.
    #[error("range error: {0}")]
    Range(String),
    /// Evaluation requested at the s = 1 pole of a zeta function.
    #[error("pole error: zeta function has a simple pole at s = 1")]
    Pole,
    /// Genuinely singular input, e.g. a removable-looking 1/sin(delta) at delta = 0.
    #[error("singular input: {0}")]
    Singular(String),
    /// A complex route produced an imaginary residual too large to discard.
    #[error("branch-cut violation: imaginary residual {0:.3e} exceeds 1e-10")]
    BranchCut(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
