//! Exact combinatorial tables: Bernoulli numbers and polynomials, signed
//! Stirling numbers of the first kind, generalized harmonic numbers.
//!
//! Everything here is exact rational/integer arithmetic; the floating-point
//! views used by the analytic code are single conversions of exact values.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Highest Bernoulli index stored.
pub const BERNOULLI_NMAX: usize = 60;
/// Highest Stirling row stored.
pub const STIRLING_NMAX: usize = 36;

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Bernoulli numbers B_0..B_nmax and polynomial coefficient rows for B_n(x),
/// under the B_1 = -1/2 convention (the one forced by zeta(0,a) = -B_1(a)).
pub struct BernoulliTable {
    numbers: Vec<BigRational>,
    numbers_f64: Vec<f64>,
    /// poly[n][k] = coefficient of x^k in B_n(x), as f64.
    poly_f64: Vec<Vec<f64>>,
}

impl BernoulliTable {
    pub fn new(nmax: usize) -> Self {
        // B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k.
        let mut numbers: Vec<BigRational> = Vec::with_capacity(nmax + 1);
        numbers.push(BigRational::one());
        for n in 1..=nmax {
            let mut acc = BigRational::zero();
            for (k, bk) in numbers.iter().enumerate() {
                acc += BigRational::from_integer(binomial(n + 1, k)) * bk;
            }
            numbers.push(-acc / BigRational::from_integer(BigInt::from(n + 1)));
        }
        let numbers_f64 = numbers.iter().map(rational_to_f64).collect();
        // B_n(x) = sum_k C(n,k) B_{n-k} x^k.
        let mut poly_f64 = Vec::with_capacity(nmax + 1);
        for n in 0..=nmax {
            let row: Vec<f64> = (0..=n)
                .map(|k| {
                    let c = BigRational::from_integer(binomial(n, k)) * &numbers[n - k];
                    rational_to_f64(&c)
                })
                .collect();
            poly_f64.push(row);
        }
        BernoulliTable {
            numbers,
            numbers_f64,
            poly_f64,
        }
    }

    pub fn nmax(&self) -> usize {
        self.numbers.len() - 1
    }

    pub fn number(&self, n: usize) -> Result<&BigRational> {
        self.numbers.get(n).ok_or_else(|| {
            Error::Range(format!(
                "Bernoulli index {n} beyond table max {}",
                self.nmax()
            ))
        })
    }

    pub fn number_f64(&self, n: usize) -> Result<f64> {
        self.numbers_f64.get(n).copied().ok_or_else(|| {
            Error::Range(format!(
                "Bernoulli index {n} beyond table max {}",
                self.nmax()
            ))
        })
    }

    /// B_n(x) by Horner evaluation of the exact coefficient row.
    pub fn polynomial(&self, n: usize, x: f64) -> Result<f64> {
        let row = self.poly_f64.get(n).ok_or_else(|| {
            Error::Range(format!(
                "Bernoulli index {n} beyond table max {}",
                self.nmax()
            ))
        })?;
        let mut acc = 0.0;
        for &c in row.iter().rev() {
            acc = acc * x + c;
        }
        Ok(acc)
    }

    /// Periodic extension P_n(x) = B_n(x - floor(x)).
    pub fn periodic(&self, n: usize, x: f64) -> Result<f64> {
        if n == 0 {
            return Err(Error::Range("periodic Bernoulli needs n >= 1".into()));
        }
        self.polynomial(n, x - x.floor())
    }
}

/// Signed Stirling numbers of the first kind, rows n = 0..=nmax.
pub struct StirlingTable {
    rows: Vec<Vec<BigInt>>,
}

impl StirlingTable {
    pub fn new(nmax: usize) -> Self {
        // s(n+1,k) = s(n,k-1) - n*s(n,k).
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nmax + 1);
        rows.push(vec![BigInt::one()]);
        for n in 1..=nmax {
            let prev = &rows[n - 1];
            let mut row = vec![BigInt::zero(); n + 1];
            for k in 1..=n {
                let carry = if k < n {
                    &prev[k] * BigInt::from(n - 1)
                } else {
                    BigInt::zero()
                };
                row[k] = &prev[k - 1] - carry;
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn nmax(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&BigInt> {
        self.rows.get(n).and_then(|row| row.get(k)).ok_or_else(|| {
            Error::Range(format!(
                "Stirling index ({n},{k}) out of range, nmax {}",
                self.nmax()
            ))
        })
    }

    pub fn get_f64(&self, n: usize, k: usize) -> Result<f64> {
        Ok(self.get(n, k)?.to_f64().unwrap_or(f64::NAN))
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // Ratio::to_f64 is exact-rounded for our table sizes.
    r.to_f64().unwrap_or_else(|| {
        let n = r.numer().to_f64().unwrap_or(f64::NAN);
        let d = r.denom().to_f64().unwrap_or(f64::NAN);
        n / d
    })
}

/// H_n^{ (r) } = sum_{k=1}^n k^{-r}, exact.
pub fn generalized_harmonic(n: usize, r: u32) -> Result<BigRational> {
    if n == 0 || r == 0 {
        return Err(Error::Domain("generalized harmonic needs n, r >= 1".into()));
    }
    let mut acc = BigRational::zero();
    for k in 1..=n {
        let kr = BigInt::from(k).pow(r);
        acc += BigRational::new(BigInt::one(), kr);
    }
    Ok(acc)
}

pub fn generalized_harmonic_f64(n: usize, r: u32) -> Result<f64> {
    Ok(rational_to_f64(&generalized_harmonic(n, r)?))
}

static BERNOULLI: OnceLock<BernoulliTable> = OnceLock::new();
static STIRLING: OnceLock<StirlingTable> = OnceLock::new();

/// Process-wide Bernoulli table, built once, read-only afterwards.
pub fn bernoulli_table() -> &'static BernoulliTable {
    BERNOULLI.get_or_init(|| BernoulliTable::new(BERNOULLI_NMAX))
}

pub fn stirling_table() -> &'static StirlingTable {
    STIRLING.get_or_init(|| StirlingTable::new(STIRLING_NMAX))
}

/// B_n as exact rational, B_1 = -1/2.
pub fn bernoulli_number(n: usize) -> Result<BigRational> {
    Ok(bernoulli_table().number(n)?.clone())
}

pub fn bernoulli_number_f64(n: usize) -> Result<f64> {
    bernoulli_table().number_f64(n)
}

/// P_n(x) = B_n(x - floor(x)), period 1 in x.
pub fn periodic_bernoulli(n: usize, x: f64) -> Result<f64> {
    bernoulli_table().periodic(n, x)
}

/// Signed Stirling number of the first kind s(n, k).
pub fn stirling_first(n: usize, k: usize) -> Result<BigInt> {
    if k > n {
        return Err(Error::Range(format!("Stirling index k={k} exceeds n={n}")));
    }
    Ok(stirling_table().get(n, k)?.clone())
}
