//! The Euler product `a_3 = prod_p (1 - 1/p)^4 (1 + 4/p + 1/p^2)`.
//!
//! With `x = 1/p` the logarithm of a local factor is
//! `f(x) = 4 log(1 - x) + log(1 + 4x + x^2) = sum_{k >= 2} c_k x^k` where
//! `c_k = -(4 + r_1^k + r_2^k) / k` and `r_{1,2} = -2 +- sqrt(3)` are the
//! reciprocal roots of `1 + 4x + x^2`. The linear coefficient vanishes, which
//! is what makes the product converge.
//!
//! Two independent evaluations are provided:
//!
//! * [`a3_direct`] multiplies the local factors up to a prime limit and
//!   completes the product with the closed form `prod_p (1 - p^-2)^9 =
//!   zeta(2)^-9`; the remaining tail starts at `p^-3`.
//! * [`a3_accelerated`] sums the `c_k`-weighted prime zeta values
//!   `P(k) = sum_p p^-k` past a small prime limit.
//!
//! All tail bounds are bounds on `|log(a_3 / value)|`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use serde::Serialize;

use super::{for_each_prime, prime_zeta};
use crate::numeric::CompensatedSum;
use crate::{LabError, Result};

const SQRT3: f64 = 1.732_050_807_568_877_2;
/// Largest reciprocal root modulus, `2 + sqrt(3)`.
const R_MAX: f64 = 2.0 + SQRT3;

/// One evaluation of `a_3`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EulerProductValue {
    /// Estimate of `a_3`.
    pub value: f64,
    /// Natural log of `value`.
    pub log_value: f64,
    /// Largest prime treated factor by factor.
    pub prime_limit: u64,
    /// Rigorous bound on `|log(a_3 / value)|`.
    pub tail_bound: f64,
    /// Product of the raw local factors over `p <= prime_limit` (no tail
    /// completion).
    pub partial_product: f64,
    /// Bound on `|log(a_3 / partial_product)|`.
    pub partial_tail_bound: f64,
}

/// `c_k`, the coefficient of `p^-k` in the log of a local factor.
pub fn a3_expansion_coefficient(k: u32) -> f64 {
    if k == 0 {
        return 0.0;
    }
    let r1 = -2.0 + SQRT3;
    let r2 = -2.0 - SQRT3;
    let k_i = k as i32;
    -(4.0 + r1.powi(k_i) + r2.powi(k_i)) / f64::from(k)
}

/// `log[(1 - 1/p)^4 (1 + 4/p + 1/p^2)]`.
pub fn a3_local_log_factor(p: f64) -> f64 {
    let x = 1.0 / p;
    4.0 * (-x).ln_1p() + (x * (4.0 + x)).ln_1p()
}

/// Bound on `sum_{n > y} n^-k`, integer `y >= 1`, `k >= 2`.
fn power_tail(k: u32, y: f64) -> f64 {
    let y1 = y + 1.0;
    y1.powi(-(k as i32)) * (1.0 + y1 / f64::from(k - 1))
}

/// Bound on `sum_{p > y} sum_{k >= k0} |e_k| p^-k` when
/// `|e_k| <= (extra + R_MAX^k) / k`. Requires `y >= 3`.
fn series_tail_bound(k0: u32, y: u64, extra: f64) -> f64 {
    debug_assert!(y >= 3);
    let yf = y as f64;
    let q = R_MAX / (yf + 1.0);
    let term = |k: u32| (extra + R_MAX.powi(k as i32)) / f64::from(k) * power_tail(k, yf);
    let mut sum = 0.0;
    let mut k = k0;
    loop {
        let t = term(k);
        sum += t;
        if t <= sum * 1e-18 || t < 1e-300 || k > 20_000 {
            // consecutive terms shrink at least by the factor q
            return sum + t * q / (1.0 - q);
        }
        k += 1;
    }
}

/// Bound for arbitrary `y >= 2`: primes in `(y, 3]` are added explicitly.
fn tail_bound_from(y: u64, k0: u32, extra: f64, local: impl Fn(f64) -> f64) -> f64 {
    if y >= 3 {
        series_tail_bound(k0, y, extra)
    } else {
        local(3.0).abs() + series_tail_bound(k0, 3, extra)
    }
}

/// Floating-point slack for a sum of `count` logs of total size `mass`.
fn rounding_slack(count: usize, mass: f64) -> f64 {
    8.0 * f64::EPSILON * (mass + count as f64 * 1e-3 * f64::EPSILON.sqrt())
}

/// Direct product over `p <= prime_limit`, completed by `zeta(2)^-9`.
pub fn a3_direct(prime_limit: u64) -> Result<EulerProductValue> {
    if prime_limit < 2 {
        return Err(LabError::invalid(format!(
            "a3_direct needs prime_limit >= 2, got {prime_limit}"
        )));
    }
    let mut raw = CompensatedSum::new();
    let mut completed = CompensatedSum::new();
    let mut mass = 0.0;
    let mut count = 0usize;
    for_each_prime(prime_limit, |p| {
        let p = p as f64;
        let f = a3_local_log_factor(p);
        raw.add(f);
        // log g(1/p) = f(1/p) - 9 log(1 - p^-2) = O(p^-3)
        completed.add(f - 9.0 * (-(p * p).recip()).ln_1p());
        mass += f.abs();
        count += 1;
    });
    let log_zeta2 = (PI * PI / 6.0).ln();
    let log_value = completed.value() - 9.0 * log_zeta2;
    let partial_log = raw.value();
    let slack = rounding_slack(count, mass);

    let tail_bound = tail_bound_from(prime_limit, 3, 23.0, |p| {
        a3_local_log_factor(p) - 9.0 * (-(p * p).recip()).ln_1p()
    }) + slack;
    let partial_tail_bound = tail_bound_from(prime_limit, 2, 5.0, a3_local_log_factor) + slack;

    Ok(EulerProductValue {
        value: log_value.exp(),
        log_value,
        prime_limit,
        tail_bound,
        partial_product: partial_log.exp(),
        partial_tail_bound,
    })
}

/// Prime-zeta accelerated evaluation.
///
/// Primes up to `prime_limit` are handled directly; the rest of the
/// expansion is summed through `P(k) - sum_{p <= prime_limit} p^-k` for
/// `2 <= k <= series_depth`. Orders whose whole contribution is provably
/// below `1e-18` are skipped, so `series_depth` acts as a maximum.
pub fn a3_accelerated(series_depth: u32, prime_limit: u64) -> Result<EulerProductValue> {
    if series_depth < 2 {
        return Err(LabError::invalid(format!(
            "a3_accelerated needs series_depth >= 2, got {series_depth}"
        )));
    }
    if prime_limit < 3 {
        return Err(LabError::invalid(format!(
            "a3_accelerated needs prime_limit >= 3 (the expansion diverges at p = 2), got {prime_limit}"
        )));
    }
    let yf = prime_limit as f64;
    let needed = |k: u32| (5.0 + R_MAX.powi(k as i32)) / f64::from(k) * power_tail(k, yf) > 1e-18;
    let depth = (2..=series_depth)
        .take_while(|&k| needed(k))
        .last()
        .unwrap_or(1);

    let primes = super::primes_up_to(prime_limit);
    let mut acc = CompensatedSum::new();
    let mut mass = 0.0;
    for &p in &primes {
        let f = a3_local_log_factor(p as f64);
        acc.add(f);
        mass += f.abs();
    }
    let partial_log = acc.value();

    let mut slack = rounding_slack(primes.len(), mass);
    for k in 2..=depth {
        let pk = prime_zeta(k, 1e-18)?;
        let head: CompensatedSum = primes
            .iter()
            .map(|&p| (p as f64).powi(-(k as i32)))
            .collect();
        let c = a3_expansion_coefficient(k);
        acc.add(c * (pk - head.value()));
        slack += c.abs() * 8.0 * f64::EPSILON * pk;
    }
    let log_value = acc.value();
    let tail_bound = series_tail_bound(depth + 1, prime_limit, 5.0) + slack;

    Ok(EulerProductValue {
        value: log_value.exp(),
        log_value,
        prime_limit,
        tail_bound,
        partial_product: partial_log.exp(),
        partial_tail_bound: series_tail_bound(2, prime_limit, 5.0) + slack,
    })
}

/// `a_3` from the accelerated method at its default parameters, computed once.
pub fn a3_reference() -> EulerProductValue {
    static A3: OnceLock<EulerProductValue> = OnceLock::new();
    *A3.get_or_init(|| a3_accelerated(24, 1000).expect("default parameters are valid"))
}
