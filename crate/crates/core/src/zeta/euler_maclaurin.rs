use num::complex::Complex64;
use serde::Serialize;

use super::bernoulli::{b2k_over_fact, MAX_HALF_INDEX};
use super::theta::theta_oracle;
use crate::{LabError, Result};

/// A zeta value together with a rigorous bound on the Euler-Maclaurin
/// remainder (rounding not included).
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZetaEstimate {
    pub value: Complex64,
    pub error_bound: f64,
}

/// Euler-Maclaurin summation of `zeta(s)` with `n_terms` explicit terms and
/// `n_bernoulli` correction terms:
///
/// `zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
///            + sum_{k=1}^{M} B_2k/(2k)! s(s+1)...(s+2k-2) N^(-s-2k+1) + R`
///
/// with `|R| <= |s + 2M + 1| / (sigma + 2M + 1) * |first omitted term|`.
pub fn zeta_euler_maclaurin(
    s: Complex64,
    n_terms: usize,
    n_bernoulli: usize,
) -> Result<ZetaEstimate> {
    if s == Complex64::new(1.0, 0.0) {
        return Err(LabError::Pole);
    }
    if !(s.re > -1.0) || !s.im.is_finite() {
        return Err(LabError::invalid(format!(
            "Euler-Maclaurin oracle needs Re(s) > -1, got {s}"
        )));
    }
    if n_terms == 0 || n_bernoulli == 0 || n_bernoulli >= MAX_HALF_INDEX {
        return Err(LabError::invalid(format!(
            "need n_terms >= 1 and 1 <= n_bernoulli < {MAX_HALF_INDEX}"
        )));
    }
    let n = n_terms as f64;
    let mut sum = Complex64::new(0.0, 0.0);
    // small terms first
    for k in (1..n_terms).rev() {
        sum += (-s * (k as f64).ln()).exp();
    }
    let n_pow = (-s * n.ln()).exp(); // N^-s
    sum += n_pow * n / (s - 1.0) + 0.5 * n_pow;

    // running factor s(s+1)...(s+2k-2) N^(-s-2k+1)
    let mut factor = s * n_pow / n;
    let inv_n2 = 1.0 / (n * n);
    for k in 1..=n_bernoulli {
        sum += factor * b2k_over_fact(k);
        let kf = k as f64;
        factor *= (s + (2.0 * kf - 1.0)) * (s + 2.0 * kf) * inv_n2;
    }
    let m = n_bernoulli as f64;
    let next = (factor * b2k_over_fact(n_bernoulli + 1)).norm();
    let error_bound = (s + 2.0 * m + 1.0).norm() / (s.re + 2.0 * m + 1.0) * next;
    Ok(ZetaEstimate {
        value: sum,
        error_bound,
    })
}

/// Euler-Maclaurin with parameters chosen for about `1e-13` accuracy at
/// moderate `|s|` (the oracle configuration).
pub fn zeta_em_auto(s: Complex64) -> Result<ZetaEstimate> {
    const M: usize = 24;
    let n = ((s.norm() + 2.0 * M as f64) / std::f64::consts::PI).ceil() as usize + 4;
    zeta_euler_maclaurin(s, n.max(12), M)
}

/// `zeta(1/2 + it)` by the oracle.
pub fn zeta_oracle_line(t: f64) -> Complex64 {
    zeta_em_auto(Complex64::new(0.5, t))
        .expect("the critical line avoids the pole")
        .value
}

/// `Z(t) = Re[exp(i theta(t)) zeta(1/2 + it)]` built only from the oracle
/// pieces (log-gamma theta and Euler-Maclaurin zeta). Any real `t`.
pub fn z_oracle(t: f64) -> f64 {
    let rot = Complex64::from_polar(1.0, theta_oracle(t));
    (rot * zeta_oracle_line(t)).re
}

/// `zeta(x) - 1` for real `x >= 2`, summed from `n = 2` so that the result
/// keeps full relative precision when it is tiny.
pub(crate) fn zeta_minus_one_real(x: f64) -> f64 {
    debug_assert!(x >= 2.0);
    const N: usize = 16;
    const M: usize = 12;
    let n = N as f64;
    let mut sum = 0.0;
    for k in (2..N).rev() {
        sum += (k as f64).powf(-x);
    }
    let n_pow = n.powf(-x);
    sum += n_pow * n / (x - 1.0) + 0.5 * n_pow;
    let mut factor = x * n_pow / n;
    for k in 1..=M {
        sum += factor * b2k_over_fact(k);
        let kf = k as f64;
        factor *= (x + 2.0 * kf - 1.0) * (x + 2.0 * kf) / (n * n);
    }
    sum
}
