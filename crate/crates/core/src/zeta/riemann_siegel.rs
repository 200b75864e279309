//! Riemann-Siegel evaluation of `Z(t)`.
//!
//! `Z(t) = 2 sum_{n <= a} n^(-1/2) cos(theta(t) - t log n)
//!        + 2 (-1)^(N-1) a^(-1/2) Re[e^{i delta(t)} sum_j a^-j G_j(p)]`
//!
//! with `a = sqrt(t / 2 pi)`, `N = floor(a)`, `p = 1 - 2(a - N)` and
//! `delta(t) = theta(t) - (t/2) log(t/2pi) + t/2 + pi/8`. The remainder
//! functions `G_j` are combinations of derivatives of the Riemann-Siegel
//! kernel; their Taylor coefficients in `p` are tabulated in `rs_tables`.
//! `G_j` has the parity of `j`. The correction depth is fixed at
//! [`RS_DEPTH`] terms, which keeps the absolute error below `1e-7` from
//! `t = 10` upwards and far below that for larger `t`.

use std::f64::consts::PI;

use num::complex::Complex64;

use super::rs_tables::{RS_DEGREE, RS_DEPTH, RS_REMAINDER};
use super::theta::{check_threshold, theta_leading, theta_stirling_tail};
use crate::Result;

/// Number of remainder terms in the Riemann-Siegel correction.
pub const CORRECTION_DEPTH: usize = RS_DEPTH;

fn remainder_term(j: usize, p: f64) -> Complex64 {
    let table = &RS_REMAINDER[j];
    let parity = j % 2;
    let p2 = p * p;
    let (mut re, mut im) = (0.0, 0.0);
    let mut k = RS_DEGREE - (RS_DEGREE - parity) % 2;
    loop {
        let (cr, ci) = table[k];
        re = re * p2 + cr;
        im = im * p2 + ci;
        if k < 2 {
            break;
        }
        k -= 2;
    }
    if parity == 1 {
        re *= p;
        im *= p;
    }
    Complex64::new(re, im)
}

/// `sum_j a^-j G_j(p)`, skipping terms below rounding level.
fn remainder_sum(a: f64, p: f64) -> Complex64 {
    let inv_a = 1.0 / a;
    let mut scale = 1.0;
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..RS_DEPTH {
        if scale < 1e-18 {
            break;
        }
        acc += remainder_term(j, p) * scale;
        scale *= inv_a;
    }
    acc
}

/// `Z(t)` for `t >= T_MIN` (no threshold check; `t` must be positive).
pub(crate) fn z_unchecked(t: f64) -> f64 {
    let a = (t / (2.0 * PI)).sqrt();
    let n = a.floor();
    let p = 1.0 - 2.0 * (a - n);
    let delta = theta_stirling_tail(t);
    let th = theta_leading(t) + delta;

    let mut main = 0.0;
    for k in (1..=n as usize).rev() {
        let kf = k as f64;
        main += (th - t * kf.ln()).cos() / kf.sqrt();
    }
    let sign = if (n as u64) % 2 == 1 { 1.0 } else { -1.0 };
    let rot = Complex64::from_polar(1.0, delta);
    let corr = sign / a.sqrt() * (rot * remainder_sum(a, p)).re;
    2.0 * (main + corr)
}

/// Riemann-Siegel `Z(t)`, real-valued with `|Z(t)| = |zeta(1/2 + it)|`.
/// Requires `|t| >= T_MIN`; `Z` is even.
pub fn z_function(t: f64) -> Result<f64> {
    check_threshold(t)?;
    Ok(z_unchecked(t.abs()))
}
