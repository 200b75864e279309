use std::f64::consts::{LN_2, PI};

use num::complex::Complex64;
use serde::Serialize;

use super::bernoulli::b2k;
use super::gamma::ln_gamma_complex;
use crate::{LabError, Result};

/// Lower end of the range served by the asymptotic evaluators (`theta`,
/// `chi_line`, `z_function`). Below it the Euler-Maclaurin oracle is used.
pub const T_MIN: f64 = 10.0;

const THETA_TERMS: usize = 10;

pub(crate) fn check_threshold(t: f64) -> Result<()> {
    if t.is_finite() && t.abs() >= T_MIN {
        Ok(())
    } else {
        Err(LabError::BelowThreshold { t, t_min: T_MIN })
    }
}

/// The non-elementary part of `theta(t)` for `t >= T_MIN`:
/// `sum_k (1 - 2^(1-2k)) |B_2k| / (4k(2k-1) t^(2k-1))`.
pub(crate) fn theta_stirling_tail(t: f64) -> f64 {
    let inv = 1.0 / t;
    let inv2 = inv * inv;
    let mut pow = inv;
    let mut acc = 0.0;
    for k in 1..=THETA_TERMS {
        let kf = k as f64;
        let c = (1.0 - 2f64.powi(1 - 2 * k as i32)) * b2k(k).abs() / (4.0 * kf * (2.0 * kf - 1.0));
        acc += c * pow;
        pow *= inv2;
    }
    acc
}

/// `(t/2) log(t/2pi) - t/2 - pi/8`, the elementary part of `theta`.
pub(crate) fn theta_leading(t: f64) -> f64 {
    0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0
}

/// Riemann-Siegel theta function for `|t| >= T_MIN`, by its Stirling
/// expansion. Odd in `t`.
pub fn theta(t: f64) -> Result<f64> {
    check_threshold(t)?;
    let a = t.abs();
    let v = theta_leading(a) + theta_stirling_tail(a);
    Ok(if t < 0.0 { -v } else { v })
}

/// `theta(t) = Im log Gamma(1/4 + it/2) - (t/2) log pi` through the complex
/// log-gamma function. Valid for every real `t`.
pub fn theta_oracle(t: f64) -> f64 {
    ln_gamma_complex(Complex64::new(0.25, 0.5 * t)).im - 0.5 * t * PI.ln()
}

/// The functional-equation factor `chi(1/2 + it)` on the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ChiFactor {
    pub t: f64,
    pub value: Complex64,
}

/// `chi(1/2 + it) = exp(-2i theta(t))`.
pub fn chi_line(t: f64) -> Result<ChiFactor> {
    let th = theta(t)?;
    Ok(ChiFactor {
        t,
        value: Complex64::from_polar(1.0, -2.0 * th),
    })
}

/// `log cos z` without overflow for large `|Im z|`.
fn ln_cos(z: Complex64) -> Complex64 {
    let i = Complex64::i();
    // cos z = (e^{iz} + e^{-iz}) / 2; factor out the dominant exponential
    let w = if z.im <= 0.0 { i * z } else { -i * z };
    w - LN_2 + (-2.0 * w).exp().ln_1p_complex()
}

trait Ln1p {
    fn ln_1p_complex(self) -> Self;
}

impl Ln1p for Complex64 {
    fn ln_1p_complex(self) -> Self {
        if self.norm() < 1e-8 {
            self - 0.5 * self * self
        } else {
            (1.0 + self).ln()
        }
    }
}

/// `chi(1/2 + it)` evaluated as `2 (2 pi)^(-w) Gamma(w) cos(pi w / 2)` with
/// `w = 1/2 - it`, the reciprocal form of the functional equation. Valid for
/// every real `t`; independent of [`theta`].
pub fn chi_gamma_route(t: f64) -> Complex64 {
    let w = Complex64::new(0.5, -t);
    let log = LN_2 - w * (2.0 * PI).ln() + ln_gamma_complex(w) + ln_cos(0.5 * PI * w);
    log.exp()
}
