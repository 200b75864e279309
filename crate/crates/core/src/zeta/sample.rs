use std::f64::consts::PI;

use num::complex::Complex64;
use serde::Serialize;

use super::euler_maclaurin::zeta_oracle_line;
use super::riemann_siegel::z_unchecked;
use super::theta::{check_threshold, theta, theta_oracle, T_MIN};
use crate::{LabError, Result};

/// One point on the critical line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct CriticalSample {
    pub t: f64,
    pub z_value: f64,
    pub theta_value: f64,
    pub zeta_value: Complex64,
}

impl CriticalSample {
    /// `chi(1/2 + it) = exp(-2i theta)`.
    pub fn chi(&self) -> Complex64 {
        Complex64::from_polar(1.0, -2.0 * self.theta_value)
    }

    /// `|zeta(1/2 + it)|`, taken from `Z` so that it carries no rounding from
    /// the rotation.
    pub fn zeta_abs(&self) -> f64 {
        self.z_value.abs()
    }
}

fn assemble(t: f64, z_value: f64, theta_value: f64) -> CriticalSample {
    CriticalSample {
        t,
        z_value,
        theta_value,
        zeta_value: Complex64::from_polar(1.0, -theta_value) * z_value,
    }
}

/// `zeta(1/2 + it)` with its Riemann-Siegel decomposition, `|t| >= T_MIN`.
pub fn zeta_line(t: f64) -> Result<CriticalSample> {
    check_threshold(t)?;
    Ok(assemble(t, z_unchecked(t.abs()), theta(t)?))
}

/// Like [`zeta_line`] but defined for every real `t`: below `T_MIN` the
/// Euler-Maclaurin oracle and the log-gamma theta are used instead.
pub fn sample_at(t: f64) -> CriticalSample {
    if t.abs() >= T_MIN {
        let a = t.abs();
        let th = theta(t).expect("checked threshold");
        assemble(t, z_unchecked(a), th)
    } else {
        let th = theta_oracle(t);
        let zeta = zeta_oracle_line(t);
        let z = (Complex64::from_polar(1.0, th) * zeta).re;
        CriticalSample {
            t,
            z_value: z,
            theta_value: th,
            zeta_value: zeta,
        }
    }
}

/// Largest grid step that resolves the oscillation of `Z` up to `t1`:
/// `2 pi / log(t1 / 2 pi)`, capped at `2 pi` where the log is below one.
pub fn max_grid_step(t1: f64) -> f64 {
    2.0 * PI / (t1 / (2.0 * PI)).ln().max(1.0)
}

/// Samples at `t0, t0 + dt, ...` while `<= t1`.
pub fn sample_uniform_grid(t0: f64, t1: f64, dt: f64) -> Result<Vec<CriticalSample>> {
    let (start, step, count) = uniform_grid_shape(t0, t1, dt)?;
    (0..count)
        .map(|i| zeta_line(start + i as f64 * step))
        .collect()
}

/// Validated `(t0, dt, count)` of a uniform grid.
pub fn uniform_grid_shape(t0: f64, t1: f64, dt: f64) -> Result<(f64, f64, usize)> {
    if !(t0 >= T_MIN) {
        return Err(LabError::BelowThreshold {
            t: t0,
            t_min: T_MIN,
        });
    }
    if !(t1 > t0) || !t1.is_finite() {
        return Err(LabError::invalid(format!(
            "grid needs t0 < t1, got [{t0}, {t1}]"
        )));
    }
    let max = max_grid_step(t1);
    if !(dt > 0.0) || dt > max {
        return Err(LabError::UnresolvedStep { dt, max });
    }
    let count = ((t1 - t0) / dt * (1.0 + 1e-12)).floor() as usize + 1;
    Ok((t0, dt, count))
}
