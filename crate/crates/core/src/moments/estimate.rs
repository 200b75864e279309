use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use super::integrand::{Integrand, MomentKind};
use super::quadrature::{integrate_panels, Quadrature, QuadratureConfig};
use crate::arithmetic::{a3_reference, DivisorTable};
use crate::dirichlet::{main_term, MainTermKind, MainTermSpec, WeightPolynomial, FACTORIAL_9};
use crate::zeta::T_MIN;
use crate::{LabError, Result};

/// One empirical integral `int_1^T`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MomentEstimate {
    pub kind: MomentKind,
    #[serde(rename = "T")]
    pub t: f64,
    pub theta: Option<f64>,
    pub value_re: f64,
    pub value_im: f64,
    pub main_term: Option<f64>,
    /// `value_re / main_term`.
    pub ratio: Option<f64>,
    pub quad_error: f64,
    /// For `K_N` and `J_N`: whether `theta < 1/2`.
    pub proven: Option<bool>,
    /// For `chi3`: `|value| / (T log^9 T)`.
    pub diagnostic: Option<f64>,
    pub panels: usize,
    pub evaluations: usize,
}

impl MomentEstimate {
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.value_re, self.value_im)
    }

    fn from_quadrature(
        kind: MomentKind,
        t: f64,
        theta: Option<f64>,
        q: Quadrature,
        main: Option<f64>,
    ) -> Self {
        let value = if kind.is_nonnegative() || matches!(kind, MomentKind::Cross | MomentKind::Chi3)
        {
            Complex64::new(q.value.re, 0.0)
        } else {
            q.value
        };
        let ratio = main.filter(|&m| m != 0.0).map(|m| value.re / m);
        MomentEstimate {
            kind,
            t,
            theta,
            value_re: value.re,
            value_im: value.im,
            main_term: main,
            ratio,
            quad_error: q.error,
            proven: None,
            diagnostic: None,
            panels: q.panels,
            evaluations: q.evaluations,
        }
    }
}

/// `int_a^b` of an integrand. `b` may not exceed the integrand's
/// `max_height`.
pub fn integrate_range(
    integrand: &Integrand,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Quadrature> {
    if !(a >= 1.0) {
        return Err(LabError::invalid(format!(
            "integrals start at t >= 1, got {a}"
        )));
    }
    if b > integrand.max_height() {
        return Err(LabError::invalid(format!(
            "integrand prepared up to t = {}, asked for {b}",
            integrand.max_height()
        )));
    }
    integrate_panels(integrand, a, b, cfg)
}

fn check_upper(t: f64) -> Result<()> {
    if t > 1.0 && t.is_finite() {
        Ok(())
    } else {
        Err(LabError::invalid(format!(
            "upper limit T must exceed 1, got {t}"
        )))
    }
}

fn conjecture_term(numerator: i64, t: f64) -> Option<f64> {
    (t > std::f64::consts::E)
        .then(|| numerator as f64 / FACTORIAL_9 as f64 * a3_reference().value * t * t.ln().powi(9))
}

/// `int_1^T |zeta(1/2 + it)|^(2k) dt`.
pub fn integrate_moment(k: u32, t: f64, cfg: &QuadratureConfig) -> Result<MomentEstimate> {
    let integrand = Integrand::moment(k)?;
    if !(t > T_MIN) {
        return Err(LabError::BelowThreshold { t, t_min: T_MIN });
    }
    let q = integrate_range(&integrand, 1.0, t, cfg)?;
    let l = t.ln();
    let main = match k {
        1 => Some(t * l),
        2 => Some(t * l.powi(4) / (2.0 * std::f64::consts::PI.powi(2))),
        _ => conjecture_term(42, t),
    };
    Ok(MomentEstimate::from_quadrature(
        integrand.kind(),
        t,
        None,
        q,
        main,
    ))
}

fn truncated_kind(
    kind: MomentKind,
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    check_upper(t)?;
    let integrand = Integrand::truncated(kind, table, t)?;
    let q = integrate_range(&integrand, 1.0, t, cfg)?;
    let main = match kind {
        MomentKind::Cross => conjecture_term(14, t),
        MomentKind::Diagonal => conjecture_term(28, t),
        _ => None,
    };
    let mut e = MomentEstimate::from_quadrature(kind, t, None, q, main);
    if kind == MomentKind::Chi3 && t > std::f64::consts::E {
        e.diagnostic = Some(e.value_re.abs() / (t * t.ln().powi(9)));
    }
    Ok(e)
}

/// `int_1^T chi(1/2 - it) zeta(1/2 + it)^4 D(1/2 - it) dt`.
pub fn integrate_i1(
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    truncated_kind(MomentKind::I1, t, table, cfg)
}

/// `int_1^T chi(1/2 - it)^3 zeta(1/2 + it)^4 D(1/2 + it) dt`.
pub fn integrate_i2(
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    truncated_kind(MomentKind::I2, t, table, cfg)
}

/// `2 Re int_1^T chi(1/2 - it) D(1/2 - it) D(1/2 + it)^2 dt`.
pub fn integrate_cross(
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    truncated_kind(MomentKind::Cross, t, table, cfg)
}

/// `2 Re int_1^T chi(1/2 - it)^3 D(1/2 + it)^3 dt`.
pub fn integrate_chi3(
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    truncated_kind(MomentKind::Chi3, t, table, cfg)
}

/// `2 int_1^T |zeta(1/2 + it)|^2 |D(1/2 + it)|^2 dt`.
pub fn integrate_diagonal(
    t: f64,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    truncated_kind(MomentKind::Diagonal, t, table, cfg)
}

fn weighted_kind(
    kind: MomentKind,
    t: f64,
    theta: f64,
    weight: &WeightPolynomial,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    check_upper(t)?;
    let main_kind = if kind == MomentKind::KN {
        MainTermKind::KTheorem
    } else {
        MainTermKind::JTheorem
    };
    let spec = MainTermSpec::new(main_kind, theta, a3_reference(), weight.clone())?;
    let integrand = Integrand::weighted(kind, table, t.powf(theta), weight)?;
    let q = integrate_range(&integrand, 1.0, t, cfg)?;
    let main = if t > std::f64::consts::E {
        Some(main_term(&spec, t)?.value)
    } else {
        None
    };
    let mut e = MomentEstimate::from_quadrature(kind, t, Some(theta), q, main);
    e.proven = Some(spec.proven);
    Ok(e)
}

/// `K_N(T) = int_1^T |zeta|^2 zeta^2 D_N(1/2 - it, P) dt` with `N = T^theta`.
pub fn integrate_kn(
    t: f64,
    theta: f64,
    weight: &WeightPolynomial,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    weighted_kind(MomentKind::KN, t, theta, weight, table, cfg)
}

/// `J_N(T) = int_1^T |zeta|^2 |D_N(1/2 + it, P)|^2 dt` with `N = T^theta`.
pub fn integrate_jn(
    t: f64,
    theta: f64,
    weight: &WeightPolynomial,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    weighted_kind(MomentKind::JN, t, theta, weight, table, cfg)
}

/// `int_1^T |zeta|^4 |sum_{n <= N} n^(it)|^2 dt` with `N = T^theta`,
/// `theta >= 0`.
pub fn integrate_jara(t: f64, theta: f64, cfg: &QuadratureConfig) -> Result<MomentEstimate> {
    check_upper(t)?;
    if !(0.0..=1.0).contains(&theta) {
        return Err(LabError::invalid(format!(
            "theta must lie in [0, 1], got {theta}"
        )));
    }
    let integrand = Integrand::jara(t.powf(theta))?;
    let q = integrate_range(&integrand, 1.0, t, cfg)?;
    Ok(MomentEstimate::from_quadrature(
        MomentKind::Jara,
        t,
        Some(theta),
        q,
        None,
    ))
}
