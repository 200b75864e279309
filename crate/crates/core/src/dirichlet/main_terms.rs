use std::f64::consts::E;

use num::rational::Ratio;
use serde::Serialize;

use super::WeightPolynomial;
use crate::arithmetic::EulerProductValue;
use crate::{LabError, Result};

/// `9!`.
pub const FACTORIAL_9: i64 = 362_880;

/// Coefficients of the terminating series `2F1(-2, -3; 6; z)`.
pub fn hyp2f1_coefficients() -> [f64; 3] {
    let (a, b, c) = (-2.0, -3.0, 6.0);
    let mut out = [0.0; 3];
    let mut term = 1.0;
    for (k, slot) in out.iter_mut().enumerate() {
        *slot = term;
        let kf = k as f64;
        term *= (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0));
    }
    out
}

/// `2F1(-2, -3; 6; z)`, identically `1 + z + z^2 / 7`.
pub fn hyp2f1_case(z: f64) -> f64 {
    let c = hyp2f1_coefficients();
    c[0] + z * (c[1] + z * c[2])
}

/// `h(a) = int_a^1 (b - a)^2 P(b) db`, by exact coefficient arithmetic.
pub fn h_transform(p: &WeightPolynomial) -> WeightPolynomial {
    // (b - a)^2 P(b) = b^2 P(b) - 2a b P(b) + a^2 P(b); integrate each in b
    let moment = |shift: usize| -> (WeightPolynomial, f64) {
        let q = &WeightPolynomial::monomial(shift) * p;
        let anti = q.antiderivative();
        (anti.clone(), anti.eval(1.0))
    };
    let mut h = WeightPolynomial::zero();
    for (shift, coeff) in [(2usize, 1.0), (1, -2.0), (0, 1.0)] {
        let (anti, at_one) = moment(shift);
        // int_a^1 = at_one - anti(a), multiplied by coeff a^(2 - shift)
        let part = &WeightPolynomial::constant(at_one) + &anti.scale(-1.0);
        h = &h + &(&WeightPolynomial::monomial(2 - shift) * &part).scale(coeff);
    }
    h
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MainTermKind {
    KTheorem,
    JTheorem,
    SixthMoment,
    CrossTerm,
    HalfMoment,
}

impl MainTermKind {
    /// Integer `c` in the prediction `c a_3 / 9! T log^9 T`, where one exists.
    pub fn conjecture_numerator(self) -> Option<i64> {
        match self {
            MainTermKind::SixthMoment => Some(42),
            MainTermKind::CrossTerm => Some(14),
            MainTermKind::HalfMoment => Some(21),
            MainTermKind::KTheorem | MainTermKind::JTheorem => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MainTermSpec {
    pub kind: MainTermKind,
    pub theta: f64,
    pub a3: EulerProductValue,
    pub weight: WeightPolynomial,
    /// Whether `theta` lies in the range `theta < 1/2` where the mean-value
    /// theorems are proven.
    pub proven: bool,
}

impl MainTermSpec {
    pub fn new(
        kind: MainTermKind,
        theta: f64,
        a3: EulerProductValue,
        weight: WeightPolynomial,
    ) -> Result<Self> {
        if !(theta > 0.0 && theta <= 1.0) {
            return Err(LabError::invalid(format!(
                "theta must lie in (0, 1], got {theta}"
            )));
        }
        Ok(MainTermSpec {
            kind,
            theta,
            a3,
            weight,
            proven: theta < 0.5,
        })
    }
}

/// A main term with both normalisations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MainTerm {
    pub value: f64,
    pub log_t: f64,
    pub log_n: f64,
    /// `value / (T log^9 T)`.
    pub per_log_t: f64,
    /// `value / (T log^9 N)`.
    pub per_log_n: f64,
}

fn check_height(t: f64) -> Result<f64> {
    if t > E && t.is_finite() {
        Ok(t.ln())
    } else {
        Err(LabError::HeightTooSmall(t))
    }
}

fn expect_kind(spec: &MainTermSpec, kind: MainTermKind) -> Result<()> {
    if spec.kind == kind {
        Ok(())
    } else {
        Err(LabError::invalid(format!(
            "main term of kind {:?} requested from a {:?} spec",
            kind, spec.kind
        )))
    }
}

/// `int_0^1 P(a) a^5 2F1(-2, -3; 6; -a theta) da`.
pub fn k_alpha_integral(weight: &WeightPolynomial, theta: f64) -> f64 {
    let hyp = WeightPolynomial::new(hyp2f1_coefficients().to_vec()).dilate(-theta);
    (&(&WeightPolynomial::monomial(5) * weight) * &hyp).integral_unit()
}

/// `int_0^1 a^3 (h'(a)^2 / theta + 4 h(a) h'(a)) da`.
pub fn j_alpha_integral(weight: &WeightPolynomial, theta: f64) -> f64 {
    let h = h_transform(weight);
    let dh = h.derivative();
    let inner = &(&dh * &dh).scale(1.0 / theta) + &(&h * &dh).scale(4.0);
    (&WeightPolynomial::monomial(3) * &inner).integral_unit()
}

/// `T (log N)^9 a_3 / (720 theta^3) int_0^1 P(a) a^5 2F1(-2, -3; 6; -a theta) da`
/// with `log N = theta log T`.
pub fn k_main_term(spec: &MainTermSpec, t: f64) -> Result<f64> {
    expect_kind(spec, MainTermKind::KTheorem)?;
    let log_t = check_height(t)?;
    let th = spec.theta;
    Ok(
        t * (th * log_t).powi(9) * spec.a3.value / (720.0 * th.powi(3))
            * k_alpha_integral(&spec.weight, th),
    )
}

/// `T (log N)^9 a_3 / 24 int_0^1 a^3 (h'^2 / theta + 4 h h') da`.
pub fn j_main_term(spec: &MainTermSpec, t: f64) -> Result<f64> {
    expect_kind(spec, MainTermKind::JTheorem)?;
    let log_t = check_height(t)?;
    let th = spec.theta;
    Ok(t * (th * log_t).powi(9) * spec.a3.value / 24.0 * j_alpha_integral(&spec.weight, th))
}

/// Any main term, reported against both `log T` and `log N`.
pub fn main_term(spec: &MainTermSpec, t: f64) -> Result<MainTerm> {
    let log_t = check_height(t)?;
    let value = match spec.kind {
        MainTermKind::KTheorem => k_main_term(spec, t)?,
        MainTermKind::JTheorem => j_main_term(spec, t)?,
        kind => {
            let c = kind
                .conjecture_numerator()
                .expect("conjecture kinds carry a numerator");
            c as f64 / FACTORIAL_9 as f64 * spec.a3.value * t * log_t.powi(9)
        }
    };
    let log_n = spec.theta * log_t;
    Ok(MainTerm {
        value,
        log_t,
        log_n,
        per_log_t: value / (t * log_t.powi(9)),
        per_log_n: value / (t * log_n.powi(9)),
    })
}

/// The constants `42 a_3 / 9!`, `28 a_3 / 9!` and `14 a_3 / 9!`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureConstants {
    pub a3: f64,
    pub c_sixth: f64,
    pub c_diagonal: f64,
    pub c_cross: f64,
    /// `42 / 9!` in lowest terms.
    pub sixth_fraction: String,
    pub diagonal_fraction: String,
    pub cross_fraction: String,
}

pub fn conjecture_constants(a3: f64) -> ConjectureConstants {
    let sixth = Ratio::new(42i64, FACTORIAL_9);
    let diagonal = Ratio::new(28i64, FACTORIAL_9);
    let cross = Ratio::new(14i64, FACTORIAL_9);
    assert_eq!(diagonal + cross, sixth);
    let f = |r: Ratio<i64>| *r.numer() as f64 / *r.denom() as f64;
    ConjectureConstants {
        a3,
        c_sixth: f(sixth) * a3,
        c_diagonal: f(diagonal) * a3,
        c_cross: f(cross) * a3,
        sixth_fraction: sixth.to_string(),
        diagonal_fraction: diagonal.to_string(),
        cross_fraction: cross.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arithmetic::a3_reference;

    fn spec(kind: MainTermKind, theta: f64, weight: WeightPolynomial) -> MainTermSpec {
        MainTermSpec::new(kind, theta, a3_reference(), weight).unwrap()
    }

    #[test]
    fn hypergeometric_coefficients() {
        let c = hyp2f1_coefficients();
        assert_eq!(c[0], 1.0);
        assert!((c[1] - 1.0).abs() < 1e-16);
        assert!((c[2] - 1.0 / 7.0).abs() < 1e-16);
        assert_eq!(hyp2f1_case(0.0), 1.0);
        assert!((hyp2f1_case(-0.5) - (1.0 - 0.5 + 0.25 / 7.0)).abs() < 1e-15);
    }

    #[test]
    fn h_of_constant() {
        let h = h_transform(&WeightPolynomial::one());
        for &a in &[0.0, 0.3, 0.77, 1.0] {
            assert!((h.eval(a) - (1.0 - a).powi(3) / 3.0).abs() < 1e-15);
            assert!((h.derivative().eval(a) + (1.0 - a).powi(2)).abs() < 1e-15);
        }
        assert_eq!(h.degree(), 3);
    }

    #[test]
    fn h_vanishes_to_second_order_at_one() {
        let p = WeightPolynomial::new(vec![0.4, -2.0, 1.5, 3.0]);
        let h = h_transform(&p);
        assert_eq!(h.degree(), p.degree() + 3);
        assert!(h.eval(1.0).abs() < 1e-14);
        assert!(h.derivative().eval(1.0).abs() < 1e-14);
    }

    #[test]
    fn k_closed_form_for_unit_weight() {
        let th = 0.3;
        let s = spec(MainTermKind::KTheorem, th, WeightPolynomial::one());
        let t = 1e4;
        let expected = th.powi(6) * s.a3.value / 720.0
            * (1.0 / 6.0 - th / 7.0 + th * th / 56.0)
            * t
            * t.ln().powi(9);
        assert!((k_main_term(&s, t).unwrap() / expected - 1.0).abs() < 1e-13);
    }

    #[test]
    fn j_beta_integrals() {
        for &th in &[0.1, 0.25, 0.5, 1.0] {
            let v = j_alpha_integral(&WeightPolynomial::one(), th);
            let expected = 1.0 / (280.0 * th) - 4.0 / 3.0 / 504.0;
            assert!((v / expected - 1.0).abs() < 1e-13);
        }
    }

    #[test]
    fn zero_weight_and_validation() {
        let s = spec(MainTermKind::KTheorem, 0.25, WeightPolynomial::zero());
        assert_eq!(k_main_term(&s, 100.0).unwrap(), 0.0);
        assert!(matches!(
            k_main_term(&s, 2.0),
            Err(LabError::HeightTooSmall(_))
        ));
        assert!(j_main_term(&s, 100.0).is_err());
        let j = spec(MainTermKind::JTheorem, 0.25, WeightPolynomial::zero());
        assert_eq!(j_main_term(&j, 100.0).unwrap(), 0.0);
        assert!(MainTermSpec::new(
            MainTermKind::JTheorem,
            0.0,
            a3_reference(),
            WeightPolynomial::one()
        )
        .is_err());
        assert!(MainTermSpec::new(
            MainTermKind::JTheorem,
            1.2,
            a3_reference(),
            WeightPolynomial::one()
        )
        .is_err());
        assert!(j.proven);
        assert!(!spec(MainTermKind::JTheorem, 0.5, WeightPolynomial::one()).proven);
    }

    #[test]
    fn constants() {
        let c = conjecture_constants(1.0);
        assert_eq!(c.sixth_fraction, "1/8640");
        assert_eq!(c.diagonal_fraction, "1/12960");
        assert_eq!(c.cross_fraction, "1/25920");
        assert!((c.c_sixth - 1.157_407_407_407e-4).abs() < 1e-15);
    }

    #[test]
    fn main_term_forms() {
        let s = spec(MainTermKind::SixthMoment, 0.5, WeightPolynomial::one());
        let m = main_term(&s, 1e5).unwrap();
        assert!((m.per_log_t - s.a3.value / 8640.0).abs() < 1e-18);
        assert!((m.per_log_n / m.per_log_t - 2f64.powi(9)).abs() < 1e-9);
    }
}
