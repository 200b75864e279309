use std::f64::consts::PI;
use std::fmt;

use num::complex::Complex64;
use serde::{Deserialize, Serialize};

use super::quadrature::PanelIntegrand;
use crate::arithmetic::DivisorTable;
use crate::dirichlet::{cutoff_length, DirichletPolynomial, WeightPolynomial};
use crate::zeta::{sample_at, CriticalSample};
use crate::{LabError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MomentKind {
    M1,
    M2,
    M3,
    I1,
    I2,
    KN,
    JN,
    #[serde(rename = "cross")]
    Cross,
    #[serde(rename = "chi3")]
    Chi3,
    #[serde(rename = "diagonal")]
    Diagonal,
    #[serde(rename = "jara")]
    Jara,
}

impl MomentKind {
    pub const ALL: [MomentKind; 11] = [
        MomentKind::M1,
        MomentKind::M2,
        MomentKind::M3,
        MomentKind::I1,
        MomentKind::I2,
        MomentKind::KN,
        MomentKind::JN,
        MomentKind::Cross,
        MomentKind::Chi3,
        MomentKind::Diagonal,
        MomentKind::Jara,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MomentKind::M1 => "M1",
            MomentKind::M2 => "M2",
            MomentKind::M3 => "M3",
            MomentKind::I1 => "I1",
            MomentKind::I2 => "I2",
            MomentKind::KN => "KN",
            MomentKind::JN => "JN",
            MomentKind::Cross => "cross",
            MomentKind::Chi3 => "chi3",
            MomentKind::Diagonal => "diagonal",
            MomentKind::Jara => "jara",
        }
    }

    /// Kinds whose integrand is a sum of squares.
    pub fn is_nonnegative(self) -> bool {
        matches!(
            self,
            MomentKind::M1
                | MomentKind::M2
                | MomentKind::M3
                | MomentKind::JN
                | MomentKind::Diagonal
                | MomentKind::Jara
        )
    }

    /// Kinds that involve the truncated divisor sum and jump at `2 pi m`.
    pub fn uses_truncated_sum(self) -> bool {
        matches!(
            self,
            MomentKind::I1
                | MomentKind::I2
                | MomentKind::Cross
                | MomentKind::Chi3
                | MomentKind::Diagonal
        )
    }
}

impl fmt::Display for MomentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
enum Series {
    None,
    /// Terms `n <= |t| / 2 pi` of the polynomial at height `t`.
    Truncated(DirichletPolynomial),
    Fixed(DirichletPolynomial),
}

/// The integrand of one [`MomentKind`] on the critical line, `t >= 1`.
#[derive(Debug, Clone)]
pub struct Integrand {
    kind: MomentKind,
    series: Series,
    max_height: f64,
}

impl Integrand {
    /// `|zeta|^(2k)`, `k` in `{1, 2, 3}`.
    pub fn moment(k: u32) -> Result<Self> {
        let kind = match k {
            1 => MomentKind::M1,
            2 => MomentKind::M2,
            3 => MomentKind::M3,
            _ => {
                return Err(LabError::invalid(format!(
                    "moment order k must be 1, 2 or 3, got {k}"
                )))
            }
        };
        Ok(Integrand {
            kind,
            series: Series::None,
            max_height: f64::INFINITY,
        })
    }

    /// A kind built on the truncated divisor sum, valid up to `max_height`.
    pub fn truncated(kind: MomentKind, table: &DivisorTable, max_height: f64) -> Result<Self> {
        if !kind.uses_truncated_sum() {
            return Err(LabError::invalid(format!(
                "{kind} does not use the truncated divisor sum"
            )));
        }
        let poly = DirichletPolynomial::divisor(table, cutoff_length(max_height))?;
        Ok(Integrand {
            kind,
            series: Series::Truncated(poly),
            max_height,
        })
    }

    /// `K_N` or `J_N` with `N = n_len` and weight `P`.
    pub fn weighted(
        kind: MomentKind,
        table: &DivisorTable,
        n_len: f64,
        weight: &WeightPolynomial,
    ) -> Result<Self> {
        if !matches!(kind, MomentKind::KN | MomentKind::JN) {
            return Err(LabError::invalid(format!(
                "{kind} does not take a weighted polynomial"
            )));
        }
        if !(n_len >= 1.0) {
            return Err(LabError::invalid(format!(
                "N must be at least 1, got {n_len}"
            )));
        }
        Ok(Integrand {
            kind,
            series: Series::Fixed(DirichletPolynomial::weighted_divisor(table, n_len, weight)?),
            max_height: f64::INFINITY,
        })
    }

    /// `|zeta|^4 |sum_{n <= N} n^(it)|^2`.
    pub fn jara(n_len: f64) -> Result<Self> {
        if !(n_len >= 1.0 && n_len.is_finite()) {
            return Err(LabError::invalid(format!(
                "N must be at least 1, got {n_len}"
            )));
        }
        let len = n_len.floor() as usize;
        Ok(Integrand {
            kind: MomentKind::Jara,
            series: Series::Fixed(DirichletPolynomial::new(vec![1.0; len])),
            max_height: f64::INFINITY,
        })
    }

    pub fn kind(&self) -> MomentKind {
        self.kind
    }

    /// Largest `t` the integrand is prepared for.
    pub fn max_height(&self) -> f64 {
        self.max_height
    }

    fn combine(&self, s: &CriticalSample, d: Complex64) -> Complex64 {
        let z2 = s.z_value * s.z_value;
        let real = |x: f64| Complex64::new(x, 0.0);
        match self.kind {
            MomentKind::M1 => real(z2),
            MomentKind::M2 => real(z2 * z2),
            MomentKind::M3 => real(z2 * z2 * z2),
            MomentKind::I1 => {
                let zeta2 = s.zeta_value * s.zeta_value;
                s.chi().conj() * zeta2 * zeta2 * d.conj()
            }
            MomentKind::I2 => {
                let zeta2 = s.zeta_value * s.zeta_value;
                s.chi().conj().powi(3) * zeta2 * zeta2 * d
            }
            MomentKind::KN => s.zeta_value * s.zeta_value * z2 * d.conj(),
            MomentKind::JN => real(z2 * d.norm_sqr()),
            MomentKind::Cross => real(2.0 * (s.chi().conj() * d.conj() * d * d).re),
            MomentKind::Chi3 => real(2.0 * (s.chi().conj() * d).powi(3).re),
            MomentKind::Diagonal => real(2.0 * z2 * d.norm_sqr()),
            MomentKind::Jara => real(z2 * z2 * d.norm_sqr()),
        }
    }
}

impl PanelIntegrand for Integrand {
    fn discontinuities(&self, a: f64, b: f64) -> Vec<f64> {
        match self.series {
            Series::Truncated(_) => {
                let step = 2.0 * PI;
                let first = (a / step).floor() as i64 + 1;
                (first.max(1)..)
                    .map(|m| m as f64 * step)
                    .take_while(|&x| x < b)
                    .filter(|&x| x > a)
                    .collect()
            }
            _ => Vec::new(),
        }
    }

    fn panel(&self, a: f64, b: f64) -> Box<dyn Fn(f64) -> Complex64 + '_> {
        let c = 0.5 * (a + b);
        let r = 0.5 * (b - a);
        let expansion = match &self.series {
            Series::None => None,
            Series::Truncated(p) => Some(p.expand(cutoff_length(c), c, r)),
            Series::Fixed(p) => Some(p.expand(p.len(), c, r)),
        };
        Box::new(move |t| {
            let s = sample_at(t);
            let d = expansion
                .as_ref()
                .map_or(Complex64::new(0.0, 0.0), |e| e.eval(t));
            self.combine(&s, d)
        })
    }

    fn point(&self, t: f64) -> Complex64 {
        let d = match &self.series {
            Series::None => Complex64::new(0.0, 0.0),
            Series::Truncated(p) => p.eval_prefix(t, cutoff_length(t)),
            Series::Fixed(p) => p.eval(t),
        };
        self.combine(&sample_at(t), d)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jumps_at_multiples_of_two_pi() {
        let tab = DivisorTable::new(100).unwrap();
        let f = Integrand::truncated(MomentKind::Cross, &tab, 300.0).unwrap();
        let j = f.discontinuities(1.0, 20.0);
        assert_eq!(j.len(), 3);
        assert!((j[0] - 2.0 * PI).abs() < 1e-15);
        assert!(f.discontinuities(2.0 * PI, 4.0 * PI).is_empty());
        assert!(Integrand::moment(2)
            .unwrap()
            .discontinuities(1.0, 100.0)
            .is_empty());
    }

    #[test]
    fn constructors_validate() {
        let tab = DivisorTable::new(100).unwrap();
        assert!(Integrand::moment(4).is_err());
        assert!(Integrand::truncated(MomentKind::M1, &tab, 100.0).is_err());
        assert!(Integrand::truncated(MomentKind::I1, &tab, 1e4).is_err());
        assert!(
            Integrand::weighted(MomentKind::Cross, &tab, 10.0, &WeightPolynomial::one()).is_err()
        );
        assert!(Integrand::jara(0.5).is_err());
    }

    #[test]
    fn conjugate_pair_pointwise() {
        let tab = DivisorTable::new(1000).unwrap();
        let i1 = Integrand::truncated(MomentKind::I1, &tab, 5000.0).unwrap();
        let i2 = Integrand::truncated(MomentKind::I2, &tab, 5000.0).unwrap();
        for &t in &[3.0, 8.0, 57.0, 999.0, 4321.0] {
            let a = i1.point(t);
            let b = i2.point(t);
            assert!(
                (a.conj() - b).norm() <= 1e-12 * a.norm().max(1.0),
                "t = {t}"
            );
        }
    }

    #[test]
    fn panel_matches_point() {
        let tab = DivisorTable::new(1000).unwrap();
        let f = Integrand::truncated(MomentKind::Chi3, &tab, 5000.0).unwrap();
        let (a, b) = (4000.1, 4000.6);
        let panel = f.panel(a, b);
        for i in 0..=10 {
            let t = a + (b - a) * i as f64 / 10.0;
            let p = panel(t);
            let q = f.point(t);
            assert!((p - q).norm() <= 1e-9 * q.norm().max(1.0), "t = {t}");
        }
    }
}
