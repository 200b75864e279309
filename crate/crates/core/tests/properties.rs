use std::f64::consts::PI;

use proptest::prelude::*;
use zetalab_core::{
    chi_line, d_truncated, d_truncated_reflected, hyp2f1_case, theta, theta_oracle, DivisorTable,
    WeightPolynomial,
};

fn coefficients() -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-3.0..3.0f64, 0..7)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn antiderivative_round_trip(c in coefficients(), x in 0.0..1.0f64) {
        let p = WeightPolynomial::new(c);
        let back = p.antiderivative().derivative();
        prop_assert!((back.eval(x) - p.eval(x)).abs() < 1e-12);
    }

    #[test]
    fn endpoint_values(c in coefficients()) {
        let p = WeightPolynomial::new(c.clone());
        prop_assert_eq!(p.eval(0.0), c.first().copied().unwrap_or(0.0));
        let sum: f64 = c.iter().sum();
        prop_assert!((p.eval(1.0) - sum).abs() < 1e-12);
    }

    #[test]
    fn integral_matches_antiderivative(c in coefficients(), a in 0.0..1.0f64, b in 0.0..1.0f64) {
        let p = WeightPolynomial::new(c);
        let exact: f64 = p.coefficients.iter().enumerate()
            .map(|(j, cj)| cj * (b.powi(j as i32 + 1) - a.powi(j as i32 + 1)) / (j as f64 + 1.0))
            .sum();
        prop_assert!((p.integrate(a, b) - exact).abs() < 1e-12);
    }

    #[test]
    fn product_evaluates_pointwise(c in coefficients(), d in coefficients(), x in 0.0..1.0f64) {
        let (p, q) = (WeightPolynomial::new(c), WeightPolynomial::new(d));
        prop_assert!(((&p * &q).eval(x) - p.eval(x) * q.eval(x)).abs() < 1e-11);
        prop_assert!(((&p + &q).eval(x) - p.eval(x) - q.eval(x)).abs() < 1e-12);
    }

    #[test]
    fn hypergeometric_identity(z in -1.0..0.0f64) {
        prop_assert!((hyp2f1_case(z) - (1.0 + z + z * z / 7.0)).abs() < 1e-14);
    }

    #[test]
    fn theta_is_odd_and_matches_log_gamma(t in 10.0..1e5f64) {
        prop_assert_eq!(theta(-t).unwrap(), -theta(t).unwrap());
        prop_assert!((theta(t).unwrap() - theta_oracle(t)).abs() < 1e-8);
    }

    #[test]
    fn chi_is_unimodular(t in 10.0..1e6f64) {
        let c = chi_line(t).unwrap().value;
        prop_assert!((c.norm() - 1.0).abs() < 1e-12);
        prop_assert!((c * chi_line(-t).unwrap().value - 1.0).norm() < 1e-12);
    }

    #[test]
    fn truncated_sum_reflects(t in -3000.0..3000.0f64) {
        let table = DivisorTable::new(500).unwrap();
        let d = d_truncated(t, &table).unwrap();
        prop_assert_eq!(d.conj(), d_truncated_reflected(t, &table).unwrap());
        prop_assert_eq!(d, d_truncated(-t, &table).unwrap().conj());
        if t.abs() < 2.0 * PI {
            prop_assert_eq!(d.norm(), 0.0);
        }
    }
}
