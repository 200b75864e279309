mod common;

use std::f64::consts::PI;

use common::rel;
use zetalab_core::moments::{fit_slope, panel_layout, PanelIntegrand};
use zetalab_core::{
    integrate_i1, integrate_i2, integrate_jara, integrate_jn, integrate_kn, integrate_moment,
    integrate_range, riemann_sum, sample_at, trend_report, Complex64, DivisorTable, Integrand,
    LabError, MomentEstimate, MomentKind, QuadratureConfig, WeightPolynomial,
};

fn cfg() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn truncated(kind: MomentKind, table: &DivisorTable, height: f64) -> Integrand {
    Integrand::truncated(kind, table, height).unwrap()
}

fn all_integrands(table: &DivisorTable, height: f64) -> Vec<Integrand> {
    let mut out: Vec<Integrand> = (1..=3).map(|k| Integrand::moment(k).unwrap()).collect();
    for kind in [
        MomentKind::I1,
        MomentKind::I2,
        MomentKind::Cross,
        MomentKind::Chi3,
        MomentKind::Diagonal,
    ] {
        out.push(truncated(kind, table, height));
    }
    let p = WeightPolynomial::new(vec![1.0, -0.5, 0.25]);
    out.push(Integrand::weighted(MomentKind::KN, table, 7.0, &p).unwrap());
    out.push(Integrand::weighted(MomentKind::JN, table, 7.0, &p).unwrap());
    out.push(Integrand::jara(9.0).unwrap());
    out
}

#[test]
fn tiny_interval_is_a_midpoint() {
    for k in 1..=3 {
        let f = Integrand::moment(k).unwrap();
        let h = 1e-4;
        let q = integrate_range(&f, 1.0, 1.0 + h, &cfg()).unwrap();
        let mid = sample_at(1.0 + 0.5 * h).zeta_abs().powi(2 * k as i32) * h;
        assert!(rel(q.value.re, mid) < 1e-7, "k = {k}");
    }
}

#[test]
fn single_term_region_matches_riemann_sum() {
    let table = DivisorTable::new(10).unwrap();
    for kind in [
        MomentKind::I1,
        MomentKind::I2,
        MomentKind::Cross,
        MomentKind::Chi3,
    ] {
        let f = truncated(kind, &table, 7.0);
        let q = integrate_range(&f, 1.0, 7.0, &cfg()).unwrap();
        let oracle = riemann_sum(&f, 1.0, 7.0, 1e-4).unwrap();
        assert!((q.value - oracle).norm() <= 1e-4 * oracle.norm(), "{kind}");
    }
}

#[test]
fn additivity() {
    let table = DivisorTable::new(100).unwrap();
    let (a, m, b) = (1.0, 150.0, 400.0);
    for f in all_integrands(&table, b) {
        let whole = integrate_range(&f, a, b, &cfg()).unwrap();
        let left = integrate_range(&f, a, m, &cfg()).unwrap();
        let right = integrate_range(&f, m, b, &cfg()).unwrap();
        let gap = (whole.value - left.value - right.value).norm();
        let allowed = 1e-8 * whole.abs_value + whole.error + left.error + right.error;
        assert!(gap <= allowed, "{}: {gap:e}", f.kind());
    }
}

#[test]
fn refinement_convergence() {
    let table = DivisorTable::new(200).unwrap();
    let fine = QuadratureConfig {
        width_constant: PI,
        ..cfg()
    };
    for f in all_integrands(&table, 1000.0) {
        let coarse_q = integrate_range(&f, 1.0, 1000.0, &cfg()).unwrap();
        let fine_q = integrate_range(&f, 1.0, 1000.0, &fine).unwrap();
        let change = (coarse_q.value - fine_q.value).norm();
        // the error estimate cannot see rounding, which sets a floor near 1e-13
        let allowed = 3.0 * coarse_q.error + 1e-12 * coarse_q.abs_value;
        assert!(
            change <= allowed,
            "{}: {change:e} vs {:e}",
            f.kind(),
            coarse_q.error
        );
    }
}

#[test]
fn nonnegative_kinds() {
    let table = DivisorTable::new(200).unwrap();
    let t = 500.0;
    let w = WeightPolynomial::new(vec![0.0, 1.0]);
    let estimates = [
        integrate_moment(1, t, &cfg()).unwrap(),
        integrate_moment(2, t, &cfg()).unwrap(),
        integrate_moment(3, t, &cfg()).unwrap(),
        integrate_jn(t, 0.5, &w, &table, &cfg()).unwrap(),
        integrate_jara(t, 0.5, &cfg()).unwrap(),
    ];
    for e in &estimates {
        assert!(e.value_re >= -e.quad_error, "{}", e.kind);
        assert_eq!(e.value_im, 0.0);
    }
}

#[test]
fn panels_respect_cutoff_jumps() {
    let table = DivisorTable::new(200).unwrap();
    for kind in [
        MomentKind::I1,
        MomentKind::Cross,
        MomentKind::Chi3,
        MomentKind::Diagonal,
    ] {
        let f = truncated(kind, &table, 1000.0);
        let edges = panel_layout(&f, 1.0, 1000.0, &cfg());
        for m in 1..=cutoff(1000.0) {
            let jump = 2.0 * PI * m as f64;
            assert!(edges.contains(&jump), "{kind}: 2 pi {m} missing");
        }
        for w in edges.windows(2) {
            assert!(w[0] < w[1]);
            assert!(f.discontinuities(w[0], w[1]).is_empty());
        }
    }
}

fn cutoff(t: f64) -> usize {
    (t / (2.0 * PI)).floor() as usize
}

#[test]
fn conjugate_pair() {
    let table = DivisorTable::new(100).unwrap();
    let i1 = integrate_i1(300.0, &table, &cfg()).unwrap();
    let i2 = integrate_i2(300.0, &table, &cfg()).unwrap();
    assert!((i2.value() - i1.value().conj()).norm() < 1e-6 * i1.value().norm());
    assert!(rel(i2.value().norm(), i1.value().norm()) < 1e-6);
    let doubled = i1.value() + i1.value().conj();
    assert_eq!(doubled.im, 0.0);
}

#[test]
fn zero_weight_gives_zero() {
    let table = DivisorTable::new(100).unwrap();
    let zero = WeightPolynomial::zero();
    assert_eq!(
        integrate_kn(500.0, 0.25, &zero, &table, &cfg())
            .unwrap()
            .value(),
        Complex64::new(0.0, 0.0)
    );
    assert_eq!(
        integrate_jn(500.0, 0.25, &zero, &table, &cfg())
            .unwrap()
            .value_re,
        0.0
    );
}

#[test]
fn jara_at_one_term_is_the_fourth_moment() {
    let m2 = integrate_moment(2, 400.0, &cfg()).unwrap();
    let jara = integrate_jara(400.0, 0.0, &cfg()).unwrap();
    assert!(rel(jara.value_re, m2.value_re) < 1e-6);
}

#[test]
fn weighted_kinds_match_riemann_sums() {
    let table = DivisorTable::new(100).unwrap();
    let t: f64 = 1e4;
    let n_len = t.powf(0.25);
    for kind in [MomentKind::KN, MomentKind::JN] {
        let f = Integrand::weighted(kind, &table, n_len, &WeightPolynomial::one()).unwrap();
        let q = integrate_range(&f, 1.0, t, &cfg()).unwrap();
        let oracle = riemann_sum(&f, 1.0, t, 1e-3).unwrap();
        assert!((q.value - oracle).norm() <= 1e-4 * oracle.norm(), "{kind}");
    }
    let kn = integrate_kn(t, 0.25, &WeightPolynomial::one(), &table, &cfg()).unwrap();
    assert!(kn.value_re > 0.0);
    assert_eq!(kn.proven, Some(true));
    assert!(kn.ratio.is_some());
}

#[test]
fn first_moment_matches_riemann_sum() {
    let e = integrate_moment(1, 1e4, &cfg()).unwrap();
    let oracle = riemann_sum(&Integrand::moment(1).unwrap(), 1.0, 1e4, 1e-3).unwrap();
    assert!(rel(e.value_re, oracle.re) < 1e-4);
    assert!(rel(e.main_term.unwrap(), 1e4 * 1e4f64.ln()) < 1e-15);
    assert!(rel(e.ratio.unwrap(), e.value_re / e.main_term.unwrap()) < 1e-15);
}

#[test]
fn argument_checks() {
    let table = DivisorTable::new(100).unwrap();
    assert!(integrate_moment(4, 1e3, &cfg()).is_err());
    assert!(matches!(
        integrate_moment(1, 5.0, &cfg()),
        Err(LabError::BelowThreshold { .. })
    ));
    assert!(matches!(
        integrate_i1(1e4, &table, &cfg()),
        Err(LabError::SieveTooSmall { .. })
    ));
    assert!(integrate_kn(1e4, 1.5, &WeightPolynomial::one(), &table, &cfg()).is_err());
    let bad = QuadratureConfig {
        refinement_tolerance: -1.0,
        ..cfg()
    };
    assert!(integrate_moment(1, 1e3, &bad).is_err());
}

fn stub(t: f64, value: f64) -> MomentEstimate {
    MomentEstimate {
        kind: MomentKind::M1,
        t,
        theta: None,
        value_re: value,
        value_im: 0.0,
        main_term: Some(t * t.ln()),
        ratio: Some(value / (t * t.ln())),
        quad_error: 0.0,
        proven: None,
        diagnostic: None,
        panels: 1,
        evaluations: 1,
    }
}

#[test]
fn trend_of_a_constant_integrand() {
    let rows: Vec<_> = [1e3, 1e4, 1e5].iter().map(|&t| stub(t, 3.5 * t)).collect();
    let report = trend_report(&rows).unwrap();
    assert!((report.slope.unwrap() - 1.0).abs() < 1e-12);
    assert!((fit_slope(&[1.0, 2.0], &[3.0, 7.0]) - 4.0).abs() < 1e-15);
    assert!(trend_report(&[stub(1e4, 1.0), stub(1e3, 1.0)]).is_err());
    assert!(trend_report(&[stub(1e4, 1.0)]).is_err());
}
