use std::f64::consts::PI;

use anyhow::{ensure, Context, Result};
use serde::Serialize;
use serde_json::json;
use zetalab_core::arithmetic::{a3_accelerated, a3_direct, correlation_sum, DivisorTable};
use zetalab_core::cache::SampleCache;
use zetalab_core::dirichlet::{
    afe_residual, conjecture_constants, main_term, MainTermKind, MainTermSpec, WeightPolynomial,
    FACTORIAL_9,
};
use zetalab_core::moments::{
    cached_moment_sum, cached_range, integrate_chi3, integrate_cross, integrate_diagonal,
    integrate_i1, integrate_i2, integrate_jara, integrate_jn, integrate_kn, integrate_moment,
    trend_report, validate_heights, MomentEstimate, MomentKind, QuadratureConfig,
};
use zetalab_core::zeta::{uniform_grid_shape, T_MIN};

use crate::args::{Cli, Command, Weighted};
use crate::report::Report;

pub const DIRECT_PRIME_LIMIT: u64 = 10_000_000;
pub const SERIES_DEPTH: u32 = 24;
pub const SERIES_PRIME_LIMIT: u64 = 1000;

fn check_height(t: f64, min: f64) -> Result<()> {
    ensure!(
        t.is_finite() && t > min,
        "T must be a finite number above {min}, got {t}"
    );
    Ok(())
}

fn check_theta(theta: f64, allow_zero: bool) -> Result<()> {
    let ok = if allow_zero {
        theta >= 0.0
    } else {
        theta > 0.0
    } && theta <= 1.0;
    ensure!(
        ok,
        "theta must lie in {}, 1], got {theta}",
        if allow_zero { "[0" } else { "(0" }
    );
    Ok(())
}

fn check_poly(poly: &[f64]) -> Result<WeightPolynomial> {
    ensure!(
        !poly.is_empty(),
        "the weight polynomial needs at least one coefficient"
    );
    ensure!(
        poly.iter().all(|c| c.is_finite()),
        "weight coefficients must be finite"
    );
    Ok(WeightPolynomial::new(poly.to_vec()))
}

fn divisor_range(kind: MomentKind, t: f64, theta: f64) -> u64 {
    match kind {
        MomentKind::KN | MomentKind::JN => t.powf(theta).floor() as u64,
        k if k.uses_truncated_sum() => (t / (2.0 * PI)).floor() as u64,
        _ => 0,
    }
}

/// Validated command ready to run. Every check happens here, before any
/// expensive work.
struct Plan {
    sieve_needed: u64,
}

fn plan(cli: &Cli) -> Result<Plan> {
    ensure!(cli.sieve_limit >= 1, "sieve-limit must be at least 1");
    if let Some(w) = cli.workers {
        ensure!(w >= 1, "workers must be at least 1");
    }
    let needed = match &cli.command {
        Command::Constants => 0,
        Command::Moment { k, height } => {
            ensure!((1..=3).contains(k), "k must be 1, 2 or 3, got {k}");
            check_height(height.t, T_MIN)?;
            0
        }
        Command::IdentityCheck { height } => {
            check_height(height.t, T_MIN)?;
            divisor_range(MomentKind::I1, height.t, 0.0)
        }
        Command::Ktheorem(w) | Command::Jtheorem(w) => {
            check_height(w.height.t, 1.0)?;
            check_theta(w.theta, false)?;
            check_poly(&w.poly)?;
            divisor_range(MomentKind::KN, w.height.t, w.theta)
        }
        Command::Cross { height } | Command::Chi3 { height } => {
            check_height(height.t, 1.0)?;
            divisor_range(MomentKind::Cross, height.t, 0.0)
        }
        Command::Jara { height, theta } => {
            check_height(height.t, 1.0)?;
            check_theta(*theta, true)?;
            0
        }
        Command::AfeSurvey { t0, t1, samples } => {
            ensure!(
                *t0 > 0.0 && t1 > t0 && t1.is_finite(),
                "afe-survey needs 0 < t0 < t1"
            );
            ensure!(*samples >= 2, "afe-survey needs at least 2 samples");
            divisor_range(MomentKind::Cross, *t1, 0.0)
        }
        Command::Correlate { x, h_max } => {
            ensure!(
                *x >= 1 && *h_max >= 1,
                "correlate needs x >= 1 and h-max >= 1"
            );
            x.checked_add(*h_max).context("x + h-max overflows")?
        }
        Command::ZetaGrid { t0, t1, dt, .. } => {
            uniform_grid_shape(*t0, *t1, *dt)?;
            0
        }
        Command::Trend {
            kind,
            heights,
            theta,
            poly,
        } => {
            validate_heights(heights)?;
            let kind = MomentKind::from(*kind);
            let min = if matches!(kind, MomentKind::M1 | MomentKind::M2 | MomentKind::M3) {
                T_MIN
            } else {
                1.0
            };
            for &t in heights {
                check_height(t, min)?;
            }
            match kind {
                MomentKind::KN | MomentKind::JN => check_theta(*theta, false)?,
                MomentKind::Jara => check_theta(*theta, true)?,
                _ => {}
            }
            check_poly(poly)?;
            divisor_range(kind, *heights.last().expect("validated"), *theta)
        }
    };
    ensure!(
        needed <= cli.sieve_limit as u64,
        "this run needs divisor values up to {needed} but sieve-limit is {}",
        cli.sieve_limit
    );
    Ok(Plan {
        sieve_needed: needed,
    })
}

fn estimate(
    kind: MomentKind,
    t: f64,
    theta: f64,
    weight: &WeightPolynomial,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<MomentEstimate> {
    Ok(match kind {
        MomentKind::M1 => integrate_moment(1, t, cfg)?,
        MomentKind::M2 => integrate_moment(2, t, cfg)?,
        MomentKind::M3 => integrate_moment(3, t, cfg)?,
        MomentKind::I1 => integrate_i1(t, table, cfg)?,
        MomentKind::I2 => integrate_i2(t, table, cfg)?,
        MomentKind::KN => integrate_kn(t, theta, weight, table, cfg)?,
        MomentKind::JN => integrate_jn(t, theta, weight, table, cfg)?,
        MomentKind::Cross => integrate_cross(t, table, cfg)?,
        MomentKind::Chi3 => integrate_chi3(t, table, cfg)?,
        MomentKind::Diagonal => integrate_diagonal(t, table, cfg)?,
        MomentKind::Jara => integrate_jara(t, theta, cfg)?,
    })
}

#[derive(Serialize)]
struct Bridge {
    k_theta_one: f64,
    j_theta_one: f64,
    sixth: f64,
    diagonal: f64,
    k_relative_error: f64,
    j_relative_error: f64,
}

fn bridge(a3: zetalab_core::arithmetic::EulerProductValue) -> Result<Bridge> {
    let t = 1e6;
    let scale = a3.value * t * t.ln().powi(9);
    let k = MainTermSpec::new(MainTermKind::KTheorem, 1.0, a3, WeightPolynomial::one())?;
    let j = MainTermSpec::new(MainTermKind::JTheorem, 1.0, a3, WeightPolynomial::one())?;
    let k_theta_one = 2.0 * main_term(&k, t)?.value / scale;
    let j_theta_one = 2.0 * main_term(&j, t)?.value / scale;
    let sixth = 42.0 / FACTORIAL_9 as f64;
    let diagonal = 28.0 / FACTORIAL_9 as f64;
    Ok(Bridge {
        k_theta_one,
        j_theta_one,
        sixth,
        diagonal,
        k_relative_error: (k_theta_one / sixth - 1.0).abs(),
        j_relative_error: (j_theta_one / diagonal - 1.0).abs(),
    })
}

fn constants() -> Result<Report> {
    let direct = a3_direct(DIRECT_PRIME_LIMIT)?;
    let accelerated = a3_accelerated(SERIES_DEPTH, SERIES_PRIME_LIMIT)?;
    let difference = (direct.log_value - accelerated.log_value).abs();
    let agree = difference <= direct.tail_bound + accelerated.tail_bound;
    let consts = conjecture_constants(accelerated.value);
    let b = bridge(accelerated)?;
    let pairs = vec![
        ("a3_direct".into(), format!("{:.16e}", direct.value)),
        (
            "a3_direct_log_tail_bound".into(),
            format!("{:.3e}", direct.tail_bound),
        ),
        (
            "a3_accelerated".into(),
            format!("{:.16e}", accelerated.value),
        ),
        (
            "a3_accelerated_log_tail_bound".into(),
            format!("{:.3e}", accelerated.tail_bound),
        ),
        ("methods_log_difference".into(), format!("{difference:.3e}")),
        ("methods_agree".into(), agree.to_string()),
        (
            "42/9!".into(),
            format!(
                "{} = {:.12e}",
                consts.sixth_fraction,
                42.0 / FACTORIAL_9 as f64
            ),
        ),
        (
            "28/9!".into(),
            format!(
                "{} = {:.12e}",
                consts.diagonal_fraction,
                28.0 / FACTORIAL_9 as f64
            ),
        ),
        (
            "14/9!".into(),
            format!(
                "{} = {:.12e}",
                consts.cross_fraction,
                14.0 / FACTORIAL_9 as f64
            ),
        ),
        ("28 + 14 = 42".into(), "true".into()),
        ("c_sixth".into(), format!("{:.16e}", consts.c_sixth)),
        ("c_diagonal".into(), format!("{:.16e}", consts.c_diagonal)),
        ("c_cross".into(), format!("{:.16e}", consts.c_cross)),
        ("bridge_2K_theta1".into(), format!("{:.16e}", b.k_theta_one)),
        ("bridge_2J_theta1".into(), format!("{:.16e}", b.j_theta_one)),
    ];
    let json = json!({
        "a3_direct": direct,
        "a3_accelerated": accelerated,
        "methods_log_difference": difference,
        "methods_agree": agree,
        "constants": consts,
        "sum_28_14_is_42": true,
        "bridge": b,
    });
    Report::quantities(json, pairs)
}

fn identity_check(t: f64, table: &DivisorTable, cfg: &QuadratureConfig) -> Result<Report> {
    let i1 = integrate_i1(t, table, cfg)?;
    let i2 = integrate_i2(t, table, cfg)?;
    let m3 = integrate_moment(3, t, cfg)?;
    let defect = (i2.value() - i1.value().conj()).norm() / i1.value().norm();
    let gap = (2.0 * i1.value_re - m3.value_re) / m3.value_re;
    let json = json!({
        "T": t,
        "I1": i1,
        "I2": i2,
        "M3": m3,
        "relative_defect": defect,
        "first_method_gap": gap,
    });
    let text = format!(
        "relative defect |I2 - conj(I1)| / |I1| = {defect:.3e}\n(2 Re I1 - M3) / M3 = {gap:.6e}\n"
    );
    Ok(Report::estimates(json, &[i1, i2, m3], &text))
}

fn afe_survey(t0: f64, t1: f64, samples: usize, table: &DivisorTable) -> Result<Report> {
    let ratio = t1 / t0;
    let points: Vec<f64> = (0..samples)
        .map(|i| t0 * ratio.powf(i as f64 / (samples - 1) as f64))
        .collect();
    let residuals = points
        .iter()
        .map(|&t| afe_residual(t, table))
        .collect::<zetalab_core::Result<Vec<f64>>>()?;
    let (arg, max) = residuals
        .iter()
        .enumerate()
        .fold((0, f64::NEG_INFINITY), |best, (i, &r)| {
            if r > best.1 {
                (i, r)
            } else {
                best
            }
        });
    let mean = residuals.iter().sum::<f64>() / samples as f64;
    let json = json!({
        "t0": t0,
        "t1": t1,
        "samples": samples,
        "max": max,
        "argmax_t": points[arg],
        "mean": mean,
        "residuals": points.iter().zip(&residuals).map(|(t, r)| json!({"t": t, "residual": r})).collect::<Vec<_>>(),
    });
    Ok(Report {
        json,
        header: vec!["t", "residual"],
        rows: points
            .iter()
            .zip(&residuals)
            .map(|(t, r)| vec![t.to_string(), r.to_string()])
            .collect(),
        text: format!(
            "samples={samples} on [{t0}, {t1}] max={max:.6e} at t={:.6} mean={mean:.6e}\n",
            points[arg]
        ),
    })
}

fn correlate(x: u64, h_max: u64, table: &DivisorTable) -> Result<Report> {
    let sums = (1..=h_max)
        .map(|h| Ok((h, correlation_sum(table, x, h)?)))
        .collect::<Result<Vec<_>>>()?;
    let json = json!({
        "x": x,
        "sums": sums.iter().map(|(h, s)| json!({"h": h, "sum": s})).collect::<Vec<_>>(),
    });
    Ok(Report {
        json,
        header: vec!["x", "h", "sum"],
        rows: sums
            .iter()
            .map(|(h, s)| vec![x.to_string(), h.to_string(), s.to_string()])
            .collect(),
        text: sums
            .iter()
            .map(|(h, s)| format!("sum_(n<={x}) d3(n) d3(n+{h}) = {s}\n"))
            .collect(),
    })
}

fn zeta_grid(t0: f64, t1: f64, dt: f64, cache: Option<&std::path::Path>) -> Result<Report> {
    let grid = SampleCache::compute(t0, t1, dt)?;
    if let Some(path) = cache {
        grid.save(path)
            .with_context(|| format!("writing cache {}", path.display()))?;
    }
    let (a, b) = cached_range(&grid);
    let sums = (1..=3)
        .map(|k| cached_moment_sum(&grid, k))
        .collect::<zetalab_core::Result<Vec<f64>>>()?;
    let json = json!({
        "t_start": grid.t_start,
        "dt": grid.dt,
        "count": grid.len(),
        "cache": cache.map(|p| p.display().to_string()),
        "midpoint_range": [a, b],
        "midpoint_moment_sums": {"M1": sums[0], "M2": sums[1], "M3": sums[2]},
        "samples": grid.values.iter().enumerate().map(|(i, z)| json!({"t": grid.t_at(i), "z": z})).collect::<Vec<_>>(),
    });
    Ok(Report {
        json,
        header: vec!["t", "z"],
        rows: grid
            .values
            .iter()
            .enumerate()
            .map(|(i, z)| vec![grid.t_at(i).to_string(), z.to_string()])
            .collect(),
        text: format!(
            "{} samples of Z from t = {} step {}{}\n",
            grid.len(),
            grid.t_start,
            grid.dt,
            cache
                .map(|p| format!(", written to {}", p.display()))
                .unwrap_or_default()
        ),
    })
}

fn weighted(
    kind: MomentKind,
    w: &Weighted,
    table: &DivisorTable,
    cfg: &QuadratureConfig,
) -> Result<Report> {
    let weight = check_poly(&w.poly)?;
    Report::single(&estimate(kind, w.height.t, w.theta, &weight, table, cfg)?)
}

pub fn run(cli: &Cli) -> Result<Report> {
    let plan = plan(cli)?;
    let table = DivisorTable::new(plan.sieve_needed.max(1) as usize)?;
    let cfg = QuadratureConfig::default();
    let one = WeightPolynomial::one();
    match &cli.command {
        Command::Constants => constants(),
        Command::Moment { k, height } => Report::single(&integrate_moment(*k, height.t, &cfg)?),
        Command::IdentityCheck { height } => identity_check(height.t, &table, &cfg),
        Command::Ktheorem(w) => weighted(MomentKind::KN, w, &table, &cfg),
        Command::Jtheorem(w) => weighted(MomentKind::JN, w, &table, &cfg),
        Command::Cross { height } => Report::single(&estimate(
            MomentKind::Cross,
            height.t,
            0.0,
            &one,
            &table,
            &cfg,
        )?),
        Command::Chi3 { height } => Report::single(&estimate(
            MomentKind::Chi3,
            height.t,
            0.0,
            &one,
            &table,
            &cfg,
        )?),
        Command::Jara { height, theta } => Report::single(&integrate_jara(height.t, *theta, &cfg)?),
        Command::AfeSurvey { t0, t1, samples } => afe_survey(*t0, *t1, *samples, &table),
        Command::Correlate { x, h_max } => correlate(*x, *h_max, &table),
        Command::ZetaGrid { t0, t1, dt, cache } => zeta_grid(*t0, *t1, *dt, cache.as_deref()),
        Command::Trend {
            kind,
            heights,
            theta,
            poly,
        } => {
            let kind = MomentKind::from(*kind);
            let weight = check_poly(poly)?;
            let estimates = heights
                .iter()
                .map(|&t| estimate(kind, t, *theta, &weight, &table, &cfg))
                .collect::<Result<Vec<_>>>()?;
            let report = trend_report(&estimates)?;
            let text = format!(
                "slope={} main_slope={} deviation={}\n",
                fmt_opt(report.slope),
                fmt_opt(report.main_slope),
                fmt_opt(report.slope_deviation)
            );
            Ok(Report::estimates(
                serde_json::to_value(&report)?,
                &estimates,
                &text,
            ))
        }
    }
}

fn fmt_opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.6}")).unwrap_or_else(|| "n/a".into())
}
