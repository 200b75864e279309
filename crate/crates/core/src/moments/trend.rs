use serde::{Deserialize, Serialize};

use super::estimate::MomentEstimate;
use super::integrand::MomentKind;
use crate::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendRow {
    #[serde(rename = "T")]
    pub t: f64,
    pub value: f64,
    pub main_term: Option<f64>,
    pub ratio: Option<f64>,
    pub quad_error: f64,
    pub diagnostic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TrendReport {
    pub kind: MomentKind,
    pub theta: Option<f64>,
    pub rows: Vec<TrendRow>,
    /// Least-squares slope of `log |value|` against `log T`.
    pub slope: Option<f64>,
    /// The same fit applied to the main terms.
    pub main_slope: Option<f64>,
    /// `slope / main_slope - 1`.
    pub slope_deviation: Option<f64>,
    /// Whether the ratios increase strictly with `T`.
    pub ratios_increasing: Option<bool>,
}

/// Least-squares slope of `y` against `x`.
pub fn fit_slope(x: &[f64], y: &[f64]) -> f64 {
    let n = x.len() as f64;
    let mx = x.iter().sum::<f64>() / n;
    let my = y.iter().sum::<f64>() / n;
    let sxy: f64 = x.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let sxx: f64 = x.iter().map(|a| (a - mx) * (a - mx)).sum();
    sxy / sxx
}

fn log_slope(t: &[f64], v: &[f64]) -> Option<f64> {
    if v.iter().all(|&x| x != 0.0 && x.is_finite()) {
        let lx: Vec<f64> = t.iter().map(|x| x.ln()).collect();
        let ly: Vec<f64> = v.iter().map(|x| x.abs().ln()).collect();
        Some(fit_slope(&lx, &ly))
    } else {
        None
    }
}

/// Checks that `t_list` has at least two entries and increases strictly.
pub fn validate_heights(t_list: &[f64]) -> Result<()> {
    if t_list.len() < 2 {
        return Err(LabError::invalid("a trend needs at least two heights"));
    }
    if t_list.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(LabError::invalid(format!(
            "heights must increase strictly, got {t_list:?}"
        )));
    }
    Ok(())
}

/// Tabulates estimates of one kind, ordered by `T`, with fitted slopes.
pub fn trend_report(estimates: &[MomentEstimate]) -> Result<TrendReport> {
    let heights: Vec<f64> = estimates.iter().map(|e| e.t).collect();
    validate_heights(&heights)?;
    let kind = estimates[0].kind;
    if estimates.iter().any(|e| e.kind != kind) {
        return Err(LabError::invalid("a trend mixes integral kinds"));
    }
    let rows: Vec<TrendRow> = estimates
        .iter()
        .map(|e| TrendRow {
            t: e.t,
            value: e.value_re,
            main_term: e.main_term,
            ratio: e.ratio,
            quad_error: e.quad_error,
            diagnostic: e.diagnostic,
        })
        .collect();
    let values: Vec<f64> = rows.iter().map(|r| r.value).collect();
    let slope = log_slope(&heights, &values);
    let mains: Option<Vec<f64>> = rows.iter().map(|r| r.main_term).collect();
    let main_slope = mains.and_then(|m| log_slope(&heights, &m));
    let ratios: Option<Vec<f64>> = rows.iter().map(|r| r.ratio).collect();
    Ok(TrendReport {
        kind,
        theta: estimates[0].theta,
        slope_deviation: slope.zip(main_slope).map(|(s, m)| s / m - 1.0),
        ratios_increasing: ratios.map(|r| r.windows(2).all(|w| w[1] > w[0])),
        rows,
        slope,
        main_slope,
    })
}
