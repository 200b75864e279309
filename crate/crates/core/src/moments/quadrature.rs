use std::f64::consts::PI;

use num::complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::kronrod::*;
use crate::numeric::{pairwise_sum, pairwise_sum_complex};
use crate::zeta::T_MIN;
use crate::{LabError, Result};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureConfig {
    /// Kronrod node count per panel: 15, 21, 31, 41 or 51.
    pub panel_rule: usize,
    /// Per-panel relative tolerance on `|K - G|` against `int |f|`.
    pub refinement_tolerance: f64,
    pub max_depth: u32,
    /// Panels starting at `t` are at most `width_constant / log(t / 2 pi)`
    /// wide (`width_constant` where the log is below one).
    pub width_constant: f64,
}

impl Default for QuadratureConfig {
    fn default() -> Self {
        QuadratureConfig {
            panel_rule: 41,
            refinement_tolerance: 1e-8,
            max_depth: 10,
            width_constant: 2.0 * PI,
        }
    }
}

impl QuadratureConfig {
    pub fn validate(&self) -> Result<()> {
        if rule(self.panel_rule).is_none() {
            return Err(LabError::invalid(format!(
                "panel_rule must be one of 15, 21, 31, 41, 51, got {}",
                self.panel_rule
            )));
        }
        if !(self.refinement_tolerance > 0.0) {
            return Err(LabError::invalid("refinement_tolerance must be positive"));
        }
        if !(self.width_constant > 0.0 && self.width_constant.is_finite()) {
            return Err(LabError::invalid("width_constant must be positive"));
        }
        Ok(())
    }

    /// Maximum width of a panel starting at `t`.
    pub fn panel_width(&self, t: f64) -> f64 {
        self.width_constant / (t.abs() / (2.0 * PI)).ln().max(1.0)
    }
}

struct Rule {
    nodes: &'static [f64],
    gauss: &'static [f64],
    kronrod: &'static [f64],
}

fn rule(n: usize) -> Option<Rule> {
    let (nodes, gauss, kronrod): (&'static [f64], &'static [f64], &'static [f64]) = match n {
        15 => (&XGK15, &WG15, &WGK15),
        21 => (&XGK21, &WG21, &WGK21),
        31 => (&XGK31, &WG31, &WGK31),
        41 => (&XGK41, &WG41, &WGK41),
        51 => (&XGK51, &WG51, &WGK51),
        _ => return None,
    };
    Some(Rule {
        nodes,
        gauss,
        kronrod,
    })
}

/// Result of one Kronrod/Gauss pair on one interval.
#[derive(Debug, Clone, Copy)]
struct PanelSum {
    value: Complex64,
    error: f64,
    abs_value: f64,
    evaluations: usize,
}

fn kronrod_pair<F: Fn(f64) -> Complex64>(rule: &Rule, f: &F, a: f64, b: f64) -> PanelSum {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let last = rule.nodes.len() - 1;
    let fc = f(c);
    let mut k = fc * rule.kronrod[last];
    let mut k_abs = fc.norm() * rule.kronrod[last];
    let mut g = Complex64::new(0.0, 0.0);
    if rule.gauss.len() * 2 - 1 == last {
        g += fc * rule.gauss[rule.gauss.len() - 1];
    }
    for j in 0..last {
        let dx = h * rule.nodes[j];
        let f1 = f(c - dx);
        let f2 = f(c + dx);
        k += (f1 + f2) * rule.kronrod[j];
        k_abs += (f1.norm() + f2.norm()) * rule.kronrod[j];
        if j % 2 == 1 {
            g += (f1 + f2) * rule.gauss[j / 2];
        }
    }
    PanelSum {
        value: k * h,
        error: ((k - g) * h).norm(),
        abs_value: k_abs * h.abs(),
        evaluations: 2 * last + 1,
    }
}

fn adaptive<F: Fn(f64) -> Complex64>(
    rule: &Rule,
    f: &F,
    a: f64,
    b: f64,
    depth: u32,
    cfg: &QuadratureConfig,
) -> PanelSum {
    let whole = kronrod_pair(rule, f, a, b);
    if whole.error <= cfg.refinement_tolerance * whole.abs_value || depth >= cfg.max_depth {
        return whole;
    }
    let m = 0.5 * (a + b);
    let left = adaptive(rule, f, a, m, depth + 1, cfg);
    let right = adaptive(rule, f, m, b, depth + 1, cfg);
    PanelSum {
        value: left.value + right.value,
        error: left.error + right.error,
        abs_value: left.abs_value + right.abs_value,
        evaluations: whole.evaluations + left.evaluations + right.evaluations,
    }
}

/// Something integrable panel by panel.
pub trait PanelIntegrand: Sync {
    /// Points in `(a, b)` where the integrand jumps.
    fn discontinuities(&self, a: f64, b: f64) -> Vec<f64>;

    /// An evaluator valid on `[a, b]`, which contains no discontinuity.
    fn panel(&self, a: f64, b: f64) -> Box<dyn Fn(f64) -> Complex64 + '_>;

    /// Direct evaluation at a single point off the discontinuities.
    fn point(&self, t: f64) -> Complex64;
}

/// Panel boundaries for `[a, b]`: every discontinuity and `T_MIN` are
/// boundaries, and no panel is wider than `cfg.panel_width` at its left end.
pub fn panel_layout<I: PanelIntegrand + ?Sized>(
    integrand: &I,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Vec<f64> {
    let mut breaks = vec![a];
    breaks.extend(integrand.discontinuities(a, b));
    if a < T_MIN && T_MIN < b {
        breaks.push(T_MIN);
    }
    breaks.push(b);
    breaks.sort_by(f64::total_cmp);
    breaks.dedup();

    let mut out = vec![a];
    for w in breaks.windows(2) {
        let (u, v) = (w[0], w[1]);
        let mut x = u;
        loop {
            let width = cfg.panel_width(x + cfg.panel_width(x));
            if x + width >= v {
                break;
            }
            x += width;
            out.push(x);
        }
        out.push(v);
    }
    out
}

/// One numerical integral with its error estimate.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Quadrature {
    pub value: Complex64,
    pub error: f64,
    /// Estimate of `int |f|`.
    pub abs_value: f64,
    pub panels: usize,
    pub evaluations: usize,
}

/// Adaptive panel quadrature of `integrand` over `[a, b]`.
///
/// Panels run in parallel; their results are combined in panel order by a
/// fixed pairwise tree, so the value does not depend on the worker count.
pub fn integrate_panels<I: PanelIntegrand + ?Sized>(
    integrand: &I,
    a: f64,
    b: f64,
    cfg: &QuadratureConfig,
) -> Result<Quadrature> {
    cfg.validate()?;
    if !(a.is_finite() && b.is_finite()) || a > b {
        return Err(LabError::invalid(format!(
            "bad integration range [{a}, {b}]"
        )));
    }
    if a == b {
        return Ok(Quadrature {
            value: Complex64::new(0.0, 0.0),
            error: 0.0,
            abs_value: 0.0,
            panels: 0,
            evaluations: 0,
        });
    }
    let rule = rule(cfg.panel_rule).expect("validated");
    let layout = panel_layout(integrand, a, b, cfg);
    let sums: Vec<PanelSum> = layout
        .par_windows(2)
        .map(|w| {
            let f = integrand.panel(w[0], w[1]);
            adaptive(&rule, &f, w[0], w[1], 0, cfg)
        })
        .collect();
    let values: Vec<Complex64> = sums.iter().map(|s| s.value).collect();
    let errors: Vec<f64> = sums.iter().map(|s| s.error).collect();
    let abs: Vec<f64> = sums.iter().map(|s| s.abs_value).collect();
    Ok(Quadrature {
        value: pairwise_sum_complex(&values),
        error: pairwise_sum(&errors),
        abs_value: pairwise_sum(&abs),
        panels: sums.len(),
        evaluations: sums.iter().map(|s| s.evaluations).sum(),
    })
}

/// Midpoint sum with step `dt` over `[a, b]`. Cells that contain a
/// discontinuity are split there. Serves as an oracle for
/// [`integrate_panels`]; it evaluates the integrand directly on every cell.
pub fn riemann_sum<I: PanelIntegrand + ?Sized>(
    integrand: &I,
    a: f64,
    b: f64,
    dt: f64,
) -> Result<Complex64> {
    if !(dt > 0.0) || !(a <= b) {
        return Err(LabError::invalid(format!(
            "bad Riemann sum on [{a}, {b}] with dt = {dt}"
        )));
    }
    let cells = ((b - a) / dt).ceil() as usize;
    let jumps = integrand.discontinuities(a, b);
    const CHUNK: usize = 4096;
    let chunks: Vec<Complex64> = (0..cells.div_ceil(CHUNK))
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK;
            let hi = ((c + 1) * CHUNK).min(cells);
            let mut terms = Vec::with_capacity(hi - lo);
            for i in lo..hi {
                let u = a + i as f64 * dt;
                let v = (a + (i + 1) as f64 * dt).min(b);
                let start = jumps.partition_point(|&j| j <= u);
                let mut x = u;
                for &j in jumps[start..].iter().take_while(|&&j| j < v) {
                    terms.push(cell(integrand, x, j));
                    x = j;
                }
                terms.push(cell(integrand, x, v));
            }
            pairwise_sum_complex(&terms)
        })
        .collect();
    Ok(pairwise_sum_complex(&chunks))
}

fn cell<I: PanelIntegrand + ?Sized>(integrand: &I, u: f64, v: f64) -> Complex64 {
    integrand.point(0.5 * (u + v)) * (v - u)
}
