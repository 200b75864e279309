//! Panel quadrature of the critical-line integrals.
//!
//! Every integral runs from `t = 1`. Panels are aligned to the jumps of the
//! truncated divisor sum at `t = 2 pi m`, shrink like `1 / log(t / 2 pi)`,
//! and are refined adaptively with a Gauss-Kronrod pair.

mod cached;
mod estimate;
mod integrand;
mod kronrod;
mod quadrature;
mod trend;

pub use cached::{cached_moment_sum, cached_range};
pub use estimate::{
    integrate_chi3, integrate_cross, integrate_diagonal, integrate_i1, integrate_i2,
    integrate_jara, integrate_jn, integrate_kn, integrate_moment, integrate_range, MomentEstimate,
};
pub use integrand::{Integrand, MomentKind};
pub use quadrature::{
    integrate_panels, panel_layout, riemann_sum, PanelIntegrand, Quadrature, QuadratureConfig,
};
pub use trend::{fit_slope, trend_report, validate_heights, TrendReport, TrendRow};
