//! Zeta on the critical line.
//!
//! The asymptotic evaluators ([`theta`], [`chi_line`], [`z_function`],
//! [`zeta_line`]) serve `|t| >= T_MIN`. The Euler-Maclaurin and log-gamma
//! routes ([`zeta_euler_maclaurin`], [`theta_oracle`], [`chi_gamma_route`])
//! work everywhere and double as independent oracles.

mod bernoulli;
mod euler_maclaurin;
mod gamma;
mod riemann_siegel;
mod rs_tables;
mod sample;
mod theta;

pub(crate) use euler_maclaurin::zeta_minus_one_real;
pub use euler_maclaurin::{
    z_oracle, zeta_em_auto, zeta_euler_maclaurin, zeta_oracle_line, ZetaEstimate,
};
pub use gamma::ln_gamma_complex;
pub use riemann_siegel::{z_function, CORRECTION_DEPTH};
pub use sample::{
    max_grid_step, sample_at, sample_uniform_grid, uniform_grid_shape, zeta_line, CriticalSample,
};
pub use theta::{chi_gamma_route, chi_line, theta, theta_oracle, ChiFactor, T_MIN};
