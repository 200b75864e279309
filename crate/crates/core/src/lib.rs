//! Numerical laboratory for the sixth power moment of the Riemann zeta-function.
//!
//! The crate is split along the lines of the computation:
//!
//! * [`arithmetic`]: divisor sieves for `d(n)` and `d_3(n)`, shifted
//!   correlation sums, the prime zeta function and the Euler product `a_3`.
//! * [`zeta`]: the Riemann-Siegel `theta` and `Z` functions, the functional
//!   equation factor `chi` on the critical line and an Euler-Maclaurin oracle.
//! * [`dirichlet`]: truncated divisor sums, weighted Dirichlet polynomials,
//!   the approximate functional equation for `zeta^2` and closed-form main
//!   terms of the mean-value theorems.
//! * [`moments`]: panel quadrature of every integral that appears in the
//!   argument (moments, `I_1`/`I_2`, `K_N`, `J_N`, cross and `chi^3` terms,
//!   the Jara-type integral) with main-term comparison and trend fitting.
//! * [`cache`]: the binary sample-cache format for uniform `Z(t)` grids.

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod arithmetic;
pub mod cache;
pub mod dirichlet;
mod error;
pub mod moments;
pub mod numeric;
pub mod zeta;

pub use arithmetic::{
    a3_accelerated, a3_direct, a3_reference, correlation_sum, prime_zeta, sieve_divisor_tables,
    DivisorTable, EulerProductValue,
};
pub use cache::SampleCache;
pub use dirichlet::{
    afe_reconstruct, afe_residual, conjecture_constants, d_n_weighted, d_truncated,
    d_truncated_reflected, h_transform, hyp2f1_case, j_main_term, k_main_term, ConjectureConstants,
    DirichletPolynomial, MainTerm, MainTermKind, MainTermSpec, WeightPolynomial,
};
pub use error::{LabError, Result};
pub use moments::{
    cached_moment_sum, integrate_chi3, integrate_cross, integrate_diagonal, integrate_i1,
    integrate_i2, integrate_jara, integrate_jn, integrate_kn, integrate_moment, integrate_range,
    riemann_sum, trend_report, Integrand, MomentEstimate, MomentKind, Quadrature, QuadratureConfig,
    TrendReport, TrendRow,
};
pub use num::complex::Complex64;
pub use zeta::{
    chi_gamma_route, chi_line, sample_at, sample_uniform_grid, theta, theta_oracle, z_function,
    z_oracle, zeta_em_auto, zeta_euler_maclaurin, zeta_line, zeta_oracle_line, ChiFactor,
    CriticalSample, ZetaEstimate, T_MIN,
};
