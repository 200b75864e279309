//! Divisor Dirichlet polynomials, the approximate functional equation for
//! `zeta^2`, and closed-form main terms.

mod afe;
mod main_terms;
mod series;
mod weight;

pub use afe::{afe_reconstruct, afe_residual, chi_any};
pub use main_terms::{
    conjecture_constants, h_transform, hyp2f1_case, hyp2f1_coefficients, j_alpha_integral,
    j_main_term, k_alpha_integral, k_main_term, main_term, ConjectureConstants, MainTerm,
    MainTermKind, MainTermSpec, FACTORIAL_9,
};
pub use series::{
    cutoff_length, d_n_weighted, d_truncated, d_truncated_reflected, DirichletPolynomial,
    LocalExpansion,
};
pub use weight::WeightPolynomial;
