use num::complex::Complex64;

use super::series::d_truncated;
use crate::arithmetic::DivisorTable;
use crate::zeta::{chi_gamma_route, sample_at, ChiFactor, T_MIN};
use crate::{LabError, Result};

/// `D(s) + chi(s)^2 D(1 - s)` at `s = 1/2 + it`, the approximate functional
/// equation for `zeta(s)^2` without its error term.
pub fn afe_reconstruct(t: f64, table: &DivisorTable, chi: &ChiFactor) -> Result<Complex64> {
    if chi.t != t {
        return Err(LabError::invalid(format!(
            "chi factor evaluated at {} but t = {t}",
            chi.t
        )));
    }
    let d = d_truncated(t, table)?;
    Ok(d + chi.value * chi.value * d.conj())
}

/// `chi(1/2 + it)` for any real `t`: the theta route above `T_MIN`, the
/// gamma route below.
pub fn chi_any(t: f64) -> ChiFactor {
    let value = if t.abs() >= T_MIN {
        sample_at(t).chi()
    } else {
        chi_gamma_route(t)
    };
    ChiFactor { t, value }
}

/// `|zeta(1/2 + it)^2 - afe_reconstruct(t)| / log(2 + |t|)`.
pub fn afe_residual(t: f64, table: &DivisorTable) -> Result<f64> {
    let chi = chi_any(t);
    let recon = afe_reconstruct(t, table, &chi)?;
    let zeta = sample_at(t).zeta_value;
    Ok((zeta * zeta - recon).norm() / (2.0 + t.abs()).ln())
}
