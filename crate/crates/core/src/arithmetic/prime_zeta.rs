use crate::zeta::zeta_minus_one_real;
use crate::{LabError, Result};

fn mobius(mut m: u32) -> i32 {
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            m /= p;
            if m.is_multiple_of(p) {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

/// Prime zeta function `P(k) = sum_p p^-k` by Mobius inversion of
/// `log zeta(k m)`.
///
/// The inversion is truncated once the bound `3 * 2^(-k m) / m` on the next
/// term drops below `precision`.
pub fn prime_zeta(k: u32, precision: f64) -> Result<f64> {
    if k < 2 {
        return Err(LabError::invalid(format!(
            "prime zeta diverges for k < 2, got {k}"
        )));
    }
    if !(precision > 0.0) {
        return Err(LabError::invalid("precision must be positive"));
    }
    let mut terms = Vec::new();
    let mut m = 1u32;
    loop {
        let x = f64::from(k) * f64::from(m);
        // log zeta(x) <= zeta(x) - 1 <= 3 * 2^-x for x >= 2
        if m > 1 && 3.0 * (-x).exp2() / f64::from(m) < precision {
            break;
        }
        let mu = mobius(m);
        if mu != 0 {
            terms.push(f64::from(mu) / f64::from(m) * zeta_minus_one_real(x).ln_1p());
        }
        m += 1;
    }
    // smallest terms first
    Ok(terms.iter().rev().sum())
}
