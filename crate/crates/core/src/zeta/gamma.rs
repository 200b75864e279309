use std::f64::consts::PI;

use num::complex::Complex64;

use super::bernoulli::b2k;

const SHIFT_TARGET: f64 = 10.0;
const STIRLING_TERMS: usize = 12;

/// Principal branch of `log Gamma(z)` (continuous off the negative real axis).
///
/// The argument is shifted with `log Gamma(z) = log Gamma(z + 1) - log z`
/// until its real part reaches 10, where the Stirling series with twelve
/// Bernoulli terms is accurate to well below `1e-15`.
pub fn ln_gamma_complex(z: Complex64) -> Complex64 {
    let mut z = z;
    let mut shift = Complex64::new(0.0, 0.0);
    while z.re < SHIFT_TARGET {
        shift += z.ln();
        z += 1.0;
    }
    let ln_z = z.ln();
    let mut acc = (z - 0.5) * ln_z - z + 0.5 * (2.0 * PI).ln();
    let inv = z.inv();
    let inv2 = inv * inv;
    let mut pow = inv;
    for k in 1..=STIRLING_TERMS {
        let kf = k as f64;
        acc += pow * (b2k(k) / (2.0 * kf * (2.0 * kf - 1.0)));
        pow *= inv2;
    }
    acc - shift
}
