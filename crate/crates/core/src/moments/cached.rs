use crate::cache::SampleCache;
use crate::numeric::pairwise_sum;
use crate::{LabError, Result};

/// Midpoint sum of `|zeta|^(2k)` over `[t_start - dt/2, t_start + (n - 1/2) dt]`,
/// reading `Z` from the cache instead of evaluating it. This is the same sum
/// [`riemann_sum`](super::riemann_sum) forms for `Integrand::moment(k)` on
/// that range with step `dt`.
pub fn cached_moment_sum(cache: &SampleCache, k: u32) -> Result<f64> {
    if !(1..=3).contains(&k) {
        return Err(LabError::invalid(format!(
            "moment order k must be 1, 2 or 3, got {k}"
        )));
    }
    let terms: Vec<f64> = cache
        .values
        .iter()
        .map(|z| z.powi(2 * k as i32) * cache.dt)
        .collect();
    Ok(pairwise_sum(&terms))
}

/// The integration range covered by [`cached_moment_sum`].
pub fn cached_range(cache: &SampleCache) -> (f64, f64) {
    let a = cache.t_start - 0.5 * cache.dt;
    (a, a + cache.len() as f64 * cache.dt)
}
