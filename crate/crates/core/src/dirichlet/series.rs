use std::f64::consts::PI;

use num::complex::Complex64;

use super::WeightPolynomial;
use crate::arithmetic::DivisorTable;
use crate::Result;

/// Number of terms of the truncated divisor sum at height `t`: the closed
/// cutoff `floor(|t| / 2 pi)`.
pub fn cutoff_length(t: f64) -> usize {
    (t.abs() / (2.0 * PI)).floor() as usize
}

/// `sum_{n <= len} b_n n^(-it)` with real coefficients `b_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletPolynomial {
    coefficients: Vec<f64>,
    logs: Vec<f64>,
    /// Smallest prime factor of `n` at index `n - 1` (1 for `n = 1`).
    least_factor: Vec<u32>,
}

impl DirichletPolynomial {
    /// `coefficients[n - 1]` is `b_n`.
    pub fn new(coefficients: Vec<f64>) -> Self {
        let len = coefficients.len();
        let logs = (1..=len).map(|n| (n as f64).ln()).collect();
        DirichletPolynomial {
            coefficients,
            logs,
            least_factor: least_factors(len),
        }
    }

    /// `b_n = d(n) n^(-1/2)` for `n <= len`.
    pub fn divisor(table: &DivisorTable, len: usize) -> Result<Self> {
        table.require(len as u64)?;
        let c = table.d_values()[..len]
            .iter()
            .enumerate()
            .map(|(i, &d)| f64::from(d) / ((i + 1) as f64).sqrt())
            .collect();
        Ok(Self::new(c))
    }

    /// `b_n = d(n) n^(-1/2) P(log n / log N)` for `n <= N`, with `b_1 = P(0)`
    /// when `N < 2`.
    pub fn weighted_divisor(
        table: &DivisorTable,
        n_len: f64,
        weight: &WeightPolynomial,
    ) -> Result<Self> {
        let len = n_len.floor() as usize;
        table.require(len as u64)?;
        if len < 2 {
            return Ok(Self::new(vec![weight.eval(0.0); len]));
        }
        let log_n = n_len.ln();
        let c = table.d_values()[..len]
            .iter()
            .enumerate()
            .map(|(i, &d)| {
                let n = (i + 1) as f64;
                f64::from(d) / n.sqrt() * weight.eval(n.ln() / log_n)
            })
            .collect();
        Ok(Self::new(c))
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    /// Value at `t` using only the first `len` terms.
    pub fn eval_prefix(&self, t: f64, len: usize) -> Complex64 {
        let len = len.min(self.len());
        let mut re = 0.0;
        let mut im = 0.0;
        for (&b, &l) in self.coefficients[..len].iter().zip(&self.logs[..len]) {
            let (s, c) = (t * l).sin_cos();
            re += b * c;
            im -= b * s;
        }
        Complex64::new(re, im)
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        self.eval_prefix(t, self.len())
    }

    /// Local expansion of the first `len` terms on `[center - radius,
    /// center + radius]`.
    pub fn expand(&self, len: usize, center: f64, radius: f64) -> LocalExpansion<'_> {
        LocalExpansion::new(self, len.min(self.len()), center, radius)
    }
}

fn least_factors(len: usize) -> Vec<u32> {
    let mut spf = vec![0u32; len + 1];
    for n in 2..=len {
        if spf[n] == 0 {
            for m in (n..=len).step_by(n) {
                if spf[m] == 0 {
                    spf[m] = n as u32;
                }
            }
        }
    }
    spf.into_iter().skip(1).map(|p| p.max(1)).collect()
}

/// `n^(-ic)` for `n <= len`, by complete multiplicativity from the primes.
fn phases(poly: &DirichletPolynomial, len: usize, c: f64) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(len);
    for n in 1..=len {
        let p = poly.least_factor[n - 1] as usize;
        let v = if n == 1 {
            Complex64::new(1.0, 0.0)
        } else if p == n {
            let (s, co) = (c * poly.logs[n - 1]).sin_cos();
            Complex64::new(co, -s)
        } else {
            out[p - 1] * out[n / p - 1]
        };
        out.push(v);
    }
    out
}

const MAX_ORDER: usize = 90;
const DIRECT_BELOW: usize = 24;

/// Evaluates a Dirichlet polynomial repeatedly on a short interval.
///
/// With `e^{-it log n} = e^{-ic log n} e^{-ih log n}` the polynomial becomes a
/// power series in `h = t - c` whose coefficients
/// `mu_k = sum b_n e^{-ic log n} (-i log n)^k / k!` are computed once.
#[derive(Debug, Clone)]
pub struct LocalExpansion<'a> {
    poly: &'a DirichletPolynomial,
    len: usize,
    center: f64,
    moments: Option<Vec<Complex64>>,
}

impl<'a> LocalExpansion<'a> {
    fn new(poly: &'a DirichletPolynomial, len: usize, center: f64, radius: f64) -> Self {
        let moments = if len < DIRECT_BELOW {
            None
        } else {
            let x = radius.abs() * poly.logs[len - 1];
            truncation_order(x).map(|order| taylor_moments(poly, len, center, order))
        };
        LocalExpansion {
            poly,
            len,
            center,
            moments,
        }
    }

    pub fn uses_series(&self) -> bool {
        self.moments.is_some()
    }

    pub fn eval(&self, t: f64) -> Complex64 {
        match &self.moments {
            None => self.poly.eval_prefix(t, self.len),
            Some(mu) => {
                let h = t - self.center;
                mu.iter()
                    .rev()
                    .fold(Complex64::new(0.0, 0.0), |acc, &m| acc * h + m)
            }
        }
    }
}

/// Smallest order `K` with `sum_{k > K} x^k / k! < 1e-17`, if reasonable.
fn truncation_order(x: f64) -> Option<usize> {
    if x > 14.0 {
        return None;
    }
    let mut term = 1.0;
    for k in 1..=MAX_ORDER {
        term *= x / k as f64;
        let ratio = x / (k + 1) as f64;
        if ratio < 1.0 && term * ratio / (1.0 - ratio) < 1e-17 {
            return Some(k);
        }
    }
    None
}

const LANES: usize = 8;

fn taylor_moments(
    poly: &DirichletPolynomial,
    len: usize,
    center: f64,
    order: usize,
) -> Vec<Complex64> {
    let padded = len.div_ceil(LANES) * LANES;
    let mut logs = poly.logs[..len].to_vec();
    logs.resize(padded, 0.0);
    let mut wr = vec![0.0; padded];
    let mut wi = vec![0.0; padded];
    for (n, (&b, w)) in poly.coefficients[..len]
        .iter()
        .zip(phases(poly, len, center))
        .enumerate()
    {
        wr[n] = b * w.re;
        wi[n] = b * w.im;
    }
    // mu_k = (-i)^k / k! sum_n w_n (log n)^k
    let mut mu = Vec::with_capacity(order + 1);
    let mut rot = Complex64::new(1.0, 0.0);
    let mut fact = 1.0;
    for k in 0..=order {
        let mut acc_r = [0.0; LANES];
        let mut acc_i = [0.0; LANES];
        let chunks = wr
            .as_chunks_mut::<LANES>()
            .0
            .iter_mut()
            .zip(wi.as_chunks_mut::<LANES>().0.iter_mut())
            .zip(logs.as_chunks::<LANES>().0);
        for ((r, i), l) in chunks {
            for j in 0..LANES {
                acc_r[j] += r[j];
                acc_i[j] += i[j];
                r[j] *= l[j];
                i[j] *= l[j];
            }
        }
        let sum = Complex64::new(acc_r.iter().sum(), acc_i.iter().sum());
        mu.push(rot * sum / fact);
        rot *= Complex64::new(0.0, -1.0);
        fact *= (k + 1) as f64;
    }
    mu
}

/// `D(1/2 + it) = sum_{n <= |t|/2pi} d(n) n^(-1/2-it)`.
pub fn d_truncated(t: f64, table: &DivisorTable) -> Result<Complex64> {
    let len = cutoff_length(t);
    Ok(DirichletPolynomial::divisor(table, len)?.eval(t))
}

/// `D(1/2 - it)`, the reflected sum, equal to `conj(D(1/2 + it))`.
pub fn d_truncated_reflected(t: f64, table: &DivisorTable) -> Result<Complex64> {
    d_truncated(-t, table)
}

/// `D_N(1/2 + it, P) = sum_{n <= N} d(n) n^(-1/2-it) P(log n / log N)`;
/// `D_1 = P(0)`.
pub fn d_n_weighted(
    t: f64,
    n_len: f64,
    weight: &WeightPolynomial,
    table: &DivisorTable,
) -> Result<Complex64> {
    if !(n_len >= 1.0) {
        return Err(crate::LabError::invalid(format!(
            "N must be at least 1, got {n_len}"
        )));
    }
    Ok(DirichletPolynomial::weighted_divisor(table, n_len, weight)?.eval(t))
}
