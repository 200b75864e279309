#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Root of `f` in `[a, b]` by bisection; `f(a)` and `f(b)` must differ in sign.
pub fn bisect(f: impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let mut fa = f(a);
    assert!(fa * f(b) <= 0.0, "no sign change on [{a}, {b}]");
    while b - a > tol {
        let m = 0.5 * (a + b);
        let fm = f(m);
        if fm == 0.0 {
            return m;
        }
        if fa * fm < 0.0 {
            b = m;
        } else {
            a = m;
            fa = fm;
        }
    }
    0.5 * (a + b)
}

/// Sign changes of `f` on the grid `a, a + h, ..., b`, returned as brackets.
pub fn sign_changes(f: impl Fn(f64) -> f64, a: f64, b: f64, h: f64) -> Vec<(f64, f64)> {
    let n = ((b - a) / h).ceil() as usize;
    let mut out = Vec::new();
    let mut prev_t = a;
    let mut prev = f(a);
    for i in 1..=n {
        let t = (a + i as f64 * h).min(b);
        let v = f(t);
        if prev * v < 0.0 {
            out.push((prev_t, t));
        }
        prev_t = t;
        prev = v;
    }
    out
}

pub fn rel(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(f64::MIN_POSITIVE)
}

/// Gauss-Legendre nodes and weights on `[-1, 1]`, by Newton iteration on
/// the three-term recurrence.
pub fn gauss_legendre(n: usize) -> Vec<(f64, f64)> {
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (mut p0, mut p1) = (1.0, x);
            for k in 2..=n {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
            let step = p1 / dp;
            x -= step;
            if step.abs() < 1e-16 {
                break;
            }
        }
        out.push((x, 2.0 / ((1.0 - x * x) * dp * dp)));
    }
    out
}

/// `int_a^b f` with a composite `n`-point Gauss-Legendre rule on `pieces` subintervals.
pub fn integrate(f: impl Fn(f64) -> f64, a: f64, b: f64, n: usize, pieces: usize) -> f64 {
    let rule = gauss_legendre(n);
    let h = (b - a) / pieces as f64;
    let mut acc = 0.0;
    for j in 0..pieces {
        let lo = a + j as f64 * h;
        let mid = lo + 0.5 * h;
        for &(x, w) in &rule {
            acc += w * 0.5 * h * f(mid + 0.5 * h * x);
        }
    }
    acc
}
