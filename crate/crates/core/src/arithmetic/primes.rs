/// Calls `f` on every prime `p <= limit` in increasing order.
///
/// Odd-only sieve of Eratosthenes, one byte per odd number.
pub fn for_each_prime(limit: u64, mut f: impl FnMut(u64)) {
    if limit < 2 {
        return;
    }
    f(2);
    if limit < 3 {
        return;
    }
    // index i <-> 2i + 1
    let size = ((limit - 1) / 2 + 1) as usize;
    let mut composite = vec![false; size];
    let mut i = 1usize;
    while (2 * i + 1) * (2 * i + 1) <= limit as usize {
        if !composite[i] {
            let p = 2 * i + 1;
            let mut j = (p * p) / 2;
            while j < size {
                composite[j] = true;
                j += p;
            }
        }
        i += 1;
    }
    for (i, &c) in composite.iter().enumerate().skip(1) {
        if !c {
            f(2 * i as u64 + 1);
        }
    }
}

pub fn primes_up_to(limit: u64) -> Vec<u64> {
    let mut out = Vec::new();
    for_each_prime(limit, |p| out.push(p));
    out
}

/// Mobius function `mu(n)` for `0 <= n <= limit` (entry 0 is 0).
pub fn mobius_table(limit: usize) -> Vec<i8> {
    let mut mu = vec![1i8; limit + 1];
    if limit == 0 {
        mu[0] = 0;
        return mu;
    }
    mu[0] = 0;
    let mut is_composite = vec![false; limit + 1];
    for p in 2..=limit {
        if is_composite[p] {
            continue;
        }
        for m in (p..=limit).step_by(p) {
            if m > p {
                is_composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        if let Some(sq) = p.checked_mul(p) {
            for m in (sq..=limit).step_by(sq) {
                mu[m] = 0;
            }
        }
    }
    mu
}
