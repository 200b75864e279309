mod common;

use common::rng;
use num::integer::gcd;
use rand::Rng;
use zetalab_core::arithmetic::{a3_expansion_coefficient, primes_up_to};
use zetalab_core::{
    a3_accelerated, a3_direct, correlation_sum, prime_zeta, sieve_divisor_tables, DivisorTable,
    LabError,
};

/// `d_3(n)` for `n <= limit` by enumerating ordered triples.
fn d3_by_triples(limit: usize) -> Vec<u64> {
    let mut out = vec![0u64; limit + 1];
    for a in 1..=limit {
        for b in 1..=limit / a {
            for c in 1..=limit / (a * b) {
                out[a * b * c] += 1;
            }
        }
    }
    out
}

fn d_by_trial_division(n: usize) -> u32 {
    (1..=n).filter(|k| n.is_multiple_of(*k)).count() as u32
}

#[test]
fn small_tables() {
    let one = sieve_divisor_tables(1).unwrap();
    assert_eq!(one.d_values(), &[1]);
    assert_eq!(one.d3_values(), &[1]);
    let t = sieve_divisor_tables(12).unwrap();
    assert_eq!((t.d(12), t.d3(12)), (6, 18));
    assert_eq!(t.d3(4), 6);
    assert_eq!(sieve_divisor_tables(0).unwrap_err(), LabError::EmptySieve);
}

#[test]
fn tables_match_brute_force() {
    let n = 3000;
    let t = DivisorTable::new(n).unwrap();
    let d3 = d3_by_triples(n);
    for (k, &expected) in d3.iter().enumerate().skip(1) {
        assert_eq!(u64::from(t.d3(k)), expected, "d3({k})");
        assert_eq!(t.d(k), d_by_trial_division(k), "d({k})");
    }
}

#[test]
fn multiplicativity_on_random_coprime_pairs() {
    let limit = 200_000;
    let t = DivisorTable::new(limit).unwrap();
    let mut r = rng(21);
    let mut checked = 0;
    while checked < 1000 {
        let a = r.gen_range(1..=2000usize);
        let b = r.gen_range(1..=limit / a);
        if gcd(a, b) != 1 {
            continue;
        }
        assert_eq!(t.d(a * b), t.d(a) * t.d(b));
        assert_eq!(t.d3(a * b), t.d3(a) * t.d3(b));
        checked += 1;
    }
}

#[test]
fn hyperbola_identity() {
    let limit = 10_000;
    let t = DivisorTable::new(limit).unwrap();
    let mut running = 0u64;
    for x in 1..=limit {
        running += u64::from(t.d(x));
        let floors: u64 = (1..=x).map(|k| (x / k) as u64).sum();
        assert_eq!(running, floors, "x = {x}");
    }
}

#[test]
fn correlation_examples() {
    let t = DivisorTable::new(20_000).unwrap();
    assert_eq!(correlation_sum(&t, 1, 1).unwrap(), 3);
    let d3 = d3_by_triples(20_000);
    let expected: u64 = (1..=10).map(|n| d3[n] * d3[n + 1]).sum();
    assert_eq!(correlation_sum(&t, 10, 1).unwrap(), expected);
    let expected: u64 = (1..=10_000).map(|n| d3[n] * d3[n + 2]).sum();
    assert_eq!(correlation_sum(&t, 10_000, 2).unwrap(), expected);
    let shifted: u64 = (3..=10_002).map(|m| d3[m - 2] * d3[m]).sum();
    assert_eq!(expected, shifted);
}

#[test]
fn correlation_needs_range() {
    let t = DivisorTable::new(100).unwrap();
    assert!(correlation_sum(&t, 99, 1).is_ok());
    assert!(matches!(
        correlation_sum(&t, 99, 2),
        Err(LabError::SieveTooSmall { .. })
    ));
}

#[test]
fn euler_product_small_limits() {
    let a = a3_direct(2).unwrap();
    assert!((a.partial_product - 0.203_125).abs() < 1e-15);
    let b = a3_direct(3).unwrap();
    let expected = 13.0 / 64.0 * (2.0f64 / 3.0).powi(4) * (22.0 / 9.0);
    assert!((b.partial_product - expected).abs() < 1e-15);
    assert!(a3_direct(1).is_err());
}

#[test]
fn euler_product_monotone_and_bounded() {
    let mut prev = f64::INFINITY;
    let mut prev_bound = f64::INFINITY;
    for limit in [5u64, 7, 11, 50, 100, 1000, 10_000] {
        let v = a3_direct(limit).unwrap();
        assert!(v.value > 0.0 && v.value < 1.0);
        assert!(v.partial_product <= prev);
        assert!(v.tail_bound < prev_bound);
        prev = v.partial_product;
        prev_bound = v.tail_bound;
    }
}

#[test]
fn expansion_has_no_linear_term() {
    assert_eq!(a3_expansion_coefficient(1), 0.0);
    assert!((a3_expansion_coefficient(2) + 9.0).abs() < 1e-14);
}

#[test]
fn accelerated_depths_agree_within_bounds() {
    let shallow = a3_accelerated(2, 1000).unwrap();
    let deep = a3_accelerated(12, 1000).unwrap();
    let gap = (shallow.log_value - deep.log_value).abs();
    assert!(gap <= shallow.tail_bound + deep.tail_bound, "{gap:e}");
    assert!(deep.tail_bound < shallow.tail_bound);
}

#[test]
fn direct_and_accelerated_agree_within_bounds() {
    let direct = a3_direct(1_000_000).unwrap();
    let fast = a3_accelerated(24, 1000).unwrap();
    let gap = (direct.log_value - fast.log_value).abs();
    assert!(gap <= direct.tail_bound + fast.tail_bound);
    let raw_gap = (direct.partial_product.ln() - fast.log_value).abs();
    assert!(raw_gap <= direct.partial_tail_bound + fast.tail_bound);
}

#[test]
fn prime_zeta_values() {
    let p60 = prime_zeta(60, 1e-30).unwrap();
    assert!((p60 - 2f64.powi(-60)).abs() < 2.0 * 3f64.powi(-60));
    assert!(prime_zeta(1, 1e-12).is_err());

    let y = 10_000_000u64;
    let direct: f64 = primes_up_to(y)
        .iter()
        .rev()
        .map(|&p| (p as f64).powi(-2))
        .sum();
    let gap = prime_zeta(2, 1e-15).unwrap() - direct;
    assert!(gap >= -1e-14 && gap <= 1.0 / (y as f64 - 1.0), "{gap:e}");

    let coarse = prime_zeta(3, 1e-12).unwrap();
    let fine = prime_zeta(3, 1e-24).unwrap();
    assert!((coarse - fine).abs() < 1e-12);
}
