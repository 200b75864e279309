use std::sync::OnceLock;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, ToPrimitive, Zero};

/// Largest `k` for which `B_{2k}` is tabulated.
pub(crate) const MAX_HALF_INDEX: usize = 60;

struct Table {
    b2k: Vec<f64>,
    b2k_over_fact: Vec<f64>,
}

fn table() -> &'static Table {
    static TABLE: OnceLock<Table> = OnceLock::new();
    TABLE.get_or_init(|| {
        let n = 2 * MAX_HALF_INDEX;
        // B_m = -1/(m+1) sum_{j<m} binom(m+1, j) B_j, exact
        let mut b: Vec<BigRational> = Vec::with_capacity(n + 1);
        b.push(BigRational::one());
        for m in 1..=n {
            let mut binom = BigInt::one();
            let mut acc = BigRational::zero();
            for (j, bj) in b.iter().enumerate() {
                acc += BigRational::from_integer(binom.clone()) * bj;
                binom = binom * BigInt::from(m + 1 - j) / BigInt::from(j + 1);
            }
            b.push(-acc / BigRational::from_integer(BigInt::from(m + 1)));
        }
        let mut fact = BigInt::one();
        let mut b2k = Vec::with_capacity(MAX_HALF_INDEX + 1);
        let mut b2k_over_fact = Vec::with_capacity(MAX_HALF_INDEX + 1);
        for (m, bm) in b.iter().enumerate() {
            if m > 0 {
                fact *= BigInt::from(m);
            }
            if m % 2 == 0 {
                b2k.push(bm.to_f64().expect("finite"));
                let q = bm / BigRational::from_integer(fact.clone());
                b2k_over_fact.push(q.to_f64().expect("finite"));
            }
        }
        Table { b2k, b2k_over_fact }
    })
}

/// `B_{2k}`.
pub(crate) fn b2k(k: usize) -> f64 {
    table().b2k[k]
}

/// `B_{2k} / (2k)!`.
pub(crate) fn b2k_over_fact(k: usize) -> f64 {
    table().b2k_over_fact[k]
}
