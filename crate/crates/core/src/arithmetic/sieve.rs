use serde::Serialize;

use crate::{LabError, Result};

/// Sieved values of `d(n)` and `d_3(n)` for `1 <= n <= limit`.
///
/// Memory use is eight bytes per entry; limits up to `10^8` are practical,
/// `10^9` and beyond are not supported.
///
/// The table is immutable once built and can be shared freely between
/// threads.
#[derive(Debug, Clone, Serialize)]
pub struct DivisorTable {
    limit: usize,
    // Index 0 is unused so that `d[n]` is the value at `n`.
    d: Vec<u32>,
    d3: Vec<u32>,
}

impl DivisorTable {
    /// Builds both tables by summing over multiples: `d = 1 * 1` and
    /// `d_3 = d * 1` as Dirichlet convolutions, `O(limit log limit)`.
    pub fn new(limit: usize) -> Result<Self> {
        if limit == 0 {
            return Err(LabError::EmptySieve);
        }
        let mut d = vec![0u32; limit + 1];
        for i in 1..=limit {
            for j in (i..=limit).step_by(i) {
                d[j] += 1;
            }
        }
        let mut d3 = vec![0u32; limit + 1];
        for (i, &di) in d.iter().enumerate().skip(1) {
            for j in (i..=limit).step_by(i) {
                d3[j] += di;
            }
        }
        Ok(Self { limit, d, d3 })
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    /// Number of divisors of `n`. Panics when `n` is 0 or beyond the limit.
    pub fn d(&self, n: usize) -> u32 {
        assert!(
            n >= 1 && n <= self.limit,
            "n = {n} outside 1..={}",
            self.limit
        );
        self.d[n]
    }

    /// Number of ordered factorisations `n = abc`.
    pub fn d3(&self, n: usize) -> u32 {
        assert!(
            n >= 1 && n <= self.limit,
            "n = {n} outside 1..={}",
            self.limit
        );
        self.d3[n]
    }

    /// `d(1..=limit)` as a slice, `d_values()[n - 1] == d(n)`.
    pub fn d_values(&self) -> &[u32] {
        &self.d[1..]
    }

    pub fn d3_values(&self) -> &[u32] {
        &self.d3[1..]
    }

    pub(crate) fn require(&self, needed: u64) -> Result<()> {
        if needed > self.limit as u64 {
            Err(LabError::SieveTooSmall {
                needed,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }
}

pub fn sieve_divisor_tables(limit: usize) -> Result<DivisorTable> {
    DivisorTable::new(limit)
}

/// Exact shifted convolution `sum_{n <= x} d_3(n) d_3(n + h)`.
pub fn correlation_sum(table: &DivisorTable, x: u64, h: u64) -> Result<u64> {
    if x == 0 || h == 0 {
        return Err(LabError::invalid("correlation sums need x >= 1 and h >= 1"));
    }
    let end = x
        .checked_add(h)
        .ok_or(LabError::Overflow("the range x + h"))?;
    table.require(end)?;
    let (x, h) = (x as usize, h as usize);
    let d3 = &table.d3;
    let mut acc: u64 = 0;
    for n in 1..=x {
        let term = u64::from(d3[n]) * u64::from(d3[n + h]);
        acc = acc
            .checked_add(term)
            .ok_or(LabError::Overflow("a correlation sum"))?;
    }
    Ok(acc)
}
