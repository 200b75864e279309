//! Exact integer sieves and the arithmetic constant `a_3`.

mod euler;
mod prime_zeta;
mod primes;
mod sieve;

pub use euler::{
    a3_accelerated, a3_direct, a3_expansion_coefficient, a3_local_log_factor, a3_reference,
    EulerProductValue,
};
pub use prime_zeta::prime_zeta;
pub use primes::{for_each_prime, mobius_table, primes_up_to};
pub use sieve::{correlation_sum, sieve_divisor_tables, DivisorTable};
