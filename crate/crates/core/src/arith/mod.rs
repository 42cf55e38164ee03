//! Exact 64-bit integer arithmetic: primality, factorization, multiplicative
//! functions, exponential divisors and the Kronecker symbol.

mod divisors;
mod factorization;
mod primality;
mod symbols;

pub use divisors::{divisor_count, exp_divisors, is_k_free, tau, tau_e};
pub use factorization::{factor, Factorization, PrimePower};
pub use primality::{gcd, is_prime, small_primes};
pub use symbols::kronecker;

/// Ω(n): prime factors counted with multiplicity.
pub fn big_omega(f: &Factorization) -> u64 {
    f.big_omega()
}

/// ω(n): number of distinct prime factors.
pub fn omega(f: &Factorization) -> u64 {
    f.omega() as u64
}

/// γ(n): same primes, every exponent 1.
pub fn radical(f: &Factorization) -> Factorization {
    f.radical()
}
