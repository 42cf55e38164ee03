//! Ideals in rings of integers of quadratic fields.
//!
//! Prime ideals are carried as labels `(p, conjugate)` rather than by
//! generators: every quantity here depends only on the shape of the
//! factorization `I = P_1^{e_1} ⋯ P_g^{e_g}`. Split primes get labels
//! `(p, 1)` and `(p, 2)`; which conjugate is which is arbitrary and nothing
//! computed depends on it. [`from_exponents`] builds the same shapes for an
//! abstract Dedekind domain.

mod field;
mod ideal;

pub use field::{make_field, ramification, QuadraticField, RamificationData, RamificationKind};
pub use ideal::{
    factor_prime_ideal, factor_principal, from_exponents, ideal_divergence,
    ideal_divergence_with_pairing, ideal_entropy, ideal_entropy_shannon_form, ideal_exp_divisors,
    ideal_radical, ideal_tau, ideal_tau_e, FieldContext, IdealFactor, IdealFactorization,
    PrimeIdealLabel,
};
