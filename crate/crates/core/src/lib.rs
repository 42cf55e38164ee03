//! Entropy and Kullback–Leibler divergence of positive integers and of ideals
//! in rings of integers of quadratic fields.
//!
//! The exponent vector of a factorization `n = p1^a1 ... pr^ar` is read as the
//! probability distribution `ai / Ω(n)`. [`entropy`] collects the integer
//! theory, [`ideals`] lifts it to ideal factorizations, and [`verifier`] scans
//! every claimed identity and inequality exhaustively over finite ranges.

pub mod arith;
pub mod cli;
pub mod entropy;
mod error;
pub mod ideals;
pub mod verifier;

pub use arith::{factor, is_prime, Factorization, PrimePower};
pub use error::{Error, Result};
