use std::fmt;

use serde::{Deserialize, Serialize};

use super::field::{ramification, QuadraticField, RamificationKind};
use crate::arith::{divisor_count, factor};
use crate::entropy::{
    divergence_of_exponents, entropy_of_exponents, permute, shannon_form_of_exponents,
};
use crate::error::{Error, Result};

/// A prime ideal above the rational prime `p`. `conjugate` is 1, or 2 for the
/// second factor of a split prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimeIdealLabel {
    pub p: u64,
    pub conjugate: u32,
}

impl PrimeIdealLabel {
    pub fn new(p: u64, conjugate: u32) -> Self {
        Self { p, conjugate }
    }
}

impl fmt::Display for PrimeIdealLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P({},{})", self.p, self.conjugate)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealFactor {
    pub label: PrimeIdealLabel,
    /// exponent of the prime ideal in the factorization
    pub e: u64,
    /// residue degree
    pub f: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FieldContext {
    Quadratic(QuadraticField),
    Abstract,
}

/// `I = P_1^{e_1} ⋯ P_g^{e_g}` with factors sorted by label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IdealFactorization {
    context: FieldContext,
    factors: Vec<IdealFactor>,
}

impl IdealFactorization {
    fn new(context: FieldContext, mut factors: Vec<IdealFactor>) -> Self {
        factors.sort_by_key(|fac| fac.label);
        Self { context, factors }
    }

    pub fn context(&self) -> FieldContext {
        self.context
    }

    pub fn factors(&self) -> &[IdealFactor] {
        &self.factors
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.factors.iter().map(|fac| fac.e).collect()
    }

    /// Ω(I) = Σ e_i.
    pub fn big_omega(&self) -> u64 {
        self.factors.iter().map(|fac| fac.e).sum()
    }

    /// ω(I): number of distinct prime ideals.
    pub fn omega(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    fn with_exponents(&self, exps: &[u64]) -> Self {
        let factors = self
            .factors
            .iter()
            .zip(exps)
            .map(|(fac, &e)| IdealFactor { e, ..*fac })
            .collect();
        Self {
            context: self.context,
            factors,
        }
    }
}

impl fmt::Display for IdealFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("(1)");
        }
        for (i, fac) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write!(f, "{}", fac.label)?;
            if fac.e != 1 {
                write!(f, "^{}", fac.e)?;
            }
        }
        Ok(())
    }
}

/// Decomposition of `pO_K`.
pub fn factor_prime_ideal(field: &QuadraticField, p: u64) -> Result<IdealFactorization> {
    prime_power_ideal(field, p, 1)
}

fn prime_power_ideal(field: &QuadraticField, p: u64, a: u64) -> Result<IdealFactorization> {
    let factors = prime_power_factors(field, p, a)?;
    Ok(IdealFactorization::new(
        FieldContext::Quadratic(*field),
        factors,
    ))
}

fn prime_power_factors(field: &QuadraticField, p: u64, a: u64) -> Result<Vec<IdealFactor>> {
    let label = PrimeIdealLabel::new(p, 1);
    Ok(match ramification(field, p)?.kind {
        RamificationKind::Split => vec![
            IdealFactor { label, e: a, f: 1 },
            IdealFactor {
                label: PrimeIdealLabel::new(p, 2),
                e: a,
                f: 1,
            },
        ],
        RamificationKind::Inert => vec![IdealFactor { label, e: a, f: 2 }],
        RamificationKind::Ramified => vec![IdealFactor {
            label,
            e: 2 * a,
            f: 1,
        }],
    })
}

/// Decomposition of the principal ideal `mO_K`, prime by prime.
pub fn factor_principal(field: &QuadraticField, m: u64) -> Result<IdealFactorization> {
    if m < 2 {
        return Err(Error::TooSmall {
            what: "principal ideal",
            min: 2,
            got: m,
        });
    }
    let mut factors = Vec::new();
    for pp in factor(m)?.powers() {
        factors.extend(prime_power_factors(field, pp.prime, pp.exp)?);
    }
    Ok(IdealFactorization::new(
        FieldContext::Quadratic(*field),
        factors,
    ))
}

/// An ideal of an abstract Dedekind domain given by its decomposition shape.
pub fn from_exponents(
    labels: &[PrimeIdealLabel],
    e: &[u64],
    f: &[u64],
) -> Result<IdealFactorization> {
    if labels.len() != e.len() || labels.len() != f.len() {
        return Err(Error::LengthMismatch(
            "labels, exponents and residue degrees",
        ));
    }
    if e.contains(&0) || f.contains(&0) {
        return Err(Error::ZeroExponent);
    }
    let mut sorted = labels.to_vec();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLabel {
            p: w[0].p,
            conjugate: w[0].conjugate,
        });
    }
    let factors = labels
        .iter()
        .zip(e.iter().zip(f))
        .map(|(&label, (&e, &f))| IdealFactor { label, e, f })
        .collect();
    Ok(IdealFactorization::new(FieldContext::Abstract, factors))
}

/// `H(I) = log Ω(I) − (1/Ω(I)) Σ e_i log e_i`.
pub fn ideal_entropy(ideal: &IdealFactorization) -> Result<f64> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    Ok(entropy_of_exponents(&ideal.exponents()))
}

/// `H(I)` as `−Σ (e_i/Ω) log(e_i/Ω)`.
pub fn ideal_entropy_shannon_form(ideal: &IdealFactorization) -> Result<f64> {
    if ideal.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    Ok(shannon_form_of_exponents(&ideal.exponents()))
}

/// `D(I || J)`, pairing prime ideals in canonical label order.
pub fn ideal_divergence(i: &IdealFactorization, j: &IdealFactorization) -> Result<f64> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    divergence_of_exponents(&i.exponents(), &j.exponents())
}

/// `D(I || J)` pairing the `k`-th factor of `I` with factor `pairing[k]` of `J`.
pub fn ideal_divergence_with_pairing(
    i: &IdealFactorization,
    j: &IdealFactorization,
    pairing: &[usize],
) -> Result<f64> {
    if i.is_empty() || j.is_empty() {
        return Err(Error::EmptyIdeal);
    }
    if i.omega() != j.omega() {
        return Err(Error::OmegaMismatch {
            left: i.omega(),
            right: j.omega(),
        });
    }
    let paired = permute(&j.exponents(), pairing)?;
    divergence_of_exponents(&i.exponents(), &paired)
}

/// γ(I): every exponent set to 1.
pub fn ideal_radical(ideal: &IdealFactorization) -> IdealFactorization {
    ideal.with_exponents(&vec![1; ideal.omega()])
}

/// τ(I) = ∏ (e_i + 1).
pub fn ideal_tau(ideal: &IdealFactorization) -> u64 {
    ideal.factors.iter().map(|fac| fac.e + 1).product()
}

/// τ^(e)(I) = ∏ τ(e_i).
pub fn ideal_tau_e(ideal: &IdealFactorization) -> u64 {
    ideal
        .factors
        .iter()
        .map(|fac| divisor_count(fac.e))
        .product()
}

/// Exponential divisors `∏ P_i^{β_i}` with `β_i | e_i`, in lexicographic order
/// of the exponent vector.
pub fn ideal_exp_divisors(ideal: &IdealFactorization) -> Vec<IdealFactorization> {
    let mut vectors: Vec<Vec<u64>> = vec![Vec::new()];
    for fac in &ideal.factors {
        let choices: Vec<u64> = (1..=fac.e).filter(|b| fac.e % b == 0).collect();
        vectors = vectors
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&b| {
                    let mut next = prefix.clone();
                    next.push(b);
                    next
                })
            })
            .collect();
    }
    vectors.iter().map(|v| ideal.with_exponents(v)).collect()
}
