use std::fmt;

use serde::{Deserialize, Serialize};

use super::primality::{is_prime, pollard_brent, small_primes, TRIAL_LIMIT};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PrimePower {
    pub prime: u64,
    pub exp: u64,
}

/// Canonical prime-power decomposition, sorted strictly ascending by prime.
///
/// The empty list is `n = 1`. The represented integer may exceed `u64`
/// (`p^α` with large `α` is a legitimate carrier for entropy work), so
/// [`Factorization::value`] is fallible.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factorization {
    powers: Vec<PrimePower>,
}

impl Factorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from `(prime, exponent)` pairs, checking
    /// primality, strict ordering and positive exponents.
    pub fn from_pairs<I>(pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (u64, u64)>,
    {
        let mut powers: Vec<PrimePower> = Vec::new();
        for (prime, exp) in pairs {
            if !is_prime(prime) {
                return Err(Error::NotPrime(prime));
            }
            if exp == 0 {
                return Err(Error::ZeroExponent);
            }
            if powers.last().is_some_and(|last| last.prime >= prime) {
                return Err(Error::Unsorted);
            }
            powers.push(PrimePower { prime, exp });
        }
        Ok(Self { powers })
    }

    pub fn powers(&self) -> &[PrimePower] {
        &self.powers
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.powers.iter().map(|pp| pp.prime)
    }

    pub fn exponents(&self) -> Vec<u64> {
        self.powers.iter().map(|pp| pp.exp).collect()
    }

    pub fn is_one(&self) -> bool {
        self.powers.is_empty()
    }

    pub fn big_omega(&self) -> u64 {
        self.powers.iter().map(|pp| pp.exp).sum()
    }

    pub fn omega(&self) -> usize {
        self.powers.len()
    }

    pub fn radical(&self) -> Self {
        Self {
            powers: self
                .powers
                .iter()
                .map(|pp| PrimePower {
                    prime: pp.prime,
                    exp: 1,
                })
                .collect(),
        }
    }

    pub fn is_squarefree(&self) -> bool {
        self.powers.iter().all(|pp| pp.exp == 1)
    }

    /// `n^k`. Panics if `k == 0`.
    pub fn pow(&self, k: u64) -> Self {
        assert!(k >= 1, "exponent must be positive");
        Self {
            powers: self
                .powers
                .iter()
                .map(|pp| PrimePower {
                    prime: pp.prime,
                    exp: pp.exp * k,
                })
                .collect(),
        }
    }

    /// Product of two factorizations (exponents of shared primes add).
    pub fn mul(&self, other: &Self) -> Self {
        let mut powers = Vec::with_capacity(self.powers.len() + other.powers.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.powers, &other.powers);
        while i < a.len() && j < b.len() {
            match a[i].prime.cmp(&b[j].prime) {
                std::cmp::Ordering::Less => {
                    powers.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    powers.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    powers.push(PrimePower {
                        prime: a[i].prime,
                        exp: a[i].exp + b[j].exp,
                    });
                    i += 1;
                    j += 1;
                }
            }
        }
        powers.extend_from_slice(&a[i..]);
        powers.extend_from_slice(&b[j..]);
        Self { powers }
    }

    /// `n · p^α`. `p` must be prime; its exponent is added to any existing one.
    pub fn with_prime_power(&self, p: u64, alpha: u64) -> Result<Self> {
        let extra = Self::from_pairs([(p, alpha)])?;
        Ok(self.mul(&extra))
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.powers.len() && j < other.powers.len() {
            match self.powers[i].prime.cmp(&other.powers[j].prime) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.powers.iter().all(|pp| {
            other
                .powers
                .iter()
                .any(|q| q.prime == pp.prime && q.exp >= pp.exp)
        })
    }

    /// Smallest prime not dividing `n`.
    pub fn smallest_coprime_prime(&self) -> u64 {
        let mut p = 2;
        loop {
            if is_prime(p) && !self.primes().any(|q| q == p) {
                return p;
            }
            p += 1;
        }
    }

    /// The represented integer, or `None` if it does not fit in `u64`.
    pub fn value(&self) -> Option<u64> {
        self.powers.iter().try_fold(1u64, |acc, pp| {
            let exp = u32::try_from(pp.exp).ok()?;
            acc.checked_mul(pp.prime.checked_pow(exp)?)
        })
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.powers.is_empty() {
            return f.write_str("1");
        }
        for (i, pp) in self.powers.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if pp.exp == 1 {
                write!(f, "{}", pp.prime)?;
            } else {
                write!(f, "{}^{}", pp.prime, pp.exp)?;
            }
        }
        Ok(())
    }
}

/// Factors `n` by trial division up to 10^4, then Miller–Rabin and
/// Pollard–Brent on what remains.
pub fn factor(n: u64) -> Result<Factorization> {
    if n == 0 {
        return Err(Error::Zero);
    }
    let mut rest = n;
    let mut powers = Vec::new();
    for &p in small_primes() {
        if p * p > rest {
            break;
        }
        if rest.is_multiple_of(p) {
            let mut exp = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                exp += 1;
            }
            powers.push(PrimePower { prime: p, exp });
        }
    }
    if rest > 1 {
        let mut large = Vec::new();
        if rest < TRIAL_LIMIT * TRIAL_LIMIT {
            large.push(rest);
        } else {
            split_large(rest, &mut large);
        }
        large.sort_unstable();
        for p in large {
            match powers.last_mut() {
                Some(last) if last.prime == p => last.exp += 1,
                _ => powers.push(PrimePower { prime: p, exp: 1 }),
            }
        }
    }
    let f = Factorization { powers };
    debug_assert_eq!(f.value(), Some(n));
    Ok(f)
}

fn split_large(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = pollard_brent(n);
    split_large(d, out);
    split_large(n / d, out);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pairs(f: &Factorization) -> Vec<(u64, u64)> {
        f.powers().iter().map(|pp| (pp.prime, pp.exp)).collect()
    }

    #[test]
    fn worked_examples() {
        assert_eq!(pairs(&factor(40).unwrap()), vec![(2, 3), (5, 1)]);
        assert_eq!(pairs(&factor(90).unwrap()), vec![(2, 1), (3, 2), (5, 1)]);
        assert!(factor(1).unwrap().is_one());
        assert_eq!(factor(0), Err(Error::Zero));
    }

    #[test]
    fn reconstructs_up_to_1e5() {
        for n in 1..=100_000u64 {
            let f = factor(n).unwrap();
            assert_eq!(f.value(), Some(n));
            assert!(f.primes().all(is_prime));
            assert!(f.powers().windows(2).all(|w| w[0].prime < w[1].prime));
        }
    }

    #[test]
    fn large_cofactors() {
        let cases: [(u64, Vec<(u64, u64)>); 4] = [
            (
                u64::MAX,
                vec![
                    (3, 1),
                    (5, 1),
                    (17, 1),
                    (257, 1),
                    (641, 1),
                    (65537, 1),
                    (6_700_417, 1),
                ],
            ),
            (4_294_967_291 * 4_294_967_291, vec![(4_294_967_291, 2)]),
            (
                1_000_000_000_000_000_009,
                vec![(1_000_000_000_000_000_009, 1)],
            ),
            (
                10_007 * 10_009 * 1_000_003,
                vec![(10_007, 1), (10_009, 1), (1_000_003, 1)],
            ),
        ];
        for (n, expected) in cases {
            let f = factor(n).unwrap();
            assert_eq!(pairs(&f), expected, "n = {n}");
        }
    }

    #[test]
    fn from_pairs_validation() {
        assert_eq!(Factorization::from_pairs([(4, 1)]), Err(Error::NotPrime(4)));
        assert_eq!(
            Factorization::from_pairs([(3, 1), (2, 1)]),
            Err(Error::Unsorted)
        );
        assert_eq!(
            Factorization::from_pairs([(2, 0)]),
            Err(Error::ZeroExponent)
        );
        let big = Factorization::from_pairs([(97, 20)]).unwrap();
        assert_eq!(big.value(), None);
        assert_eq!(big.big_omega(), 20);
    }

    #[test]
    fn product_and_coprimality() {
        let a = factor(12).unwrap();
        let b = factor(18).unwrap();
        assert_eq!(a.mul(&b), factor(216).unwrap());
        assert!(!a.is_coprime(&b));
        assert!(a.is_coprime(&factor(35).unwrap()));
        assert_eq!(a.pow(3), factor(1728).unwrap());
        assert_eq!(factor(30).unwrap().smallest_coprime_prime(), 7);
        assert_eq!(factor(1).unwrap().smallest_coprime_prime(), 2);
        assert_eq!(factor(40).unwrap().to_string(), "2^3 * 5");
    }
}
