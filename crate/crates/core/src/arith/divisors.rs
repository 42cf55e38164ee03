use super::factorization::{factor, Factorization, PrimePower};
use crate::error::{Error, Result};

/// Number of positive divisors of a small integer, by pairing `d` with `a/d`.
pub fn divisor_count(a: u64) -> u64 {
    divisors_of(a).len() as u64
}

fn divisors_of(a: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= a {
        if a.is_multiple_of(d) {
            small.push(d);
            if d * d != a {
                large.push(a / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// τ(n) = ∏ (α_i + 1).
pub fn tau(n: u64) -> Result<u64> {
    Ok(factor(n)?.powers().iter().map(|pp| pp.exp + 1).product())
}

/// τ^(e)(n) = ∏ τ(α_i); 1 for `n = 1`.
pub fn tau_e(f: &Factorization) -> u64 {
    f.powers().iter().map(|pp| divisor_count(pp.exp)).product()
}

/// All exponential divisors `∏ p_i^{β_i}` with `β_i | α_i`, ascending by value.
pub fn exp_divisors(f: &Factorization) -> Result<Vec<Factorization>> {
    if f.is_one() {
        return Err(Error::TooSmall {
            what: "exponential divisors",
            min: 2,
            got: 1,
        });
    }
    if f.value().is_none() {
        return Err(Error::Overflow);
    }
    let mut acc: Vec<Vec<PrimePower>> = vec![Vec::new()];
    for pp in f.powers() {
        let choices = divisors_of(pp.exp);
        acc = acc
            .into_iter()
            .flat_map(|prefix| {
                choices.iter().map(move |&b| {
                    let mut next = prefix.clone();
                    next.push(PrimePower {
                        prime: pp.prime,
                        exp: b,
                    });
                    next
                })
            })
            .collect();
    }
    let mut divisors: Vec<(u64, Factorization)> = acc
        .into_iter()
        .map(|powers| {
            let d = Factorization::from_pairs(powers.iter().map(|pp| (pp.prime, pp.exp)))
                .expect("sub-exponents of a valid factorization");
            // d | n and n fits, so d fits
            (d.value().unwrap(), d)
        })
        .collect();
    divisors.sort_by_key(|(v, _)| *v);
    Ok(divisors.into_iter().map(|(_, d)| d).collect())
}

/// True iff every exponent is at most `k - 1`.
pub fn is_k_free(f: &Factorization, k: u64) -> Result<bool> {
    if k < 2 {
        return Err(Error::KTooSmall(k));
    }
    Ok(f.powers().iter().all(|pp| pp.exp < k))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn values(fs: &[Factorization]) -> Vec<u64> {
        fs.iter().map(|f| f.value().unwrap()).collect()
    }

    #[test]
    fn tau_matches_brute_force() {
        assert_eq!(tau(1).unwrap(), 1);
        assert_eq!(tau(2).unwrap(), 2);
        assert_eq!(tau(12).unwrap(), 6);
        for n in 1..=10_000u64 {
            let brute = (1..=n).filter(|d| n % d == 0).count() as u64;
            assert_eq!(tau(n).unwrap(), brute, "n = {n}");
        }
    }

    #[test]
    fn exp_divisor_examples() {
        assert_eq!(
            values(&exp_divisors(&factor(12).unwrap()).unwrap()),
            vec![6, 12]
        );
        assert_eq!(
            values(&exp_divisors(&factor(97).unwrap()).unwrap()),
            vec![97]
        );
        assert_eq!(
            values(&exp_divisors(&factor(180).unwrap()).unwrap()),
            vec![30, 60, 90, 180]
        );
        assert!(exp_divisors(&Factorization::one()).is_err());
    }

    #[test]
    fn tau_e_examples() {
        assert_eq!(tau_e(&Factorization::one()), 1);
        assert_eq!(tau_e(&factor(40).unwrap()), 2);
        assert_eq!(tau_e(&factor(100).unwrap()), 4);
    }

    #[test]
    fn exp_divisors_count_and_shape() {
        for n in 2..=10_000u64 {
            let f = factor(n).unwrap();
            let ds = exp_divisors(&f).unwrap();
            assert_eq!(ds.len() as u64, tau_e(&f), "n = {n}");
            // brute force over all divisors of n with matching support and β | α
            let brute: Vec<u64> = (1..=n)
                .filter(|&d| n % d == 0)
                .filter(|&d| {
                    let fd = factor(d).unwrap();
                    fd.omega() == f.omega()
                        && fd
                            .powers()
                            .iter()
                            .zip(f.powers())
                            .all(|(b, a)| b.prime == a.prime && a.exp % b.exp == 0)
                })
                .collect();
            assert_eq!(values(&ds), brute, "n = {n}");
        }
    }

    #[test]
    fn k_free() {
        assert!(is_k_free(&factor(30).unwrap(), 2).unwrap());
        assert!(!is_k_free(&factor(8).unwrap(), 2).unwrap());
        assert!(is_k_free(&factor(180).unwrap(), 3).unwrap());
        assert_eq!(is_k_free(&factor(8).unwrap(), 1), Err(Error::KTooSmall(1)));
    }
}
