//! Entropy and divergence of positive integers.
//!
//! For `n = ∏ p_i^{α_i}` the weights `α_i / Ω(n)` form a probability
//! distribution over the distinct primes of `n`. `H(n)` is its Shannon entropy
//! and `D(n || m)` the Kullback–Leibler divergence against the distribution
//! of `m`, exponents paired by ascending prime position. All logarithms are
//! natural; [`LogBase`] converts for display only.
//!
//! The exponent-slice functions ([`entropy_of_exponents`] and friends) are the
//! shared kernel for the ideal-side theory in [`crate::ideals`].

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::{is_k_free, Factorization};
use crate::error::{Error, Result};

/// Robin's constant in `ω(n) ≤ c1 · log n / log log n` for `n ≥ 3`.
pub const ROBIN_C1: f64 = 1.38402;

/// Tolerance on `Σ w_i = 1` for [`ExponentDistribution`].
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-12;

/// Probability weights `w_i = α_i / Ω(n)`, one per distinct prime.
#[derive(Debug, Clone, PartialEq)]
pub struct ExponentDistribution {
    weights: Vec<f64>,
}

impl ExponentDistribution {
    pub fn from_weights(weights: Vec<f64>) -> Result<Self> {
        let sum: f64 = weights.iter().sum();
        let in_range = weights.iter().all(|&w| w > 0.0 && w <= 1.0);
        if weights.is_empty() || !in_range || (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::InvalidDistribution(sum));
        }
        Ok(Self { weights })
    }

    pub fn from_exponents(exps: &[u64]) -> Result<Self> {
        if exps.is_empty() {
            return Err(Error::InvalidDistribution(0.0));
        }
        if exps.contains(&0) {
            return Err(Error::ZeroExponent);
        }
        let total: u64 = exps.iter().sum();
        Self::from_weights(exps.iter().map(|&a| a as f64 / total as f64).collect())
    }

    pub fn from_factorization(f: &Factorization) -> Result<Self> {
        Self::from_exponents(&f.exponents())
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }
}

/// `−Σ w_i log w_i` in nats.
pub fn shannon_entropy(d: &ExponentDistribution) -> f64 {
    let h: f64 = d.weights.iter().map(|&w| -w * w.ln()).sum();
    // −1·ln 1 is −0.0
    h + 0.0
}

fn sum_a_log_a(exps: &[u64]) -> f64 {
    exps.iter().map(|&a| a as f64 * (a as f64).ln()).sum()
}

/// Closed-form entropy `log Ω − (1/Ω) Σ a log a` of an exponent vector.
///
/// Uniform vectors (all exponents equal, including a single exponent) return
/// `log(len)` directly, which is the exact value of the closed form. An empty
/// vector has entropy 0.
pub fn entropy_of_exponents(exps: &[u64]) -> f64 {
    let Some(&first) = exps.first() else {
        return 0.0;
    };
    if exps.iter().all(|&a| a == first) {
        return (exps.len() as f64).ln();
    }
    let total = exps.iter().sum::<u64>() as f64;
    total.ln() - sum_a_log_a(exps) / total
}

/// Entropy evaluated as `−Σ p log p` over the normalized weights.
pub fn shannon_form_of_exponents(exps: &[u64]) -> f64 {
    match ExponentDistribution::from_exponents(exps) {
        Ok(d) => shannon_entropy(&d),
        Err(_) => 0.0,
    }
}

/// `D(a || b) = log(Ω_b/Ω_a) − (1/Ω_a) Σ a_i log(b_i/a_i)` with `a_i` paired
/// against `b_i`.
pub fn divergence_of_exponents(a: &[u64], b: &[u64]) -> Result<f64> {
    if a.len() != b.len() {
        return Err(Error::OmegaMismatch {
            left: a.len(),
            right: b.len(),
        });
    }
    if a.is_empty() {
        return Err(Error::TooSmall {
            what: "divergence",
            min: 2,
            got: 1,
        });
    }
    if a.contains(&0) || b.contains(&0) {
        return Err(Error::ZeroExponent);
    }
    let omega_a = a.iter().sum::<u64>() as f64;
    let omega_b = b.iter().sum::<u64>() as f64;
    let cross: f64 = a
        .iter()
        .zip(b)
        .map(|(&x, &y)| x as f64 * (y as f64 / x as f64).ln())
        .sum();
    Ok((omega_b / omega_a).ln() - cross / omega_a)
}

/// `H(n)` in nats; `H(1) = 0`.
pub fn entropy(f: &Factorization) -> f64 {
    entropy_of_exponents(&f.exponents())
}

/// `H(n)` through the distribution definition, the second of the two
/// equivalent evaluation paths.
pub fn entropy_shannon_form(f: &Factorization) -> f64 {
    shannon_form_of_exponents(&f.exponents())
}

fn require_nontrivial(f: &Factorization, what: &'static str) -> Result<()> {
    if f.is_one() {
        Err(Error::TooSmall {
            what,
            min: 2,
            got: 1,
        })
    } else {
        Ok(())
    }
}

/// `D(n || m)` with exponents paired by ascending prime position.
pub fn divergence(n: &Factorization, m: &Factorization) -> Result<f64> {
    require_nontrivial(n, "divergence")?;
    require_nontrivial(m, "divergence")?;
    divergence_of_exponents(&n.exponents(), &m.exponents())
}

/// `D(n || m)` where the `i`-th prime of `n` is paired with prime
/// `pairing[i]` of `m`.
pub fn divergence_with_pairing(
    n: &Factorization,
    m: &Factorization,
    pairing: &[usize],
) -> Result<f64> {
    require_nontrivial(n, "divergence")?;
    require_nontrivial(m, "divergence")?;
    if n.omega() != m.omega() {
        return Err(Error::OmegaMismatch {
            left: n.omega(),
            right: m.omega(),
        });
    }
    let b = permute(&m.exponents(), pairing)?;
    divergence_of_exponents(&n.exponents(), &b)
}

pub(crate) fn permute(values: &[u64], pairing: &[usize]) -> Result<Vec<u64>> {
    let len = values.len();
    let mut seen = vec![false; len];
    if pairing.len() != len {
        return Err(Error::InvalidPairing(len));
    }
    for &j in pairing {
        if j >= len || std::mem::replace(&mut seen[j], true) {
            return Err(Error::InvalidPairing(len));
        }
    }
    Ok(pairing.iter().map(|&j| values[j]).collect())
}

/// `D(n || m) = H(m) − H(n) + Σ (β_i/Ω(m) − α_i/Ω(n)) log β_i`, the divergence
/// rewritten through the two entropies.
pub fn divergence_entropy_form(n: &Factorization, m: &Factorization) -> Result<f64> {
    require_nontrivial(n, "divergence")?;
    require_nontrivial(m, "divergence")?;
    if n.omega() != m.omega() {
        return Err(Error::OmegaMismatch {
            left: n.omega(),
            right: m.omega(),
        });
    }
    let (a, b) = (n.exponents(), m.exponents());
    let omega_n = n.big_omega() as f64;
    let omega_m = m.big_omega() as f64;
    let correction: f64 = a
        .iter()
        .zip(&b)
        .map(|(&x, &y)| (y as f64 / omega_m - x as f64 / omega_n) * (y as f64).ln())
        .sum();
    Ok(entropy(m) - entropy(n) + correction)
}

/// `D(n || γ(n)) = log ω(n) − H(n)`.
pub fn divergence_to_radical(f: &Factorization) -> Result<f64> {
    require_nontrivial(f, "divergence to the radical")?;
    Ok((f.omega() as f64).ln() - entropy(f))
}

/// `H(n p^α)` for a prime `p` coprime to `n`, from `H(n)`, `Ω(n)` and `α`
/// alone.
pub fn append_prime_power_entropy(f: &Factorization, alpha: u64) -> Result<f64> {
    require_nontrivial(f, "appending a prime power")?;
    if alpha == 0 {
        return Err(Error::ZeroExponent);
    }
    let omega = f.big_omega() as f64;
    let a = alpha as f64;
    let total = omega + a;
    Ok(omega * entropy(f) / total + total.ln() - (omega * omega.ln() + a * a.ln()) / total)
}

fn coprime_inputs(m: &Factorization, n: &Factorization) -> Result<()> {
    require_nontrivial(m, "coprime gap")?;
    require_nontrivial(n, "coprime gap")?;
    if !m.is_coprime(n) {
        return Err(Error::NotCoprime);
    }
    Ok(())
}

/// `H(mn) − H(m) − H(n)` for coprime `m, n ≥ 2`, from the exponent sums:
///
/// `Ω(n)/(Ω(m)S) Σ_m β log β + Ω(m)/(Ω(n)S) Σ_n α log α − log(Ω(m)Ω(n)/S)`
/// with `S = Ω(m) + Ω(n)`.
pub fn coprime_gap(m: &Factorization, n: &Factorization) -> Result<f64> {
    coprime_inputs(m, n)?;
    let om = m.big_omega() as f64;
    let on = n.big_omega() as f64;
    let s = om + on;
    Ok(
        on / (om * s) * sum_a_log_a(&m.exponents()) + om / (on * s) * sum_a_log_a(&n.exponents())
            - (om * on / s).ln(),
    )
}

/// `H(mn) − H(m) − H(n)` for coprime `m, n`, expressed through `H(m)` and
/// `H(n)` instead of the exponent sums.
pub fn coprime_gap_entropy_form(m: &Factorization, n: &Factorization) -> Result<f64> {
    coprime_inputs(m, n)?;
    let om = m.big_omega() as f64;
    let on = n.big_omega() as f64;
    let s = om + on;
    Ok((on * om.ln() + om * on.ln()) / s
        - (on * entropy(m) + om * entropy(n)) / s
        - (om * on / s).ln())
}

/// `D(n p^α || n p^β)` for a prime `p` coprime to `n`.
pub fn shift_divergence(f: &Factorization, alpha: u64, beta: u64) -> Result<f64> {
    let h_alpha = append_prime_power_entropy(f, alpha)?;
    let h_beta = append_prime_power_entropy(f, beta)?;
    let omega = f.big_omega() as f64;
    let (a, b) = (alpha as f64, beta as f64);
    Ok(h_beta - h_alpha
        + (a - b) * omega * (omega.ln() - entropy(f) - b.ln()) / ((omega + a) * (omega + b)))
}

/// `log log n − log log log n + log c1`, an upper bound for `log ω(n)`.
pub fn robin_rhs(n: u64) -> Result<f64> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "Robin's bound",
            min: 3,
            got: n,
        });
    }
    let ll = (n as f64).ln().ln();
    Ok(ll - ll.ln() + ROBIN_C1.ln())
}

/// Entropy bracket for a `k`-free integer.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct KFreeBounds {
    /// `log Ω(n) − (ω(n)/Ω(n)) (k−1) log(k−1)`
    pub lower: f64,
    /// `log ω(n)`
    pub upper: f64,
}

impl KFreeBounds {
    /// Upper bound on `D(n || γ(n))`, i.e. `log ω − lower`.
    pub fn divergence_upper(&self) -> f64 {
        self.upper - self.lower
    }
}

pub fn kfree_entropy_bounds(f: &Factorization, k: u64) -> Result<KFreeBounds> {
    if !is_k_free(f, k)? {
        return Err(Error::NotKFree(k));
    }
    require_nontrivial(f, "k-free bounds")?;
    let omega = f.omega() as f64;
    let big = f.big_omega() as f64;
    let km1 = (k - 1) as f64;
    // k = 2: (k−1) log(k−1) = 0
    let lower = big.ln() - omega / big * km1 * km1.ln();
    Ok(KFreeBounds {
        lower,
        upper: omega.ln(),
    })
}

/// `Ω(n) e^{−H(n)}`, evaluated as `∏ α_i^{α_i/Ω(n)}`.
pub fn entropy_threshold(f: &Factorization) -> Result<f64> {
    require_nontrivial(f, "entropy threshold")?;
    let omega = f.big_omega() as f64;
    Ok((sum_a_log_a(&f.exponents()) / omega).exp())
}

/// Predicted order between `H(n p^α)` and `H(n p^β)` for `α ≥ β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GrowthOrdering {
    /// `H(n p^α) ≤ H(n p^β)`: both exponents sit at or above the threshold.
    AtMost,
    /// `H(n p^α) ≥ H(n p^β)`: both exponents sit at or below the threshold.
    AtLeast,
    /// The threshold lies strictly between `β` and `α`.
    Inconclusive,
}

impl GrowthOrdering {
    /// Whether the prediction agrees with the measured entropies, up to
    /// `slack`.
    pub fn is_consistent(self, h_alpha: f64, h_beta: f64, slack: f64) -> bool {
        match self {
            Self::AtMost => h_alpha <= h_beta + slack,
            Self::AtLeast => h_alpha + slack >= h_beta,
            Self::Inconclusive => true,
        }
    }
}

impl fmt::Display for GrowthOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::AtMost => "<=",
            Self::AtLeast => ">=",
            Self::Inconclusive => "inconclusive",
        })
    }
}

pub fn compare_exponent_growth(f: &Factorization, alpha: u64, beta: u64) -> Result<GrowthOrdering> {
    if beta == 0 {
        return Err(Error::ZeroExponent);
    }
    if alpha < beta {
        return Err(Error::AlphaBelowBeta { alpha, beta });
    }
    let threshold = entropy_threshold(f)?;
    Ok(if beta as f64 >= threshold {
        GrowthOrdering::AtMost
    } else if alpha as f64 <= threshold {
        GrowthOrdering::AtLeast
    } else {
        GrowthOrdering::Inconclusive
    })
}

/// Display unit for information quantities.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum LogBase {
    #[default]
    Nats,
    Bits,
    Hartleys,
}

impl LogBase {
    pub fn convert(self, nats: f64) -> f64 {
        match self {
            Self::Nats => nats,
            Self::Bits => nats / std::f64::consts::LN_2,
            Self::Hartleys => nats / std::f64::consts::LN_10,
        }
    }

    pub fn unit(self) -> &'static str {
        match self {
            Self::Nats => "nats",
            Self::Bits => "bits",
            Self::Hartleys => "hartleys",
        }
    }
}
