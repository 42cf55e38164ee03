use std::collections::BTreeMap;

use super::scan::{
    at_least, at_most, exact, exponent_vectors, factor_table, failed, greater, identity, int, less,
    primes_up_to, subsets, Scan, Sink,
};
use crate::arith::{exp_divisors, factor, gcd, is_k_free, tau_e, Factorization};
use crate::entropy::{
    append_prime_power_entropy, compare_exponent_growth, coprime_gap, coprime_gap_entropy_form,
    divergence, divergence_entropy_form, divergence_to_radical, entropy, entropy_shannon_form,
    entropy_threshold, kfree_entropy_bounds, robin_rhs, shift_divergence, GrowthOrdering,
};
use crate::error::Result;

/// Value `Q` must fall below at the top of the decay ladder.
pub(crate) const DECAY_TARGET: f64 = 0.01;
const DECAY_PRIME: u64 = 10007;
const DECAY_N_MAX: u64 = 50;

fn ln_omega(f: &Factorization) -> f64 {
    (f.omega() as f64).ln()
}

fn prime_power(p: u64, k: u64) -> Result<Factorization> {
    Factorization::from_pairs([(p, k)])
}

fn product(parts: &[(u64, u64)]) -> Result<Factorization> {
    let mut acc = Factorization::one();
    for &(p, k) in parts {
        acc = acc.mul(&prime_power(p, k)?);
    }
    Ok(acc)
}

fn value(f: &Factorization) -> i64 {
    f.value().map_or(-1, int)
}

pub(crate) fn entropy_bound(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(2..=s.single(100_000), |n, sink| {
        let inputs = [int(n)];
        sink.try_record(&inputs, || {
            let f = factor(n)?;
            let h = entropy(&f);
            Ok([
                at_least(&inputs, h, 0.0, tol),
                at_most(&inputs, h, ln_omega(&f), tol),
            ])
        })
    })
}

pub(crate) fn prime_power_zero(s: &Scan) -> Sink {
    let alpha = s.alpha(20);
    let items: Vec<(u64, u64)> = primes_up_to(s.prime_bound(100))
        .into_iter()
        .flat_map(|p| (1..=alpha).map(move |a| (p, a)))
        .collect();
    s.par(items, |(p, a), sink| {
        let inputs = [int(p), int(a)];
        sink.try_record(&inputs, || {
            Ok([exact(&inputs, entropy(&prime_power(p, a)?), 0.0)])
        })
    })
}

pub(crate) fn squarefree_max(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(2..=s.single(100_000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        if f.is_squarefree() {
            let inputs = [int(n)];
            sink.record([identity(&inputs, entropy(&f), ln_omega(&f), tol)]);
        }
    })
}

pub(crate) fn squarefree_power(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(4);
    s.par(2..=s.single(10_000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        if !f.is_squarefree() {
            return;
        }
        for a in 1..=alpha {
            let inputs = [int(n), int(a)];
            sink.record([identity(&inputs, entropy(&f.pow(a)), ln_omega(&f), tol)]);
        }
    })
}

pub(crate) fn power_invariance(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(4);
    s.par(2..=s.single(10_000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        for a in 2..=alpha {
            let inputs = [int(n), int(a)];
            sink.record([identity(&inputs, entropy(&f.pow(a)), entropy(&f), tol)]);
        }
    })
}

pub(crate) fn entropy_forms(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(2..=s.single(100_000), |n, sink| {
        let inputs = [int(n)];
        sink.try_record(&inputs, || {
            let f = factor(n)?;
            Ok([identity(
                &inputs,
                entropy_shannon_form(&f),
                entropy(&f),
                tol,
            )])
        })
    })
}

pub(crate) fn append_prime_power(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(6);
    s.par(2..=s.single(2000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        let p = f.smallest_coprime_prime();
        for a in 1..=alpha {
            let inputs = [int(n), int(a)];
            sink.try_record(&inputs, || {
                let closed = append_prime_power_entropy(&f, a)?;
                let direct = entropy(&f.with_prime_power(p, a)?);
                Ok([identity(&inputs, closed, direct, tol)])
            });
        }
    })
}

pub(crate) fn coprime_gap_identity(s: &Scan) -> Sink {
    let tol = s.tol();
    let max = s.pair(2000);
    let table = factor_table(max);
    let h: Vec<f64> = table.iter().map(entropy).collect();
    s.par(2..=max, |m, sink| {
        let fm = &table[m as usize];
        for n in 2..=max {
            if gcd(m, n) != 1 {
                continue;
            }
            let fn_ = &table[n as usize];
            let inputs = [int(m), int(n)];
            sink.try_record(&inputs, || {
                let direct = entropy(&fm.mul(fn_)) - h[m as usize] - h[n as usize];
                Ok([
                    identity(&inputs, coprime_gap(fm, fn_)?, direct, tol),
                    identity(&inputs, coprime_gap_entropy_form(fm, fn_)?, direct, tol),
                ])
            });
        }
    })
}

pub(crate) fn ediv_divergence_bound(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(2..=s.single(5000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        let Ok(divisors) = exp_divisors(&f) else {
            return;
        };
        let big = f.big_omega() as f64;
        for d in divisors {
            let inputs = [int(n), value(&d)];
            sink.try_record(&inputs, || {
                let bound = (d.big_omega() as f64 / big).ln();
                Ok([at_least(&inputs, divergence(&f, &d)?, bound, tol)])
            });
        }
    })
}

pub(crate) fn radical_divergence(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(2..=s.single(10_000), |n, sink| {
        let inputs = [int(n)];
        sink.try_record(&inputs, || {
            let f = factor(n)?;
            let rad = f.radical();
            let closed = divergence_to_radical(&f)?;
            Ok([
                identity(&inputs, closed, divergence(&f, &rad)?, tol),
                identity(&inputs, closed, entropy(&rad) - entropy(&f), tol),
            ])
        })
    })
}

/// Ordered pairs `2 ≤ n, m ≤ max` with `ω(n) = ω(m)`.
fn equal_omega_pairs<F>(s: &Scan, max: u64, f: F) -> Sink
where
    F: Fn(&[i64; 2], &Factorization, &Factorization, &mut Sink) + Sync + Send,
{
    let table = factor_table(max);
    let mut buckets: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
    for n in 2..=max {
        buckets
            .entry(table[n as usize].omega())
            .or_default()
            .push(n);
    }
    s.par(2..=max, |n, sink| {
        let fn_ = &table[n as usize];
        for &m in &buckets[&fn_.omega()] {
            f(&[int(n), int(m)], fn_, &table[m as usize], sink);
        }
    })
}

pub(crate) fn divergence_entropy_identity(s: &Scan) -> Sink {
    let tol = s.tol();
    equal_omega_pairs(s, s.pair(2000), |inputs, n, m, sink| {
        sink.try_record(inputs, || {
            Ok([identity(
                inputs,
                divergence_entropy_form(n, m)?,
                divergence(n, m)?,
                tol,
            )])
        })
    })
}

pub(crate) fn gibbs(s: &Scan) -> Sink {
    let tol = s.tol();
    equal_omega_pairs(s, s.pair(2000), |inputs, n, m, sink| {
        sink.try_record(inputs, || {
            Ok([at_least(inputs, divergence(n, m)?, 0.0, tol)])
        })
    })
}

pub(crate) fn shift_identity(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(6);
    s.par(2..=s.single(2000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        let p = f.smallest_coprime_prime();
        for a in 1..=alpha {
            for b in 1..=alpha {
                let inputs = [int(n), int(a), int(b)];
                sink.try_record(&inputs, || {
                    let direct =
                        divergence(&f.with_prime_power(p, a)?, &f.with_prime_power(p, b)?)?;
                    Ok([identity(&inputs, shift_divergence(&f, a, b)?, direct, tol)])
                });
            }
        }
    })
}

pub(crate) fn robin(s: &Scan) -> Sink {
    let tol = s.tol();
    s.par(3..=s.single(1_000_000), |n, sink| {
        let inputs = [int(n)];
        sink.try_record(&inputs, || {
            let f = factor(n)?;
            let lhs = divergence_to_radical(&f)? + entropy(&f);
            Ok([at_most(&inputs, lhs, robin_rhs(n)?, tol)])
        })
    })
}

/// `Q(α) = log(ω(n) + 1) − D(n p^α || γ(n) p)` along `α = 10, 100, …` for
/// `2 ≤ n ≤ 50` and `p = 10007`. The range is fixed: the target only makes
/// sense once `α` dwarfs `Ω(n)`.
pub(crate) fn decay(s: &Scan) -> Sink {
    let rungs = s.alpha(4).min(18) as u32;
    s.par(2..=DECAY_N_MAX, |n, sink| {
        let Ok(f) = factor(n) else { return };
        let q = |a: u64| -> Result<f64> {
            let top = ((f.omega() + 1) as f64).ln();
            let np = f.with_prime_power(DECAY_PRIME, a)?;
            Ok(top - divergence(&np, &f.radical().with_prime_power(DECAY_PRIME, 1)?)?)
        };
        let mut prev: Option<f64> = None;
        for j in 1..=rungs {
            let a = 10u64.pow(j);
            let inputs = [int(n), int(a), 0];
            let Ok(cur) = q(a) else {
                sink.record([failed(&inputs)]);
                return;
            };
            if let Some(prev) = prev {
                sink.record([less(&inputs, cur.abs(), prev.abs())]);
            }
            prev = Some(cur);
        }
        if let Some(last) = prev {
            let inputs = [int(n), int(10u64.pow(rungs)), 1];
            sink.record([less(&inputs, last.abs(), DECAY_TARGET)]);
        }
    })
}

pub(crate) fn pkq(s: &Scan) -> Sink {
    let primes = primes_up_to(s.prime_bound(50));
    let k_max = s.k(6);
    let mut items = Vec::new();
    for &p in &primes {
        for &q in &primes {
            for &t in &primes {
                if p != q && p != t && q < t {
                    items.extend((1..=k_max).map(|k| (p, q, t, k)));
                }
            }
        }
    }
    let bonus = (4.0f64 / 3.0).ln();
    s.par(items, |(p, q, t, k), sink| {
        let inputs = [int(p), int(q), int(t), int(k)];
        sink.try_record(&inputs, || {
            let m = product(&[(p, k), (q, 1)])?;
            let n = product(&[(p, k), (t, 1)])?;
            let lhs = divergence_to_radical(&m)? + divergence_to_radical(&n)?;
            let rhs = bonus + divergence_to_radical(&m.mul(&n))?;
            Ok([less(&inputs, lhs, rhs)])
        })
    })
}

pub(crate) fn coprime_k(s: &Scan) -> Sink {
    let primes = primes_up_to(s.prime_bound(30));
    let k_max = s.k(6);
    let mut items = Vec::new();
    for &p1 in &primes {
        for &p2 in &primes {
            for &q1 in &primes {
                for &q2 in &primes {
                    let distinct = p1 != p2 && p1 != q2 && p2 != q1 && p2 != q2 && q1 != q2;
                    if distinct && p1 < q1 {
                        items.extend((1..=k_max).map(|k| (p1, p2, q1, q2, k)));
                    }
                }
            }
        }
    }
    s.par(items, |(p1, p2, q1, q2, k), sink| {
        let inputs = [int(p1), int(p2), int(q1), int(q2), int(k)];
        sink.try_record(&inputs, || {
            let m = product(&[(p1, k), (p2, 1)])?;
            let n = product(&[(q1, k), (q2, 1)])?;
            let lhs = divergence_to_radical(&m)? + divergence_to_radical(&n)?;
            let rhs = divergence_to_radical(&m.mul(&n))?;
            Ok([if k == 1 {
                exact(&inputs, lhs, rhs)
            } else {
                greater(&inputs, lhs, rhs)
            }])
        })
    })
}

/// Coprime `m < n` with `ω ≥ 2` and `D(·||γ) ≤ log(ω/2)`:
/// `D(m||γ(m)) + D(n||γ(n)) ≤ D(mn||γ(m)γ(n))`.
pub(crate) fn coprime_superadditive(s: &Scan) -> Sink {
    let tol = s.tol();
    let max = s.pair(5000);
    let table = factor_table(max);
    let qualifying: Vec<(u64, f64)> = (2..=max)
        .filter_map(|n| {
            let f = &table[n as usize];
            let w = f.omega();
            if w < 2 {
                return None;
            }
            let d = divergence_to_radical(f).ok()?;
            (d <= (w as f64 / 2.0).ln()).then_some((n, d))
        })
        .collect();
    s.par(0..qualifying.len(), |i, sink| {
        let (m, dm) = qualifying[i];
        let fm = &table[m as usize];
        for &(n, dn) in &qualifying[i + 1..] {
            if gcd(m, n) != 1 {
                continue;
            }
            let fn_ = &table[n as usize];
            let inputs = [int(m), int(n)];
            sink.try_record(&inputs, || {
                let rhs = divergence(&fm.mul(fn_), &fm.radical().mul(&fn_.radical()))?;
                Ok([at_most(&inputs, dm + dn, rhs, tol)])
            });
        }
    })
}

pub(crate) fn kfree(s: &Scan) -> Sink {
    let tol = s.tol();
    let max = s.single(10_000);
    let items: Vec<(u64, u64)> = (2..=s.k(4))
        .flat_map(|k| (2..=max).map(move |n| (k, n)))
        .collect();
    s.par(items, |(k, n), sink| {
        let Ok(f) = factor(n) else { return };
        if !is_k_free(&f, k).unwrap_or(false) {
            return;
        }
        let inputs = [int(k), int(n)];
        sink.try_record(&inputs, || {
            let b = kfree_entropy_bounds(&f, k)?;
            let h = entropy(&f);
            let d = divergence_to_radical(&f)?;
            Ok([
                at_least(&inputs, h, b.lower, tol),
                at_most(&inputs, h, b.upper, tol),
                at_least(&inputs, d, 0.0, tol),
                at_most(&inputs, d, b.divergence_upper(), tol),
            ])
        })
    })
}

pub(crate) fn growth_ordering(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(8);
    s.par(2..=s.single(2000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        let p = f.smallest_coprime_prime();
        for a in 1..=alpha {
            for b in 1..=a {
                let inputs = [int(n), int(a), int(b)];
                sink.try_record(&inputs, || {
                    let h_a = entropy(&f.with_prime_power(p, a)?);
                    let h_b = entropy(&f.with_prime_power(p, b)?);
                    Ok([match compare_exponent_growth(&f, a, b)? {
                        GrowthOrdering::AtMost => at_most(&inputs, h_a, h_b, tol),
                        GrowthOrdering::AtLeast => at_least(&inputs, h_a, h_b, tol),
                        GrowthOrdering::Inconclusive => None,
                    }])
                });
            }
        }
    })
}

/// Squarefree `n`: every exponential divisor `d` of `n p^α` has
/// `H(d) ≥ H(n p^α)`. Otherwise, for `β | α` and `β ≤ α ≤ T(n)`:
/// `H(n p^β) ≤ H(n p^α)`.
pub(crate) fn squarefree_ediv(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(8);
    s.par(2..=s.single(2000), |n, sink| {
        let Ok(f) = factor(n) else { return };
        let p = f.smallest_coprime_prime();
        if f.is_squarefree() {
            for a in 1..=alpha {
                let Ok(m) = f.with_prime_power(p, a) else {
                    return;
                };
                let h_m = entropy(&m);
                let Ok(divisors) = exp_divisors(&m) else {
                    return;
                };
                for d in divisors {
                    let inputs = [0, int(n), int(a), value(&d)];
                    sink.record([at_least(&inputs, entropy(&d), h_m, tol)]);
                }
            }
            return;
        }
        let Ok(threshold) = entropy_threshold(&f) else {
            return;
        };
        for a in (1..=alpha).filter(|&a| a as f64 <= threshold) {
            for b in (1..=a).filter(|b| a % b == 0) {
                let inputs = [1, int(n), int(a), int(b)];
                sink.try_record(&inputs, || {
                    let h_b = entropy(&f.with_prime_power(p, b)?);
                    let h_a = entropy(&f.with_prime_power(p, a)?);
                    Ok([at_most(&inputs, h_b, h_a, tol)])
                });
            }
        }
    })
}

/// Survey of `H(d) ≤ H(n)` over exponential divisors of `n` built from `r`
/// primes of the pool with exponents `1..=alpha`. Inputs end in 0 for that
/// direction and 1 for `H(d) ≥ H(n)`.
pub(crate) fn ediv_survey(s: &Scan) -> Sink {
    let tol = s.tol();
    let pool = s.pool(&[2, 3, 5, 7]);
    let r = s.omega(3) as usize;
    let shapes = exponent_vectors(r, 1, s.alpha(2));
    let mut items = Vec::new();
    for primes in subsets(&pool, r) {
        for exps in &shapes {
            items.push(
                primes
                    .iter()
                    .copied()
                    .zip(exps.iter().copied())
                    .collect::<Vec<_>>(),
            );
        }
    }
    s.par(items, |mut pairs, sink| {
        pairs.sort();
        let Ok(n) = Factorization::from_pairs(pairs) else {
            return;
        };
        let Ok(divisors) = exp_divisors(&n) else {
            return;
        };
        let h_n = entropy(&n);
        for d in divisors {
            let h_d = entropy(&d);
            let (nv, dv) = (value(&n), value(&d));
            sink.record([at_most(&[nv, dv, 0], h_d, h_n, tol)]);
            sink.record([at_least(&[nv, dv, 1], h_d, h_n, tol)]);
        }
    })
}

pub(crate) fn tau_e_count(s: &Scan) -> Sink {
    s.par(2..=s.single(10_000), |n, sink| {
        let inputs = [int(n)];
        sink.try_record(&inputs, || {
            let f = factor(n)?;
            let divisors = exp_divisors(&f)?;
            let bad = divisors
                .iter()
                .filter(|d| !d.divides(&f) || d.omega() != f.omega())
                .count();
            Ok([
                exact(&inputs, divisors.len() as f64, tau_e(&f) as f64),
                exact(&inputs, bad as f64, 0.0),
            ])
        })
    })
}
