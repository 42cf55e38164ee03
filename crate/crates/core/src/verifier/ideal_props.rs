use super::scan::{
    at_least, at_most, exact, exponent_vectors, identity, int, primes_up_to, Scan, Sink,
};
use crate::arith::{factor, small_primes};
use crate::entropy::entropy;
use crate::error::Result;
use crate::ideals::{
    factor_prime_ideal, factor_principal, from_exponents, ideal_divergence, ideal_entropy,
    ideal_exp_divisors, ideal_radical, ideal_tau_e, make_field, ramification, IdealFactorization,
    PrimeIdealLabel, QuadraticField, RamificationKind,
};

const FIELDS: [i64; 5] = [-1, -19, 2, 5, -5];
const GALOIS_FIELDS: [i64; 3] = [-1, -19, 5];

fn squarefree_fields(bound: i64) -> Vec<i64> {
    (-bound..=bound)
        .filter(|&d| make_field(d).is_ok())
        .collect()
}

fn fields(s: &Scan, default: &[i64]) -> Vec<QuadraticField> {
    s.fields(default)
        .into_iter()
        .filter_map(|d| make_field(d).ok())
        .collect()
}

fn ln_omega(ideal: &IdealFactorization) -> f64 {
    (ideal.omega() as f64).ln()
}

fn kind_code(kind: RamificationKind) -> f64 {
    match kind {
        RamificationKind::Split => 0.0,
        RamificationKind::Inert => 1.0,
        RamificationKind::Ramified => 2.0,
    }
}

/// `(field, n)` for every field and every `n` in `ns`.
fn grid(fields: &[QuadraticField], ns: &[u64]) -> Vec<(QuadraticField, u64)> {
    fields
        .iter()
        .flat_map(|&k| ns.iter().map(move |&n| (k, n)))
        .collect()
}

/// Abstract ideal with exponents `e` on the first `e.len()` rational primes.
fn abstract_ideal(e: &[u64], conjugate: u32) -> Result<IdealFactorization> {
    let labels: Vec<_> = small_primes()[..e.len()]
        .iter()
        .map(|&p| PrimeIdealLabel::new(p, conjugate))
        .collect();
    from_exponents(&labels, e, &vec![1; e.len()])
}

pub(crate) fn efg(s: &Scan) -> Sink {
    let items = grid(
        &fields(s, &squarefree_fields(50)),
        &primes_up_to(s.prime_bound(10_000)),
    );
    s.par(items, |(k, p), sink| {
        let inputs = [k.d(), int(p)];
        sink.try_record(&inputs, || {
            let data = ramification(&k, p)?;
            let ideal = factor_prime_ideal(&k, p)?;
            let norm_sum: u64 = ideal.factors().iter().map(|fac| fac.e * fac.f).sum();
            Ok([
                exact(&inputs, (data.e * data.f * data.g) as f64, 2.0),
                exact(&inputs, norm_sum as f64, 2.0),
                exact(&inputs, ideal.omega() as f64, data.g as f64),
            ])
        })
    })
}

/// Odd `p`: split, inert or ramified according as `x² ≡ d (mod p)` has 2, 0
/// or 1 roots.
pub(crate) fn ramification_oracle(s: &Scan) -> Sink {
    let primes: Vec<u64> = primes_up_to(s.prime_bound(500))
        .into_iter()
        .filter(|&p| p != 2)
        .collect();
    let items = grid(&fields(s, &squarefree_fields(30)), &primes);
    s.par(items, |(k, p), sink| {
        let inputs = [k.d(), int(p)];
        let residue = k.d().rem_euclid(p as i64) as u64;
        let roots = (0..p).filter(|&x| x * x % p == residue).count();
        let expected = match roots {
            2 => RamificationKind::Split,
            0 => RamificationKind::Inert,
            _ => RamificationKind::Ramified,
        };
        sink.try_record(&inputs, || {
            let got = ramification(&k, p)?.kind;
            Ok([exact(&inputs, kind_code(got), kind_code(expected))])
        })
    })
}

pub(crate) fn entropy_bound(s: &Scan) -> Sink {
    let tol = s.tol();
    let ms: Vec<u64> = (2..=s.single(5000)).collect();
    s.par(grid(&fields(s, &FIELDS), &ms), |(k, m), sink| {
        let inputs = [k.d(), int(m)];
        sink.try_record(&inputs, || {
            let ideal = factor_principal(&k, m)?;
            let h = ideal_entropy(&ideal)?;
            Ok([
                at_least(&inputs, h, 0.0, tol),
                at_most(&inputs, h, ln_omega(&ideal), tol),
            ])
        })
    })
}

pub(crate) fn prime_bound(s: &Scan) -> Sink {
    let tol = s.tol();
    let items = grid(&fields(s, &FIELDS), &primes_up_to(s.prime_bound(10_000)));
    s.par(items, |(k, p), sink| {
        let inputs = [k.d(), int(p)];
        sink.try_record(&inputs, || {
            let ideal = factor_prime_ideal(&k, p)?;
            let h = ideal_entropy(&ideal)?;
            let top = ln_omega(&ideal);
            Ok([
                at_most(&inputs, h, top, tol),
                at_most(&inputs, top, 2f64.ln(), tol),
            ])
        })
    })
}

pub(crate) fn galois_entropy(s: &Scan) -> Sink {
    let items = grid(
        &fields(s, &GALOIS_FIELDS),
        &primes_up_to(s.prime_bound(1000)),
    );
    s.par(items, |(k, p), sink| {
        let inputs = [k.d(), int(p)];
        sink.try_record(&inputs, || {
            let ideal = factor_prime_ideal(&k, p)?;
            Ok([exact(&inputs, ideal_entropy(&ideal)?, ln_omega(&ideal))])
        })
    })
}

pub(crate) fn galois_divergence(s: &Scan) -> Sink {
    let tol = s.tol();
    let primes = primes_up_to(s.prime_bound(1000));
    let items = grid(&fields(s, &GALOIS_FIELDS), &primes);
    s.par(items, |(k, p), sink| {
        let Ok(ip) = factor_prime_ideal(&k, p) else {
            return;
        };
        for &q in &primes {
            if q == p {
                continue;
            }
            let Ok(iq) = factor_prime_ideal(&k, q) else {
                continue;
            };
            if iq.omega() != ip.omega() {
                continue;
            }
            let inputs = [k.d(), int(p), int(q)];
            sink.try_record(&inputs, || {
                Ok([identity(&inputs, ideal_divergence(&ip, &iq)?, 0.0, tol)])
            });
        }
    })
}

pub(crate) fn inert_ramified(s: &Scan) -> Sink {
    let items = grid(&fields(s, &FIELDS), &primes_up_to(s.prime_bound(10_000)));
    s.par(items, |(k, p), sink| {
        let Ok(data) = ramification(&k, p) else {
            return;
        };
        if data.kind == RamificationKind::Split {
            return;
        }
        let inputs = [k.d(), int(p)];
        sink.try_record(&inputs, || {
            Ok([exact(
                &inputs,
                ideal_entropy(&factor_prime_ideal(&k, p)?)?,
                0.0,
            )])
        })
    })
}

pub(crate) fn equal_exponents(s: &Scan) -> Sink {
    let tol = s.tol();
    let alpha = s.alpha(4);
    let mut items = Vec::new();
    for g in 1..=s.omega(4) {
        for a in 1..=alpha {
            items.extend((1..=alpha).map(|b| (g, a, b)));
        }
    }
    s.par(items, |(g, a, b), sink| {
        let inputs = [int(g), int(a), int(b)];
        sink.try_record(&inputs, || {
            let i = abstract_ideal(&vec![a; g as usize], 1)?;
            let j = abstract_ideal(&vec![b; g as usize], 2)?;
            Ok([identity(&inputs, ideal_divergence(&i, &j)?, 0.0, tol)])
        })
    })
}

pub(crate) fn radical_identity(s: &Scan) -> Sink {
    let tol = s.tol();
    let ms: Vec<u64> = (2..=s.single(5000)).collect();
    s.par(grid(&fields(s, &FIELDS), &ms), |(k, m), sink| {
        let inputs = [k.d(), int(m)];
        sink.try_record(&inputs, || {
            let ideal = factor_principal(&k, m)?;
            let rad = ideal_radical(&ideal);
            let h = ideal_entropy(&ideal)?;
            let d = ideal_divergence(&ideal, &rad)?;
            Ok([
                identity(&inputs, d + h, ln_omega(&ideal), tol),
                identity(&inputs, d, ideal_entropy(&rad)? - h, tol),
            ])
        })
    })
}

pub(crate) fn tau_e_count(s: &Scan) -> Sink {
    let ms: Vec<u64> = (2..=s.single(5000)).collect();
    s.par(grid(&fields(s, &FIELDS), &ms), |(k, m), sink| {
        let inputs = [k.d(), int(m)];
        sink.try_record(&inputs, || {
            let ideal = factor_principal(&k, m)?;
            let divisors = ideal_exp_divisors(&ideal);
            let bad = divisors
                .iter()
                .filter(|d| {
                    d.omega() != ideal.omega()
                        || d.factors()
                            .iter()
                            .zip(ideal.factors())
                            .any(|(b, e)| b.label != e.label || e.e % b.e != 0)
                })
                .count();
            Ok([
                exact(&inputs, divisors.len() as f64, ideal_tau_e(&ideal) as f64),
                exact(&inputs, bad as f64, 0.0),
            ])
        })
    })
}

/// Odd `m` with every prime factor `≡ 3 (mod 4)`: `H(mZ[i]) = H(m)`.
pub(crate) fn integer_consistency(s: &Scan) -> Sink {
    let tol = s.tol();
    let gauss = make_field(-1).expect("Q(i)");
    s.par(3..=s.single(5000), |m, sink| {
        let Ok(f) = factor(m) else { return };
        if f.primes().any(|p| p % 4 != 3) {
            return;
        }
        let inputs = [int(m)];
        sink.try_record(&inputs, || {
            let h = ideal_entropy(&factor_principal(&gauss, m)?)?;
            Ok([identity(&inputs, h, entropy(&f), tol)])
        })
    })
}

/// Survey of `H(J) ≤ H(I)` over exponential divisors `J` of abstract ideals
/// with `g` prime factors and exponents `1..=alpha`. Inputs are the exponents
/// of `I`, then of `J`, then 0 for that direction or 1 for `H(J) ≥ H(I)`.
pub(crate) fn ediv_survey(s: &Scan) -> Sink {
    let tol = s.tol();
    let shapes = exponent_vectors(s.omega(3) as usize, 1, s.alpha(2));
    s.par(shapes, |e, sink| {
        let Ok(ideal) = abstract_ideal(&e, 1) else {
            return;
        };
        let Ok(h) = ideal_entropy(&ideal) else { return };
        for d in ideal_exp_divisors(&ideal) {
            let Ok(h_d) = ideal_entropy(&d) else { continue };
            let mut inputs: Vec<i64> = e.iter().chain(&d.exponents()).map(|&x| int(x)).collect();
            inputs.push(0);
            sink.record([at_most(&inputs, h_d, h, tol)]);
            *inputs.last_mut().expect("nonempty") = 1;
            sink.record([at_least(&inputs, h_d, h, tol)]);
        }
    })
}
