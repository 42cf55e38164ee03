use super::ideal_props as ideal;
use super::integer_props as int;
use super::{Mode, PropertyId};

const fn assert(
    id: &'static str,
    claim: &'static str,
    check: fn(&super::scan::Scan) -> super::scan::Sink,
) -> PropertyId {
    PropertyId {
        id,
        claim,
        mode_default: Mode::Assert,
        check,
    }
}

const fn survey(
    id: &'static str,
    claim: &'static str,
    check: fn(&super::scan::Scan) -> super::scan::Sink,
) -> PropertyId {
    PropertyId {
        id,
        claim,
        mode_default: Mode::Survey,
        check,
    }
}

static CATALOG: &[PropertyId] = &[
    assert("P-1.1-entropy-bound", "0 <= H(n) <= log omega(n) for 2 <= n <= max", int::entropy_bound),
    assert("P-prime-power-zero", "H(p^a) = 0", int::prime_power_zero),
    assert("P-squarefree-max", "H(n) = log omega(n) for squarefree n", int::squarefree_max),
    assert("P-squarefree-power", "H(n^a) = log omega(n) for squarefree n", int::squarefree_power),
    assert("P-power-invariance", "H(n^a) = H(n)", int::power_invariance),
    assert("P-entropy-forms", "log Omega - (1/Omega) sum a log a = -sum (a/Omega) log(a/Omega)", int::entropy_forms),
    assert("P-append-prime-power", "closed form of H(n p^a) for p coprime to n agrees with direct evaluation", int::append_prime_power),
    assert("P-coprime-gap", "closed forms of H(mn) - H(m) - H(n) for coprime m, n agree with direct evaluation", int::coprime_gap_identity),
    assert("P-ediv-divergence-bound", "D(n||d) >= log(Omega(d)/Omega(n)) for every exponential divisor d of n", int::ediv_divergence_bound),
    assert("P-radical-divergence", "D(n||gamma(n)) = log omega(n) - H(n) = H(gamma(n)) - H(n)", int::radical_divergence),
    assert("P-divergence-entropy-form", "D(n||m) via entropies, Omega and sum a log b agrees with the definition when omega(n) = omega(m)", int::divergence_entropy_identity),
    assert("P-gibbs", "D(n||m) >= 0 when omega(n) = omega(m)", int::gibbs),
    assert("P-shift-divergence", "closed form of D(n p^a || n p^b) agrees with direct evaluation", int::shift_identity),
    assert("P-2.2-robin", "D(n||gamma(n)) + H(n) <= log log n - log log log n + log 1.38402 for n >= 3", int::robin),
    assert("P-decay", "Q(a) = log(omega(n)+1) - D(n p^a || gamma(n) p) decreases along a = 10^j and ends below 0.01", int::decay),
    assert("P-2.4-pkq", "D(m||gamma(m)) + D(n||gamma(n)) < log(4/3) + D(mn||gamma(mn)) for m = p^k q, n = p^k t", int::pkq),
    assert("P-2.5-coprime-k", "for m = p1^k p2, n = q1^k q2 with distinct primes: equality at k = 1, D(m||gamma(m)) + D(n||gamma(n)) > D(mn||gamma(mn)) for k >= 2", int::coprime_k),
    assert("P-THM-2.6", "D(m||gamma(m)) + D(n||gamma(n)) <= D(mn||gamma(m)gamma(n)) for coprime m < n with omega >= 2 and D(.||gamma) <= log(omega/2)", int::coprime_superadditive),
    assert("P-KFREE", "k-free n: log Omega - (omega/Omega)(k-1)log(k-1) <= H(n) <= log omega and 0 <= D(n||gamma(n)) <= (omega/Omega)(k-1)log(k-1) + log(omega/Omega)", int::kfree),
    assert("P-4.1-monotone", "H(n p^a) <= H(n p^b) when b >= T(n), >= when a <= T(n), for a >= b and T(n) = Omega(n) exp(-H(n))", int::growth_ordering),
    assert("P-squarefree-ediv", "squarefree n: H(d) >= H(n p^a) for exponential divisors d of n p^a; otherwise H(n p^b) <= H(n p^a) for b | a, b <= a <= T(n)", int::squarefree_ediv),
    survey("P-COR-4.2", "H(d) <= H(n) for every exponential divisor d of n", int::ediv_survey),
    assert("P-TAU-E", "n has tau_e(n) exponential divisors, each dividing n with the same primes", int::tau_e_count),
    assert("P-IDEAL-efg", "efg = 2 and the prime ideals above p have norms summing to degree 2", ideal::efg),
    assert("P-IDEAL-ramification-oracle", "odd p splits, is inert or ramifies as x^2 = d mod p has 2, 0 or 1 roots", ideal::ramification_oracle),
    assert("P-IDEAL-bound", "0 <= H(I) <= log omega(I) for I = mO_K", ideal::entropy_bound),
    assert("P-IDEAL-prime-bound", "H(pO_K) <= log omega(pO_K) <= log 2", ideal::prime_bound),
    assert("P-IDEAL-galois-entropy", "H(pO_K) = log omega(pO_K) in a Galois quadratic field", ideal::galois_entropy),
    assert("P-IDEAL-galois-div", "D(pO_K||qO_K) = 0 when omega(pO_K) = omega(qO_K)", ideal::galois_divergence),
    assert("P-IDEAL-inert-ramified", "H(pO_K) = 0 for p inert or ramified", ideal::inert_ramified),
    assert("P-IDEAL-equal-exponents", "D(I||J) = 0 when each of I and J has all exponents equal", ideal::equal_exponents),
    assert("P-IDEAL-radical-identity", "D(I||gamma(I)) + H(I) = log omega(I) and D(I||gamma(I)) = H(gamma(I)) - H(I)", ideal::radical_identity),
    assert("P-IDEAL-tau-e", "I has tau_e(I) exponential divisors, each over the same prime ideals", ideal::tau_e_count),
    assert("P-IDEAL-integer-consistency", "H(mZ[i]) = H(m) when every prime factor of m is 3 mod 4", ideal::integer_consistency),
    survey("P-IDEAL-cor-4.3", "H(J) <= H(I) for every exponential divisor J of I", ideal::ediv_survey),
];

pub fn list_properties() -> &'static [PropertyId] {
    CATALOG
}
