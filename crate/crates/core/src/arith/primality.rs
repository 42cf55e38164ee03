use std::sync::OnceLock;

/// Trial-division limit used by [`crate::arith::factor`].
pub(crate) const TRIAL_LIMIT: u64 = 10_000;

// Deterministic for every n < 3.3e24, which covers u64.
const MR_WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Primes up to [`TRIAL_LIMIT`], sieved once.
pub fn small_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let n = TRIAL_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut primes = Vec::new();
        for i in 2..=n {
            if composite[i] {
                continue;
            }
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
        primes
    })
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Exact primality for the whole `u64` range (Miller–Rabin with a fixed
/// witness set).
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &MR_WITNESSES {
        if n == p {
            return true;
        }
        if n.is_multiple_of(p) {
            return false;
        }
    }
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for &a in &MR_WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Pollard rho with Brent's cycle detection. `n` must be an odd composite.
/// Returns a nontrivial factor.
pub(crate) fn pollard_brent(n: u64) -> u64 {
    debug_assert!(n > 3 && !is_prime(n));
    for c in 1u64.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut y, mut r, mut q) = (2u64, 1u64, 1u64);
        let (mut x, mut ys);
        let mut g;
        const BATCH: u64 = 128;
        loop {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            loop {
                ys = y;
                for _ in 0..BATCH.min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = gcd(q, n);
                k += BATCH;
                if k >= r || g != 1 {
                    break;
                }
            }
            r *= 2;
            if g != 1 {
                break;
            }
        }
        if g == n {
            // batch overshot: replay one step at a time
            loop {
                ys = f(ys);
                g = gcd(x.abs_diff(ys), n);
                if g != 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_is_prime(n: u64) -> bool {
        n >= 2
            && (2..)
                .take_while(|d| d * d <= n)
                .all(|d| !n.is_multiple_of(d))
    }

    #[test]
    fn matches_trial_division_below_100k() {
        for n in 0..100_000 {
            assert_eq!(is_prime(n), naive_is_prime(n), "n = {n}");
        }
    }

    #[test]
    fn known_large_values() {
        assert!(is_prime(1_000_000_000_000_000_009));
        assert!(is_prime(1_000_000_000_000_000_003));
        assert!(is_prime(18_446_744_073_709_551_557)); // 2^64 - 59
        assert!(!is_prime(u64::MAX));
        // strong pseudoprime to bases 2..=13
        assert!(!is_prime(3_215_031_751));
        assert!(!is_prime(4_294_967_291 * 4_294_967_291));
    }

    #[test]
    fn small_prime_table() {
        let p = small_primes();
        assert_eq!(&p[..5], &[2, 3, 5, 7, 11]);
        assert_eq!(*p.last().unwrap(), 9973);
        assert_eq!(p.len(), 1229);
    }

    #[test]
    fn brent_splits_semiprimes() {
        for &(a, b) in &[
            (10_007u64, 10_009u64),
            (1_000_003, 999_983),
            (2_147_483_647, 2_147_483_629),
        ] {
            let d = pollard_brent(a * b);
            assert!(d == a || d == b);
        }
    }
}
