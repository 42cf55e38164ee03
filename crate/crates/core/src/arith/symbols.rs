/// Kronecker symbol `(a | m)`; equals the Legendre symbol when `m` is an odd
/// prime and the Jacobi symbol when `m` is odd.
pub fn kronecker(a: i64, m: u64) -> i8 {
    if m == 0 {
        return if a == 1 || a == -1 { 1 } else { 0 };
    }
    let twos = m.trailing_zeros();
    let mut odd = m >> twos;
    let mut sign = 1i8;
    if twos > 0 {
        if a % 2 == 0 {
            return 0;
        }
        // (a | 2) = +1 for a ≡ ±1 (mod 8), −1 for a ≡ ±3
        if twos % 2 == 1 && matches!(a.rem_euclid(8), 3 | 5) {
            sign = -sign;
        }
    }
    let mut a = (a as i128).rem_euclid(odd as i128) as u64;
    // Jacobi symbol over odd modulus
    while a != 0 {
        let z = a.trailing_zeros();
        a >>= z;
        if z % 2 == 1 && matches!(odd % 8, 3 | 5) {
            sign = -sign;
        }
        if a % 4 == 3 && odd % 4 == 3 {
            sign = -sign;
        }
        std::mem::swap(&mut a, &mut odd);
        a %= odd;
    }
    if odd == 1 {
        sign
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primality::{is_prime, pow_mod};

    fn euler_criterion(a: i64, p: u64) -> i8 {
        let r = pow_mod(a.rem_euclid(p as i64) as u64, (p - 1) / 2, p);
        match r {
            0 => 0,
            1 => 1,
            x if x == p - 1 => -1,
            _ => unreachable!(),
        }
    }

    #[test]
    fn worked_examples() {
        assert_eq!(kronecker(-19, 5), 1);
        assert_eq!(kronecker(-19, 7), 1);
        assert_eq!(kronecker(0, 7), 0);
        assert_eq!(kronecker(-4, 5), 1);
        assert_eq!(kronecker(-4, 3), -1);
    }

    #[test]
    fn legendre_matches_euler_criterion() {
        for p in (3..1000u64).filter(|&p| is_prime(p)) {
            for a in -50..=50i64 {
                assert_eq!(kronecker(a, p), euler_criterion(a, p), "({a} | {p})");
            }
        }
    }

    #[test]
    fn two_and_composite_moduli() {
        // (a|2) by residue mod 8
        for a in -40..40i64 {
            let expected = match a.rem_euclid(8) {
                1 | 7 => 1,
                3 | 5 => -1,
                _ => 0,
            };
            assert_eq!(kronecker(a, 2), expected, "({a} | 2)");
        }
        // multiplicative in the modulus
        for a in -30..30i64 {
            for m in 1..60u64 {
                for n in 1..20u64 {
                    assert_eq!(kronecker(a, m * n), kronecker(a, m) * kronecker(a, n));
                }
            }
        }
        assert_eq!(kronecker(5, 0), 0);
        assert_eq!(kronecker(-1, 0), 1);
        assert_eq!(kronecker(7, 1), 1);
    }
}
