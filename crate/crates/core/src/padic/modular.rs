//! Residue arithmetic modulo prime powers held in `u128`.

use crate::error::{Error, Result};

/// Moduli must stay below this bound so that sums of two residues never overflow.
pub const MAX_MODULUS: u128 = 1 << 126;

/// p^n, or `PrecisionOverflow` when it does not fit below [`MAX_MODULUS`].
pub fn prime_power(p: u64, n: u32) -> Result<u128> {
    let mut acc: u128 = 1;
    for _ in 0..n {
        acc = acc
            .checked_mul(p as u128)
            .filter(|v| *v < MAX_MODULUS)
            .ok_or(Error::PrecisionOverflow(p, n))?;
    }
    Ok(acc)
}

/// p^n for callers that already validated the precision.
pub(crate) fn pow_u128(p: u64, n: u32) -> u128 {
    (p as u128).pow(n)
}

#[inline]
pub fn mul_mod(a: u128, b: u128, m: u128) -> u128 {
    if m <= 1 << 64 {
        return (a % m) * (b % m) % m;
    }
    let (mut a, mut b) = (a % m, b % m);
    let mut acc = 0u128;
    while b > 0 {
        if b & 1 == 1 {
            acc += a;
            if acc >= m {
                acc -= m;
            }
        }
        a <<= 1;
        if a >= m {
            a -= m;
        }
        b >>= 1;
    }
    acc
}

pub fn pow_mod(base: u128, mut e: u128, m: u128) -> u128 {
    if m == 1 {
        return 0;
    }
    let mut b = base % m;
    let mut acc = 1u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Inverse of `a` modulo `m` by the extended Euclidean algorithm.
pub fn inv_mod(a: u128, m: u128) -> Option<u128> {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if r0 != 1 {
        return None;
    }
    Some(t0.rem_euclid(m as i128) as u128)
}

/// Reduce a signed integer into `[0, m)`.
pub fn reduce_i128(a: i128, m: u128) -> u128 {
    if m > i128::MAX as u128 {
        if a >= 0 {
            a as u128 % m
        } else {
            let r = a.unsigned_abs() % m;
            if r == 0 {
                0
            } else {
                m - r
            }
        }
    } else {
        a.rem_euclid(m as i128) as u128
    }
}

/// Strip factors of p: returns (v, n / p^v). `n` must be nonzero.
pub fn split_valuation(mut n: u128, p: u64) -> (u32, u128) {
    let p = p as u128;
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    (v, n)
}

/// Balanced representative of `r` modulo `m`, in (−m/2, m/2].
pub fn balanced(r: u128, m: u128) -> i128 {
    if r > m / 2 {
        -((m - r) as i128)
    } else {
        r as i128
    }
}

/// a^e mod p^m for a signed base.
pub fn pow_residue(a: i128, e: u64, p: u64, m: u32) -> u128 {
    let modulus = pow_u128(p, m);
    pow_mod(reduce_i128(a, modulus), e as u128, modulus)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pow_residue_examples() {
        assert_eq!(pow_residue(2, 6, 7, 2), 15);
        assert_eq!(pow_residue(2, 0, 5, 3), 1);
        assert_eq!(pow_residue(3, 4, 5, 2), 6);
        assert_eq!(pow_residue(-1, 3, 7, 2), 48);
    }

    #[test]
    fn inverse_of_twelve_mod_49() {
        assert_eq!(inv_mod(12, 49), Some(45));
        assert_eq!(inv_mod(7, 49), None);
    }

    #[test]
    fn wide_mul_mod_matches_narrow() {
        let m = prime_power(1_000_003, 5).unwrap();
        assert!(m > 1 << 64);
        let a = m - 12345;
        let b = m - 678;
        // (−12345)(−678) = 8369910
        assert_eq!(mul_mod(a, b, m), 8_369_910);
        let inv = inv_mod(a, m).unwrap();
        assert_eq!(mul_mod(a, inv, m), 1);
    }

    #[test]
    fn overflow_detected() {
        assert!(prime_power(1_000_003, 9).is_err());
        assert_eq!(prime_power(7, 2).unwrap(), 49);
    }

    #[test]
    fn balanced_form() {
        assert_eq!(balanced(48, 49), -1);
        assert_eq!(balanced(24, 49), 24);
        assert_eq!(balanced(25, 49), -24);
    }
}
