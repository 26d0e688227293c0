//! Elementary primitives: ⟨a⟩_p, generalized binomials, harmonic numbers,
//! Fermat quotients and the U_n sequence.

pub mod exact;
pub mod helpers;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::padic::modular::{inv_mod, mul_mod, pow_mod, pow_u128, reduce_i128};
use crate::padic::PadicNum;
use crate::{Integer, Rational};

/// `a = angle + p * cofactor` with `angle` in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AngleDecomposition {
    pub angle: u64,
    pub cofactor: Rational,
}

pub fn angle(a: &Rational, p: u64) -> Result<AngleDecomposition> {
    let bp = BigInt::from(p);
    if a.denom().is_multiple_of(&bp) {
        return Err(Error::NotPIntegral(a.to_string(), p));
    }
    let num = a.numer().mod_floor(&bp).to_u128().unwrap();
    let den = a.denom().mod_floor(&bp).to_u128().unwrap();
    let ang = mul_mod(num, inv_mod(den, p as u128).unwrap(), p as u128) as u64;
    let cofactor = (a - Rational::from_integer(BigInt::from(ang))) / Rational::from_integer(bp);
    Ok(AngleDecomposition { angle: ang, cofactor })
}

/// Reduce a rational p-integer modulo p^m.
pub fn rational_residue(a: &Rational, p: u64, m: u32) -> Result<u128> {
    let x = PadicNum::from_rational(a, p, m);
    x.to_residue(m).map_err(|_| Error::NotPIntegral(a.to_string(), p))
}

/// Numerator and denominator as machine integers.
pub fn small_parts(a: &Rational) -> Result<(i128, i128)> {
    match (a.numer().to_i128(), a.denom().to_i128()) {
        (Some(n), Some(d)) if n.abs() < 1 << 60 && d < 1 << 60 => Ok((n, d)),
        _ => Err(Error::ParameterTooLarge(a.to_string())),
    }
}

/// C(a, k) for a rational p-integer a, by the ratio C(a,j+1) = C(a,j)(a−j)/(j+1).
pub fn gen_binom(a: &Rational, k: u64, p: u64, n: u32) -> Result<PadicNum> {
    if a.denom().is_multiple_of(&BigInt::from(p)) {
        return Err(Error::NotPIntegral(a.to_string(), p));
    }
    let (an, ad) = small_parts(a)?;
    let mut acc = PadicNum::one(p, n);
    for j in 0..k as i128 {
        let f = PadicNum::from_ratio(an - j * ad, ad * (j + 1), p, n);
        acc = acc.mul(&f);
        if acc.is_zero() {
            break;
        }
    }
    Ok(acc)
}

/// H_n modulo p^m, for n < p.
pub fn harmonic(n: u64, p: u64, m: u32) -> Result<u128> {
    if n >= p {
        return Err(Error::DomainError(format!("H_{n} needs n < p = {p}")));
    }
    let modulus = pow_u128(p, m);
    let mut acc = 0u128;
    for i in 1..=n as u128 {
        acc = (acc + inv_mod(i, modulus).unwrap()) % modulus;
    }
    Ok(acc)
}

/// H_n as a p-integral value known modulo p^m.
pub fn harmonic_padic(n: u64, p: u64, m: u32) -> Result<PadicNum> {
    if n == 0 {
        return Ok(PadicNum::zero(p, m));
    }
    PadicNum::from_residue(harmonic(n, p, m)?, p, m)
}

/// q_p(a) = (a^{p−1} − 1)/p modulo p.
pub fn fermat_quotient(a: i128, p: u64) -> Result<u128> {
    fermat_quotient_mod(a, p, 1)
}

/// q_p(a) modulo p^m.
pub fn fermat_quotient_mod(a: i128, p: u64, m: u32) -> Result<u128> {
    if a.rem_euclid(p as i128) == 0 {
        return Err(Error::DomainError(format!("{p} divides {a}")));
    }
    let big = pow_u128(p, m + 1);
    let r = pow_mod(reduce_i128(a, big), (p - 1) as u128, big);
    let r = if r == 0 { big - 1 } else { r - 1 };
    Ok(r / p as u128)
}

pub fn fermat_quotient_padic(a: i128, p: u64, m: u32) -> Result<PadicNum> {
    if a == 1 || a == -1 {
        return Ok(PadicNum::zero(p, m));
    }
    PadicNum::from_residue(fermat_quotient_mod(a, p, m)?, p, m)
}

/// Legendre symbol (a | p) as −1, 0 or 1.
pub fn legendre(a: i128, p: u64) -> i32 {
    let r = pow_mod(reduce_i128(a, p as u128), ((p - 1) / 2) as u128, p as u128);
    if r == 0 {
        0
    } else if r == 1 {
        1
    } else {
        -1
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Odd primes in `[lo, hi]`.
pub fn odd_primes(lo: u64, hi: u64) -> Vec<u64> {
    (lo.max(3)..=hi).filter(|&n| is_prime(n)).collect()
}

/// U_0..U_{n_max} from U_n = −2 Σ_{k≥1} C(n,2k) U_{n−2k}.
pub fn u_sequence(n_max: usize) -> Vec<Integer> {
    let rows = crate::sequences::pascal::<Integer>(n_max);
    let mut u: Vec<Integer> = Vec::with_capacity(n_max + 1);
    u.push(Integer::one());
    for n in 1..=n_max {
        let mut s = Integer::zero();
        for k in 1..=n / 2 {
            s += &rows[n][2 * k] * &u[n - 2 * k];
        }
        u.push(-2 * s);
    }
    u
}

/// U_n modulo p^m by the same recurrence.
pub fn u_sequence_mod(n_max: usize, p: u64, m: u32) -> Vec<u128> {
    let modulus = pow_u128(p, m);
    let mut rows: Vec<Vec<u128>> = vec![vec![1 % modulus]];
    for n in 1..=n_max {
        let prev = &rows[n - 1];
        let mut row = vec![1 % modulus; n + 1];
        for k in 1..n {
            row[k] = (prev[k - 1] + prev[k]) % modulus;
        }
        rows.push(row);
    }
    let mut u = vec![1 % modulus];
    for n in 1..=n_max {
        let mut s = 0u128;
        for k in 1..=n / 2 {
            s = (s + mul_mod(rows[n][2 * k], u[n - 2 * k], modulus)) % modulus;
        }
        let two_s = mul_mod(2, s, modulus);
        u.push((modulus - two_s) % modulus);
    }
    u
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn angle_examples() {
        assert_eq!(
            angle(&ratio(0, 1), 7).unwrap(),
            AngleDecomposition { angle: 0, cofactor: ratio(0, 1) }
        );
        assert_eq!(
            angle(&ratio(-1, 3), 7).unwrap(),
            AngleDecomposition { angle: 2, cofactor: ratio(-1, 3) }
        );
        assert_eq!(
            angle(&ratio(-1, 2), 11).unwrap(),
            AngleDecomposition { angle: 5, cofactor: ratio(-1, 2) }
        );
        assert!(matches!(angle(&ratio(1, 7), 7), Err(Error::NotPIntegral(..))));
    }

    #[test]
    fn gen_binom_examples() {
        let one = gen_binom(&ratio(5, 3), 0, 7, 3).unwrap();
        assert_eq!(one.to_residue(3), Ok(1));
        let x = gen_binom(&ratio(-1, 2), 1, 5, 2).unwrap();
        assert_eq!((x.valuation(), x.unit()), (Some(0), 12));
        assert!(gen_binom(&ratio(3, 1), 5, 7, 2).unwrap().is_zero());
    }

    #[test]
    fn harmonic_examples() {
        assert_eq!(harmonic(0, 7, 2), Ok(0));
        assert_eq!(harmonic(3, 7, 1), Ok(3));
        // 25/12 mod 49: 25 * 45 = 1125 = 22*49 + 47
        assert_eq!(harmonic(4, 7, 2), Ok(47));
        assert!(harmonic(7, 7, 1).is_err());
    }

    #[test]
    fn fermat_quotient_examples() {
        assert_eq!(fermat_quotient(1, 7), Ok(0));
        assert_eq!(fermat_quotient(2, 7), Ok(2));
        assert_eq!(fermat_quotient(3, 5), Ok(1));
        assert!(fermat_quotient(10, 5).is_err());
        // (2^12 − 1)/13 = 315
        assert_eq!(fermat_quotient_mod(2, 13, 2), Ok(315 % 169));
        // Wieferich prime: q_1093(2) ≡ 0 mod 1093 but not mod 1093^2
        assert_eq!(fermat_quotient(2, 1093), Ok(0));
        assert!(fermat_quotient_padic(2, 1093, 2).unwrap().valuation() == Some(1));
    }

    #[test]
    fn u_sequence_values() {
        let u: Vec<i64> = u_sequence(8).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(u, vec![1, 0, -2, 0, 22, 0, -602, 0, 30742]);
        let r = u_sequence_mod(8, 7, 2);
        assert_eq!(r[6], reduce_i128(-602, 49));
        assert_eq!(r[8], 30742 % 49);
    }

    #[test]
    fn legendre_values() {
        assert_eq!(legendre(-1, 7), -1);
        assert_eq!(legendre(-1, 13), 1);
        assert_eq!(legendre(-3, 7), 1);
        assert_eq!(legendre(14, 7), 0);
    }
}
