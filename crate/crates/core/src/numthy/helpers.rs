//! Auxiliary congruences on harmonic numbers, Fermat quotients and
//! central binomials, checked modulo small powers of p.

use crate::error::Result;
use crate::numthy::{fermat_quotient_mod, gen_binom, rational_residue, u_sequence_mod};
use crate::padic::modular::{inv_mod, mul_mod, pow_u128, reduce_i128};
use crate::padic::{FactorialTable, PadicNum};
use crate::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HelperFailure {
    pub name: &'static str,
    pub p: u64,
    pub index: Option<u64>,
    pub modulus_exp: u32,
    pub lhs: u128,
    pub rhs: u128,
}

/// Names of the fixed (parameter-free) helper families, in check order.
pub const FIXED_HELPERS: &[&str] = &[
    "harmonic_reflection",
    "harmonic_half_and_third",
    "harmonic_double",
    "harmonic_quarter_and_sixth",
    "half_plus_k_binomial",
    "central_over_minus16",
    "half_binomial",
    "half_binomial_square",
    "central_square",
    "harmonic_twelfths",
    "quarter_reciprocals_one",
    "quarter_reciprocals_three",
    "u_square_sum",
    "u_middle_third",
    "u_first_third",
];

/// Residue arithmetic modulo p^e.
struct Ring {
    m: u128,
}

impl Ring {
    fn new(p: u64, e: u32) -> Self {
        Ring { m: pow_u128(p, e) }
    }
    fn int(&self, a: i128) -> u128 {
        reduce_i128(a, self.m)
    }
    fn add(&self, a: u128, b: u128) -> u128 {
        (a + b) % self.m
    }
    fn sub(&self, a: u128, b: u128) -> u128 {
        (a + self.m - b % self.m) % self.m
    }
    fn mul(&self, a: u128, b: u128) -> u128 {
        mul_mod(a, b, self.m)
    }
    fn inv(&self, a: u128) -> u128 {
        inv_mod(a, self.m).expect("unit")
    }
    fn frac(&self, n: i128, d: i128) -> u128 {
        self.mul(self.int(n), self.inv(self.int(d)))
    }
}

/// Harmonic prefix H_0..H_{p−1} modulo the ring.
fn harmonic_prefix(r: &Ring, p: u64) -> Vec<u128> {
    let mut h = vec![0u128; p as usize];
    for i in 1..p as usize {
        h[i] = r.add(h[i - 1], r.inv(i as u128));
    }
    h
}

struct Collector {
    p: u64,
    out: Vec<HelperFailure>,
}

impl Collector {
    fn eq(&mut self, name: &'static str, e: u32, index: Option<u64>, lhs: u128, rhs: u128) {
        if lhs != rhs {
            self.out.push(HelperFailure { name, p: self.p, index, modulus_exp: e, lhs, rhs });
        }
    }
}

/// All parameter-free helper congruences at one prime p ≥ 5.
pub fn fixed_checks(p: u64) -> Vec<HelperFailure> {
    let mut c = Collector { p, out: Vec::new() };
    let h = (p - 1) / 2;
    let pu = p as usize;

    let r1 = Ring::new(p, 1);
    let hm1 = harmonic_prefix(&r1, p);
    let q2 = fermat_quotient_mod(2, p, 1).unwrap();
    let q3 = fermat_quotient_mod(3, p, 1).unwrap();

    for k in 1..pu {
        c.eq("harmonic_reflection", 1, Some(k as u64), hm1[pu - 1 - k], hm1[k]);
    }
    c.eq("harmonic_half_and_third", 1, None, hm1[h as usize], r1.mul(r1.int(-2), q2));
    c.eq(
        "harmonic_half_and_third",
        1,
        None,
        hm1[pu / 3],
        r1.mul(r1.frac(-3, 2), q3),
    );
    for k in 1..=h as usize {
        let lhs = r1.mul(2, hm1[2 * k]);
        let rhs = r1.add(r1.add(r1.mul(2, q2), hm1[k]), hm1[h as usize - k]);
        c.eq("harmonic_double", 1, Some(k as u64), lhs, rhs);
    }
    c.eq("harmonic_quarter_and_sixth", 1, None, hm1[pu / 4], r1.mul(r1.int(-3), q2));
    c.eq(
        "harmonic_quarter_and_sixth",
        1,
        None,
        hm1[pu / 6],
        r1.sub(r1.mul(r1.int(-2), q2), r1.mul(r1.frac(3, 2), q3)),
    );

    let r2 = Ring::new(p, 2);
    let hm2 = harmonic_prefix(&r2, p);
    let t2 = FactorialTable::new(p, 2, 2 * pu);
    let r4 = Ring::new(p, 4);
    let t4 = FactorialTable::new(p, 4, 2 * pu);
    let p2 = r2.int(p as i128);
    let p4sq = r4.int((p as i128) * (p as i128));
    let inv4 = r2.inv(4);
    let inv16_4 = r4.inv(r4.int(-16));
    let half = r2.frac(1, 2);
    let mut odd_sq = 0u128;
    let (mut pow4, mut pow_m4, mut pow16) = (1u128, 1u128, 1u128);
    let mut pow_m16_4 = 1u128;
    for k in 1..=h as usize {
        pow4 = r2.mul(pow4, inv4);
        pow_m4 = r2.mul(pow_m4, r2.inv(r2.int(-4)));
        pow16 = r2.mul(pow16, r2.inv(16));
        pow_m16_4 = r4.mul(pow_m16_4, inv16_4);
        let ck = t2.binom_residue(2 * k, k);
        let hk = r2.sub(hm2[2 * k], r2.mul(half, hm2[k]));
        let lhs = t2.binom_residue(h as usize + k, k);
        let rhs = r2.mul(r2.mul(ck, pow4), r2.add(1, r2.mul(p2, hk)));
        c.eq("half_plus_k_binomial", 2, Some(k as u64), lhs, rhs);

        let i = 2 * k as i128 - 1;
        odd_sq = r4.add(odd_sq, r4.inv(r4.int(i * i)));
        let lhs = r4.mul(t4.binom_residue(2 * k, k), pow_m16_4);
        let rhs = r4.mul(
            r4.add(1, r4.mul(p4sq, odd_sq)),
            t4.binom_residue(h as usize + k, 2 * k),
        );
        c.eq("central_over_minus16", 4, Some(k as u64), lhs, rhs);

        let chk = t2.binom_residue(h as usize, k);
        let rhs = r2.mul(r2.mul(ck, pow_m4), r2.sub(1, r2.mul(p2, hk)));
        c.eq("half_binomial", 2, Some(k as u64), chk, rhs);

        let sq = r2.mul(chk, chk);
        let ksq = r2.mul(r2.mul(ck, ck), pow16);
        let corr = r2.mul(p2, r2.sub(r2.mul(2, hm2[2 * k]), hm2[k]));
        c.eq("half_binomial_square", 2, Some(k as u64), sq, r2.mul(ksq, r2.sub(1, corr)));
        c.eq("central_square", 2, Some(k as u64), ksq, r2.mul(sq, r2.add(1, corr)));
    }

    if p % 4 == 1 {
        c.eq(
            "harmonic_twelfths",
            1,
            None,
            r1.add(hm1[5 * pu / 12], hm1[pu / 12]),
            r1.sub(r1.mul(r1.int(-6), q2), r1.mul(3, q3)),
        );
        let quarter = (p - 1) / 4;
        let (mut s1, mut s3) = (0u128, 0u128);
        for i in 0..quarter as i128 {
            s1 = r1.add(s1, r1.inv(r1.int(4 * i + 1)));
            s3 = r1.add(s3, r1.inv(r1.int(4 * i + 3)));
        }
        c.eq("quarter_reciprocals_one", 1, None, s1, r1.mul(r1.frac(3, 4), q2));
        c.eq("quarter_reciprocals_three", 1, None, s3, r1.mul(r1.frac(1, 4), q2));
    }

    if p % 3 == 1 {
        let u1 = u_sequence_mod(pu - 3, p, 1)[pu - 3];
        let u2 = u_sequence_mod(pu - 3, p, 2)[pu - 3];
        let third = (pu - 1) / 3;
        let sq_sum = |n: usize| {
            (1..=n as i128).fold(0u128, |acc, i| r1.add(acc, r1.inv(r1.int(i * i))))
        };
        c.eq("u_square_sum", 1, None, sq_sum(2 * third), r1.mul(r1.int(-3), u1));
        let mid = r2.sub(hm2[2 * third], hm2[third]);
        c.eq("u_middle_third", 2, None, mid, r2.mul(r2.int(3 * p as i128), u2));
        c.eq("u_first_third", 1, None, sq_sum(third), r1.mul(3, u1));
    }
    c.out
}

/// C(a+mp, k) ≡ C(a,k)(1 + Σ_{i<k} mp/(a−i)) mod p², given a−i ≢ 0 mod p².
/// Returns `Ok(None)` on agreement.
pub fn shifted_binomial(
    a: &Rational,
    m: &Rational,
    k: u64,
    p: u64,
) -> Result<Option<HelperFailure>> {
    let n = 5;
    let pr = Rational::from_integer(p.into());
    let lhs = gen_binom(&(a + m * &pr), k, p, n)?;
    let base = gen_binom(a, k, p, n)?;
    let mp = PadicNum::from_rational(&(m * &pr), p, n);
    let mut corr = PadicNum::one(p, n);
    for i in 0..k {
        let d = PadicNum::from_rational(&(a - Rational::from_integer(i.into())), p, n);
        corr = corr.add(&mp.div(&d)?)?;
    }
    let rhs = base.mul(&corr);
    let (l, r) = (lhs.to_residue(2)?, rhs.to_residue(2)?);
    Ok((l != r).then_some(HelperFailure {
        name: "shifted_binomial",
        p,
        index: Some(k),
        modulus_exp: 2,
        lhs: l,
        rhs: r,
    }))
}

/// C(a−1,p−1)C(−a−1,p−1) ≡ (a−⟨a⟩)(p+a−⟨a⟩)/a² mod p³ for a p-unit a.
pub fn top_binomial_pair(a: &Rational, p: u64) -> Result<Option<HelperFailure>> {
    let n = 6;
    let one = Rational::from_integer(1.into());
    let lhs = gen_binom(&(a - &one), p - 1, p, n)?.mul(&gen_binom(&(-a - &one), p - 1, p, n)?);
    let ang = Rational::from_integer(crate::numthy::angle(a, p)?.angle.into());
    let pr = Rational::from_integer(p.into());
    let rhs = (a - &ang) * (&pr + a - &ang) / (a * a);
    let (l, r) = (lhs.to_residue(3)?, rational_residue(&rhs, p, 3)?);
    Ok((l != r).then_some(HelperFailure {
        name: "top_binomial_pair",
        p,
        index: None,
        modulus_exp: 3,
        lhs: l,
        rhs: r,
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn fixed_small_primes() {
        for p in [5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
            assert_eq!(fixed_checks(p), vec![], "p = {p}");
        }
    }

    #[test]
    fn shifted_binomial_spot() {
        assert_eq!(shifted_binomial(&ratio(2, 3), &ratio(-5, 7), 4, 11).unwrap(), None);
    }

    #[test]
    fn top_pair_spot() {
        assert_eq!(top_binomial_pair(&ratio(-1, 3), 7).unwrap(), None);
    }
}
