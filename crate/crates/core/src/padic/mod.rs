//! Truncated p-adic numbers: a valuation, a unit residue and a relative precision.
//!
//! A nonzero value stands for `p^v * u + O(p^(v + N))`. Exact zero is a flag.
//! Every p^N must stay below [`modular::MAX_MODULUS`]; callers validate the
//! working precision once with [`check_precision`].

pub mod factorial;
pub mod modular;
mod sum;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::Rational;
use modular::{inv_mod, mul_mod, pow_u128, reduce_i128, split_valuation};

pub use factorial::FactorialTable;
pub use modular::{balanced, pow_residue};
pub use sum::{PadicSum, Vanish};

/// Fails unless p^n fits the residue width.
pub fn check_precision(p: u64, n: u32) -> Result<()> {
    modular::prime_power(p, n).map(|_| ())
}

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PadicNum {
    p: u64,
    v: i64,
    u: u128,
    n: u32,
    zero: bool,
}

impl fmt::Debug for PadicNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.zero {
            write!(f, "0 (p={})", self.p)
        } else {
            write!(f, "{}^{}*{} + O({}^{})", self.p, self.v, self.u, self.p, self.v + self.n as i64)
        }
    }
}

impl PadicNum {
    pub fn zero(p: u64, n: u32) -> Self {
        PadicNum { p, v: 0, u: 0, n, zero: true }
    }

    pub fn one(p: u64, n: u32) -> Self {
        PadicNum { p, v: 0, u: 1, n, zero: false }
    }

    /// Build from explicit parts. The unit is reduced mod p^n and must be prime to p.
    pub fn from_parts(p: u64, v: i64, u: u128, n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::DomainError("precision must be at least 1".into()));
        }
        let m = modular::prime_power(p, n)?;
        let u = u % m;
        if u.is_multiple_of(p as u128) {
            return Err(Error::DomainError(format!("{u} is not a unit mod {p}")));
        }
        Ok(PadicNum { p, v, u, n, zero: false })
    }

    /// `p^v * unit` where `unit` is already reduced and prime to p.
    fn raw(p: u64, v: i64, u: u128, n: u32) -> Self {
        debug_assert!(!u.is_multiple_of(p as u128));
        PadicNum { p, v, u, n, zero: false }
    }

    pub fn from_int(a: i128, p: u64, n: u32) -> Self {
        if a == 0 {
            return Self::zero(p, n);
        }
        let (v, rest) = split_valuation(a.unsigned_abs(), p);
        let m = pow_u128(p, n);
        let mut u = rest % m;
        if a < 0 {
            u = m - u;
        }
        Self::raw(p, v as i64, u, n)
    }

    /// `num / den` for machine integers; `den` must be nonzero.
    pub fn from_ratio(num: i128, den: i128, p: u64, n: u32) -> Self {
        assert!(den != 0, "zero denominator");
        if num == 0 {
            return Self::zero(p, n);
        }
        let (vn, un) = split_valuation(num.unsigned_abs(), p);
        let (vd, ud) = split_valuation(den.unsigned_abs(), p);
        let m = pow_u128(p, n);
        let inv = inv_mod(ud % m, m).expect("unit is invertible");
        let mut u = mul_mod(un % m, inv, m);
        if (num < 0) != (den < 0) {
            u = m - u;
        }
        Self::raw(p, vn as i64 - vd as i64, u, n)
    }

    pub fn from_rational(r: &Rational, p: u64, n: u32) -> Self {
        if let (Some(a), Some(b)) = (r.numer().to_i128(), r.denom().to_i128()) {
            return Self::from_ratio(a, b, p, n);
        }
        let (vn, un) = split_big(r.numer(), p);
        let (vd, ud) = split_big(r.denom(), p);
        let m = pow_u128(p, n);
        let big_m = BigInt::from(m);
        let un = un.mod_floor(&big_m).to_u128().unwrap();
        let ud = ud.mod_floor(&big_m).to_u128().unwrap();
        let u = mul_mod(un, inv_mod(ud, m).expect("unit is invertible"), m);
        Self::raw(p, vn - vd, u, n)
    }

    /// A p-integral value known modulo p^abs. Vanishing residues have no valuation.
    pub fn from_residue(r: u128, p: u64, abs: u32) -> Result<Self> {
        let m = pow_u128(p, abs);
        let r = r % m;
        if r == 0 {
            return Err(Error::PrecisionLoss(format!("residue vanishes modulo {p}^{abs}")));
        }
        let (v, u) = split_valuation(r, p);
        Ok(Self::raw(p, v as i64, u, abs - v))
    }

    /// Signed residue known modulo p^abs.
    pub fn from_residue_i128(r: i128, p: u64, abs: u32) -> Result<Self> {
        Self::from_residue(reduce_i128(r, pow_u128(p, abs)), p, abs)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn is_zero(&self) -> bool {
        self.zero
    }

    /// Valuation, `None` for exact zero.
    pub fn valuation(&self) -> Option<i64> {
        (!self.zero).then_some(self.v)
    }

    pub fn unit(&self) -> u128 {
        self.u
    }

    pub fn precision(&self) -> u32 {
        self.n
    }

    /// v + N; exact zero has no bound.
    pub fn absolute_precision(&self) -> Option<i64> {
        (!self.zero).then_some(self.v + self.n as i64)
    }

    fn modulus(&self) -> u128 {
        pow_u128(self.p, self.n)
    }

    /// Same value with relative precision lowered to `n` (never raised).
    pub fn truncate(&self, n: u32) -> Self {
        if self.zero || n >= self.n {
            return *self;
        }
        let n = n.max(1);
        Self::raw(self.p, self.v, self.u % pow_u128(self.p, n), n)
    }

    pub fn neg(&self) -> Self {
        if self.zero {
            return *self;
        }
        Self::raw(self.p, self.v, self.modulus() - self.u, self.n)
    }

    pub fn mul(&self, o: &Self) -> Self {
        debug_assert_eq!(self.p, o.p);
        if self.zero || o.zero {
            return Self::zero(self.p, self.n.min(o.n));
        }
        let n = self.n.min(o.n);
        let m = pow_u128(self.p, n);
        Self::raw(self.p, self.v + o.v, mul_mod(self.u, o.u, m), n)
    }

    pub fn inv(&self) -> Result<Self> {
        if self.zero {
            return Err(Error::DivisionByExactZero);
        }
        let u = inv_mod(self.u, self.modulus()).expect("unit is invertible");
        Ok(Self::raw(self.p, -self.v, u, self.n))
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    /// Scale by p^k (valuation shift, no precision change).
    pub fn shift(&self, k: i64) -> Self {
        if self.zero {
            return *self;
        }
        Self::raw(self.p, self.v + k, self.u, self.n)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one(self.p, self.n);
        }
        if self.zero {
            return *self;
        }
        let u = modular::pow_mod(self.u, e as u128, self.modulus());
        Self::raw(self.p, self.v * e as i64, u, self.n)
    }

    /// Sum with precision accounting. Total cancellation is `PrecisionLoss`.
    pub fn add(&self, o: &Self) -> Result<Self> {
        debug_assert_eq!(self.p, o.p);
        if o.zero {
            return Ok(*self);
        }
        if self.zero {
            return Ok(*o);
        }
        let p = self.p;
        let abs = (self.v + self.n as i64).min(o.v + o.n as i64);
        let (lo, hi) = if self.v <= o.v { (self, o) } else { (o, self) };
        let vmin = lo.v;
        let r = (abs - vmin) as u32;
        if hi.v >= abs {
            return Ok(lo.truncate(r));
        }
        let m = pow_u128(p, r);
        let shifted = mul_mod(hi.u, pow_u128(p, (hi.v - vmin) as u32), m);
        let mut s = lo.u % m + shifted;
        if s >= m {
            s -= m;
        }
        if s == 0 {
            return Err(Error::PrecisionLoss(format!(
                "sum vanishes modulo {p}^{abs}"
            )));
        }
        let (c, u) = split_valuation(s, p);
        Ok(Self::raw(p, vmin + c as i64, u, r - c))
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    /// Canonical residue modulo p^m.
    pub fn to_residue(&self, m: u32) -> Result<u128> {
        if self.zero {
            return Ok(0);
        }
        if self.v < 0 {
            return Err(Error::NegativeValuation(self.v));
        }
        if self.v + (self.n as i64) < m as i64 {
            return Err(Error::PrecisionLoss(format!(
                "known modulo {}^{}, asked modulo {}^{}",
                self.p,
                self.v + self.n as i64,
                self.p,
                m
            )));
        }
        if self.v >= m as i64 {
            return Ok(0);
        }
        let modulus = pow_u128(self.p, m);
        Ok(mul_mod(self.u % modulus, pow_u128(self.p, self.v as u32), modulus))
    }
}

impl std::ops::Mul for PadicNum {
    type Output = PadicNum;
    fn mul(self, o: PadicNum) -> PadicNum {
        PadicNum::mul(&self, &o)
    }
}

impl std::ops::Neg for PadicNum {
    type Output = PadicNum;
    fn neg(self) -> PadicNum {
        PadicNum::neg(&self)
    }
}

fn split_big(n: &BigInt, p: u64) -> (i64, BigInt) {
    let bp = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while !n.is_zero() {
        let (q, r) = n.div_rem(&bp);
        if !r.is_zero() {
            break;
        }
        n = q;
        v += 1;
    }
    (v, n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(a: i64, b: i64) -> Rational {
        Rational::new(BigInt::from(a), BigInt::from(b))
    }

    #[test]
    fn from_rational_examples() {
        assert!(PadicNum::from_rational(&q(0, 1), 7, 2).is_zero());
        let x = PadicNum::from_rational(&q(1, 12), 7, 2);
        assert_eq!((x.valuation(), x.unit()), (Some(0), 45));
        let y = PadicNum::from_rational(&q(50, 1), 5, 3);
        assert_eq!((y.valuation(), y.unit()), (Some(2), 2));
        let z = PadicNum::from_rational(&q(3, 10), 5, 2);
        assert_eq!(z.valuation(), Some(-1));
    }

    #[test]
    fn big_rational_path() {
        let big = Rational::new(BigInt::from(7).pow(50) * 3, BigInt::from(2).pow(90));
        let x = PadicNum::from_rational(&big, 7, 2);
        assert_eq!(x.valuation(), Some(50));
        let two90 = pow_residue(2, 90, 7, 2);
        assert_eq!(mul_mod(x.unit(), two90, 49), 3);
    }

    #[test]
    fn add_examples() {
        let a = PadicNum::from_parts(5, 0, 6, 3).unwrap();
        let b = PadicNum::from_parts(5, 0, 124, 3).unwrap();
        let s = a.add(&b).unwrap();
        assert_eq!((s.valuation(), s.unit(), s.precision()), (Some(1), 1, 2));
        assert_eq!(a.add(&PadicNum::zero(5, 3)).unwrap(), a);
        let t = PadicNum::from_rational(&q(2, 3), 5, 4)
            .add(&PadicNum::from_rational(&q(1, 3), 5, 4))
            .unwrap();
        assert_eq!((t.valuation(), t.unit()), (Some(0), 1));
    }

    #[test]
    fn total_cancellation_is_precision_loss() {
        let a = PadicNum::from_ratio(1, 3, 7, 2);
        let b = PadicNum::from_ratio(-1, 3, 7, 2);
        assert!(matches!(a.add(&b), Err(Error::PrecisionLoss(_))));
    }

    #[test]
    fn negligible_summand_truncates() {
        let a = PadicNum::from_int(1, 5, 2);
        let b = PadicNum::from_int(125, 5, 2);
        let s = a.add(&b).unwrap();
        assert_eq!((s.unit(), s.precision()), (1, 2));
    }

    #[test]
    fn mul_div_neg_examples() {
        let a = PadicNum::from_parts(7, 1, 2, 2).unwrap();
        let b = PadicNum::from_parts(7, 2, 3, 2).unwrap();
        let c = a.mul(&b);
        assert_eq!((c.valuation(), c.unit()), (Some(3), 6));
        let d = PadicNum::from_int(7, 7, 2).div(&PadicNum::from_int(14, 7, 2)).unwrap();
        assert_eq!((d.valuation(), d.unit()), (Some(0), 25));
        let e = PadicNum::one(5, 2).neg();
        assert_eq!(e.unit(), 24);
        assert_eq!(
            PadicNum::one(5, 2).div(&PadicNum::zero(5, 2)),
            Err(Error::DivisionByExactZero)
        );
    }

    #[test]
    fn to_residue_examples() {
        let a = PadicNum::from_parts(7, 1, 1, 2).unwrap();
        assert_eq!(a.to_residue(2), Ok(7));
        assert_eq!(PadicNum::from_int(-22, 13, 2).to_residue(2), Ok(147));
        let b = PadicNum::from_parts(7, -1, 3, 2).unwrap();
        assert_eq!(b.to_residue(2), Err(Error::NegativeValuation(-1)));
        let c = PadicNum::from_parts(7, 0, 3, 1).unwrap();
        assert!(matches!(c.to_residue(2), Err(Error::PrecisionLoss(_))));
        assert_eq!(PadicNum::from_int(49, 7, 1).to_residue(2), Ok(0));
    }

    #[test]
    fn residue_round_trip() {
        let x = PadicNum::from_residue(14, 7, 3).unwrap();
        assert_eq!((x.valuation(), x.unit(), x.precision()), (Some(1), 2, 2));
        assert_eq!(x.to_residue(3), Ok(14));
        assert!(PadicNum::from_residue(343, 7, 3).is_err());
    }
}
