//! The two sum engines: pair sums Σ C(a,k)C(−1−a,k)·w(k) with a rational
//! parameter, and family sums over the central binomial kernels.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::numthy::{angle, rational_residue, small_parts};
use crate::padic::{check_precision, FactorialTable, PadicNum, PadicSum, Vanish};
use crate::Rational;

/// Default guard digits added to the target modulus exponent.
pub const DEFAULT_GUARD: u32 = 3;
/// Extra guard used by the single retry after a precision loss.
pub const RETRY_STEP: u32 = 3;

/// Term kernels, named by the denominator base.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    /// C(2k,k)²/16^k
    F16,
    /// C(2k,k)C(3k,k)/27^k
    F27,
    /// C(2k,k)C(4k,2k)/64^k
    F64,
    /// C(3k,k)C(6k,3k)/432^k
    F432,
    /// C(2k,k)C(4k,2k)/128^k
    F128,
    /// C(3k,k)C(6k,3k)/864^k
    F864,
    /// C(2k,k)²C(4k,2k)/(−12288)^k
    F12288,
}

impl Family {
    pub fn base(&self) -> i128 {
        match self {
            Family::F16 => 16,
            Family::F27 => 27,
            Family::F64 => 64,
            Family::F432 => 432,
            Family::F128 => 128,
            Family::F864 => 864,
            Family::F12288 => -12288,
        }
    }

    pub fn from_base(b: i64) -> Option<Family> {
        Some(match b {
            16 => Family::F16,
            27 => Family::F27,
            64 => Family::F64,
            432 => Family::F432,
            128 => Family::F128,
            864 => Family::F864,
            -12288 => Family::F12288,
            _ => return None,
        })
    }

    /// Largest factorial argument needed for k < p.
    pub fn table_size(p: u64) -> usize {
        6 * p as usize
    }

    fn numerator(&self, k: usize, t: &FactorialTable) -> PadicNum {
        match self {
            Family::F16 => {
                let c = t.binom(2 * k, k);
                c.mul(&c)
            }
            Family::F27 => t.binom(2 * k, k).mul(&t.binom(3 * k, k)),
            Family::F64 | Family::F128 => t.binom(2 * k, k).mul(&t.binom(4 * k, 2 * k)),
            Family::F432 | Family::F864 => t.binom(3 * k, k).mul(&t.binom(6 * k, 3 * k)),
            Family::F12288 => {
                let c = t.binom(2 * k, k);
                c.mul(&c).mul(&t.binom(4 * k, 2 * k))
            }
        }
    }
}

/// w(k) = scale / (d·k + shift); `None` scale means w ≡ 1.
#[derive(Clone, Debug, PartialEq)]
pub struct Weight {
    pub scale: Rational,
    pub d: i64,
    pub shift: Option<Rational>,
}

impl Weight {
    pub fn one() -> Self {
        Weight { scale: Rational::from_integer(1.into()), d: 0, shift: None }
    }

    /// scale/(d·k + shift) with rational scale and shift.
    pub fn new(scale: Rational, d: i64, shift: Rational) -> Self {
        Weight { scale, d, shift: Some(shift) }
    }

    /// 1/(d·k + e).
    pub fn over(d: i64, e: i64) -> Self {
        Self::new(Rational::from_integer(1.into()), d, Rational::from_integer(e.into()))
    }

    /// p/(d·k + e).
    pub fn p_over(p: u64, d: i64, e: i64) -> Self {
        Self::new(Rational::from_integer(p.into()), d, Rational::from_integer(e.into()))
    }

    /// p/(k + b).
    pub fn p_over_shift(p: u64, b: &Rational) -> Self {
        Self::new(Rational::from_integer(p.into()), 1, b.clone())
    }

    /// 1/(k + b).
    pub fn over_shift(b: &Rational) -> Self {
        Self::new(Rational::from_integer(1.into()), 1, b.clone())
    }
}

/// Precomputed integer form of a weight: sn·ed / (sd·(d·ed·k + en)).
struct WeightParts {
    num: i128,
    sd: i128,
    d_ed: i128,
    en: i128,
    linear: bool,
}

impl WeightParts {
    fn new(w: &Weight) -> Result<Self> {
        let (sn, sd) = small_parts(&w.scale)?;
        match &w.shift {
            None => Ok(WeightParts { num: sn, sd, d_ed: 0, en: 1, linear: false }),
            Some(shift) => {
                let (en, ed) = small_parts(shift)?;
                Ok(WeightParts { num: sn * ed, sd, d_ed: w.d as i128 * ed, en, linear: true })
            }
        }
    }

    fn at(&self, k: i128, p: u64, n: u32) -> Result<PadicNum> {
        if !self.linear {
            return Ok(PadicNum::from_ratio(self.num, self.sd, p, n));
        }
        let den = self.d_ed * k + self.en;
        if den == 0 {
            return Err(Error::DivisionByExactZero);
        }
        Ok(PadicNum::from_ratio(self.num, self.sd * den, p, n))
    }
}

/// Index ranges used by the truncated sums.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Range {
    /// 0 ≤ k ≤ p−1
    Full,
    /// 0 ≤ k ≤ (p−1)/2
    Half,
    /// 0 ≤ k ≤ [p/3]
    Third,
    /// 0 ≤ k ≤ n
    UpTo(u64),
}

impl Range {
    pub fn last(&self, p: u64) -> u64 {
        match self {
            Range::Full => p - 1,
            Range::Half => (p - 1) / 2,
            Range::Third => p / 3,
            Range::UpTo(n) => *n,
        }
    }
}

/// Σ_k C(a,k)C(−1−a,k)·w(k) at working precision n, by the incremental ratio
/// (a−k)(−1−a−k)/(k+1)².
pub fn pair_sum(a: &Rational, w: &Weight, p: u64, n: u32, range: Range) -> Result<PadicNum> {
    pair_sum_in(a, w, p, n, range, Vanish::Error)
}

/// [`pair_sum`] with an explicit policy for a vanishing total.
pub fn pair_sum_in(
    a: &Rational,
    w: &Weight,
    p: u64,
    n: u32,
    range: Range,
    vanish: Vanish,
) -> Result<PadicNum> {
    if a.denom().is_multiple_of(&BigInt::from(p)) {
        return Err(Error::NotPIntegral(a.to_string(), p));
    }
    let last = range.last(p);
    if last >= p {
        return Err(Error::DomainError("pair sums stop below p".into()));
    }
    let (an, ad) = small_parts(a)?;
    let wp = WeightParts::new(w)?;
    let mut prod = PadicNum::one(p, n);
    let mut acc = PadicSum::with_policy(p, n, vanish);
    for k in 0..=last as i128 {
        if !prod.is_zero() {
            acc.push(&prod.mul(&wp.at(k, p, n)?));
        }
        let f1 = PadicNum::from_ratio(an - k * ad, ad * (k + 1), p, n);
        let f2 = PadicNum::from_ratio(-an - (k + 1) * ad, ad * (k + 1), p, n);
        prod = prod.mul(&f1).mul(&f2);
    }
    acc.finish()
}

/// Σ_k K(k)·w(k) for a kernel family at working precision n.
pub fn family_sum_with(
    family: Family,
    w: &Weight,
    range: Range,
    t: &FactorialTable,
) -> Result<PadicNum> {
    family_sum_in(family, w, range, t, Vanish::Error)
}

/// [`family_sum_with`] with an explicit policy for a vanishing total.
pub fn family_sum_in(
    family: Family,
    w: &Weight,
    range: Range,
    t: &FactorialTable,
    vanish: Vanish,
) -> Result<PadicNum> {
    let (p, n) = (t.p(), t.precision());
    let last = range.last(p) as usize;
    if t.max() < 6 * last {
        return Err(Error::DomainError("factorial table too small".into()));
    }
    let wp = WeightParts::new(w)?;
    let inv_base = PadicNum::from_ratio(1, family.base(), p, n);
    let mut pw = PadicNum::one(p, n);
    let mut acc = PadicSum::with_policy(p, n, vanish);
    for k in 0..=last {
        let term = family.numerator(k, t).mul(&pw).mul(&wp.at(k as i128, p, n)?);
        acc.push(&term);
        pw = pw.mul(&inv_base);
    }
    acc.finish()
}

/// Policy for attempt `i` at working precision n: the first attempt is strict,
/// the retry reads a sum vanishing to full working precision as zero.
pub fn vanish_policy(attempt: usize, n: u32) -> Vanish {
    if attempt == 0 {
        Vanish::Error
    } else {
        Vanish::ZeroFrom(n as i64)
    }
}

/// Runs `f` at precision m + guard, retrying once at m + guard + 3 on precision loss.
pub fn with_guard<T>(
    p: u64,
    m: u32,
    guard: u32,
    mut f: impl FnMut(u32, Vanish) -> Result<T>,
) -> Result<T> {
    let mut last = None;
    for (i, g) in [guard, guard + RETRY_STEP].into_iter().enumerate() {
        let n = m + g;
        check_precision(p, n)?;
        match f(n, vanish_policy(i, n)) {
            Err(e @ Error::PrecisionLoss(_)) => last = Some(e),
            other => return other,
        }
    }
    Err(last.unwrap())
}

/// The hypothesis b + ⟨−b⟩ ≢ 0 mod p² of the central pair sum.
pub fn check_shift(b: &Rational, p: u64) -> Result<()> {
    let nb = -b.clone();
    let ang = angle(&nb, p)?.angle;
    let shifted = b + Rational::from_integer(ang.into());
    if shifted.is_zero() || rational_residue(&shifted, p, 2)? == 0 {
        return Err(Error::DegenerateParameter(format!(
            "b + <-b>_p ≡ 0 mod p^2 for b = {b}, p = {p}"
        )));
    }
    Ok(())
}

/// S(a, b) = Σ_{k<p} C(a,k)C(−1−a,k)·p/(k+b), known modulo p^m.
pub fn sum_central(a: &Rational, b: &Rational, p: u64, m: u32) -> Result<PadicNum> {
    angle(a, p)?;
    check_shift(b, p)?;
    let w = Weight::p_over_shift(p, b);
    with_guard(p, m, DEFAULT_GUARD, |n, v| pair_sum_in(a, &w, p, n, Range::Full, v))
}

/// A kernel-family sum known modulo p^m.
pub fn sum_family(family: Family, w: &Weight, p: u64, m: u32, range: Range) -> Result<PadicNum> {
    with_guard(p, m, DEFAULT_GUARD, |n, v| {
        let t = FactorialTable::new(p, n, 6 * range.last(p) as usize);
        family_sum_in(family, w, range, &t, v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio;

    #[test]
    fn central_sum_example() {
        let s = sum_central(&ratio(-1, 2), &ratio(1, 3), 7, 2).unwrap();
        assert_eq!(s.to_residue(2), Ok(6));
    }

    #[test]
    fn family_examples() {
        let s = sum_family(Family::F16, &Weight::one(), 7, 2, Range::Full).unwrap();
        assert_eq!(s.to_residue(2), Ok(48));
        let s = sum_family(Family::F27, &Weight::over(3, 2), 7, 2, Range::Full).unwrap();
        assert_eq!(s.to_residue(2), Ok(45));
        for p in [5u64, 7, 11, 13] {
            let w = Weight::over_shift(&ratio(1, 1));
            let s = sum_family(Family::F16, &w, p, 2, Range::Half);
            // the half sum vanishes modulo p^2 here; at guard precision it may be
            // nonzero but must reduce to 0
            match s {
                Ok(x) => assert_eq!(x.to_residue(2), Ok(0)),
                Err(e) => panic!("{e}"),
            }
        }
    }

    #[test]
    fn degenerate_shift_rejected() {
        // b = −1: b + <1>_p = 0 exactly
        assert!(matches!(
            sum_central(&ratio(1, 3), &ratio(-1, 1), 7, 2),
            Err(Error::DegenerateParameter(_))
        ));
        // b = 49 − 1 at p = 7: b + <−b> = 48 + 1 = 49
        assert!(check_shift(&ratio(48, 1), 7).is_err());
    }

    #[test]
    fn pair_and_family_agree() {
        // C(−1/2,k)² = C(2k,k)²/16^k
        let b = ratio(2, 5);
        let w = Weight::p_over_shift(11, &b);
        let x = pair_sum(&ratio(-1, 2), &w, 11, 5, Range::Full).unwrap();
        let t = FactorialTable::new(11, 5, 66);
        let y = family_sum_with(Family::F16, &w, Range::Full, &t).unwrap();
        assert_eq!(x.to_residue(3), y.to_residue(3));
    }
}
