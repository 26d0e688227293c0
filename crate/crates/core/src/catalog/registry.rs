use num_bigint::BigInt;

use super::engines::{check_shift, Family, Range, Weight};
use super::params::{ParamKind, Params};
use super::{CongruenceCase, Ctx, Modulus, Status};
use crate::error::Result;
use crate::numthy::{angle, legendre, rational_residue};
use crate::padic::PadicNum;
use crate::quadforms::{FormSpec, Normalization};
use crate::sequences::SequenceId;
use crate::Rational;

use Family::*;
use Range::*;
use Status::*;

type Admit = std::result::Result<(), String>;

fn q(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn zi<T: Into<BigInt>>(n: T) -> Rational {
    Rational::from_integer(n.into())
}

fn anyp(_: u64) -> bool {
    true
}

fn free(_: u64, _: &Params) -> Admit {
    Ok(())
}

struct Builder(CongruenceCase);

fn entry(id: &'static str, status: Status, citation: &'static str) -> Builder {
    Builder(CongruenceCase {
        id,
        status,
        citation,
        condition: "p > 3",
        modulus_text: "p^2",
        params: ParamKind::None,
        labels: &["lhs", "rhs"],
        modulus: Modulus::Fixed(2),
        applies: anyp,
        admissible: free,
        sides: |_| Ok(vec![]),
        probe: None,
    })
}

impl Builder {
    fn when(mut self, text: &'static str, f: fn(u64) -> bool) -> Self {
        self.0.condition = text;
        self.0.applies = f;
        self
    }
    fn modulus(mut self, m: u32) -> Self {
        self.0.modulus = Modulus::Fixed(m);
        self.0.modulus_text = match m {
            1 => "p",
            2 => "p^2",
            3 => "p^3",
            _ => "p^m",
        };
        self
    }
    fn modulus_by(mut self, text: &'static str, f: fn(u64) -> u32) -> Self {
        self.0.modulus = Modulus::ByPrime(f);
        self.0.modulus_text = text;
        self
    }
    fn params(mut self, kind: ParamKind, f: fn(u64, &Params) -> Admit) -> Self {
        self.0.params = kind;
        self.0.admissible = f;
        self
    }
    fn probe(mut self, f: fn(u64) -> Option<u32>) -> Self {
        self.0.probe = Some(f);
        self
    }
    fn sides(mut self, labels: &'static [&'static str], f: super::Sides) -> CongruenceCase {
        self.0.labels = labels;
        self.0.sides = f;
        self.0
    }
}

// ---- shared pieces ---------------------------------------------------------

fn is_unit(x: &Rational, p: u64) -> bool {
    matches!(rational_residue(x, p, 1), Ok(r) if r != 0)
}

struct Split {
    ang: u64,
    cof: Rational,
}

fn split(x: &Option<Rational>, name: &str, p: u64) -> std::result::Result<Split, String> {
    let x = x.as_ref().ok_or_else(|| format!("missing parameter {name}"))?;
    let d = angle(x, p).map_err(|e| e.to_string())?;
    Ok(Split { ang: d.angle, cof: d.cofactor })
}

fn require(ok: bool, why: &str) -> Admit {
    if ok {
        Ok(())
    } else {
        Err(why.to_string())
    }
}

fn s_not_minus_one(s: &Rational, p: u64) -> Admit {
    require(is_unit(&(s + zi(1)), p), "s ≡ −1 mod p")
}

fn quad(c: &Ctx, mult: u32, d: u32, n: Normalization) -> Result<(i64, i64)> {
    let r = c.rep(FormSpec::new(mult, d, n))?;
    Ok((r.x, r.y))
}

fn x_pos(c: &Ctx, mult: u32, d: u32) -> Result<i64> {
    Ok(quad(c, mult, d, Normalization::Positive)?.0)
}

/// 4x² − 2p
fn four_x2(p: u64, x: i64) -> Rational {
    zi(4 * x as i128 * x as i128 - 2 * p as i128)
}

/// 4x² − 2p − p²/(4x²)
fn four_x2_cubic(p: u64, x: i64) -> Rational {
    let x2 = zi(x as i128 * x as i128);
    let pr = zi(p);
    zi(4) * &x2 - zi(2) * &pr - &pr * &pr / (zi(4) * x2)
}

/// 2p − 2x² + p²/(2x²)
fn two_p_cubic(p: u64, x: i64) -> Rational {
    let x2 = zi(x as i128 * x as i128);
    let pr = zi(p);
    zi(2) * &pr - zi(2) * &x2 + &pr * &pr / (zi(2) * x2)
}

fn k16(c: &mut Ctx, k: u64) -> PadicNum {
    let b = c.binom(2 * k, k);
    b * b * c.pow(16, k).inv().unwrap()
}

fn f16_p_over(c: &mut Ctx, d: i64, e: i64) -> Result<PadicNum> {
    let w = Weight::p_over(c.p, d, e);
    c.family(F16, w, Full)
}

fn domb16(c: &mut Ctx) -> Result<PadicNum> {
    c.seq_sum(SequenceId::DOMB, 16)
}
fn domb4(c: &mut Ctx) -> Result<PadicNum> {
    c.seq_sum(SequenceId::DOMB, 4)
}
fn az3(c: &mut Ctx) -> Result<PadicNum> {
    c.seq_sum(SequenceId::AZ, -3)
}
fn az27(c: &mut Ctx) -> Result<PadicNum> {
    c.seq_sum(SequenceId::AZ, -27)
}
fn w3(c: &mut Ctx) -> Result<PadicNum> {
    c.seq_sum(SequenceId::W, -3)
}

fn zero(c: &Ctx) -> PadicNum {
    PadicNum::zero(c.p, c.n)
}

// ---- admissibility ---------------------------------------------------------

fn adm_any_a(p: u64, q: &Params) -> Admit {
    split(&q.a, "a", p).map(|_| ())
}

fn adm_sum_ka(p: u64, q: &Params) -> Admit {
    let a = q.a.as_ref().ok_or("missing parameter a")?;
    let sa = split(&q.a, "a", p)?;
    require(sa.ang != 0, "a ≡ 0 mod p")?;
    let neg_int = a.is_integer() && a < &zi(0) && a > &-zi(p);
    require(!neg_int, "k + a = 0 for some k < p")
}

fn adm_lem21(p: u64, q: &Params) -> Admit {
    let (a, b) = (q.a.as_ref().ok_or("missing a")?, q.b.as_ref().ok_or("missing b")?);
    let m = q.m.ok_or("missing m")?;
    let sa = split(&q.a, "a", p)?;
    require(sa.ang != 0, "a ≡ 0 mod p")?;
    check_shift(b, p).map_err(|e| e.to_string())?;
    require(m < sa.ang, "m ≥ <a>_p")?;
    let sab = angle(&(a + b), p).map_err(|e| e.to_string())?;
    require(sab.angle > m, "<a+b>_p ∈ {0..m}")
}

fn adm_lem22(p: u64, q: &Params) -> Admit {
    let sb = split(&q.b, "b", p)?;
    let t = q.t.as_ref().ok_or("missing t")?;
    require(sb.ang != 0 && is_unit(t, p), "bt ≡ 0 mod p")?;
    s_not_minus_one(&sb.cof, p)
}

fn adm_thm21(p: u64, q: &Params, low: bool) -> Admit {
    let sa = split(&q.a, "a", p)?;
    let sb = split(&q.b, "b", p)?;
    require(sa.ang != 0 && sb.ang != 0, "ab ≡ 0 mod p")?;
    require(sb.ang <= p - 1 - sa.ang, "<b>_p > p−1−<a>_p")?;
    s_not_minus_one(&sb.cof, p)?;
    if low {
        require(sb.ang <= sa.ang, "<b>_p > <a>_p")
    } else {
        require(sb.ang > sa.ang, "<b>_p ≤ <a>_p")
    }
}

fn adm_thm21_low(p: u64, q: &Params) -> Admit {
    adm_thm21(p, q, true)
}

fn adm_thm21_high(p: u64, q: &Params) -> Admit {
    adm_thm21(p, q, false)
}

fn adm_cor21(p: u64, q: &Params) -> Admit {
    let sa = split(&q.a, "a", p)?;
    require(sa.ang >= 1 && sa.ang <= (p - 3) / 2, "<a>_p outside [1, (p−3)/2]")?;
    require(is_unit(&(sa.cof + zi(1)), p), "t ≡ −1 mod p")
}

fn adm_thm22(p: u64, q: &Params, parts: u64) -> Admit {
    let sb = split(&q.b, "b", p)?;
    require(sb.ang != 0, "<b>_p = 0")?;
    s_not_minus_one(&sb.cof, p)?;
    require(parts * sb.ang < p, "<b>_p too large")
}

fn adm_thm22_2(p: u64, q: &Params) -> Admit {
    adm_thm22(p, q, 2)
}
fn adm_thm22_3(p: u64, q: &Params) -> Admit {
    adm_thm22(p, q, 3)
}
fn adm_thm22_4(p: u64, q: &Params) -> Admit {
    adm_thm22(p, q, 4)
}
fn adm_thm22_6(p: u64, q: &Params) -> Admit {
    adm_thm22(p, q, 6)
}

fn adm_thm31(p: u64, q: &Params) -> Admit {
    let sa = split(&q.a, "a", p)?;
    require(sa.ang >= 1 && 2 * sa.ang < p, "<a>_p outside [1, p/2)")?;
    require(is_unit(&sa.cof, p), "t ≡ 0 mod p")
}

fn adm_thm41(p: u64, q: &Params) -> Admit {
    let sb = split(&q.b, "b", p)?;
    require(2 * sb.ang > p, "<b>_p < p/2")?;
    s_not_minus_one(&sb.cof, p)
}

fn adm_cor41(p: u64, q: &Params) -> Admit {
    adm_thm41(p, q)?;
    let sb = split(&q.b, "b", p)?;
    require(is_unit(&(zi(2) * sb.cof + zi(1)), p), "s ≡ −1/2 mod p")
}

// ---- sides -----------------------------------------------------------------

fn rv(c: &mut Ctx, f: Family, leg: i128) -> Result<Vec<PadicNum>> {
    let s = c.family(f, Weight::one(), Full)?;
    Ok(vec![s, c.int(legendre(leg, c.p) as i128)])
}

fn gen_rv(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let a = c.a()?;
    let (ang, _) = c.ang(&a)?;
    Ok(vec![c.pair(&a, Weight::one(), Full)?, c.sign(ang)])
}

fn gen_odd(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let a = c.a()?;
    let (_, t) = c.ang(&a)?;
    let w = Weight::new(zi(2) * &a + zi(1), 2, zi(1));
    Ok(vec![c.pair(&a, w, Full)?, c.rat(&(zi(1) + zi(2) * t))])
}

fn sum_ka(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let a = c.a()?;
    let (ang, _) = c.ang(&a)?;
    let lhs = c.pair(&a, Weight::over_shift(&a), Full)?;
    let top = c
        .gb(&(&a - zi(1)), c.p - 1)?
        .mul(&c.gb(&(-&a - zi(1)), c.p - 1)?)
        .div(&c.rat(&a))?;
    let d = &a - zi(ang);
    let closed = &d * (c.pr() + &d) / (&a * &a * &a);
    Ok(vec![lhs, top, c.rat(&closed)])
}

fn lem21(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (a, b, m) = (c.a()?, c.b()?, c.m()?);
    let w = Weight::p_over_shift(c.p, &b);
    let lhs = c.pair(&a, w.clone(), Full)?;
    let ratio = c.gb(&(&a - &b), m + 1)?.div(&c.gb(&(&a + &b), m + 1)?)?;
    let shifted = c.pair(&(&a - zi(m + 1)), w, Full)?;
    Ok(vec![lhs, ratio * shifted])
}

fn lem22(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (b, t) = (c.b()?, c.t()?);
    let (_, s) = c.ang(&b)?;
    let pr = c.pr();
    let lhs = c.pair(&(&pr * &t), Weight::p_over_shift(c.p, &b), Full)?;
    let rhs = (zi(1) + &t / (&s + zi(1))) * (&pr / &b) * (zi(1) - &pr * &t / &b);
    Ok(vec![lhs, c.rat(&rhs)])
}

fn thm21_low(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (a, b) = (c.a()?, c.b()?);
    let ((aa, t), (bb, s)) = (c.ang(&a)?, c.ang(&b)?);
    let lhs = c.pair(&a, Weight::over_shift(&b), Full)?;
    let front = c.pr() * (&s + &t + zi(1)) * (&s - &t) / (&b * &b * (&s + zi(1)));
    let den = c.binom(aa, bb).mul(&c.binom(c.p - 1 - aa, bb));
    Ok(vec![lhs, c.rat(&front).div(&den)?])
}

fn thm21_high(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (a, b) = (c.a()?, c.b()?);
    let ((aa, t), (bb, s)) = (c.ang(&a)?, c.ang(&b)?);
    let pr = c.pr();
    let lhs = c.pair(&a, Weight::over_shift(&b), Full)?;
    let front = c.rat(&((&s + zi(1) + &t) / (&b * (&s + zi(1)))));
    let ratio = c.binom(bb - 1, aa).div(&c.binom(c.p - 1 - bb, aa))?;
    let bracket = c.sum(&[
        c.int(1),
        c.rat(&(&pr * (&s + zi(1)) / &b)),
        c.rat(&(&pr * (zi(2) * &s + zi(1)))) * c.h(bb - 1)?,
        -(c.rat(&(&pr * (&s - &t))) * c.h(bb - aa - 1)?),
        -(c.rat(&(&pr * (&s + &t + zi(1)))) * c.h(aa + bb)?),
    ])?;
    Ok(vec![lhs, front * ratio * bracket])
}

fn cor21(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let a = c.a()?;
    let (aa, t) = c.ang(&a)?;
    let pr = c.pr();
    let a1 = &a + zi(1);
    let lhs = c.pair(&a, Weight::over_shift(&a1), Full)?;
    let front = c
        .rat(&((zi(2) * &t + zi(1)) / (&a1 * (&t + zi(1)))))
        .div(&c.binom(c.p - 2 - aa, aa))?;
    let hdiff = c.diff(c.h(2 * aa + 1)?, c.h(aa)?)?;
    let bracket = c.sum(&[
        c.int(1),
        c.rat(&(&pr * (&t + zi(1)) / &a1)),
        -(c.rat(&(&pr * (zi(2) * &t + zi(1)))) * hdiff),
    ])?;
    Ok(vec![lhs, front * bracket])
}

fn thm22_10(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (bb, s) = c.ang(&b)?;
    let h = (c.p - 1) / 2;
    let lhs = c.family(F16, Weight::over_shift(&b), Full)?;
    let sh = &s + q(1, 2);
    let front = c.rat(&(&sh * &sh * c.pr() / (&b * &b * (&s + zi(1)))));
    let cb = c.binom(h, bb);
    Ok(vec![lhs, front.div(&(cb * cb))?])
}

fn thm22_11(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (bb, _) = c.ang(&b)?;
    let h = (c.p - 1) / 2;
    let lhs = c.family(F16, Weight::over_shift(&b), Half)?;
    let front = c.rat(&((&b - zi(bb)) / (&b * &b)));
    let cb = c.binom(h, bb);
    Ok(vec![lhs, front.div(&(cb * cb))?])
}

fn thm22_part(c: &mut Ctx, f: Family, parts: u64, lo: Rational, hi: Rational) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (bb, s) = c.ang(&b)?;
    let n = c.p / parts;
    let lhs = c.family(f, Weight::over_shift(&b), Full)?;
    let front = c.rat(&((&s + lo) * (&s + hi) * c.pr() / (&b * &b * (&s + zi(1)))));
    let den = c.binom(2 * bb, bb).mul(&c.binom(n + bb, n - bb));
    Ok(vec![lhs, c.sign(bb) * front.div(&den)?])
}

fn thm22_12(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    thm22_part(c, F27, 3, q(1, 3), q(2, 3))
}
fn thm22_13(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    thm22_part(c, F64, 4, q(1, 4), q(3, 4))
}
fn thm22_14(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    thm22_part(c, F432, 6, q(1, 6), q(5, 6))
}

fn ex22_1(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let h = (c.p - 1) / 2;
    let half = c.family(F16, Weight::over(4, 3), Half)?;
    let full = c.family(F16, Weight::over(4, 3), Full)?;
    let cb = c.binom(h, (c.p - 1) / 4);
    Ok(vec![-half, c.int(3) * full, c.int(c.p as i128).div(&(cb * cb))?])
}

fn ex22_2(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let h = (c.p - 1) / 2;
    let s3 = c.family(F16, Weight::over(3, 1), Full)?;
    let s6 = c.family(F16, Weight::over(6, 1), Full)?;
    let cb = c.binom(h, (c.p - 5) / 6);
    Ok(vec![c.int(8) * s3, c.int(5) * s6, c.int(c.p as i128).div(&(cb * cb))?])
}

fn ex22_8(c: &mut Ctx, k1: PadicNum, k3: PadicNum, sign: i128) -> Result<Vec<PadicNum>> {
    let s1 = c.family(F16, Weight::over(8, 1), Full)?;
    let s3 = c.family(F16, Weight::over(8, 3), Full)?;
    let cb = c.binom(c.p / 4, c.p / 8);
    Ok(vec![k1 * s1, k3 * s3, c.int(sign * c.p as i128).div(&(cb * cb))?])
}

fn ex22_3(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (k1, k3) = (c.int(45), c.int(7));
    ex22_8(c, k1, k3, -1)
}

fn ex22_4(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (k1, k3) = (c.frac(14, 9), c.int(10));
    ex22_8(c, k1, k3, 1)
}

fn thm23_15(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F27, Weight::over(3, 2), Full)?;
    let t = (c.p - 1) / 3;
    let rhs = c.int(2).mul(&c.binom(2 * t, t)).inv()?;
    Ok(vec![lhs, rhs])
}

fn thm23_16(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F27, Weight::over(3, 1), Full)?;
    let t = (c.p - 2) / 3;
    let rhs = c.int(1 + 2 * c.p as i128).div(&c.int(2).mul(&c.binom(2 * t, t)))?;
    Ok(vec![lhs, rhs])
}

fn thm23_17(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F64, Weight::over(4, 3), Full)?;
    let num = c.sum(&[c.pow(2, p - 1), c.int(1)])?;
    let den = c.int(6).mul(&c.binom((p - 1) / 2, (p - 1) / 4));
    Ok(vec![lhs, c.sign((p - 1) / 4) * num.div(&den)?])
}

fn thm23_18(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F64, Weight::over(4, 1), Full)?;
    let num = c.sum(&[c.pow(2, p - 1), c.int(2 * p as i128 + 1)])?;
    let den = c.int(6).mul(&c.binom((p - 3) / 2, (p - 3) / 4));
    Ok(vec![lhs, c.sign((p + 1) / 4) * num.div(&den)?])
}

/// 1 − (4/3)(2^{p−1} − 1)
fn one_minus_four_thirds(c: &Ctx) -> Result<PadicNum> {
    let q2 = c.sum(&[c.pow(2, c.p - 1), c.int(-1)])?;
    c.sum(&[c.int(1), -(c.frac(4, 3) * q2)])
}

fn thm23_19(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F432, Weight::over(6, 5), Full)?;
    let den = c.int(5).mul(&c.binom(5 * (p - 1) / 6, (p - 1) / 6));
    Ok(vec![lhs, one_minus_four_thirds(c)?.div(&den)?])
}

fn thm23_20(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F432, Weight::over(6, 1), Full)?;
    let num = c.sum(&[one_minus_four_thirds(c)?, c.int(5 * p as i128)])?;
    let rhs = c.frac(4, 5) * num.div(&c.binom((5 * p - 7) / 6, (p - 5) / 6))?;
    Ok(vec![lhs, rhs])
}

fn thm24(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F432, Weight::over(3, 1), Full)?;
    let rhs = if p % 6 == 1 {
        let num = c.sum(&[c.pow(2, p - 1), c.int(2)])?;
        num.div(&c.int(3).mul(&c.pow(2, (p - 1) / 3)))?
    } else {
        c.pow(2, (p + 1) / 3) * c.sum(&[c.pow(2, p - 3), c.int(-1)])?
    };
    Ok(vec![lhs, rhs])
}

fn conj21(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F432, Weight::over(4, 1), Full)?;
    let rhs = if c.p % 12 == 1 {
        let (_, y) = quad(c, 1, 9, Normalization::Positive)?;
        c.sign(y.unsigned_abs())
    } else {
        c.pow(-3, (c.p - 1) / 4)
    };
    Ok(vec![lhs, rhs])
}

fn conj22a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F64, Weight::over(3, 1), Full)?;
    let rhs = if c.p % 3 == 1 { c.int(1) } else { c.frac(-5, 4) };
    Ok(vec![lhs, rhs])
}

fn conj22b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F64, Weight::over(3, 2), Full)?;
    let rhs = if c.p % 3 == 1 { c.frac(1, 2) } else { c.frac(-2, 5) };
    Ok(vec![lhs, rhs])
}

fn conj23(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F64, Weight::p_over(c.p, 6, 1), Full)?;
    let x = x_pos(c, 1, 3)?;
    Ok(vec![lhs, c.sign((c.p - 1) / 6) * c.rat(&four_x2_cubic(c.p, x))])
}

fn thm31(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let a = c.a()?;
    let (aa, t) = c.ang(&a)?;
    let lhs = c.pair(&a, Weight::new(c.pr(), 1, -a.clone()), Full)?;
    let cen = c.sign(aa - 1) * c.binom(2 * aa, aa);
    let other = c.int(2) * c.binom(c.p - 1 - aa, aa);
    let r1 = c.sum(&[c.rat(&((zi(2) * &t + zi(1)) / &t)) * cen, other])?;
    let hdiff = c.diff(c.h(2 * aa)?, c.h(aa)?)?;
    let r2 = cen * c.sum(&[c.rat(&(zi(1) / &t)), c.int(2 * c.p as i128) * hdiff])?;
    Ok(vec![lhs, r1, r2])
}

fn thm32(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F64, Weight::p_over(p, 4, 1), Full)?;
    let num = c.sum(&[c.int(3), -c.pow(2, p - 1)])?;
    let rhs = c.sign((p - 1) / 4) * num * c.frac(1, 2) * c.binom((p - 1) / 2, (p - 1) / 4);
    Ok(vec![lhs, rhs])
}

fn thm33(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F27, Weight::p_over(p, 3, 1), Full)?;
    let t = (p - 1) / 3;
    Ok(vec![lhs, c.binom(2 * t, t)])
}

fn thm34(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F432, Weight::p_over(p, 6, 1), Full)?;
    let num = c.sum(&[c.int(5), -c.pow(2, p)])?;
    let rhs = num * c.frac(1, 3) * c.sign((p - 1) / 6) * c.binom((p - 1) / 3, (p - 1) / 6);
    Ok(vec![lhs, rhs])
}

fn thm41(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (bb, s) = c.ang(&b)?;
    let p = c.p;
    let h = (p - 1) / 2;
    let w = Weight::p_over_shift(p, &b);
    let full = c.family(F16, w.clone(), Full)?;
    let half = c.family(F16, w, Half)?;
    let j = bb - p.div_ceil(2);
    let r = p - bb;
    let pr = c.pr();
    let inv_s1 = c.rat(&(zi(1) / (&s + zi(1))));
    let (hr, hj) = (c.h(r)?, c.h(j)?);
    let hdiff = c.diff(hr, hj)?;
    let f1 = k16(c, j)
        * inv_s1
        * c.sum(&[c.int(1), c.rat(&(&pr * (zi(2) * &s + zi(1)))) * hdiff])?;
    let cb = c.binom(h, r);
    let f2 = inv_s1
        * cb
        * cb
        * c.sum(&[
            c.int(1),
            c.int(2 * p as i128) * c.q(2)?,
            c.rat(&(&pr * (zi(2) * &s + zi(2)))) * hr,
            -(c.rat(&(&pr * (zi(2) * &s + zi(1)))) * hj),
        ])?;
    let f3 = k16(c, r)
        * inv_s1
        * c.sum(&[c.int(1), c.rat(&(&pr * (zi(2) * &s + zi(2)))) * hdiff])?;
    Ok(vec![full, half, f1, f2, f3])
}

fn cor41(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (_, s) = c.ang(&b)?;
    let p = c.p;
    let lhs = c.family(F16, Weight::p_over_shift(p, &(q(1, 2) - &b)), Full)?;
    let rhs = c.family(F16, Weight::p_over_shift(p, &b), Full)?;
    let k = -(zi(2) * &s + zi(2)) / (zi(2) * &s + zi(1));
    Ok(vec![lhs, c.rat(&k) * rhs])
}

fn thm42a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 3)?;
    Ok(vec![f16_p_over(c, 3, 1)?, c.rat(&four_x2(c.p, x))])
}
fn thm42b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 3)?;
    Ok(vec![f16_p_over(c, 6, 1)?, c.rat(&four_x2(c.p, x))])
}

fn eps_h(p: u64) -> i128 {
    if ((p - 1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn thm43a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 2)?;
    let s = f16_p_over(c, 8, 1)?;
    Ok(vec![c.int(2 - eps_h(c.p)) * s, c.rat(&four_x2(c.p, x))])
}
fn thm43b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 2)?;
    let s = f16_p_over(c, 8, 3)?;
    Ok(vec![c.int(2 + eps_h(c.p)) * s, c.rat(&four_x2(c.p, x))])
}

fn leg3(p: u64) -> i128 {
    legendre(p as i128, 3) as i128
}

fn thm44a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 1)?;
    let s = f16_p_over(c, 12, 1)?;
    Ok(vec![c.int(3 * leg3(c.p) - 2) * s, c.rat(&four_x2(c.p, x))])
}
fn thm44b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 1)?;
    let s = f16_p_over(c, 12, 5)?;
    Ok(vec![c.int(3 * leg3(c.p) + 2) * s, c.rat(&four_x2(c.p, x))])
}

fn conj41(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 3)?;
    Ok(vec![f16_p_over(c, 3, 1)?, f16_p_over(c, 6, 1)?, c.rat(&four_x2_cubic(c.p, x))])
}
fn conj42(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 2)?;
    let e = eps_h(c.p);
    let s1 = c.int(2 - e) * f16_p_over(c, 8, 1)?;
    let s3 = c.int(2 + e) * f16_p_over(c, 8, 3)?;
    Ok(vec![s1, s3, c.rat(&four_x2_cubic(c.p, x))])
}
fn conj43(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 1)?;
    let l = leg3(c.p);
    let s1 = c.int(3 * l - 2) * f16_p_over(c, 12, 1)?;
    let s5 = c.int(3 * l + 2) * f16_p_over(c, 12, 5)?;
    Ok(vec![s1, s5, c.rat(&four_x2_cubic(c.p, x))])
}

fn aux48_49(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F864, Weight::one(), Full)?;
    let cv = crate::quadforms::c_value(p)?;
    let two_c = zi(2 * cv as i128);
    let mid = c.rat(&(&two_c - c.pr() / &two_c));
    let inner = c.sum(&[
        c.frac(3, 2) * c.q(2)?,
        c.frac(5, 4) * c.q(3)?,
        c.frac(1, 3) * c.h(p / 12)?,
    ])?;
    let last = c.binom((p - 1) / 2, p / 12)
        * c.sum(&[c.int(1), -(c.int(p as i128) * inner)])?;
    Ok(vec![lhs, mid, last])
}

fn thm51a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 3)?;
    Ok(vec![domb16(c)?, domb4(c)?, c.rat(&four_x2(c.p, x))])
}
fn thm51b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    Ok(vec![domb16(c)?, domb4(c)?, zero(c)])
}

fn lem51(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let k = c.family(F27, Weight::p_over(c.p, 4, 1), Full)?;
    Ok(vec![az3(c)?, az27(c)?, k])
}

fn thm52(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    Ok(vec![az3(c)?, az27(c)?, zero(c)])
}

fn thm53(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let rhs = if c.p % 12 == 1 {
        four_x2(c.p, x_pos(c, 1, 9)?)
    } else {
        let x = x_pos(c, 2, 9)? as i128;
        zi(2 * c.p as i128 - 2 * x * x)
    };
    Ok(vec![az3(c)?, az27(c)?, c.rat(&rhs)])
}

fn aux_cde(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let (a, _) = quad(c, 1, 1, Normalization::XMod4One)?;
    let lhs = c.binom((p - 1) / 2, (p - 1) / 4);
    let two_a = zi(2 * a as i128);
    let f = c.sum(&[c.int(1), c.frac(p as i128, 2) * c.q(2)?])?;
    Ok(vec![lhs, f * c.rat(&(&two_a - c.pr() / &two_a))])
}

fn cor51(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let lhs = c.family(F12288, Weight::one(), Full)?;
    let (a, b) = quad(c, 1, 1, Normalization::AbPair)?;
    let x = x_pos(c, 2, 9)? as i128;
    Ok(vec![lhs, c.int(-4 * a as i128 * b as i128), c.int(-2 * x * x)])
}

fn thm54a(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (l, _) = quad(c, 4, 27, Normalization::LMod3One)?;
    let k = c.family(F27, Weight::p_over(c.p, 3, 1), Third)?;
    let rhs = -zi(l) + c.pr() / zi(l);
    Ok(vec![w3(c)?, k, c.rat(&rhs)])
}

fn thm54b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let k = c.family(F27, Weight::p_over(p, 3, 1), Third)?;
    let f = c.factorial((p - 2) / 3);
    let rhs = c.frac(-(p as i128), 3) * f * f * f;
    Ok(vec![w3(c)?, k, rhs])
}

fn inv_binom_third_twelfth_sq(c: &mut Ctx) -> Result<PadicNum> {
    let cb = c.binom(c.p / 3, c.p / 12);
    (cb * cb).inv()
}

fn conj51(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F27, Weight::p_over(p, 4, 1), Full)?;
    let pr = c.pr();
    let rhs = match p % 12 {
        1 => c.rat(&four_x2_cubic(p, x_pos(c, 1, 9)?)),
        5 => c.rat(&two_p_cubic(p, x_pos(c, 2, 9)?)),
        7 => c.rat(&(q(-5, 27) * &pr * &pr)) * inv_binom_third_twelfth_sq(c)?,
        _ => c.rat(&(q(5, 54) * &pr * &pr)) * inv_binom_third_twelfth_sq(c)?,
    };
    Ok(vec![lhs, rhs])
}

fn conj52(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.sign(p / 12) * c.binom(p / 3, p / 12);
    let rhs = if p % 12 == 1 {
        2 * quad(c, 1, 9, Normalization::XMod3One)?.0
    } else {
        quad(c, 2, 9, Normalization::XMod3One)?.0
    };
    Ok(vec![lhs, c.int(rhs as i128)])
}

fn s12_d(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let (d4, d16) = (domb4(c)?, domb16(c)?);
    if p % 3 == 1 {
        let x = x_pos(c, 1, 3)?;
        Ok(vec![d4, d16, c.rat(&four_x2_cubic(p, x))])
    } else {
        let cb = c.binom((p - 1) / 2, (p - 5) / 6);
        let pr = c.pr();
        let rhs = c.rat(&(&pr * &pr / zi(2))).div(&(cb * cb))?;
        Ok(vec![d4, c.int(-2) * d16, rhs])
    }
}

fn s12_b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let (b3, b27) = (az3(c)?, az27(c)?);
    let pr = c.pr();
    Ok(match p % 12 {
        1 => vec![b3, b27, c.rat(&four_x2_cubic(p, x_pos(c, 1, 9)?))],
        5 => vec![b3, b27, c.rat(&two_p_cubic(p, x_pos(c, 2, 9)?))],
        7 => {
            let r = c.rat(&(q(-5, 3) * &pr * &pr)) * inv_binom_third_twelfth_sq(c)?;
            vec![b3, c.int(-15) * b27, r]
        }
        _ => {
            let r = c.rat(&(q(5, 6) * &pr * &pr)) * inv_binom_third_twelfth_sq(c)?;
            vec![b3, c.int(-15) * b27, r]
        }
    })
}

fn w_sum(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let k = c.family(F27, Weight::p_over(c.p, 3, 1), Third)?;
    Ok(vec![w3(c)?, k])
}

fn sum128(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = c.family(F128, Weight::one(), Full)?;
    let (x, _) = quad(c, 1, 2, Normalization::XMod4One)?;
    let two_x = zi(2 * x as i128);
    let rhs = c.sign(p / 8 + (p - 1) / 2) * c.rat(&(&two_x - c.pr() / &two_x));
    Ok(vec![lhs, rhs])
}

fn sum16_4k1(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let x = x_pos(c, 1, 1)?;
    Ok(vec![f16_p_over(c, 4, 1)?, c.rat(&four_x2_cubic(c.p, x))])
}

fn bew(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let (l, _) = quad(c, 4, 27, Normalization::LMod3One)?;
    let t = (c.p - 1) / 3;
    let rhs = -zi(l) + c.pr() / zi(l);
    Ok(vec![c.binom(2 * t, t), c.rat(&rhs)])
}

fn domb_trunc(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = domb16(c)?;
    let mut terms = Vec::new();
    for k in 0..=(p - 1) / 2 {
        let b = c.binom(2 * k, k);
        let t = b * b * c.binom(3 * k, k) * c.binom(p + 2 * k, 3 * k + 1);
        terms.push(t.div(&c.pow(-16, k))?);
    }
    Ok(vec![lhs, c.sum(&terms)?])
}

fn domb_half(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = domb16(c)?;
    let mut terms = Vec::new();
    for k in 0..=(p - 1) / 2 {
        let corr = c.sum(&[c.int(1), c.int(p as i128) * c.diff(c.h(2 * k)?, c.h(k)?)?])?;
        let t = k16(c, k) * c.frac(p as i128, 3 * k as i128 + 1) * corr;
        terms.push(t);
    }
    Ok(vec![lhs, c.sum(&terms)?])
}

fn az_trunc(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let p = c.p;
    let lhs = az3(c)?;
    let mut terms = Vec::new();
    for k in 0..=p / 3 {
        let hd = c.diff(c.h(3 * k)?, c.h(k)?)?;
        let corr = c.sum(&[c.int(1), -(c.int(p as i128) * hd)])?;
        let kern = c.binom(3 * k, k) * c.binom(2 * k, k) * c.pow(27, k).inv()?;
        terms.push(c.frac(p as i128, 4 * k as i128 + 1) * kern * corr);
    }
    Ok(vec![lhs, c.sum(&terms)?])
}

fn half_sum_b(c: &mut Ctx) -> Result<Vec<PadicNum>> {
    let b = c.b()?;
    let (bb, s) = c.ang(&b)?;
    let p = c.p;
    let h = (p - 1) / 2;
    let lhs = c.family(F16, Weight::p_over_shift(p, &b), Half)?;
    let j = bb - p.div_ceil(2);
    let r = p - bb;
    let ps1 = c.pr() * (&s + zi(1));
    let s1 = c.rat(&(&s + zi(1)));
    let num = c.gb(&(&b - zi(1)), h)?.mul(&c.binom(h, j));
    let den = s1
        .mul(&c.gb(&(&ps1 - zi(1)), r)?)
        .mul(&c.gb(&(-zi(1) - &ps1), j)?);
    let t1 = c.sign(r) * num.div(&den)?;
    let cr = c.binom(2 * r, r);
    let lead = cr.div(&c.pow(-16, r))?;
    let tail = -c.binom(h + r, 2 * r);
    let inner = c.sum(&[lead, tail])?;
    let t2 = c.sign(r) * s1.inv()? * cr * inner;
    Ok(vec![lhs, c.sum(&[t1, t2])?])
}

// ---- the table ---------------------------------------------------------------

pub(super) fn build() -> Vec<CongruenceCase> {
    use ParamKind as K;
    const TWO: &[&str] = &["lhs", "rhs"];
    const THREE: &[&str] = &["lhs", "rhs", "rhs2"];
    vec![
        entry("RV16", Theorem, "(1.1), \"conjectured the following congruences\"")
            .sides(TWO, |c| rv(c, F16, -1)),
        entry("RV27", Theorem, "(1.1), \"conjectured the following congruences\"")
            .sides(TWO, |c| rv(c, F27, -3)),
        entry("RV64", Theorem, "(1.1), \"conjectured the following congruences\"")
            .sides(TWO, |c| rv(c, F64, -2)),
        entry("RV432", Theorem, "(1.1), \"conjectured the following congruences\"")
            .sides(TWO, |c| rv(c, F432, -1)),
        entry("GEN_RV", Theorem, "(1.3), \"≡ (-1)^<a>_p mod p^2\"")
            .when("p ∤ den(a)", anyp)
            .params(K::A, adm_any_a)
            .sides(TWO, gen_rv),
        entry("GEN_ODD", Theorem, "(1.4), \"(2a+1)/(2k+1) ≡ 1 + 2(a-<a>_p)/p\"")
            .when("p ∤ den(a)", anyp)
            .params(K::A, adm_any_a)
            .sides(TWO, gen_odd),
        entry("SUM_KA", Theorem, "(2.8), \"(a-<a>_p)(p+a-<a>_p)/a^3\"")
            .when("a a p-unit", anyp)
            .modulus(3)
            .params(K::A, adm_sum_ka)
            .sides(&["lhs", "binomial", "closed"], sum_ka),
        entry("LEM21", Lemma, "Lemma 2.1, \"C(a-b,m+1)/C(a+b,m+1) S(a-m-1,b)\"")
            .when("m < <a>_p < p, <a+b>_p > m, b + <−b>_p ≢ 0 mod p^2", anyp)
            .modulus(3)
            .params(K::ABM, adm_lem21)
            .sides(TWO, lem21),
        entry("LEM22", Lemma, "Lemma 2.2, \"(1+t/(s+1)) p/b\"")
            .when("bt ≢ 0, s ≢ −1 mod p", anyp)
            .modulus(3)
            .params(K::BT, adm_lem22)
            .sides(TWO, lem22),
        entry("THM21_LOW", Theorem, "Theorem 2.1, \"p(s+t+1)(s-t)\"")
            .when("ab ≢ 0, <b>_p ≤ <a>_p, <b>_p ≤ p−1−<a>_p, s ≢ −1", anyp)
            .params(K::AB, adm_thm21_low)
            .sides(TWO, thm21_low),
        entry("THM21_HIGH", Theorem, "Theorem 2.1, \"p(s+t+1)(s-t)\"")
            .when("ab ≢ 0, <a>_p < <b>_p ≤ p−1−<a>_p, s ≢ −1", anyp)
            .params(K::AB, adm_thm21_high)
            .sides(TWO, thm21_high),
        entry("COR21", Theorem, "Corollary 2.1, \"(2t+1)/((a+1)(t+1)C(p-2-<a>_p,<a>_p))\"")
            .when("1 ≤ <a>_p ≤ (p−3)/2, t ≢ −1", anyp)
            .params(K::A, adm_cor21)
            .sides(TWO, cor21),
        entry("THM22_10", Theorem, "(2.10), \"(s+1/2)^2 p\"")
            .when("0 < <b>_p < p/2, s ≢ −1", anyp)
            .params(K::B, adm_thm22_2)
            .sides(TWO, thm22_10),
        entry("THM22_11", Theorem, "(2.11), \"(b-<b>_p)/(b^2 C((p-1)/2,<b>_p)^2)\"")
            .when("0 < <b>_p < p/2, s ≢ −1", anyp)
            .params(K::B, adm_thm22_2)
            .sides(TWO, thm22_11),
        entry("THM22_12", Theorem, "(2.12), \"(s+1/3)(s+2/3)p\"")
            .when("0 < <b>_p < p/3, s ≢ −1", anyp)
            .params(K::B, adm_thm22_3)
            .sides(TWO, thm22_12),
        entry("THM22_13", Theorem, "(2.13), \"(s+1/4)(s+3/4)p\"")
            .when("0 < <b>_p < p/4, s ≢ −1", anyp)
            .params(K::B, adm_thm22_4)
            .sides(TWO, thm22_13),
        entry("THM22_14", Theorem, "(2.14), \"(s+1/6)(s+5/6)p\"")
            .when("0 < <b>_p < p/6, s ≢ −1", anyp)
            .params(K::B, adm_thm22_6)
            .sides(TWO, thm22_14),
        entry("EX22_1", Theorem, "Theorem 2.2 examples, \"As examples\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(&["-half", "3*full", "rhs"], ex22_1),
        entry("EX22_2", Theorem, "Theorem 2.2 examples, \"As examples\"")
            .when("p ≡ 5 mod 6", |p| p % 6 == 5)
            .sides(&["8*S(3k+1)", "5*S(6k+1)", "rhs"], ex22_2),
        entry("EX22_3", Theorem, "Theorem 2.2 examples, \"As examples\"")
            .when("p ≡ 5 mod 8", |p| p % 8 == 5)
            .sides(&["45*S(8k+1)", "7*S(8k+3)", "rhs"], ex22_3),
        entry("EX22_4", Theorem, "Theorem 2.2 examples, \"As examples\"")
            .when("p ≡ 7 mod 8", |p| p % 8 == 7)
            .sides(&["14/9*S(8k+1)", "10*S(8k+3)", "rhs"], ex22_4),
        entry("THM23_15", Theorem, "(2.15), \"1/(2C(2(p-1)/3,(p-1)/3))\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(TWO, thm23_15),
        entry("THM23_16", Theorem, "(2.16), Theorem 2.3")
            .when("p ≡ 2 mod 3", |p| p % 3 == 2)
            .sides(TWO, thm23_16),
        entry("THM23_17", Theorem, "(2.17), \"(2^{p-1}+1)/(6C((p-1)/2,(p-1)/4))\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(TWO, thm23_17),
        entry("THM23_18", Theorem, "(2.18), Theorem 2.3")
            .when("p ≡ 3 mod 4", |p| p % 4 == 3)
            .sides(TWO, thm23_18),
        entry("THM23_19", Theorem, "(2.19), Theorem 2.3")
            .when("p ≡ 1 mod 6", |p| p % 6 == 1)
            .sides(TWO, thm23_19),
        entry("THM23_20", Theorem, "(2.20), Theorem 2.3")
            .when("p ≡ 5 mod 6", |p| p % 6 == 5)
            .sides(TWO, thm23_20),
        entry("THM24", Theorem, "Theorem 2.4, \"(2^{p-1}+2)/(3*2^{(p-1)/3})\"")
            .when("p > 3, split p ≡ 1/5 mod 6", anyp)
            .sides(TWO, thm24),
        entry("CONJ21", Conjecture, "Conjecture 2.1, \"(-3)^{(p-1)/4} mod p\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .modulus_by("p^2 (p ≡ 1 mod 12), p (p ≡ 5 mod 12)", |p| if p % 12 == 1 { 2 } else { 1 })
            .probe(|p| (p % 12 == 5).then_some(2))
            .sides(TWO, conj21),
        entry("CONJ22a", Conjecture, "Conjecture 2.2, \"-5/4 mod p^2\"")
            .sides(TWO, conj22a),
        entry("CONJ22b", Conjecture, "Conjecture 2.2, \"-5/4 mod p^2\"")
            .sides(TWO, conj22b),
        entry("CONJ23", Conjecture, "Conjecture 2.3, \"(-1)^{(p-1)/6}(4x^2-2p-p^2/(4x^2))\"")
            .when("p ≡ 1 mod 6", |p| p % 6 == 1)
            .modulus(3)
            .sides(TWO, conj23),
        entry("THM31", Theorem, "Theorem 3.1, \"1/t+2p(H_{2<a>_p}-H_{<a>_p})\"")
            .when("1 ≤ <a>_p < p/2, t ≢ 0", anyp)
            .params(K::A, adm_thm31)
            .sides(THREE, thm31),
        entry("THM32", Theorem, "Theorem 3.2, \"(3-2^{p-1})/2 C((p-1)/2,(p-1)/4)\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(TWO, thm32),
        entry("THM33", Theorem, "Theorem 3.3, \"C(2(p-1)/3,(p-1)/3) mod p^2\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(TWO, thm33),
        entry("THM34", Theorem, "Theorem 3.4, \"(5-2^p)/3 (-1)^{(p-1)/6}\"")
            .when("p ≡ 1 mod 6", |p| p % 6 == 1)
            .sides(TWO, thm34),
        entry("THM41", Theorem, "Theorem 4.1, \"1+p(2s+1)(H_{p-<b>_p}\"")
            .when("<b>_p > p/2, s ≢ −1", anyp)
            .params(K::B, adm_thm41)
            .sides(&["full", "half", "form1", "form2", "form3"], thm41),
        entry("COR41", Theorem, "Corollary 4.1, \"-(2s+2)/(2s+1)\"")
            .when("<b>_p > p/2, s ≢ −1, −1/2", anyp)
            .params(K::B, adm_cor41)
            .sides(TWO, cor41),
        entry("THM42a", Theorem, "Theorem 4.2, \"≡ 4x^2-2p mod p^2\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(TWO, thm42a),
        entry("THM42b", Theorem, "Theorem 4.2, \"≡ 4x^2-2p mod p^2\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(TWO, thm42b),
        entry("THM43a", Theorem, "Theorem 4.3, \"(2-(-1)^{(p-1)/2})\"")
            .when("p ≡ 1, 3 mod 8", |p| p % 8 == 1 || p % 8 == 3)
            .sides(TWO, thm43a),
        entry("THM43b", Theorem, "Theorem 4.3, \"(2-(-1)^{(p-1)/2})\"")
            .when("p ≡ 1, 3 mod 8", |p| p % 8 == 1 || p % 8 == 3)
            .sides(TWO, thm43b),
        entry("THM44a", Theorem, "Theorem 4.4, \"(3(p/3)-2)\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(TWO, thm44a),
        entry("THM44b", Theorem, "Theorem 4.4, \"(3(p/3)-2)\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(TWO, thm44b),
        entry("AUX48_49", Lemma, "(4.9), \"2c-p/(2c) ≡\" with c from (4.8)")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(&["sum864", "2c-p/(2c)", "binomial"], aux48_49),
        entry("CONJ41", Conjecture, "Conjecture 4.1, \"4x^2-2p-p^2/(4x^2) mod p^3\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .modulus(3)
            .sides(THREE, conj41),
        entry("CONJ42", Conjecture, "Conjecture 4.2, \"4x^2-2p-p^2/(4x^2) mod p^3\"")
            .when("p ≡ 1, 3 mod 8", |p| p % 8 == 1 || p % 8 == 3)
            .modulus(3)
            .sides(THREE, conj42),
        entry("CONJ43", Conjecture, "Conjecture 4.3, \"4x^2-2p-p^2/(4x^2) mod p^3\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .modulus(3)
            .sides(THREE, conj43),
        entry("THM51a", Theorem, "Theorem 5.1 = (1.9), \"if 3 | p-1 and so\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(&["D/16^n", "D/4^n", "4x^2-2p"], thm51a),
        entry("THM51b", Theorem, "Theorem 5.1 = (1.9), \"if 3 | p-1 and so\"")
            .when("p ≡ 2 mod 3", |p| p % 3 == 2)
            .sides(&["D/16^n", "D/4^n", "0"], thm51b),
        entry("LEM51", Lemma, "Lemma 5.1, \"C(2k,k)C(3k,k)/27^k * p/(4k+1)\"")
            .sides(&["b/(-3)^n", "b/(-27)^n", "kernel"], lem51),
        entry("THM52", Theorem, "Theorem 5.2, \"≡ 0 mod p^2\"")
            .when("p ≡ 3 mod 4", |p| p % 4 == 3)
            .sides(&["b/(-3)^n", "b/(-27)^n", "0"], thm52),
        entry("THM53", Theorem, "Theorem 5.3, \"2p-2x^2 mod p^2\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(&["b/(-3)^n", "b/(-27)^n", "rhs"], thm53),
        entry("AUX_CDE", Lemma, "(5.13), \"(1+pq_p(2)/2)(2A-p/(2A))\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .sides(TWO, aux_cde),
        entry("COR51", Theorem, "Corollary 5.1, \"(-12288)^k\"")
            .when("p ≡ 5 mod 12", |p| p % 12 == 5)
            .modulus(1)
            .sides(&["sum", "-4AB", "-2x^2"], cor51),
        entry("THM54a", Theorem, "Theorem 5.4, \"-p/3((p-2)/3)!^3\"")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(&["W/(-3)^n", "kernel", "-L+p/L"], thm54a),
        entry("THM54b", Theorem, "Theorem 5.4, \"-p/3((p-2)/3)!^3\"")
            .when("p ≡ 2 mod 3", |p| p % 3 == 2)
            .sides(&["W/(-3)^n", "kernel", "rhs"], thm54b),
        entry("CONJ51", Conjecture, "Conjecture 5.1, \"-5/27 p^2 C([p/3],[p/12])^{-2}\"")
            .when("p > 3, four cases mod 12", anyp)
            .modulus(3)
            .sides(TWO, conj51),
        entry("CONJ52", Conjecture, "Conjecture 5.2, \"(-1)^{[p/12]} C([p/3],[p/12])\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .modulus(1)
            .sides(TWO, conj52),
        entry("S12_D_CONJ", Conjecture, "§1, \"4x^2-2p-p^2/(4x^2) mod p^3 for p=x^2+3y^2\"")
            .when("p > 3, split mod 3", anyp)
            .modulus(3)
            .sides(&["D/4^n", "D/16^n (scaled)", "rhs"], s12_d),
        entry("S12_B_CONJ", Conjecture, "§1 [S12, Conjecture 4.16], \"-5/3 p^2 C([p/3],[p/12])^{-2}\"")
            .when("p > 3, four cases mod 12", anyp)
            .modulus(3)
            .sides(&["b/(-3)^n", "b/(-27)^n (scaled)", "rhs"], s12_b),
        entry("W_SUM", Theorem, "Theorem 5.4, first equivalence")
            .sides(&["W/(-3)^n", "kernel"], w_sum),
        entry("SUM128", Theorem, "§1 restated result on the 128 sum")
            .when("p ≡ 1, 3 mod 8", |p| p % 8 == 1 || p % 8 == 3)
            .sides(TWO, sum128),
        entry("SUM16_4K1", Theorem, "§4 restated result, \"4x^2-2p-p^2/(4x^2) mod p^3\"")
            .when("p ≡ 1 mod 4", |p| p % 4 == 1)
            .modulus(3)
            .sides(TWO, sum16_4k1),
        entry("BEW_BINOM", Lemma, "restated, C(2(p-1)/3,(p-1)/3) ≡ -L + p/L")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .sides(TWO, bew),
        entry("DOMB_TRUNC", Lemma, "proof of Theorem 5.1, truncated Domb sum")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .modulus(3)
            .sides(TWO, domb_trunc),
        entry("DOMB_HALF", Lemma, "proof of Theorem 5.1, half-range Domb sum")
            .when("p ≡ 1 mod 3", |p| p % 3 == 1)
            .modulus(3)
            .sides(TWO, domb_half),
        entry("AZ_TRUNC", Lemma, "proof of Lemma 5.1, third-range AZ sum")
            .modulus(3)
            .sides(TWO, az_trunc),
        entry("HALF_SUM_B", Lemma, "proof of Theorem 4.1, half sum mod p^3")
            .when("<b>_p > p/2, s ≢ −1", anyp)
            .modulus(3)
            .params(K::B, adm_thm41)
            .sides(TWO, half_sum_b),
    ]
}
