//! Representations m·p = x² + d·y² with a sign normalization that picks one solution.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Normalization {
    /// x > 0 and y > 0; x odd when d = 1.
    Positive,
    /// x ≡ 1 mod 4, y > 0.
    XMod4One,
    /// L ≡ 1 mod 3, M > 0.
    LMod3One,
    /// x ≡ 1 mod 3, y > 0.
    XMod3One,
    /// A ≡ 1 mod 4 and B ≡ A mod 3.
    AbPair,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FormSpec {
    pub multiplier: u32,
    pub d: u32,
    pub normalization: Normalization,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadRep {
    pub x: i64,
    pub y: i64,
    pub spec: FormSpec,
}

impl FormSpec {
    pub const fn new(multiplier: u32, d: u32, normalization: Normalization) -> Self {
        FormSpec { multiplier, d, normalization }
    }

    /// Congruence condition on p under which a normalized solution exists.
    pub fn applies(&self, p: u64) -> bool {
        if p <= 3 {
            return false;
        }
        let base = match (self.multiplier, self.d) {
            (1, 1) | (1, 4) => p % 4 == 1,
            (1, 2) => p % 8 == 1 || p % 8 == 3,
            (1, 3) | (4, 27) | (4, 3) => p % 3 == 1,
            (1, 9) => p % 12 == 1,
            (2, 9) => p % 12 == 5,
            _ => true,
        };
        base && (self.normalization != Normalization::AbPair || p % 12 == 5)
    }

    fn accepts(&self, x: i64, y: i64) -> bool {
        match self.normalization {
            Normalization::Positive => x > 0 && y > 0 && (self.d != 1 || x % 2 != 0),
            Normalization::XMod4One => x.rem_euclid(4) == 1 && y > 0,
            Normalization::LMod3One | Normalization::XMod3One => x.rem_euclid(3) == 1 && y > 0,
            Normalization::AbPair => x.rem_euclid(4) == 1 && (y - x).rem_euclid(3) == 0,
        }
    }

    /// Names of the two unknowns, e.g. ("L", "M").
    pub fn var_names(&self) -> (&'static str, &'static str) {
        match self.normalization {
            Normalization::LMod3One => ("L", "M"),
            Normalization::AbPair => ("A", "B"),
            _ => ("x", "y"),
        }
    }
}

impl fmt::Display for FormSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = self.var_names();
        let m = if self.multiplier == 1 { String::new() } else { self.multiplier.to_string() };
        let d = if self.d == 1 { String::new() } else { self.d.to_string() };
        write!(f, "{m}p={a}^2+{d}{b}^2")?;
        let tag = match self.normalization {
            Normalization::Positive => "positive",
            Normalization::XMod4One => "x_mod4_1",
            Normalization::LMod3One => "L_mod3_1",
            Normalization::XMod3One => "x_mod3_1",
            Normalization::AbPair => "AB_pair",
        };
        write!(f, " [{tag}]")
    }
}

impl FromStr for FormSpec {
    type Err = Error;

    /// Accepts `p=x^2+3y^2`, `4p=L^2+27M^2`, `p=A^2+B^2`, optionally followed by
    /// `,` and one of `positive`, `x_mod4_1`, `L_mod3_1`, `x_mod3_1`, `AB_pair`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadForm(s.to_string());
        let cleaned: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let (eq, norm) = match cleaned.split_once([',', ';']) {
            Some((e, n)) => (e.to_string(), Some(n.to_string())),
            None => (cleaned.clone(), None),
        };
        let (lhs, rhs) = eq.split_once('=').ok_or_else(bad)?;
        let mult_str = lhs.strip_suffix('p').ok_or_else(bad)?;
        let multiplier: u32 = if mult_str.is_empty() { 1 } else { mult_str.parse().map_err(|_| bad())? };
        let (t1, t2) = rhs.split_once('+').ok_or_else(bad)?;
        let v1 = t1.strip_suffix("^2").ok_or_else(bad)?;
        let t2 = t2.strip_suffix("^2").ok_or_else(bad)?;
        let split = t2.find(|c: char| !c.is_ascii_digit()).ok_or_else(bad)?;
        let (dstr, v2) = t2.split_at(split);
        let d: u32 = if dstr.is_empty() { 1 } else { dstr.parse().map_err(|_| bad())? };
        if v1.len() != 1 || v2.len() != 1 {
            return Err(bad());
        }
        let default = match v1 {
            "L" => Normalization::LMod3One,
            "A" => Normalization::AbPair,
            _ => Normalization::Positive,
        };
        let normalization = match norm.as_deref() {
            None => default,
            Some(n) => match n.to_ascii_lowercase().as_str() {
                "positive" => Normalization::Positive,
                "x_mod4_1" => Normalization::XMod4One,
                "l_mod3_1" => Normalization::LMod3One,
                "x_mod3_1" => Normalization::XMod3One,
                "ab_pair" => Normalization::AbPair,
                _ => return Err(bad()),
            },
        };
        if !matches!(multiplier, 1 | 2 | 4) || d == 0 {
            return Err(bad());
        }
        Ok(FormSpec { multiplier, d, normalization })
    }
}

fn isqrt(n: u64) -> u64 {
    let mut r = (n as f64).sqrt() as u64;
    while r * r > n {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= n {
        r += 1;
    }
    r
}

/// Every integer solution (x, y) of multiplier·p = x² + d·y², all signs.
pub fn all_solutions(p: u64, multiplier: u32, d: u32) -> Vec<(i64, i64)> {
    let n = multiplier as u64 * p;
    let mut out = Vec::new();
    for x in 0..=isqrt(n) {
        let r = n - x * x;
        if !r.is_multiple_of(d as u64) {
            continue;
        }
        let y2 = r / d as u64;
        let y = isqrt(y2);
        if y * y != y2 {
            continue;
        }
        for sx in if x == 0 { vec![1] } else { vec![1, -1] } {
            for sy in if y == 0 { vec![1] } else { vec![1, -1] } {
                out.push((sx * x as i64, sy * y as i64));
            }
        }
    }
    out
}

/// The unique normalized solution.
pub fn represent(p: u64, spec: FormSpec) -> Result<QuadRep> {
    let hits: Vec<_> = all_solutions(p, spec.multiplier, spec.d)
        .into_iter()
        .filter(|&(x, y)| spec.accepts(x, y))
        .collect();
    match hits.len() {
        0 => Err(Error::NotRepresentable(p, spec.to_string())),
        1 => Ok(QuadRep { x: hits[0].0, y: hits[0].1, spec }),
        n => Err(Error::AmbiguousNormalization(p, spec.to_string(), n)),
    }
}

/// The integer c for p ≡ 1 mod 4. Write p = x² + y² with x ≡ 1 mod 4.
/// For p ≡ 1 mod 12, c = x if 3 ∤ x and c = −x otherwise.
/// For p ≡ 5 mod 12, c = y with y ≡ x mod 3.
pub fn c_value(p: u64) -> Result<i64> {
    if p % 4 != 1 {
        return Err(Error::DomainError(format!("c needs p ≡ 1 mod 4, got {p}")));
    }
    if p % 12 == 1 {
        let r = represent(p, FormSpec::new(1, 1, Normalization::XMod4One))?;
        Ok(if r.x % 3 != 0 { r.x } else { -r.x })
    } else {
        Ok(represent(p, FormSpec::new(1, 1, Normalization::AbPair))?.y)
    }
}

/// The form specs the registry consumes.
pub const USED_FORMS: &[FormSpec] = &[
    FormSpec::new(1, 1, Normalization::Positive),
    FormSpec::new(1, 1, Normalization::XMod4One),
    FormSpec::new(1, 1, Normalization::AbPair),
    FormSpec::new(1, 2, Normalization::Positive),
    FormSpec::new(1, 2, Normalization::XMod4One),
    FormSpec::new(1, 3, Normalization::Positive),
    FormSpec::new(1, 4, Normalization::Positive),
    FormSpec::new(1, 9, Normalization::Positive),
    FormSpec::new(1, 9, Normalization::XMod3One),
    FormSpec::new(2, 9, Normalization::Positive),
    FormSpec::new(2, 9, Normalization::XMod3One),
    FormSpec::new(4, 27, Normalization::LMod3One),
    FormSpec::new(4, 27, Normalization::Positive),
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn represent_examples() {
        let s: FormSpec = "p=x^2+3y^2".parse().unwrap();
        let r = represent(13, s).unwrap();
        assert_eq!((r.x, r.y), (1, 2));
        let r = represent(7, s).unwrap();
        assert_eq!((r.x, r.y), (2, 1));
        let l: FormSpec = "4p=L^2+27M^2".parse().unwrap();
        let r = represent(13, l).unwrap();
        assert_eq!((r.x, r.y), (-5, 1));
        let q: FormSpec = "p=x^2+y^2".parse().unwrap();
        assert!(matches!(represent(11, q), Err(Error::NotRepresentable(..))));
    }

    #[test]
    fn c_value_examples() {
        assert_eq!(c_value(13).unwrap(), 3);
        assert_eq!(c_value(5).unwrap(), -2);
        assert!(c_value(7).is_err());
    }

    #[test]
    fn parse_round_trip() {
        for f in USED_FORMS {
            let text = f.to_string();
            let (eq, tag) = text.split_once(" [").unwrap();
            let again: FormSpec = format!("{eq},{}", tag.trim_end_matches(']')).parse().unwrap();
            assert_eq!(&again, f);
        }
        assert!("p=x^3+y^2".parse::<FormSpec>().is_err());
        assert!("q=x^2+y^2".parse::<FormSpec>().is_err());
    }
}
