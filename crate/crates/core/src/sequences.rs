//! Domb, Almkvist–Zudilin and W numbers, exact and modulo p^m.

use std::collections::HashMap;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;
use std::sync::Arc;

use num_traits::{FromPrimitive, Num};

use crate::error::{Error, Result};
use crate::padic::modular::{mul_mod, reduce_i128};
use crate::padic::FactorialTable;
use crate::Integer;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceTag {
    Domb,
    Az,
    W,
}

/// Which formula produces the values. `ReducedAlt` is the second AZ form
/// (the sum over k ≤ n with (−27)^{n−k}).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Definition,
    Reduced,
    ReducedAlt,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SequenceId {
    pub tag: SequenceTag,
    pub variant: Variant,
}

impl SequenceId {
    pub const DOMB: SequenceId = SequenceId { tag: SequenceTag::Domb, variant: Variant::Definition };
    pub const AZ: SequenceId = SequenceId { tag: SequenceTag::Az, variant: Variant::Definition };
    pub const W: SequenceId = SequenceId { tag: SequenceTag::W, variant: Variant::Definition };

    pub fn new(tag: SequenceTag, variant: Variant) -> Result<Self> {
        let ok = matches!(
            (tag, variant),
            (_, Variant::Definition) | (SequenceTag::Domb, Variant::Reduced) | (SequenceTag::Az, _)
        );
        if !ok {
            return Err(Error::DomainError(format!("no {variant:?} formula for {tag:?}")));
        }
        Ok(SequenceId { tag, variant })
    }

    /// Largest binomial top argument needed up to index n.
    fn table_size(&self, n: usize) -> usize {
        match (self.tag, self.variant) {
            (SequenceTag::Domb, Variant::Definition) => 2 * n,
            (SequenceTag::Domb, _) => 3 * n,
            (SequenceTag::Az, Variant::ReducedAlt) => 4 * n,
            (SequenceTag::Az, _) => 2 * n,
            (SequenceTag::W, _) => n,
        }
        .max(1)
    }
}

impl fmt::Display for SequenceTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SequenceTag::Domb => "domb",
            SequenceTag::Az => "az",
            SequenceTag::W => "w",
        })
    }
}

impl FromStr for SequenceTag {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "domb" | "d" => Ok(SequenceTag::Domb),
            "az" | "b" => Ok(SequenceTag::Az),
            "w" => Ok(SequenceTag::W),
            _ => Err(Error::DomainError(format!("unknown sequence {s:?}"))),
        }
    }
}

/// Pascal triangle rows 0..=n.
pub fn pascal<T: Clone + Num>(n: usize) -> Vec<Vec<T>> {
    let mut rows: Vec<Vec<T>> = Vec::with_capacity(n + 1);
    rows.push(vec![T::one()]);
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![T::one(); i + 1];
        for k in 1..i {
            row[k] = prev[k - 1].clone() + prev[k].clone();
        }
        rows.push(row);
    }
    rows
}

/// Exact values over any signed integer type.
pub fn sequence_exact_in<T>(id: SequenceId, n_max: usize) -> Vec<T>
where
    T: Clone + Num + Neg<Output = T> + FromPrimitive,
{
    let rows = pascal::<T>(id.table_size(n_max));
    let c = |n: usize, k: usize| if k <= n { rows[n][k].clone() } else { T::zero() };
    let pw = |base: i64, e: usize| {
        let b = T::from_i64(base).unwrap();
        (0..e).fold(T::one(), |acc, _| acc * b.clone())
    };
    (0..=n_max)
        .map(|n| {
            let mut s = T::zero();
            match (id.tag, id.variant) {
                (SequenceTag::Domb, Variant::Definition) => {
                    for k in 0..=n {
                        s = s + c(n, k) * c(n, k) * c(2 * k, k) * c(2 * n - 2 * k, n - k);
                    }
                }
                (SequenceTag::Domb, _) => {
                    for k in 0..=n {
                        s = s + c(2 * k, k) * c(2 * k, k) * c(3 * k, k) * c(n + 2 * k, 3 * k)
                            * pw(-16, n - k);
                    }
                    if n % 2 == 1 {
                        s = -s;
                    }
                }
                (SequenceTag::Az, Variant::Definition) => {
                    for k in 0..=n / 3 {
                        s = s + c(2 * k, k) * c(3 * k, k) * c(n, 3 * k) * c(n + k, k)
                            * pw(-3, n - 3 * k);
                    }
                }
                (SequenceTag::Az, Variant::Reduced) => {
                    for k in 0..=n / 3 {
                        s = s + c(2 * k, k) * c(2 * k, k) * c(4 * k, 2 * k) * c(n + k, 4 * k)
                            * pw(-3, n - 3 * k);
                    }
                }
                (SequenceTag::Az, Variant::ReducedAlt) => {
                    for k in 0..=n {
                        s = s + c(2 * k, k) * c(2 * k, k) * c(4 * k, 2 * k) * c(n + 3 * k, 4 * k)
                            * pw(-27, n - k);
                    }
                }
                (SequenceTag::W, _) => {
                    for k in 0..=n / 3 {
                        s = s + c(2 * k, k) * c(3 * k, k) * c(n, 3 * k) * pw(-3, n - 3 * k);
                    }
                }
            }
            s
        })
        .collect()
}

pub fn sequence_exact(id: SequenceId, n_max: usize) -> Vec<Integer> {
    sequence_exact_in::<Integer>(id, n_max)
}

fn powers(base: i128, n: usize, m: u128) -> Vec<u128> {
    let b = reduce_i128(base, m);
    let mut v = Vec::with_capacity(n + 1);
    v.push(1 % m);
    for i in 1..=n {
        v.push(mul_mod(v[i - 1], b, m));
    }
    v
}

/// Residues modulo the table's modulus, using valuation-tracked binomials.
pub fn sequence_mod_with(id: SequenceId, n_max: usize, t: &FactorialTable) -> Vec<u128> {
    assert!(t.max() >= id.table_size(n_max), "factorial table too small");
    let m = t.modulus();
    let c = |n: usize, k: usize| t.binom_residue(n, k);
    let mul = |a: u128, b: u128| mul_mod(a, b, m);
    let base = match (id.tag, id.variant) {
        (SequenceTag::Domb, Variant::Reduced) => -16,
        (SequenceTag::Az, Variant::ReducedAlt) => -27,
        _ => -3,
    };
    let pw = powers(base, n_max, m);
    (0..=n_max)
        .map(|n| {
            let mut s = 0u128;
            match (id.tag, id.variant) {
                (SequenceTag::Domb, Variant::Definition) => {
                    for k in 0..=n {
                        let a = c(n, k);
                        s += mul(mul(a, a), mul(c(2 * k, k), c(2 * n - 2 * k, n - k)));
                        s %= m;
                    }
                }
                (SequenceTag::Domb, _) => {
                    for k in 0..=n {
                        let a = c(2 * k, k);
                        let t1 = mul(mul(a, a), mul(c(3 * k, k), c(n + 2 * k, 3 * k)));
                        s = (s + mul(t1, pw[n - k])) % m;
                    }
                    if n % 2 == 1 {
                        s = (m - s) % m;
                    }
                }
                (SequenceTag::Az, Variant::Definition) => {
                    for k in 0..=n / 3 {
                        let t1 = mul(mul(c(2 * k, k), c(3 * k, k)), mul(c(n, 3 * k), c(n + k, k)));
                        s = (s + mul(t1, pw[n - 3 * k])) % m;
                    }
                }
                (SequenceTag::Az, Variant::Reduced) => {
                    for k in 0..=n / 3 {
                        let a = c(2 * k, k);
                        let t1 = mul(mul(a, a), mul(c(4 * k, 2 * k), c(n + k, 4 * k)));
                        s = (s + mul(t1, pw[n - 3 * k])) % m;
                    }
                }
                (SequenceTag::Az, Variant::ReducedAlt) => {
                    for k in 0..=n {
                        let a = c(2 * k, k);
                        let t1 = mul(mul(a, a), mul(c(4 * k, 2 * k), c(n + 3 * k, 4 * k)));
                        s = (s + mul(t1, pw[n - k])) % m;
                    }
                }
                (SequenceTag::W, _) => {
                    for k in 0..=n / 3 {
                        let t1 = mul(mul(c(2 * k, k), c(3 * k, k)), c(n, 3 * k));
                        s = (s + mul(t1, pw[n - 3 * k])) % m;
                    }
                }
            }
            s
        })
        .collect()
}

/// Residues of the first n_max+1 terms modulo p^m.
pub fn sequence_mod(id: SequenceId, n_max: usize, p: u64, m: u32) -> Result<Vec<u128>> {
    crate::padic::check_precision(p, m)?;
    let t = FactorialTable::new(p, m, id.table_size(n_max));
    Ok(sequence_mod_with(id, n_max, &t))
}

/// Per-worker cache of factorial tables and sequence residues.
#[derive(Default)]
pub struct SequenceMemo {
    tables: HashMap<(u64, u32), Arc<FactorialTable>>,
    values: HashMap<(SequenceId, u64, u32, usize), Arc<Vec<u128>>>,
}

impl SequenceMemo {
    pub fn new() -> Self {
        Self::default()
    }

    /// A factorial table modulo p^m covering at least `max`.
    pub fn table(&mut self, p: u64, m: u32, max: usize) -> Arc<FactorialTable> {
        if let Some(t) = self.tables.get(&(p, m)) {
            if t.max() >= max {
                return t.clone();
            }
        }
        let t = Arc::new(FactorialTable::new(p, m, max.max(4 * p as usize)));
        self.tables.insert((p, m), t.clone());
        t
    }

    pub fn residues(&mut self, id: SequenceId, n_max: usize, p: u64, m: u32) -> Arc<Vec<u128>> {
        if let Some(v) = self.values.get(&(id, p, m, n_max)) {
            return v.clone();
        }
        let t = self.table(p, m, id.table_size(n_max));
        let v = Arc::new(sequence_mod_with(id, n_max, &t));
        self.values.insert((id, p, m, n_max), v.clone());
        v
    }

    /// Drop everything cached for primes other than `p`.
    pub fn retain_prime(&mut self, p: u64) {
        self.tables.retain(|k, _| k.0 == p);
        self.values.retain(|k, _| k.1 == p);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_integer::Integer as _;
    use num_traits::ToPrimitive;

    fn small(id: SequenceId, n: usize) -> Vec<i64> {
        sequence_exact(id, n).iter().map(|x| x.to_i64().unwrap()).collect()
    }

    #[test]
    fn exact_values() {
        assert_eq!(small(SequenceId::DOMB, 6), vec![1, 4, 28, 256, 2716, 31504, 387136]);
        assert_eq!(small(SequenceId::AZ, 5), vec![1, -3, 9, -3, -279, 2997]);
        assert_eq!(small(SequenceId::W, 5), vec![1, -3, 9, -21, 9, 297]);
    }

    #[test]
    fn residues() {
        assert_eq!(sequence_mod(SequenceId::DOMB, 3, 13, 2).unwrap(), vec![1, 4, 28, 87]);
        assert_eq!(sequence_mod(SequenceId::AZ, 0, 11, 3).unwrap(), vec![1]);
        assert_eq!(sequence_mod(SequenceId::AZ, 3, 7, 2).unwrap(), vec![1, 46, 9, 46]);
    }

    #[test]
    fn residues_match_exact_reduction() {
        for tag in [SequenceTag::Domb, SequenceTag::Az, SequenceTag::W] {
            let id = SequenceId { tag, variant: Variant::Definition };
            let exact = sequence_exact(id, 25);
            let modp = sequence_mod(id, 25, 7, 2).unwrap();
            for (e, r) in exact.iter().zip(&modp) {
                let e = e.mod_floor(&Integer::from(49));
                assert_eq!(e.to_u128().unwrap(), *r, "{tag:?}");
            }
        }
    }

    #[test]
    fn invalid_variant() {
        assert!(SequenceId::new(SequenceTag::W, Variant::Reduced).is_err());
    }
}
