//! Exact binomial identities over any field-like scalar.
//!
//! These serve as oracles: each function returns the two (or three) sides of
//! an identity evaluated without reduction, so a caller can compare them with `==`.

use std::fmt::Debug;
use std::ops::Neg;

use num_traits::{FromPrimitive, Num};

/// Scalar types the identities accept (e.g. `BigRational`, `Ratio<i128>`).
pub trait Field: Clone + Num + Neg<Output = Self> + FromPrimitive + PartialEq + Debug {}

impl<T> Field for T where T: Clone + Num + Neg<Output = T> + FromPrimitive + PartialEq + Debug {}

fn c<F: Field>(n: i64) -> F {
    F::from_i64(n).expect("small integer")
}

/// C(a, k) = a(a−1)⋯(a−k+1)/k!.
pub fn binom<F: Field>(a: &F, k: usize) -> F {
    let mut acc = F::one();
    for j in 0..k {
        acc = acc * (a.clone() - c(j as i64)) / c(j as i64 + 1);
    }
    acc
}

/// Σ_{k≤n} C(a,k)C(−1−a,k)(a+b)/(k+b) − Σ_{k≤n} C(a−1,k)C(−a,k)(a−b)/(k+b)
/// against 2C(a−1,n)C(−a−1,n).
pub fn paired_shift_difference<F: Field>(a: &F, b: &F, n: usize) -> (F, F) {
    let one = F::one();
    let neg_a_1 = -a.clone() - one.clone();
    let a_1 = a.clone() - one.clone();
    let neg_a = -a.clone();
    let mut lhs = F::zero();
    for k in 0..=n {
        let den = c::<F>(k as i64) + b.clone();
        lhs = lhs + binom(a, k) * binom(&neg_a_1, k) * (a.clone() + b.clone()) / den.clone();
        lhs = lhs - binom(&a_1, k) * binom(&neg_a, k) * (a.clone() - b.clone()) / den;
    }
    (lhs, c::<F>(2) * binom(&a_1, n) * binom(&neg_a_1, n))
}

/// Σ_{k≤n} C(n,k)(−1)^k/(k+x), 1/(x C(x+n,n)) and (−1)^n/((x+n) C(−x,n)).
pub fn alternating_reciprocal<F: Field>(x: &F, n: usize) -> [F; 3] {
    let mut lhs = F::zero();
    for k in 0..=n {
        let t = binom(&c::<F>(n as i64), k) / (c::<F>(k as i64) + x.clone());
        lhs = if k % 2 == 0 { lhs + t } else { lhs - t };
    }
    let mid = F::one() / (x.clone() * binom(&(x.clone() + c(n as i64)), n));
    let sign: F = if n.is_multiple_of(2) { F::one() } else { -F::one() };
    let last = sign / ((x.clone() + c(n as i64)) * binom(&(-x.clone()), n));
    [lhs, mid, last]
}

/// Σ_{k≤n} C(2k,k)(−1)^k C(n+k,2k)/(k+b) against
/// (−1)^n (b−1)(b−2)⋯(b−n) / (b(b+1)⋯(b+n)).
pub fn central_alternating<F: Field>(b: &F, n: usize) -> (F, F) {
    let mut lhs = F::zero();
    for k in 0..=n {
        let t = binom(&c::<F>(2 * k as i64), k) * binom(&c::<F>((n + k) as i64), 2 * k)
            / (c::<F>(k as i64) + b.clone());
        lhs = if k % 2 == 0 { lhs + t } else { lhs - t };
    }
    let mut num = F::one();
    for i in 1..=n {
        num = num * (b.clone() - c(i as i64));
    }
    let mut den = F::one();
    for i in 0..=n {
        den = den * (b.clone() + c(i as i64));
    }
    let rhs = num / den;
    (lhs, if n.is_multiple_of(2) { rhs } else { -rhs })
}

/// Σ_{n=r}^{m} C(n,r) against C(m+1,r+1).
pub fn hockey_stick<F: Field>(r: usize, m: usize) -> (F, F) {
    let mut lhs = F::zero();
    for n in r..=m {
        lhs = lhs + binom(&c::<F>(n as i64), r);
    }
    (lhs, binom(&c::<F>(m as i64 + 1), r + 1))
}

/// The four kernel identities: C(−1/d,k)C(−1+1/d,k) for d = 2, 3, 4, 6
/// against the central binomial products over 16^k, 27^k, 64^k, 432^k.
pub fn central_kernels<F: Field>(k: usize) -> [(F, F); 4] {
    let kk = k as i64;
    let cb = |n: i64, j: i64| binom(&c::<F>(n), j as usize);
    let pw = |base: i64| {
        let mut x = F::one();
        for _ in 0..k {
            x = x * c(base);
        }
        x
    };
    let pair = |num: i64, den: i64| {
        let a = c::<F>(-num) / c(den);
        let b = c::<F>(num - den) / c(den);
        binom(&a, k) * binom(&b, k)
    };
    [
        (pair(1, 2), cb(2 * kk, kk) * cb(2 * kk, kk) / pw(16)),
        (pair(1, 3), cb(2 * kk, kk) * cb(3 * kk, kk) / pw(27)),
        (pair(1, 4), cb(2 * kk, kk) * cb(4 * kk, 2 * kk) / pw(64)),
        (pair(1, 6), cb(3 * kk, kk) * cb(6 * kk, 3 * kk) / pw(432)),
    ]
}

/// Σ_{k<n} C(a,k)C(−1−a,k)/(k+a) against C(a−1,n−1)C(−a−1,n−1)/a.
pub fn pair_sum_at_shift<F: Field>(a: &F, n: usize) -> (F, F) {
    let neg_a_1 = -a.clone() - F::one();
    let mut lhs = F::zero();
    for k in 0..n {
        lhs = lhs + binom(a, k) * binom(&neg_a_1, k) / (c::<F>(k as i64) + a.clone());
    }
    let rhs = binom(&(a.clone() - F::one()), n - 1) * binom(&neg_a_1, n - 1) / a.clone();
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{ratio, Rational};
    use num_rational::Ratio;

    #[test]
    fn binom_of_half() {
        // C(−1/2, 2) = 3/8
        assert_eq!(binom(&ratio(-1, 2), 2), ratio(3, 8));
        assert_eq!(binom(&ratio(7, 1), 3), ratio(35, 1));
    }

    #[test]
    fn works_for_small_ratio_type() {
        let a = Ratio::<i128>::new(2, 5);
        let (l, r) = pair_sum_at_shift(&a, 5);
        assert_eq!(l, r);
    }

    #[test]
    fn shift_sum_exact_at_five() {
        let (l, r) = pair_sum_at_shift::<Rational>(&ratio(1, 3), 5);
        assert_eq!(l, r);
    }
}
