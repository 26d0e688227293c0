//! Truncated p-adic arithmetic and a registry of supercongruences for
//! central binomial sums and Apéry-like sequences.
//!
//! Every congruence is checked by exact arithmetic modulo p^m. Parameters
//! are rationals; residues are canonical integers in `[0, p^m)`.

pub mod catalog;
pub mod cli;
pub mod error;
pub mod numthy;
pub mod padic;
pub mod quadforms;
pub mod sequences;

pub use error::{Error, Result};
pub use padic::PadicNum;

/// Exact rational parameter type.
pub type Rational = num_rational::BigRational;
/// Exact integer type for sequence values.
pub type Integer = num_bigint::BigInt;

/// Construct `n/d` as a [`Rational`].
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}
