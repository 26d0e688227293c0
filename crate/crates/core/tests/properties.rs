use proptest::prelude::*;
use supercong::numthy::rational_residue;
use supercong::sequences::{sequence_exact, sequence_mod, SequenceId};
use supercong::{ratio, Error, PadicNum};

const PRIMES: &[u64] = &[5, 7, 11, 13, 101];

fn modulus(p: u64, m: u32) -> i128 {
    (p as i128).pow(m)
}

/// Plain modular reduction of n/d, p ∤ d.
fn reduce(n: i128, d: i128, p: u64, m: u32) -> u128 {
    let md = modulus(p, m);
    let (mut r0, mut r1, mut t0, mut t1) = (md, d.rem_euclid(md), 0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    (n.rem_euclid(md) * t0.rem_euclid(md)).rem_euclid(md) as u128
}

fn unit_pair() -> impl Strategy<Value = (u64, i128, i128)> {
    (prop::sample::select(PRIMES), -10_000i128..10_000, 1i128..10_000)
        .prop_filter("p-unit denominator", |(p, _, d)| d % *p as i128 != 0)
}

proptest! {
    #[test]
    fn round_trip((p, n, d) in unit_pair(), m in 1u32..4) {
        let x = PadicNum::from_ratio(n, d, p, m + 2);
        prop_assert_eq!(x.to_residue(m), Ok(reduce(n, d, p, m)));
        prop_assert_eq!(rational_residue(&ratio(n as i64, d as i64), p, m), Ok(reduce(n, d, p, m)));
    }

    #[test]
    fn valuation_of_scaled_units((p, n, d) in unit_pair(), k in 0u32..4) {
        prop_assume!(n % p as i128 != 0);
        let scaled = n * (p as i128).pow(k);
        let x = PadicNum::from_ratio(scaled, d, p, 5);
        prop_assert_eq!(x.valuation(), Some(k as i64));
        let y = PadicNum::from_ratio(d, scaled, p, 5);
        prop_assert_eq!(y.valuation(), Some(-(k as i64)));
        prop_assert!(matches!(y.to_residue(1), Err(Error::NegativeValuation(_))) || k == 0);
    }

    #[test]
    fn ring_laws((p, a, b) in unit_pair(), c in -500i128..500, d in 1i128..500) {
        prop_assume!(d % p as i128 != 0);
        let n = 6;
        let x = PadicNum::from_ratio(a, b, p, n);
        let y = PadicNum::from_int(c, p, n);
        let z = PadicNum::from_ratio(1, d, p, n);
        let m = 3;
        prop_assert_eq!(x.mul(&y).to_residue(m), y.mul(&x).to_residue(m));
        prop_assert_eq!(x.mul(&y).mul(&z).to_residue(m), x.mul(&y.mul(&z)).to_residue(m));
        if let (Ok(s1), Ok(s2)) = (x.add(&y), y.add(&x)) {
            prop_assert_eq!(s1.to_residue(m), s2.to_residue(m));
        }
        let want = (reduce(a, b, p, m) as i128 + c).rem_euclid(modulus(p, m)) as u128;
        match x.add(&y) {
            Ok(s) => prop_assert_eq!(s.to_residue(m), Ok(want)),
            Err(Error::PrecisionLoss(_)) => prop_assert_eq!(want, 0),
            Err(e) => prop_assert!(false, "{}", e),
        }
        if let (Ok(l), Ok(r)) = (x.add(&y).map(|s| s.mul(&z)), x.mul(&z).add(&y.mul(&z))) {
            prop_assert_eq!(l.to_residue(m), r.to_residue(m));
        }
    }

    #[test]
    fn division_inverts_multiplication((p, a, b) in unit_pair(), c in 1i128..5000) {
        let x = PadicNum::from_ratio(a, b, p, 5);
        let y = PadicNum::from_int(c, p, 5);
        let back = x.mul(&y).div(&y).unwrap();
        prop_assert_eq!(back.to_residue(2).ok(), x.to_residue(2).ok());
        if a != 0 {
            let sum = x.valuation().zip(y.valuation()).map(|(u, v)| u + v);
            prop_assert_eq!(x.mul(&y).valuation(), sum);
        }
    }

    #[test]
    fn negation_cancels((p, a, b) in unit_pair()) {
        prop_assume!(a != 0);
        let x = PadicNum::from_ratio(a, b, p, 4);
        prop_assert!(matches!(x.add(&x.neg()), Err(Error::PrecisionLoss(_))));
    }

    #[test]
    fn sequence_residues_match_exact(p in prop::sample::select(&[5u64, 7, 11, 13][..]), m in 1u32..4) {
        let n_max = 18;
        for id in [SequenceId::DOMB, SequenceId::AZ, SequenceId::W] {
            let exact = sequence_exact(id, n_max);
            let md = num_bigint::BigInt::from(modulus(p, m));
            let res = sequence_mod(id, n_max, p, m).unwrap();
            for (e, r) in exact.iter().zip(res) {
                let want = ((e % &md) + &md) % &md;
                prop_assert_eq!(want, num_bigint::BigInt::from(r));
            }
        }
    }
}
