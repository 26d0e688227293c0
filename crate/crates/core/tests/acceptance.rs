//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use num_traits::Zero;
use supercong::catalog::{
    self, evaluate, find, params, registry, sum_central, sum_family, CheckResult, EvalOptions,
    Family, Range, Status, SweepOptions, Weight,
};
use supercong::numthy::exact;
use supercong::numthy::helpers::{fixed_checks, shifted_binomial, top_binomial_pair};
use supercong::numthy::{is_prime, odd_primes};
use supercong::quadforms::{represent, FormSpec, Normalization, USED_FORMS};
use supercong::sequences::{sequence_exact, sequence_mod, SequenceId, SequenceMemo, SequenceTag, Variant};
use supercong::{ratio, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn check(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn within(start: Instant, budget: Duration, detail: String) -> Outcome {
    let t = start.elapsed();
    if t > budget {
        Err(format!("{detail}; took {t:.1?}, budget {budget:?}"))
    } else {
        Ok(format!("{detail}; {t:.1?}"))
    }
}

fn workers() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

// ---------------------------------------------------------------------------

fn exact_identities() -> Outcome {
    let start = Instant::now();
    let shifts = [ratio(1, 3), ratio(-2, 5), ratio(7, 2), ratio(-11, 6)];
    let mut count = 0;
    for a in &shifts {
        for b in &shifts {
            for n in 0..=12 {
                let (l, r) = exact::paired_shift_difference::<Rational>(a, b, n);
                check(l == r, || format!("paired shift difference a={a} b={b} n={n}"))?;
                count += 1;
            }
        }
    }
    let xs = [ratio(1, 3), ratio(-2, 5), ratio(7, 2), ratio(3, 1)];
    for x in &xs {
        for n in 0..=20 {
            let [s, f1, f2] = exact::alternating_reciprocal::<Rational>(x, n);
            check(s == f1 && s == f2, || format!("alternating reciprocal x={x} n={n}"))?;
            let (l, r) = exact::central_alternating::<Rational>(x, n);
            check(l == r, || format!("central alternating b={x} n={n}"))?;
            let (l, r) = exact::pair_sum_at_shift::<Rational>(x, n + 1);
            check(l == r, || format!("pair sum at shift a={x} n={}", n + 1))?;
            count += 3;
        }
    }
    for r in 0..=10 {
        for m in r..=30 {
            let (l, h) = exact::hockey_stick::<Rational>(r, m);
            check(l == h, || format!("hockey stick r={r} m={m}"))?;
            count += 1;
        }
    }
    for k in 0..=30 {
        for (i, (l, r)) in exact::central_kernels::<Rational>(k).into_iter().enumerate() {
            check(l == r, || format!("kernel {i} at k={k}"))?;
            count += 1;
        }
    }
    let dual = |tag, variant| sequence_exact(SequenceId::new(tag, variant).unwrap(), 40);
    let domb = dual(SequenceTag::Domb, Variant::Definition);
    check(domb == dual(SequenceTag::Domb, Variant::Reduced), || "Domb dual formula".into())?;
    let az = dual(SequenceTag::Az, Variant::Definition);
    check(az == dual(SequenceTag::Az, Variant::Reduced), || "AZ first dual formula".into())?;
    check(az == dual(SequenceTag::Az, Variant::ReducedAlt), || "AZ second dual formula".into())?;
    within(start, Duration::from_secs(5), format!("{count} identity instances, 3 dual formulas n ≤ 40"))
}

fn helper_congruences() -> Outcome {
    let start = Instant::now();
    let primes = odd_primes(5, 200);
    let mut n = 0;
    for &p in &primes {
        let fails = fixed_checks(p);
        check(fails.is_empty(), || format!("{:?}", fails[0]))?;
        n += 1;
        let mut done = 0;
        let mut i = 0;
        while done < 50 {
            let mut rng = params::rng_for(7, "helpers", p, i);
            i += 1;
            let a = params::random_rational(&mut rng, p);
            let m = params::random_rational(&mut rng, p);
            let k = rand::Rng::gen_range(&mut rng, 0..p);
            // C(a+mp, k) needs a − i ≢ 0 mod p² for i < k
            if a.is_integer() && a >= Rational::zero() && a < Rational::from_integer(k.into()) {
                continue;
            }
            let r = shifted_binomial(&a, &m, k, p).map_err(|e| format!("shifted binomial a={a} m={m} k={k} p={p}: {e}"))?;
            check(r.is_none(), || format!("{r:?} a={a} m={m}"))?;
            if supercong::numthy::angle(&a, p).is_ok_and(|d| d.angle != 0) {
                let r = top_binomial_pair(&a, p).map_err(|e| format!("top pair a={a} p={p}: {e}"))?;
                check(r.is_none(), || format!("{r:?} a={a}"))?;
            }
            done += 1;
            n += 2;
        }
    }
    within(start, Duration::from_secs(30), format!("{} primes, {n} checks", primes.len()))
}

struct Tally {
    pass: usize,
    fail: Vec<CheckResult>,
    skip: BTreeMap<String, usize>,
}

fn tally(results: &[CheckResult]) -> Tally {
    let mut t = Tally { pass: 0, fail: Vec::new(), skip: BTreeMap::new() };
    for r in results {
        if r.is_pass() {
            t.pass += 1;
        } else if r.is_fail() {
            t.fail.push(r.clone());
        } else {
            let why = r.reason.clone().unwrap_or_default();
            let class = if why.contains("not p-integral") {
                format!("{} p={} not p-integral", r.case, r.p)
            } else if why.starts_with("no admissible parameters") {
                format!("{} p={} no admissible parameters", r.case, r.p)
            } else {
                format!("{} p={} {why}", r.case, r.p)
            };
            *t.skip.entry(class).or_default() += 1;
        }
    }
    t
}

/// Skips that reflect the statement itself at tiny p rather than the engine.
fn benign(class: &str) -> bool {
    class.ends_with("not p-integral") || class.ends_with("no admissible parameters")
}

fn sweep_status(statuses: &[Status]) -> (Tally, usize, Duration) {
    let start = Instant::now();
    let cases: Vec<_> = registry().iter().filter(|c| statuses.contains(&c.status)).collect();
    let opts = SweepOptions { eval: EvalOptions { seed: 2024, ..EvalOptions::default() }, samples: 50, workers: workers() };
    let res = catalog::sweep(&cases, &odd_primes(5, 500), &opts);
    (tally(&res), cases.len(), start.elapsed())
}

fn report_sweep(t: &Tally, entries: usize, took: Duration, budget: Duration, word: &str) -> Outcome {
    let odd: Vec<_> = t.skip.keys().filter(|k| !benign(k)).cloned().collect();
    let benign_skips: Vec<_> = t.skip.iter().filter(|(k, _)| benign(k)).map(|(k, n)| format!("{k} ×{n}")).collect();
    let detail = format!(
        "{entries} entries, {} pass, {} {word}, skipped: [{}]; {took:.1?}",
        t.pass,
        t.fail.len(),
        benign_skips.join("; ")
    );
    if let Some(f) = t.fail.first() {
        return Err(format!("{detail}; first {word}: {f:?}"));
    }
    if !odd.is_empty() {
        return Err(format!("{detail}; unexpected skips: {odd:?}"));
    }
    if took > budget {
        return Err(format!("{detail}; over budget {budget:?}"));
    }
    Ok(detail)
}

fn theorem_sweep() -> Outcome {
    let (t, n, took) = sweep_status(&[Status::Theorem, Status::Lemma]);
    report_sweep(&t, n, took, Duration::from_secs(600), "fail")
}

fn conjecture_sweep() -> Outcome {
    let (t, n, took) = sweep_status(&[Status::Conjecture]);
    report_sweep(&t, n, took, Duration::from_secs(600), "counterexamples")
}

fn inv_mod(a: u128, m: u128) -> u128 {
    let (mut r0, mut r1) = (m as i128, (a % m) as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    assert_eq!(r0, 1);
    t0.rem_euclid(m as i128) as u128
}

/// Σ_{n<p} s_n / base^n mod p^m from plain residues.
fn seq_sum(id: SequenceId, base: i128, p: u64, m: u32) -> u128 {
    let md = (p as u128).pow(m);
    let inv = inv_mod(base.rem_euclid(md as i128) as u128, md);
    let vals = sequence_mod(id, p as usize - 1, p, m).unwrap();
    let (mut acc, mut pw) = (0u128, 1u128);
    for v in vals {
        acc = (acc + v * pw) % md;
        pw = pw * inv % md;
    }
    acc
}

/// Values computed by tests/data/oracle.py (exact fractions, no p-adic code).
const ORACLE: &[(&str, u64, u32, u128)] = &[
    ("domb_over_16", 7, 2, 2),
    ("domb_over_4", 7, 2, 2),
    ("f27_over_3k2", 7, 2, 45),
    ("w_over_m3", 13, 2, 70),
    ("minus_l_plus_p_over_l", 13, 2, 70),
    ("f16_full", 5, 2, 1),
    ("f16_full", 7, 2, 48),
    ("az_over_m3", 7, 2, 0),
    ("az_over_m27", 7, 2, 0),
    ("f16_p_over_3k1", 13, 2, 147),
    ("f16_p_over_3k1", 7, 3, 149),
    ("pair_central_b1_3", 7, 2, 6),
    ("pair_ka_a1_3", 7, 3, 49),
    ("pair_ka_a126", 5, 3, 0),
    ("w_third_kernel", 13, 2, 70),
];

fn computed(name: &str, p: u64, m: u32) -> Result<u128, String> {
    let fam = |f, w: Weight, r| sum_family(f, &w, p, m, r).and_then(|x| x.to_residue(m));
    let v = match name {
        "domb_over_16" => Ok(seq_sum(SequenceId::DOMB, 16, p, m)),
        "domb_over_4" => Ok(seq_sum(SequenceId::DOMB, 4, p, m)),
        "az_over_m3" => Ok(seq_sum(SequenceId::AZ, -3, p, m)),
        "az_over_m27" => Ok(seq_sum(SequenceId::AZ, -27, p, m)),
        "w_over_m3" => Ok(seq_sum(SequenceId::W, -3, p, m)),
        "f27_over_3k2" => fam(Family::F27, Weight::over(3, 2), Range::Full),
        "f16_full" => fam(Family::F16, Weight::one(), Range::Full),
        "f16_p_over_3k1" => fam(Family::F16, Weight::p_over(p, 3, 1), Range::Full),
        "w_third_kernel" => fam(Family::F27, Weight::p_over(p, 3, 1), Range::Third),
        "pair_central_b1_3" => sum_central(&ratio(-1, 2), &ratio(1, 3), p, m).and_then(|x| x.to_residue(m)),
        "minus_l_plus_p_over_l" => {
            let l = represent(p, FormSpec::new(4, 27, Normalization::LMod3One)).map_err(|e| e.to_string())?.x;
            let v = -Rational::from_integer(l.into()) + Rational::new(p.into(), l.into());
            supercong::numthy::rational_residue(&v, p, m)
        }
        "pair_ka_a1_3" | "pair_ka_a126" => {
            let a = if name.ends_with("126") { ratio(126, 1) } else { ratio(1, 3) };
            supercong::catalog::engines::with_guard(p, m, 3, |n, v| {
                supercong::catalog::pair_sum_in(&a, &Weight::over_shift(&a), p, n, Range::Full, v)
            })
            .and_then(|x| x.to_residue(m))
        }
        _ => return Err(format!("no computation for {name}")),
    };
    v.map_err(|e| format!("{name} at p={p}: {e}"))
}

fn spot_values() -> Outcome {
    for &(name, p, m, want) in ORACLE {
        let got = computed(name, p, m)?;
        check(got == want, || format!("{name} at p={p} mod p^{m}: got {got}, oracle {want}"))?;
    }
    let mut memo = SequenceMemo::new();
    for (id, p, want) in [("THM51a", 7, 2u128), ("THM23_15", 7, 45), ("THM54a", 13, 70)] {
        let r = evaluate(find(id).unwrap(), p, &EvalOptions::default(), &mut memo);
        check(r.is_pass() && r.lhs == Some(want), || format!("{id} at p={p}: {r:?}"))?;
    }
    Ok(format!("{} frozen oracle values, 3 registry spot checks", ORACLE.len()))
}

fn quadform_uniqueness() -> Outcome {
    let start = Instant::now();
    let mut n = 0;
    for p in (5..=2000u64).filter(|&p| is_prime(p)) {
        for spec in USED_FORMS {
            match represent(p, *spec) {
                Ok(r) => {
                    check(spec.applies(p), || format!("{spec} solved at inapplicable p={p}"))?;
                    let (x, y) = (r.x as i128, r.y as i128);
                    check(x * x + spec.d as i128 * y * y == spec.multiplier as i128 * p as i128, || {
                        format!("{spec} at p={p}: bad solution {r:?}")
                    })?;
                    n += 1;
                }
                Err(e) => check(!spec.applies(p), || format!("{spec} at p={p}: {e}"))?,
            }
        }
        if p % 12 == 5 {
            let x = represent(p, FormSpec::new(2, 9, Normalization::Positive)).unwrap().x as i128;
            let ab = represent(p, FormSpec::new(1, 1, Normalization::AbPair)).unwrap();
            let (a, b) = (ab.x as i128, ab.y as i128);
            check(2 * p as i128 - 2 * x * x == -4 * a * b, || format!("2p − 2x² ≠ −4AB at p={p}"))?;
        }
    }
    within(start, Duration::from_secs(10), format!("{n} unique normalized solutions, p ≤ 2000"))
}

fn degeneracy() -> Outcome {
    let mut memo = SequenceMemo::new();
    let p = 7;
    let pi = p as i64;
    // b = <b>_p + p·s with s ≡ −1 mod p
    let small = [ratio(1 - pi, 1), ratio(2 - pi, 1)];
    let large = [ratio(-1, 1), ratio(-2, 1), ratio(pi * pi - 1, 1)];
    let fixtures = [("THM22_10", &small[..]), ("THM22_11", &small[..]), ("THM41", &large[..]), ("COR41", &large[..])];
    for (id, bs) in fixtures {
        for b in bs.iter() {
            let q = params::parse_params(&format!("b={b}")).unwrap();
            let opts = EvalOptions { params: Some(q), ..EvalOptions::default() };
            let r = evaluate(find(id).unwrap(), p, &opts, &mut memo);
            let why = r.reason.clone().unwrap_or_default();
            check(r.is_skipped() && why.contains("s ≡ −1"), || format!("{id} with b={b} at p={p}: {r:?}"))?;
        }
    }
    let degenerate = sum_central(&ratio(1, 3), &ratio(-1, 1), 7, 2);
    check(degenerate.is_err(), || "degenerate central sum was evaluated".into())?;

    let q = params::parse_params("a=126").unwrap();
    let opts = EvalOptions { guard: 1, params: Some(q), ..EvalOptions::default() };
    let r = evaluate(find("SUM_KA").unwrap(), 5, &opts, &mut memo);
    check(r.retried && r.is_pass() && r.guard == 4, || format!("SUM_KA a=126 p=5 G=1: {r:?}"))?;
    Ok(format!("s ≡ −1 fixtures skipped; SUM_KA a=126 p=5 retried at G={} and passed", r.guard))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("exact identities", exact_identities),
        ("helper congruences", helper_congruences),
        ("theorem and lemma sweep 5 ≤ p ≤ 500", theorem_sweep),
        ("frozen spot values", spot_values),
        ("conjecture sweep 5 ≤ p ≤ 500", conjecture_sweep),
        ("quadratic form uniqueness", quadform_uniqueness),
        ("degeneracy handling", degeneracy),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(d) => println!("criterion {}: PASS {name}: {d}", i + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {e}", i + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
