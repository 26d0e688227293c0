//! Registry of congruences and the machinery that checks them prime by prime.

pub mod engines;
pub mod params;
mod registry;

use std::sync::{Arc, OnceLock};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numthy::{angle, fermat_quotient_padic, gen_binom, harmonic_padic, is_prime};
use crate::padic::modular::{inv_mod, mul_mod, pow_u128, reduce_i128};
use crate::padic::{pow_residue, FactorialTable, PadicNum, PadicSum, Vanish};
use crate::quadforms::{represent, FormSpec, QuadRep};
use crate::sequences::{SequenceId, SequenceMemo};
use crate::Rational;

pub use engines::{
    family_sum_in, family_sum_with, pair_sum, pair_sum_in, sum_central, sum_family, Family, Range,
    Weight, DEFAULT_GUARD,
};
pub use params::{ParamKind, Params};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Theorem,
    Lemma,
    Conjecture,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Theorem => "theorem",
            Status::Lemma => "lemma",
            Status::Conjecture => "conjecture",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s.to_ascii_lowercase().as_str() {
            "theorem" => Some(Status::Theorem),
            "lemma" => Some(Status::Lemma),
            "conjecture" => Some(Status::Conjecture),
            _ => None,
        }
    }
}

#[derive(Clone, Copy)]
pub(crate) enum Modulus {
    Fixed(u32),
    ByPrime(fn(u64) -> u32),
}

type Sides = fn(&mut Ctx) -> Result<Vec<PadicNum>>;
type Admissible = fn(u64, &Params) -> std::result::Result<(), String>;

/// One congruence: every side is evaluated and all residues must agree.
#[derive(Clone)]
pub struct CongruenceCase {
    pub id: &'static str,
    pub status: Status,
    pub citation: &'static str,
    pub condition: &'static str,
    pub modulus_text: &'static str,
    pub params: ParamKind,
    pub labels: &'static [&'static str],
    pub(crate) modulus: Modulus,
    pub(crate) applies: fn(u64) -> bool,
    pub(crate) admissible: Admissible,
    pub(crate) sides: Sides,
    pub(crate) probe: Option<fn(u64) -> Option<u32>>,
}

impl std::fmt::Debug for CongruenceCase {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("CongruenceCase").field("id", &self.id).field("status", &self.status).finish()
    }
}

impl CongruenceCase {
    /// Modulus exponent of the statement at p.
    pub fn modulus_exp(&self, p: u64) -> u32 {
        match self.modulus {
            Modulus::Fixed(m) => m,
            Modulus::ByPrime(f) => f(p),
        }
    }

    /// Residue-class condition on p (p ≥ 5 prime assumed).
    pub fn applies(&self, p: u64) -> bool {
        (self.applies)(p)
    }

    pub fn admissible(&self, p: u64, q: &Params) -> std::result::Result<(), String> {
        (self.admissible)(p, q)
    }

    /// Evaluate every side at working precision n.
    pub fn sides(
        &self,
        p: u64,
        n: u32,
        vanish: Vanish,
        q: &Params,
        memo: &mut SequenceMemo,
    ) -> Result<Vec<PadicNum>> {
        let mut ctx = Ctx { p, n, vanish, params: q, memo };
        (self.sides)(&mut ctx)
    }
}

static REGISTRY: OnceLock<Vec<CongruenceCase>> = OnceLock::new();

/// Every registered congruence, in a fixed order.
pub fn registry() -> &'static [CongruenceCase] {
    REGISTRY.get_or_init(registry::build)
}

pub fn find(id: &str) -> Option<&'static CongruenceCase> {
    registry().iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

/// Evaluation context handed to the side evaluators.
pub struct Ctx<'a> {
    pub p: u64,
    pub n: u32,
    pub vanish: Vanish,
    pub params: &'a Params,
    memo: &'a mut SequenceMemo,
}

fn missing(name: &str) -> Error {
    Error::DomainError(format!("missing parameter {name}"))
}

impl<'a> Ctx<'a> {
    pub fn a(&self) -> Result<Rational> {
        self.params.a.clone().ok_or_else(|| missing("a"))
    }
    pub fn b(&self) -> Result<Rational> {
        self.params.b.clone().ok_or_else(|| missing("b"))
    }
    pub fn t(&self) -> Result<Rational> {
        self.params.t.clone().ok_or_else(|| missing("t"))
    }
    pub fn m(&self) -> Result<u64> {
        self.params.m.ok_or_else(|| missing("m"))
    }

    pub fn pr(&self) -> Rational {
        Rational::from_integer(self.p.into())
    }

    pub fn int(&self, a: i128) -> PadicNum {
        PadicNum::from_int(a, self.p, self.n)
    }
    pub fn frac(&self, a: i128, b: i128) -> PadicNum {
        PadicNum::from_ratio(a, b, self.p, self.n)
    }
    pub fn rat(&self, r: &Rational) -> PadicNum {
        PadicNum::from_rational(r, self.p, self.n)
    }

    /// (−1)^e
    pub fn sign(&self, e: u64) -> PadicNum {
        self.int(if e.is_multiple_of(2) { 1 } else { -1 })
    }

    /// base^e for a p-unit base.
    pub fn pow(&self, base: i128, e: u64) -> PadicNum {
        PadicNum::from_residue(pow_residue(base, e, self.p, self.n), self.p, self.n)
            .expect("unit power")
    }

    fn table(&mut self) -> Arc<FactorialTable> {
        self.memo.table(self.p, self.n, Family::table_size(self.p))
    }

    /// Integer binomial C(n, k) with n ≤ 6p.
    pub fn binom(&mut self, n: u64, k: u64) -> PadicNum {
        self.table().binom(n as usize, k as usize)
    }

    pub fn factorial(&mut self, n: u64) -> PadicNum {
        self.table().factorial(n as usize)
    }

    pub fn h(&self, n: u64) -> Result<PadicNum> {
        harmonic_padic(n, self.p, self.n)
    }

    pub fn q(&self, a: i128) -> Result<PadicNum> {
        fermat_quotient_padic(a, self.p, self.n)
    }

    pub fn gb(&self, a: &Rational, k: u64) -> Result<PadicNum> {
        gen_binom(a, k, self.p, self.n)
    }

    /// (⟨a⟩_p, (a − ⟨a⟩_p)/p)
    pub fn ang(&self, a: &Rational) -> Result<(u64, Rational)> {
        let d = angle(a, self.p)?;
        Ok((d.angle, d.cofactor))
    }

    pub fn family(&mut self, f: Family, w: Weight, r: Range) -> Result<PadicNum> {
        let t = self.table();
        family_sum_in(f, &w, r, &t, self.vanish)
    }

    pub fn pair(&self, a: &Rational, w: Weight, r: Range) -> Result<PadicNum> {
        pair_sum_in(a, &w, self.p, self.n, r, self.vanish)
    }

    /// Σ_{n<p} s_n / base^n.
    pub fn seq_sum(&mut self, id: SequenceId, base: i128) -> Result<PadicNum> {
        let (p, n) = (self.p, self.n);
        let vals = self.memo.residues(id, p as usize - 1, p, n);
        let m = pow_u128(p, n);
        let inv = inv_mod(reduce_i128(base, m), m).ok_or(Error::DivisionByExactZero)?;
        let (mut acc, mut pw) = (0u128, 1u128);
        for v in vals.iter() {
            acc = (acc + mul_mod(*v, pw, m)) % m;
            pw = mul_mod(pw, inv, m);
        }
        match self.vanish {
            Vanish::ZeroFrom(f) if acc == 0 && n as i64 >= f => Ok(PadicNum::zero(p, n)),
            _ => PadicNum::from_residue(acc, p, n),
        }
    }

    pub fn rep(&self, spec: FormSpec) -> Result<QuadRep> {
        represent(self.p, spec)
    }

    /// x − y through the accumulator.
    pub fn diff(&self, x: PadicNum, y: PadicNum) -> Result<PadicNum> {
        self.sum(&[x, -y])
    }

    /// Sum of several values through the cancellation-tolerant accumulator.
    pub fn sum(&self, terms: &[PadicNum]) -> Result<PadicNum> {
        let mut acc = PadicSum::with_policy(self.p, self.n, self.vanish);
        acc.extend(terms.iter().copied());
        acc.finish()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Skipped,
}

impl Verdict {
    pub fn as_str(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Skipped => "skipped",
        }
    }
}

/// Outcome of one (case, p, parameters) evaluation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub case: String,
    pub p: u64,
    /// The modulus p^m as an integer.
    pub modulus: u128,
    pub mod_exp: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lhs: Option<u128>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<u128>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub extra: Vec<u128>,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub params: Option<String>,
    pub seed: u64,
    pub status: Status,
    pub guard: u32,
    pub retried: bool,
    #[serde(skip_serializing_if = "std::ops::Not::not")]
    pub exploratory: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probe: Option<String>,
}

impl CheckResult {
    pub fn is_pass(&self) -> bool {
        self.verdict == Verdict::Pass
    }
    pub fn is_fail(&self) -> bool {
        self.verdict == Verdict::Fail
    }
    pub fn is_skipped(&self) -> bool {
        self.verdict == Verdict::Skipped
    }
}

#[derive(Clone, Debug)]
pub struct EvalOptions {
    pub guard: u32,
    pub mod_exp: Option<u32>,
    pub seed: u64,
    pub sample: u32,
    /// Fixed parameters; when absent they are drawn from the seed.
    pub params: Option<Params>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { guard: DEFAULT_GUARD, mod_exp: None, seed: 0, sample: 0, params: None }
    }
}

/// Check `case` at `p`. Never fails: evaluator errors become skipped records.
pub fn evaluate(
    case: &CongruenceCase,
    p: u64,
    opts: &EvalOptions,
    memo: &mut SequenceMemo,
) -> CheckResult {
    let stated_m = case.modulus_exp(p.max(5));
    let m = opts.mod_exp.unwrap_or(stated_m);
    let mut r = CheckResult {
        case: case.id.to_string(),
        p,
        modulus: (p as u128).checked_pow(m).unwrap_or(0),
        mod_exp: m,
        lhs: None,
        rhs: None,
        extra: Vec::new(),
        verdict: Verdict::Skipped,
        reason: None,
        params: None,
        seed: opts.seed,
        status: case.status,
        guard: opts.guard,
        retried: false,
        exploratory: m > stated_m,
        probe: None,
    };
    let skip = |mut r: CheckResult, why: String| {
        r.verdict = Verdict::Skipped;
        r.reason = Some(why);
        r
    };
    if p < 5 || !is_prime(p) {
        return skip(r, format!("{p} is not a prime ≥ 5"));
    }
    if !case.applies(p) {
        return skip(r, format!("condition fails: {}", case.condition));
    }
    let q = match &opts.params {
        Some(q) => {
            if let Err(why) = case.admissible(p, q) {
                r.params = (!q.is_empty()).then(|| q.to_string());
                return skip(r, why);
            }
            q.clone()
        }
        None => {
            let mut rng = params::rng_for(opts.seed, case.id, p, opts.sample);
            match params::sample(case.params, p, &mut rng, |q| case.admissible(p, q)) {
                Some(q) => q,
                None => {
                    return skip(r, format!("no admissible parameters in {} draws", params::MAX_DRAWS))
                }
            }
        }
    };
    r.params = (!q.is_empty()).then(|| q.to_string());
    let probe_m = case.probe.and_then(|f| f(p));
    let need = m.max(probe_m.unwrap_or(0));

    let mut outcome = Err(Error::PrecisionLoss("not evaluated".into()));
    for (i, g) in [opts.guard, opts.guard + engines::RETRY_STEP].into_iter().enumerate() {
        let n = need + g;
        if let Err(e) = crate::padic::check_precision(p, n) {
            outcome = Err(e);
            break;
        }
        r.guard = g;
        r.retried = i > 0;
        outcome = case.sides(p, n, engines::vanish_policy(i, n), &q, memo).and_then(|vals| {
            let res: Result<Vec<u128>> = vals.iter().map(|v| v.to_residue(m)).collect();
            let probe = match probe_m {
                Some(pm) => Some(vals.iter().map(|v| v.to_residue(pm)).collect::<Result<Vec<_>>>()?),
                None => None,
            };
            Ok((res?, probe))
        });
        match &outcome {
            Err(Error::PrecisionLoss(_)) => continue,
            _ => break,
        }
    }
    match outcome {
        Err(Error::NegativeValuation(v)) => skip(r, format!("a side is not p-integral (valuation {v})")),
        Err(e) => skip(r, e.to_string()),
        Ok((res, probe)) => {
            r.lhs = Some(res[0]);
            r.rhs = Some(res[1]);
            r.extra = res[2..].to_vec();
            r.verdict = if res.iter().all(|x| *x == res[0]) { Verdict::Pass } else { Verdict::Fail };
            if let (Some(pm), Some(pr)) = (probe_m, probe) {
                let agree = pr.iter().all(|x| *x == pr[0]);
                let vals: Vec<String> = pr.iter().map(|x| x.to_string()).collect();
                r.probe = Some(format!(
                    "exploratory mod p^{pm}: [{}] {}",
                    vals.join(", "),
                    if agree { "agree" } else { "differ" }
                ));
            }
            r
        }
    }
}

/// Parameters of a sweep over primes.
#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub eval: EvalOptions,
    /// Parameter draws per (case, p) for parameterized cases.
    pub samples: u32,
    pub workers: usize,
}

/// Evaluate every case at every prime where its condition holds. Work is
/// sharded by prime; the output
/// order is by prime, then case, then sample, independent of the worker count.
pub fn sweep(cases: &[&CongruenceCase], primes: &[u64], opts: &SweepOptions) -> Vec<CheckResult> {
    let run = || {
        primes
            .par_iter()
            .map_init(SequenceMemo::new, |memo, &p| {
                memo.retain_prime(p);
                let mut out = Vec::new();
                for case in cases.iter().filter(|c| c.applies(p)) {
                    let draws = if case.params == ParamKind::None || opts.eval.params.is_some() {
                        1
                    } else {
                        opts.samples.max(1)
                    };
                    for i in 0..draws {
                        let mut e = opts.eval.clone();
                        e.sample = i;
                        out.push(evaluate(case, p, &e, memo));
                    }
                }
                out
            })
            .collect::<Vec<_>>()
            .into_iter()
            .flatten()
            .collect()
    };
    match rayon::ThreadPoolBuilder::new().num_threads(opts.workers.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_unique_and_enough() {
        let reg = registry();
        assert!(reg.len() >= 45);
        let mut ids: Vec<_> = reg.iter().map(|c| c.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), reg.len());
    }

    #[test]
    fn thm42_at_seven() {
        let mut memo = SequenceMemo::new();
        let r = evaluate(find("THM42a").unwrap(), 7, &EvalOptions::default(), &mut memo);
        assert_eq!((r.lhs, r.rhs, r.verdict.clone()), (Some(2), Some(2), Verdict::Pass));
        let r = evaluate(find("THM42a").unwrap(), 11, &EvalOptions::default(), &mut memo);
        assert!(r.is_skipped());
    }

    #[test]
    fn thm52_at_seven() {
        let mut memo = SequenceMemo::new();
        let r = evaluate(find("THM52").unwrap(), 7, &EvalOptions::default(), &mut memo);
        assert!(r.is_pass());
        assert_eq!(r.lhs, Some(0));
        assert_eq!(r.extra, vec![0]);
    }
}
