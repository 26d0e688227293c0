//! Command-line front end.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::catalog::{self, params, CheckResult, CongruenceCase, EvalOptions, Status, SweepOptions};
use crate::error::Error;
use crate::numthy::{is_prime, odd_primes, u_sequence, u_sequence_mod};
use crate::padic::modular::balanced;
use crate::quadforms::{represent, FormSpec, Normalization};
use crate::sequences::{sequence_exact, sequence_mod, SequenceId, SequenceTag};
use crate::Rational;

pub const EXIT_OK: i32 = 0;
pub const EXIT_THEOREM_FAILURE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;
pub const EXIT_NOT_REPRESENTABLE: i32 = 3;
pub const EXIT_USAGE: i32 = 64;

#[derive(Parser, Debug)]
#[command(name = "supercong", version, about = "Check supercongruences prime by prime")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(clap::Args, Debug)]
struct Filter {
    /// Registry id; repeat for several.
    #[arg(long = "id")]
    ids: Vec<String>,
    /// theorem, lemma or conjecture.
    #[arg(long)]
    status: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the registry.
    List {
        #[command(flatten)]
        filter: Filter,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check congruences over a range of primes.
    Verify {
        #[command(flatten)]
        filter: Filter,
        #[arg(long, default_value_t = 5)]
        pmin: u64,
        #[arg(long, default_value_t = 200)]
        pmax: u64,
        /// Check modulo p^m instead of each entry's own modulus.
        #[arg(long = "mod-exp")]
        mod_exp: Option<u32>,
        #[arg(long, default_value_t = catalog::DEFAULT_GUARD)]
        guard: u32,
        #[arg(long, env = "SUPERCONG_SEED", default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Order records by (case, p) instead of by prime.
        #[arg(long)]
        sort: bool,
        /// Parameter draws per prime for parameterized entries.
        #[arg(long, default_value_t = 1)]
        samples: u32,
        /// Fixed parameters, e.g. "a=1/3 b=-2/5".
        #[arg(long)]
        params: Option<String>,
    },
    /// Print sequence values, or residues modulo p^m.
    Sequence {
        /// domb, az, w or u
        name: String,
        n_max: usize,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, default_value_t = 1)]
        m: u32,
    },
    /// Normalized solution of a binary quadratic form.
    Represent {
        p: u64,
        /// e.g. "p=x^2+3y^2", "4p=L^2+27M^2", "p=x^2+y^2,x_mod4_1"
        form: String,
    },
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Parse `args` (program name first) and run. Returns the exit code.
pub fn run<I: IntoIterator<Item = String>>(args: I) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(args, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I: IntoIterator<Item = String>>(
    args: I,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let res = match cli.command {
        Command::List { filter, format } => cmd_list(&filter, format, out),
        Command::Verify {
            filter,
            pmin,
            pmax,
            mod_exp,
            guard,
            seed,
            format,
            workers,
            sort,
            samples,
            params,
        } => {
            let cfg = VerifyConfig { pmin, pmax, mod_exp, guard, seed, format, workers, sort, samples };
            cmd_verify(&filter, &cfg, params.as_deref(), out, err)
        }
        Command::Sequence { name, n_max, p, m } => cmd_sequence(&name, n_max, p, m, out),
        Command::Represent { p, form } => cmd_represent(p, &form, out),
    };
    match res {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn select(filter: &Filter) -> Result<Vec<&'static CongruenceCase>, Usage> {
    let status = match &filter.status {
        Some(s) => Some(Status::parse(s).ok_or_else(|| Usage(format!("unknown status {s:?}")))?),
        None => None,
    };
    let mut cases = Vec::new();
    if filter.ids.is_empty() {
        cases.extend(catalog::registry().iter());
    } else {
        for id in &filter.ids {
            cases.push(catalog::find(id).ok_or_else(|| Usage(format!("unknown id {id:?}")))?);
        }
    }
    cases.retain(|c| status.is_none_or(|s| c.status == s));
    Ok(cases)
}

#[derive(Serialize)]
struct ListRow {
    id: &'static str,
    condition: &'static str,
    modulus: &'static str,
    status: &'static str,
    citation: &'static str,
    params: String,
}

fn cmd_list(filter: &Filter, format: Format, out: &mut dyn Write) -> Result<i32, Usage> {
    let rows: Vec<ListRow> = select(filter)?
        .into_iter()
        .map(|c| ListRow {
            id: c.id,
            condition: c.condition,
            modulus: c.modulus_text,
            status: c.status.as_str(),
            citation: c.citation,
            params: format!("{:?}", c.params).to_lowercase(),
        })
        .collect();
    match format {
        Format::Text => {
            for r in &rows {
                writeln!(out, "{:<12} {:<11} {:<6} {:<42} {}", r.id, r.status, r.modulus, r.condition, r.citation)?;
            }
        }
        Format::Json => {
            for r in &rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for r in &rows {
                w.serialize(r)?;
            }
            w.flush()?;
        }
    }
    Ok(EXIT_OK)
}

struct VerifyConfig {
    pmin: u64,
    pmax: u64,
    mod_exp: Option<u32>,
    guard: u32,
    seed: u64,
    format: Format,
    workers: usize,
    sort: bool,
    samples: u32,
}

/// Flat row shared by the CSV writer.
#[derive(Serialize)]
struct CsvRow {
    case: String,
    p: u64,
    modulus: String,
    lhs: String,
    rhs: String,
    extra: String,
    verdict: &'static str,
    reason: String,
    params: String,
    seed: u64,
    status: &'static str,
    mod_exp: u32,
    guard: u32,
    retried: bool,
    exploratory: bool,
    probe: String,
}

impl From<&CheckResult> for CsvRow {
    fn from(r: &CheckResult) -> Self {
        let opt = |x: Option<u128>| x.map(|v| v.to_string()).unwrap_or_default();
        CsvRow {
            case: r.case.clone(),
            p: r.p,
            modulus: r.modulus.to_string(),
            lhs: opt(r.lhs),
            rhs: opt(r.rhs),
            extra: r.extra.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" "),
            verdict: r.verdict.as_str(),
            reason: r.reason.clone().unwrap_or_default(),
            params: r.params.clone().unwrap_or_default(),
            seed: r.seed,
            status: r.status.as_str(),
            mod_exp: r.mod_exp,
            guard: r.guard,
            retried: r.retried,
            exploratory: r.exploratory,
            probe: r.probe.clone().unwrap_or_default(),
        }
    }
}

fn show(v: u128, m: u128) -> String {
    let b = balanced(v, m);
    if b == v as i128 {
        v.to_string()
    } else {
        format!("{v} ({b})")
    }
}

fn text_line(r: &CheckResult) -> String {
    let mut s = format!("{:<12} p={:<4} mod {}^{} {:<8}", r.case, r.p, r.p, r.mod_exp, verdict_word(r));
    if let (Some(l), Some(h)) = (r.lhs, r.rhs) {
        s += &format!(" lhs={} rhs={}", show(l, r.modulus), show(h, r.modulus));
        for (i, e) in r.extra.iter().enumerate() {
            s += &format!(" side{}={}", i + 3, show(*e, r.modulus));
        }
    }
    if let Some(q) = &r.params {
        s += &format!(" [{q}]");
    }
    if r.retried {
        s += &format!(" guard={}", r.guard);
    }
    if r.exploratory {
        s += " exploratory";
    }
    if let Some(why) = &r.reason {
        s += &format!(" ({why})");
    }
    if let Some(pr) = &r.probe {
        s += &format!(" {{{pr}}}");
    }
    s
}

fn verdict_word(r: &CheckResult) -> &'static str {
    if r.is_fail() && counts_as_finding(r) {
        "counterexample"
    } else {
        r.verdict.as_str()
    }
}

/// A failure that is a finding rather than a broken proven result.
fn counts_as_finding(r: &CheckResult) -> bool {
    r.status == Status::Conjecture || r.exploratory
}

fn cmd_verify(
    filter: &Filter,
    cfg: &VerifyConfig,
    fixed: Option<&str>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Usage> {
    if cfg.pmin <= 3 || cfg.pmin > cfg.pmax {
        return Err(Usage(format!("need 3 < pmin ≤ pmax, got pmin={} pmax={}", cfg.pmin, cfg.pmax)));
    }
    if cfg.guard < 1 || cfg.workers < 1 {
        return Err(Usage("guard and workers must be at least 1".into()));
    }
    if cfg.mod_exp == Some(0) {
        return Err(Usage("mod-exp must be at least 1".into()));
    }
    let cases = select(filter)?;
    let fixed = match fixed {
        Some(s) => Some(params::parse_params(s).map_err(Usage)?),
        None => None,
    };
    let primes = odd_primes(cfg.pmin, cfg.pmax);
    let opts = SweepOptions {
        eval: EvalOptions {
            guard: cfg.guard,
            mod_exp: cfg.mod_exp,
            seed: cfg.seed,
            sample: 0,
            params: fixed,
        },
        samples: cfg.samples,
        workers: cfg.workers,
    };
    let mut results = catalog::sweep(&cases, &primes, &opts);
    if cfg.sort {
        results.sort_by(|a, b| a.case.cmp(&b.case).then(a.p.cmp(&b.p)));
    }
    match cfg.format {
        Format::Text => {
            for r in &results {
                writeln!(out, "{}", text_line(r))?;
            }
        }
        Format::Json => {
            for r in &results {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(&mut *out);
            for r in &results {
                w.serialize(CsvRow::from(r))?;
            }
            w.flush()?;
        }
    }
    let count = |f: &dyn Fn(&CheckResult) -> bool| results.iter().filter(|r| f(r)).count();
    let failures = count(&|r| r.is_fail() && !counts_as_finding(r));
    let findings = count(&|r| r.is_fail() && counts_as_finding(r));
    writeln!(
        err,
        "{} records: {} pass, {} fail, {} counterexample, {} skipped",
        results.len(),
        count(&|r| r.is_pass()),
        failures,
        findings,
        count(&|r| r.is_skipped()),
    )?;
    Ok(if failures > 0 {
        EXIT_THEOREM_FAILURE
    } else if findings > 0 {
        EXIT_COUNTEREXAMPLE
    } else {
        EXIT_OK
    })
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

fn cmd_sequence(name: &str, n_max: usize, p: Option<u64>, m: u32, out: &mut dyn Write) -> Result<i32, Usage> {
    let lower = name.to_ascii_lowercase();
    if let Some(p) = p {
        if !is_prime(p) || m == 0 {
            return Err(Usage(format!("--p must be prime and --m ≥ 1 (got p={p}, m={m})")));
        }
    }
    let line = if lower == "u" {
        match p {
            Some(p) => {
                crate::padic::check_precision(p, m)?;
                join(&u_sequence_mod(n_max, p, m))
            }
            None => join(&u_sequence(n_max)),
        }
    } else {
        let tag: SequenceTag = lower.parse().map_err(|_| Usage(format!("unknown sequence {name:?}")))?;
        let id = match tag {
            SequenceTag::Domb => SequenceId::DOMB,
            SequenceTag::Az => SequenceId::AZ,
            SequenceTag::W => SequenceId::W,
        };
        match p {
            Some(p) => join(&sequence_mod(id, n_max, p, m)?),
            None => join(&sequence_exact(id, n_max)),
        }
    };
    writeln!(out, "{line}")?;
    Ok(EXIT_OK)
}

fn cmd_represent(p: u64, form: &str, out: &mut dyn Write) -> Result<i32, Usage> {
    if !is_prime(p) || p < 5 {
        return Err(Usage(format!("{p} is not a prime ≥ 5")));
    }
    let spec: FormSpec = form.parse()?;
    let rep = match represent(p, spec) {
        Ok(r) => r,
        Err(e @ Error::NotRepresentable(..)) => {
            writeln!(out, "{e}")?;
            return Ok(EXIT_NOT_REPRESENTABLE);
        }
        Err(e) => return Err(e.into()),
    };
    let (a, b) = spec.var_names();
    let (x, y) = (rep.x as i128, rep.y as i128);
    let pi = p as i128;
    writeln!(out, "{a}={x} {b}={y}")?;
    let invariant = match (spec.normalization, spec.multiplier) {
        (Normalization::AbPair, _) => format!("-4AB={}", -4 * x * y),
        (Normalization::LMod3One, _) => {
            let v = Rational::from_integer((-x).into()) + Rational::new(pi.into(), x.into());
            format!("-L+p/L={v}")
        }
        (_, 2) => format!("2p-2x^2={}", 2 * pi - 2 * x * x),
        _ => format!("4x^2-2p={}", 4 * x * x - 2 * pi),
    };
    writeln!(out, "{invariant}")?;
    Ok(EXIT_OK)
}
