use std::process::Command;

use supercong::catalog::{registry, sweep, EvalOptions, SweepOptions};
use supercong::numthy::odd_primes;

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(args)
        .env_remove("SUPERCONG_SEED")
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

#[test]
fn list_contract() {
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 45);
    let (_, out, _) = run(&["list", "--status", "conjecture"]);
    assert_eq!(out.lines().count(), 11);
    let (_, out, _) = run(&["list", "--id", "THM42a"]);
    assert_eq!(out.lines().count(), 1);
    assert!(out.contains("Theorem 4.2"));
    let (code, _, _) = run(&["list", "--status", "folklore"]);
    assert_eq!(code, 64);
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = run(&["verify", "--id", "THM51a", "--pmin", "5", "--pmax", "200", "--format", "json"]);
    assert_eq!(code, 0);
    let recs: Vec<serde_json::Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert!(!recs.is_empty());
    assert!(recs.iter().all(|r| r["verdict"] == "pass"));
    let p7 = recs.iter().find(|r| r["p"] == 7).unwrap();
    assert_eq!((p7["lhs"].as_u64(), p7["rhs"].as_u64()), (Some(2), Some(2)));

    let (code, out, _) = run(&["verify", "--id", "RV16", "--pmin", "5", "--pmax", "5", "--format", "json"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 1);
    let r: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!((r["lhs"].as_u64(), r["rhs"].as_u64()), (Some(1), Some(1)));

    assert_eq!(run(&["verify", "--pmin", "4", "--pmax", "3"]).0, 64);
    assert_eq!(run(&["verify", "--pmin", "3", "--pmax", "30"]).0, 64);
    assert_eq!(run(&["verify", "--guard", "0"]).0, 64);
    assert_eq!(run(&["verify", "--id", "NOPE"]).0, 64);
    assert_eq!(run(&["frobnicate"]).0, 64);
}

#[test]
fn raised_modulus_is_exploratory_not_a_theorem_failure() {
    // THM42a is only claimed mod p^2; mod p^3 it differs at p = 7
    let (code, out, _) = run(&["verify", "--id", "THM42a", "--pmin", "7", "--pmax", "7", "--mod-exp", "3", "--format", "json"]);
    assert_eq!(code, 2);
    let r: serde_json::Value = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(r["exploratory"], true);
    assert_eq!(r["verdict"], "fail");
    let (code, _, _) = run(&["verify", "--id", "THM42a", "--pmin", "7", "--pmax", "50", "--mod-exp", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn json_is_byte_stable_and_seeded() {
    let args = ["verify", "--id", "THM31", "--id", "GEN_RV", "--pmin", "5", "--pmax", "60", "--samples", "3", "--seed", "11", "--format", "json"];
    let (_, a, _) = run(&args);
    let (_, b, _) = run(&args);
    assert_eq!(a, b);
    let mut other = args.to_vec();
    other[11] = "12";
    assert_ne!(run(&other).1, a);
    assert!(a.lines().all(|l| l.contains("\"seed\":11")));
}

#[test]
fn csv_has_header_and_rows() {
    let (code, out, _) = run(&["verify", "--id", "RV27", "--pmin", "5", "--pmax", "30", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("case,p,modulus,lhs,rhs"));
    assert_eq!(lines.count(), odd_primes(5, 30).len());
}

#[test]
fn worker_count_does_not_change_the_report() {
    let cases: Vec<_> = registry().iter().filter(|c| c.id.starts_with("THM2")).collect();
    let primes = odd_primes(5, 80);
    let opts = |w| SweepOptions { eval: EvalOptions { seed: 5, ..EvalOptions::default() }, samples: 2, workers: w };
    let one = sweep(&cases, &primes, &opts(1));
    let four = sweep(&cases, &primes, &opts(4));
    assert_eq!(one, four);
    let (_, a, _) = run(&["verify", "--pmin", "5", "--pmax", "40", "--workers", "1", "--sort", "--format", "json"]);
    let (_, b, _) = run(&["verify", "--pmin", "5", "--pmax", "40", "--workers", "3", "--sort", "--format", "json"]);
    assert_eq!(a, b);
}

#[test]
fn sequence_and_represent() {
    assert_eq!(run(&["sequence", "domb", "3"]).1.trim(), "1 4 28 256");
    assert_eq!(run(&["sequence", "u", "4"]).1.trim(), "1 0 -2 0 22");
    assert_eq!(run(&["sequence", "az", "3", "--p", "7", "--m", "2"]).1.trim(), "1 46 9 46");
    assert_eq!(run(&["sequence", "catalan", "3"]).0, 64);
    assert_eq!(run(&["sequence", "domb", "3", "--p", "9"]).0, 64);

    let (code, out, _) = run(&["represent", "13", "p=x^2+3y^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("x=1 y=2") && out.contains("4x^2-2p=-22"));
    let (code, out, _) = run(&["represent", "13", "4p=L^2+27M^2"]);
    assert_eq!(code, 0);
    assert!(out.contains("L=-5 M=1"));
    assert_eq!(run(&["represent", "11", "p=x^2+y^2"]).0, 3);
    assert_eq!(run(&["represent", "13", "p=x^3+y^2"]).0, 64);
}

#[test]
fn seed_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_supercong"))
        .args(["verify", "--id", "GEN_RV", "--pmin", "7", "--pmax", "7", "--format", "json"])
        .env("SUPERCONG_SEED", "99")
        .output()
        .unwrap();
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"seed\":99"));
}
