//! The `embcalc` binary: golden corpus, exit codes and the cutoff default.

mod common;

use std::process::Command;

use common::{check_case, corpus, run_cli};

fn args(line: &str) -> Vec<String> {
    line.split_whitespace().map(String::from).collect()
}

#[test]
fn golden_corpus() {
    let cases = corpus();
    assert_eq!(cases.len(), 20);
    let failures: Vec<String> = cases.iter().filter_map(|(name, a)| check_case(name, a).err()).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn exit_codes() {
    assert_eq!(run_cli(&args("knot --n 3 --kmax 2 --cutoff 10")).code, 3);
    assert_eq!(run_cli(&args("layers --k 2 --n 3 --target point")).code, 3);
    assert_eq!(run_cli(&args("layers --k 1 --n 5 --target point")).code, 2);
    assert_eq!(run_cli(&args("estimate haefliger --m 5 --n 4")).code, 2);
    assert_eq!(run_cli(&args("estimate emb-analyticity --n 2")).code, 3);
    assert_eq!(
        run_cli(&args("derive homogeneous --k 2 --c 0 --rho 2 --m 3 --q 0")).code,
        2
    );
    assert_eq!(run_cli(&args("estimate eta --rho 4 --c -3 --q 1 --j 0")).code, 2);

    let unknown = run_cli(&args("unwind --k 2"));
    assert_eq!(unknown.code, 2);
    assert!(unknown.stdout.is_empty());
    assert!(unknown.stderr.contains("Usage"));

    let help = run_cli(&args("--help"));
    assert_eq!(help.code, 0);
    assert!(help.stdout.contains("layers"));
}

#[test]
fn cutoff_default_from_environment() {
    let run = |env: Option<&str>| {
        let mut cmd = Command::new(env!("CARGO_BIN_EXE_embcalc"));
        cmd.args(args("layers --k 2 --n 4 --target sphere:2 --json"));
        match env {
            Some(v) => cmd.env("EMBCALC_CUTOFF_DEFAULT", v),
            None => cmd.env_remove("EMBCALC_CUTOFF_DEFAULT"),
        };
        let out = cmd.output().unwrap();
        (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
    };
    let cutoff = |stdout: &str| {
        let v: serde_json::Value = serde_json::from_str(stdout).unwrap();
        v["parameters"]["cutoff"].clone()
    };
    let (code, out) = run(None);
    assert_eq!(code, 0);
    assert_eq!(cutoff(&out), 20);
    let (code, out) = run(Some("3"));
    assert_eq!(code, 0);
    assert_eq!(cutoff(&out), 3);
    assert_eq!(run(Some("lots")).0, 2);
}
