//! Shared by the integration tests and the acceptance suite: the CLI
//! golden-corpus runner and a brute-force Lyndon-word oracle.
//!
//! Set `EMBCALC_BLESS=1` to rewrite the golden files from the current binary.

#![allow(dead_code)]

use std::path::PathBuf;
use std::process::Command;

pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run_cli(args: &[String]) -> Outcome {
    let out = Command::new(env!("CARGO_BIN_EXE_embcalc"))
        .args(args)
        .env_remove("EMBCALC_CUTOFF_DEFAULT")
        .output()
        .expect("the embcalc binary runs");
    Outcome {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
    }
}

fn golden_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden")
}

/// `(name, args)` for every corpus line.
pub fn corpus() -> Vec<(String, Vec<String>)> {
    let text = std::fs::read_to_string(golden_dir().join("corpus.txt")).expect("corpus file");
    text.lines()
        .filter(|l| !l.trim().is_empty() && !l.starts_with('#'))
        .enumerate()
        .map(|(i, l)| {
            (
                format!("{:02}", i + 1),
                l.split_whitespace().map(String::from).collect(),
            )
        })
        .collect()
}

pub fn render(args: &[String], o: &Outcome) -> String {
    format!(
        "$ embcalc {}\nexit: {}\n--- stdout\n{}--- stderr\n{}",
        args.join(" "),
        o.code,
        o.stdout,
        o.stderr
    )
}

/// Runs one case twice and checks determinism, the golden file, and the
/// JSON round-trip for `--json` invocations.
pub fn check_case(name: &str, args: &[String]) -> Result<(), String> {
    let first = run_cli(args);
    let second = run_cli(args);
    let rendered = render(args, &first);
    if rendered != render(args, &second) {
        return Err(format!("{name}: two runs differ"));
    }
    let path = golden_dir().join(format!("{name}.txt"));
    if std::env::var_os("EMBCALC_BLESS").is_some() {
        std::fs::write(&path, &rendered).map_err(|e| format!("{name}: {e}"))?;
    }
    let expected = std::fs::read_to_string(&path).map_err(|e| format!("{name}: {e}"))?;
    if expected != rendered {
        return Err(format!("{name}: output differs from {}\n{rendered}", path.display()));
    }
    if args.iter().any(|a| a == "--json") && first.code == 0 {
        let value: serde_json::Value =
            serde_json::from_str(&first.stdout).map_err(|e| format!("{name}: not JSON: {e}"))?;
        if format!("{value}\n") != first.stdout {
            return Err(format!("{name}: JSON does not round-trip"));
        }
        if value["format_version"] != 1 {
            return Err(format!("{name}: missing format_version"));
        }
    }
    Ok(())
}

/// All strings over `1..=k` with the given letter counts, by recursion on
/// the next letter.
fn strings_with_content(content: &[u32]) -> Vec<Vec<usize>> {
    fn go(left: &mut Vec<u32>, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left.iter().all(|&c| c == 0) {
            out.push(acc.clone());
            return;
        }
        for i in 0..left.len() {
            if left[i] > 0 {
                left[i] -= 1;
                acc.push(i + 1);
                go(left, acc, out);
                acc.pop();
                left[i] += 1;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut content.to_vec(), &mut Vec::new(), &mut out);
    out
}

/// A word is Lyndon when it is strictly smaller than each of its proper
/// rotations.
fn is_lyndon_by_rotation(w: &[usize]) -> bool {
    (1..w.len()).all(|i| {
        let rotated: Vec<usize> = w[i..].iter().chain(&w[..i]).copied().collect();
        w < rotated.as_slice()
    })
}

/// Lyndon words with the given letter counts, sorted. Independent of the
/// library's enumeration.
pub fn brute_force_lyndon(content: &[u32]) -> Vec<Vec<usize>> {
    let mut ws: Vec<Vec<usize>> = strings_with_content(content)
        .into_iter()
        .filter(|w| is_lyndon_by_rotation(w))
        .collect();
    ws.sort();
    ws
}
