//! The `embcalc` command line.
//!
//! Every command prints an aligned text table by default. With `--json` it
//! prints one compact JSON record instead:
//!
//! ```text
//! {"command":"...","format_version":1,"parameters":{...},"results":{...}}
//! ```
//!
//! Keys are sorted, so parsing a record and serializing it again gives the
//! same bytes. Exit codes: 0 on success, 2 on invalid arguments or violated
//! preconditions, 3 when the input lies outside the supported range.

use std::io::Write;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::engine::{derive_eta_bound_with_balls, derive_homogeneous_cartesianness, DerivationTrace};
use crate::error::{invalid, Error, Result};
use crate::estimates::{
    analytic_cube_cartesianness, converges, emb_analyticity, emb_eta_connectivity, eta_connectivity,
    excision_cartesianness, haefliger_metastable, homogeneous_analyticity, layer_map_connectivity, AnalyticCofunctor,
    HandleProfile,
};
use crate::ext::ExtInt;
use crate::spaces::SpaceExpr;
use crate::tower::{contractible_words, knot_tower, layer_factors, tower_summary, Factor, Stage, TowerSummary};
use crate::words::enumerate_basic_words;

pub const FORMAT_VERSION: u32 = 1;
pub const CUTOFF_ENV: &str = "EMBCALC_CUTOFF_DEFAULT";
pub const DEFAULT_CUTOFF: i64 = 20;

#[derive(Parser, Debug)]
#[command(
    name = "embcalc",
    version,
    about = "Symbolic calculator for the embedding-calculus Taylor tower"
)]
struct Cli {
    /// Print one JSON record instead of text tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Basic words on k letters up to a given weight.
    Words {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        max_weight: u32,
    },
    /// Factors of the k-th layer of the tower of emb(I, N), N ≃ ΣY.
    Layers {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        n: u32,
        /// point, sphere:D or cw:CONN
        #[arg(long, value_parser = parse_target)]
        target: SpaceExpr,
        #[command(flatten)]
        cutoff: CutoffArg,
        /// Also list the words whose factors are contractible.
        #[arg(long)]
        verbose: bool,
    },
    /// Stages 1..=kmax of the tower of emb(I, N), N ≃ ΣY.
    Tower {
        #[arg(long)]
        n: u32,
        #[arg(long, value_parser = parse_target)]
        target: SpaceExpr,
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        cutoff: CutoffArg,
        /// Handle index of the source relative to its boundary.
        #[arg(long, default_value = "1", allow_hyphen_values = true, value_parser = parse_ext)]
        q: ExtInt,
    },
    /// The tower of long knots emb(I, R^{n-1} × I).
    Knot {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        kmax: usize,
        #[command(flatten)]
        cutoff: CutoffArg,
    },
    /// Closed-form estimates.
    #[command(subcommand)]
    Estimate(Estimate),
    /// Replayed derivations of the main estimates.
    #[command(subcommand)]
    Derive(Derive),
}

#[derive(Args, Debug)]
struct CutoffArg {
    /// Largest factor connectivity to list [default: $EMBCALC_CUTOFF_DEFAULT or 20]
    #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
    cutoff: Option<ExtInt>,
}

#[derive(Args, Debug)]
struct CofunctorArgs {
    #[arg(long, allow_negative_numbers = true)]
    rho: i64,
    #[arg(long, allow_negative_numbers = true)]
    c: i64,
}

impl CofunctorArgs {
    fn cofunctor(&self) -> AnalyticCofunctor {
        AnalyticCofunctor::new(self.rho, self.c, "G")
    }
}

#[derive(Subcommand, Debug)]
enum Estimate {
    /// Cartesian-ness of a cube of handle attachments in emb(-, N^n).
    Excision {
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
        /// Comma-separated handle indices; -inf for a collar.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext_list)]
        q: ExtList,
    },
    /// Analyticity constants (ρ, c) of emb(-, N^n).
    EmbAnalyticity {
        #[arg(long)]
        n: u32,
    },
    /// Cartesian-ness of a handle cube for a ρ-analytic cofunctor.
    Analytic {
        #[command(flatten)]
        f: CofunctorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext_list)]
        q: ExtList,
    },
    /// Connectivity of η_j : G(W) → T_j G(W).
    Eta {
        #[command(flatten)]
        f: CofunctorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
        q: ExtInt,
        #[arg(long)]
        j: u32,
    },
    /// Connectivity of emb(M, N) → T_k emb(M, N).
    EmbEta {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
        q: ExtInt,
        #[arg(long)]
        k: u32,
    },
    /// Connectivity of r_k : T_k G → T_{k-1} G.
    LayerMap {
        #[command(flatten)]
        f: CofunctorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
        q: ExtInt,
        #[arg(long)]
        k: u32,
    },
    /// Whether the tower converges on a handle index.
    Converges {
        #[command(flatten)]
        f: CofunctorArgs,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
        q: ExtInt,
    },
    /// Analyticity of a homogeneous cofunctor of degree k.
    Homogeneous {
        #[arg(long)]
        k: u32,
        /// Connectivity of the values on k balls.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext)]
        conn: ExtInt,
        #[arg(long, allow_negative_numbers = true)]
        rho: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Haefliger's metastable range for M^m → N^n.
    Haefliger {
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_negative_numbers = true)]
        n: i64,
    },
}

#[derive(Subcommand, Debug)]
enum Derive {
    /// Derivation of the connectivity of η_{k-1}.
    Eta {
        #[command(flatten)]
        f: CofunctorArgs,
        #[arg(long)]
        q: i64,
        #[arg(long)]
        k: u32,
        /// Number of balls in the base case [default: k]
        #[arg(long)]
        balls: Option<u32>,
    },
    /// Derivation of the Cartesian-ness of handle cubes for a homogeneous
    /// cofunctor.
    Homogeneous {
        #[arg(long)]
        k: u32,
        #[arg(long, allow_negative_numbers = true)]
        c: i64,
        #[arg(long, allow_negative_numbers = true)]
        rho: i64,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true, value_parser = parse_ext_list)]
        q: ExtList,
    },
}

#[derive(Debug, Clone)]
struct ExtList(Vec<ExtInt>);

fn parse_ext(s: &str) -> std::result::Result<ExtInt, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_ext_list(s: &str) -> std::result::Result<ExtList, String> {
    s.split(',')
        .map(parse_ext)
        .collect::<std::result::Result<Vec<_>, _>>()
        .map(ExtList)
}

/// `point`, `sphere:D` with `D >= 1`, or `cw:CONN` for a generic CW space
/// `Y` of connectivity `CONN >= 0`.
pub fn parse_target(s: &str) -> std::result::Result<SpaceExpr, String> {
    let (kind, arg) = match s.split_once(':') {
        Some((k, a)) => (k, Some(a)),
        None => (s, None),
    };
    match (kind, arg) {
        ("point", None) => Ok(SpaceExpr::Point),
        ("sphere", Some(d)) => match d.parse::<u32>() {
            Ok(d) if d >= 1 => Ok(SpaceExpr::sphere(d)),
            _ => Err(format!("sphere dimension must be an integer >= 1, got {d:?}")),
        },
        ("cw", Some(c)) => {
            let conn = parse_ext(c)?;
            SpaceExpr::generic("Y", conn).map_err(|e| e.to_string())
        }
        _ => Err(format!("expected point, sphere:D or cw:CONN, got {s:?}")),
    }
}

fn target_name(y: &SpaceExpr) -> String {
    match y {
        SpaceExpr::Point => "point".into(),
        SpaceExpr::Sphere(d) => format!("sphere:{d}"),
        SpaceExpr::GenericCw { connectivity, .. } => format!("cw:{connectivity}"),
        other => other.to_string(),
    }
}

fn resolve_cutoff(arg: &CutoffArg) -> Result<ExtInt> {
    if let Some(c) = arg.cutoff {
        return Ok(c);
    }
    match std::env::var(CUTOFF_ENV) {
        Ok(v) => v
            .parse()
            .map_err(|_| invalid(format!("{CUTOFF_ENV}={v:?} is not an extended integer"))),
        Err(_) => Ok(ExtInt::Finite(DEFAULT_CUTOFF)),
    }
}

/// Output of one command in both renderings.
struct Report {
    command: &'static str,
    parameters: Value,
    results: Value,
    text: String,
}

impl Report {
    fn record(&self) -> Value {
        json!({
            "format_version": FORMAT_VERSION,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
        })
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("plain data serializes")
}

/// Left-aligned columns separated by two spaces.
fn table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let width = |s: &str| s.chars().count();
    let mut widths: Vec<usize> = headers.iter().map(|h| width(h)).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(width(cell));
        }
    }
    let mut out = String::new();
    let header: Vec<String> = headers.iter().map(|h| h.to_string()).collect();
    for row in std::iter::once(&header).chain(rows) {
        let mut line = String::new();
        for (i, (cell, w)) in row.iter().zip(&widths).enumerate() {
            if i > 0 {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', w - width(cell)));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

fn key_values(pairs: &[(&str, String)]) -> String {
    let rows: Vec<Vec<String>> = pairs.iter().map(|(k, v)| vec![k.to_string(), v.clone()]).collect();
    table(&["quantity", "value"], &rows)
}

fn factor_inner(f: &Factor) -> SpaceExpr {
    match f.expr.normalize() {
        SpaceExpr::Loop { inner, .. } => *inner,
        other => other,
    }
}

fn factor_rows(factors: &[Factor]) -> Vec<Vec<String>> {
    factors
        .iter()
        .map(|f| {
            vec![
                f.word.to_string(),
                f.alpha.to_string(),
                f.beta.to_string(),
                f.loops().to_string(),
                factor_inner(f).to_string(),
                f.connectivity.to_string(),
            ]
        })
        .collect()
}

const FACTOR_HEADERS: [&str; 6] = ["word", "alpha", "beta", "loops", "space", "conn"];

fn factor_json(f: &Factor) -> Value {
    json!({
        "word": f.word,
        "alpha": f.alpha,
        "beta": f.beta,
        "loops": f.loops(),
        "suspensions": f.suspensions(),
        "smash_power": f.beta,
        "space": factor_inner(f),
        "connectivity": f.connectivity,
    })
}

fn stages_report(summary: &TowerSummary) -> (Value, String) {
    let mut text = String::new();
    let mut stages = Vec::new();
    for stage in &summary.stages {
        match stage {
            Stage::Immersions => {
                text.push_str("T_1: immersions\n");
                stages.push(json!({"kind": "immersions"}));
            }
            Stage::Layer {
                k,
                factors,
                map_connectivity,
            } => {
                text.push_str(&format!(
                    "\nlayer {k}: r_{k} is {map_connectivity}-connected; factors: {}\n",
                    factors.len()
                ));
                text.push_str(&table(&FACTOR_HEADERS, &factor_rows(factors)));
                stages.push(json!({
                    "kind": "layer",
                    "k": k,
                    "map_connectivity": map_connectivity,
                    "factors": factors.iter().map(factor_json).collect::<Vec<_>>(),
                }));
            }
        }
    }
    (Value::Array(stages), text)
}

fn trace_report(trace: &DerivationTrace) -> (Value, String) {
    (to_value(trace), format!("{trace}\n"))
}

fn execute(cli: &Cli) -> Result<Report> {
    Ok(match &cli.command {
        Command::Words { k, max_weight } => {
            let words = enumerate_basic_words(*k, *max_weight)?;
            let rows: Vec<Vec<String>> = words
                .iter()
                .map(|w| {
                    vec![
                        w.to_string(),
                        w.weight().to_string(),
                        format!("{:?}", w.multidegree().degrees()),
                        w.alpha().to_string(),
                        w.beta().to_string(),
                    ]
                })
                .collect();
            let list: Vec<Value> = words
                .iter()
                .map(|w| {
                    json!({
                        "word": w,
                        "letters": w.letters().iter().map(|l| l.index()).collect::<Vec<_>>(),
                        "multidegree": w.multidegree().degrees(),
                        "weight": w.weight(),
                        "alpha": w.alpha(),
                        "beta": w.beta(),
                    })
                })
                .collect();
            Report {
                command: "words",
                parameters: json!({"k": k, "max_weight": max_weight}),
                results: json!({"count": words.len(), "words": list}),
                text: table(&["word", "weight", "multidegree", "alpha", "beta"], &rows),
            }
        }
        Command::Layers {
            k,
            n,
            target,
            cutoff,
            verbose,
        } => {
            let cutoff = resolve_cutoff(cutoff)?;
            let factors = layer_factors(*k, *n, target, cutoff)?;
            let mut text = table(&FACTOR_HEADERS, &factor_rows(&factors));
            let mut results = Map::new();
            results.insert("factors".into(), factors.iter().map(factor_json).collect());
            if *verbose {
                let dropped = contractible_words(*k, *n, target, cutoff)?;
                let names: Vec<String> = dropped.iter().map(|w| w.to_string()).collect();
                text.push_str(&format!("contractible ({}): {}\n", names.len(), names.join(" ")));
                results.insert("contractible".into(), to_value(&names));
            }
            Report {
                command: "layers",
                parameters: json!({
                    "k": k, "n": n, "target": target_name(target), "cutoff": cutoff, "verbose": verbose,
                }),
                results: Value::Object(results),
                text,
            }
        }
        Command::Tower {
            n,
            target,
            kmax,
            cutoff,
            q,
        } => {
            let cutoff = resolve_cutoff(cutoff)?;
            let summary = tower_summary(*n, target, *kmax, cutoff, *q)?;
            let (stages, text) = stages_report(&summary);
            Report {
                command: "tower",
                parameters: json!({
                    "n": n, "target": target_name(target), "kmax": kmax, "cutoff": cutoff, "q": q,
                }),
                results: json!({"stages": stages}),
                text,
            }
        }
        Command::Knot { n, kmax, cutoff } => {
            let cutoff = resolve_cutoff(cutoff)?;
            let knots = knot_tower(*n, *kmax, cutoff)?;
            let (stages, mut text) = stages_report(&knots.summary);
            let fib = &knots.fibration;
            text.push_str(&format!(
                "\nfibration: {} → {} → {}\nbase: dimension {}, {}-connected\n",
                fib.fiber, fib.total, fib.base, fib.base_dimension, fib.base_connectivity
            ));
            Report {
                command: "knot",
                parameters: json!({"n": n, "kmax": kmax, "cutoff": cutoff}),
                results: json!({"stages": stages, "fibration": to_value(fib)}),
                text,
            }
        }
        Command::Estimate(e) => estimate(e)?,
        Command::Derive(Derive::Eta { f, q, k, balls }) => {
            let balls = balls.unwrap_or(*k);
            let trace = derive_eta_bound_with_balls(&f.cofunctor(), *q, *k, balls)?;
            let (results, text) = trace_report(&trace);
            Report {
                command: "derive eta",
                parameters: json!({"rho": f.rho, "c": f.c, "q": q, "k": k, "balls": balls}),
                results,
                text,
            }
        }
        Command::Derive(Derive::Homogeneous { k, c, rho, m, q }) => {
            let trace = derive_homogeneous_cartesianness(*k, *c, *rho, *m, &q.0)?;
            let (results, text) = trace_report(&trace);
            Report {
                command: "derive homogeneous",
                parameters: json!({"k": k, "c": c, "rho": rho, "m": m, "q": q.0}),
                results,
                text,
            }
        }
    })
}

fn bound_report(command: &'static str, parameters: Value, name: &str, bound: ExtInt) -> Report {
    Report {
        command,
        parameters,
        results: json!({ name: bound }),
        text: key_values(&[(name, bound.to_string())]),
    }
}

fn estimate(e: &Estimate) -> Result<Report> {
    Ok(match e {
        Estimate::Excision { n, q } => {
            let bound = excision_cartesianness(&HandleProfile::new(*n, q.0.clone())?)?;
            bound_report("estimate excision", json!({"n": n, "q": q.0}), "cartesian", bound)
        }
        Estimate::EmbAnalyticity { n } => {
            let f = emb_analyticity(*n)?;
            Report {
                command: "estimate emb-analyticity",
                parameters: json!({"n": n}),
                results: to_value(&f),
                text: key_values(&[
                    ("rho", f.rho.to_string()),
                    ("c", f.c.to_string()),
                    ("label", f.label.clone()),
                ]),
            }
        }
        Estimate::Analytic { f, q } => {
            let bound = analytic_cube_cartesianness(&f.cofunctor(), &q.0)?;
            bound_report(
                "estimate analytic",
                json!({"rho": f.rho, "c": f.c, "q": q.0}),
                "cartesian",
                bound,
            )
        }
        Estimate::Eta { f, q, j } => {
            let bound = eta_connectivity(&f.cofunctor(), *q, *j)?;
            bound_report(
                "estimate eta",
                json!({"rho": f.rho, "c": f.c, "q": q, "j": j}),
                "connected",
                bound,
            )
        }
        Estimate::EmbEta { n, q, k } => {
            let bound = emb_eta_connectivity(*n, *q, *k)?;
            bound_report("estimate emb-eta", json!({"n": n, "q": q, "k": k}), "connected", bound)
        }
        Estimate::LayerMap { f, q, k } => {
            let bound = layer_map_connectivity(&f.cofunctor(), *q, *k)?;
            bound_report(
                "estimate layer-map",
                json!({"rho": f.rho, "c": f.c, "q": q, "k": k}),
                "connected",
                bound,
            )
        }
        Estimate::Converges { f, q } => {
            let verdict = converges(&f.cofunctor(), *q);
            Report {
                command: "estimate converges",
                parameters: json!({"rho": f.rho, "c": f.c, "q": q}),
                results: json!({"converges": verdict}),
                text: key_values(&[("converges", verdict.to_string())]),
            }
        }
        Estimate::Homogeneous { k, conn, rho, m } => {
            let found = homogeneous_analyticity(*k, *conn, *rho, *m)?;
            let text = match &found {
                Some(f) => key_values(&[("rho", f.rho.to_string()), ("c", f.c.to_string())]),
                None => key_values(&[("analytic", "no estimate: needs rho >= m".into())]),
            };
            Report {
                command: "estimate homogeneous",
                parameters: json!({"k": k, "conn": conn, "rho": rho, "m": m}),
                results: json!({"analytic": found}),
                text,
            }
        }
        Estimate::Haefliger { m, n } => {
            let h = haefliger_metastable(*m, *n)?;
            Report {
                command: "estimate haefliger",
                parameters: json!({"m": m, "n": n}),
                results: to_value(&h),
                text: key_values(&[
                    ("square_1_cartesian", h.square_1_cartesian.to_string()),
                    ("s", h.s.to_string()),
                ]),
            }
        }
    })
}

fn exit_code(e: &Error) -> i32 {
    match e {
        Error::InvalidArgument(_) | Error::PreconditionViolation(_) => 2,
        Error::UnsupportedRange(_) => 3,
    }
}

/// Runs the command line `args` (including the program name), writing
/// results to `out` and diagnostics to `err`. Returns the exit code.
pub fn run(args: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{rendered}");
                    0
                }
                _ => {
                    let _ = write!(err, "{rendered}");
                    2
                }
            };
        }
    };
    match execute(&cli) {
        Ok(report) => {
            let written = if cli.json {
                writeln!(out, "{}", report.record())
            } else {
                write!(out, "{}", report.text)
            };
            if written.is_err() {
                return 1;
            }
            0
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            exit_code(&e)
        }
    }
}
