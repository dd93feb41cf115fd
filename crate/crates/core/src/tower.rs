//! Layers of the Taylor tower of `emb(I, N)` for `N^n ≃ ΣY`.
//!
//! For `k >= 2` the homotopy fiber of `T_k emb(I,N) → T_{k-1} emb(I,N)` is a
//! weak product of `Ω^k Σ^{1+α(w)(n-2)} Y^(β(w))` over the basic words `w`
//! in `z1..zk` that involve every letter except possibly `z1`. The weak
//! product is infinite, so every query carries a connectivity cutoff and
//! returns exactly the factors at or below it.

use serde::Serialize;

use crate::error::{invalid, unsupported, Result};
use crate::estimates::{emb_analyticity, layer_map_connectivity};
use crate::ext::ExtInt;
use crate::spaces::SpaceExpr;
use crate::words::{basic_words_with_content, BasicWord, MultiDegree};

/// One factor `Ω^k Σ^{1+α(n-2)} Y^(β)` of a layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Factor {
    pub word: BasicWord,
    pub alpha: u32,
    pub beta: u32,
    pub expr: SpaceExpr,
    pub connectivity: ExtInt,
}

impl Factor {
    fn new(k: usize, n: u32, y: &SpaceExpr, word: BasicWord) -> Factor {
        let (alpha, beta) = (word.alpha(), word.beta());
        let expr = factor_expr(k, n, y, alpha, beta);
        let connectivity = expr.connectivity();
        Factor {
            word,
            alpha,
            beta,
            expr,
            connectivity,
        }
    }

    /// Number of loops, `k`.
    pub fn loops(&self) -> u32 {
        match &self.expr {
            SpaceExpr::Loop { count, .. } => *count,
            _ => 0,
        }
    }

    /// Suspension degree `1 + α(n-2)`.
    pub fn suspensions(&self) -> u32 {
        match &self.expr {
            SpaceExpr::Loop { inner, .. } => match inner.as_ref() {
                SpaceExpr::Susp { count, .. } => *count,
                _ => 0,
            },
            _ => 0,
        }
    }
}

fn factor_expr(k: usize, n: u32, y: &SpaceExpr, alpha: u32, beta: u32) -> SpaceExpr {
    SpaceExpr::loops(
        k as u32,
        SpaceExpr::susp(1 + alpha * (n - 2), SpaceExpr::smash_power(y.clone(), beta)),
    )
}

fn check_layer_args(k: usize, n: u32, y: &SpaceExpr) -> Result<()> {
    if n < 4 {
        return Err(unsupported(format!("the layer formula needs n >= 4, got n = {n}")));
    }
    if k < 2 {
        return Err(invalid(format!("layers are indexed by k >= 2, got k = {k}")));
    }
    y.validate()?;
    if !y.is_connected() {
        return Err(invalid(format!("Y = {y} must be connected")));
    }
    Ok(())
}

/// Compositions of `total` into `parts` positive integers.
fn compositions(total: u32, parts: usize, mut visit: impl FnMut(&[u32])) {
    fn go(left: u32, parts: usize, acc: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
        if parts == 1 {
            acc.push(left);
            visit(acc);
            acc.pop();
            return;
        }
        for d in 1..=left.saturating_sub(parts as u32 - 1) {
            acc.push(d);
            go(left - d, parts - 1, acc, visit);
            acc.pop();
        }
    }
    if parts == 0 || total < parts as u32 {
        return;
    }
    go(total, parts, &mut Vec::with_capacity(parts), &mut visit);
}

/// Streams the layer factors of connectivity at most `cutoff` without
/// collecting them; see [`layer_factors`].
pub fn for_each_layer_factor(
    k: usize,
    n: u32,
    y: &SpaceExpr,
    cutoff: ExtInt,
    mut visit: impl FnMut(Factor),
) -> Result<()> {
    check_layer_args(k, n, y)?;
    let cutoff = match cutoff {
        ExtInt::NegInf => return Ok(()),
        ExtInt::Finite(c) => c,
        ExtInt::PosInf => return Err(invalid("cutoff must be finite")),
    };
    // Factor connectivity is nondecreasing in both α and β, and every
    // qualifying word has α >= k - 1.
    let within = |alpha: u32, beta: u32| factor_expr(k, n, y, alpha, beta).connectivity() <= cutoff;
    let min_alpha = (k - 1) as u32;
    let mut beta = 0;
    while within(min_alpha, beta) {
        let mut alpha = min_alpha;
        while within(alpha, beta) {
            compositions(alpha, k - 1, |rest| {
                let mut degrees = Vec::with_capacity(k);
                degrees.push(beta);
                degrees.extend_from_slice(rest);
                for word in basic_words_with_content(&MultiDegree::new(degrees)) {
                    visit(Factor::new(k, n, y, word));
                }
            });
            alpha += 1;
        }
        beta += 1;
    }
    Ok(())
}

/// The factors of the `k`-th layer of connectivity at most `cutoff`,
/// sorted by connectivity and then by basic-word order. Contractible
/// factors (a point `Y` with `β >= 1`) are left out.
pub fn layer_factors(k: usize, n: u32, y: &SpaceExpr, cutoff: ExtInt) -> Result<Vec<Factor>> {
    let mut out = Vec::new();
    for_each_layer_factor(k, n, y, cutoff, |f| out.push(f))?;
    out.sort_by(|a, b| (a.connectivity, &a.word).cmp(&(b.connectivity, &b.word)));
    Ok(out)
}

/// Basic words whose factor is contractible (only possible for `Y = *`,
/// where every `β >= 1` factor is a point), up to the largest weight that
/// occurs among the surviving factors at this cutoff.
pub fn contractible_words(k: usize, n: u32, y: &SpaceExpr, cutoff: ExtInt) -> Result<Vec<BasicWord>> {
    check_layer_args(k, n, y)?;
    if !y.normalize().is_point() {
        return Ok(Vec::new());
    }
    let max_weight = layer_factors(k, n, y, cutoff)?
        .iter()
        .map(|f| f.word.weight())
        .max()
        .unwrap_or(0);
    let mut out = Vec::new();
    for weight in 1..=max_weight {
        for beta in 1..weight {
            compositions(weight - beta, k - 1, |rest| {
                let mut degrees = vec![beta];
                degrees.extend_from_slice(rest);
                out.extend(basic_words_with_content(&MultiDegree::new(degrees)));
            });
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Stage {
    /// `T_1 emb(I, N)` is the space of immersions.
    Immersions,
    Layer {
        k: usize,
        factors: Vec<Factor>,
        /// Connectivity of `r_k : T_k → T_{k-1}`.
        map_connectivity: ExtInt,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerSummary {
    pub n: u32,
    pub target: SpaceExpr,
    pub handle_index: ExtInt,
    pub cutoff: ExtInt,
    pub stages: Vec<Stage>,
}

/// Stages `1..=k_max` of the tower of `emb(I, N)`, with `N ≃ ΣY`.
///
/// `handle_index` is the handle index of `I` relative to its boundary used
/// for the connectivity of `r_k`; it is 1 for the interval.
pub fn tower_summary(
    n: u32,
    y: &SpaceExpr,
    k_max: usize,
    cutoff: ExtInt,
    handle_index: ExtInt,
) -> Result<TowerSummary> {
    if k_max < 1 {
        return Err(invalid("k_max must be at least 1"));
    }
    check_layer_args(2, n, y)?;
    let emb = emb_analyticity(n)?;
    let mut stages = vec![Stage::Immersions];
    for k in 2..=k_max {
        stages.push(Stage::Layer {
            k,
            factors: layer_factors(k, n, y, cutoff)?,
            map_connectivity: layer_map_connectivity(&emb, handle_index, k as u32)?,
        });
    }
    Ok(TowerSummary {
        n,
        target: y.clone(),
        handle_index,
        cutoff,
        stages,
    })
}

/// The fibration `emb(I, R^{n-1} × I) → emb(S^1, S^n) → O(n+1)/O(n-1)`.
/// Recorded only; its extensions are not resolved.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FibrationRecord {
    pub fiber: String,
    pub total: String,
    pub base: String,
    pub base_dimension: u32,
    pub base_connectivity: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KnotTower {
    pub summary: TowerSummary,
    pub fibration: FibrationRecord,
}

/// Tower of long knots `emb(I, R^{n-1} × I)`, where the target is
/// contractible (`Y = *`), together with the fibration relating it to
/// closed knots in `S^n`.
pub fn knot_tower(n: u32, k_max: usize, cutoff: ExtInt) -> Result<KnotTower> {
    if n < 4 {
        return Err(unsupported(format!("the knot tower needs n >= 4, got n = {n}")));
    }
    let summary = tower_summary(n, &SpaceExpr::Point, k_max, cutoff, ExtInt::Finite(1))?;
    // V_2(R^{n+1}) = O(n+1)/O(n-1): dimension 2(n+1) - 3, (n-2)-connected.
    let fibration = FibrationRecord {
        fiber: format!("emb(I, R^{} x I)", n - 1),
        total: format!("emb(S^1, S^{n})"),
        base: format!("V_2(R^{}) = O({})/O({})", n + 1, n + 1, n - 1),
        base_dimension: 2 * n - 1,
        base_connectivity: i64::from(n) - 2,
    };
    Ok(KnotTower { summary, fibration })
}
