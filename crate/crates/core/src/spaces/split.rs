//! Hilton–Milnor splitting of `ΩΣ(X_1 ∨ .. ∨ X_k)` and its application to
//! the layer cube.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::ext::ExtInt;
use crate::spaces::{CubeOfSpaces, SpaceExpr, Variance};
use crate::words::{basic_words_with_content, BasicWord, MultiDegree};

/// `w(X_1, .., X_k)`: substitute `X_i` for `z_i` and smash for the bracket.
pub fn word_space(word: &BasicWord, summands: &[SpaceExpr]) -> SpaceExpr {
    word.fold(&mut |l| summands[l.index() - 1].clone(), &mut |a, b| {
        SpaceExpr::Smash(vec![a, b])
    })
}

/// Multidegrees `d` with `Σ d_i (c_i + 1) - 1 <= budget`, where `c_i` is the
/// connectivity of the `i`-th summand. Letters whose summand is contractible
/// only produce contractible words and are left out.
fn multidegrees_within(conns: &[ExtInt], budget: i64) -> Vec<MultiDegree> {
    let costs: Vec<Option<i64>> = conns.iter().map(|c| c.finite().map(|c| c + 1)).collect();
    let mut out = Vec::new();
    let mut acc = Vec::with_capacity(costs.len());

    fn go(costs: &[Option<i64>], left: i64, acc: &mut Vec<u32>, out: &mut Vec<MultiDegree>) {
        let i = acc.len();
        if i == costs.len() {
            if acc.iter().any(|&d| d > 0) {
                out.push(MultiDegree::new(acc.clone()));
            }
            return;
        }
        let max = match costs[i] {
            Some(c) if c > 0 => left / c,
            _ => 0,
        };
        for d in 0..=max.max(0) {
            acc.push(d as u32);
            go(costs, left - d * costs[i].unwrap_or(0), acc, out);
            acc.pop();
        }
    }

    if budget + 1 >= 0 {
        go(&costs, budget + 1, &mut acc, &mut out);
    }
    out
}

fn finite_cutoff(cutoff: ExtInt) -> Result<Option<i64>> {
    match cutoff {
        ExtInt::NegInf => Ok(None),
        ExtInt::Finite(c) => Ok(Some(c)),
        ExtInt::PosInf => Err(invalid("cutoff must be finite; the weak product is infinite")),
    }
}

/// The factors `(w, ΩΣ w(X))` of the Hilton–Milnor splitting whose
/// connectivity is at most `cutoff`, in basic-word order.
pub fn hilton_milnor_factors(summands: &[SpaceExpr], cutoff: ExtInt) -> Result<Vec<(BasicWord, SpaceExpr)>> {
    if summands.is_empty() {
        return Err(invalid("need at least one wedge summand"));
    }
    for (i, x) in summands.iter().enumerate() {
        x.validate()?;
        if !x.is_connected() {
            return Err(invalid(format!("summand X_{} = {x} is not connected", i + 1)));
        }
    }
    let Some(cutoff) = finite_cutoff(cutoff)? else {
        return Ok(Vec::new());
    };
    let conns: Vec<ExtInt> = summands.iter().map(SpaceExpr::connectivity).collect();
    let mut words: Vec<BasicWord> = multidegrees_within(&conns, cutoff)
        .iter()
        .flat_map(basic_words_with_content)
        .collect();
    words.sort();
    Ok(words
        .into_iter()
        .filter_map(|w| {
            let factor = SpaceExpr::loops(1, SpaceExpr::susp(1, word_space(&w, summands)));
            (factor.connectivity() <= cutoff).then_some((w, factor))
        })
        .collect())
}

/// `ΩΣ(X_1 ∨ .. ∨ X_k)` as a weak product over basic words, truncated to
/// the factors of connectivity at most `cutoff`.
pub fn hilton_milnor_split(summands: &[SpaceExpr], cutoff: ExtInt) -> Result<SpaceExpr> {
    Ok(SpaceExpr::WeakProd(
        hilton_milnor_factors(summands, cutoff)?
            .into_iter()
            .map(|(_, f)| f)
            .collect(),
    ))
}

/// One factor of the looped total fiber of a layer cube, as produced by
/// splitting every vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SplitFactor {
    pub word: BasicWord,
    pub expr: SpaceExpr,
    pub connectivity: ExtInt,
}

/// What a layer cube's vertices desuspend to.
struct DesuspendedCube {
    k: usize,
    /// `summands[mask]` lists `X_1..X_k` at vertex `mask`.
    summands: Vec<Vec<SpaceExpr>>,
}

fn desuspend(x: &SpaceExpr) -> Option<SpaceExpr> {
    match x {
        SpaceExpr::Susp { count: 1, inner } => Some((**inner).clone()),
        SpaceExpr::Sphere(d) if *d >= 1 => Some(SpaceExpr::Sphere(d - 1)),
        SpaceExpr::Point => Some(SpaceExpr::Point),
        _ => None,
    }
}

fn read_cube(cube: &CubeOfSpaces) -> Result<DesuspendedCube> {
    let malformed = |why: String| invalid(format!("not a layer cube: {why}"));
    if cube.variance() != Variance::Contravariant {
        return Err(malformed("expected a contravariant cube".into()));
    }
    let k = cube.dimension() + 1;
    if cube.elements() != (2..=k).collect::<Vec<_>>().as_slice() {
        return Err(malformed(format!("index set should be 2..{k}")));
    }
    let mut ambient: Option<&SpaceExpr> = None;
    let mut sphere: Option<&SpaceExpr> = None;
    let mut summands = Vec::with_capacity(1 << (k - 1));
    for mask in 0..1usize << (k - 1) {
        let SpaceExpr::Wedge(parts) = cube.vertex(mask) else {
            return Err(malformed(format!("vertex {mask} is not a wedge")));
        };
        let subset = cube.subset(mask);
        if parts.len() != subset.len() + 1 {
            return Err(malformed(format!("vertex {mask} has {} summands", parts.len())));
        }
        if *ambient.get_or_insert(&parts[0]) != &parts[0] {
            return Err(malformed("the ambient summand changes between vertices".into()));
        }
        for p in &parts[1..] {
            if *sphere.get_or_insert(p) != p || !matches!(p, SpaceExpr::Sphere(d) if *d >= 3) {
                return Err(malformed(format!("unexpected summand {p}")));
            }
        }
        let y = desuspend(&parts[0]).ok_or_else(|| malformed(format!("{} is not a suspension", parts[0])))?;
        if !y.is_connected() {
            return Err(malformed(format!("{y} is not connected")));
        }
        let mut xs = vec![y];
        xs.resize(k, SpaceExpr::Point);
        for (&label, p) in subset.iter().zip(&parts[1..]) {
            xs[label - 1] = desuspend(p).expect("spheres of dimension >= 3 desuspend");
        }
        summands.push(xs);
    }
    Ok(DesuspendedCube { k, summands })
}

/// Splits the looped layer cube word by word and reports, for every basic
/// word whose sub-cube has a nontrivial total fiber, that fiber looped
/// `k - 1` further times (the section space over the `k`-dimensional base
/// contributes `Ω^k` in total). Factors of connectivity above `cutoff` are
/// omitted; contractible ones are never reported.
pub fn for_each_total_fiber_factor(
    cube: &CubeOfSpaces,
    cutoff: ExtInt,
    mut visit: impl FnMut(SplitFactor),
) -> Result<()> {
    let cube = read_cube(cube)?;
    let Some(cutoff) = finite_cutoff(cutoff)? else {
        return Ok(());
    };
    let k = cube.k;
    let full = (1usize << (k - 1)) - 1;
    let extra_loops = (k - 1) as u32;

    // Every vertex's connectivities dominate those of the initial vertex, so
    // words that are too highly connected there are too highly connected
    // everywhere.
    let initial_conns: Vec<ExtInt> = cube.summands[full].iter().map(SpaceExpr::connectivity).collect();
    let budget = cutoff + extra_loops as i64;

    for d in multidegrees_within(&initial_conns, budget) {
        for word in basic_words_with_content(&d) {
            let vertices: Vec<SpaceExpr> = cube
                .summands
                .iter()
                .map(|xs| SpaceExpr::loops(1, SpaceExpr::susp(1, word_space(&word, xs))).normalize())
                .collect();
            // A direction along which the sub-cube is constant makes the
            // total fiber contractible.
            let constant_direction = (0..k - 1).any(|i| {
                (0..=full)
                    .filter(|m| m & (1 << i) == 0)
                    .all(|m| vertices[m] == vertices[m | (1 << i)])
            });
            if constant_direction {
                continue;
            }
            if let Some(m) = (0..full).find(|&m| !vertices[m].is_point()) {
                return Err(invalid(format!(
                    "word {word}: vertex {m} of its sub-cube is {} and no splitting applies",
                    vertices[m]
                )));
            }
            let expr = SpaceExpr::loops(extra_loops, vertices[full].clone());
            let connectivity = expr.connectivity();
            if connectivity.is_finite() && connectivity <= cutoff {
                visit(SplitFactor {
                    word,
                    expr,
                    connectivity,
                });
            }
        }
    }
    Ok(())
}

/// Collected form of [`for_each_total_fiber_factor`], sorted by
/// connectivity and then basic-word order.
pub fn total_fiber_factors(cube: &CubeOfSpaces, cutoff: ExtInt) -> Result<Vec<SplitFactor>> {
    let mut out = Vec::new();
    for_each_total_fiber_factor(cube, cutoff, |f| out.push(f))?;
    out.sort_by(|a, b| (a.connectivity, &a.word).cmp(&(b.connectivity, &b.word)));
    Ok(out)
}
