//! Mechanical replay of the connectivity arguments behind the convergence
//! and homogeneous-layer estimates.
//!
//! A derivation is an append-only list of steps. Each step either states an
//! axiom (a hypothesis or an input estimate), applies one of the rules
//! below to earlier facts, weakens an earlier bound (how an induction
//! hypothesis is invoked), or unfolds a Cartesian cube into the connected
//! map from its initial vertex to the homotopy limit of the rest.
//!
//! Rules (bounds are [`ExtInt`]s):
//!
//! * R1 fiber cubes: target cube `k`-Cartesian and every fiber cube
//!   `k`-Cartesian give a `k`-Cartesian source cube.
//! * R2 source from map: a map of cubes that is `a`-Cartesian as a cube of
//!   one dimension higher, with `b`-Cartesian target, has
//!   `min(a, b)`-Cartesian source.
//! * R3 left cancellation: `f∘g` `a`-Cartesian and `f` `b`-Cartesian give
//!   `g` `min(a, b-1)`-Cartesian. Maps are 1-cubes, so this also applies to
//!   connectivity of maps.
//! * R4 punctured limit: a termwise `t`-connected map of diagrams over a
//!   punctured `k`-cube induces a `(t-k+1)`-connected map of homotopy limits.
//! * R5 composition: `a`-connected after `b`-connected is
//!   `min(a, b)`-connected.
//!
//! R2 and R3 are encoded only in the form the two replayed arguments use
//! them.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::{invalid, precondition, Result};
use crate::estimates::{analytic_cube_cartesianness, AnalyticCofunctor};
use crate::ext::ExtInt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FactKind {
    Cartesian,
    Connected,
}

impl fmt::Display for FactKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FactKind::Cartesian => "cartesian",
            FactKind::Connected => "connected",
        })
    }
}

/// "`subject` is `bound`-Cartesian" or "`subject` is `bound`-connected".
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnFact {
    pub subject: String,
    pub kind: FactKind,
    pub bound: ExtInt,
}

impl ConnFact {
    pub fn cartesian(subject: impl Into<String>, bound: ExtInt) -> ConnFact {
        ConnFact {
            subject: subject.into(),
            kind: FactKind::Cartesian,
            bound,
        }
    }

    pub fn connected(subject: impl Into<String>, bound: ExtInt) -> ConnFact {
        ConnFact {
            subject: subject.into(),
            kind: FactKind::Connected,
            bound,
        }
    }
}

impl fmt::Display for ConnFact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} is {}-{}", self.subject, self.bound, self.kind)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "name", rename_all = "snake_case")]
pub enum Rule {
    FiberCubes,
    SourceFromMap,
    LeftCancellation,
    PuncturedLimit { cube_size: u32 },
    Composition,
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::FiberCubes => "R1 fiber-cubes",
            Rule::SourceFromMap => "R2 source-from-map",
            Rule::LeftCancellation => "R3 left-cancellation",
            Rule::PuncturedLimit { .. } => "R4 punctured-limit",
            Rule::Composition => "R5 composition",
        }
    }
}

fn expect_arity(rule: Rule, inputs: &[ConnFact], arity: usize) -> Result<()> {
    if inputs.len() != arity {
        return Err(invalid(format!(
            "{} takes {arity} input facts, got {}",
            rule.name(),
            inputs.len()
        )));
    }
    Ok(())
}

fn expect_kind(rule: Rule, inputs: &[ConnFact], kind: FactKind) -> Result<()> {
    if let Some(bad) = inputs.iter().find(|f| f.kind != kind) {
        return Err(invalid(format!("{} expects {kind} facts, got: {bad}", rule.name())));
    }
    Ok(())
}

/// Applies `rule` to `inputs`, naming the conclusion `subject`.
///
/// Input order: R1 takes the target cube first and then the fiber cubes; R2
/// takes the map of cubes and then the target; R3 takes the composite and
/// then the outer map.
pub fn apply_rule(rule: Rule, inputs: &[ConnFact], subject: impl Into<String>) -> Result<ConnFact> {
    let subject = subject.into();
    match rule {
        Rule::FiberCubes => {
            if inputs.len() < 2 {
                return Err(invalid(format!(
                    "{} needs a target cube and at least one fiber cube",
                    rule.name()
                )));
            }
            expect_kind(rule, inputs, FactKind::Cartesian)?;
            let bound = inputs.iter().map(|f| f.bound).min().expect("nonempty");
            Ok(ConnFact::cartesian(subject, bound))
        }
        Rule::SourceFromMap => {
            expect_arity(rule, inputs, 2)?;
            expect_kind(rule, inputs, FactKind::Cartesian)?;
            Ok(ConnFact::cartesian(subject, inputs[0].bound.min(inputs[1].bound)))
        }
        Rule::LeftCancellation => {
            expect_arity(rule, inputs, 2)?;
            let kind = inputs[0].kind;
            expect_kind(rule, inputs, kind)?;
            let bound = inputs[0].bound.min(inputs[1].bound - 1);
            Ok(ConnFact { subject, kind, bound })
        }
        Rule::PuncturedLimit { cube_size } => {
            expect_arity(rule, inputs, 1)?;
            expect_kind(rule, inputs, FactKind::Connected)?;
            if cube_size == 0 {
                return Err(invalid("punctured cubes have size at least 1"));
            }
            Ok(ConnFact::connected(subject, inputs[0].bound - i64::from(cube_size) + 1))
        }
        Rule::Composition => {
            expect_arity(rule, inputs, 2)?;
            expect_kind(rule, inputs, FactKind::Connected)?;
            Ok(ConnFact::connected(subject, inputs[0].bound.min(inputs[1].bound)))
        }
    }
}

/// How a step's fact was obtained.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Justification {
    /// A hypothesis or an imported estimate.
    Axiom {
        source: String,
    },
    Rule {
        rule: Rule,
    },
    /// A weaker bound for the same statement, as in invoking an induction
    /// hypothesis.
    Weaken,
    /// A `b`-Cartesian cube has a `b`-connected map from its initial vertex
    /// to the homotopy limit of the rest.
    Unfold,
}

impl Justification {
    fn label(&self) -> String {
        match self {
            Justification::Axiom { .. } => "axiom".into(),
            Justification::Rule { rule } => match rule {
                Rule::PuncturedLimit { cube_size } => format!("{} (k={cube_size})", rule.name()),
                _ => rule.name().into(),
            },
            Justification::Weaken => "weaken".into(),
            Justification::Unfold => "unfold".into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Step {
    pub by: Justification,
    /// Indices of earlier steps.
    pub inputs: Vec<usize>,
    pub output: ConnFact,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivationTrace {
    pub steps: Vec<Step>,
    pub conclusion: ConnFact,
}

impl DerivationTrace {
    /// Re-checks every step: inputs precede it, rules reproduce the recorded
    /// output, weakenings only lower bounds, unfoldings keep the bound.
    pub fn verify(&self) -> Result<()> {
        for (i, step) in self.steps.iter().enumerate() {
            if let Some(&j) = step.inputs.iter().find(|&&j| j >= i) {
                return Err(invalid(format!("step {i} uses later step {j}")));
            }
            let inputs: Vec<ConnFact> = step.inputs.iter().map(|&j| self.steps[j].output.clone()).collect();
            let ok = match &step.by {
                Justification::Axiom { .. } => inputs.is_empty(),
                Justification::Rule { rule } => apply_rule(*rule, &inputs, step.output.subject.clone())? == step.output,
                Justification::Weaken => {
                    inputs.len() == 1 && inputs[0].kind == step.output.kind && step.output.bound <= inputs[0].bound
                }
                Justification::Unfold => {
                    inputs.len() == 1
                        && inputs[0].kind == FactKind::Cartesian
                        && step.output.kind == FactKind::Connected
                        && step.output.bound == inputs[0].bound
                }
            };
            if !ok {
                return Err(invalid(format!("step {i} does not follow: {}", step.output)));
            }
        }
        match self.steps.last() {
            Some(last) if last.output == self.conclusion => Ok(()),
            _ => Err(invalid("the conclusion is not the last step")),
        }
    }
}

impl fmt::Display for DerivationTrace {
    /// One step per line: index, justification, inputs, resulting fact.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, step) in self.steps.iter().enumerate() {
            let inputs = step.inputs.iter().map(|j| j.to_string()).collect::<Vec<_>>().join(",");
            writeln!(f, "{i:>3}  {:<28} [{inputs}]  {}", step.by.label(), step.output)?;
        }
        write!(f, "  => {}", self.conclusion)
    }
}

#[derive(Default)]
struct Builder {
    steps: Vec<Step>,
}

impl Builder {
    fn push(&mut self, by: Justification, inputs: Vec<usize>, output: ConnFact) -> usize {
        self.steps.push(Step { by, inputs, output });
        self.steps.len() - 1
    }

    fn fact(&self, i: usize) -> &ConnFact {
        &self.steps[i].output
    }

    fn axiom(&mut self, source: impl Into<String>, fact: ConnFact) -> usize {
        self.push(Justification::Axiom { source: source.into() }, Vec::new(), fact)
    }

    fn apply(&mut self, rule: Rule, inputs: &[usize], subject: impl Into<String>) -> Result<usize> {
        let facts: Vec<ConnFact> = inputs.iter().map(|&i| self.fact(i).clone()).collect();
        let out = apply_rule(rule, &facts, subject)?;
        Ok(self.push(Justification::Rule { rule }, inputs.to_vec(), out))
    }

    fn weaken(&mut self, i: usize, bound: ExtInt, subject: impl Into<String>) -> usize {
        let kind = self.fact(i).kind;
        debug_assert!(bound <= self.fact(i).bound);
        self.push(
            Justification::Weaken,
            vec![i],
            ConnFact {
                subject: subject.into(),
                kind,
                bound,
            },
        )
    }

    fn unfold(&mut self, i: usize, subject: impl Into<String>) -> usize {
        let bound = self.fact(i).bound;
        self.push(Justification::Unfold, vec![i], ConnFact::connected(subject, bound))
    }

    fn finish(self) -> DerivationTrace {
        let conclusion = self.steps.last().expect("nonempty derivation").output.clone();
        DerivationTrace {
            steps: self.steps,
            conclusion,
        }
    }
}

/// Replays the bound on `η_{k-1} : G(W) → T_{k-1} G(W)` for `W` built from
/// handles of index at most `q`, where `G` is `rho`-analytic with excess `c`.
/// The conclusion is `c + k(rho - q)`.
pub fn derive_eta_bound(f: &AnalyticCofunctor, q: i64, k: u32) -> Result<DerivationTrace> {
    derive_eta_bound_with_balls(f, q, k, k)
}

/// As [`derive_eta_bound`], with `balls` open balls in the base case
/// (`q = 0`). Extra balls only add more highly connected stages to the
/// tower of fibrations.
pub fn derive_eta_bound_with_balls(f: &AnalyticCofunctor, q: i64, k: u32, balls: u32) -> Result<DerivationTrace> {
    if k < 2 {
        return Err(invalid(format!("η_(k-1) bounds are stated for k >= 2, got k = {k}")));
    }
    if q < 0 {
        return Err(invalid(format!("handle index {q} is negative")));
    }
    if q >= f.rho {
        return Err(precondition(format!("handle index {q} must be below rho = {}", f.rho)));
    }
    if balls == 0 {
        return Err(invalid("the base case needs at least one ball"));
    }
    let mut b = Builder::default();
    eta_step(&mut b, f, q, k, balls)?;
    Ok(b.finish())
}

fn eta_step(b: &mut Builder, f: &AnalyticCofunctor, q: i64, k: u32, balls: u32) -> Result<usize> {
    let eta = |q: i64, w: &str| format!("η_{} : G({w}) → T_{}G({w}) [index ≤ {q}]", k - 1, k - 1);
    if q == 0 {
        let w = format!("{balls} balls");
        if balls < k {
            return Ok(b.axiom(
                "fewer balls than k: T_(k-1)G is G by definition",
                ConnFact::connected(eta(0, &w), ExtInt::PosInf),
            ));
        }
        // r_t : J_t → J_{t-1} is pulled back from the product of the maps
        // p_S, |S| = t, each unfolded from an analytic t-cube of balls.
        let mut composite: Option<usize> = None;
        for t in (k..=balls).rev() {
            let bound = if t >= 2 {
                analytic_cube_cartesianness(f, &vec![ExtInt::Finite(0); t as usize])?
            } else {
                ExtInt::Finite(f.c + f.rho)
            };
            let cube = b.axiom(
                "analyticity with t handles of index 0",
                ConnFact::cartesian(format!("cube R ↦ G(W_R), R ⊆ S, |S| = {t}"), bound),
            );
            let r_t = b.unfold(cube, format!("r_{t} : J_{t} → J_{} (pullback of Π p_S)", t - 1));
            composite = Some(match composite {
                None => r_t,
                Some(acc) => b.apply(
                    Rule::Composition,
                    &[r_t, acc],
                    format!("r_{t}···r_{balls} : J_{balls} → J_{}", t - 1),
                )?,
            });
        }
        let composite = composite.expect("balls >= k");
        let eta_top = b.axiom(
            "T_lG(W) is G(W) for W a union of l balls",
            ConnFact::connected(format!("η_{balls} : G({w}) → T_{balls}G({w})"), ExtInt::PosInf),
        );
        return b.apply(Rule::Composition, &[composite, eta_top], eta(0, &w));
    }

    // Removing k parallel copies of the cocores leaves handles of index < q.
    let termwise = eta_step(b, f, q - 1, k, balls)?;
    let termwise = b.weaken(
        termwise,
        b.fact(termwise).bound,
        format!("η_{} on G(W∖A_S), S ≠ ∅ (handles of index ≤ {})", k - 1, q - 1),
    );
    let holim = b.apply(
        Rule::PuncturedLimit { cube_size: k },
        &[termwise],
        format!("holim_(S≠∅) G(W∖A_S) → holim_(S≠∅) T_{}G(W∖A_S)", k - 1),
    )?;
    let g_cube = b.axiom(
        format!("analyticity with {k} handles of index {q}"),
        ConnFact::cartesian(
            "cube S ↦ G(W∖A_S)",
            analytic_cube_cartesianness(f, &vec![ExtInt::Finite(q); k as usize])?,
        ),
    );
    let t_cube = b.axiom(
        format!("T_{}G is polynomial of degree ≤ {}", k - 1, k - 1),
        ConnFact::cartesian(format!("cube S ↦ T_{}G(W∖A_S)", k - 1), ExtInt::PosInf),
    );
    let g_map = b.unfold(g_cube, "G(W) → holim_(S≠∅) G(W∖A_S)");
    let t_map = b.unfold(t_cube, format!("T_{}G(W) → holim_(S≠∅) T_{}G(W∖A_S)", k - 1, k - 1));
    let around = b.apply(
        Rule::Composition,
        &[holim, g_map],
        format!("G(W) → holim_(S≠∅) T_{}G(W∖A_S)", k - 1),
    )?;
    b.apply(Rule::LeftCancellation, &[around, t_map], eta(q, "W"))
}

/// Replays the argument that a cofunctor homogeneous of degree `k`, whose
/// values on `k` balls are `(c - 1 + k rho)`-connected, has
/// `(c + Σ (rho - q_i))`-Cartesian handle cubes when `rho >= m`.
///
/// `q_list` holds the handle indices `q_0..q_r` (each at most `m`, or
/// `-inf`). With `r >= k` or a `-inf` index the cube is trivially Cartesian
/// and the conclusion is `+inf`.
pub fn derive_homogeneous_cartesianness(
    k: u32,
    c: i64,
    rho: i64,
    m: i64,
    q_list: &[ExtInt],
) -> Result<DerivationTrace> {
    if rho < m {
        return Err(precondition(format!("needs rho >= m, got rho = {rho}, m = {m}")));
    }
    if q_list.is_empty() {
        return Err(invalid("need at least one handle index"));
    }
    for q in q_list {
        match q {
            ExtInt::PosInf => return Err(invalid("a handle index cannot be +inf")),
            ExtInt::Finite(v) if *v < 0 || *v > m => {
                return Err(precondition(format!("handle index {v} must lie in 0..={m}")))
            }
            _ => {}
        }
    }
    let mut b = Builder::default();
    let label = cube_label(q_list);
    if q_list.len() > k as usize {
        b.axiom(
            "r >= k: a degree-k homogeneous cofunctor has Cartesian (r+1)-cubes",
            ConnFact::cartesian(label, ExtInt::PosInf),
        );
        return Ok(b.finish());
    }
    if q_list.contains(&ExtInt::NegInf) {
        b.axiom(
            "a handle of index -inf is a collar",
            ConnFact::cartesian(label, ExtInt::PosInf),
        );
        return Ok(b.finish());
    }
    let mut list: Vec<i64> = q_list.iter().filter_map(|q| q.finite()).collect();
    list.sort_unstable_by(|a, b| b.cmp(a));
    let mut replay = Homogeneous {
        k: k as usize,
        c,
        rho,
        m,
        b,
        memo: HashMap::new(),
    };
    replay.cube(list)?;
    Ok(replay.b.finish())
}

fn cube_label(q: &[impl fmt::Display]) -> String {
    let q: Vec<String> = q.iter().map(|q| q.to_string()).collect();
    format!("cube S ↦ G(V_S), handle indices [{}]", q.join(","))
}

struct Homogeneous {
    k: usize,
    c: i64,
    rho: i64,
    m: i64,
    b: Builder,
    memo: HashMap<Vec<i64>, usize>,
}

impl Homogeneous {
    fn claim(&self, list: &[i64]) -> ExtInt {
        ExtInt::Finite(self.c + list.iter().map(|q| self.rho - q).sum::<i64>())
    }

    fn with(list: &[i64], extra: i64) -> Vec<i64> {
        let mut v = list.to_vec();
        v.push(extra);
        v.sort_unstable_by(|a, b| b.cmp(a));
        v
    }

    /// `list` is sorted in decreasing order, so `list[0]` plays `q_0`.
    fn cube(&mut self, list: Vec<i64>) -> Result<usize> {
        if let Some(&i) = self.memo.get(&list) {
            return Ok(i);
        }
        let label = cube_label(&list);
        let out = if list.len() > self.k {
            self.b.axiom(
                "r >= k: trivially Cartesian",
                ConnFact::cartesian(label, ExtInt::PosInf),
            )
        } else if list[0] == 0 {
            // all handles of index 0: induction on the handles of V
            let base = if list.len() == self.k {
                self.b.axiom(
                    "V empty, r = k-1: only G(V_[r]) is nontrivial and it is (c-1+kρ)-connected",
                    ConnFact::cartesian(
                        format!("{label}, V = ∅"),
                        ExtInt::Finite(self.c + self.k as i64 * self.rho),
                    ),
                )
            } else {
                self.b.axiom(
                    "V empty, r < k-1: every vertex is contractible",
                    ConnFact::cartesian(format!("{label}, V = ∅"), ExtInt::PosInf),
                )
            };
            let hypothesis = self.b.weaken(
                base,
                self.claim(&list),
                format!("{label} with B removed (fewer handles in V)"),
            );
            let removal = self.cube(Self::with(&list, self.m))?;
            let removal = self.b.weaken(
                removal,
                self.b.fact(removal).bound,
                format!("map {{G(V_S)}} → {{G(V_S∖B)}}, B a cocore of index {}", self.m),
            );
            self.b.apply(Rule::SourceFromMap, &[removal, hypothesis], label)?
        } else {
            let q0 = list[0];
            let mut lowered = list.clone();
            lowered[0] = q0 - 1;
            lowered.sort_unstable_by(|a, b| b.cmp(a));
            let f = self.cube(lowered)?;
            let f = self
                .b
                .weaken(f, self.b.fact(f).bound, "f : {G(V_S∖(A∪B))} → {G(V_S∖C)}");
            let fg = self.b.axiom(
                "V_S∖C → V_S∖B is an isotopy equivalence",
                ConnFact::cartesian("f∘g", ExtInt::PosInf),
            );
            let g = self
                .b
                .apply(Rule::LeftCancellation, &[fg, f], "g : {G(V_S∖B)} → {G(V_S∖(A∪B))}")?;
            let square = self.cube(Self::with(&list, q0))?;
            let square = self
                .b
                .weaken(square, self.b.fact(square).bound, "square with horizontal arrows g, h");
            self.b.apply(Rule::SourceFromMap, &[square, g], label)?
        };
        self.memo.insert(list, out);
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Finite, PosInf};

    fn f(rho: i64, c: i64) -> AnalyticCofunctor {
        AnalyticCofunctor::new(rho, c, "G")
    }

    #[test]
    fn rule_examples() {
        let a = ConnFact::cartesian("f∘g", PosInf);
        let fb = ConnFact::cartesian("f", Finite(-3 + 1 + 5));
        assert_eq!(apply_rule(Rule::LeftCancellation, &[a, fb], "g").unwrap().bound, 2);

        // t = c + k(ρ-q+1) with (ρ, c, q, k) = (4, -3, 2, 3)
        let t = ConnFact::connected("termwise", Finite(-3 + 3 * 3));
        let out = apply_rule(Rule::PuncturedLimit { cube_size: 3 }, &[t], "holim").unwrap();
        assert_eq!(out.bound, -3 + 3 * 3 - 3 + 1);

        let a = ConnFact::connected("a", Finite(6));
        let b = ConnFact::connected("b", Finite(7));
        assert_eq!(apply_rule(Rule::Composition, &[a, b], "ab").unwrap().bound, 6);
    }

    #[test]
    fn rule_arity_and_kinds() {
        let c = ConnFact::cartesian("x", Finite(1));
        let m = ConnFact::connected("y", Finite(1));
        assert!(apply_rule(Rule::Composition, std::slice::from_ref(&m), "z").is_err());
        assert!(apply_rule(Rule::SourceFromMap, &[c.clone(), m.clone()], "z").is_err());
        assert!(apply_rule(Rule::FiberCubes, std::slice::from_ref(&c), "z").is_err());
        assert!(apply_rule(Rule::PuncturedLimit { cube_size: 2 }, std::slice::from_ref(&c), "z").is_err());
        let r1 = apply_rule(
            Rule::FiberCubes,
            &[c.clone(), ConnFact::cartesian("fiber", Finite(0))],
            "z",
        )
        .unwrap();
        assert_eq!(r1.bound, 0);
    }

    #[test]
    fn eta_examples() {
        let t = derive_eta_bound(&f(4, -3), 1, 3).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, 6);

        let t = derive_eta_bound(&f(4, -3), 0, 2).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, 5);

        let t = derive_eta_bound(&f(3, -2), 2, 2).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, 0);
        let r4: Vec<ExtInt> = t
            .steps
            .iter()
            .filter(|s| {
                matches!(
                    s.by,
                    Justification::Rule {
                        rule: Rule::PuncturedLimit { .. }
                    }
                )
            })
            .map(|s| s.output.bound)
            .collect();
        // last R4 application is the q = 2 level
        assert_eq!(r4.last(), Some(&Finite(1)));
    }

    #[test]
    fn eta_with_extra_balls_and_too_few() {
        for balls in 1..6 {
            let t = derive_eta_bound_with_balls(&f(4, -3), 0, 3, balls).unwrap();
            t.verify().unwrap();
            let expected = if balls < 3 { PosInf } else { Finite(9) };
            assert_eq!(t.conclusion.bound, expected, "balls = {balls}");

            let t = derive_eta_bound_with_balls(&f(4, -3), 1, 3, balls).unwrap();
            t.verify().unwrap();
            assert_eq!(t.conclusion.bound, 6, "balls = {balls}");
        }
    }

    #[test]
    fn eta_errors() {
        assert!(matches!(
            derive_eta_bound(&f(4, -3), 4, 2),
            Err(crate::Error::PreconditionViolation(_))
        ));
        assert!(derive_eta_bound(&f(4, -3), 1, 1).is_err());
    }

    #[test]
    fn homogeneous_examples() {
        let t = derive_homogeneous_cartesianness(2, 0, 4, 3, &[Finite(0), Finite(0)]).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, 8);

        let t = derive_homogeneous_cartesianness(3, -1, 4, 3, &[Finite(2), Finite(1)]).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, 4);

        let t = derive_homogeneous_cartesianness(2, 0, 4, 3, &[Finite(0); 3]).unwrap();
        t.verify().unwrap();
        assert_eq!(t.conclusion.bound, PosInf);

        let t = derive_homogeneous_cartesianness(3, 0, 4, 3, &[ExtInt::NegInf, Finite(1)]).unwrap();
        assert_eq!(t.conclusion.bound, PosInf);
    }

    #[test]
    fn homogeneous_errors() {
        assert!(matches!(
            derive_homogeneous_cartesianness(2, 0, 2, 3, &[Finite(0)]),
            Err(crate::Error::PreconditionViolation(_))
        ));
        assert!(derive_homogeneous_cartesianness(2, 0, 4, 3, &[Finite(4)]).is_err());
        assert!(derive_homogeneous_cartesianness(2, 0, 4, 3, &[]).is_err());
    }

    #[test]
    fn tampered_traces_fail_verification() {
        let mut t = derive_eta_bound(&f(4, -3), 1, 3).unwrap();
        let last = t.steps.len() - 1;
        t.steps[last].output.bound = Finite(7);
        t.conclusion.bound = Finite(7);
        assert!(t.verify().is_err());

        let mut t = derive_eta_bound(&f(4, -3), 1, 3).unwrap();
        t.steps[3].inputs = vec![5];
        assert!(t.verify().is_err());
    }

    #[test]
    fn text_export_is_one_line_per_step() {
        let t = derive_eta_bound(&f(4, -3), 0, 2).unwrap();
        let text = t.to_string();
        assert_eq!(text.lines().count(), t.steps.len() + 1);
        assert!(text.lines().last().unwrap().contains("5-connected"));
    }
}
