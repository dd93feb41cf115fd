//! Closed-form estimates against each other and against the replayed
//! derivations.

use embcalc::engine::{
    apply_rule, derive_eta_bound, derive_eta_bound_with_balls, derive_homogeneous_cartesianness, ConnFact,
    Justification, Rule,
};
use embcalc::estimates::{
    analytic_cube_cartesianness, converges, emb_analyticity, emb_eta_connectivity, eta_connectivity,
    excision_cartesianness, haefliger_metastable, homogeneous_analyticity, layer_map_connectivity, AnalyticCofunctor,
    HandleProfile,
};
use embcalc::{Error, ExtInt};
use proptest::prelude::*;
use ExtInt::{Finite, NegInf, PosInf};

/// Non-increasing lists of length `len` with entries in `0..=top`.
fn descending_lists(len: usize, top: i64) -> Vec<Vec<i64>> {
    if len == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 0..=top {
        for mut rest in descending_lists(len - 1, first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn emb_eta_is_eta_of_emb() {
    for n in 4..=20u32 {
        let emb = emb_analyticity(n).unwrap();
        for q in 0..=i64::from(n) - 3 {
            for k in 1..=50u32 {
                let direct = emb_eta_connectivity(n, Finite(q), k).unwrap();
                assert_eq!(direct, eta_connectivity(&emb, Finite(q), k).unwrap());
                let (n, k) = (i64::from(n), i64::from(k));
                assert_eq!(direct, k * (n - 2 - q) - q + 1);
            }
        }
    }
}

#[test]
fn excision_is_analyticity_of_emb() {
    for n in 3..=12i64 {
        let emb = emb_analyticity(n as u32).unwrap();
        for len in 2..=5 {
            for list in descending_lists(len, n - 3) {
                let q: Vec<ExtInt> = list.iter().map(|&q| Finite(q)).collect();
                let p = HandleProfile::new(n, q.clone()).unwrap();
                let e = excision_cartesianness(&p).unwrap();
                assert_eq!(e, analytic_cube_cartesianness(&emb, &q).unwrap());
                assert_eq!(e, 3 - n + list.iter().map(|q| n - q - 2).sum::<i64>());
            }
        }
        let collar = HandleProfile::new(n, vec![NegInf, Finite(0)]).unwrap();
        assert_eq!(excision_cartesianness(&collar).unwrap(), PosInf);
    }
}

#[test]
fn monotone_in_the_stage() {
    let f = AnalyticCofunctor::new(5, -2, "G");
    for q in 0..5 {
        for j in 1..20 {
            assert!(eta_connectivity(&f, Finite(q), j).unwrap() < eta_connectivity(&f, Finite(q), j + 1).unwrap());
            assert!(
                layer_map_connectivity(&f, Finite(q), j).unwrap()
                    < layer_map_connectivity(&f, Finite(q), j + 1).unwrap()
            );
        }
        assert!(converges(&f, Finite(q)));
    }
    assert!(!converges(&f, Finite(5)));
}

#[test]
fn haefliger_range() {
    for n in 0..=30i64 {
        for m in 0..=n {
            let h = haefliger_metastable(m, n).unwrap();
            assert_eq!(2 * (n - 2 - m) - m + 1, 2 * n - 3 * (m + 1));
            assert_eq!(h.s, 2 * (n - 2 - m) - m + 1);
            if n >= 3 {
                assert_eq!(h.square_1_cartesian, h.s >= 1, "m={m} n={n}");
            }
        }
    }
    assert!(matches!(haefliger_metastable(5, 4), Err(Error::InvalidArgument(_))));
}

#[test]
fn eta_replay_grid() {
    for rho in 2..=8i64 {
        for c in -6..=2i64 {
            let f = AnalyticCofunctor::new(rho, c, "G");
            for q in 0..rho {
                for k in 2..=6u32 {
                    let t = derive_eta_bound(&f, q, k).unwrap();
                    t.verify().unwrap();
                    assert_eq!(t.conclusion.bound, c + i64::from(k) * (rho - q));
                    assert_eq!(t.conclusion.bound, eta_connectivity(&f, Finite(q), k - 1).unwrap());
                    for (i, step) in t.steps.iter().enumerate() {
                        assert!(step.inputs.iter().all(|&j| j < i));
                    }
                }
            }
        }
    }
}

#[test]
fn more_balls_never_change_the_bound() {
    let f = AnalyticCofunctor::new(4, -3, "G");
    for q in 0..4 {
        for k in 2..=5u32 {
            let base = derive_eta_bound(&f, q, k).unwrap().conclusion.bound;
            for balls in k..k + 4 {
                assert_eq!(
                    derive_eta_bound_with_balls(&f, q, k, balls).unwrap().conclusion.bound,
                    base
                );
            }
        }
    }
}

#[test]
fn eta_replay_intermediate_fact() {
    let t = derive_eta_bound(&AnalyticCofunctor::new(3, -2, "G"), 2, 2).unwrap();
    let last_r4 = t
        .steps
        .iter()
        .rev()
        .find(|s| {
            matches!(
                s.by,
                Justification::Rule {
                    rule: Rule::PuncturedLimit { .. }
                }
            )
        })
        .unwrap();
    assert_eq!(last_r4.output.bound, 1);
}

#[test]
fn homogeneous_replay_grid() {
    for k in 1..=4u32 {
        for c in -3..=2i64 {
            for rho in 0..=5i64 {
                for m in 0..=rho {
                    for len in 1..=k as usize + 1 {
                        for list in descending_lists(len, m) {
                            let q: Vec<ExtInt> = list.iter().map(|&q| Finite(q)).collect();
                            let t = derive_homogeneous_cartesianness(k, c, rho, m, &q).unwrap();
                            t.verify().unwrap();
                            let expected = if len > k as usize {
                                PosInf
                            } else {
                                Finite(c + list.iter().map(|q| rho - q).sum::<i64>())
                            };
                            assert_eq!(t.conclusion.bound, expected, "k={k} c={c} rho={rho} m={m} q={list:?}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn homogeneous_replay_matches_analyticity() {
    // values on k balls (c - 1 + kρ)-connected give excess c
    for k in 1..=4u32 {
        for rho in 1..=5i64 {
            for c in -2..=2i64 {
                let conn = Finite(c - 1 + i64::from(k) * rho);
                let f = homogeneous_analyticity(k, conn, rho, rho).unwrap().unwrap();
                assert_eq!((f.rho, f.c), (rho, c));
                for len in 2..=k as usize {
                    for list in descending_lists(len, rho - 1) {
                        let q: Vec<ExtInt> = list.iter().map(|&q| Finite(q)).collect();
                        let t = derive_homogeneous_cartesianness(k, c, rho, rho, &q).unwrap();
                        assert_eq!(t.conclusion.bound, analytic_cube_cartesianness(&f, &q).unwrap());
                    }
                }
            }
        }
    }
}

fn bound() -> impl Strategy<Value = ExtInt> {
    prop_oneof![
        1 => Just(PosInf),
        8 => (-20i64..=20).prop_map(Finite),
    ]
}

proptest! {
    #[test]
    fn rules_are_bounded_and_monotone(a in bound(), b in bound(), bump in 0i64..=5) {
        let cart = |x| ConnFact::cartesian("x", x);
        let conn = |x| ConnFact::connected("x", x);
        let r2 = |a, b| apply_rule(Rule::SourceFromMap, &[cart(a), cart(b)], "s").unwrap().bound;
        let r3 = |a, b| apply_rule(Rule::LeftCancellation, &[cart(a), cart(b)], "g").unwrap().bound;
        let r5 = |a, b| apply_rule(Rule::Composition, &[conn(a), conn(b)], "c").unwrap().bound;

        prop_assert!(r2(a, b) <= a && r2(a, b) <= b);
        prop_assert!(r5(a, b) <= a && r5(a, b) <= b);
        prop_assert!(r3(a, b) <= a && r3(a, b) <= b + 1);

        let up = |x: ExtInt| x + bump;
        prop_assert!(r2(up(a), b) >= r2(a, b) && r2(a, up(b)) >= r2(a, b));
        prop_assert!(r3(up(a), b) >= r3(a, b) && r3(a, up(b)) >= r3(a, b));
        prop_assert!(r5(up(a), b) >= r5(a, b) && r5(a, up(b)) >= r5(a, b));
    }
}
