//! Closed-form connectivity and Cartesian-ness estimates.
//!
//! Conventions: a map is `k`-connected when all its homotopy fibers are
//! `(k-1)`-connected, and a cube is `k`-Cartesian when its initial vertex
//! maps `k`-connectedly to the homotopy limit of the rest. A handle index of
//! `-inf` stands for a collar, which makes every estimate involving it
//! `+inf`.

use serde::Serialize;

use crate::error::{invalid, precondition, unsupported, Result};
use crate::ext::ExtInt;

/// Handle indices `q_0..q_r` of the pieces attached to a codimension-zero
/// subobject of an `n`-manifold.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HandleProfile {
    pub n: i64,
    pub q_list: Vec<ExtInt>,
}

impl HandleProfile {
    pub fn new(n: i64, q_list: Vec<ExtInt>) -> Result<HandleProfile> {
        if q_list.is_empty() {
            return Err(invalid("a handle profile needs at least one handle index"));
        }
        for q in &q_list {
            check_handle_index(*q)?;
            if let Some(q) = q.finite() {
                if n - q < 3 {
                    return Err(precondition(format!(
                        "handle index {q} violates n - q >= 3 for n = {n}"
                    )));
                }
            }
        }
        Ok(HandleProfile { n, q_list })
    }
}

/// A cofunctor that is `rho`-analytic with excess `c`: a cube obtained by
/// attaching handles of indices `q_0..q_r` (`r >= 1`) is
/// `(c + Σ (rho - q_i))`-Cartesian.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyticCofunctor {
    pub rho: i64,
    pub c: i64,
    pub label: String,
}

impl AnalyticCofunctor {
    pub fn new(rho: i64, c: i64, label: impl Into<String>) -> AnalyticCofunctor {
        AnalyticCofunctor {
            rho,
            c,
            label: label.into(),
        }
    }
}

fn check_handle_index(q: ExtInt) -> Result<()> {
    match q {
        ExtInt::PosInf => Err(invalid("a handle index cannot be +inf")),
        ExtInt::Finite(v) if v < 0 => Err(invalid(format!("handle index {v} is negative; use -inf for a collar"))),
        _ => Ok(()),
    }
}

fn check_below_rho(rho: i64, q: ExtInt) -> Result<()> {
    check_handle_index(q)?;
    if q >= rho {
        return Err(precondition(format!("handle index {q} must be below rho = {rho}")));
    }
    Ok(())
}

/// `Σ (a - q_i)`, or `+inf` if some `q_i` is `-inf`.
fn excess_sum(a: i64, q_list: &[ExtInt]) -> ExtInt {
    q_list.iter().fold(ExtInt::ZERO, |acc, q| match q.finite() {
        Some(q) => acc + (a - q),
        None => ExtInt::PosInf,
    })
}

/// Cartesian-ness `3 - n + Σ (n - q_i - 2)` of the cube of embedding spaces
/// obtained by adding `r + 1 >= 2` disjoint handles.
pub fn excision_cartesianness(p: &HandleProfile) -> Result<ExtInt> {
    if p.q_list.len() < 2 {
        return Err(invalid(
            "excision estimates need r >= 1, i.e. at least two handle indices",
        ));
    }
    HandleProfile::new(p.n, p.q_list.clone())?;
    Ok(excess_sum(p.n - 2, &p.q_list) + (3 - p.n))
}

/// `emb(-, N^n)` is `(n-2)`-analytic with excess `3 - n`.
pub fn emb_analyticity(n: u32) -> Result<AnalyticCofunctor> {
    if n < 3 {
        return Err(unsupported(format!(
            "emb(-, N^n) analyticity needs n >= 3, got n = {n}"
        )));
    }
    let n = i64::from(n);
    let label = if n == 3 {
        "emb(-, N^3) (boundary case: rho = 1, only collars and 0-handles qualify)".to_string()
    } else {
        format!("emb(-, N^{n})")
    };
    Ok(AnalyticCofunctor::new(n - 2, 3 - n, label))
}

/// `c + Σ (rho - q_i)` for handles of indices `q_i < rho`.
pub fn analytic_cube_cartesianness(f: &AnalyticCofunctor, q_list: &[ExtInt]) -> Result<ExtInt> {
    if q_list.len() < 2 {
        return Err(invalid("analytic cubes need r >= 1, i.e. at least two handle indices"));
    }
    for q in q_list {
        check_below_rho(f.rho, *q)?;
    }
    Ok(excess_sum(f.rho, q_list) + f.c)
}

/// Connectivity `c + (j+1)(rho - q)` of `η_j : G(W) → T_j G(W)` when `W`
/// has a handle structure with indices at most `q < rho`. Only `j >= 1` is
/// covered.
pub fn eta_connectivity(f: &AnalyticCofunctor, q: ExtInt, j: u32) -> Result<ExtInt> {
    if j == 0 {
        return Err(invalid("η_j estimates are only available for j >= 1"));
    }
    check_below_rho(f.rho, q)?;
    Ok(match q.finite() {
        Some(q) => ExtInt::Finite(f.c + (i64::from(j) + 1) * (f.rho - q)),
        None => ExtInt::PosInf,
    })
}

/// Connectivity `k(n - 2 - q) - q + 1` of `η_k` for `G = emb(-, N^n)`.
pub fn emb_eta_connectivity(n: u32, q: ExtInt, k: u32) -> Result<ExtInt> {
    if k == 0 {
        return Err(invalid("η_k estimates are only available for k >= 1"));
    }
    if n < 3 {
        return Err(unsupported(format!("needs n >= 3, got n = {n}")));
    }
    let n = i64::from(n);
    check_below_rho(n - 2, q)?;
    Ok(match q.finite() {
        Some(q) => ExtInt::Finite(i64::from(k) * (n - 2 - q) - q + 1),
        None => ExtInt::PosInf,
    })
}

/// Whether the tower converges on `W` with handle indices at most `q`.
pub fn converges(f: &AnalyticCofunctor, q: ExtInt) -> bool {
    q < f.rho
}

/// Convergence on every `W` in an `m`-manifold: `rho > m`.
pub fn converges_everywhere(f: &AnalyticCofunctor, m: i64) -> bool {
    f.rho > m
}

/// Convergence of the tower for `emb(W, N^n)` with `W` open in `M^m`.
///
/// `no_compact_component` is only consulted in the borderline case
/// `m = n - 2`; `max_index`, when known, is the largest index of a critical
/// point of a proper Morse function on `W`. The flags are taken on trust.
pub fn emb_converges(m: i64, n: i64, no_compact_component: bool, max_index: Option<ExtInt>) -> bool {
    m < n - 2 || (m == n - 2 && no_compact_component) || max_index.is_some_and(|q| q < n - 2)
}

/// A natural transformation between two `rho`-analytic cofunctors that is an
/// equivalence on tubular neighborhoods of finite sets is an equivalence on
/// every `W` whose handle indices are below `rho`.
pub fn transformation_is_equivalence(rho: i64, equivalence_on_finite_sets: bool, max_index: ExtInt) -> bool {
    equivalence_on_finite_sets && max_index < rho
}

/// Connectivity `c + k(rho - q)` of `r_k : T_k G → T_{k-1} G`.
pub fn layer_map_connectivity(f: &AnalyticCofunctor, q: ExtInt, k: u32) -> Result<ExtInt> {
    check_below_rho(f.rho, q)?;
    Ok(match q.finite() {
        _ if k == 0 => ExtInt::Finite(f.c),
        Some(q) => ExtInt::Finite(f.c + i64::from(k) * (f.rho - q)),
        None => ExtInt::PosInf,
    })
}

/// The excess certified for a cofunctor homogeneous of degree `k` whose
/// values on configurations of `k` balls are `conn_on_ok`-connected: `c`
/// with `c - 1 + k rho = conn_on_ok`. `None` unless `rho >= m`.
pub fn homogeneous_analyticity(k: u32, conn_on_ok: ExtInt, rho: i64, m: i64) -> Result<Option<AnalyticCofunctor>> {
    if rho < m {
        return Ok(None);
    }
    let Some(conn) = conn_on_ok.finite() else {
        return Err(invalid(format!(
            "connectivity {conn_on_ok} does not determine a finite excess"
        )));
    };
    Ok(Some(AnalyticCofunctor::new(
        rho,
        conn + 1 - i64::from(k) * rho,
        format!("homogeneous of degree {k}"),
    )))
}

/// Haefliger's metastable range for embeddings `M^m → N^n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Metastable {
    pub square_1_cartesian: bool,
    /// Connectivity of `emb(M, N) → T_2 emb(M, N)`.
    pub s: i64,
}

pub fn haefliger_metastable(m: i64, n: i64) -> Result<Metastable> {
    if m > n {
        return Err(invalid(format!("needs m <= n, got m = {m}, n = {n}")));
    }
    if m < 0 {
        return Err(invalid(format!("dimension m = {m} is negative")));
    }
    Ok(Metastable {
        square_1_cartesian: 2 * n > 3 * (m + 1) && n >= 3,
        s: 2 * n - 3 * (m + 1),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtInt::{Finite, NegInf, PosInf};

    fn qs(v: &[i64]) -> Vec<ExtInt> {
        v.iter().map(|&q| Finite(q)).collect()
    }

    #[test]
    fn excision() {
        let p = HandleProfile::new(6, qs(&[0, 0])).unwrap();
        assert_eq!(excision_cartesianness(&p).unwrap(), 5);
        let p = HandleProfile::new(5, qs(&[1, 2])).unwrap();
        assert_eq!(excision_cartesianness(&p).unwrap(), 1);
        let p = HandleProfile::new(6, vec![NegInf, Finite(0)]).unwrap();
        assert_eq!(excision_cartesianness(&p).unwrap(), PosInf);
    }

    #[test]
    fn excision_errors() {
        let single = HandleProfile::new(6, qs(&[0])).unwrap();
        assert!(matches!(
            excision_cartesianness(&single),
            Err(crate::Error::InvalidArgument(_))
        ));
        assert!(matches!(
            HandleProfile::new(5, qs(&[0, 3])),
            Err(crate::Error::PreconditionViolation(_))
        ));
        // a -inf entry does not excuse an invalid finite one
        assert!(HandleProfile::new(5, vec![NegInf, Finite(3)]).is_err());
    }

    #[test]
    fn emb_is_analytic() {
        let f = emb_analyticity(6).unwrap();
        assert_eq!((f.rho, f.c), (4, -3));
        let f = emb_analyticity(5).unwrap();
        assert_eq!((f.rho, f.c), (3, -2));
        let f = emb_analyticity(3).unwrap();
        assert_eq!((f.rho, f.c), (1, 0));
        assert!(f.label.contains("boundary"));
        assert!(matches!(emb_analyticity(2), Err(crate::Error::UnsupportedRange(_))));
    }

    #[test]
    fn analytic_cubes() {
        let f = AnalyticCofunctor::new(4, -3, "G");
        assert_eq!(analytic_cube_cartesianness(&f, &qs(&[0, 0])).unwrap(), 5);
        assert_eq!(analytic_cube_cartesianness(&f, &qs(&[1, 1, 1])).unwrap(), 6);
        let g = AnalyticCofunctor::new(2, 0, "G");
        assert_eq!(analytic_cube_cartesianness(&g, &[NegInf, Finite(0)]).unwrap(), PosInf);
        assert!(matches!(
            analytic_cube_cartesianness(&f, &qs(&[4, 0])),
            Err(crate::Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn eta() {
        let f = AnalyticCofunctor::new(4, -3, "G");
        assert_eq!(eta_connectivity(&f, Finite(1), 1).unwrap(), 3);
        assert_eq!(eta_connectivity(&f, Finite(1), 2).unwrap(), 6);
        let g = AnalyticCofunctor::new(3, -2, "G");
        assert_eq!(eta_connectivity(&g, NegInf, 5).unwrap(), PosInf);
        assert!(eta_connectivity(&f, Finite(1), 0).is_err());
        assert!(matches!(
            eta_connectivity(&f, Finite(4), 1),
            Err(crate::Error::PreconditionViolation(_))
        ));
    }

    #[test]
    fn emb_eta() {
        assert_eq!(emb_eta_connectivity(6, Finite(1), 1).unwrap(), 3);
        assert_eq!(emb_eta_connectivity(4, Finite(1), 2).unwrap(), 2);
        assert!(matches!(
            emb_eta_connectivity(4, Finite(2), 2),
            Err(crate::Error::PreconditionViolation(_))
        ));
        for (n, q, k) in [(6, 1, 1), (4, 1, 2), (9, 3, 7)] {
            assert_eq!(
                emb_eta_connectivity(n, Finite(q), k).unwrap(),
                eta_connectivity(&emb_analyticity(n).unwrap(), Finite(q), k).unwrap()
            );
        }
    }

    #[test]
    fn convergence() {
        let f = AnalyticCofunctor::new(4, -3, "G");
        assert!(converges(&f, Finite(1)));
        assert!(!converges(&f, Finite(4)));
        assert!(converges(&AnalyticCofunctor::new(0, 5, "G"), NegInf));
        assert!(converges_everywhere(&f, 3));
        assert!(!converges_everywhere(&f, 4));
        assert!(emb_converges(1, 4, false, None));
        assert!(!emb_converges(2, 4, false, None));
        assert!(emb_converges(2, 4, true, None));
        assert!(emb_converges(2, 4, false, Some(Finite(1))));
        assert!(transformation_is_equivalence(3, true, Finite(2)));
        assert!(!transformation_is_equivalence(3, false, Finite(2)));
        assert!(!transformation_is_equivalence(3, true, Finite(3)));
    }

    #[test]
    fn layer_maps() {
        let f = AnalyticCofunctor::new(4, -3, "G");
        assert_eq!(layer_map_connectivity(&f, Finite(1), 2).unwrap(), 3);
        assert_eq!(layer_map_connectivity(&f, Finite(1), 0).unwrap(), -3);
        let g = AnalyticCofunctor::new(3, -2, "G");
        assert_eq!(layer_map_connectivity(&g, Finite(0), 3).unwrap(), 7);
        assert_eq!(layer_map_connectivity(&g, NegInf, 0).unwrap(), -2);
        assert_eq!(layer_map_connectivity(&g, NegInf, 2).unwrap(), PosInf);
    }

    #[test]
    fn homogeneous() {
        let f = homogeneous_analyticity(2, Finite(7), 4, 3).unwrap().unwrap();
        assert_eq!((f.rho, f.c), (4, 0));
        let f = homogeneous_analyticity(0, Finite(-1), 5, 1).unwrap().unwrap();
        assert_eq!(f.c, 0);
        assert_eq!(homogeneous_analyticity(2, Finite(7), 2, 3).unwrap(), None);
        assert!(homogeneous_analyticity(2, PosInf, 4, 3).is_err());
    }

    #[test]
    fn haefliger() {
        assert_eq!(
            haefliger_metastable(1, 4).unwrap(),
            Metastable {
                square_1_cartesian: true,
                s: 2
            }
        );
        assert_eq!(
            haefliger_metastable(2, 5).unwrap(),
            Metastable {
                square_1_cartesian: true,
                s: 1
            }
        );
        assert_eq!(
            haefliger_metastable(3, 5).unwrap(),
            Metastable {
                square_1_cartesian: false,
                s: -2
            }
        );
        assert!(haefliger_metastable(5, 3).is_err());
    }
}
