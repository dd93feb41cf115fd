use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{invalid, Result};
use crate::ext::ExtInt;

/// A formal pointed homotopy type.
///
/// Only connectivity and formal shape are tracked; a [`SpaceExpr::GenericCw`]
/// is a named space about which nothing but its connectivity is known.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SpaceExpr {
    Point,
    Sphere(u32),
    GenericCw { name: String, connectivity: ExtInt },
    Loop { count: u32, inner: Box<SpaceExpr> },
    Susp { count: u32, inner: Box<SpaceExpr> },
    Smash(Vec<SpaceExpr>),
    SmashPower { base: Box<SpaceExpr>, power: u32 },
    Wedge(Vec<SpaceExpr>),
    WeakProd(Vec<SpaceExpr>),
}

impl SpaceExpr {
    pub fn sphere(dim: u32) -> SpaceExpr {
        SpaceExpr::Sphere(dim)
    }

    pub fn generic(name: impl Into<String>, connectivity: ExtInt) -> Result<SpaceExpr> {
        if connectivity < 0 {
            return Err(invalid(format!(
                "generic CW space must be connected, got connectivity {connectivity}"
            )));
        }
        Ok(SpaceExpr::GenericCw {
            name: name.into(),
            connectivity,
        })
    }

    pub fn loops(count: u32, inner: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Loop {
            count,
            inner: Box::new(inner),
        }
    }

    pub fn susp(count: u32, inner: SpaceExpr) -> SpaceExpr {
        SpaceExpr::Susp {
            count,
            inner: Box::new(inner),
        }
    }

    pub fn smash(factors: Vec<SpaceExpr>) -> Result<SpaceExpr> {
        if factors.is_empty() {
            return Err(invalid("a smash product needs at least one factor"));
        }
        Ok(SpaceExpr::Smash(factors))
    }

    pub fn smash_power(base: SpaceExpr, power: u32) -> SpaceExpr {
        SpaceExpr::SmashPower {
            base: Box::new(base),
            power,
        }
    }

    /// Checks the structural invariants recursively.
    pub fn validate(&self) -> Result<()> {
        match self {
            SpaceExpr::Point | SpaceExpr::Sphere(_) => Ok(()),
            SpaceExpr::GenericCw { name, connectivity } => {
                if *connectivity < 0 {
                    Err(invalid(format!("{name} must be connected")))
                } else {
                    Ok(())
                }
            }
            SpaceExpr::Loop { inner, .. } | SpaceExpr::Susp { inner, .. } => inner.validate(),
            SpaceExpr::SmashPower { base, .. } => base.validate(),
            SpaceExpr::Smash(fs) if fs.is_empty() => Err(invalid("empty smash product")),
            SpaceExpr::Smash(fs) | SpaceExpr::Wedge(fs) | SpaceExpr::WeakProd(fs) => {
                fs.iter().try_for_each(SpaceExpr::validate)
            }
        }
    }

    /// Connectivity: the largest `c` with `π_i = 0` for `i ≤ c`.
    ///
    /// A point is `+inf`-connected; `S^d` is `(d-1)`-connected; suspension
    /// adds, looping subtracts; a smash of `a`- and `b`-connected spaces is
    /// `(a+b+1)`-connected; wedges and products take the minimum.
    pub fn connectivity(&self) -> ExtInt {
        match self {
            SpaceExpr::Point => ExtInt::PosInf,
            SpaceExpr::Sphere(d) => ExtInt::Finite(i64::from(*d) - 1),
            SpaceExpr::GenericCw { connectivity, .. } => *connectivity,
            SpaceExpr::Loop { count, inner } => inner.connectivity() - i64::from(*count),
            SpaceExpr::Susp { count, inner } => inner.connectivity() + i64::from(*count),
            SpaceExpr::Smash(fs) => {
                let mut total = ExtInt::Finite(fs.len() as i64 - 1);
                for f in fs {
                    total = total + f.connectivity();
                }
                total
            }
            SpaceExpr::SmashPower { base, power } => {
                if *power == 0 {
                    ExtInt::Finite(-1)
                } else {
                    base.connectivity().scale(i64::from(*power)) + (i64::from(*power) - 1)
                }
            }
            SpaceExpr::Wedge(fs) | SpaceExpr::WeakProd(fs) => {
                fs.iter().map(SpaceExpr::connectivity).min().unwrap_or(ExtInt::PosInf)
            }
        }
    }

    pub fn is_connected(&self) -> bool {
        self.connectivity() >= 0
    }

    pub fn is_point(&self) -> bool {
        matches!(self, SpaceExpr::Point)
    }

    /// Canonical form up to the homotopy equivalences the crate relies on:
    /// iterated loops and suspensions merge, `Σ^b S^d = S^{d+b}`, smash
    /// products absorb spheres into a suspension and collect equal factors
    /// into smash powers, `Y^(0) = S^0`, and a point is dropped from wedges
    /// and products and absorbs smash products, loops and suspensions.
    pub fn normalize(&self) -> SpaceExpr {
        match self {
            SpaceExpr::Point | SpaceExpr::Sphere(_) => self.clone(),
            SpaceExpr::GenericCw { connectivity, .. } => {
                if *connectivity == ExtInt::PosInf {
                    SpaceExpr::Point
                } else {
                    self.clone()
                }
            }
            SpaceExpr::Loop { count, inner } => match inner.normalize() {
                x if *count == 0 => x,
                SpaceExpr::Point => SpaceExpr::Point,
                SpaceExpr::Loop { count: c, inner } => SpaceExpr::Loop {
                    count: count + c,
                    inner,
                },
                x => SpaceExpr::loops(*count, x),
            },
            SpaceExpr::Susp { count, inner } => suspend(*count, inner.normalize()),
            SpaceExpr::Smash(fs) => normalize_smash(fs.iter().map(|f| (f, 1))),
            SpaceExpr::SmashPower { base, power } => {
                if *power == 0 {
                    SpaceExpr::Sphere(0)
                } else {
                    normalize_smash(std::iter::once((base.as_ref(), *power)))
                }
            }
            SpaceExpr::Wedge(fs) => normalize_sum(fs, SpaceExpr::Wedge, |x| match x {
                SpaceExpr::Wedge(v) => Some(v),
                _ => None,
            }),
            SpaceExpr::WeakProd(fs) => normalize_sum(fs, SpaceExpr::WeakProd, |x| match x {
                SpaceExpr::WeakProd(v) => Some(v),
                _ => None,
            }),
        }
    }

    fn is_atomic(&self) -> bool {
        matches!(
            self,
            SpaceExpr::Point | SpaceExpr::Sphere(_) | SpaceExpr::GenericCw { .. } | SpaceExpr::SmashPower { .. }
        )
    }
}

/// `Σ^count` of an already normalized expression.
fn suspend(count: u32, x: SpaceExpr) -> SpaceExpr {
    match x {
        x if count == 0 => x,
        SpaceExpr::Point => SpaceExpr::Point,
        SpaceExpr::Sphere(d) => SpaceExpr::Sphere(d + count),
        SpaceExpr::Susp { count: c, inner } => SpaceExpr::Susp {
            count: count + c,
            inner,
        },
        x => SpaceExpr::susp(count, x),
    }
}

fn normalize_smash<'a>(factors: impl Iterator<Item = (&'a SpaceExpr, u32)>) -> SpaceExpr {
    let mut sphere_dim = 0u32;
    let mut bases: BTreeMap<SpaceExpr, u32> = BTreeMap::new();

    fn absorb(x: SpaceExpr, mult: u32, sphere_dim: &mut u32, bases: &mut BTreeMap<SpaceExpr, u32>) -> bool {
        match x {
            SpaceExpr::Point => return false,
            SpaceExpr::Sphere(d) => *sphere_dim += d * mult,
            SpaceExpr::Susp { count, inner } => {
                *sphere_dim += count * mult;
                return absorb(*inner, mult, sphere_dim, bases);
            }
            SpaceExpr::SmashPower { base, power } => *bases.entry(*base).or_default() += power * mult,
            SpaceExpr::Smash(fs) => {
                for f in fs {
                    if !absorb(f, mult, sphere_dim, bases) {
                        return false;
                    }
                }
            }
            other => *bases.entry(other).or_default() += mult,
        }
        true
    }

    for (f, mult) in factors {
        if !absorb(f.normalize(), mult, &mut sphere_dim, &mut bases) {
            return SpaceExpr::Point;
        }
    }
    let mut parts: Vec<SpaceExpr> = bases
        .into_iter()
        .map(|(b, m)| if m == 1 { b } else { SpaceExpr::smash_power(b, m) })
        .collect();
    let core = match parts.len() {
        0 => return SpaceExpr::Sphere(sphere_dim),
        1 => parts.pop().expect("one part"),
        _ => SpaceExpr::Smash(parts),
    };
    suspend(sphere_dim, core)
}

fn normalize_sum(
    fs: &[SpaceExpr],
    wrap: fn(Vec<SpaceExpr>) -> SpaceExpr,
    unwrap: fn(SpaceExpr) -> Option<Vec<SpaceExpr>>,
) -> SpaceExpr {
    let mut out = Vec::new();
    for f in fs {
        let x = f.normalize();
        if x.is_point() {
            continue;
        }
        let probe = x.clone();
        match unwrap(probe) {
            Some(inner) => out.extend(inner),
            None => out.push(x),
        }
    }
    out.sort();
    match out.len() {
        0 => SpaceExpr::Point,
        1 => out.pop().expect("one summand"),
        _ => wrap(out),
    }
}

struct Paren<'a>(&'a SpaceExpr);

impl fmt::Display for Paren<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_atomic() {
            write!(f, "{}", self.0)
        } else {
            write!(f, "({})", self.0)
        }
    }
}

fn join(f: &mut fmt::Formatter<'_>, items: &[SpaceExpr], sep: &str) -> fmt::Result {
    for (i, x) in items.iter().enumerate() {
        if i > 0 {
            f.write_str(sep)?;
        }
        write!(f, "{}", Paren(x))?;
    }
    Ok(())
}

fn power(f: &mut fmt::Formatter<'_>, symbol: &str, count: u32) -> fmt::Result {
    if count == 1 {
        f.write_str(symbol)
    } else {
        write!(f, "{symbol}^{count} ")
    }
}

impl fmt::Display for SpaceExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceExpr::Point => f.write_str("*"),
            SpaceExpr::Sphere(d) => write!(f, "S^{d}"),
            SpaceExpr::GenericCw { name, .. } => f.write_str(name),
            SpaceExpr::Loop { count, inner } => {
                power(f, "Ω", *count)?;
                write!(f, "{}", Paren(inner))
            }
            SpaceExpr::Susp { count, inner } => {
                power(f, "Σ", *count)?;
                write!(f, "{}", Paren(inner))
            }
            SpaceExpr::Smash(fs) => join(f, fs, " ∧ "),
            SpaceExpr::SmashPower { base, power } => write!(f, "{}^({power})", Paren(base)),
            SpaceExpr::Wedge(fs) if fs.is_empty() => f.write_str("*"),
            SpaceExpr::Wedge(fs) => join(f, fs, " ∨ "),
            SpaceExpr::WeakProd(fs) if fs.is_empty() => f.write_str("*"),
            SpaceExpr::WeakProd(fs) => {
                f.write_str("Π' ")?;
                join(f, fs, " × ")
            }
        }
    }
}
