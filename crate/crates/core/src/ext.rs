//! Integers extended by `-inf` and `+inf`.
//!
//! Handle indices use `-inf` for a collar; connectivity and Cartesian-ness
//! bounds use `+inf` for contractible spaces and homotopy equivalences.

use std::fmt;
use std::ops::{Add, Sub};
use std::str::FromStr;

use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{invalid, Error};

/// An element of `{-inf} ∪ Z ∪ {+inf}`, totally ordered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtInt {
    NegInf,
    Finite(i64),
    PosInf,
}

impl ExtInt {
    pub const ZERO: ExtInt = ExtInt::Finite(0);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtInt::Finite(_))
    }

    pub fn finite(self) -> Option<i64> {
        match self {
            ExtInt::Finite(v) => Some(v),
            _ => None,
        }
    }

    /// Sum, or `None` for `(-inf) + (+inf)` and for `i64` overflow.
    pub fn checked_add(self, rhs: ExtInt) -> Option<ExtInt> {
        use ExtInt::*;
        match (self, rhs) {
            (NegInf, PosInf) | (PosInf, NegInf) => None,
            (PosInf, _) | (_, PosInf) => Some(PosInf),
            (NegInf, _) | (_, NegInf) => Some(NegInf),
            (Finite(a), Finite(b)) => a.checked_add(b).map(Finite),
        }
    }

    /// `factor * self`; infinities keep their sign for positive factors and
    /// flip for negative ones, and `0 * x = 0`.
    pub fn scale(self, factor: i64) -> ExtInt {
        use ExtInt::*;
        match (self, factor.signum()) {
            (_, 0) => Finite(0),
            (Finite(v), _) => Finite(v.checked_mul(factor).expect("extended integer overflow")),
            (PosInf, 1) | (NegInf, -1) => PosInf,
            _ => NegInf,
        }
    }
}

impl From<i64> for ExtInt {
    fn from(v: i64) -> Self {
        ExtInt::Finite(v)
    }
}

impl Add for ExtInt {
    type Output = ExtInt;

    /// Panics on `(-inf) + (+inf)`; use [`ExtInt::checked_add`] when either
    /// operand may be an infinity of the opposite sign.
    fn add(self, rhs: ExtInt) -> ExtInt {
        self.checked_add(rhs)
            .unwrap_or_else(|| panic!("undefined extended sum {self} + {rhs}"))
    }
}

impl Add<i64> for ExtInt {
    type Output = ExtInt;

    fn add(self, rhs: i64) -> ExtInt {
        self + ExtInt::Finite(rhs)
    }
}

impl Sub<i64> for ExtInt {
    type Output = ExtInt;

    fn sub(self, rhs: i64) -> ExtInt {
        self + ExtInt::Finite(-rhs)
    }
}

impl PartialEq<i64> for ExtInt {
    fn eq(&self, other: &i64) -> bool {
        *self == ExtInt::Finite(*other)
    }
}

impl PartialOrd<i64> for ExtInt {
    fn partial_cmp(&self, other: &i64) -> Option<std::cmp::Ordering> {
        self.partial_cmp(&ExtInt::Finite(*other))
    }
}

impl fmt::Display for ExtInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtInt::NegInf => f.write_str("-inf"),
            ExtInt::Finite(v) => write!(f, "{v}"),
            ExtInt::PosInf => f.write_str("inf"),
        }
    }
}

impl FromStr for ExtInt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "inf" | "+inf" | "∞" | "+∞" => Ok(ExtInt::PosInf),
            "-inf" | "-∞" | "−∞" => Ok(ExtInt::NegInf),
            t => t
                .parse::<i64>()
                .map(ExtInt::Finite)
                .map_err(|_| invalid(format!("not an extended integer: {s:?}"))),
        }
    }
}

// Finite values serialize as JSON integers, infinities as "inf" / "-inf".
impl Serialize for ExtInt {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            ExtInt::Finite(v) => serializer.serialize_i64(*v),
            ExtInt::PosInf => serializer.serialize_str("inf"),
            ExtInt::NegInf => serializer.serialize_str("-inf"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtInt {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct Visitor;

        impl de::Visitor<'_> for Visitor {
            type Value = ExtInt;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer, \"inf\" or \"-inf\"")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> Result<ExtInt, E> {
                Ok(ExtInt::Finite(v))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> Result<ExtInt, E> {
                i64::try_from(v)
                    .map(ExtInt::Finite)
                    .map_err(|_| E::custom("integer out of range"))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> Result<ExtInt, E> {
                match v {
                    "inf" => Ok(ExtInt::PosInf),
                    "-inf" => Ok(ExtInt::NegInf),
                    _ => Err(E::custom(format!("unexpected string {v:?}"))),
                }
            }
        }

        deserializer.deserialize_any(Visitor)
    }
}
