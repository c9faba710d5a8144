//! Extended real numbers and logarithm bases.
//!
//! Every log-based measure in this crate takes values in ℝ ∪ {+∞, −∞}, plus
//! an explicit [`ExtReal::Undefined`] for the indeterminate form ∞ − ∞.
//! Arithmetic is total: undefined absorbs everything, and opposite infinities
//! cancel to undefined.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ExtReal {
    Finite(f64),
    PosInf,
    NegInf,
    Undefined,
}

impl ExtReal {
    pub const ZERO: ExtReal = ExtReal::Finite(0.0);

    /// Maps IEEE infinities onto the matching variant and NaN onto `Undefined`.
    pub fn from_f64(x: f64) -> Self {
        if x.is_nan() {
            ExtReal::Undefined
        } else if x == f64::INFINITY {
            ExtReal::PosInf
        } else if x == f64::NEG_INFINITY {
            ExtReal::NegInf
        } else {
            ExtReal::Finite(x)
        }
    }

    /// The inverse of [`ExtReal::from_f64`]; `Undefined` becomes NaN.
    pub fn to_f64(self) -> f64 {
        match self {
            ExtReal::Finite(x) => x,
            ExtReal::PosInf => f64::INFINITY,
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Undefined => f64::NAN,
        }
    }

    pub fn finite(self) -> Option<f64> {
        match self {
            ExtReal::Finite(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, ExtReal::Finite(_))
    }

    pub fn is_undefined(self) -> bool {
        matches!(self, ExtReal::Undefined)
    }

    /// Sign of the value; `None` only for `Undefined`. Zero (of either sign)
    /// reports `Equal`.
    pub fn signum(self) -> Option<Ordering> {
        match self {
            ExtReal::Finite(x) => x.partial_cmp(&0.0),
            ExtReal::PosInf => Some(Ordering::Greater),
            ExtReal::NegInf => Some(Ordering::Less),
            ExtReal::Undefined => None,
        }
    }

    /// Multiplies by a strictly positive finite factor.
    pub(crate) fn scale(self, factor: f64) -> Self {
        debug_assert!(factor > 0.0 && factor.is_finite());
        match self {
            ExtReal::Finite(x) => ExtReal::Finite(x * factor),
            other => other,
        }
    }

    /// `log(num / den)` in nats under the convention `log(0/0) = 0`.
    pub fn log_ratio(num: f64, den: f64) -> Self {
        match (num > 0.0, den > 0.0) {
            (true, true) => ExtReal::Finite((num / den).ln()),
            (true, false) => ExtReal::PosInf,
            (false, true) => ExtReal::NegInf,
            (false, false) => ExtReal::ZERO,
        }
    }

    /// `-log(x)` in nats, `+∞` at zero.
    pub fn neg_log(x: f64) -> Self {
        if x > 0.0 {
            ExtReal::Finite(-x.ln())
        } else {
            ExtReal::PosInf
        }
    }
}

impl Default for ExtReal {
    fn default() -> Self {
        ExtReal::ZERO
    }
}

impl From<f64> for ExtReal {
    fn from(x: f64) -> Self {
        ExtReal::from_f64(x)
    }
}

impl Add for ExtReal {
    type Output = ExtReal;

    fn add(self, rhs: ExtReal) -> ExtReal {
        use ExtReal::*;
        match (self, rhs) {
            (Undefined, _) | (_, Undefined) => Undefined,
            (PosInf, NegInf) | (NegInf, PosInf) => Undefined,
            (PosInf, _) | (_, PosInf) => PosInf,
            (NegInf, _) | (_, NegInf) => NegInf,
            (Finite(a), Finite(b)) => ExtReal::from_f64(a + b),
        }
    }
}

impl Neg for ExtReal {
    type Output = ExtReal;

    fn neg(self) -> ExtReal {
        match self {
            ExtReal::Finite(x) => ExtReal::Finite(-x),
            ExtReal::PosInf => ExtReal::NegInf,
            ExtReal::NegInf => ExtReal::PosInf,
            ExtReal::Undefined => ExtReal::Undefined,
        }
    }
}

impl Sub for ExtReal {
    type Output = ExtReal;

    fn sub(self, rhs: ExtReal) -> ExtReal {
        self + (-rhs)
    }
}

impl std::iter::Sum for ExtReal {
    fn sum<I: Iterator<Item = ExtReal>>(iter: I) -> ExtReal {
        iter.fold(ExtReal::ZERO, Add::add)
    }
}

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::Finite(x) => write!(f, "{x}"),
            ExtReal::PosInf => f.write_str("+inf"),
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::Undefined => f.write_str("undefined"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseExtRealError(String);

impl fmt::Display for ParseExtRealError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "cannot parse {:?} as an extended real", self.0)
    }
}

impl std::error::Error for ParseExtRealError {}

impl FromStr for ExtReal {
    type Err = ParseExtRealError;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim() {
            "+inf" | "inf" => Ok(ExtReal::PosInf),
            "-inf" => Ok(ExtReal::NegInf),
            "undefined" => Ok(ExtReal::Undefined),
            t => match t.parse::<f64>() {
                Ok(x) if x.is_finite() => Ok(ExtReal::Finite(x)),
                _ => Err(ParseExtRealError(s.to_owned())),
            },
        }
    }
}

// Infinities go out as quoted strings so any JSON parser can read them back.
impl Serialize for ExtReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            ExtReal::Finite(x) => serializer.serialize_f64(*x),
            ExtReal::PosInf => serializer.serialize_str("+inf"),
            ExtReal::NegInf => serializer.serialize_str("-inf"),
            ExtReal::Undefined => serializer.serialize_str("undefined"),
        }
    }
}

impl<'de> Deserialize<'de> for ExtReal {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        struct ExtRealVisitor;

        impl Visitor<'_> for ExtRealVisitor {
            type Value = ExtReal;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("a number or one of \"+inf\", \"-inf\", \"undefined\"")
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<ExtReal, E> {
                Ok(ExtReal::from_f64(v))
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<ExtReal, E> {
                Ok(ExtReal::Finite(v as f64))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<ExtReal, E> {
                Ok(ExtReal::Finite(v as f64))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<ExtReal, E> {
                v.parse().map_err(E::custom)
            }
        }

        deserializer.deserialize_any(ExtRealVisitor)
    }
}

/// Base of the logarithm used when reporting a measure.
///
/// Measures are computed in nats and converted once on the way out.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogBase(f64);

impl LogBase {
    pub const BITS: LogBase = LogBase(2.0);
    pub const NATS: LogBase = LogBase(std::f64::consts::E);
    pub const DECIMAL: LogBase = LogBase(10.0);

    pub fn new(base: f64) -> Result<Self> {
        if base.is_finite() && base > 1.0 {
            Ok(LogBase(base))
        } else {
            Err(Error::InvalidBase(base))
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }

    /// Converts a quantity measured in nats into this base.
    pub fn from_nats(self, nats: ExtReal) -> ExtReal {
        nats.scale(1.0 / self.0.ln())
    }

    pub fn from_nats_f64(self, nats: f64) -> f64 {
        nats / self.0.ln()
    }

    pub fn log(self, x: f64) -> f64 {
        if self.0 == 2.0 {
            x.log2()
        } else {
            x.ln() / self.0.ln()
        }
    }
}

impl Default for LogBase {
    fn default() -> Self {
        LogBase::BITS
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == std::f64::consts::E {
            f.write_str("e")
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "e" => Ok(LogBase::NATS),
            t => {
                let base = t.parse::<f64>().map_err(|_| Error::InvalidBase(f64::NAN))?;
                LogBase::new(base)
            }
        }
    }
}

impl Serialize for LogBase {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
