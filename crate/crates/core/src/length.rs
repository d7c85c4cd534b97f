//! Hilbert lengths kept exact whenever the inputs allow it.

use std::cmp::Ordering;
use std::fmt;

use num::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{GeomError, GeomResult};
use crate::rat::{fmt_rat, parse_rat, rat_to_f64, Rat};

/// A nonnegative Hilbert length `H`.
///
/// The exact variant stores `q = exp(2H) >= 1` as a rational, which is closed
/// under cross ratios of rational points. Lengths add by multiplying `q` and
/// compare without ever taking a logarithm; floats only appear on display or
/// when mixed with the float variant.
#[derive(Clone, Debug)]
pub enum HilbertLength {
    Exact { q: Rat },
    Float(f64),
}

impl HilbertLength {
    pub fn zero() -> Self {
        HilbertLength::Exact { q: Rat::one() }
    }

    /// Builds from `q = exp(2H)`. Values in `(0, 1)` are inverted, so the
    /// result does not depend on the orientation of the underlying chord.
    pub fn from_q(q: Rat) -> GeomResult<Self> {
        if q <= Rat::zero() {
            return Err(GeomError::OutOfRange(format!(
                "cross ratio q = {} must be positive",
                fmt_rat(&q)
            )));
        }
        let q = if q < Rat::one() { q.recip() } else { q };
        Ok(HilbertLength::Exact { q })
    }

    pub fn from_f64(h: f64) -> GeomResult<Self> {
        if !h.is_finite() || h < 0.0 {
            return Err(GeomError::OutOfRange(format!(
                "length {h} must be finite and nonnegative"
            )));
        }
        Ok(HilbertLength::Float(h))
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, HilbertLength::Exact { .. })
    }

    pub fn q(&self) -> Option<&Rat> {
        match self {
            HilbertLength::Exact { q } => Some(q),
            HilbertLength::Float(_) => None,
        }
    }

    /// The length `H` as a float: `H = log(q) / 2` in the exact case.
    pub fn as_f64(&self) -> f64 {
        match self {
            HilbertLength::Exact { q } => 0.5 * rat_to_f64(q).ln(),
            HilbertLength::Float(h) => *h,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            HilbertLength::Exact { q } => q.is_one(),
            HilbertLength::Float(h) => *h == 0.0,
        }
    }

    /// Length addition; exact when both operands are exact.
    pub fn add(&self, other: &HilbertLength) -> HilbertLength {
        match (self, other) {
            (HilbertLength::Exact { q: a }, HilbertLength::Exact { q: b }) => {
                HilbertLength::Exact { q: a * b }
            }
            _ => HilbertLength::Float(self.as_f64() + other.as_f64()),
        }
    }

    /// Multiplies the length by a nonnegative integer (`q` is raised to `n`).
    pub fn times(&self, n: u32) -> HilbertLength {
        match self {
            HilbertLength::Exact { q } => HilbertLength::Exact { q: q.pow(n as i32) },
            HilbertLength::Float(h) => HilbertLength::Float(h * n as f64),
        }
    }

    pub fn double(&self) -> HilbertLength {
        self.times(2)
    }
}

impl PartialEq for HilbertLength {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (HilbertLength::Exact { q: a }, HilbertLength::Exact { q: b }) => a == b,
            _ => self.as_f64() == other.as_f64(),
        }
    }
}

impl PartialOrd for HilbertLength {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (HilbertLength::Exact { q: a }, HilbertLength::Exact { q: b }) => a.partial_cmp(b),
            _ => self.as_f64().partial_cmp(&other.as_f64()),
        }
    }
}

impl fmt::Display for HilbertLength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HilbertLength::Exact { q } => write!(f, "{:.12} (q = {})", self.as_f64(), fmt_rat(q)),
            HilbertLength::Float(h) => write!(f, "{h:.12} (float)"),
        }
    }
}

impl Serialize for HilbertLength {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        #[serde(tag = "mode")]
        enum Wire {
            #[serde(rename = "exact")]
            Exact { q: String, h: f64 },
            #[serde(rename = "float")]
            Float { h: f64 },
        }
        let wire = match self {
            HilbertLength::Exact { q } => Wire::Exact { q: fmt_rat(q), h: self.as_f64() },
            HilbertLength::Float(h) => Wire::Float { h: *h },
        };
        wire.serialize(s)
    }
}

impl<'de> Deserialize<'de> for HilbertLength {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(tag = "mode")]
        enum Wire {
            #[serde(rename = "exact")]
            Exact { q: String },
            #[serde(rename = "float")]
            Float { h: f64 },
        }
        match Wire::deserialize(d)? {
            Wire::Exact { q } => {
                let q = parse_rat(&q).map_err(|e| D::Error::custom(e.to_string()))?;
                HilbertLength::from_q(q).map_err(|e| D::Error::custom(e.to_string()))
            }
            Wire::Float { h } => {
                HilbertLength::from_f64(h).map_err(|e| D::Error::custom(e.to_string()))
            }
        }
    }
}
