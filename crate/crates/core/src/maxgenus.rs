//! Maximum genus `G(d, s)` of smooth connected space curves of degree `d`
//! lying on no surface of degree `s − 1`.
//!
//! Closed forms are known in the C-range `d > s(s − 1)` and in the extended
//! range `s(s − 1) ≥ d ≥ s² − 2s + 2`. Below that only a handful of
//! tabulated values are carried, tagged as conjectural.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Regime {
    CRange,
    ExtendedCRange,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum MaxGenusAnswer {
    Exact {
        #[serde(with = "crate::jsonint")]
        value: i128,
        regime: Regime,
    },
    Conjectural {
        #[serde(with = "crate::jsonint")]
        value: i128,
        source: String,
    },
    OutOfRange {
        reason: String,
    },
}

impl MaxGenusAnswer {
    pub fn exact(&self) -> Option<i128> {
        match self {
            MaxGenusAnswer::Exact { value, .. } => Some(*value),
            _ => None,
        }
    }

    /// Exact or conjectural value.
    pub fn value(&self) -> Option<i128> {
        match self {
            MaxGenusAnswer::Exact { value, .. } | MaxGenusAnswer::Conjectural { value, .. } => {
                Some(*value)
            }
            MaxGenusAnswer::OutOfRange { .. } => None,
        }
    }
}

impl fmt::Display for MaxGenusAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MaxGenusAnswer::Exact { value, regime } => write!(f, "Exact({value}, {regime:?})"),
            MaxGenusAnswer::Conjectural { value, source } => {
                write!(f, "Conjectural({value}; {source})")
            }
            MaxGenusAnswer::OutOfRange { reason } => write!(f, "OutOfRange({reason})"),
        }
    }
}

/// Tabulated maximum-genus values in the B-range, keyed by `(d, s)`.
const B_RANGE_TABLE: &[(i128, i128, i128, &str)] = &[
    (
        22,
        6,
        55,
        "B-range value, agrees with Hartshorne's conjectured maximum",
    ),
    (
        32,
        7,
        111,
        "B-range value from A(7,7)=33, A(7,6)=28, B(7,6)=31",
    ),
];

/// Reference values of the numerical-character bounds `A(k,f)` and `B(k,f)`.
const AB_TABLE: &[(&str, i128)] = &[
    ("A(7,7)", 33),
    ("A(7,6)", 28),
    ("B(7,6)", 31),
    ("A(6,5)", 23),
];

/// `r` with `d + r ≡ 0 (mod s)`, `0 ≤ r < s`.
pub fn residue(d: i128, s: i128) -> i128 {
    (-d).rem_euclid(s)
}

/// Numerator of the C-range formula scaled by `2s`:
/// `d² + ds(s − 4) − r(s − r)(s − 1)`.
pub fn c_range_numerator(d: i128, s: i128) -> i128 {
    let r = residue(d, s);
    d * d + d * s * (s - 4) - r * (s - r) * (s - 1)
}

fn c_range(d: i128, s: i128) -> Result<i128> {
    let numerator = c_range_numerator(d, s);
    let divisor = 2 * s;
    if numerator % divisor != 0 {
        return Err(Error::NonIntegerG { numerator, divisor });
    }
    Ok(numerator / divisor + 1)
}

fn extended_range(d: i128, s: i128) -> Result<Option<i128>> {
    let mu = d - (s * s - 2 * s + 3);
    if mu == -1 {
        return Ok(Some(1 + d * (s - 3)));
    }
    if (0..=s - 3).contains(&mu) {
        let numerator = mu * (mu + 2 * s - 3);
        if numerator % 2 != 0 {
            return Err(Error::NonIntegerG {
                numerator,
                divisor: 2,
            });
        }
        return Ok(Some(s * s * s - 5 * s * s + 9 * s - 6 + numerator / 2));
    }
    Ok(None)
}

pub fn max_genus(d: i128, s: i128) -> Result<MaxGenusAnswer> {
    if d < 1 || s < 2 {
        return Err(Error::Precondition(format!(
            "max_genus needs d >= 1 and s >= 2, got d={d}, s={s}"
        )));
    }
    if d > s * (s - 1) {
        return Ok(MaxGenusAnswer::Exact {
            value: c_range(d, s)?,
            regime: Regime::CRange,
        });
    }
    if d >= s * s - 2 * s + 2 {
        if let Some(value) = extended_range(d, s)? {
            return Ok(MaxGenusAnswer::Exact {
                value,
                regime: Regime::ExtendedCRange,
            });
        }
    }
    if let Some(&(_, _, value, source)) = B_RANGE_TABLE.iter().find(|e| e.0 == d && e.1 == s) {
        return Ok(MaxGenusAnswer::Conjectural {
            value,
            source: source.to_string(),
        });
    }
    Ok(MaxGenusAnswer::OutOfRange {
        reason: format!(
            "d={d} is below s^2-2s+2={} and no tabulated value exists",
            s * s - 2 * s + 2
        ),
    })
}

/// Look up a tabulated `A(k,f)` / `B(k,f)` value, e.g. `"A(7,6)"`.
pub fn fixture_ab(key: &str) -> Result<i128> {
    let normalized: String = key.chars().filter(|c| !c.is_whitespace()).collect();
    AB_TABLE
        .iter()
        .find(|(k, _)| *k == normalized)
        .map(|(_, v)| *v)
        .ok_or_else(|| Error::UnknownFixture(key.to_string()))
}
