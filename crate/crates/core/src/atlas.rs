//! Deterministic newline-delimited JSON atlases over parameter grids.

use std::io::{self, Write};
use std::ops::RangeInclusive;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify, FamilyReport, PICARD_ASSUMPTION};
use crate::cubic::{cubic_verdict, RangeVerdict};
use crate::error::{Error, Result};

pub const DEFAULT_CAP: u128 = 10_000_000;

pub const CUBIC_ASSUMPTION: &str =
    "S is a smooth cubic surface; classes are 7-tuples over six blown-up points";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub artifact_version: String,
    pub assumptions: Vec<String>,
}

impl Provenance {
    fn with(assumption: &str) -> Self {
        Provenance {
            artifact_version: format!("linesurf {}", crate::VERSION),
            assumptions: vec![assumption.to_string()],
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AtlasRecord<T> {
    #[serde(flatten)]
    pub record: T,
    pub provenance: Provenance,
}

/// Parse `"4..6"` (inclusive) or a single integer `"5"`.
pub fn parse_range(text: &str) -> Result<RangeInclusive<i128>> {
    let bad = || Error::Precondition(format!("expected LO..HI or N, got {text:?}"));
    let parse = |p: &str| p.trim().parse::<i128>().map_err(|_| bad());
    match text.split_once("..") {
        Some((lo, hi)) => Ok(parse(lo)?..=parse(hi.trim_start_matches('='))?),
        None => {
            let n = parse(text)?;
            Ok(n..=n)
        }
    }
}

fn span(r: &RangeInclusive<i128>) -> u128 {
    if r.is_empty() {
        0
    } else {
        (r.end() - r.start()) as u128 + 1
    }
}

/// Number of `(s, a, b)` cells swept for the given bounds.
pub fn family_grid_cells(s_range: &RangeInclusive<i128>, a_max: i128, b_max: i128) -> u128 {
    span(s_range) * span(&(1..=a_max)) * span(&(1..=b_max))
}

/// Reports for every gate-passing `(s, a, b)` with `1 ≤ a ≤ a_max`,
/// `1 ≤ b ≤ b_max`, in `(s, a, b)` order.
pub fn family_atlas(
    s_range: RangeInclusive<i128>,
    a_max: i128,
    b_max: i128,
) -> Result<Vec<AtlasRecord<FamilyReport>>> {
    let cells: Vec<(i128, i128)> = s_range
        .flat_map(|s| (1..=a_max).map(move |a| (s, a)))
        .collect();
    let rows: Vec<Vec<FamilyReport>> = cells
        .into_par_iter()
        .map(|(s, a)| {
            (1..=b_max)
                .map(|b| classify(s, a, b))
                .filter(|r| r.as_ref().map_or(true, FamilyReport::passes_gate))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    Ok(rows
        .into_iter()
        .flatten()
        .map(|record| AtlasRecord {
            record,
            provenance: Provenance::with(PICARD_ASSUMPTION),
        })
        .collect())
}

/// Number of `(d, g)` cells swept by [`cubic_atlas`].
pub fn cubic_grid_cells(d_range: &RangeInclusive<i128>) -> u128 {
    d_range.clone().map(|d| span(&conjecture_genera(d))).sum()
}

fn conjecture_genera(d: i128) -> RangeInclusive<i128> {
    (3 * d - 18)..=(d * d - 4).div_euclid(8)
}

/// Verdicts for every `(d, g)` in the conjecture range with `d` in `d_range`,
/// in `(d, g)` order.
pub fn cubic_atlas(d_range: RangeInclusive<i128>) -> Vec<AtlasRecord<RangeVerdict>> {
    let cells: Vec<(i128, i128)> = d_range
        .filter(|&d| d >= 14)
        .flat_map(|d| conjecture_genera(d).map(move |g| (d, g)))
        .collect();
    cells
        .into_par_iter()
        .map(|(d, g)| AtlasRecord {
            record: cubic_verdict(d, g, false),
            provenance: Provenance::with(CUBIC_ASSUMPTION),
        })
        .collect()
}

/// One compact JSON object per line.
pub fn write_ndjson<T: Serialize, W: Write>(mut out: W, records: &[T]) -> io::Result<()> {
    for r in records {
        serde_json::to_writer(&mut out, r)?;
        out.write_all(b"\n")?;
    }
    out.flush()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges() {
        assert_eq!(parse_range("4..6").unwrap(), 4..=6);
        assert_eq!(parse_range("4..=6").unwrap(), 4..=6);
        assert_eq!(parse_range("5").unwrap(), 5..=5);
        assert!(parse_range("a..b").is_err());
        assert_eq!(family_grid_cells(&(4..=6), 40, 40), 4800);
        assert_eq!(family_grid_cells(&parse_range("6..4").unwrap(), 40, 40), 0);
        assert_eq!(family_grid_cells(&(4..=4), 0, 40), 0);
    }

    #[test]
    fn family_atlas_is_sorted_and_gated() {
        let recs = family_atlas(4..=5, 12, 12).unwrap();
        assert!(recs.windows(2).all(|w| {
            let (x, y) = (&w[0].record, &w[1].record);
            (x.s, x.a, x.b) < (y.s, y.a, y.b)
        }));
        assert!(recs.iter().all(|r| r.record.passes_gate()));
        assert!(recs
            .iter()
            .any(|r| (r.record.s, r.record.a, r.record.b) == (4, 12, 8)));
        assert!(family_atlas(4..=6, 0, 10).unwrap().is_empty());
    }

    #[test]
    fn provenance_comes_last() {
        let recs = family_atlas(4..=4, 12, 8).unwrap();
        let line = serde_json::to_string(&recs[0]).unwrap();
        assert!(line.starts_with("{\"s\":4,\"a\":"));
        assert!(line.ends_with("]}}"));
    }

    #[test]
    fn cubic_atlas_covers_conjecture_range() {
        let recs = cubic_atlas(14..=15);
        // d = 14: 24..=24; d = 15: 27..=27
        let keys: Vec<_> = recs.iter().map(|r| (r.record.d, r.record.g)).collect();
        assert_eq!(keys, vec![(14, 24), (15, 27)]);
        assert_eq!(cubic_grid_cells(&(14..=15)), 2);
        assert!(recs.iter().all(|r| r.record.in_conjecture_range));
    }
}
