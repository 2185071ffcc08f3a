//! Curves on a smooth cubic surface.
//!
//! A curve class on the cubic is a 7-tuple `(δ, m1, …, m6)` coming from the
//! blow-up of `P²` in six general points. This module covers the tuple
//! invariants, the conjectured range of non-reduced components, the ranges
//! where that conjecture is proven, the existence ranges for tuples with
//! `m6 ∈ {1, 2}`, and a brute-force enumerator of tuples with given `(d, g)`.
//!
//! Inequalities with square roots are decided exactly by squaring after
//! clearing denominators (see [`crate::arith::sign_with_root`]).

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::{binom2, sign_with_root, sign_with_two_roots};
use crate::error::{Error, Result};
use crate::maxgenus::max_genus;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SevenTuple {
    #[serde(with = "crate::jsonint")]
    pub delta: i128,
    #[serde(with = "crate::jsonint::array")]
    pub m: [i128; 6],
}

impl SevenTuple {
    /// Build a tuple, checking `δ ≥ m1 ≥ … ≥ m6 ≥ 0` and `δ ≥ m1 + m2 + m3`.
    pub fn new(delta: i128, m: [i128; 6]) -> Result<Self> {
        let t = Self { delta, m };
        if t.is_valid() {
            Ok(t)
        } else {
            Err(Error::InvalidTuple(t.as_array()))
        }
    }

    pub fn is_valid(&self) -> bool {
        let m = &self.m;
        self.delta >= m[0]
            && m.windows(2).all(|w| w[0] >= w[1])
            && m[5] >= 0
            && self.delta >= m[0] + m[1] + m[2]
    }

    pub fn as_array(&self) -> [i128; 7] {
        let m = &self.m;
        [self.delta, m[0], m[1], m[2], m[3], m[4], m[5]]
    }

    /// `(d, g)` with `d = 3δ − Σ mᵢ` and `g = binomial(δ−1, 2) − Σ binomial(mᵢ, 2)`.
    pub fn invariants(&self) -> Result<(i128, i128)> {
        if !self.is_valid() {
            return Err(Error::InvalidTuple(self.as_array()));
        }
        let d = 3 * self.delta - self.m.iter().sum::<i128>();
        let g = binom2(self.delta - 1) - self.m.iter().map(|&x| binom2(x)).sum::<i128>();
        Ok((d, g))
    }

    /// Whether the tuple has the shape `(λ + 3m6, λ + m6, m6, …, m6)` with
    /// `λ ≥ 2`.
    pub fn is_excluded_hyperplane_shift(&self) -> bool {
        let m6 = self.m[5];
        let lambda = self.m[0] - m6;
        self.m[1..].iter().all(|&x| x == m6) && self.delta == lambda + 3 * m6 && lambda >= 2
    }
}

impl fmt::Display for SevenTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.as_array();
        write!(f, "({}", a[0])?;
        for x in &a[1..] {
            write!(f, ",{x}")?;
        }
        f.write_str(")")
    }
}

pub fn tuple_invariants(t: &SevenTuple) -> Result<(i128, i128)> {
    t.invariants()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyFlags {
    /// `8g > d² − 4`: `H¹(I_C(3)) = 0`, so `C` is unobstructed.
    pub unobstructed_forced: bool,
    /// Defined when `d ≥ 14` and `g ≥ 3d − 18`: then
    /// `H¹(I_C(3)) ≠ 0 ∧ H¹(I_C(1)) = 0 ⟺ 1 ≤ m6 ≤ 2`.
    pub h1_3_nonzero_and_lin_normal: Option<bool>,
}

pub fn cohomology_flags(t: &SevenTuple) -> Result<CohomologyFlags> {
    let (d, g) = t.invariants()?;
    Ok(CohomologyFlags {
        unobstructed_forced: 8 * g > d * d - 4,
        h1_3_nonzero_and_lin_normal: (d >= 14 && g >= 3 * d - 18)
            .then(|| (1..=2).contains(&t.m[5])),
    })
}

/// `d ≥ 14` and `3d − 18 ≤ g ≤ (d² − 4)/8`.
pub fn conjecture_range(d: i128, g: i128) -> bool {
    d >= 14 && 3 * d - 18 <= g && 8 * g <= d * d - 4
}

/// A reason why the conjecture is known to hold at a given `(d, g)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Certificate {
    /// `g > 7 + (d − 2)²/8`, `d ≥ 18`.
    QuadraticBound,
    /// `g > G(d, 5)`, `d ≥ 21`.
    AboveQuinticMaxGenus,
    /// `g > max(d²/10 − d/2 + 18, G(d, t))`, `d ≥ t² − 2t + 2`, for the given
    /// `t ∈ {6, 7, 8}`; assumes the general curve is linearly normal.
    MaxGenusLadder {
        #[serde(with = "crate::jsonint")]
        t: i128,
    },
    /// `g > d²/10 − d/2 + 18`, `d ≥ 54`.
    LargeDegree,
    /// A tuple of this `(d, g)` satisfying [`tuple_criterion`].
    TupleCriterion { tuple: SevenTuple },
}

/// `10g > d² − 5d + 180`, i.e. `g > d²/10 − d/2 + 18`.
fn above_tenth_parabola(d: i128, g: i128) -> bool {
    10 * g > d * d - 5 * d + 180
}

/// `(d, g)`-level certificates, plus notes for any ladder step skipped
/// because `G(d, t)` is not known exactly.
pub fn proven_range_with_notes(d: i128, g: i128) -> (Vec<Certificate>, Vec<String>) {
    let mut certs = Vec::new();
    let mut notes = Vec::new();
    if d >= 18 && 8 * g > 56 + (d - 2) * (d - 2) {
        certs.push(Certificate::QuadraticBound);
    }
    if d >= 21 {
        if let Ok(Some(g5)) = max_genus(d, 5).map(|a| a.exact()) {
            if g > g5 {
                certs.push(Certificate::AboveQuinticMaxGenus);
            }
        }
    }
    for t in 6..=8 {
        if d < t * t - 2 * t + 2 {
            continue;
        }
        match max_genus(d, t).ok().and_then(|a| a.exact()) {
            Some(gt) => {
                if g > gt && above_tenth_parabola(d, g) {
                    certs.push(Certificate::MaxGenusLadder { t });
                }
            }
            None => notes.push(format!(
                "G({d},{t}) not known exactly; ladder step t={t} skipped"
            )),
        }
    }
    if d >= 54 && above_tenth_parabola(d, g) {
        certs.push(Certificate::LargeDegree);
    }
    (certs, notes)
}

pub fn proven_range(d: i128, g: i128) -> Vec<Certificate> {
    proven_range_with_notes(d, g).0
}

/// The tuple criterion for non-reducedness with `m6 = 1`:
///
/// * `m5 ≥ 6`, `d ≥ 35`, and not `(λ+18, λ+6, 6, 6, 6, 6, 1)` with `λ ≥ 2`; or
/// * `m5 = 5`, `m4 ≥ 7`, `d ≥ 35`, and not `(λ+21, λ+7, 7, 7, 7, 5, 1)` with `λ ≥ 2`.
pub fn tuple_criterion(t: &SevenTuple) -> Result<bool> {
    let (d, _) = t.invariants()?;
    let [m1, m2, m3, m4, m5, m6] = t.m;
    if m6 != 1 || d < 35 {
        return Ok(false);
    }
    let clause_a = m5 >= 6 && {
        let lambda = m1 - 6;
        let excluded = [m2, m3, m4, m5] == [6; 4] && t.delta == lambda + 18 && lambda >= 2;
        !excluded
    };
    let clause_b = m5 == 5 && m4 >= 7 && {
        let lambda = m1 - 7;
        let excluded = [m2, m3, m4] == [7; 3] && t.delta == lambda + 21 && lambda >= 2;
        !excluded
    };
    Ok(clause_a || clause_b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Existence {
    Yes,
    ExcludedPair,
    No,
}

/// `2g ≥ 2(d+9)√(d+6) − 9d − 43`.
fn above_lower_n1(d: i128, g: i128) -> bool {
    sign_with_root(2 * g + 9 * d + 43, -2 * (d + 9), d + 6) >= 0
}

/// Existence of a curve on a smooth cubic with `m6 ∈ {1, 2}` and not of the
/// excluded hyperplane-shift shape, for `d ≥ 14`:
/// `(d+9)√(d+6) − 9d/2 − 43/2 ≤ g ≤ (d² − 4)/8`, `(d, g) ≠ (14, 22)`.
pub fn cubic_existence(d: i128, g: i128) -> Result<Existence> {
    if d < 14 {
        return Err(Error::Precondition(format!(
            "existence range needs d >= 14, got {d}"
        )));
    }
    if (d, g) == (14, 22) {
        return Ok(Existence::ExcludedPair);
    }
    if above_lower_n1(d, g) && 8 * g <= d * d - 4 {
        Ok(Existence::Yes)
    } else {
        Ok(Existence::No)
    }
}

/// Auxiliary existence ranges.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum AuxRange {
    /// Rathmann's range shifted by `n` hyperplane sections (`n ∈ 1..=3`),
    /// valid for `d > 3n + 4`:
    /// `(d+12−3n)√(d+9−3n) + d(n − 11/2) − 35 + 3(10n − n²)/2 ≤ g ≤ 1 + (d² + (2n−4)d − 3n²)/8`.
    Shifted(i128),
    /// The unobstructed-curve range `3d − 17 + (d−9)(d−18)/18 ≤ g ≤ 1 + d(d−3)/6`
    /// for `d > 9`, minus `(30,91), (33,103), (34,109)`.
    Unobstructed,
}

const UNOBSTRUCTED_EXCLUSIONS: [(i128, i128); 3] = [(30, 91), (33, 103), (34, 109)];

pub fn aux_existence(d: i128, g: i128, range: AuxRange) -> Result<bool> {
    match range {
        AuxRange::Shifted(n) => {
            if !(1..=3).contains(&n) {
                return Err(Error::Precondition(format!(
                    "shift n must be 1, 2 or 3, got {n}"
                )));
            }
            if d <= 3 * n + 4 {
                return Err(Error::Precondition(format!(
                    "shifted range needs d > {}, got {d}",
                    3 * n + 4
                )));
            }
            // lower bound scaled by 2
            let p = 2 * g - d * (2 * n - 11) + 70 - 3 * (10 * n - n * n);
            let lower = sign_with_root(p, -2 * (d + 12 - 3 * n), d + 9 - 3 * n) >= 0;
            let upper = 8 * g <= 8 + d * d + (2 * n - 4) * d - 3 * n * n;
            Ok(lower && upper)
        }
        AuxRange::Unobstructed => {
            if d <= 9 {
                return Err(Error::Precondition(format!(
                    "unobstructed range needs d > 9, got {d}"
                )));
            }
            if UNOBSTRUCTED_EXCLUSIONS.contains(&(d, g)) {
                return Ok(false);
            }
            let lower = 54 * d - 306 + (d - 9) * (d - 18) <= 18 * g;
            let upper = 6 * g <= 6 + d * (d - 3);
            Ok(lower && upper)
        }
    }
}

/// Exact comparisons between the four boundary curves of the existence
/// argument, `g1, g2` (with roots) and `G1 = (d²−2d+5)/8`, `G2 = (d²−4)/8`.
pub mod boundaries {
    use super::*;

    /// `g1 ≤ g2`.
    pub fn g1_le_g2(d: i128) -> bool {
        // 2g2 − 2g1 = (2d + 21) + 2(d+6)√(d+3) − 2(d+9)√(d+6)
        sign_with_two_roots(2 * d + 21, 2 * (d + 6), d + 3, -2 * (d + 9), d + 6) >= 0
    }

    /// `g2 ≤ G2`.
    pub fn g2_le_big_g2(d: i128) -> bool {
        sign_with_root(d * d + 28 * d + 84, -8 * (d + 6), d + 3) >= 0
    }

    /// `g2 < G1`.
    pub fn g2_lt_big_g1(d: i128) -> bool {
        sign_with_root(d * d + 26 * d + 93, -8 * (d + 6), d + 3) > 0
    }

    /// `g ≥ g2`.
    pub fn at_least_g2(d: i128, g: i128) -> bool {
        sign_with_root(2 * g + 7 * d + 22, -2 * (d + 6), d + 3) >= 0
    }

    /// `g ≤ G1`.
    pub fn at_most_big_g1(d: i128, g: i128) -> bool {
        8 * g <= d * d - 2 * d + 5
    }

    /// `G1 < G2`.
    pub fn big_g1_lt_big_g2(d: i128) -> bool {
        d * d - 2 * d + 5 < d * d - 4
    }

    /// Integers `k` with `G1 < k < g2`.
    pub fn gap_integers(d: i128) -> Vec<i128> {
        let first = (d * d - 2 * d + 5).div_euclid(8) + 1;
        (first..)
            .take_while(|&k| sign_with_root(-7 * d - 22 - 2 * k, 2 * (d + 6), d + 3) > 0)
            .collect()
    }
}

/// Every 7-tuple with invariants `(d, g)`, optionally restricted to
/// `m6 ∈ m6_filter`.
///
/// Since `m4 + m5 + m6 ≤ m1 + m2 + m3 ≤ δ`, the sum `Σ mᵢ ≤ 2δ` and hence
/// `δ ≤ d`; also `δ ≥ d/3`. Output order is `δ` ascending, then `(m1, …, m6)`
/// lexicographically descending, independent of how the `δ` slices are
/// scheduled.
pub fn enumerate_tuples(d: i128, g: i128, m6_filter: Option<&[i128]>) -> Vec<SevenTuple> {
    if d < 1 {
        return Vec::new();
    }
    let lo = (d + 2) / 3;
    (lo..=d)
        .into_par_iter()
        .map(|delta| tuples_for_delta(d, g, delta, m6_filter))
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

fn tuples_for_delta(d: i128, g: i128, delta: i128, m6_filter: Option<&[i128]>) -> Vec<SevenTuple> {
    let sum = 3 * delta - d;
    if sum < 0 || sum > 2 * delta {
        return Vec::new();
    }
    // Σ mᵢ² = 2(binomial(δ−1,2) − g) + Σ mᵢ
    let sum_sq = 2 * (binom2(delta - 1) - g) + sum;
    if sum_sq < 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut m = [0i128; 6];
    search(
        &mut Search {
            delta,
            m6_filter,
            out: &mut out,
        },
        &mut m,
        0,
        delta,
        sum,
        sum_sq,
    );
    out
}

struct Search<'a> {
    delta: i128,
    m6_filter: Option<&'a [i128]>,
    out: &'a mut Vec<SevenTuple>,
}

fn search(ctx: &mut Search<'_>, m: &mut [i128; 6], k: usize, cap: i128, sum: i128, sum_sq: i128) {
    let slots = (6 - k) as i128;
    if slots == 0 {
        if sum == 0 && sum_sq == 0 {
            ctx.out.push(SevenTuple {
                delta: ctx.delta,
                m: *m,
            });
        }
        return;
    }
    if sum > slots * cap || sum_sq > cap * sum || sum_sq * slots < sum * sum {
        return;
    }
    // the current entry is the largest of the remaining ones
    let lo = (sum + slots - 1) / slots;
    let mut hi = cap.min(sum);
    if k == 2 {
        hi = hi.min(ctx.delta - m[0] - m[1]);
    }
    let mut x = hi;
    while x >= lo {
        let keep = k != 5 || ctx.m6_filter.is_none_or(|f| f.contains(&x));
        if keep && x * x <= sum_sq {
            m[k] = x;
            search(ctx, m, k + 1, x, sum - x, sum_sq - x * x);
        }
        x -= 1;
    }
    m[k] = 0;
}

/// Everything known about `(d, g)` for curves on a smooth cubic.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RangeVerdict {
    #[serde(with = "crate::jsonint")]
    pub d: i128,
    #[serde(with = "crate::jsonint")]
    pub g: i128,
    pub in_conjecture_range: bool,
    pub proven_by: Vec<Certificate>,
    /// `No` also covers `d < 14`, where the existence range says nothing.
    pub existence: Existence,
    #[serde(with = "crate::jsonint")]
    pub dim_w3: i128,
    pub notes: Vec<String>,
}

/// Build the verdict for `(d, g)`. With `search_tuples`, tuples with
/// `m6 = 1` are enumerated and those meeting [`tuple_criterion`] are added
/// as certificates.
pub fn cubic_verdict(d: i128, g: i128, search_tuples: bool) -> RangeVerdict {
    let (mut proven_by, mut notes) = proven_range_with_notes(d, g);
    notes.push("ladder certificates assume the general curve is linearly normal".to_string());
    if search_tuples && d >= 35 {
        for t in enumerate_tuples(d, g, Some(&[1])) {
            if tuple_criterion(&t) == Ok(true) {
                proven_by.push(Certificate::TupleCriterion { tuple: t });
            }
        }
    }
    let existence = if d >= 14 {
        cubic_existence(d, g).unwrap_or(Existence::No)
    } else {
        Existence::No
    };
    RangeVerdict {
        d,
        g,
        in_conjecture_range: conjecture_range(d, g),
        proven_by,
        existence,
        dim_w3: d + g + 18,
        notes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tup(a: [i128; 7]) -> SevenTuple {
        SevenTuple::new(a[0], [a[1], a[2], a[3], a[4], a[5], a[6]]).unwrap()
    }

    #[test]
    fn invariants_of_small_tuples() {
        assert_eq!(tup([3, 1, 1, 1, 1, 1, 1]).invariants(), Ok((3, 1)));
        assert_eq!(tup([6, 2, 2, 2, 2, 2, 2]).invariants(), Ok((6, 4)));
        assert_eq!(tup([1, 0, 0, 0, 0, 0, 0]).invariants(), Ok((3, 0)));
    }

    #[test]
    fn invalid_tuples_rejected() {
        assert!(SevenTuple::new(3, [2, 2, 0, 0, 0, 0]).is_err());
        assert!(SevenTuple::new(5, [1, 2, 0, 0, 0, 0]).is_err());
        assert!(SevenTuple::new(5, [1, 1, 1, 1, 1, -1]).is_err());
        let bad = SevenTuple {
            delta: 2,
            m: [3, 0, 0, 0, 0, 0],
        };
        assert_eq!(
            bad.invariants(),
            Err(Error::InvalidTuple([2, 3, 0, 0, 0, 0, 0]))
        );
    }

    #[test]
    fn flags() {
        let f = cohomology_flags(&tup([3, 1, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!(
            f,
            CohomologyFlags {
                unobstructed_forced: true,
                h1_3_nonzero_and_lin_normal: None
            }
        );
        let boundary = enumerate_tuples(14, 24, Some(&[1, 2]));
        assert!(!boundary.is_empty());
        let f = cohomology_flags(&boundary[0]).unwrap();
        assert_eq!(
            f,
            CohomologyFlags {
                unobstructed_forced: false,
                h1_3_nonzero_and_lin_normal: Some(true)
            }
        );
        let m6_zero = enumerate_tuples(22, 48, Some(&[0]));
        assert!(!m6_zero.is_empty());
        assert_eq!(
            cohomology_flags(&m6_zero[0])
                .unwrap()
                .h1_3_nonzero_and_lin_normal,
            Some(false)
        );
    }

    #[test]
    fn excluded_pair_probe() {
        // (14, 22) is realised by m6 = 2 tuples of ordinary shape; it lies
        // below 3d − 18 and so outside the conjecture range.
        let found = enumerate_tuples(14, 22, Some(&[1, 2]));
        assert_eq!(
            found,
            vec![tup([10, 3, 3, 3, 3, 2, 2]), tup([11, 5, 3, 3, 3, 3, 2])]
        );
        assert!(found.iter().all(|t| !t.is_excluded_hyperplane_shift()));
        assert!(!conjecture_range(14, 22));
        assert_eq!(cubic_existence(14, 22), Ok(Existence::ExcludedPair));
    }

    #[test]
    fn conjecture_range_fixtures() {
        assert!(conjecture_range(14, 24));
        assert!(!conjecture_range(14, 25));
        assert!(!conjecture_range(13, 21));
    }

    #[test]
    fn proven_range_fixtures() {
        assert!(proven_range(57, 390).contains(&Certificate::LargeDegree));
        assert!(proven_range(36, 148).contains(&Certificate::AboveQuinticMaxGenus));
        assert!(!proven_range(36, 147).contains(&Certificate::AboveQuinticMaxGenus));
        for g in 0..200 {
            assert!(!proven_range(20, g).contains(&Certificate::AboveQuinticMaxGenus));
        }
        // 10g > d² − 5d + 180 at d = 57: 3144 / 10
        assert!(proven_range(57, 315).contains(&Certificate::LargeDegree));
        assert!(!proven_range(57, 314).contains(&Certificate::LargeDegree));
    }

    #[test]
    fn tuple_criterion_fixtures() {
        assert_eq!(tuple_criterion(&tup([20, 8, 6, 6, 6, 6, 1])), Ok(false));
        assert_eq!(tuple_criterion(&tup([22, 6, 6, 6, 6, 6, 1])), Ok(true));
        assert_eq!(tuple_criterion(&tup([24, 12, 6, 6, 6, 6, 1])), Ok(false));
        assert_eq!(tuple_criterion(&tup([24, 8, 6, 6, 6, 6, 1])), Ok(true));
        assert_eq!(tuple_criterion(&tup([24, 8, 7, 6, 6, 6, 1])), Ok(true));
        assert_eq!(tuple_criterion(&tup([24, 10, 7, 7, 7, 5, 1])), Ok(false));
        assert_eq!(tuple_criterion(&tup([30, 9, 7, 7, 7, 5, 1])), Ok(true));
        assert_eq!(tuple_criterion(&tup([30, 8, 8, 7, 7, 5, 1])), Ok(true));
        assert_eq!(tuple_criterion(&tup([30, 8, 8, 8, 8, 8, 2])), Ok(false));
    }

    #[test]
    fn existence_fixtures() {
        assert_eq!(cubic_existence(14, 22), Ok(Existence::ExcludedPair));
        assert_eq!(cubic_existence(14, 24), Ok(Existence::Yes));
        assert_eq!(cubic_existence(14, 18), Ok(Existence::No));
        assert_eq!(cubic_existence(14, 19), Ok(Existence::Yes));
        assert_eq!(cubic_existence(14, 25), Ok(Existence::No));
        assert!(cubic_existence(13, 20).is_err());
    }

    #[test]
    fn aux_fixtures() {
        assert_eq!(aux_existence(14, 24, AuxRange::Shifted(1)), Ok(false));
        assert_eq!(aux_existence(14, 24, AuxRange::Shifted(2)), Ok(true));
        assert_eq!(aux_existence(30, 91, AuxRange::Unobstructed), Ok(false));
        assert_eq!(aux_existence(30, 92, AuxRange::Unobstructed), Ok(true));
        assert_eq!(aux_existence(30, 86, AuxRange::Unobstructed), Ok(false));
        assert_eq!(aux_existence(30, 136, AuxRange::Unobstructed), Ok(true));
        assert_eq!(aux_existence(30, 137, AuxRange::Unobstructed), Ok(false));
        assert!(aux_existence(7, 3, AuxRange::Shifted(1)).is_err());
        assert!(aux_existence(9, 3, AuxRange::Unobstructed).is_err());
        assert!(aux_existence(30, 90, AuxRange::Shifted(4)).is_err());
    }

    #[test]
    fn enumeration_small() {
        let all = enumerate_tuples(3, 1, None);
        assert!(all.contains(&tup([3, 1, 1, 1, 1, 1, 1])));
        for t in &all {
            assert_eq!(t.invariants(), Ok((3, 1)));
        }
        assert!(!enumerate_tuples(14, 24, Some(&[1, 2])).is_empty());
        assert!(enumerate_tuples(0, 0, None).is_empty());
    }

    #[test]
    fn excluded_shape() {
        assert!(tup([7, 5, 1, 1, 1, 1, 1]).is_excluded_hyperplane_shift());
        assert!(tup([6, 4, 1, 1, 1, 1, 1]).is_excluded_hyperplane_shift());
        assert!(!tup([6, 3, 1, 1, 1, 1, 1]).is_excluded_hyperplane_shift());
        assert!(tup([20, 8, 6, 6, 6, 6, 6]).is_excluded_hyperplane_shift());
        assert!(!tup([20, 8, 6, 6, 6, 6, 5]).is_excluded_hyperplane_shift());
    }

    #[test]
    fn verdict_dim() {
        let v = cubic_verdict(57, 315, false);
        assert_eq!(v.dim_w3, 390);
        let v = cubic_verdict(14, 24, false);
        assert!(v.in_conjecture_range);
        assert_eq!(v.existence, Existence::Yes);
        assert_eq!(cubic_verdict(10, 5, false).existence, Existence::No);
    }
}
