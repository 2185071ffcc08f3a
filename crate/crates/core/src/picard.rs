//! Divisor arithmetic on the rank-2 Picard lattice of a smooth degree-`s`
//! surface `S ⊂ P³` containing a line.
//!
//! The basis is `{f1, f2}` where `f1` is the line and `f2 ≡ H − f1` is the
//! residual plane curve of degree `s − 1`. The intersection form is
//!
//! ```text
//!   f1·f1 = 2 − s,   f1·f2 = s − 1,   f2·f2 = 0
//! ```
//!
//! and the canonical class is `K = (s − 4)H`. Everything here is integer
//! arithmetic in `i128`; the release profile keeps overflow checks on, so an
//! out-of-range input panics instead of wrapping.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::binom3;
use crate::error::{Error, Result};

/// Largest surface degree accepted by [`SurfaceContext::new`]. Coefficients
/// of divisor classes are documented to stay within the same magnitude.
pub const MAX_MAGNITUDE: i128 = 1_000_000;

/// A smooth surface of degree `s ≥ 4` containing a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SurfaceContext {
    s: i128,
}

impl SurfaceContext {
    pub fn new(s: i128) -> Result<Self> {
        if !(4..=MAX_MAGNITUDE).contains(&s) {
            return Err(Error::SurfaceDegree(s));
        }
        Ok(Self { s })
    }

    pub fn degree(&self) -> i128 {
        self.s
    }

    /// Hyperplane class `H = f1 + f2`.
    pub fn hyperplane(&self) -> DivisorClass {
        DivisorClass::new(1, 1)
    }

    /// Canonical class `K = (s − 4)H`.
    pub fn canonical(&self) -> DivisorClass {
        self.hyperplane() * (self.s - 4)
    }

    /// `χ(O_S) = 1 + binomial(s − 1, 3)` (irregularity 0, geometric genus
    /// `binomial(s − 1, 3)`).
    pub fn chi_structure_sheaf(&self) -> i128 {
        1 + binom3(self.s - 1)
    }
}

/// The class `a·f1 + b·f2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisorClass {
    #[serde(with = "crate::jsonint")]
    pub a: i128,
    #[serde(with = "crate::jsonint")]
    pub b: i128,
}

impl DivisorClass {
    pub const fn new(a: i128, b: i128) -> Self {
        Self { a, b }
    }

    pub const fn zero() -> Self {
        Self { a: 0, b: 0 }
    }

    /// `t = C·f1 = (s − 1)b − (s − 2)a`.
    pub fn t(&self, ctx: &SurfaceContext) -> i128 {
        let s = ctx.s;
        (s - 1) * self.b - (s - 2) * self.a
    }

    /// `C·f2 = (s − 1)a`.
    pub fn dot_residual(&self, ctx: &SurfaceContext) -> i128 {
        (ctx.s - 1) * self.a
    }
}

impl fmt::Display for DivisorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

impl Add for DivisorClass {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl Sub for DivisorClass {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl Neg for DivisorClass {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b)
    }
}

impl Mul<i128> for DivisorClass {
    type Output = Self;
    fn mul(self, k: i128) -> Self {
        Self::new(self.a * k, self.b * k)
    }
}

/// Why a cohomology dimension could not be read off the vanishing tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum UnknownReason {
    /// The class satisfies neither the `t ≥ −2` vanishing table nor the
    /// `−4 ≤ t ≤ −1` table.
    OutsideLemmaHypotheses,
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UnknownReason::OutsideLemmaHypotheses => f.write_str("outside the vanishing tables"),
        }
    }
}

/// A cohomology dimension, or an explicit statement that it is not known.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CohomologyAnswer {
    Known {
        #[serde(with = "crate::jsonint")]
        value: i128,
    },
    Unknown {
        reason: UnknownReason,
    },
}

impl CohomologyAnswer {
    pub fn known(value: i128) -> Self {
        debug_assert!(value >= 0);
        CohomologyAnswer::Known { value }
    }

    pub fn value(&self) -> Option<i128> {
        match self {
            CohomologyAnswer::Known { value } => Some(*value),
            CohomologyAnswer::Unknown { .. } => None,
        }
    }

    pub fn is_known(&self) -> bool {
        self.value().is_some()
    }
}

impl fmt::Display for CohomologyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CohomologyAnswer::Known { value } => write!(f, "Known({value})"),
            CohomologyAnswer::Unknown { reason } => write!(f, "Unknown({reason})"),
        }
    }
}

/// Intersection pairing `D1·D2`.
pub fn intersect(d1: DivisorClass, d2: DivisorClass, ctx: &SurfaceContext) -> i128 {
    let s = ctx.s;
    d1.a * d2.a * (2 - s) + (d1.a * d2.b + d2.a * d1.b) * (s - 1)
}

/// Degree `d = C·H = a + (s − 1)b`.
pub fn degree(c: DivisorClass, ctx: &SurfaceContext) -> i128 {
    c.a + (ctx.s - 1) * c.b
}

/// Arithmetic genus of `C` by the closed form
/// `1 + (s−1)ab + ((s−4)a + (s−4)(s−1)b − (s−2)a²)/2`.
///
/// The numerator is always even; an odd one is reported as
/// [`Error::HalfIntegerGenus`].
pub fn genus(c: DivisorClass, ctx: &SurfaceContext) -> Result<i128> {
    let s = ctx.s;
    let (a, b) = (c.a, c.b);
    let numerator = (s - 4) * a + (s - 4) * (s - 1) * b - (s - 2) * a * a;
    if numerator % 2 != 0 {
        return Err(Error::HalfIntegerGenus { numerator });
    }
    Ok(1 + (s - 1) * a * b + numerator / 2)
}

/// Arithmetic genus by adjunction, `1 + (C² + C·K)/2`.
pub fn genus_by_adjunction(c: DivisorClass, ctx: &SurfaceContext) -> Result<i128> {
    let numerator = intersect(c, c, ctx) + intersect(c, ctx.canonical(), ctx);
    if numerator % 2 != 0 {
        return Err(Error::HalfIntegerGenus { numerator });
    }
    Ok(1 + numerator / 2)
}

/// Every effective class has `a, b ≥ 0`.
pub fn is_effective(c: DivisorClass, _ctx: &SurfaceContext) -> bool {
    c.a >= 0 && c.b >= 0
}

/// Nef cone: `(s − 1)b ≥ (s − 2)a ≥ 0`.
pub fn is_nef(c: DivisorClass, ctx: &SurfaceContext) -> bool {
    let s = ctx.s;
    (s - 1) * c.b >= (s - 2) * c.a && (s - 2) * c.a >= 0
}

/// `C·f1 ≥ 0` and `C·f2 ≥ 0`.
pub fn is_base_point_free(c: DivisorClass, ctx: &SurfaceContext) -> bool {
    c.t(ctx) >= 0 && c.dot_residual(ctx) >= 0
}

/// `C·f1 ≥ 0` and `C·f2 > 0`: the linear system contains a smooth
/// irreducible curve.
pub fn has_smooth_irreducible_member(c: DivisorClass, ctx: &SurfaceContext) -> bool {
    c.t(ctx) >= 0 && c.dot_residual(ctx) > 0
}

/// `t ≥ −2` table. Returns `None` when `a ≤ s − 4` or `t < −2`.
pub fn h1_vanishing_table(c: DivisorClass, ctx: &SurfaceContext) -> Option<i128> {
    let s = ctx.s;
    let t = c.t(ctx);
    if c.a <= s - 4 || t < -2 {
        return None;
    }
    if t > -2 || c.a == s - 3 {
        Some(0)
    } else {
        Some(1)
    }
}

/// `−4 ≤ t ≤ −1` table. Returns `None` when `a ≤ s − 2` or `t` is outside
/// the window.
pub fn h1_negative_t_table(c: DivisorClass, ctx: &SurfaceContext) -> Option<i128> {
    let s = ctx.s;
    let t = c.t(ctx);
    if c.a <= s - 2 || !(-4..=-1).contains(&t) {
        return None;
    }
    if (t, s) == (-4, 4) {
        Some(4)
    } else {
        Some(-t - 1)
    }
}

/// `h¹(S, O_S(C))` where one of the two vanishing tables applies.
///
/// Where both tables cover a class they agree; this is checked in debug
/// builds and exhaustively in the tests.
pub fn h1_surface(c: DivisorClass, ctx: &SurfaceContext) -> CohomologyAnswer {
    let first = h1_vanishing_table(c, ctx);
    let second = h1_negative_t_table(c, ctx);
    if let (Some(x), Some(y)) = (first, second) {
        debug_assert_eq!(x, y, "vanishing tables disagree at {c} for s={}", ctx.s);
    }
    match first.or(second) {
        Some(v) => CohomologyAnswer::known(v),
        None => CohomologyAnswer::Unknown {
            reason: UnknownReason::OutsideLemmaHypotheses,
        },
    }
}

/// `h¹(P³, I_C(n))` for `C ⊂ S`, via `H¹(I_C(n))^∨ ≅ H¹(O_S(C + (s − 4 − n)H))`.
pub fn h1_ideal(c: DivisorClass, n: i128, ctx: &SurfaceContext) -> CohomologyAnswer {
    h1_surface(c + ctx.hyperplane() * (ctx.s - 4 - n), ctx)
}

/// `χ(O_S(C)) = χ(O_S) + (C² − C·K)/2`.
pub fn chi_surface(c: DivisorClass, ctx: &SurfaceContext) -> Result<i128> {
    let numerator = intersect(c, c, ctx) - intersect(c, ctx.canonical(), ctx);
    if numerator % 2 != 0 {
        return Err(Error::HalfIntegerChi { numerator });
    }
    Ok(ctx.chi_structure_sheaf() + numerator / 2)
}
