//! Classification of maximal families of curves `C ≡ a·f1 + b·f2` on a
//! smooth degree-`s` surface (`s ≥ 4`) containing a line.
//!
//! Every window test compares integers after clearing the positive
//! denominator `s − 2`; nothing is divided.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::arith::binom3;
use crate::error::Result;
use crate::picard::{self, CohomologyAnswer, DivisorClass, SurfaceContext};

/// The two classes excluded from the component statement, as `(s, a, b)`.
pub const EXCEPTIONAL_TRIPLES: [(i128, i128, i128); 2] = [(4, 6, 4), (4, 9, 6)];

/// Assumption attached to every report.
pub const PICARD_ASSUMPTION: &str =
    "Pic(S) is freely generated by the line f1 and f2 = H - f1 (S very general)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FailedHypothesis {
    /// `d ≤ s²`
    DegreeAtMostSSquared,
    /// `a = b`
    EqualCoefficients,
    /// `a ≤ s − 4`
    LineCoefficientTooSmall,
    /// `C·f1 < 0` or `C·f2 ≤ 0`
    NoSmoothIrreducibleMember,
}

impl fmt::Display for FailedHypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            FailedHypothesis::DegreeAtMostSSquared => "d ≤ s²",
            FailedHypothesis::EqualCoefficients => "a = b",
            FailedHypothesis::LineCoefficientTooSmall => "a ≤ s−4",
            FailedHypothesis::NoSmoothIrreducibleMember => "no smooth irreducible member",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", content = "reason")]
pub enum TheoremCase {
    /// Unique maximal family and irreducible component, nothing more known.
    CaseIOnly,
    /// Generically smooth component.
    CaseII,
    /// Near the border of the nef cone: `h¹(I_C(s)) ≠ 0`.
    CaseIII,
    ExceptionalTriple,
    HypothesisFailed(FailedHypothesis),
}

impl fmt::Display for TheoremCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TheoremCase::HypothesisFailed(h) => write!(f, "HypothesisFailed({h})"),
            other => write!(f, "{other:?}"),
        }
    }
}

/// Component status, ordered by strength.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum ComponentStatus {
    Undetermined,
    UniqueMaximalFamily,
    IrreducibleComponent,
    ConjecturedNonReduced,
    GenericallySmoothComponent,
    NonReducedComponent,
}

impl ComponentStatus {
    /// Whether the status asserts that the family is an irreducible component.
    pub fn is_component(self) -> bool {
        matches!(
            self,
            ComponentStatus::IrreducibleComponent
                | ComponentStatus::ConjecturedNonReduced
                | ComponentStatus::GenericallySmoothComponent
                | ComponentStatus::NonReducedComponent
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CriticalFamilyKind {
    /// `μ = s − 3`
    FamilyA,
    /// `μ = s − 2`
    FamilyB,
    /// `μ = s − 1`, on the border of the nef cone
    FamilyC,
}

impl CriticalFamilyKind {
    pub fn mu(self, s: i128) -> i128 {
        match self {
            CriticalFamilyKind::FamilyA => s - 3,
            CriticalFamilyKind::FamilyB => s - 2,
            CriticalFamilyKind::FamilyC => s - 1,
        }
    }

    pub const ALL: [CriticalFamilyKind; 3] = [
        CriticalFamilyKind::FamilyA,
        CriticalFamilyKind::FamilyB,
        CriticalFamilyKind::FamilyC,
    ];
}

/// Membership in one of the families `(a, b) = ((s−1)n − μ, (s−2)n − μ + 1)`,
/// `n ≥ 3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CriticalFamily {
    pub kind: CriticalFamilyKind,
    #[serde(with = "crate::jsonint")]
    pub n: i128,
}

impl CriticalFamily {
    pub fn class(self, s: i128) -> DivisorClass {
        let mu = self.kind.mu(s);
        DivisorClass::new((s - 1) * self.n - mu, (s - 2) * self.n - mu + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilyReport {
    #[serde(with = "crate::jsonint")]
    pub s: i128,
    #[serde(with = "crate::jsonint")]
    pub a: i128,
    #[serde(with = "crate::jsonint")]
    pub b: i128,
    #[serde(with = "crate::jsonint")]
    pub d: i128,
    #[serde(with = "crate::jsonint")]
    pub g: i128,
    #[serde(with = "crate::jsonint")]
    pub t: i128,
    #[serde(with = "crate::jsonint")]
    pub dim_w: i128,
    pub h1_ideal_s: CohomologyAnswer,
    pub case: TheoremCase,
    pub status: ComponentStatus,
    pub critical_family: Option<CriticalFamily>,
    pub notes: Vec<String>,
}

impl FamilyReport {
    pub fn passes_gate(&self) -> bool {
        !matches!(self.case, TheoremCase::HypothesisFailed(_))
    }
}

/// `dim W = (4 − s)d + g + binomial(s+3, 3) + binomial(s−1, 3) − s + 1`.
pub fn dim_w(s: i128, d: i128, g: i128) -> i128 {
    (4 - s) * d + g + binom3(s + 3) + binom3(s - 1) - s + 1
}

/// `dim A¹ − dim A² = (4 − s)d + g + binomial(s+3, 3) − 2` for the
/// Hilbert-flag scheme at `(C, S)`.
pub fn dim_a1_minus_a2(s: i128, d: i128, g: i128) -> i128 {
    (4 - s) * d + g + binom3(s + 3) - 2
}

/// Solve `(a, b) = ((s−1)n − μ, (s−2)n − μ + 1)` with `n ≥ 3`.
pub fn critical_family(s: i128, a: i128, b: i128) -> Option<CriticalFamily> {
    CriticalFamilyKind::ALL.into_iter().find_map(|kind| {
        let mu = kind.mu(s);
        if (a + mu) % (s - 1) != 0 {
            return None;
        }
        let n = (a + mu) / (s - 1);
        (n >= 3 && b == (s - 2) * n - mu + 1).then_some(CriticalFamily { kind, n })
    })
}

fn first_failed_hypothesis(
    c: DivisorClass,
    d: i128,
    ctx: &SurfaceContext,
) -> Option<FailedHypothesis> {
    let s = ctx.degree();
    if d <= s * s {
        Some(FailedHypothesis::DegreeAtMostSSquared)
    } else if c.a == c.b {
        Some(FailedHypothesis::EqualCoefficients)
    } else if c.a <= s - 4 {
        Some(FailedHypothesis::LineCoefficientTooSmall)
    } else if !picard::has_smooth_irreducible_member(c, ctx) {
        Some(FailedHypothesis::NoSmoothIrreducibleMember)
    } else {
        None
    }
}

/// Classify the maximal family through `C ≡ a·f1 + b·f2` on a degree-`s`
/// surface. Failures of the hypotheses are reported in the result, in the
/// fixed order `d > s²`, `a ≠ b`, `a > s − 4`, smooth member.
pub fn classify(s: i128, a: i128, b: i128) -> Result<FamilyReport> {
    let ctx = SurfaceContext::new(s)?;
    let c = DivisorClass::new(a, b);
    let d = picard::degree(c, &ctx);
    let g = picard::genus(c, &ctx)?;
    let t = c.t(&ctx);
    let mut notes = vec![PICARD_ASSUMPTION.to_string()];

    let (case, status) = if let Some(failed) = first_failed_hypothesis(c, d, &ctx) {
        (
            TheoremCase::HypothesisFailed(failed),
            ComponentStatus::Undetermined,
        )
    } else if EXCEPTIONAL_TRIPLES.contains(&(s, a, b)) {
        notes.push(
            "unique maximal family; whether it is an irreducible component is left open"
                .to_string(),
        );
        (
            TheoremCase::ExceptionalTriple,
            ComponentStatus::UniqueMaximalFamily,
        )
    } else if (s < a && (s - 2) * a < (s - 1) * b - 2) || (a, b) == (s + 1, s) {
        (
            TheoremCase::CaseII,
            ComponentStatus::GenericallySmoothComponent,
        )
    } else if (s - 1) * b - 2 <= (s - 2) * a && (s - 2) * a <= (s - 1) * b {
        let proven = s == 4 || (s == 5 && a % 4 == 0 && a / 4 >= 2 && 3 * (a / 4) == b);
        if proven {
            (TheoremCase::CaseIII, ComponentStatus::NonReducedComponent)
        } else {
            notes.push(
                "non-reduced if the map H0(N_C) -> H1(I_C(s)) is non-zero; not decided here"
                    .to_string(),
            );
            (TheoremCase::CaseIII, ComponentStatus::ConjecturedNonReduced)
        }
    } else {
        (
            TheoremCase::CaseIOnly,
            ComponentStatus::IrreducibleComponent,
        )
    };

    Ok(FamilyReport {
        s,
        a,
        b,
        d,
        g,
        t,
        dim_w: dim_w(s, d, g),
        h1_ideal_s: picard::h1_ideal(c, s, &ctx),
        case,
        status,
        critical_family: critical_family(s, a, b),
        notes,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dim_w_fixtures() {
        assert_eq!(dim_w(4, 36, 145), 178);
        assert_eq!(dim_w(5, 32, 113), 137);
        assert_eq!(dim_w(6, 50, 251), 240);
        assert_eq!(dim_w(4, 22, 57), 90);
    }

    #[test]
    fn flag_scheme_dimension() {
        assert_eq!(dim_a1_minus_a2(4, 36, 145), 178);
        assert_eq!(dim_a1_minus_a2(5, 32, 113), 135);
        assert_eq!(dim_a1_minus_a2(4, 0, 0), 33);
    }

    #[test]
    fn quartic_twelve_eight() {
        let r = classify(4, 12, 8).unwrap();
        assert_eq!((r.d, r.g, r.dim_w), (36, 145, 178));
        assert_eq!(r.case, TheoremCase::CaseIII);
        assert_eq!(r.status, ComponentStatus::NonReducedComponent);
    }

    #[test]
    fn quintic_eight_six() {
        let r = classify(5, 8, 6).unwrap();
        assert_eq!(r.case, TheoremCase::CaseIII);
        assert_eq!(r.status, ComponentStatus::NonReducedComponent);
        assert_eq!(r.dim_w, 137);
        assert_eq!(
            r.critical_family,
            Some(CriticalFamily {
                kind: CriticalFamilyKind::FamilyC,
                n: 3
            })
        );
    }

    #[test]
    fn sextic_ten_eight_is_conjectural() {
        let r = classify(6, 10, 8).unwrap();
        assert_eq!(r.case, TheoremCase::CaseIII);
        assert_eq!(r.status, ComponentStatus::ConjecturedNonReduced);
        assert_eq!(r.dim_w, 240);
        assert_eq!(r.h1_ideal_s, CohomologyAnswer::known(3));
    }

    #[test]
    fn exceptional_triples() {
        for (s, a, b) in EXCEPTIONAL_TRIPLES {
            let r = classify(s, a, b).unwrap();
            assert_eq!(r.case, TheoremCase::ExceptionalTriple);
            assert_eq!(r.status, ComponentStatus::UniqueMaximalFamily);
        }
        assert_eq!(
            critical_family(4, 6, 4),
            Some(CriticalFamily {
                kind: CriticalFamilyKind::FamilyC,
                n: 3
            })
        );
        assert_eq!(
            critical_family(4, 9, 6),
            Some(CriticalFamily {
                kind: CriticalFamilyKind::FamilyC,
                n: 4
            })
        );
    }

    #[test]
    fn s_plus_one_s_is_generically_smooth() {
        let r = classify(5, 6, 5).unwrap();
        assert_eq!(r.d, 26);
        assert_eq!(r.case, TheoremCase::CaseII);
        assert_eq!(r.status, ComponentStatus::GenericallySmoothComponent);
        assert_eq!(r.h1_ideal_s, CohomologyAnswer::known(0));
    }

    #[test]
    fn hypothesis_order() {
        let r = classify(4, 1, 1).unwrap();
        assert_eq!(
            r.case,
            TheoremCase::HypothesisFailed(FailedHypothesis::DegreeAtMostSSquared)
        );
        assert_eq!(r.status, ComponentStatus::Undetermined);
        let r = classify(4, 10, 10).unwrap();
        assert_eq!(
            r.case,
            TheoremCase::HypothesisFailed(FailedHypothesis::EqualCoefficients)
        );
        let r = classify(6, 1, 20).unwrap();
        assert_eq!(
            r.case,
            TheoremCase::HypothesisFailed(FailedHypothesis::LineCoefficientTooSmall)
        );
        // outside the nef cone: t < 0
        let r = classify(5, 30, 5).unwrap();
        assert_eq!(
            r.case,
            TheoremCase::HypothesisFailed(FailedHypothesis::NoSmoothIrreducibleMember)
        );
    }

    #[test]
    fn case_one_only_small_a() {
        // a ≤ s with t > 2: only the family statement applies
        let r = classify(6, 3, 9).unwrap();
        assert_eq!(r.case, TheoremCase::CaseIOnly);
        assert_eq!(r.status, ComponentStatus::IrreducibleComponent);
    }

    #[test]
    fn rejects_cubic_surfaces() {
        assert!(classify(3, 5, 5).is_err());
    }

    #[test]
    fn report_json_shape() {
        let r = classify(4, 1, 1).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["case"]["kind"], "HypothesisFailed");
        assert_eq!(v["case"]["reason"], "DegreeAtMostSSquared");
        let v = serde_json::to_value(classify(4, 12, 8).unwrap()).unwrap();
        assert_eq!(v["case"], serde_json::json!({"kind": "CaseIII"}));
        assert_eq!(v["status"], "NonReducedComponent");
        assert_eq!(v["dim_w"], 178);
    }
}
