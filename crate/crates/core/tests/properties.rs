use linesurf::arith::binom3;
use linesurf::audit::{linkage_transform, null_correlation_chi, CurveNumerics};
use linesurf::classifier::{classify, dim_w, ComponentStatus, TheoremCase};
use linesurf::cubic::{
    boundaries, cohomology_flags, enumerate_tuples, tuple_invariants, SevenTuple,
};
use linesurf::maxgenus::{c_range_numerator, max_genus};
use linesurf::picard::{
    chi_surface, genus, genus_by_adjunction, h1_negative_t_table, h1_vanishing_table,
    is_base_point_free, is_nef, DivisorClass, SurfaceContext,
};
use proptest::prelude::*;

fn contexts() -> impl Iterator<Item = SurfaceContext> {
    (4..=10).map(|s| SurfaceContext::new(s).unwrap())
}

#[test]
fn genus_formula_agrees_with_adjunction_on_the_box() {
    for ctx in contexts() {
        for a in -50..=50 {
            for b in -50..=50 {
                let c = DivisorClass::new(a, b);
                assert_eq!(
                    genus(c, &ctx),
                    genus_by_adjunction(c, &ctx),
                    "s={} {c}",
                    ctx.degree()
                );
                assert!(genus(c, &ctx).is_ok());
            }
        }
    }
}

#[test]
fn chi_of_hyperplane_multiples_matches_the_ambient_sequence() {
    // 0 → O_P³(n − s) → O_P³(n) → O_S(n) → 0
    for ctx in contexts() {
        let s = ctx.degree();
        for n in -20..=20 {
            let expected = binom3(n + 3) - binom3(n - s + 3);
            assert_eq!(
                chi_surface(ctx.hyperplane() * n, &ctx),
                Ok(expected),
                "s={s} n={n}"
            );
        }
    }
}

#[test]
fn cohomology_tables_agree_where_they_overlap() {
    let mut overlaps = 0;
    for ctx in contexts() {
        for a in -60..=60 {
            for b in -60..=60 {
                let c = DivisorClass::new(a, b);
                if let (Some(x), Some(y)) =
                    (h1_vanishing_table(c, &ctx), h1_negative_t_table(c, &ctx))
                {
                    assert_eq!(x, y, "s={} {c}", ctx.degree());
                    overlaps += 1;
                }
            }
        }
    }
    assert!(overlaps > 0);
}

#[test]
fn nef_iff_base_point_free() {
    for ctx in contexts() {
        for a in -60..=60 {
            for b in -60..=60 {
                let c = DivisorClass::new(a, b);
                assert_eq!(
                    is_nef(c, &ctx),
                    is_base_point_free(c, &ctx),
                    "s={} {c}",
                    ctx.degree()
                );
            }
        }
    }
}

#[test]
fn max_genus_is_non_increasing_in_s() {
    for d in 1..=200 {
        for s in 2..12 {
            let (Ok(lo), Ok(hi)) = (max_genus(d, s), max_genus(d, s + 1)) else {
                panic!("unexpected error at d={d}, s={s}");
            };
            if let (Some(x), Some(y)) = (lo.exact(), hi.exact()) {
                assert!(x >= y, "G({d},{s}) = {x} < G({d},{}) = {y}", s + 1);
            }
        }
    }
}

#[test]
fn classifier_partitions_the_grid() {
    for s in 4..=10 {
        for a in 0..=100 {
            for b in 0..=100 {
                let r = classify(s, a, b).unwrap();
                let ctx = SurfaceContext::new(s).unwrap();
                assert_eq!(r.dim_w, dim_w(s, r.d, r.g));
                assert_eq!(r.d, a + (s - 1) * b);
                match r.case {
                    TheoremCase::HypothesisFailed(_) => {
                        assert_eq!(r.status, ComponentStatus::Undetermined)
                    }
                    TheoremCase::ExceptionalTriple => {
                        assert_eq!(r.status, ComponentStatus::UniqueMaximalFamily)
                    }
                    TheoremCase::CaseII => {
                        assert_eq!(r.status, ComponentStatus::GenericallySmoothComponent);
                        assert_eq!(r.h1_ideal_s.value(), Some(0), "({s},{a},{b})");
                    }
                    TheoremCase::CaseIII => {
                        assert!(matches!(
                            r.status,
                            ComponentStatus::NonReducedComponent
                                | ComponentStatus::ConjecturedNonReduced
                        ));
                        assert!(r.h1_ideal_s.value().is_some_and(|v| v > 0), "({s},{a},{b})");
                        assert!((0..=2).contains(&r.t));
                    }
                    TheoremCase::CaseIOnly => {
                        assert_eq!(r.status, ComponentStatus::IrreducibleComponent)
                    }
                }
                if r.passes_gate() {
                    assert!(r.d > s * s && a != b && a > s - 4);
                    assert!(r.status.is_component() || r.case == TheoremCase::ExceptionalTriple);
                    assert!(linesurf::picard::has_smooth_irreducible_member(
                        DivisorClass::new(a, b),
                        &ctx
                    ));
                }
            }
        }
    }
}

#[test]
fn null_correlation_chi_is_integral_and_antisymmetric() {
    for t in -1000..=1000 {
        assert!(null_correlation_chi(t).is_ok(), "t={t}");
    }
    for t in -50..=50 {
        assert_eq!(
            null_correlation_chi(t).unwrap() + null_correlation_chi(-4 - t).unwrap(),
            0,
            "t={t}"
        );
    }
}

#[test]
fn unobstructed_and_nonzero_h1_regions_are_disjoint() {
    for d in 14i128..=40 {
        let top = (d * d).div_euclid(6);
        for g in 3 * d - 18..=top {
            for t in enumerate_tuples(d, g, Some(&[1, 2])) {
                let f = cohomology_flags(&t).unwrap();
                assert_eq!(f.h1_3_nonzero_and_lin_normal, Some(true));
                assert!(!f.unobstructed_forced, "{t} has (d,g)=({d},{g})");
            }
        }
    }
}

#[test]
fn both_multiplicities_witness_the_inner_range() {
    for d in 17i128..=40 {
        for g in 0..=d * d / 8 {
            if !(boundaries::at_least_g2(d, g) && boundaries::at_most_big_g1(d, g)) {
                continue;
            }
            for m6 in [1, 2] {
                assert!(
                    !enumerate_tuples(d, g, Some(&[m6])).is_empty(),
                    "no m6={m6} tuple at ({d},{g})"
                );
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn genus_agrees_with_adjunction_for_large_classes(
        s in 4i128..=1000,
        a in -100_000i128..=100_000,
        b in -100_000i128..=100_000,
    ) {
        let ctx = SurfaceContext::new(s).unwrap();
        let c = DivisorClass::new(a, b);
        prop_assert_eq!(genus(c, &ctx), genus_by_adjunction(c, &ctx));
    }

    #[test]
    fn riemann_roch_links_chi_and_genus(s in 4i128..=60, a in -200i128..=200, b in -200i128..=200) {
        // 2(χ(O_S(C)) − χ(O_S)) = C² − C·K and 2g − 2 = C² + C·K
        let ctx = SurfaceContext::new(s).unwrap();
        let c = DivisorClass::new(a, b);
        let k = ctx.canonical();
        let c2 = linesurf::picard::intersect(c, c, &ctx);
        let ck = linesurf::picard::intersect(c, k, &ctx);
        prop_assert_eq!(2 * (chi_surface(c, &ctx).unwrap() - ctx.chi_structure_sheaf()), c2 - ck);
        prop_assert_eq!(2 * genus(c, &ctx).unwrap() - 2, c2 + ck);
    }

    #[test]
    fn c_range_numerator_is_divisible(s in 2i128..=2000, extra in 1i128..=1_000_000) {
        let d = s * (s - 1) + extra;
        prop_assert_eq!(c_range_numerator(d, s) % (2 * s), 0);
        prop_assert!(max_genus(d, s).unwrap().exact().is_some());
    }

    #[test]
    fn linking_twice_is_the_identity(dz in 1i128..=500, gz in -500i128..=5000, f1 in 1i128..=60, f2 in 1i128..=60) {
        let z = CurveNumerics { d: dz, g: gz };
        match linkage_transform(z, f1, f2) {
            Ok(x) => prop_assert_eq!(linkage_transform(x, f1, f2).unwrap(), z),
            Err(_) => prop_assert!(f1 * f2 <= dz),
        }
    }

    #[test]
    fn enumerated_tuples_round_trip(
        raw in proptest::array::uniform6(0i128..=7),
        slack in 0i128..=6,
    ) {
        let mut m = raw;
        m.sort_unstable_by(|x, y| y.cmp(x));
        let t = SevenTuple::new((m[0] + m[1] + m[2] + slack).max(1), m).unwrap();
        let (d, g) = tuple_invariants(&t).unwrap();
        let found = enumerate_tuples(d, g, None);
        prop_assert!(found.contains(&t), "{} missing for ({}, {})", t, d, g);
        for u in &found {
            prop_assert_eq!(tuple_invariants(u).unwrap(), (d, g));
        }
        prop_assert!(found.windows(2).all(|w| (w[0].delta, std::cmp::Reverse(w[0].m)) < (w[1].delta, std::cmp::Reverse(w[1].m))));
    }
}
