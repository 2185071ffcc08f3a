use linesurf::audit::{audit_case, AuditCase, AuditTranscript, RowStatus};

fn computed(t: &AuditTranscript, claim: &str) -> i128 {
    t.rows
        .iter()
        .find(|r| r.claim == claim)
        .unwrap_or_else(|| panic!("{}: no row {claim:?}", t.case))
        .computed
}

#[test]
fn every_case_is_clean_and_serializes() {
    for case in AuditCase::ALL {
        let t = audit_case(case).unwrap();
        assert!(
            t.is_clean(),
            "{case}: {:?}",
            t.mismatches().collect::<Vec<_>>()
        );
        assert_eq!(t.case, case);
        let json = serde_json::to_string(&t).unwrap();
        let back: AuditTranscript = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert_eq!(audit_case(case).unwrap(), t);
    }
}

#[test]
fn quartic_12_8_chain() {
    let t = audit_case(AuditCase::Q12_8).unwrap();
    assert_eq!(computed(&t, "χ(I_X(5))"), 20);
    assert_eq!(computed(&t, "χ(I_X(8))"), 21);
    assert_eq!(computed(&t, "dim H(d,g) at X = 4d + 2h¹(O_X(6))"), 164);
    let ends: Vec<_> = t.conclusions.iter().map(|c| (c.lhs, c.rhs)).collect();
    assert_eq!(ends, vec![(164, 178), (163, 178)]);
}

#[test]
fn quartic_7_5_chain() {
    let t = audit_case(AuditCase::Q7_5).unwrap();
    assert_eq!(computed(&t, "degree after (5,4) linkage"), 18);
    assert_eq!(computed(&t, "genus after (5,4) linkage"), 39);
    assert_eq!(computed(&t, "h¹(I_C(4))"), 2);
    let ends: Vec<_> = t.conclusions.iter().map(|c| (c.lhs, c.rhs)).collect();
    assert_eq!(ends, vec![(22, 23), (55, 57), (90, 90), (89, 90)]);
}

#[test]
fn quintic_8_6_chain() {
    let t = audit_case(AuditCase::Q8_6S5).unwrap();
    assert_eq!(computed(&t, "genus after (6,5) linkage"), 89);
    assert_eq!(computed(&t, "dim A¹ − dim A²"), 135);
    assert_eq!(
        t.conclusions.last().map(|c| (c.lhs, c.rhs)),
        Some((136, 137))
    );
}

#[test]
fn sextic_10_8_chain() {
    let t = audit_case(AuditCase::Q10_8S6).unwrap();
    assert_eq!(computed(&t, "h⁰(E(7))"), 231);
    assert_eq!(
        t.conclusions.last().map(|c| (c.lhs, c.rhs)),
        Some((235, 240))
    );
}

#[test]
fn cubic_case_keeps_its_discrepancy() {
    let t = audit_case(AuditCase::Cubic57_315).unwrap();
    let flagged: Vec<_> = t
        .rows
        .iter()
        .filter(|r| r.status == RowStatus::Discrepancy)
        .collect();
    assert_eq!(flagged.len(), 1);
    assert_eq!((flagged[0].computed, flagged[0].expected), (278, Some(285)));
    assert!(flagged[0].note.is_some());
    assert!(t.conclusions.iter().all(|c| c.holds && c.rhs == 390));
}
