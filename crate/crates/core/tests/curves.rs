use preper_core::curves::*;
use preper_core::exactmath::{int, QPoly};
use preper_core::report::Check;
use proptest::prelude::*;

fn sextic(id: CurveId) -> QPoly {
    match id.model().kind {
        ModelKind::Hyperelliptic(g) => g,
        _ => unreachable!(),
    }
}

fn elliptic(id: CurveId) -> EllipticModel {
    match id.model().kind {
        ModelKind::Weierstrass(e) => e,
        _ => unreachable!(),
    }
}

#[test]
fn printed_pairs_except_e17_verify() {
    for pair in printed_pairs() {
        let checks = verify_birational_pair(&pair).unwrap();
        if pair.name == "q17-e17" {
            assert!(checks[0].failed(), "{checks:#?}");
            // backward map is fine
            assert!(checks[1].passed(), "{checks:#?}");
        } else {
            assert!(checks.iter().all(Check::passed), "{}: {checks:#?}", pair.name);
        }
    }
}

#[test]
fn e17_with_t_term_restored_verifies() {
    let mut pair = printed_pairs().into_iter().find(|p| p.name == "q17-e17").unwrap();
    pair.forward[1] = "-(3mu^3 - 5mu^2 + mu t + 9mu + t + 1)/(2(mu-1)^3)";
    let checks = verify_birational_pair(&pair).unwrap();
    assert!(checks.iter().all(Check::passed), "{checks:#?}");
}

#[test]
fn corrupted_map_is_caught() {
    let mut pair = printed_pairs().into_iter().find(|p| p.name == "q40-e40").unwrap();
    pair.backward[0] = "(x^2+2y)/(x^2-4x+2)";
    let checks = verify_birational_pair(&pair).unwrap();
    assert!(checks.iter().any(Check::failed));
    assert!(checks.last().unwrap().failed());
}

#[test]
fn sextic_searches_are_stable() {
    for (id, count) in [(CurveId::C1_32, 8), (CurveId::X1_18, 6), (CurveId::X1_13, 6)] {
        let g = sextic(id);
        let small = rational_points_bounded(&g, 1000).unwrap();
        assert_eq!(small.len(), count, "{id}");
        assert_eq!(rational_points_bounded(&g, 2000).unwrap(), small, "{id}");
    }
}

#[test]
fn printed_elliptic_lists() {
    use EllipticPoint::Infinity as O;
    let p = |x: i64, y: i64| EllipticPoint::affine(int(x), int(y));
    for (id, list) in [
        (CurveId::E40, vec![O, p(0, 1), p(1, 0), p(0, -1)]),
        (CurveId::E15, vec![O, p(0, 0), p(-1, 0), p(0, -1)]),
        (CurveId::E17, vec![O, p(0, 0), p(1, -1), p(0, -1)]),
        (CurveId::E11, vec![O, p(0, 0), p(0, -1), p(1, 0), p(1, -1)]),
    ] {
        let checks = verify_point_list(&elliptic(id), &list, 1000).unwrap();
        assert!(checks.iter().all(Check::passed), "{id}: {checks:#?}");
    }
    let e24 = elliptic(CurveId::E24);
    let checks = verify_point_list(&e24, &[O, p(0, 0), p(1, 1), p(-1, 1)], 1000).unwrap();
    assert!(checks[0].failed());
    assert!(checks[0].note.as_deref().unwrap().contains("(-1,1)"));
    let fixed = verify_point_list(&e24, &[O, p(0, 0), p(1, 1), p(1, -1)], 1000).unwrap();
    assert!(fixed.iter().all(Check::passed), "{fixed:#?}");
}

#[test]
fn x1_13_printed_identity_is_a_shift() {
    let checks = x1_13_discriminant_check(X1_13_MODEL);
    assert!(checks[0].failed());
    assert!(checks[0].note.is_some());
    assert!(checks[1].passed());
    // the printed sextic is the curve itself: its search gives the same six points
    let d = x1_13_discriminant(X1_13_MODEL).unwrap();
    assert_eq!(rational_points_bounded(&d, 300).unwrap().len(), 6);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]
    #[test]
    fn search_results_lie_on_curve_and_are_involution_stable(i in 0usize..8, h in 1u64..40) {
        let id = [CurveId::C1_32, CurveId::X1_18, CurveId::X1_13, CurveId::Q24, CurveId::Q40, CurveId::Q15, CurveId::Q17, CurveId::Q11][i];
        let g = sextic(id);
        let pts = rational_points_bounded(&g, h).unwrap();
        for p in &pts {
            prop_assert!(p.lies_on(&g));
            prop_assert!(pts.contains(&p.involution()));
        }
    }
}
