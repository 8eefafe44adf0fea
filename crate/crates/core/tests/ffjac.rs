use std::sync::Arc;

use preper_core::descent::c1_32_g;
use preper_core::exactmath::{Field, FiniteField, Poly, PrimeField, QPoly, QuadraticExtension, Ring};
use preper_core::ffjac::*;
use proptest::prelude::*;

/// Reduced divisors over F_p counted from scratch: F_p-points of the odd
/// model give degree-1 classes; degree-2 classes are Galois-stable pairs
/// {P, Q} with Q != -P, counted from points over F_{p^2}.
fn hand_count(curve: &OddCurve) -> u64 {
    let p = curve.field.p();
    let ext = QuadraticExtension::new(p);
    let f2 = curve.f.map(&ext, |&c| ext.embed(c));
    let pts: Vec<_> = ext
        .elements()
        .into_iter()
        .flat_map(|x| ext.elements().into_iter().map(move |y| (x, y)))
        .filter(|(x, y)| ext.mul(y, y) == f2.eval(&ext, x))
        .collect();
    let frob = |(x, y): (_, _)| (ext.pow(&x, p), ext.pow(&y, p));
    let rational: Vec<_> = pts.iter().copied().filter(|&pt| frob(pt) == pt).collect();
    let neg = |(x, y): (_, _)| (x, ext.neg(&y));
    let mut deg2 = 0u64;
    // unordered pairs {P, Q} of affine points, P, Q not opposite, Galois stable
    for (i, &a) in pts.iter().enumerate() {
        for &b in &pts[i..] {
            if b == neg(a) && a.0 == b.0 {
                continue;
            }
            let stable = (frob(a) == a && frob(b) == b) || (frob(a) == b && frob(b) == a);
            if stable {
                deg2 += 1;
            }
        }
    }
    1 + rational.len() as u64 + deg2
}

#[test]
fn zeta_relation_matches_class_enumeration() {
    let g = c1_32_g();
    for (p, r) in [(3u64, 1u64), (7, 4)] {
        let model = odd_model_transform(&g, p, r).unwrap();
        let zeta = jacobian_order(&g, p).unwrap();
        assert_eq!(model.curve.enumerate_reduced().len() as u64, zeta, "p = {p}");
        assert_eq!(hand_count(&model.curve), zeta, "p = {p}");
    }
    assert_eq!(jacobian_order(&g, 3).unwrap(), 27);
    assert_eq!(jacobian_order(&g, 5).unwrap(), 43);
}

#[test]
fn counts_over_extension() {
    let g = c1_32_g();
    assert_eq!(point_counts(&g, 3).unwrap(), (7, 11));
    for p in [3u64, 5, 7, 11, 13] {
        assert!(frobenius_parity_holds(&g, p).unwrap());
        let (n1, n2) = point_counts(&g, p).unwrap();
        assert!(n2 >= n1);
    }
    // y^2 = x^6 + 1 over F_3
    assert_eq!(count_points(&PrimeField::new(3), &QPoly::from_ints(&[1, 0, 0, 0, 0, 0, 1])).unwrap(), 4);
}

#[test]
fn no_odd_model_at_5() {
    let g = c1_32_g();
    let fp = PrimeField::new(5);
    assert!((0..5).all(|x| g.map(&fp, |c| fp.from_rational(c).unwrap()).eval(&fp, &x) != 0));
    assert!(mumford_enumeration_order(&g, 5).is_err());
}

#[test]
fn mod3_reports() {
    let model = c1_32_mod3().unwrap();
    let d = d_tilde(&model).unwrap();
    assert_eq!(d.order(100), Some(27));
    assert!(!d.mul(9).unwrap().is_identity());
    let sign = nine_d_sign().unwrap();
    println!("9 D~ sign relative to [Q- + R+]~: {sign:?}");
    assert!(sign.is_some());
    let reds = reductions_mod3();
    let at_w: Vec<_> = reds.iter().filter(|(_, p)| *p == SexticPoint::Affine { x: 1, y: 0 }).map(|(n, _)| *n).collect();
    assert_eq!(at_w, ["S+", "S-"]);
    let torsion = torsion_triviality_report().unwrap();
    assert!(torsion.iter().all(|c| c.passed()), "{torsion:?}");
}

#[test]
fn mismatched_curves_rejected() {
    let a = c1_32_mod3().unwrap().curve;
    let b = odd_model_transform(&c1_32_g(), 7, 4).unwrap().curve;
    assert!(cantor_add(&a.identity(), &b.identity()).is_err());
    let fp = PrimeField::new(3);
    assert!(OddCurve::new(3, Poly::new(&fp, vec![0, 0, 1, 0, 0, 1])).is_err());
}

fn group() -> (Arc<OddCurve>, Vec<MumfordDivisor>) {
    let model = c1_32_mod3().unwrap();
    let all = model.curve.enumerate_reduced();
    (model.curve, all)
}

proptest! {
    #[test]
    fn group_axioms(i in 0usize..27, j in 0usize..27, k in 0usize..27) {
        let (curve, all) = group();
        let (a, b, c) = (&all[i], &all[j], &all[k]);
        prop_assert_eq!(a.add(b).unwrap(), b.add(a).unwrap());
        prop_assert_eq!(a.add(b).unwrap().add(c).unwrap(), a.add(&b.add(c).unwrap()).unwrap());
        prop_assert_eq!(a.add(&curve.identity()).unwrap(), a.clone());
        prop_assert!(a.add(&a.neg()).unwrap().is_identity());
        prop_assert_eq!(27 % a.order(27).unwrap(), 0);
    }

    #[test]
    fn transform_inverts(p_idx in 0usize..2, seed in 0u64..1000) {
        let (p, r) = [(3u64, 1u64), (7, 4)][p_idx];
        let model = odd_model_transform(&c1_32_g(), p, r).unwrap();
        let pts = model.sextic_points();
        let pt = pts[(seed as usize) % pts.len()];
        prop_assert_eq!(model.to_sextic(&model.to_odd(&pt).unwrap()).unwrap(), pt);
    }
}

#[test]
fn field_sanity() {
    let e = QuadraticExtension::new(3);
    assert_eq!(e.order(), 9);
    assert!(e.inv(&e.zero()).is_none());
}
