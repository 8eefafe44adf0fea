use num_bigint::BigInt;
use preper_core::descent::c1_32_g;
use preper_core::exactmath::{int, rat, Rational};
use preper_core::padic::*;
use proptest::prelude::*;

/// xi(t) one coefficient at a time: the t^n coefficient of g(xi) is
/// g'(1) c_n plus terms in c_1..c_{n-1}, so c_n is found by evaluating with
/// c_n = 0 and dividing the defect by g'(1) = 16.
fn xi_by_recursion(order: usize) -> Vec<Rational> {
    let g = [1i64, 2, 5, 2, -2, 0, 1];
    let mut c = vec![int(1)];
    for n in 1..=order {
        c.push(int(0));
        // t^n coefficient of g(sum c_k t^k)
        let mut pw = vec![int(1)];
        let mut gx = vec![int(0); n + 1];
        for &gk in &g {
            for (i, v) in pw.iter().enumerate() {
                gx[i] += v * int(gk);
            }
            let mut next = vec![int(0); n + 1];
            for (i, a) in pw.iter().enumerate() {
                for (j, b) in c.iter().enumerate() {
                    if i + j <= n {
                        next[i + j] += a * b;
                    }
                }
            }
            pw = next;
        }
        let target = match n {
            1 => int(-6),
            2 => int(1),
            _ => int(0),
        };
        c[n] = (target - &gx[n]) / int(16);
    }
    c
}

#[test]
fn xi_matches_printed_and_recursion() {
    let g = c1_32_g();
    let xi = branch_series(&g, &int(1), &int(-3), 12).unwrap();
    assert_eq!(xi.coeffs[..5], printed_xi()[..]);
    assert_eq!(xi.coeffs, xi_by_recursion(12));
    assert!(xi.integral_at(3));
    for k in 1..=12 {
        assert!(xi.consistent_to(&g, &int(-3), k));
    }
    assert_eq!(xi.coeffs[1], rat(-3, 8));
    assert_eq!(xi.eval_mod(6, 3, 10), Some(BigInt::from(1)));
}

#[test]
fn delta_from_printed_inputs() {
    let [a, b] = printed_l();
    let d = chabauty_determinant(&a, &b, &PadicValue::new(3, 3, 4), &PadicValue::new(75, 3, 4)).unwrap();
    assert_eq!(d.residues(), printed_delta().residues());
    assert_eq!(strassman_bound(&d), StrassmanBound::AtMost(3));
    // 75 (66n + 54n^3) - 3 (66n + 27n^2 + 72n^3) over Z, then mod 81
    let raw = [0i64, 75 * 66 - 3 * 66, -3 * 27, 75 * 54 - 3 * 72];
    let expect: Vec<BigInt> = raw.iter().map(|v| BigInt::from(v.rem_euclid(81))).collect();
    assert_eq!(d.residues(), expect);
}

#[test]
fn theta_bounds_and_inventories() {
    for (_, theta) in printed_thetas() {
        assert_eq!(strassman_bound(&theta), StrassmanBound::AtMost(1));
        assert!(known_zero_accounting(1, &[0]).unwrap().exhausted);
    }
    assert!(known_zero_accounting(3, &[0, 1, 2]).unwrap().exhausted);
    assert!(known_zero_accounting(1, &[0, 5]).is_err());
}

#[test]
fn report_is_clean() {
    let r = padic_report().unwrap();
    assert!(r.iter().all(|c| c.passed()), "{r:#?}");
}

fn series(p: u64, values: Vec<i64>, prec: u32, floor: u32) -> PadicSeries {
    PadicSeries::from_congruence(p, &values, prec, floor)
}

proptest! {
    #[test]
    fn determinant_ignores_lifts(k in prop::collection::vec(-5i64..5, 10)) {
        let [a, b] = printed_l();
        let lift = |s: &PadicSeries, ks: &[i64]| {
            let vals: Vec<i64> = s.residues().iter().zip(ks).map(|(r, k)| i64::try_from(r).unwrap() + 81 * k).collect();
            series(3, vals, 4, 4)
        };
        let base = chabauty_determinant(&a, &b, &PadicValue::new(3, 3, 4), &PadicValue::new(75, 3, 4)).unwrap();
        let moved = chabauty_determinant(
            &lift(&a, &k[0..4]),
            &lift(&b, &k[4..8]),
            &PadicValue::new(3 + 81 * k[8], 3, 4),
            &PadicValue::new(75 + 81 * k[9], 3, 4),
        ).unwrap();
        prop_assert_eq!(base.residues(), moved.residues());
    }

    #[test]
    fn raising_floor_never_raises_bound(vals in prop::collection::vec(-40i64..40, 1..6), prec in 1u32..4, floor in 0u32..5) {
        let lo = strassman_bound(&series(3, vals.clone(), prec, floor));
        let hi = strassman_bound(&series(3, vals, prec, floor + 1));
        if let (StrassmanBound::AtMost(a), StrassmanBound::AtMost(b)) = (lo, hi) {
            prop_assert!(b <= a);
        }
        if let StrassmanBound::AtMost(_) = lo {
            prop_assert!(hi != StrassmanBound::Indeterminate);
        }
    }

    #[test]
    fn refinement_keeps_answer(vals in prop::collection::vec(-40i64..40, 1..6), extra in prop::collection::vec(0i64..3, 6), prec in 1u32..3, floor in 0u32..5) {
        let coarse = series(3, vals.clone(), prec, floor);
        let m = 3i64.pow(prec);
        let fine_vals: Vec<i64> = vals.iter().zip(&extra).map(|(v, e)| v + m * e).collect();
        let fine = series(3, fine_vals, prec + 1, floor);
        for (c, f) in coarse.coeffs.iter().zip(&fine.coeffs) {
            prop_assert!(refines(c, f, 3));
        }
        if let StrassmanBound::AtMost(n) = strassman_bound(&coarse) {
            prop_assert_eq!(strassman_bound(&fine), StrassmanBound::AtMost(n));
        }
    }
}
