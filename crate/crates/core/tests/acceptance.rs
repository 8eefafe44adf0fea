//! The twelve acceptance criteria, one PASS/FAIL line each.
//!
//! Every criterion is evaluated literally. The process exits non-zero when the
//! set of failing criteria differs from `KNOWN_BLOCKED`, so a regression or an
//! unexpected fix both surface.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use preper_core::curves::{
    good_reduction_model_check, printed_pairs, rational_points_bounded, verify_birational_pair, verify_point_list,
    x1_13_discriminant_check, CurveId, ModelKind, X1_13_MODEL,
};
use preper_core::descent::{c1_32_g, discriminant_check, factorization_identities, local_743_analysis, table1_check};
use preper_core::dynamics::{catalog_entries, scan};
use preper_core::exactmath::Rational;
use preper_core::families::{family_point, family_type32, validate_family, FamilyId};
use preper_core::ffjac::{
    jacobian_order, mumford_enumeration_order, oracle_checks, torsion_triviality_report, verify_divisor_identities_mod3,
};
use preper_core::padic::padic_report;
use preper_core::report::{Check, Status};
use preper_core::suite::{graph_29_16_checks, printed_point_lists, SEARCH_COUNTS};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Criteria that fail on the printed data; see the notes of the failing checks.
const KNOWN_BLOCKED: [usize; 2] = [7, 11];

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn from_checks(checks: &[Check]) -> Self {
        let failing: Vec<String> = checks
            .iter()
            .filter(|c| !c.passed())
            .map(|c| match &c.note {
                Some(n) => format!("{} ({n})", c.id),
                None => c.id.clone(),
            })
            .collect();
        Outcome {
            ok: !checks.is_empty() && failing.is_empty(),
            detail: if failing.is_empty() { format!("{} checks", checks.len()) } else { failing.join("; ") },
        }
    }
}

fn pick(checks: Vec<Check>, ids: &[&str]) -> Vec<Check> {
    let out: Vec<Check> = checks.into_iter().filter(|c| ids.contains(&c.id.as_str())).collect();
    assert_eq!(out.len(), ids.len(), "missing checks among {ids:?}");
    out
}

fn criterion_1() -> Outcome {
    let t = Instant::now();
    let mut checks = graph_29_16_checks();
    let elapsed = t.elapsed();
    checks.push(Check::from_bool("runtime", "under one second", elapsed < Duration::from_secs(1)).with_value(format!("{elapsed:?}")));
    Outcome::from_checks(&checks)
}

fn criterion_2() -> Outcome {
    let census = scan(100).expect("scan");
    let mut checks = vec![
        Check::from_bool("scan.catalog", "every shape is in the catalog", census.out_of_catalog.is_empty()),
        Check::from_bool("scan.nine", "at most 9 points with infinity", census.over_nine.is_empty()),
    ];
    let mut unique = 0;
    for e in catalog_entries() {
        let Some(c) = e.unique_c else { continue };
        unique += 1;
        let count = census.row(&e.shape).map_or(0, |r| r.count);
        checks.push(Check::equal(format!("unique[{c}]"), "occurs once", &count, &1));
    }
    checks.push(Check::equal("unique.count", "five unique shapes", &unique, &5));
    Outcome::from_checks(&checks)
}

fn criterion_3() -> Outcome {
    let mut checks = vec![discriminant_check()];
    checks.extend(pick(good_reduction_model_check(), &["c1_32.good_model"]));
    Outcome::from_checks(&checks)
}

fn criterion_4() -> Outcome {
    let mut checks = table1_check().expect("norms");
    let mut norms: Vec<String> = checks.iter().filter_map(|c| c.value.clone()).collect();
    norms.sort();
    let mut expected: Vec<String> = ["1", "1", "1", "8", "743", "552049", "552049"].map(String::from).to_vec();
    expected.sort();
    checks.push(Check::equal("norm.multiset", "norm multiset", &norms.join(","), &expected.join(",")));
    checks.extend(pick(factorization_identities().expect("identities"), &["descent.factor_2", "descent.factor_743"]));
    Outcome::from_checks(&checks)
}

fn criterion_5() -> Outcome {
    let checks = pick(
        local_743_analysis().expect("743"),
        &[
            "descent.743.shape",
            "descent.743.g_root_1",
            "descent.743.g_root_2",
            "descent.743.legendre_33",
            "descent.743.two_minus_t",
            "descent.743.u2",
            "descent.743.two_torsion",
        ],
    );
    Outcome::from_checks(&checks)
}

fn criterion_6() -> Outcome {
    let g = c1_32_g();
    let mut checks = pick(
        torsion_triviality_report().expect("torsion"),
        &["ffjac.count_f3", "ffjac.order_f3", "ffjac.order_f5", "ffjac.torsion"],
    );
    checks.extend(oracle_checks().expect("oracle"));
    for p in [3u64, 7] {
        let zeta = jacobian_order(&g, p).expect("zeta");
        let brute = mumford_enumeration_order(&g, p).expect("enumeration");
        checks.push(Check::equal(format!("oracle.direct[{p}]"), "enumeration equals zeta order", &brute, &zeta));
    }
    checks.push(Check::equal("order[3]", "#J(F_3)", &jacobian_order(&g, 3).unwrap(), &27));
    checks.push(Check::equal("order[5]", "#J(F_5)", &jacobian_order(&g, 5).unwrap(), &43));
    Outcome::from_checks(&checks)
}

fn criterion_7() -> Outcome {
    let checks = pick(
        verify_divisor_identities_mod3().expect("mod 3"),
        &["ffjac.mod3.cyclic", "ffjac.mod3.d_order", "ffjac.mod3.nine_d", "ffjac.mod3.reductions"],
    );
    Outcome::from_checks(&checks)
}

fn criterion_8() -> Outcome {
    Outcome::from_checks(&pick(padic_report().expect("padic"), &["padic.xi.coefficients", "padic.xi.integral"]))
}

fn criterion_9() -> Outcome {
    let checks = pick(
        padic_report().expect("padic"),
        &[
            "padic.delta",
            "padic.theta_q",
            "padic.theta_q.zeros",
            "padic.theta_r",
            "padic.theta_r.zeros",
            "padic.theta_inf",
            "padic.theta_inf.zeros",
            "padic.delta.bound",
            "padic.delta.zeros",
        ],
    );
    Outcome::from_checks(&checks)
}

fn criterion_10() -> Outcome {
    let mut checks = Vec::new();
    for (id, expected) in SEARCH_COUNTS {
        let ModelKind::Hyperelliptic(g) = id.model().kind else { unreachable!() };
        let small = rational_points_bounded(&g, 1000).expect("search");
        let large = rational_points_bounded(&g, 2000).expect("search");
        checks.push(Check::equal(format!("{id}.count"), "count at H = 1000", &small.len(), &expected));
        checks.push(Check::from_bool(format!("{id}.stable"), "unchanged at H = 2000", small == large));
    }
    Outcome::from_checks(&checks)
}

fn criterion_11() -> Outcome {
    let mut checks = Vec::new();
    for pair in printed_pairs() {
        checks.extend(verify_birational_pair(&pair).expect("pair"));
    }
    checks.extend(x1_13_discriminant_check(X1_13_MODEL));
    let (_, e24_list) = printed_point_lists().into_iter().find(|(id, _)| *id == CurveId::E24).unwrap();
    let ModelKind::Weierstrass(e24) = CurveId::E24.model().kind else { unreachable!() };
    let report = verify_point_list(&e24, &e24_list, 1000).expect("e24");
    let flagged = report.iter().any(|c| {
        c.status == Status::Fail
            && c.value.as_deref() == Some("(-1,1)")
            && c.note.as_deref().is_some_and(|n| n.contains("discrepancy"))
    });
    checks.push(Check::from_bool("e24.discrepancy_reported", "(-1,1) is reported as a discrepancy", flagged));
    Outcome::from_checks(&checks)
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut checks = Vec::new();
    for family in FamilyId::ALL {
        let mut bad = Vec::new();
        for _ in 0..200 {
            let fp = if family.parameter_name().is_none() {
                family_type32()
            } else {
                let t = loop {
                    let t = Rational::new(BigInt::from(rng.gen_range(-80i64..=80)), BigInt::from(rng.gen_range(1i64..=40)));
                    if !family.excluded().contains(&t) {
                        break t;
                    }
                };
                family_point(family, Some(&t)).expect("allowed parameter")
            };
            if !validate_family(&fp).iter().all(Check::passed) {
                bad.push(fp.parameter.map_or("-".to_string(), |t| t.to_string()));
            }
        }
        checks.push(Check::from_bool(format!("{family}.random"), "200 members validate", bad.is_empty()).with_value(bad.join(",")));
        let raised = family.excluded().iter().all(|t| family_point(family, Some(t)).is_err());
        checks.push(Check::from_bool(format!("{family}.excluded"), "excluded parameters raise", raised));
    }
    Outcome::from_checks(&checks)
}

fn main() {
    let criteria: [(usize, fn() -> Outcome); 12] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
        (11, criterion_11),
        (12, criterion_12),
    ];
    let mut failing = BTreeSet::new();
    for (n, run) in criteria {
        let t = Instant::now();
        let o = run();
        if !o.ok {
            failing.insert(n);
        }
        println!("criterion {n:>2}: {} [{:.2?}] {}", if o.ok { "PASS" } else { "FAIL" }, t.elapsed(), o.detail);
    }
    let known: BTreeSet<usize> = KNOWN_BLOCKED.into_iter().collect();
    println!("failing: {failing:?}; known blocked: {known:?}");
    if failing != known {
        eprintln!("acceptance: failing criteria differ from the known-blocked set");
        std::process::exit(1);
    }
}
