//! Named verification suites run by `preper verify`.

use std::fmt;
use std::str::FromStr;

use crate::curves::{
    good_reduction_model_check, printed_pairs, rational_points_bounded, verify_birational_pair, verify_point_list,
    x1_13_discriminant_check, CurveId, EllipticPoint, ModelKind, X1_13_MODEL,
};
use crate::descent::descent_report;
use crate::dynamics::{
    catalog_entries, graph_shape, orbit_prefix, preper_points, scan, OrbitClass, QuadMap,
};
use crate::error::{Error, Result};
use crate::exactmath::{int, parse_rational, rat, Rational};
use crate::families::{check_forbidden_cycles, family_point, validate_family, FamilyId};
use crate::ffjac::jacobian_report;
use crate::padic::padic_report;
use crate::report::{Check, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    All,
    Theorems,
    Curves,
    Descent,
    Jacobian,
    Padic,
}

impl Suite {
    pub const ALL: [Suite; 6] = [Suite::All, Suite::Theorems, Suite::Curves, Suite::Descent, Suite::Jacobian, Suite::Padic];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Theorems => "theorems",
            Suite::Curves => "curves",
            Suite::Descent => "descent",
            Suite::Jacobian => "jacobian",
            Suite::Padic => "padic",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| Error::Parse(s.to_string()))
    }
}

/// Knobs for the expensive parts of the suites.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub scan_height: u64,
    pub search_height: u64,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions { scan_height: 30, search_height: 1000 }
    }
}

pub fn run_suite(suite: Suite, opts: SuiteOptions) -> Result<Vec<Check>> {
    Ok(match suite {
        Suite::All => {
            let mut out = theorems_report(opts.scan_height)?;
            out.extend(curves_report(opts.search_height)?);
            out.extend(descent_report()?);
            out.extend(jacobian_report()?);
            out.extend(padic_report()?);
            out
        }
        Suite::Theorems => theorems_report(opts.scan_height)?,
        Suite::Curves => curves_report(opts.search_height)?,
        Suite::Descent => descent_report()?,
        Suite::Jacobian => jacobian_report()?,
        Suite::Padic => padic_report()?,
    })
}

/// Checks on PrePer(z^2 - 29/16, Q).
pub fn graph_29_16_checks() -> Vec<Check> {
    let c = rat(-29, 16);
    let f = QuadMap::new(c.clone());
    let g = preper_points(&f);
    let type32: Vec<String> = g
        .points_where(|k| *k == OrbitClass::Preperiodic { period: 3, tail: 2 })
        .into_iter()
        .map(|x| x.to_string())
        .collect();
    let prefix: Vec<String> = orbit_prefix(&f, &rat(3, 4), 5).iter().map(|x| x.to_string()).collect();
    let periodic_other = g.points_where(|k| matches!(k, OrbitClass::Periodic { period } if *period != 3)).len();
    vec![
        Check::equal("dyn.c-29/16.size", "8 finite preperiodic points, 9 with infinity", &g.len(), &8)
            .with_value(format!("{} finite, {} with infinity", g.len(), g.count_with_infinity())),
        Check::from_bool(
            "dyn.c-29/16.cycle",
            "one 3-cycle and no other periodic points",
            g.count_periodic(3) == 3 && periodic_other == 0,
        ),
        Check::equal("dyn.c-29/16.type31", "three points of type 3_1", &g.count_type(3, 1), &3),
        Check::equal("dyn.c-29/16.type32", "the type 3_2 points are -3/4 and 3/4", &type32.join(", "), &"-3/4, 3/4".to_string())
            .with_anchor("unique graph with a point of type 3_2"),
        Check::equal(
            "dyn.c-29/16.orbit",
            "orbit of 3/4 starts 3/4, -5/4, -1/4, -7/4, 5/4",
            &prefix.join(", "),
            &"3/4, -5/4, -1/4, -7/4, 5/4".to_string(),
        ),
    ]
}

pub fn theorems_report(scan_height: u64) -> Result<Vec<Check>> {
    let mut out = graph_29_16_checks();
    for e in catalog_entries() {
        let Some(c) = e.unique_c else { continue };
        let shape = graph_shape(&preper_points(&QuadMap::new(parse_rational(c)?)));
        out.push(
            Check::equal(format!("dyn.unique[{c}]"), format!("c = {c} realizes \"{}\"", e.key), &shape, &e.shape)
                .with_anchor("unique graphs"),
        );
    }
    let params: Vec<Rational> = [rat(2, 1), rat(3, 1), rat(1, 2), rat(-1, 3), rat(5, 7), rat(-7, 5)].to_vec();
    for fam in FamilyId::ALL {
        let mut checked = 0;
        let mut failures = Vec::new();
        let points: Vec<_> = if fam.parameter_name().is_some() {
            params.iter().filter_map(|t| family_point(fam, Some(t)).ok()).collect()
        } else {
            vec![family_point(fam, None)?]
        };
        for fp in &points {
            checked += 1;
            let mut checks = validate_family(fp);
            checks.push(check_forbidden_cycles(fp));
            failures.extend(checks.into_iter().filter(|c| c.failed()).map(|c| c.id));
        }
        let mut check = Check::from_bool(
            format!("family.{fam}"),
            format!("{checked} members of family {fam} validate"),
            checked > 0 && failures.is_empty(),
        );
        if !failures.is_empty() {
            check = check.with_note(failures.join(", "));
        }
        out.push(check);
    }
    let census = scan(scan_height)?;
    out.push(
        Check::from_bool(
            format!("dyn.scan[{scan_height}]"),
            format!("height {scan_height}: every graph lies in the derived catalog and has at most 9 points"),
            census.is_clean(),
        )
        .with_value(format!("{} parameters, {} shapes", census.total, census.rows.len())),
    );
    for e in catalog_entries() {
        let Some(c) = e.unique_c else { continue };
        let c = parse_rational(c)?;
        if crate::exactmath::rational::height(&c) > scan_height.into() {
            continue;
        }
        let count = census.row(&e.shape).map_or(0, |r| r.count);
        out.push(Check::equal(
            format!("dyn.scan[{scan_height}].unique[{c}]"),
            format!("shape \"{}\" occurs once", e.key),
            &count,
            &1,
        ));
    }
    Ok(out)
}

/// The printed point lists of the five elliptic curves, as transcribed.
pub fn printed_point_lists() -> Vec<(CurveId, Vec<EllipticPoint>)> {
    use EllipticPoint::Infinity as O;
    let p = |x: i64, y: i64| EllipticPoint::affine(int(x), int(y));
    vec![
        (CurveId::E11, vec![O, p(0, 0), p(0, -1), p(1, 0), p(1, -1)]),
        (CurveId::E15, vec![O, p(0, 0), p(-1, 0), p(0, -1)]),
        (CurveId::E17, vec![O, p(0, 0), p(1, -1), p(0, -1)]),
        (CurveId::E24, vec![O, p(0, 0), p(1, 1), p(-1, 1)]),
        (CurveId::E40, vec![O, p(0, 1), p(1, 0), p(0, -1)]),
    ]
}

/// Expected number of rational points found by bounded search.
pub const SEARCH_COUNTS: [(CurveId, usize); 3] = [(CurveId::C1_32, 8), (CurveId::X1_18, 6), (CurveId::X1_13, 6)];

pub fn curves_report(search_height: u64) -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for pair in printed_pairs() {
        out.extend(verify_birational_pair(&pair)?);
    }
    out.extend(x1_13_discriminant_check(X1_13_MODEL));
    out.extend(good_reduction_model_check());
    for (id, list) in printed_point_lists() {
        let ModelKind::Weierstrass(e) = id.model().kind else { unreachable!("elliptic ids") };
        out.extend(verify_point_list(&e, &list, search_height)?);
    }
    for (id, expected) in SEARCH_COUNTS {
        let ModelKind::Hyperelliptic(g) = id.model().kind else { unreachable!("sextic ids") };
        let small = rational_points_bounded(&g, search_height)?;
        let large = rational_points_bounded(&g, 2 * search_height)?;
        let mut c = Check::equal(
            format!("{id}.search"),
            format!("{expected} rational points of height at most {search_height}, unchanged at {}", 2 * search_height),
            &small.len(),
            &expected,
        )
        .with_value(small.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(", "));
        if small != large {
            c.status = Status::Fail;
            c = c.with_note(format!("{} points at height {}", large.len(), 2 * search_height));
        }
        out.push(c);
    }
    Ok(out)
}
