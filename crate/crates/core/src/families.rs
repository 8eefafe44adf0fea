//! Parametrized families of z^2 + c with prescribed rational preperiodic points.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::dynamics::{orbit_classify, preper_points, OrbitClass, QuadMap};
use crate::error::{Error, Result};
use crate::exactmath::rational::{int, rat, Rational};
use crate::report::{Check, Status};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FamilyId {
    P1,
    P2,
    P3,
    P1and2,
    T12,
    T22,
    T32,
}

impl FamilyId {
    pub const ALL: [FamilyId; 7] =
        [FamilyId::P1, FamilyId::P2, FamilyId::P3, FamilyId::P1and2, FamilyId::T12, FamilyId::T22, FamilyId::T32];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::P1 => "p1",
            FamilyId::P2 => "p2",
            FamilyId::P3 => "p3",
            FamilyId::P1and2 => "p1and2",
            FamilyId::T12 => "t12",
            FamilyId::T22 => "t22",
            FamilyId::T32 => "t32",
        }
    }

    /// Conventional name of the parameter.
    pub fn parameter_name(self) -> Option<&'static str> {
        match self {
            FamilyId::P1 => Some("rho"),
            FamilyId::P2 => Some("sigma"),
            FamilyId::P3 => Some("tau"),
            FamilyId::P1and2 => Some("mu"),
            FamilyId::T12 => Some("eta"),
            FamilyId::T22 => Some("nu"),
            FamilyId::T32 => None,
        }
    }

    /// Rational parameter values the family excludes.
    pub fn excluded(self) -> Vec<Rational> {
        match self {
            FamilyId::P1 | FamilyId::T32 => vec![],
            FamilyId::P2 => vec![int(0)],
            FamilyId::P3 => vec![int(-1), int(0)],
            FamilyId::P1and2 | FamilyId::T22 => vec![int(-1), int(0), int(1)],
            FamilyId::T12 => vec![int(-1), int(1)],
        }
    }

    /// Cycle lengths that can not occur together with this family's points.
    pub fn forbidden_periods(self) -> &'static [usize] {
        match self {
            FamilyId::P1 | FamilyId::P2 | FamilyId::P1and2 => &[3],
            FamilyId::P3 | FamilyId::T32 => &[1, 2],
            FamilyId::T12 => &[2, 3],
            FamilyId::T22 => &[1, 3],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown family {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyPoint {
    pub family: FamilyId,
    pub parameter: Option<Rational>,
    pub c: Rational,
    /// Auxiliary quantities such as rho and sigma, by name.
    pub aux: Vec<(&'static str, Rational)>,
    pub promised: Vec<(Rational, OrbitClass)>,
}

impl FamilyPoint {
    pub fn aux(&self, name: &str) -> Option<&Rational> {
        self.aux.iter().find(|(n, _)| *n == name).map(|(_, v)| v)
    }
}

fn fixed(x: Rational) -> (Rational, OrbitClass) {
    (x, OrbitClass::Periodic { period: 1 })
}

fn period(x: Rational, m: usize) -> (Rational, OrbitClass) {
    (x, OrbitClass::Periodic { period: m })
}

fn pair(x: Rational, m: usize, n: usize) -> Vec<(Rational, OrbitClass)> {
    let class = OrbitClass::Preperiodic { period: m, tail: n };
    if x.is_zero() {
        vec![(x, class)]
    } else {
        vec![(-x.clone(), class), (x, class)]
    }
}

/// Evaluates a family's formulas without the exclusion check. Returns None
/// when a denominator vanishes.
pub fn raw_formula(family: FamilyId, t: &Rational) -> Option<FamilyPoint> {
    let half = rat(1, 2);
    let one = Rational::one();
    let t2 = t * t;
    let nonzero = |d: Rational| if d.is_zero() { None } else { Some(d) };
    let (c, aux, promised) = match family {
        FamilyId::P1 => {
            let c = rat(1, 4) - &t2;
            let mut pts = vec![fixed(&half - t)];
            if !t.is_zero() {
                pts.push(fixed(&half + t));
            }
            (c, vec![("rho", t.clone())], pts)
        }
        FamilyId::P2 => {
            let c = rat(-3, 4) - &t2;
            (c, vec![("sigma", t.clone())], vec![period(-&half - t, 2), period(-&half + t, 2)])
        }
        FamilyId::P3 => {
            let den = nonzero(int(2) * t * (t + &one))?;
            let t3 = &t2 * t;
            let c_num = &t3 * &t3 + int(2) * &t2 * &t3 + int(4) * &t2 * &t2 + int(8) * &t3 + int(9) * &t2 + int(4) * t + &one;
            let c = -c_num / (&den * &den);
            let x1 = (&t3 + int(2) * &t2 + t + &one) / &den;
            let x2 = (&t3 - t - &one) / &den;
            let x3 = -(&t3 + int(2) * &t2 + int(3) * t + &one) / &den;
            (c, vec![], vec![period(x1, 3), period(x2, 3), period(x3, 3)])
        }
        FamilyId::P1and2 => {
            let den = nonzero(&t2 - &one)?;
            let c = -(int(3) * &t2 * &t2 + int(10) * &t2 + int(3)) / (int(4) * &den * &den);
            let rho = -(&t2 + &one) / &den;
            let sigma = int(2) * t / &den;
            let pts = vec![
                fixed(&half - &rho),
                fixed(&half + &rho),
                period(-&half - &sigma, 2),
                period(-&half + &sigma, 2),
            ];
            (c, vec![("rho", rho), ("sigma", sigma)], pts)
        }
        FamilyId::T12 => {
            let den = nonzero(&t2 - &one)?;
            let c = int(-2) * (&t2 + &one) / (&den * &den);
            let rho = -(&t2 + int(3)) / (int(2) * &den);
            (c, vec![("rho", rho)], pair(int(2) * t / &den, 1, 2))
        }
        FamilyId::T22 => {
            let den = nonzero(&t2 - &one)?;
            let t3 = &t2 * t;
            let c = (-(&t2 * &t2) - int(2) * &t3 - int(2) * &t2 + int(2) * t - &one) / (&den * &den);
            let sigma = (&t2 + int(4) * t - &one) / (int(2) * &den);
            (c, vec![("sigma", sigma)], pair((&t2 + &one) / &den, 2, 2))
        }
        FamilyId::T32 => (rat(-29, 16), vec![], pair(rat(3, 4), 3, 2)),
    };
    Some(FamilyPoint { family, parameter: Some(t.clone()), c, aux, promised })
}

fn checked(family: FamilyId, t: &Rational) -> Result<FamilyPoint> {
    if family.excluded().contains(t) {
        return Err(Error::ExcludedParameter { family: family.name(), value: t.to_string() });
    }
    Ok(raw_formula(family, t).expect("denominators vanish only at excluded values"))
}

/// c = 1/4 - rho^2 with fixed points 1/2 +- rho.
pub fn family_period1(rho: &Rational) -> FamilyPoint {
    checked(FamilyId::P1, rho).expect("no excluded values")
}

/// c = -3/4 - sigma^2 with the 2-cycle -1/2 +- sigma.
pub fn family_period2(sigma: &Rational) -> Result<FamilyPoint> {
    checked(FamilyId::P2, sigma)
}

/// The rational 3-cycle x1 -> x2 -> x3 -> x1.
pub fn family_period3(tau: &Rational) -> Result<FamilyPoint> {
    checked(FamilyId::P3, tau)
}

/// Both rational fixed points and a rational 2-cycle.
pub fn family_period1and2(mu: &Rational) -> Result<FamilyPoint> {
    checked(FamilyId::P1and2, mu)
}

/// Points +-2 eta/(eta^2 - 1) of type 1_2.
pub fn family_type12(eta: &Rational) -> Result<FamilyPoint> {
    checked(FamilyId::T12, eta)
}

/// Points +-(nu^2 + 1)/(nu^2 - 1) of type 2_2.
pub fn family_type22(nu: &Rational) -> Result<FamilyPoint> {
    checked(FamilyId::T22, nu)
}

/// The unique parameter with points of type 3_2.
pub fn family_type32() -> FamilyPoint {
    let mut fp = raw_formula(FamilyId::T32, &Rational::zero()).expect("constant family");
    fp.parameter = None;
    fp
}

/// Dispatches on the family id; `param` is ignored for t32 and required otherwise.
pub fn family_point(family: FamilyId, param: Option<&Rational>) -> Result<FamilyPoint> {
    match (family, param) {
        (FamilyId::T32, _) => Ok(family_type32()),
        (_, Some(t)) => checked(family, t),
        (_, None) => Err(Error::InvalidInput(format!("family {family} needs a parameter"))),
    }
}

/// Re-derives every promised orbit class and every identity between c and
/// the auxiliary parameters.
pub fn validate_family(fp: &FamilyPoint) -> Vec<Check> {
    let f = QuadMap::new(fp.c.clone());
    let tag = fp.family.name();
    let mut out = Vec::new();
    if let Some(t) = &fp.parameter {
        out.push(Check::from_bool(
            format!("{tag}.admissible"),
            format!("parameter {t} is not excluded"),
            !fp.family.excluded().contains(t),
        ));
    }
    for (x, class) in &fp.promised {
        let got = orbit_classify(&f, x);
        out.push(
            Check::from_bool(format!("{tag}.orbit[{x}]"), format!("{x} has {}", class.label()), got == *class)
                .with_value(got.label()),
        );
    }
    let quarter = rat(1, 4);
    if let Some(rho) = fp.aux("rho") {
        let rhs = &quarter - rho * rho;
        out.push(Check::from_bool(format!("{tag}.rho"), "c = 1/4 - rho^2", fp.c == rhs).with_value(rhs));
    }
    if let Some(sigma) = fp.aux("sigma") {
        let rhs = rat(-3, 4) - sigma * sigma;
        out.push(Check::from_bool(format!("{tag}.sigma"), "c = -3/4 - sigma^2", fp.c == rhs).with_value(rhs));
    }
    let half = rat(1, 2);
    match fp.family {
        FamilyId::T12 => {
            // the image of a type 1_2 point is the negative of a fixed point
            if let Some(rho) = fp.aux("rho") {
                let targets = [-(&half + rho), -(&half - rho)];
                let ok = fp.promised.iter().all(|(x, _)| targets.contains(&f.apply(x)));
                out.push(Check::from_bool(format!("{tag}.image"), "f(x) = -(1/2 +- rho)", ok));
            }
        }
        FamilyId::T22 => {
            if let Some(sigma) = fp.aux("sigma") {
                let targets = [-(-&half + sigma), -(-&half - sigma)];
                let ok = fp.promised.iter().all(|(x, _)| targets.contains(&f.apply(x)));
                out.push(Check::from_bool(format!("{tag}.image"), "f(x) = -(-1/2 +- sigma)", ok));
            }
        }
        FamilyId::P3 if fp.promised.len() == 3 => {
            let xs: Vec<&Rational> = fp.promised.iter().map(|(x, _)| x).collect();
            let forward = (0..3).all(|i| &f.apply(xs[i]) == xs[(i + 1) % 3]);
            let backward = (0..3).all(|i| &f.apply(xs[(i + 1) % 3]) == xs[i]);
            let mut check = Check::new(
                format!("{tag}.orientation"),
                "f(x1) = x2, f(x2) = x3, f(x3) = x1",
                if forward || backward { Status::Pass } else { Status::Fail },
            );
            if !forward && backward {
                check = check.with_note("cycle runs x1 -> x3 -> x2");
            }
            out.push(check);
        }
        _ => {}
    }
    out
}

/// Checks that preper_points(c) has no cycle whose length the family forbids.
pub fn check_forbidden_cycles(fp: &FamilyPoint) -> Check {
    let g = preper_points(&QuadMap::new(fp.c.clone()));
    let forbidden = fp.family.forbidden_periods();
    let bad: Vec<String> = g
        .points_where(|k| matches!(k, OrbitClass::Periodic { period } if forbidden.contains(period)))
        .into_iter()
        .map(|x| x.to_string())
        .collect();
    Check::from_bool(
        format!("{}.exclusions[{}]", fp.family, fp.c),
        format!("no rational points of period in {forbidden:?}"),
        bad.is_empty(),
    )
    .with_value(format!("[{}]", bad.join(", ")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cs(fp: &FamilyPoint) -> Vec<Rational> {
        fp.promised.iter().map(|(x, _)| x.clone()).collect()
    }

    #[test]
    fn examples() {
        let p = family_period1(&Rational::zero());
        assert_eq!((p.c.clone(), cs(&p)), (rat(1, 4), vec![rat(1, 2)]));
        assert_eq!(family_period1(&rat(3, 2)).c, int(-2));
        assert_eq!(family_period1(&rat(1, 2)).c, int(0));
        assert_eq!(cs(&family_period2(&rat(1, 2)).unwrap()), vec![int(-1), int(0)]);
        assert_eq!(family_period2(&int(1)).unwrap().c, rat(-7, 4));
        let p3 = family_period3(&int(1)).unwrap();
        assert_eq!((p3.c.clone(), cs(&p3)), (rat(-29, 16), vec![rat(5, 4), rat(-1, 4), rat(-7, 4)]));
        let p3 = family_period3(&int(2)).unwrap();
        assert_eq!((p3.c.clone(), cs(&p3)), (rat(-301, 144), vec![rat(19, 12), rat(5, 12), rat(-23, 12)]));
        let m = family_period1and2(&int(2)).unwrap();
        assert_eq!((m.c.clone(), m.aux("rho").cloned(), m.aux("sigma").cloned()), (rat(-91, 36), Some(rat(-5, 3)), Some(rat(4, 3))));
        let m = family_period1and2(&int(3)).unwrap();
        assert_eq!((m.c.clone(), m.aux("rho").cloned(), m.aux("sigma").cloned()), (rat(-21, 16), Some(rat(-5, 4)), Some(rat(3, 4))));
        let e = family_type12(&int(0)).unwrap();
        assert_eq!((e.c.clone(), cs(&e)), (int(-2), vec![int(0)]));
        let e = family_type12(&int(2)).unwrap();
        assert_eq!((e.c.clone(), cs(&e), e.aux("rho").cloned()), (rat(-10, 9), vec![rat(-4, 3), rat(4, 3)], Some(rat(-7, 6))));
        let n = family_type22(&int(2)).unwrap();
        assert_eq!((n.c.clone(), cs(&n), n.aux("sigma").cloned()), (rat(-37, 9), vec![rat(-5, 3), rat(5, 3)], Some(rat(11, 6))));
        let n = family_type22(&int(3)).unwrap();
        assert_eq!((n.c.clone(), cs(&n), n.aux("sigma").cloned()), (rat(-37, 16), vec![rat(-5, 4), rat(5, 4)], Some(rat(5, 4))));
        assert_eq!(family_type32().c, rat(-29, 16));
    }

    #[test]
    fn exclusions() {
        assert!(matches!(family_period2(&int(0)), Err(Error::ExcludedParameter { family: "p2", .. })));
        assert!(family_period3(&int(-1)).is_err());
        assert!(family_period1and2(&int(1)).is_err());
        assert!(family_type12(&int(1)).is_err());
        assert!(family_type22(&int(0)).is_err());
    }

    #[test]
    fn validation() {
        for fp in [family_period3(&int(1)).unwrap(), family_period1and2(&int(2)).unwrap(), family_type32()] {
            let checks = validate_family(&fp);
            assert!(checks.iter().all(Check::passed), "{checks:?}");
        }
        let mut bad = family_period3(&int(1)).unwrap();
        bad.c += int(1);
        assert!(validate_family(&bad).iter().any(Check::failed));
    }
}
