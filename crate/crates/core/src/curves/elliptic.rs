use std::collections::BTreeSet;
use std::fmt;

use num_traits::Zero;

use super::search::elliptic_points_bounded;
use crate::error::{Error, Result};
use crate::exactmath::{int, rational::Rational, QPoly, Rationals, Ring};
use crate::report::Check;

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllipticModel {
    pub label: String,
    /// [a1, a2, a3, a4, a6].
    pub a: [Rational; 5],
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EllipticPoint {
    Infinity,
    Affine(Rational, Rational),
}

impl EllipticPoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        EllipticPoint::Affine(x, y)
    }
}

impl fmt::Display for EllipticPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EllipticPoint::Infinity => f.write_str("O"),
            EllipticPoint::Affine(x, y) => write!(f, "({x},{y})"),
        }
    }
}

impl EllipticModel {
    pub fn from_ints(label: &str, a: [i64; 5]) -> Self {
        EllipticModel { label: label.into(), a: a.map(int) }
    }

    /// x^3 + a2 x^2 + a4 x + a6.
    pub fn cubic(&self) -> QPoly {
        let [_, a2, _, a4, a6] = &self.a;
        QPoly::from_rationals(vec![a6.clone(), a4.clone(), a2.clone(), int(1)])
    }

    /// a1 x + a3.
    pub fn linear_term(&self) -> QPoly {
        QPoly::from_rationals(vec![self.a[2].clone(), self.a[0].clone()])
    }

    /// (a1 x + a3)/2.
    pub fn half_linear_term(&self) -> QPoly {
        self.linear_term().scale(&Rationals, &Rational::new(1.into(), 2.into()))
    }

    /// The cubic of the model Y^2 = x^3 + ... after completing the square.
    pub fn completed_square(&self) -> QPoly {
        let h = self.half_linear_term();
        &self.cubic() + &(&h * &h)
    }

    pub fn discriminant(&self) -> Rational {
        let [a1, a2, a3, a4, a6] = &self.a;
        let b2 = a1 * a1 + int(4) * a2;
        let b4 = int(2) * a4 + a1 * a3;
        let b6 = a3 * a3 + int(4) * a6;
        let b8 = a1 * a1 * a6 + int(4) * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
        -&b2 * &b2 * &b8 - int(8) * &b4 * &b4 * &b4 - int(27) * &b6 * &b6 + int(9) * &b2 * &b4 * &b6
    }

    /// lhs - rhs of the Weierstrass equation at (x, y).
    pub fn residual<R: Ring>(&self, r: &R, x: &R::Elem, y: &R::Elem) -> Option<R::Elem> {
        let c = |q: &Rational| r.from_rational(q);
        let [a1, a2, a3, a4, a6] = &self.a;
        let lhs = r.add(&r.mul(y, y), &r.mul(&r.add(&r.mul(&c(a1)?, x), &c(a3)?), y));
        let x2 = r.mul(x, x);
        let rhs = r.add(
            &r.add(&r.mul(&x2, x), &r.mul(&c(a2)?, &x2)),
            &r.add(&r.mul(&c(a4)?, x), &c(a6)?),
        );
        Some(r.sub(&lhs, &rhs))
    }

    pub fn contains(&self, p: &EllipticPoint) -> bool {
        match p {
            EllipticPoint::Infinity => true,
            EllipticPoint::Affine(x, y) => self.residual(&Rationals, x, y).is_some_and(|v| v.is_zero()),
        }
    }

    fn check_on(&self, p: &EllipticPoint) -> Result<()> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Error::InvalidPoint(format!("{p} on {}", self.label)))
        }
    }

    pub fn negate(&self, p: &EllipticPoint) -> Result<EllipticPoint> {
        self.check_on(p)?;
        let [a1, _, a3, _, _] = &self.a;
        Ok(match p {
            EllipticPoint::Infinity => EllipticPoint::Infinity,
            EllipticPoint::Affine(x, y) => EllipticPoint::Affine(x.clone(), -y - a1 * x - a3),
        })
    }

    /// Chord-and-tangent addition.
    pub fn add(&self, p: &EllipticPoint, q: &EllipticPoint) -> Result<EllipticPoint> {
        self.check_on(p)?;
        self.check_on(q)?;
        let [a1, a2, a3, a4, a6] = &self.a;
        let (x1, y1, x2, y2) = match (p, q) {
            (EllipticPoint::Infinity, _) => return Ok(q.clone()),
            (_, EllipticPoint::Infinity) => return Ok(p.clone()),
            (EllipticPoint::Affine(x1, y1), EllipticPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        if x1 == x2 && (y1 + y2 + a1 * x2 + a3).is_zero() {
            return Ok(EllipticPoint::Infinity);
        }
        let (lambda, nu) = if x1 == x2 {
            let den = int(2) * y1 + a1 * x1 + a3;
            (
                (int(3) * x1 * x1 + int(2) * a2 * x1 + a4 - a1 * y1) / &den,
                (-(x1 * x1 * x1) + a4 * x1 + int(2) * a6 - a3 * y1) / &den,
            )
        } else {
            let dx = x2 - x1;
            ((y2 - y1) / &dx, (y1 * x2 - y2 * x1) / &dx)
        };
        let x3 = &lambda * &lambda + a1 * &lambda - a2 - x1 - x2;
        let y3 = -(&lambda + a1) * &x3 - nu - a3;
        Ok(EllipticPoint::Affine(x3, y3))
    }

    pub fn multiply(&self, n: u64, p: &EllipticPoint) -> Result<EllipticPoint> {
        let mut acc = EllipticPoint::Infinity;
        for _ in 0..n {
            acc = self.add(&acc, p)?;
        }
        Ok(acc)
    }

    /// Subgroup generated by the given points (must be finite).
    pub fn generated_subgroup(&self, gens: &[EllipticPoint]) -> Result<BTreeSet<EllipticPoint>> {
        let mut group: BTreeSet<EllipticPoint> = BTreeSet::from([EllipticPoint::Infinity]);
        let mut frontier: Vec<EllipticPoint> = gens.to_vec();
        while let Some(p) = frontier.pop() {
            if group.contains(&p) {
                continue;
            }
            let members: Vec<EllipticPoint> = group.iter().cloned().collect();
            group.insert(p.clone());
            for q in members.iter().chain(std::iter::once(&p)) {
                let s = self.add(&p, q)?;
                if !group.contains(&s) {
                    frontier.push(s);
                }
            }
            if group.len() > 64 {
                return Err(Error::Budget(64));
            }
        }
        Ok(group)
    }
}

impl fmt::Display for EllipticModel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a1, a2, a3, a4, a6] = &self.a;
        let mut lhs = String::from("y^2");
        let term = |c: &Rational, m: &str| -> String {
            if c.is_zero() {
                String::new()
            } else if *c == int(1) {
                format!(" + {m}")
            } else if *c == int(-1) {
                format!(" - {m}")
            } else if *c < Rational::zero() {
                format!(" - {}{m}", -c)
            } else {
                format!(" + {c}{m}")
            }
        };
        lhs += &term(a1, "xy");
        lhs += &term(a3, "y");
        let mut rhs = String::from("x^3");
        rhs += &term(a2, "x^2");
        rhs += &term(a4, "x");
        if !a6.is_zero() {
            rhs += &if *a6 < Rational::zero() { format!(" - {}", -a6) } else { format!(" + {a6}") };
        }
        write!(f, "{lhs} = {rhs}")
    }
}

/// Checks a claimed list of rational points: (a) each lies on the curve, (b)
/// the on-curve part is closed under addition and negation, (c) a search up
/// to x-height `height` finds nothing outside the list.
pub fn verify_point_list(e: &EllipticModel, claimed: &[EllipticPoint], height: u64) -> Result<Vec<Check>> {
    let label = &e.label;
    let listed = claimed.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
    let off: Vec<&EllipticPoint> = claimed.iter().filter(|p| !e.contains(p)).collect();
    let on: BTreeSet<EllipticPoint> = claimed.iter().filter(|p| e.contains(p)).cloned().collect();
    let found = elliptic_points_bounded(e, height)?;
    let found_text = found.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");

    let mut a = Check::from_bool(format!("{label}.points.on_curve"), format!("{{{listed}}} lie on {e}"), off.is_empty());
    if !off.is_empty() {
        let detail: Vec<String> = off
            .iter()
            .map(|p| match p {
                EllipticPoint::Affine(x, y) => {
                    let lhs = y * y + &e.a[0] * x * y + &e.a[2] * y;
                    let rhs = e.cubic().eval_q(x);
                    format!("{p}: lhs {lhs} but rhs {rhs}")
                }
                EllipticPoint::Infinity => unreachable!(),
            })
            .collect();
        a = a.with_value(off.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")).with_note(format!(
            "discrepancy: {}; bounded search and closure give {{{found_text}}}",
            detail.join("; ")
        ));
    }

    let mut missing = BTreeSet::new();
    for p in &on {
        missing.insert(e.negate(p)?);
        for q in &on {
            missing.insert(e.add(p, q)?);
        }
    }
    missing.retain(|p| !on.contains(p));
    let b = Check::from_bool(
        format!("{label}.points.closure"),
        "on-curve points are closed under the group law and negation",
        missing.is_empty(),
    )
    .with_value(format!("[{}]", missing.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")));

    let extra: Vec<&EllipticPoint> = found.iter().filter(|p| !on.contains(p)).collect();
    let c = Check::from_bool(
        format!("{label}.points.complete"),
        format!("no further points with x-height <= {height}"),
        extra.is_empty(),
    )
    .with_value(format!("{{{found_text}}}"));
    Ok(vec![a, b, c])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curves::CurveId;
    use crate::curves::ModelKind;

    fn model(id: CurveId) -> EllipticModel {
        match id.model().kind {
            ModelKind::Weierstrass(e) => e,
            _ => unreachable!(),
        }
    }

    fn pt(x: i64, y: i64) -> EllipticPoint {
        EllipticPoint::affine(int(x), int(y))
    }

    #[test]
    fn group_law() {
        let e11 = model(CurveId::E11);
        let five = [EllipticPoint::Infinity, pt(0, 0), pt(0, -1), pt(1, 0), pt(1, -1)];
        assert_eq!(e11.add(&pt(0, 0), &EllipticPoint::Infinity).unwrap(), pt(0, 0));
        assert!(five.contains(&e11.add(&pt(0, 0), &pt(1, 0)).unwrap()));
        assert_eq!(e11.multiply(5, &pt(0, 0)).unwrap(), EllipticPoint::Infinity);
        let e40 = model(CurveId::E40);
        assert_eq!(e40.add(&pt(1, 0), &pt(1, 0)).unwrap(), EllipticPoint::Infinity);
        assert!(matches!(e40.add(&pt(2, 2), &pt(1, 0)), Err(Error::InvalidPoint(_))));
        assert_eq!(e11.discriminant(), int(-11));
        assert_eq!(model(CurveId::E24).to_string(), "y^2 = x^3 - x^2 + x");
        assert_eq!(model(CurveId::E15).to_string(), "y^2 + xy + y = x^3 + x^2");
    }

    #[test]
    fn printed_lists() {
        let e40 = model(CurveId::E40);
        let checks = verify_point_list(&e40, &[EllipticPoint::Infinity, pt(0, 1), pt(1, 0), pt(0, -1)], 200).unwrap();
        assert!(checks.iter().all(Check::passed), "{checks:?}");
        let e24 = model(CurveId::E24);
        let checks = verify_point_list(&e24, &[EllipticPoint::Infinity, pt(0, 0), pt(1, 1), pt(-1, 1)], 200).unwrap();
        assert!(checks[0].failed());
        assert_eq!(checks[0].value.as_deref(), Some("(-1,1)"));
    }
}
