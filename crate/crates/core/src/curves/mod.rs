//! Curve models attached to the dynamics of z^2 + c, bounded rational point
//! search, and exact verification of birational maps between them.

mod birational;
mod checks;
mod elliptic;
mod search;

pub use birational::{printed_pairs, verify_birational_pair, BirationalPair, PRINTED_E17_FORWARD_Y};
pub use checks::{
    classify_c_from_curve_point, good_reduction_model, good_reduction_model_check, smooth_over_f2k, x1_13_discriminant,
    x1_13_discriminant_check, IntegralModel, X1_13_MODEL, X1_13_PRINTED_DISCRIMINANT,
};
pub use elliptic::{verify_point_list, EllipticModel, EllipticPoint};
pub use search::{elliptic_points_bounded, rational_points_bounded};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exactmath::{
    rational::Rational, CurveFunction, Expr, FunctionField, PrimeField, QPoly, Ring,
};

/// Stable identifiers of every curve in the registry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurveId {
    C1_32,
    X1_18,
    X1_13,
    E11,
    E15,
    E17,
    E24,
    E40,
    ConicP1P2,
    Q24,
    Q40,
    Q15,
    Q17,
    Q11,
    Line,
}

impl CurveId {
    pub const ALL: [CurveId; 15] = [
        CurveId::C1_32,
        CurveId::X1_18,
        CurveId::X1_13,
        CurveId::E11,
        CurveId::E15,
        CurveId::E17,
        CurveId::E24,
        CurveId::E40,
        CurveId::ConicP1P2,
        CurveId::Q24,
        CurveId::Q40,
        CurveId::Q15,
        CurveId::Q17,
        CurveId::Q11,
        CurveId::Line,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CurveId::C1_32 => "c1_32",
            CurveId::X1_18 => "x1_18",
            CurveId::X1_13 => "x1_13",
            CurveId::E11 => "e11",
            CurveId::E15 => "e15",
            CurveId::E17 => "e17",
            CurveId::E24 => "e24",
            CurveId::E40 => "e40",
            CurveId::ConicP1P2 => "conic_p1p2",
            CurveId::Q24 => "q24",
            CurveId::Q40 => "q40",
            CurveId::Q15 => "q15",
            CurveId::Q17 => "q17",
            CurveId::Q11 => "q11",
            CurveId::Line => "p1",
        }
    }

    pub fn model(self) -> CurveModel {
        let hyper = |coeffs: &[i64], vars: [&'static str; 2]| CurveModel {
            id: self,
            vars: vars.to_vec(),
            kind: ModelKind::Hyperelliptic(QPoly::from_ints(coeffs)),
        };
        let weier = |a: [i64; 5]| CurveModel {
            id: self,
            vars: vec!["x", "y"],
            kind: ModelKind::Weierstrass(EllipticModel::from_ints(self.name(), a)),
        };
        match self {
            CurveId::C1_32 => hyper(&[1, 2, 5, 2, -2, 0, 1], ["x", "y"]),
            CurveId::X1_18 => hyper(&[1, 4, 10, 10, 5, 2, 1], ["x", "y"]),
            CurveId::X1_13 => hyper(&[1, 4, 6, 2, 1, 2, 1], ["x", "y"]),
            CurveId::E11 => weier([0, -1, 1, 0, 0]),
            CurveId::E15 => weier([1, 1, 1, 0, 0]),
            CurveId::E17 => weier([1, -1, 1, -1, 0]),
            CurveId::E24 => weier([0, -1, 0, 1, 0]),
            CurveId::E40 => weier([0, 0, 0, -2, 1]),
            CurveId::ConicP1P2 => hyper(&[-1, 0, 1], ["rho", "sigma"]),
            CurveId::Q24 => hyper(&[3, 0, 2, 0, -1], ["eta", "t"]),
            CurveId::Q40 => hyper(&[2, -4, 0, 4, 2], ["nu", "t"]),
            CurveId::Q15 => hyper(&[-3, 0, 14, 0, 5], ["mu", "t"]),
            CurveId::Q17 => hyper(&[5, 8, 6, -8, 5], ["mu", "t"]),
            CurveId::Q11 => hyper(&[2, -2, 2, 2], ["eta", "t"]),
            CurveId::Line => CurveModel { id: self, vars: vec!["mu"], kind: ModelKind::Line },
        }
    }
}

impl fmt::Display for CurveId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for CurveId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        CurveId::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidInput(format!("unknown curve {s:?}")))
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum ModelKind {
    /// y^2 = f(x).
    Hyperelliptic(QPoly),
    Weierstrass(EllipticModel),
    /// The projective line with one coordinate.
    Line,
}

/// A plane model with named coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveModel {
    pub id: CurveId,
    pub vars: Vec<&'static str>,
    pub kind: ModelKind,
}

impl CurveModel {
    pub fn function_field(&self) -> FunctionField {
        match &self.kind {
            ModelKind::Hyperelliptic(f) => FunctionField::hyperelliptic(f.clone()),
            // y^2 + (a1 x + a3) y = r(x) becomes Y^2 = r + (a1 x + a3)^2/4 with Y = y + (a1 x + a3)/2
            ModelKind::Weierstrass(e) => FunctionField::hyperelliptic(e.completed_square()),
            ModelKind::Line => FunctionField::rational(),
        }
    }

    /// The coordinate functions, as elements of the function field.
    pub fn generators(&self) -> Vec<CurveFunction> {
        let ff = self.function_field();
        match &self.kind {
            ModelKind::Hyperelliptic(_) => vec![ff.x(), ff.y()],
            ModelKind::Weierstrass(e) => {
                let shift = ff.poly(&e.half_linear_term());
                vec![ff.x(), ff.sub(&ff.y(), &shift)]
            }
            ModelKind::Line => vec![ff.x()],
        }
    }

    /// Defining equation as lhs - rhs, evaluated at a point with coordinates in `r`.
    pub fn residual<R: Ring>(&self, r: &R, pt: &[R::Elem]) -> Option<R::Elem> {
        match &self.kind {
            ModelKind::Hyperelliptic(f) => {
                let fx = eval_poly(r, f, &pt[0])?;
                Some(r.sub(&r.mul(&pt[1], &pt[1]), &fx))
            }
            ModelKind::Weierstrass(e) => e.residual(r, &pt[0], &pt[1]),
            ModelKind::Line => Some(r.zero()),
        }
    }

    /// The defining polynomial as text in the model's variables.
    pub fn equation(&self) -> String {
        match &self.kind {
            ModelKind::Hyperelliptic(f) => format!("{}^2 = {}", self.vars[1], f.display_in(self.vars[0])),
            ModelKind::Weierstrass(e) => e.to_string(),
            ModelKind::Line => "P^1".into(),
        }
    }

    /// Random points over F_p, found by solving for the second coordinate.
    pub fn random_points_mod_p(&self, fp: &PrimeField, count: usize, seed: u64) -> Vec<Vec<u64>> {
        use crate::exactmath::ff_sqrt;
        use rand::{Rng, SeedableRng};
        use rand_chacha::ChaCha8Rng;
        let p = fp.p();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        let mut attempts = 0;
        while out.len() < count && attempts < 100 * count {
            attempts += 1;
            let x = rng.gen_range(0..p);
            match &self.kind {
                ModelKind::Line => out.push(vec![x]),
                ModelKind::Hyperelliptic(f) => {
                    let Some(fx) = eval_poly(fp, f, &x) else { continue };
                    if let Some(y) = ff_sqrt(fp, &fx) {
                        let y = if rng.gen::<bool>() { y } else { fp.neg(&y) };
                        out.push(vec![x, y]);
                    }
                }
                ModelKind::Weierstrass(e) => {
                    let (Some(lin), Some(rhs)) =
                        (eval_poly(fp, &e.linear_term(), &x), eval_poly(fp, &e.cubic(), &x))
                    else {
                        continue;
                    };
                    let disc = fp.add(&fp.mul(&lin, &lin), &fp.mul(&fp.from_i64(4), &rhs));
                    if let Some(s) = ff_sqrt(fp, &disc) {
                        let s = if rng.gen::<bool>() { s } else { fp.neg(&s) };
                        let y = fp.div(&fp.sub(&s, &lin), &fp.from_i64(2)).expect("p odd");
                        out.push(vec![x, y]);
                    }
                }
            }
        }
        out
    }
}

/// Evaluates a rational polynomial in any ring containing its coefficients.
pub fn eval_poly<R: Ring>(r: &R, f: &QPoly, x: &R::Elem) -> Option<R::Elem> {
    let mut acc = r.zero();
    for c in f.coeffs().iter().rev() {
        acc = r.add(&r.mul(&acc, x), &r.from_rational(c)?);
    }
    Some(acc)
}

/// A rational point on y^2 = g(x), including the points at infinity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CurvePoint {
    Affine { x: Rational, y: Rational },
    /// For even degree, `sign` is the value of y/x^(deg/2) there (+1 or -1);
    /// for odd degree the single point at infinity has sign 0.
    Infinity { sign: i8 },
}

impl CurvePoint {
    pub fn affine(x: Rational, y: Rational) -> Self {
        CurvePoint::Affine { x, y }
    }

    /// The hyperelliptic involution (x, y) -> (x, -y).
    pub fn involution(&self) -> Self {
        match self {
            CurvePoint::Affine { x, y } => CurvePoint::Affine { x: x.clone(), y: -y },
            CurvePoint::Infinity { sign } => CurvePoint::Infinity { sign: -sign },
        }
    }

    pub fn lies_on(&self, g: &QPoly) -> bool {
        match self {
            CurvePoint::Affine { x, y } => y * y == g.eval_q(x),
            CurvePoint::Infinity { sign } => {
                let Some(d) = g.degree() else { return false };
                let lc = g.lc().expect("nonzero");
                if d % 2 == 1 {
                    *sign == 0
                } else {
                    *sign != 0 && crate::exactmath::rational::rational_sqrt(lc).is_some()
                }
            }
        }
    }
}

impl fmt::Display for CurvePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurvePoint::Affine { x, y } => write!(f, "({x},{y})"),
            CurvePoint::Infinity { sign: 1 } => f.write_str("inf+"),
            CurvePoint::Infinity { sign: -1 } => f.write_str("inf-"),
            CurvePoint::Infinity { .. } => f.write_str("inf"),
        }
    }
}

/// The eight known rational points of C1(3_2) with their usual names.
pub fn c1_32_named_points() -> Vec<(&'static str, CurvePoint)> {
    use crate::exactmath::int;
    vec![
        ("Q+", CurvePoint::affine(int(-1), int(1))),
        ("Q-", CurvePoint::affine(int(-1), int(-1))),
        ("R+", CurvePoint::affine(int(0), int(1))),
        ("R-", CurvePoint::affine(int(0), int(-1))),
        ("S+", CurvePoint::affine(int(1), int(3))),
        ("S-", CurvePoint::affine(int(1), int(-3))),
        ("inf+", CurvePoint::Infinity { sign: 1 }),
        ("inf-", CurvePoint::Infinity { sign: -1 }),
    ]
}

/// Parses an expression in a model's variables.
pub fn parse_on(model: &CurveModel, src: &str) -> Result<Expr> {
    Expr::parse(src, &model.vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::int;

    #[test]
    fn registry_round_trip() {
        for id in CurveId::ALL {
            assert_eq!(id.name().parse::<CurveId>().unwrap(), id);
        }
        assert!("nope".parse::<CurveId>().is_err());
    }

    #[test]
    fn named_points_lie_on_curve() {
        let ModelKind::Hyperelliptic(g) = CurveId::C1_32.model().kind else { unreachable!() };
        for (_, p) in c1_32_named_points() {
            assert!(p.lies_on(&g), "{p}");
        }
        assert!(!CurvePoint::affine(int(1), int(1)).lies_on(&g));
    }

    #[test]
    fn weierstrass_generators_satisfy_equation() {
        for id in [CurveId::E11, CurveId::E15, CurveId::E17, CurveId::E24, CurveId::E40] {
            let m = id.model();
            let ff = m.function_field();
            assert!(ff.is_zero(&m.residual(&ff, &m.generators()).unwrap()), "{id}");
        }
    }
}
