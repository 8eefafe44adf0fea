use num_traits::Zero;

use super::CurvePoint;
use crate::error::{Error, Result};
use crate::exactmath::{
    int, rational::Rational, BinaryField, Expr, FiniteField, Poly, PolyRing, QPoly, Rationals, Ring,
};
use crate::families::{raw_formula, FamilyId};
use crate::report::Check;

/// Quartic model of X1(13) in x1, x2, x3.
pub const X1_13_MODEL: &str = "x1^2 x2^2 - x1 x2^3 - x1 x2 x3^2 + x1 x3^3 + x2^3 x3 - x2^2 x3^2";
/// The sextic in x2 claimed as the discriminant in x1 after setting x3 = 1.
pub const X1_13_PRINTED_DISCRIMINANT: [i64; 7] = [1, 4, 6, 2, 1, 2, 1];

type Bivariate = Poly<QPoly>;

fn bivariate_ring() -> PolyRing<PolyRing<Rationals>> {
    PolyRing { base: PolyRing { base: Rationals } }
}

/// Sets x3 = 1 in a ternary form and returns the discriminant of the
/// resulting quadratic in x1, as a polynomial in x2.
pub fn x1_13_discriminant(model: &str) -> Result<QPoly> {
    let e = Expr::parse(model, &["x1", "x2", "x3"])?;
    let r = bivariate_ring();
    let inner = &r.base;
    let x1: Bivariate = Poly::x(inner);
    let x2: Bivariate = Poly::constant(inner, QPoly::var());
    let p = e.eval(&r, &[x1, x2, r.one()]).ok_or(Error::DivisionByZero)?;
    if p.degree() != Some(2) {
        return Err(Error::InvalidInput(format!("not quadratic in x1: {model}")));
    }
    let (c, b, a) = (p.coeff(inner, 0), p.coeff(inner, 1), p.coeff(inner, 2));
    Ok(&(&b * &b) - &(&QPoly::from_ints(&[4]) * &(&a * &c)))
}

pub fn x1_13_discriminant_check(model: &str) -> Vec<Check> {
    let printed = QPoly::from_ints(&X1_13_PRINTED_DISCRIMINANT);
    let d = match x1_13_discriminant(model) {
        Ok(d) => d,
        Err(e) => {
            return vec![Check::from_bool("x1_13.discriminant", "model is quadratic in x1", false).with_note(e.to_string())]
        }
    };
    let mut eq = Check::from_bool(
        "x1_13.discriminant",
        format!("discriminant in x1 at x3 = 1 equals {}", printed.display_in("x2")),
        d == printed,
    )
    .with_value(d.display_in("x2"));
    if d != printed {
        let shifted = d.compose(&Rationals, &QPoly::from_ints(&[1, 1]));
        if shifted == printed {
            eq = eq.with_note("the computed discriminant D satisfies D(x2 + 1) = printed sextic");
        }
    }
    let deg = Check::equal("x1_13.discriminant_degree", "discriminant has degree 6", &d.degree().unwrap_or(0), &6);
    vec![eq, deg]
}

/// z^2 + h(x) z + q(x) = 0 with integral h, q.
#[derive(Debug, Clone, PartialEq)]
pub struct IntegralModel {
    pub h: QPoly,
    pub q: QPoly,
    /// Half the even degree of the original model; the chart at infinity is
    /// X = 1/x, Z = z/x^e.
    pub e: usize,
}

impl IntegralModel {
    /// The same model in the chart at infinity.
    pub fn at_infinity(&self) -> IntegralModel {
        let rev = |p: &QPoly, n: usize| {
            let mut c: Vec<Rational> = (0..=n).map(|i| p.coeff(&Rationals, i)).collect();
            c.reverse();
            QPoly::from_rationals(c)
        };
        IntegralModel { h: rev(&self.h, self.e), q: rev(&self.q, 2 * self.e), e: self.e }
    }

    /// The defining polynomial in Q[x][z].
    pub fn polynomial(&self) -> Poly<QPoly> {
        let r = &bivariate_ring().base;
        Poly::new(r, vec![self.q.clone(), self.h.clone(), QPoly::from_ints(&[1])])
    }
}

/// Substitutes y = 2z + h(x) into y^2 = g(x) and divides by 4. Returns None
/// when the result is not integral.
pub fn good_reduction_model(g: &QPoly, h: &QPoly) -> Option<IntegralModel> {
    let q = (&(h * h) - g).scale(&Rationals, &Rational::new(1.into(), 4.into()));
    let integral = |p: &QPoly| p.coeffs().iter().all(|c| c.is_integer());
    if !integral(g) || !integral(h) || !integral(&q) {
        return None;
    }
    let e = g.degree()?.div_ceil(2);
    if h.degree().unwrap_or(0) > e {
        return None;
    }
    Some(IntegralModel { h: h.clone(), q, e })
}

/// Looks for a singular point of the model mod 2 over F_{2^k}; None when
/// none exists.
fn singular_point(m: &IntegralModel, k: u32) -> Option<(u64, u64)> {
    let f = BinaryField::new(k);
    let ev = |p: &QPoly, x: &u64| super::eval_poly(&f, p, x).expect("integral coefficients");
    let (dh, dq) = (m.h.derivative(&Rationals), m.q.derivative(&Rationals));
    let elems = f.elements();
    for x in &elems {
        let hx = ev(&m.h, x);
        // the z-partial is 2z + h = h in characteristic 2
        if hx != 0 {
            continue;
        }
        let (qx, dhx, dqx) = (ev(&m.q, x), ev(&dh, x), ev(&dq, x));
        for z in &elems {
            let fz = f.add(&f.mul(z, z), &qx);
            let fx = f.add(&f.mul(&dhx, z), &dqx);
            if fz == 0 && fx == 0 {
                return Some((*x, *z));
            }
        }
    }
    None
}

/// Smoothness of the reduction mod 2 over F_{2^k} for k <= kmax, in both
/// charts. On failure returns (k, chart, x, z) of a singular point.
pub fn smooth_over_f2k(m: &IntegralModel, kmax: u32) -> std::result::Result<(), (u32, &'static str, u64, u64)> {
    let inf = m.at_infinity();
    for k in 1..=kmax {
        for (chart, model) in [("affine", m), ("infinity", &inf)] {
            if let Some((x, z)) = singular_point(model, k) {
                return Err((k, chart, x, z));
            }
        }
    }
    Ok(())
}

/// The model z^2 + (x^3 + x + 1) z + x^4 - x^2 = 0 for C1(3_2), its chart at
/// infinity, and smoothness of both over F_{2^k}, k <= 6.
pub fn good_reduction_model_check() -> Vec<Check> {
    let g = QPoly::from_ints(&[1, 2, 5, 2, -2, 0, 1]);
    let h = QPoly::from_ints(&[1, 1, 0, 1]);
    let Some(m) = good_reduction_model(&g, &h) else {
        return vec![Check::from_bool("c1_32.good_model", "substitution gives an integral model", false)];
    };
    let printed = |src: &str, vars: [&str; 2]| -> Option<Poly<QPoly>> {
        let r = bivariate_ring();
        let e = Expr::parse(src, &vars).ok()?;
        e.eval(&r, &[Poly::constant(&r.base, QPoly::var()), Poly::x(&r.base)])
    };
    let affine = printed("z^2 + z x^3 + z x + z + x^4 - x^2", ["x", "z"]);
    let chart = printed("Z^2 + Z(1 + X^2 + X^3) + X^2 - X^4", ["X", "Z"]);
    let smooth = smooth_over_f2k(&m, 6);
    vec![
        Check::from_bool(
            "c1_32.good_model",
            "y = 2z + x^3 + x + 1 turns y^2 = g(x) into z^2 + z x^3 + z x + z + x^4 = x^2",
            affine.as_ref() == Some(&m.polynomial()),
        )
        .with_value(format!("z^2 + ({}) z + {}", m.h.display_in("x"), m.q.display_in("x"))),
        Check::from_bool(
            "c1_32.good_model_infinity",
            "chart at infinity is Z^2 + Z(1 + X^2 + X^3) + X^2 - X^4",
            chart.as_ref() == Some(&m.at_infinity().polynomial()),
        ),
        Check::from_bool("c1_32.good_reduction_2", "model is smooth mod 2 over F_{2^k}, k <= 6, in both charts", smooth.is_ok())
            .with_value(match smooth {
                Ok(()) => "no singular points".to_string(),
                Err((k, chart, x, z)) => format!("singular at ({x},{z}) in F_2^{k}, {chart} chart"),
            }),
    ]
}

/// For a point (tau, y) of C1(3_2), the parameter c of the family with a
/// 3-cycle and the point r = y/(2 tau (tau + 1)) of type 3_2. None for the
/// degenerate tau in {-1, 0, infinity}.
pub fn classify_c_from_curve_point(p: &CurvePoint) -> Option<(Rational, Rational)> {
    let CurvePoint::Affine { x: tau, y } = p else { return None };
    if tau.is_zero() || *tau == int(-1) {
        return None;
    }
    let fp = raw_formula(FamilyId::P3, tau)?;
    let r = y / (int(2) * tau * (tau + int(1)));
    Some((fp.c, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynamics::{orbit_classify, OrbitClass, QuadMap};
    use crate::exactmath::rat;

    #[test]
    fn good_model() {
        let checks = good_reduction_model_check();
        assert!(checks.iter().all(Check::passed), "{checks:#?}");
        // no integral model for y^2 = x^6 + 2
        assert!(good_reduction_model(&QPoly::from_ints(&[2, 0, 0, 0, 0, 0, 1]), &QPoly::from_ints(&[0, 0, 0, 1])).is_none());
        // y^2 = x^6 + 4 gives z^2 + x^3 z - 1, singular at (0, 1)
        let m = good_reduction_model(&QPoly::from_ints(&[4, 0, 0, 0, 0, 0, 1]), &QPoly::from_ints(&[0, 0, 0, 1])).unwrap();
        assert_eq!(smooth_over_f2k(&m, 6), Err((1, "affine", 0, 1)));
    }

    #[test]
    fn classify() {
        let (c, r) = classify_c_from_curve_point(&CurvePoint::affine(int(1), int(3))).unwrap();
        assert_eq!((c.clone(), r.clone()), (rat(-29, 16), rat(3, 4)));
        assert_eq!(orbit_classify(&QuadMap::new(c), &r), OrbitClass::Preperiodic { period: 3, tail: 2 });
        assert_eq!(classify_c_from_curve_point(&CurvePoint::affine(int(0), int(1))), None);
        assert_eq!(classify_c_from_curve_point(&CurvePoint::Infinity { sign: 1 }), None);
    }

    #[test]
    fn x1_13() {
        let d = x1_13_discriminant(X1_13_MODEL).unwrap();
        assert_eq!(d, QPoly::from_ints(&[1, -2, 1, -2, 6, -4, 1]));
        let flipped = X1_13_MODEL.replacen("+ x1 x3^3", "- x1 x3^3", 1);
        assert_ne!(x1_13_discriminant(&flipped).unwrap(), d);
    }
}
